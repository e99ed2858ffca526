#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ncmi/dual.hpp"
#include "ncmi/words.hpp"

namespace ncmi {

/// Thrown when a moment query exceeds the declared degree horizon of an
/// oracle, or asks for data the oracle does not hold.
class horizon_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Moment oracle for the first family: maps words of A-letters to the pair
/// (plain moment, infinitesimal moment). The empty word evaluates to (1, 0);
/// queries beyond the horizon throw rather than silently returning zero.
class AMomentData {
public:
    using Evaluator = std::function<DualScalar(const NCWord&)>;

    AMomentData(int horizon, Evaluator eval);

    int horizon() const { return horizon_; }
    DualScalar operator()(const NCWord& w) const;

    /// Single-generator data: moments[i] holds the (i+1)-st moment pair.
    static AMomentData from_moments(std::vector<DualScalar> moments);

    /// Standard semicircle: 2m-th moment C_m, odd moments zero, no
    /// infinitesimal part.
    static AMomentData semicircle(int horizon);

private:
    int horizon_;
    Evaluator eval_;
};

/// Joint moment oracle for the second family, same conventions as
/// AMomentData but over B-words.
class BFamilyMoments {
public:
    using Evaluator = std::function<DualScalar(const NCWord&)>;

    BFamilyMoments(int horizon, Evaluator eval);

    int horizon() const { return horizon_; }
    DualScalar operator()(const NCWord& w) const;

    /// Single-generator data: moments[i] holds the (i+1)-st moment pair.
    static BFamilyMoments from_moments(std::vector<DualScalar> moments);

    /// Single generator with only the first two moments declared.
    static BFamilyMoments mean_and_second(DualScalar b_mean, DualScalar b_second);

    /// Standard semicircle over one generator.
    static BFamilyMoments semicircle(int horizon);

    /// Joint data for two pairs of generators b1, b2, c1, c2 (letter ids
    /// 0..3): first moments of all four, plus the symmetric second moments
    /// of the b-pair. Everything else is outside the table and throws.
    static BFamilyMoments pair_table(cplx b11, cplx b22, cplx b12,
                                     cplx b1_mean, cplx b2_mean,
                                     cplx c1_mean, cplx c2_mean);

private:
    int horizon_;
    Evaluator eval_;
};

/// Semicircle moment sequence as raw dual scalars; index i is the (i+1)-st
/// moment.
std::vector<DualScalar> semicircle_moments(int horizon);

}  // namespace ncmi
