#pragma once

#include <span>
#include <vector>

#include "ncmi/moments.hpp"
#include "ncmi/words.hpp"

namespace ncmi {

/// A word cut along its maximal B-runs: the runs in order, and the A-letters
/// concatenated in their original order. Interleaving reconstructs the word.
struct FactorizationSplit {
    NCWord a_word;
    std::vector<NCWord> b_blocks;
};

FactorizationSplit split_word(const NCWord& w);

/// Moment of a single word: the A-part moment times the product of the
/// B-block moments, multiplied out in dual arithmetic so the eps component
/// carries the product-rule expansion of the infinitesimal functional.
DualScalar eval_word(const NCWord& w, const AMomentData& a, const BFamilyMoments& b);

/// Moment pair of p^k by full expansion and linearity over eval_word.
/// Expansion is capped at max_terms; exceeding the cap is a hard error.
DualScalar eval_poly_moment(const NCPolynomial& p, int k, const AMomentData& a,
                            const BFamilyMoments& b,
                            std::size_t max_terms = 10'000'000);

/// One summand b * y * b' of a polynomial in sandwiched form. The core y
/// must start and end with an A-letter; its interior B-runs get contracted
/// to scalars during evaluation.
struct StructuredTerm {
    NCWord left;   // b, a B-word (possibly empty = the unit)
    NCWord core;   // y
    NCWord right;  // b'
};

/// Moment of (sum of sandwiched terms)^m evaluated as the explicit sum over
/// index tuples: contracted-core joint moment times the chain of boundary
/// B-moments. Plain moments only.
cplx structured_moment(std::span<const StructuredTerm> terms, int m,
                       const AMomentData& a, const BFamilyMoments& b);

/// Infinitesimal moment of (sum of b_j a_j b_j')^m via the one-prime-per-
/// factor placement sum; requires every core to be a single A-letter.
cplx inf_structured_moment(std::span<const StructuredTerm> terms, int m,
                           const AMomentData& a, const BFamilyMoments& b);

}  // namespace ncmi
