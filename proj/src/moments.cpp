#include "ncmi/moments.hpp"

#include <string>
#include <utility>

#include "ncmi/catalan.hpp"

namespace ncmi {

namespace {

void require_family(const NCWord& w, Family f, const char* who) {
    for (const NCLetter& l : w)
        if (l.family != f)
            throw std::invalid_argument(std::string(who) + ": word " + w.str() +
                                        " contains a letter of the wrong family");
}

void require_horizon(const NCWord& w, int horizon, const char* who) {
    if (w.size() > static_cast<std::size_t>(horizon))
        throw horizon_error(std::string(who) + ": word " + w.str() + " of degree " +
                            std::to_string(w.size()) + " exceeds horizon " +
                            std::to_string(horizon));
}

void require_single_id(const NCWord& w, const char* who) {
    for (const NCLetter& l : w)
        if (l.id != 0)
            throw horizon_error(std::string(who) + ": no data for generator id " +
                                std::to_string(l.id) + " in word " + w.str());
}

}  // namespace

AMomentData::AMomentData(int horizon, Evaluator eval)
    : horizon_(horizon), eval_(std::move(eval)) {
    if (horizon_ < 0) throw std::invalid_argument("AMomentData: negative horizon");
}

DualScalar AMomentData::operator()(const NCWord& w) const {
    require_family(w, Family::A, "AMomentData");
    if (w.empty()) return DualScalar::one();
    require_horizon(w, horizon_, "AMomentData");
    return eval_(w);
}

AMomentData AMomentData::from_moments(std::vector<DualScalar> moments) {
    const int horizon = static_cast<int>(moments.size());
    return AMomentData(horizon, [ms = std::move(moments)](const NCWord& w) {
        require_single_id(w, "AMomentData");
        return ms[w.size() - 1];
    });
}

AMomentData AMomentData::semicircle(int horizon) {
    return from_moments(semicircle_moments(horizon));
}

BFamilyMoments::BFamilyMoments(int horizon, Evaluator eval)
    : horizon_(horizon), eval_(std::move(eval)) {
    if (horizon_ < 0) throw std::invalid_argument("BFamilyMoments: negative horizon");
}

DualScalar BFamilyMoments::operator()(const NCWord& w) const {
    require_family(w, Family::B, "BFamilyMoments");
    if (w.empty()) return DualScalar::one();
    require_horizon(w, horizon_, "BFamilyMoments");
    return eval_(w);
}

BFamilyMoments BFamilyMoments::from_moments(std::vector<DualScalar> moments) {
    const int horizon = static_cast<int>(moments.size());
    return BFamilyMoments(horizon, [ms = std::move(moments)](const NCWord& w) {
        require_single_id(w, "BFamilyMoments");
        return ms[w.size() - 1];
    });
}

BFamilyMoments BFamilyMoments::mean_and_second(DualScalar b_mean, DualScalar b_second) {
    return from_moments({b_mean, b_second});
}

BFamilyMoments BFamilyMoments::semicircle(int horizon) {
    return from_moments(semicircle_moments(horizon));
}

BFamilyMoments BFamilyMoments::pair_table(cplx b11, cplx b22, cplx b12,
                                          cplx b1_mean, cplx b2_mean,
                                          cplx c1_mean, cplx c2_mean) {
    return BFamilyMoments(2, [=](const NCWord& w) -> DualScalar {
        if (w.size() == 1) {
            switch (w[0].id) {
                case 0: return b1_mean;
                case 1: return b2_mean;
                case 2: return c1_mean;
                case 3: return c2_mean;
            }
        } else if (w.size() == 2 && w[0].id <= 1 && w[1].id <= 1) {
            if (w[0].id == 0 && w[1].id == 0) return b11;
            if (w[0].id == 1 && w[1].id == 1) return b22;
            return b12;  // mixed pair, symmetric by assumption
        }
        throw horizon_error("BFamilyMoments: no table entry for word " + w.str());
    });
}

std::vector<DualScalar> semicircle_moments(int horizon) {
    if (horizon < 0) throw std::invalid_argument("semicircle_moments: negative horizon");
    std::vector<DualScalar> ms;
    ms.reserve(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k)
        ms.emplace_back(k % 2 == 0 ? cplx(static_cast<double>(catalan(k / 2))) : cplx(0.0));
    return ms;
}

}  // namespace ncmi
