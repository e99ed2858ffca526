#include "ncmi/engine.hpp"

#include <stdexcept>
#include <string>

namespace ncmi {

FactorizationSplit split_word(const NCWord& w) {
    FactorizationSplit s;
    NCWord run;
    for (const NCLetter& l : w) {
        if (l.family == Family::B) {
            run.push_back(l);
        } else {
            if (!run.empty()) {
                s.b_blocks.push_back(run);
                run = NCWord();
            }
            s.a_word.push_back(l);
        }
    }
    if (!run.empty()) s.b_blocks.push_back(run);
    return s;
}

DualScalar eval_word(const NCWord& w, const AMomentData& a, const BFamilyMoments& b) {
    const FactorizationSplit s = split_word(w);
    DualScalar r = a(s.a_word);
    for (const NCWord& block : s.b_blocks) r *= b(block);
    return r;
}

DualScalar eval_poly_moment(const NCPolynomial& p, int k, const AMomentData& a,
                            const BFamilyMoments& b, std::size_t max_terms) {
    if (k < 1) throw std::invalid_argument("eval_poly_moment: k must be positive");
    const NCPolynomial q = poly_pow(p, k, max_terms);
    DualScalar sum;
    for (const auto& [w, c] : q) sum += c * eval_word(w, a, b);
    return sum;
}

namespace {

// Interior contraction of a core word: the concatenated A-letters plus the
// product of the plain moments of its interior B-runs.
struct ContractedCore {
    NCWord a_word;
    cplx weight{1.0, 0.0};
};

ContractedCore contract_core(const NCWord& y, const BFamilyMoments& b) {
    if (y.empty() || y[0].family != Family::A || y[y.size() - 1].family != Family::A)
        throw std::invalid_argument("structured_moment: core " + y.str() +
                                    " must start and end with an A-letter");
    ContractedCore c;
    const FactorizationSplit s = split_word(y);
    c.a_word = s.a_word;
    for (const NCWord& run : s.b_blocks) c.weight *= b(run).value;
    return c;
}

// Runs fn over every tuple in {0..n-1}^m.
template <typename Fn>
void for_each_tuple(std::size_t n, int m, Fn&& fn) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        fn(idx);
        int pos = m - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

}  // namespace

cplx structured_moment(std::span<const StructuredTerm> terms, int m,
                       const AMomentData& a, const BFamilyMoments& b) {
    if (m < 1) throw std::invalid_argument("structured_moment: m must be positive");
    if (terms.empty()) return 0.0;

    std::vector<ContractedCore> cores;
    cores.reserve(terms.size());
    for (const StructuredTerm& t : terms) cores.push_back(contract_core(t.core, b));

    cplx total = 0.0;
    for_each_tuple(terms.size(), m, [&](const std::vector<std::size_t>& j) {
        cplx weight = 1.0;
        NCWord a_word;
        for (std::size_t t : j) {
            weight *= cores[t].weight;
            a_word = a_word * cores[t].a_word;
        }
        cplx chain = b(terms[j.front()].left).value;
        for (std::size_t t = 0; t + 1 < j.size(); ++t)
            chain *= b(terms[j[t]].right * terms[j[t + 1]].left).value;
        chain *= b(terms[j.back()].right).value;
        total += weight * a(a_word).value * chain;
    });
    return total;
}

cplx inf_structured_moment(std::span<const StructuredTerm> terms, int m,
                           const AMomentData& a, const BFamilyMoments& b) {
    if (m < 1) throw std::invalid_argument("inf_structured_moment: m must be positive");
    if (terms.empty()) return 0.0;
    for (const StructuredTerm& t : terms)
        if (t.core.size() != 1 || t.core[0].family != Family::A)
            throw std::invalid_argument("inf_structured_moment: core " + t.core.str() +
                                        " must be a single A-letter");

    cplx total = 0.0;
    for_each_tuple(terms.size(), m, [&](const std::vector<std::size_t>& j) {
        // Factor list: the joint A-moment, then the boundary B-moment chain.
        std::vector<DualScalar> factors;
        factors.reserve(j.size() + 2);
        NCWord a_word;
        for (std::size_t t : j) a_word.push_back(terms[t].core[0]);
        factors.push_back(a(a_word));
        factors.push_back(b(terms[j.front()].left));
        for (std::size_t t = 0; t + 1 < j.size(); ++t)
            factors.push_back(b(terms[j[t]].right * terms[j[t + 1]].left));
        factors.push_back(b(terms[j.back()].right));

        // One prime per placement: each factor in turn contributes its
        // infinitesimal part, all others their plain part.
        for (std::size_t prime = 0; prime < factors.size(); ++prime) {
            cplx prod = factors[prime].eps;
            for (std::size_t i = 0; i < factors.size(); ++i)
                if (i != prime) prod *= factors[i].value;
            total += prod;
        }
    });
    return total;
}

}  // namespace ncmi
