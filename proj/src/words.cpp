#include "ncmi/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncmi {

NCWord NCWord::power(NCLetter l, int k) {
    if (k < 0) throw std::invalid_argument("NCWord::power: negative exponent");
    NCWord w;
    w.letters_.assign(static_cast<std::size_t>(k), l);
    return w;
}

NCWord operator*(const NCWord& x, const NCWord& y) {
    NCWord r = x;
    r.letters_.insert(r.letters_.end(), y.letters_.begin(), y.letters_.end());
    return r;
}

std::size_t NCWord::degree(Family f) const {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(),
                      [f](const NCLetter& l) { return l.family == f; }));
}

std::string NCWord::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const NCLetter& l : letters_) {
        if (!s.empty()) s += '.';
        s += (l.family == Family::A) ? 'a' : 'b';
        if (l.id != 0) s += std::to_string(l.id);
    }
    return s;
}

NCPolynomial NCPolynomial::monomial(NCWord w, cplx coeff) {
    NCPolynomial p;
    p.insert(w, coeff);
    return p;
}

cplx NCPolynomial::coeff(const NCWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

std::size_t NCPolynomial::degree(Family f) const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree(f));
    return d;
}

void NCPolynomial::insert(const NCWord& w, cplx c) {
    if (c == cplx(0.0)) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == cplx(0.0)) terms_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) insert(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) insert(w, -c);
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(cplx c) {
    if (c == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

NCPolynomial operator*(const NCPolynomial& x, const NCPolynomial& y) {
    return poly_mul(x, y, static_cast<std::size_t>(-1));
}

NCPolynomial poly_mul(const NCPolynomial& x, const NCPolynomial& y,
                      std::size_t max_terms) {
    NCPolynomial r;
    for (const auto& [wx, cx] : x) {
        for (const auto& [wy, cy] : y) {
            r.insert(wx * wy, cx * cy);
            if (r.term_count() > max_terms)
                throw term_limit_error("polynomial expansion exceeds term budget");
        }
    }
    return r;
}

NCPolynomial poly_pow(const NCPolynomial& p, int m, std::size_t max_terms) {
    if (m < 0) throw std::invalid_argument("poly_pow: negative exponent");
    NCPolynomial r = NCPolynomial::unit();
    for (int i = 0; i < m; ++i) r = poly_mul(r, p, max_terms);
    return r;
}

}  // namespace ncmi
