#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ncmi/dual.hpp"

namespace ncmi {

/// Which of the two generator families a letter belongs to.
enum class Family : unsigned char { A, B };

struct NCLetter {
    Family family;
    int id;

    static constexpr NCLetter a(int id = 0) { return {Family::A, id}; }
    static constexpr NCLetter b(int id = 0) { return {Family::B, id}; }

    friend constexpr auto operator<=>(const NCLetter&, const NCLetter&) = default;
};

/// Finite word over the tagged alphabet; the empty word is the unit.
class NCWord {
public:
    NCWord() = default;
    NCWord(std::initializer_list<NCLetter> ls) : letters_(ls) {}
    explicit NCWord(std::vector<NCLetter> ls) : letters_(std::move(ls)) {}

    static NCWord unit() { return {}; }
    /// k repetitions of one letter.
    static NCWord power(NCLetter l, int k);

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const NCLetter& operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(NCLetter l) { letters_.push_back(l); }

    /// Concatenation.
    friend NCWord operator*(const NCWord& x, const NCWord& y);

    /// Number of letters of the given family.
    std::size_t degree(Family f) const;

    std::string str() const;

    friend auto operator<=>(const NCWord&, const NCWord&) = default;

private:
    std::vector<NCLetter> letters_;
};

/// Finite complex-weighted sum of words; zero coefficients are never stored.
class NCPolynomial {
public:
    NCPolynomial() = default;

    static NCPolynomial unit() { return monomial(NCWord::unit()); }
    static NCPolynomial monomial(NCWord w, cplx coeff = 1.0);

    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    cplx coeff(const NCWord& w) const;

    /// Largest letter count of the given family over all terms.
    std::size_t degree(Family f) const;

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    NCPolynomial& operator*=(cplx c);

    friend NCPolynomial operator+(NCPolynomial x, const NCPolynomial& y) { return x += y; }
    friend NCPolynomial operator-(NCPolynomial x, const NCPolynomial& y) { return x -= y; }
    friend NCPolynomial operator*(cplx c, NCPolynomial p) { return p *= c; }
    friend NCPolynomial operator*(NCPolynomial p, cplx c) { return p *= c; }
    friend NCPolynomial operator*(const NCPolynomial& x, const NCPolynomial& y);

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

    friend NCPolynomial poly_mul(const NCPolynomial& x, const NCPolynomial& y,
                                 std::size_t max_terms);

private:
    void insert(const NCWord& w, cplx c);

    std::map<NCWord, cplx> terms_;
};

/// Thrown when an expansion exceeds its configured term budget.
class term_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

NCPolynomial poly_mul(const NCPolynomial& x, const NCPolynomial& y,
                      std::size_t max_terms);

/// Fully distributed m-th power with merged coefficients; p^0 is the unit.
NCPolynomial poly_pow(const NCPolynomial& p, int m,
                      std::size_t max_terms = static_cast<std::size_t>(-1));

}  // namespace ncmi
