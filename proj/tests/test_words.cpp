#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncmi/catalan.hpp"
#include "ncmi/words.hpp"
#include "test_util.hpp"

using namespace ncmi;
using ncmi::testing::Draw;

namespace {

NCPolynomial random_poly(Draw& d) {
    const NCLetter alphabet[] = {NCLetter::a(0), NCLetter::a(1), NCLetter::b(0),
                                 NCLetter::b(1)};
    NCPolynomial p;
    const int terms = d.uniform_int(1, 3);
    for (int t = 0; t < terms; ++t) {
        NCWord w;
        const int len = d.uniform_int(0, 2);
        for (int i = 0; i < len; ++i) w.push_back(alphabet[d.uniform_int(0, 3)]);
        p += NCPolynomial::monomial(w, d.disc(0.1, 1.0));
    }
    return p;
}

}  // namespace

TEST_CASE("letters and words order and concatenate") {
    CHECK(NCLetter::a() < NCLetter::b());
    CHECK(NCLetter::a(0) < NCLetter::a(1));
    const NCWord w{NCLetter::a(), NCLetter::b(1)};
    CHECK(w.size() == 2);
    CHECK(w.degree(Family::A) == 1);
    CHECK(w.degree(Family::B) == 1);
    CHECK((w * w).size() == 4);
    CHECK(NCWord::unit().empty());
    CHECK(w.str() == "a.b1");
    CHECK(NCWord::unit().str() == "1");
    CHECK(NCWord::power(NCLetter::b(), 3).str() == "b.b.b");
}

TEST_CASE("square of a sum of two letters distributes into four words") {
    const NCWord x{NCLetter::a(0)};
    const NCWord y{NCLetter::a(1)};
    const NCPolynomial p = NCPolynomial::monomial(x) + NCPolynomial::monomial(y);
    const NCPolynomial sq = poly_pow(p, 2);
    CHECK(sq.term_count() == 4);
    CHECK(sq.coeff(x * x) == cplx(1.0));
    CHECK(sq.coeff(x * y) == cplx(1.0));
    CHECK(sq.coeff(y * x) == cplx(1.0));
    CHECK(sq.coeff(y * y) == cplx(1.0));
}

TEST_CASE("first power is the identity map") {
    Draw d(21);
    for (int t = 0; t < 20; ++t) {
        const NCPolynomial p = random_poly(d);
        CHECK(poly_pow(p, 1) == p);
    }
    CHECK(poly_pow(NCPolynomial(), 0) == NCPolynomial::unit());
}

TEST_CASE("span square carries the four expected coefficients") {
    const cplx alpha(2.0, 0.5), beta(-1.0, 1.5);
    const NCWord ab{NCLetter::a(), NCLetter::b()};
    const NCWord ba{NCLetter::b(), NCLetter::a()};
    const NCPolynomial p = ncmi::testing::span_polynomial(alpha, beta);
    const NCPolynomial sq = poly_pow(p, 2);
    CHECK(sq.term_count() == 4);
    CHECK(sq.coeff(ab * ab) == alpha * alpha);
    CHECK(sq.coeff(ab * ba) == alpha * beta);
    CHECK(sq.coeff(ba * ab) == beta * alpha);
    CHECK(sq.coeff(ba * ba) == beta * beta);
}

TEST_CASE("powers agree with iterated products") {
    Draw d(22);
    for (int t = 0; t < 10; ++t) {
        const NCPolynomial p = random_poly(d);
        for (int m = 0; m <= 5; ++m)
            CHECK(poly_pow(p, m + 1) == poly_mul(poly_pow(p, m), p, SIZE_MAX));
    }
}

TEST_CASE("zero coefficients are never stored") {
    const NCWord w{NCLetter::a()};
    NCPolynomial p = NCPolynomial::monomial(w, 2.0);
    p += NCPolynomial::monomial(w, -2.0);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK((NCPolynomial::monomial(w, 1.0) * cplx(0.0)).is_zero());
}

TEST_CASE("term budget is a hard error") {
    const NCPolynomial p = ncmi::testing::span_polynomial(1.0, 1.0);
    CHECK_THROWS_AS(poly_pow(p, 4, 10), term_limit_error);
    CHECK(poly_pow(p, 4, 16).term_count() == 16);
}

TEST_CASE("catalan values and growth identity") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(6) == 132);
    CHECK(catalan(33) == 212336130412243110LL);
    for (int n = 0; n <= 15; ++n)
        CHECK(static_cast<long long>(n + 2) * catalan(n + 1) ==
              2LL * (2 * n + 1) * catalan(n));
    CHECK_THROWS_AS(catalan(34), std::overflow_error);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("catalan two-sided product bound") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            const __int128 lhs = static_cast<__int128>(2) * catalan(n) * catalan(n) *
                                 catalan(m) * catalan(m);
            const __int128 mid = static_cast<__int128>(catalan(n + m)) * catalan(n + m);
            const __int128 rhs = static_cast<__int128>(catalan(2 * n)) * catalan(2 * m);
            CHECK(lhs <= mid);
            CHECK(mid <= rhs);
        }
}
