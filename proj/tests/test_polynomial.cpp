#include <doctest.h>

#include <json.hpp>
#include <random>

#include "gridperm/polynomial.hpp"

using namespace gridperm;

namespace {

Polynomial coeffs(std::string_view text) { return parse_coeff_array(text); }

// Independent expansion of C(n-1, m-1) by repeated multiplication of linear
// factors, with plain rationals.
Polynomial falling_basis(std::size_t m) {
    Polynomial p = Polynomial::constant(1);
    for (std::size_t t = 1; t < m; ++t) {
        p *= Polynomial({Rational(-static_cast<long>(t)), Rational(1)});
        p *= Rational(1, static_cast<long>(t));
    }
    return p;
}

Integer binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

TEST_CASE("arithmetic and trimming") {
    const Polynomial p({1, 2, 3});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(Polynomial({1, 0, 0}).coefficients().size() == 1);
    CHECK(add(p, Polynomial({-1})) == Polynomial({0, 2, 3}));
    CHECK(subtract(p, Polynomial({0, 0, 3})) == Polynomial({1, 2}));
    CHECK(Polynomial::variable() * Polynomial::variable() == Polynomial({0, 0, 1}));
    CHECK(p.coefficient(7) == 0);
    CHECK(evaluate(coeffs("[1, 0, 1]"), 4) == 17);
    CHECK(evaluate(coeffs("[1, 1/2, 1/2]"), 3) == 7);
}

TEST_CASE("binomial basis") {
    CHECK_THROWS_AS(binomial_basis_poly(0), std::invalid_argument);
    CHECK(binomial_basis_poly(1) == Polynomial::constant(1));
    CHECK(binomial_basis_poly(2) == Polynomial({-1, 1}));
    CHECK(binomial_basis_poly(3) == Polynomial({1, Rational(-3, 2), Rational(1, 2)}));
    for (std::size_t m = 1; m <= 15; ++m) {
        const Polynomial b = binomial_basis_poly(m);
        CHECK(b == falling_basis(m));
        for (long n = 1; n < static_cast<long>(m); ++n) CHECK(b(n) == 0);
        CHECK(b(static_cast<long>(m)) == 1);
        for (long n = 1; n <= 25; ++n) CHECK(b(n) == Rational(binom(n - 1, static_cast<long>(m) - 1)));
    }
    for (std::size_t t = 0; t <= 10; ++t)
        for (long n = 0; n <= 15; ++n) CHECK(choose_poly(t)(n) == Rational(binom(n, static_cast<long>(t))));
}

TEST_CASE("from_histogram") {
    LengthHistogram h;
    h.counts = {{1, 2}, {2, 2}, {3, 1}};
    h.has_epsilon = true;
    CHECK(from_histogram(h) == Polynomial({1, Rational(1, 2), Rational(1, 2)}));
    CHECK(from_histogram(LengthHistogram{}).is_zero());
    CHECK(from_histogram(LengthHistogram{{{1, 1}}, false}) == Polynomial::constant(1));
}

TEST_CASE("binomial combinations round trip") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        BinomialCombination c;
        const int terms = static_cast<int>(rng() % 6);
        for (int i = 0; i < terms; ++i) c.terms[1 + rng() % 12] = Integer(static_cast<long>(1 + rng() % 100000));
        const Polynomial p = to_monomial(c);
        CHECK(to_binomial(p) == c);
        for (long n = 0; n <= 20; ++n) CHECK(p(n).get_den() == 1);
    }
    CHECK_THROWS_AS(to_binomial(Polynomial({0, Rational(1, 2)})), std::domain_error);
    CHECK_THROWS_AS(to_binomial(Polynomial({0, -1})), std::domain_error);
}

TEST_CASE("differences of the pancake arrays") {
    const Polynomial r3 = coeffs("[1, 1, -1, 1]");
    const Polynomial r4 = coeffs("[1, -1/2, 3, -5/2, 1]");
    const Polynomial r5 = coeffs("[1, 1/2, -25/6, 17/2, -29/6, 1]");
    CHECK(r4 - r3 == coeffs("[0, -3/2, 4, -7/2, 1]"));
    CHECK(r5 - r4 == coeffs("[0, 1, -43/6, 11, -35/6, 1]"));
}

TEST_CASE("Gregory-Newton interpolation") {
    CHECK(gregory_newton(std::vector<Rational>{0, 2}, 2) == Polynomial({0, -1, 1}));
    CHECK(gregory_newton(std::vector<Rational>{5}, 1) == Polynomial({0, 5}));
    CHECK_THROWS_AS(gregory_newton(std::vector<Rational>{1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(gregory_newton(std::vector<Rational>{}, 0), std::invalid_argument);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = 1 + rng() % 9;
        std::vector<Rational> c(k + 1);
        for (std::size_t i = 1; i <= k; ++i) c[i] = Rational(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 7));
        const Polynomial p(c);  // p(0) = 0, degree <= k
        std::vector<Rational> values;
        for (std::size_t n = 1; n <= k; ++n) values.push_back(p(static_cast<long>(n)));
        CHECK(gregory_newton(values, k) == p);
    }
}

TEST_CASE("Gregory-Newton needs C(i+j, i), not C(i+j-1, i)") {
    // Weights with C(i+j-1, i) miss the samples once k >= 3: for n^3 - 2n^2 + n
    // (samples 0, 2, 12) they give 2 C(n,2) + 8 C(n,3), which is 14 at n = 3.
    const Polynomial target({0, 1, -2, 1});
    const Polynomial printed = choose_poly(2) * Rational(2) + choose_poly(3) * Rational(8);
    CHECK(printed(3) == 14);
    CHECK(target(3) == 12);
    CHECK(gregory_newton(std::vector<Rational>{0, 2, 12}, 3) == target);
}

TEST_CASE("formatting") {
    const Polynomial p({1, Rational(1, 2), Rational(1, 2)});
    CHECK(format(p, PolyFormat::CoeffArray) == "[1, 1/2, 1/2]");
    CHECK(format(Polynomial{}, PolyFormat::CoeffArray) == "[]");
    CHECK(format(coeffs("[1, 0, 1]"), PolyFormat::CoeffArray) == "[1, 0, 1]");
    CHECK(format(p, PolyFormat::Text) == "1/2*n^2 + 1/2*n + 1");
    CHECK(format(coeffs("[0, -3/2, 4]"), PolyFormat::Text) == "4*n^2 - 3/2*n");
    CHECK(format(Polynomial{}, PolyFormat::Text) == "0");
    CHECK(format(p, PolyFormat::Latex).find("\\frac{1}{2}") != std::string::npos);
    const auto doc = nlohmann::json::parse(to_json(p));
    CHECK(doc["basis"] == "monomial");
    CHECK(doc["coeffs"] == nlohmann::json::array({"1", "1/2", "1/2"}));
    CHECK(doc["valid_for"] == "n>=1");
    CHECK(to_json(p) == R"({"basis":"monomial","coeffs":["1","1/2","1/2"],"valid_for":"n>=1"})");
}

TEST_CASE("coefficient array parsing") {
    CHECK(coeffs("[]").is_zero());
    CHECK(coeffs("[1, -4576633/181440]").coefficient(1) == Rational(-4576633, 181440));
    CHECK(coeffs("[2/4]").coefficient(0) == Rational(1, 2));
    CHECK_THROWS_AS(coeffs("1, 2"), std::invalid_argument);
    CHECK_THROWS_AS(coeffs("[1, x]"), std::invalid_argument);
    CHECK_THROWS_AS(coeffs("[1,,2]"), std::invalid_argument);
    const Polynomial big = coeffs("[1, 29555642/315, -1264975307/5040, 11803588051/45360]");
    CHECK(coeffs(format(big, PolyFormat::CoeffArray)) == big);
}
