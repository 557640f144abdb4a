#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridperm/length_histogram.hpp"

namespace gridperm {

// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Exact univariate polynomial in n, stored in the monomial basis with
// ascending degree. Trailing zeros are trimmed; the zero polynomial has no
// coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);

    static Polynomial constant(const Rational& c);
    // The polynomial n.
    static Polynomial variable();

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t power) const;

    Rational operator()(const Rational& n) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Rational evaluate(const Polynomial& p, const Rational& n);
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);

// C(n, t) as a polynomial in n.
Polynomial choose_poly(std::size_t t);

// C(n-1, m-1): coefficient of x^n in (x/(1-x))^m. Throws for m == 0.
Polynomial binomial_basis_poly(std::size_t m);

// Σ c_m C(n-1, m-1) with nonnegative integer weights.
struct BinomialCombination {
    std::map<std::size_t, Integer> terms;
    friend bool operator==(const BinomialCombination&, const BinomialCombination&) = default;
};

Polynomial to_monomial(const BinomialCombination& combination);

// Recovers the weights by forward differences at n = 1, 2, ...
// Throws std::domain_error when p is not a nonnegative integer combination.
BinomialCombination to_binomial(const Polynomial& p);

// ε is ignored: it only contributes at n = 0.
Polynomial from_histogram(const LengthHistogram& histogram);

// Integer-valued interpolation through R(1..k), with R(0) = 0:
//   R(n) = Σ_{j=1..k} (Σ_{i=0..k-j} (-1)^i C(i+j, i) C(n, i+j)) R(j)
// Unique among polynomials of degree <= k vanishing at 0.
Polynomial gregory_newton(std::span<const Rational> values, std::size_t k);

enum class PolyFormat { CoeffArray, Latex, Text };

std::string format(const Polynomial& p, PolyFormat style);

// {"basis": "monomial", "coeffs": ["1", "1/2"], "valid_for": "n>=1"}
std::string to_json(const Polynomial& p);

// Parses "[1, -1/2, 3]" (the CoeffArray format).
Polynomial parse_coeff_array(std::string_view text);

}  // namespace gridperm
