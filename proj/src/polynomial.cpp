#include "gridperm/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gridperm {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Rational Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& n) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> product(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            product[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(product);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational evaluate(const Polynomial& p, const Rational& n) { return p(n); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial subtract(const Polynomial& p, const Polynomial& q) { return p - q; }

Polynomial choose_poly(std::size_t t) {
    // n (n-1) ... (n-t+1) / t!
    Polynomial result = Polynomial::constant(1);
    Integer factorial = 1;
    for (std::size_t i = 0; i < t; ++i) {
        result *= Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
        factorial *= static_cast<unsigned long>(i + 1);
    }
    return result * Rational(Integer(1), factorial);
}

Polynomial binomial_basis_poly(std::size_t m) {
    if (m == 0) throw std::invalid_argument("binomial_basis_poly: m must be positive");
    // (n-1)(n-2)...(n-m+1) / (m-1)!
    Polynomial result = Polynomial::constant(1);
    Integer factorial = 1;
    for (std::size_t i = 1; i < m; ++i) {
        result *= Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
        factorial *= static_cast<unsigned long>(i);
    }
    return result * Rational(Integer(1), factorial);
}

Polynomial to_monomial(const BinomialCombination& combination) {
    Polynomial sum;
    for (const auto& [m, c] : combination.terms) sum += binomial_basis_poly(m) * Rational(c);
    return sum;
}

BinomialCombination to_binomial(const Polynomial& p) {
    BinomialCombination out;
    if (p.is_zero()) return out;
    // Values at n = 1 .. deg+1; c_m is the (m-1)-th forward difference at 1.
    const std::size_t points = static_cast<std::size_t>(p.degree()) + 1;
    std::vector<Rational> row;
    row.reserve(points);
    for (std::size_t n = 1; n <= points; ++n) row.push_back(p(Rational(static_cast<long>(n))));
    for (std::size_t m = 1; m <= points; ++m) {
        const Rational& c = row.front();
        if (c.get_den() != 1 || c < 0)
            throw std::domain_error("polynomial is not a nonnegative integer binomial combination");
        if (c != 0) out.terms.emplace(m, c.get_num());
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return out;
}

Polynomial from_histogram(const LengthHistogram& histogram) {
    BinomialCombination combination;
    for (const auto& [m, c] : histogram.counts) {
        if (m == 0 || c == 0) continue;
        combination.terms.emplace(m, Integer(static_cast<unsigned long>(c)));
    }
    return to_monomial(combination);
}

Polynomial gregory_newton(std::span<const Rational> values, std::size_t k) {
    if (k == 0) throw std::invalid_argument("gregory_newton: k must be positive");
    if (values.size() != k)
        throw std::invalid_argument("gregory_newton: expected " + std::to_string(k) +
                                    " values, got " + std::to_string(values.size()));
    std::vector<Polynomial> choose(k + 1);
    for (std::size_t t = 1; t <= k; ++t) choose[t] = choose_poly(t);

    Polynomial result;
    for (std::size_t j = 1; j <= k; ++j) {
        Polynomial weight;
        for (std::size_t i = 0; i + j <= k; ++i) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), i + j, i);
            Rational c(binom);
            if (i % 2 == 1) c = -c;
            weight += choose[i + j] * c;
        }
        result += weight * values[j - 1];
    }
    return result;
}

namespace {

std::string latex_rational(const Rational& magnitude) {
    if (magnitude.get_den() == 1) return magnitude.get_num().get_str();
    return "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
}

std::string power_of_n(std::size_t d, bool latex) {
    if (d == 0) return "";
    if (d == 1) return "n";
    return latex ? "n^{" + std::to_string(d) + "}" : "n^" + std::to_string(d);
}

std::string expression(const Polynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t d = c.size(); d-- > 0;) {
        if (c[d] == 0) continue;
        const bool negative = c[d] < 0;
        const Rational magnitude = abs(c[d]);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = magnitude == 1 && d > 0;
        if (!unit) {
            out += latex ? latex_rational(magnitude) : magnitude.get_str();
            if (d > 0 && !latex) out += "*";
        }
        out += power_of_n(d, latex);
    }
    return out;
}

}  // namespace

std::string format(const Polynomial& p, PolyFormat style) {
    switch (style) {
        case PolyFormat::CoeffArray: {
            std::string out = "[";
            const auto& c = p.coefficients();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ", ";
                out += c[i].get_str();
            }
            return out + "]";
        }
        case PolyFormat::Latex:
            return expression(p, true);
        case PolyFormat::Text:
            return expression(p, false);
    }
    return {};
}

std::string to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
    nlohmann::ordered_json doc;
    doc["basis"] = "monomial";
    doc["coeffs"] = coeffs;
    doc["valid_for"] = "n>=1";
    return doc.dump();
}

Polynomial parse_coeff_array(std::string_view text) {
    const auto open = text.find('[');
    const auto close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw std::invalid_argument("coefficient array must be enclosed in brackets");
    std::string_view body = text.substr(open + 1, close - open - 1);
    std::vector<Rational> coeffs;
    while (true) {
        const auto comma = body.find(',');
        std::string token(body.substr(0, comma));
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first != std::string::npos) {
            token = token.substr(first, last - first + 1);
            Rational value;
            if (value.set_str(token, 10) != 0 || value.get_den() == 0)
                throw std::invalid_argument("not a rational: '" + token + "'");
            value.canonicalize();
            coeffs.push_back(value);
        } else if (comma != std::string_view::npos) {
            throw std::invalid_argument("empty coefficient");
        }
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace gridperm
