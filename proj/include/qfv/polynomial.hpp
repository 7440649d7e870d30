#pragma once

// Multivariate polynomials in x_1..x_t with exact rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace qfv {

using Rational = boost::multiprecision::cpp_rational;

class Polynomial {
public:
    /// Exponent vector, trailing zeros stripped.
    using Monomial = std::vector<int>;

    Polynomial() = default;
    Polynomial(Rational c);  // NOLINT: constants convert implicitly
    static Polynomial variable(int index);

    /// Parses "x1^2 - 3/2*x1*x2 + (x2 - x3)^3"; variables are x<index>.
    static Polynomial parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    /// Largest variable index that occurs, 0 for constants.
    int max_variable() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// Replaces x_from by x_to.
    Polynomial substitute(int from, int to) const;
    /// Exact test for divisibility by x_p - x_q (p != q).
    bool divisible_by_difference(int p, int q) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(int e) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(Monomial m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

}  // namespace qfv
