#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arrangelab {

/// Dense univariate integer polynomial in t, coefficients from the constant
/// term upward. Arithmetic is overflow-checked (std::overflow_error).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);

    static IntPolynomial monomial(std::int64_t c, int degree);
    /// t - root
    static IntPolynomial linear(std::int64_t root);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coefficient(int k) const;
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    std::int64_t evaluate(std::int64_t t) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    /// Multiplication by t^k.
    IntPolynomial shifted(int k) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human form, highest degree first: "t^3 - 3t^2 + 2t".
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

}  // namespace arrangelab
