#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qrook {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely by exponent; the highest stored coefficient is never zero,
/// so the zero polynomial has no coefficients at all.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit IntPoly(Integer c);
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly monomial(Integer c, int exponent);
    static IntPoly q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monomial() const;

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Smallest exponent with a nonzero coefficient; 0 for the zero polynomial.
    int low_degree() const;

    const Integer& leading() const { return coeffs_.back(); }
    Integer coeff(int exponent) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }

    /// Multiply by q^k (k >= 0) or divide by q^{-k} (requires divisibility).
    IntPoly shifted(int k) const;
    /// Divide every coefficient by c; c must divide all of them.
    IntPoly divexact(const Integer& c) const;

    Rational evaluate(const Rational& x) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// e.g. "-q^3+2*q-1"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Pseudo-remainder of a by b (b nonzero), up to a nonzero integer factor.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[q], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b in Z[q]; throws InvalidArgument if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

}  // namespace qrook
