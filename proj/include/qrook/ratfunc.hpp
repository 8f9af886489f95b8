#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "qrook/intpoly.hpp"

namespace qrook {

/// Element of Q(q), kept in canonical form: num and den coprime in Z[q]
/// (integer content included) and den has a positive leading coefficient.
/// Two equal field elements therefore have identical representations.
///
/// Negative powers of q live in the denominator: q^{-1} is 1/q.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RatFunc(const Rational& c);
    explicit RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(IntPoly num, IntPoly den);

    static RatFunc q() { return RatFunc(IntPoly::q()); }
    /// c * q^e for any integer e.
    static RatFunc q_power(int e, long c = 1);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;
    /// Arbitrary but fixed total order on representations (for use as map keys).
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

    /// "q^2-1" when the denominator is 1, otherwise "(q^2+1)/(q)".
    std::string to_string() const;

private:
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Multiplicative inverse; throws DivisionByZero for 0.
RatFunc rf_inv(const RatFunc& a);
RatFunc pow(const RatFunc& a, int e);

/// [i] = 1 + q^2 + ... + q^{2(i-1)}, i >= 1.
RatFunc quantum_integer(int i);
/// [k]! = [1][2]...[k]; [0]! = 1.
RatFunc quantum_factorial(int k);

/// q - q^{-1}, the constant that appears in every quadratic Hecke relation.
const RatFunc& q_minus_qinv();

/// Exact value at q = q0; throws PoleAtPoint if the denominator vanishes.
Rational specialize(const RatFunc& f, const Rational& q0);

/// Parses expressions over q built from integers, q, + - * / ^ and
/// parentheses, e.g. "(q^2+1)/(q)", "2*q^-2", "-1/3". Throws ParseError.
RatFunc parse_ratfunc(std::string_view text);

/// Parses an exact rational such as "3", "-2/5". Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace qrook
