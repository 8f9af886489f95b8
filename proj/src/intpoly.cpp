#include "qrook/intpoly.hpp"

#include <algorithm>
#include <utility>

#include "qrook/errors.hpp"

namespace qrook {

IntPoly::IntPoly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(Integer c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(Integer c, int exponent) {
    if (exponent < 0) throw InvalidArgument("IntPoly::monomial: negative exponent");
    IntPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Integer(0));
    p.coeffs_.back() = std::move(c);
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPoly::is_monomial() const {
    if (coeffs_.empty()) return false;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

int IntPoly::low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
}

Integer IntPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    return divexact(g);
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    if (k > 0) {
        r.coeffs_.assign(static_cast<std::size_t>(k), Integer(0));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }
    if (low_degree() < -k) throw InvalidArgument("IntPoly::shifted: not divisible by q^" + std::to_string(-k));
    r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
    return r;
}

IntPoly IntPoly::divexact(const Integer& c) const {
    if (c == 0) throw DivisionByZero("IntPoly::divexact by zero");
    IntPoly r = *this;
    for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Rational IntPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += Rational(*it);
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        const Integer& c = coeffs_[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += 'q';
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("pseudo_remainder by zero polynomial");
    IntPoly r = a;
    const int d = b.degree();
    const Integer& lb = b.leading();
    while (!r.is_zero() && r.degree() >= d) {
        const int s = r.degree() - d;
        Integer lr = r.leading();
        r *= lb;
        r -= (b * lr).shifted(s);
    }
    return r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();

    Integer c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    const int low = std::min(a.low_degree(), b.low_degree());

    // A monomial c*q^m only shares integer content and powers of q.
    if (a.is_monomial() || b.is_monomial() || a.is_constant() || b.is_constant())
        return IntPoly::monomial(c, low);

    IntPoly u = a.shifted(-a.low_degree()).primitive_part();
    IntPoly v = b.shifted(-b.low_degree()).primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) {
            u = IntPoly(1);
            break;
        }
        IntPoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part().shifted(low) * c;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("divexact by zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_constant()) return a.divexact(b.leading());
    if (a.degree() < b.degree()) throw InvalidArgument("divexact: divisor does not divide dividend");

    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Integer(0));
    const auto& bc = b.coeffs();
    const Integer& lb = b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Integer& top = rem[static_cast<std::size_t>(i + b.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw InvalidArgument("divexact: divisor does not divide dividend");
        Integer t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < bc.size(); ++j) {
            if (bc[j] == 0) continue;
            mpz_submul(rem[static_cast<std::size_t>(i) + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
        }
        quot[static_cast<std::size_t>(i)] = std::move(t);
    }
    for (const auto& c : rem)
        if (c != 0) throw InvalidArgument("divexact: divisor does not divide dividend");
    return IntPoly(std::move(quot));
}

}  // namespace qrook
