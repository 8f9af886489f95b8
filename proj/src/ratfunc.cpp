#include "qrook/ratfunc.hpp"

#include <cctype>
#include <utility>

#include "qrook/errors.hpp"

namespace qrook {

RatFunc::RatFunc(const Rational& c) : num_(Integer(c.get_num())), den_(Integer(c.get_den())) {}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RatFunc with zero denominator");
    normalize();
}

RatFunc RatFunc::q_power(int e, long c) {
    if (e >= 0) return RatFunc(IntPoly::monomial(c, e));
    return RatFunc(IntPoly(c), IntPoly::monomial(1, -e));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (!den_.is_one()) {
        IntPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    // Both operands are reduced, so cancelling across is enough.
    IntPoly g1 = gcd(num_, o.den_);
    IntPoly g2 = gcd(o.num_, den_);
    IntPoly n1 = g1.is_one() ? num_ : divexact(num_, g1);
    IntPoly d2 = g1.is_one() ? o.den_ : divexact(o.den_, g1);
    IntPoly n2 = g2.is_one() ? o.num_ : divexact(o.num_, g2);
    IntPoly d1 = g2.is_one() ? den_ : divexact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= rf_inv(o); }

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    auto cmp_poly = [](const IntPoly& x, const IntPoly& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        for (int e = x.degree(); e >= 0; --e) {
            int s = cmp(x.coeff(e), y.coeff(e));
            if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    };
    if (auto c = cmp_poly(a.den_, b.den_); c != 0) return c;
    return cmp_poly(a.num_, b.num_);
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc rf_inv(const RatFunc& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero");
    return RatFunc(a.den(), a.num());
}

RatFunc pow(const RatFunc& a, int e) {
    RatFunc base = e < 0 ? rf_inv(a) : a;
    RatFunc r(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return r;
}

RatFunc quantum_integer(int i) {
    if (i <= 0) throw InvalidArgument("quantum_integer requires i >= 1");
    std::vector<Integer> c(static_cast<std::size_t>(2 * (i - 1)) + 1, Integer(0));
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(2 * j)] = 1;
    return RatFunc(IntPoly(std::move(c)));
}

RatFunc quantum_factorial(int k) {
    if (k < 0) throw InvalidArgument("quantum_factorial requires k >= 0");
    RatFunc r(1);
    for (int i = 1; i <= k; ++i) r *= quantum_integer(i);
    return r;
}

const RatFunc& q_minus_qinv() {
    static const RatFunc value = RatFunc::q() - RatFunc::q_power(-1);
    return value;
}

Rational specialize(const RatFunc& f, const Rational& q0) {
    Rational d = f.den().evaluate(q0);
    if (sgn(d) == 0) throw PoleAtPoint("denominator of " + f.to_string() + " vanishes at q=" + to_string(q0));
    Rational r = f.num().evaluate(q0) / d;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// Recursive-descent parser:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' ['-'] integer]
//   primary:= integer | 'q' | '(' expr ')' | '-' factor
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    RatFunc expr() {
        RatFunc acc;
        if (accept('-'))
            acc = -term();
        else {
            accept('+');
            acc = term();
        }
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }
    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            if (accept('*'))
                acc *= factor();
            else if (accept('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else
                return acc;
        }
    }
    RatFunc factor() {
        RatFunc base = primary();
        if (accept('^')) {
            bool neg = accept('-');
            Integer e = integer();
            if (!e.fits_sint_p()) fail("exponent too large");
            int ei = static_cast<int>(e.get_si());
            if (neg && base.is_zero()) fail("zero to a negative power");
            base = pow(base, neg ? -ei : ei);
        }
        return base;
    }
    RatFunc primary() {
        skip();
        if (accept('(')) {
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (accept('-')) return -factor();
        if (accept('q')) return RatFunc::q();
        return RatFunc(IntPoly(integer()));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
    RatFunc r = parse_ratfunc(text);
    if (!r.is_constant()) throw ParseError("expected a rational constant, got '" + std::string(text) + "'");
    Rational v(r.num().is_zero() ? Integer(0) : r.num().leading(), r.den().leading());
    v.canonicalize();
    return v;
}

}  // namespace qrook
