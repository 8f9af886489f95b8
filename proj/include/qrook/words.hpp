#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qrook/errors.hpp"
#include "qrook/matrix.hpp"
#include "qrook/ratfunc.hpp"

namespace qrook {

enum class GenKind : char { T = 'T', X = 'X', P = 'P' };

/// A generator symbol such as T_2, X_1, P_3 or an adjoined inverse T_1^{-1}.
struct Gen {
    GenKind kind = GenKind::T;
    int index = 1;
    bool inverse = false;

    Gen inverted() const { return {kind, index, !inverse}; }
    std::string name() const;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

/// Formal linear combination of words with RatFunc coefficients.
class Element {
public:
    Element() = default;
    Element(long c);            // NOLINT(google-explicit-constructor)
    Element(const RatFunc& c);  // NOLINT(google-explicit-constructor)
    static Element gen(Gen g);
    static Element word(Word w, RatFunc c = 1);

    const std::map<Word, RatFunc>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::set<Gen> generators() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o);
    Element& operator*=(const RatFunc& c);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(Element a, const RatFunc& c) { return a *= c; }
    friend Element operator*(const RatFunc& c, Element a) { return a *= c; }
    friend bool operator==(const Element&, const Element&) = default;

    std::string to_string() const;

private:
    void add_term(const Word& w, const RatFunc& c);
    std::map<Word, RatFunc> terms_;
};

inline Element T(int i) { return Element::gen({GenKind::T, i, false}); }
inline Element Tinv(int i) { return Element::gen({GenKind::T, i, true}); }
inline Element X(int i) { return Element::gen({GenKind::X, i, false}); }
inline Element P(int i) { return Element::gen({GenKind::P, i, false}); }
/// T_{i-1} ... T_1 (x) T_1 ... T_{i-1}.
Element conjugate_down(const Element& x, int i);

/// lhs - rhs = 0.
struct Relation {
    std::string name;
    Element lhs;
    Element rhs;
    Element difference() const { return lhs - rhs; }
};

/// Ordered definitions gen -> image. Later images may refer to generators
/// defined earlier in the list, which keeps recursive definitions compact.
using Substitution = std::vector<std::pair<Gen, Element>>;

/// Replaces every defined generator by its image once.
Element substitute(const Element& e, const Substitution& s);
/// Substitutes repeatedly until no defined generator remains.
Element substitute_fully(const Element& e, const Substitution& s);

template <class F>
using Assignment = std::map<Gen, Matrix<F>>;

/// Maps the RatFunc coefficients of relations into the matrix field.
template <class F>
struct Scalars {
    std::function<F(const RatFunc&)> lift;
    std::string q_label = "symbolic";
};

inline Scalars<RatFunc> symbolic_scalars() {
    return {[](const RatFunc& c) { return c; }, "symbolic"};
}
inline Scalars<Rational> scalars_at(const Rational& q0) {
    return {[q0](const RatFunc& c) { return specialize(c, q0); }, to_string(q0)};
}

Assignment<Rational> specialize(const Assignment<RatFunc>& a, const Rational& q0);

/// Evaluates elements against an assignment. Inverses of generators are
/// prepared up front with require(); eval() itself is const and may be
/// called concurrently.
template <class F>
class Evaluator {
public:
    Evaluator(Assignment<F> a, Scalars<F> s) : a_(std::move(a)), s_(std::move(s)) {
        if (a_.empty()) throw InvalidArgument("empty assignment");
        n_ = a_.begin()->second.rows();
        for (const auto& [g, m] : a_)
            if (m.rows() != n_ || m.cols() != n_)
                throw InvalidArgument("assignment matrices must be square of equal size (" + g.name() + ")");
    }

    std::size_t dim() const { return n_; }
    const Assignment<F>& assignment() const { return a_; }
    const Scalars<F>& scalars() const { return s_; }

    /// Checks generators are present and computes any inverses needed.
    /// T_i^{-1} is first tried as T_i - (q - q^{-1}); otherwise the inverse
    /// comes from elimination. Throws InvalidArgument / NotInvertible.
    void require(const Element& e) {
        for (const auto& g : e.generators()) {
            if (a_.count(g)) continue;
            if (!g.inverse) throw InvalidArgument("assignment has no matrix for generator " + g.name());
            auto base = a_.find(g.inverted());
            if (base == a_.end()) throw InvalidArgument("assignment has no matrix for generator " + g.inverted().name());
            const auto& m = base->second;
            Matrix<F> inv;
            bool found = false;
            if (g.kind == GenKind::T) {
                inv = m - Matrix<F>::scalar(n_, s_.lift(q_minus_qinv()));
                found = multiply(inv, m) == Matrix<F>::identity(n_);
            }
            if (!found) inv = inverse(m);
            a_.emplace(g, std::move(inv));
        }
    }

    Matrix<F> eval(const Element& e) const {
        Matrix<F> acc(n_, n_);
        for (const auto& [w, c] : e.terms()) {
            F coeff = s_.lift(c);
            if (is_zero(coeff)) continue;
            acc += eval_word(w) * coeff;
        }
        return acc;
    }

    Matrix<F> eval_word(const Word& w) const {
        if (w.empty()) return Matrix<F>::identity(n_);
        Matrix<F> m = lookup(w.front());
        for (std::size_t i = 1; i < w.size(); ++i) m = multiply_serial(m, lookup(w[i]));
        return m;
    }

private:
    const Matrix<F>& lookup(const Gen& g) const {
        auto it = a_.find(g);
        if (it == a_.end()) throw InvalidArgument("assignment has no matrix for generator " + g.name());
        return it->second;
    }

    Assignment<F> a_;
    Scalars<F> s_;
    std::size_t n_ = 0;
};

struct RelationCheck {
    std::string name;
    bool pass = false;
    /// First nonzero residual entry in row-major order, "0" on pass.
    std::string residual = "0";
    std::size_t nonzero_entries = 0;
};

struct VerifyReport {
    std::vector<RelationCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

namespace detail {

inline std::string entry_string(const RatFunc& x) { return x.to_string(); }
inline std::string entry_string(const Rational& x) { return to_string(x); }

template <class F>
RelationCheck check_relation(const Evaluator<F>& ev, const Relation& r) {
    Matrix<F> res = ev.eval(r.difference());
    RelationCheck c;
    c.name = r.name;
    c.nonzero_entries = res.nonzeros();
    c.pass = c.nonzero_entries == 0;
    if (!c.pass)
        for (const auto& x : res.data())
            if (!is_zero(x)) {
                c.residual = entry_string(x);
                break;
            }
    return c;
}

template <class F>
Evaluator<F> prepared(const Assignment<F>& a, const std::vector<Relation>& rels, Scalars<F> s) {
    Evaluator<F> ev(a, std::move(s));
    for (const auto& r : rels) ev.require(r.difference());
    return ev;
}

}  // namespace detail

/// Residual of every relation, one relation after another.
template <class F>
VerifyReport verify_serial(const Assignment<F>& a, const std::vector<Relation>& rels, Scalars<F> s) {
    auto ev = detail::prepared(a, rels, std::move(s));
    VerifyReport rep;
    for (const auto& r : rels) rep.checks.push_back(detail::check_relation(ev, r));
    return rep;
}

/// Same report as verify_serial, relations spread over OpenMP threads.
template <class F>
VerifyReport verify(const Assignment<F>& a, const std::vector<Relation>& rels, Scalars<F> s) {
    auto ev = detail::prepared(a, rels, std::move(s));
    VerifyReport rep;
    rep.checks.resize(rels.size());
    const auto n = static_cast<long>(rels.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i)
        rep.checks[static_cast<std::size_t>(i)] = detail::check_relation(ev, rels[static_cast<std::size_t>(i)]);
    return rep;
}

inline VerifyReport verify(const Assignment<RatFunc>& a, const std::vector<Relation>& rels) {
    return verify(a, rels, symbolic_scalars());
}

/// Incrementally maintained row-echelon basis of a subspace of F^n.
template <class F>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : n_(n) {}

    std::size_t size() const { return rows_.size(); }

    /// Adds v if it is independent of the basis; returns whether it was.
    bool insert(std::vector<F> v) {
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const F& c = v[pivots_[b]];
            if (is_zero(c)) continue;
            F f = c;
            for (const auto& [j, x] : rows_[b]) v[j] -= f * x;
        }
        std::size_t p = 0;
        while (p < n_ && is_zero(v[p])) ++p;
        if (p == n_) return false;
        F inv = F(1) / v[p];
        std::vector<std::pair<std::size_t, F>> sparse;
        for (std::size_t j = p; j < n_; ++j)
            if (!is_zero(v[j])) sparse.emplace_back(j, v[j] * inv);
        rows_.push_back(std::move(sparse));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t n_;
    std::vector<std::vector<std::pair<std::size_t, F>>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Dimension of the algebra spanned by all words in the (non-inverse)
/// generators of the assignment. Starts from the identity and multiplies
/// basis elements on the right by each generator, breadth first, keeping
/// only products independent of everything found so far.
template <class F>
std::size_t algebra_dimension(const Assignment<F>& a) {
    if (a.empty()) throw InvalidArgument("algebra_dimension: empty assignment");
    const std::size_t n = a.begin()->second.rows();
    std::vector<const Matrix<F>*> gens;
    for (const auto& [g, m] : a)
        if (!g.inverse) gens.push_back(&m);

    EchelonBasis<F> basis(n * n);
    auto flat = [](const Matrix<F>& m) { return std::vector<F>(m.data().begin(), m.data().end()); };
    std::vector<Matrix<F>> queue{Matrix<F>::identity(n)};
    basis.insert(flat(queue.front()));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto* g : gens) {
            Matrix<F> next = multiply(queue[head], *g);
            if (basis.insert(flat(next))) queue.push_back(std::move(next));
        }
    }
    return basis.size();
}

/// Block-diagonal sum of several assignments over the same generators.
template <class F>
Assignment<F> direct_sum(const std::vector<Assignment<F>>& parts) {
    if (parts.empty()) throw InvalidArgument("direct_sum of nothing");
    std::size_t total = 0;
    for (const auto& p : parts) total += p.empty() ? 0 : p.begin()->second.rows();
    Assignment<F> out;
    for (const auto& [g, unused] : parts.front()) out.emplace(g, Matrix<F>(total, total));
    std::size_t off = 0;
    for (const auto& p : parts) {
        if (p.size() != parts.front().size()) throw InvalidArgument("direct_sum: generator sets differ");
        std::size_t d = p.begin()->second.rows();
        for (const auto& [g, m] : p) {
            auto it = out.find(g);
            if (it == out.end()) throw InvalidArgument("direct_sum: generator sets differ");
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) it->second(off + i, off + j) = m(i, j);
        }
        off += d;
    }
    return out;
}

/// Extends the assignment with the images of the substitution, evaluated
/// in order.
template <class F>
Assignment<F> apply(const Substitution& s, Assignment<F> a, const Scalars<F>& scalars) {
    for (const auto& [g, image] : s) {
        Evaluator<F> ev(a, scalars);
        ev.require(image);
        Matrix<F> m = ev.eval(image);
        a.insert_or_assign(g, std::move(m));
    }
    return a;
}

}  // namespace qrook
