#include "qrook/tensor.hpp"

#include <algorithm>

#include "qrook/shapes.hpp"

namespace qrook {

GradedBasis::GradedBasis(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidArgument("graded basis needs at least one component");
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        if (dims_[j] < 0) throw InvalidArgument("component dimensions must be nonnegative");
        for (int c = 0; c < dims_[j]; ++c) degree_.push_back(static_cast<int>(j) + 1);
    }
    n_ = static_cast<int>(degree_.size());
    if (n_ == 0) throw InvalidArgument("graded basis has total dimension 0");
}

int GradedBasis::degree(int j) const {
    if (j < 1 || j > n_) throw InvalidArgument("basis index out of range");
    return degree_[static_cast<std::size_t>(j - 1)];
}

FundamentalModule build_V(int n) {
    if (n < 1) throw InvalidArgument("build_V: n must be positive");
    const auto sz = static_cast<std::size_t>(n);
    FundamentalModule v;
    v.n = n;
    for (int i = 1; i < n; ++i) {
        Matrix<RatFunc> e(sz, sz), f(sz, sz);
        e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = 1;
        f(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
        v.e.push_back(std::move(e));
        v.f.push_back(std::move(f));
    }
    for (int i = 1; i <= n; ++i) {
        auto k = Matrix<RatFunc>::identity(sz);
        auto kinv = Matrix<RatFunc>::identity(sz);
        k(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = RatFunc::q();
        kinv(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = RatFunc::q_power(-1);
        v.k.push_back(std::move(k));
        v.kinv.push_back(std::move(kinv));
    }
    return v;
}

bool check_commutator_relation(const FundamentalModule& v) {
    const auto sz = static_cast<std::size_t>(v.n);
    const RatFunc inv_z = rf_inv(q_minus_qinv());
    for (int i = 1; i < v.n; ++i)
        for (int j = 1; j < v.n; ++j) {
            const auto& e = v.e[static_cast<std::size_t>(i - 1)];
            const auto& f = v.f[static_cast<std::size_t>(j - 1)];
            Matrix<RatFunc> lhs = e * f - f * e;
            Matrix<RatFunc> rhs(sz, sz);
            if (i == j) {
                auto ki = static_cast<std::size_t>(i - 1);
                Matrix<RatFunc> kk = v.k[ki] * v.kinv[ki + 1];
                Matrix<RatFunc> kk_inv = v.kinv[ki] * v.k[ki + 1];
                rhs = (kk - kk_inv) * inv_z;
            }
            if (lhs != rhs) return false;
        }
    return true;
}

std::size_t pair_index(int n, int a, int b) {
    return static_cast<std::size_t>((a - 1) * n + (b - 1));
}

Matrix<RatFunc> rmatrix(int n) {
    if (n < 1) throw InvalidArgument("rmatrix: n must be positive");
    const auto sz = static_cast<std::size_t>(n * n);
    Matrix<RatFunc> r(sz, sz);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto col = pair_index(n, i, j);
            if (i == j) {
                r(col, col) = RatFunc::q();
                continue;
            }
            r(pair_index(n, j, i), col) = 1;
            if (i < j) r(col, col) = q_minus_qinv();
        }
    return r;
}

Matrix<RatFunc> rmatrix_inv(int n) {
    auto r = rmatrix(n);
    return r - Matrix<RatFunc>::scalar(r.rows(), q_minus_qinv());
}

Matrix<RatFunc> flip(int n) {
    const auto sz = static_cast<std::size_t>(n * n);
    Matrix<RatFunc> s(sz, sz);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) s(pair_index(n, j, i), pair_index(n, i, j)) = 1;
    return s;
}

Matrix<RatFunc> smatrix(const GradedBasis& basis) {
    const int n = basis.n();
    auto r = rmatrix(n);
    auto s = flip(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (basis.degree(i) != basis.degree(j)) continue;
            const auto col = pair_index(n, i, j);
            for (std::size_t row = 0; row < s.rows(); ++row) s(row, col) = r(row, col);
        }
    return s;
}

Matrix<RatFunc> dop(const GradedBasis& basis, const std::vector<RatFunc>& u) {
    if (static_cast<int>(u.size()) != basis.r()) throw InvalidArgument("dop: need one u parameter per component");
    const auto sz = static_cast<std::size_t>(basis.n());
    Matrix<RatFunc> d(sz, sz);
    for (int j = 1; j <= basis.n(); ++j)
        d(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) = u[static_cast<std::size_t>(basis.degree(j) - 1)];
    return d;
}

namespace {

std::size_t ipow(int base, int e) {
    std::size_t out = 1;
    for (int i = 0; i < e; ++i) out *= static_cast<std::size_t>(base);
    return out;
}

}  // namespace

Matrix<RatFunc> embed(const Matrix<RatFunc>& local, int n, int k, int pos, int width) {
    if (pos < 1 || pos + width - 1 > k) throw InvalidArgument("embed: position out of range");
    if (local.rows() != ipow(n, width)) throw InvalidArgument("embed: local operator has the wrong size");
    auto left = Matrix<RatFunc>::identity(ipow(n, pos - 1));
    auto right = Matrix<RatFunc>::identity(ipow(n, k - pos - width + 1));
    return kronecker(kronecker(left, local), right);
}

Matrix<RatFunc> d1_operator(int k, const GradedBasis& basis, const std::vector<RatFunc>& u) {
    return embed(dop(basis, u), basis.n(), k, 1, 1);
}

Assignment<RatFunc> phiP(int k, const GradedBasis& basis, const std::vector<RatFunc>& u) {
    if (k < 1) throw InvalidArgument("phiP: k must be positive");
    const int n = basis.n();
    const auto r = rmatrix(n);
    const auto rinv = rmatrix_inv(n);
    const auto s = smatrix(basis);

    Assignment<RatFunc> a;
    std::vector<Matrix<RatFunc>> t;
    Matrix<RatFunc> x = d1_operator(k, basis, u);
    for (int i = 1; i < k; ++i) {
        t.push_back(embed(r, n, k, i, 2));
        x = embed(s, n, k, i, 2) * x;
    }
    for (int i = k - 1; i >= 1; --i) x = embed(rinv, n, k, i, 2) * x;

    for (int i = 1; i < k; ++i) a.emplace(Gen{GenKind::T, i, false}, t[static_cast<std::size_t>(i - 1)]);
    a.emplace(Gen{GenKind::X, 1, false}, x);
    for (int i = 1; i < k; ++i) {
        const auto& ti = t[static_cast<std::size_t>(i - 1)];
        x = ti * x * ti;
        a.emplace(Gen{GenKind::X, i + 1, false}, x);
    }
    return a;
}

bool is_rook_setting(const GradedBasis& basis, const std::vector<RatFunc>& u) {
    return basis.r() == 2 && basis.dims()[0] == 1 && u.size() == 2 && u[0].is_zero() && u[1].is_one();
}

PhiReport verify_phiP(const Assignment<RatFunc>& a, int k, const GradedBasis& basis, const std::vector<RatFunc>& u) {
    PhiReport rep;
    rep.cyclotomic = verify(a, relations_cyclotomic(k, u));
    if (is_rook_setting(basis, u)) {
        if (k >= 2) rep.a_algebra = verify(a, relations_A_algebra(k, RatFunc(0), RatFunc(1)));
        rep.x1_equals_d1 = a.at(Gen{GenKind::X, 1, false}) == d1_operator(k, basis, u);
    }
    return rep;
}

PhiReport verify_phiP(int k, const GradedBasis& basis, const std::vector<RatFunc>& u) {
    return verify_phiP(phiP(k, basis, u), k, basis, u);
}

CoproductReport intertwiner_fix_coproduct(int n) {
    if (n < 2) throw InvalidArgument("intertwiner_fix_coproduct: n must be at least 2");
    const auto v = build_V(n);
    const auto r = rmatrix(n);
    const auto id = Matrix<RatFunc>::identity(static_cast<std::size_t>(n));

    struct Candidate {
        std::string name;
        bool e_right;  // e (x) K + 1 (x) e when true, e (x) 1 + K (x) e otherwise
    };
    const std::vector<Candidate> candidates{{"e(x)K+1(x)e", true}, {"e(x)1+K(x)e", false}};

    CoproductReport rep;
    for (const auto& c : candidates) rep.candidates.push_back(c.name);

    for (const auto& c : candidates) {
        bool all = true;
        auto record = [&](const std::string& gen, const Matrix<RatFunc>& delta) {
            bool ok = r * delta == delta * r;
            rep.checks.emplace_back(gen + ":" + c.name, ok);
            all = all && ok;
        };
        for (int i = 1; i < n; ++i) {
            auto ii = static_cast<std::size_t>(i - 1);
            Matrix<RatFunc> kk = v.k[ii] * v.kinv[ii + 1];
            Matrix<RatFunc> kk_inv = v.kinv[ii] * v.k[ii + 1];
            const auto& e = v.e[ii];
            const auto& f = v.f[ii];
            Matrix<RatFunc> de = c.e_right ? kronecker(e, kk) + kronecker(id, e) : kronecker(e, id) + kronecker(kk, e);
            Matrix<RatFunc> df = c.e_right ? kronecker(f, id) + kronecker(kk_inv, f) : kronecker(f, kk_inv) + kronecker(id, f);
            record("e" + std::to_string(i), de);
            record("f" + std::to_string(i), df);
        }
        for (int i = 1; i <= n; ++i) {
            auto ii = static_cast<std::size_t>(i - 1);
            record("K" + std::to_string(i), kronecker(v.k[ii], v.k[ii]));
            record("Kinv" + std::to_string(i), kronecker(v.kinv[ii], v.kinv[ii]));
        }
        if (all && rep.convention.empty()) rep.convention = c.name;
    }
    if (rep.convention.empty()) throw ConventionNotFound("no candidate coproduct commutes with the R-matrix");
    return rep;
}

std::size_t centralizer_dimension(int k, const GradedBasis& basis, const std::vector<RatFunc>& u,
                                  const std::optional<Rational>& q0) {
    auto full = phiP(k, basis, u);
    Assignment<RatFunc> gens;
    for (auto& [g, m] : full)
        if (g.kind == GenKind::T || g.index == 1) gens.emplace(g, std::move(m));
    if (q0) return algebra_dimension(specialize(gens, *q0));
    return algebra_dimension(gens);
}

std::size_t predicted_centralizer_dimension(int k, const GradedBasis& basis) {
    std::size_t total = 0;
    for (const auto& lam : index_set_H(k, basis.r())) {
        bool fits = true;
        for (int j = 1; j <= basis.r(); ++j) fits = fits && lam.component(j).length() <= basis.dims()[static_cast<std::size_t>(j - 1)];
        if (!fits) continue;
        auto d = count_standard_tableaux(lam);
        total += d * d;
    }
    return total;
}

}  // namespace qrook
