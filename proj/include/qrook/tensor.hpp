#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qrook/presentations.hpp"
#include "qrook/words.hpp"

namespace qrook {

/// V = V_1 + ... + V_r with dim V_j = m_j. Basis vectors are numbered
/// 1..n and each V_j occupies a contiguous run, V_1 first.
class GradedBasis {
public:
    explicit GradedBasis(std::vector<int> dims);

    int n() const { return n_; }
    int r() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    /// Component of basis vector v_j, 1-based in both.
    int degree(int j) const;

private:
    std::vector<int> dims_;
    std::vector<int> degree_;
    int n_ = 0;
};

/// The n-dimensional fundamental module: e_i v_{i+1} = v_i,
/// f_i v_i = v_{i+1}, q^{+-eps_i} v_i = q^{+-1} v_i, all else zero or fixed.
struct FundamentalModule {
    int n = 0;
    std::vector<Matrix<RatFunc>> e;     // e[i-1] for 1 <= i <= n-1
    std::vector<Matrix<RatFunc>> f;
    std::vector<Matrix<RatFunc>> k;     // q^{eps_i}, k[i-1] for 1 <= i <= n
    std::vector<Matrix<RatFunc>> kinv;  // q^{-eps_i}
};

FundamentalModule build_V(int n);

/// Residual check of e_i f_j - f_j e_i = delta_ij (K - K^{-1})/(q - q^{-1})
/// with K = q^{eps_i - eps_{i+1}}; true when every pair holds exactly.
bool check_commutator_relation(const FundamentalModule& v);

/// Index of v_a (x) v_b in the row-major basis of V (x) V; a, b are 1-based.
std::size_t pair_index(int n, int a, int b);

/// n^2 x n^2 braiding on V (x) V:
///   v_i (x) v_i -> q v_i (x) v_i,
///   v_i (x) v_j -> v_j (x) v_i                          (i > j),
///   v_i (x) v_j -> v_j (x) v_i + (q - q^{-1}) v_i (x) v_j  (i < j).
Matrix<RatFunc> rmatrix(int n);
/// rmatrix(n) - (q - q^{-1}) I, the inverse by the quadratic relation.
Matrix<RatFunc> rmatrix_inv(int n);
/// Flip v (x) w -> w (x) v.
Matrix<RatFunc> flip(int n);

/// rmatrix on equal-degree pairs, flip on the others.
Matrix<RatFunc> smatrix(const GradedBasis& basis);
/// Diagonal: v -> u_j v for v in V_j. Needs |u| = r.
Matrix<RatFunc> dop(const GradedBasis& basis, const std::vector<RatFunc>& u);

/// I_{n^{pos-1}} (x) local (x) I on k tensor factors; local acts on
/// `width` consecutive factors starting at pos (1-based).
Matrix<RatFunc> embed(const Matrix<RatFunc>& local, int n, int k, int pos, int width);

/// T_i -> R_i for 1 <= i <= k-1,
/// X_1 -> R_1^{-1}...R_{k-1}^{-1} S_{k-1}...S_1 d_1,
/// and X_{i+1} = T_i X_i T_i for the remaining X's.
Assignment<RatFunc> phiP(int k, const GradedBasis& basis, const std::vector<RatFunc>& u);

/// d_1 on V^{(x)k}.
Matrix<RatFunc> d1_operator(int k, const GradedBasis& basis, const std::vector<RatFunc>& u);

struct PhiReport {
    VerifyReport cyclotomic;
    /// Only for the rook setting r = 2, m_1 = 1, u = (0, 1) and k >= 2.
    std::optional<VerifyReport> a_algebra;
    /// Only in the rook setting.
    std::optional<bool> x1_equals_d1;

    bool pass() const {
        return cyclotomic.pass() && (!a_algebra || a_algebra->pass()) && (!x1_equals_d1 || *x1_equals_d1);
    }
};

bool is_rook_setting(const GradedBasis& basis, const std::vector<RatFunc>& u);

PhiReport verify_phiP(int k, const GradedBasis& basis, const std::vector<RatFunc>& u);
/// Same as verify_phiP with a prebuilt assignment, e.g. a corrupted one.
PhiReport verify_phiP(const Assignment<RatFunc>& a, int k, const GradedBasis& basis, const std::vector<RatFunc>& u);

/// Candidate coproducts on the generators, with K_i = q^{eps_i - eps_{i+1}}:
///   "e(x)K+1(x)e":  e -> e (x) K + 1 (x) e,  f -> f (x) 1 + K^{-1} (x) f
///   "e(x)1+K(x)e":  e -> e (x) 1 + K (x) e,  f -> f (x) K^{-1} + 1 (x) f
/// and q^{eps} -> q^{eps} (x) q^{eps} in both.
struct CoproductReport {
    std::string convention;
    std::vector<std::string> candidates;
    /// One entry per generator and candidate: "name:candidate" -> commutes.
    std::vector<std::pair<std::string, bool>> checks;
};

/// Picks the candidate whose coproduct commutes with rmatrix(n) on V (x) V.
/// Throws ConventionNotFound if neither does.
CoproductReport intertwiner_fix_coproduct(int n);

/// Dimension of the algebra generated by phiP(T_i) and phiP(X_1), either
/// over Q(q) or after setting q = q0.
std::size_t centralizer_dimension(int k, const GradedBasis& basis, const std::vector<RatFunc>& u,
                                  const std::optional<Rational>& q0 = std::nullopt);

/// sum of d_lambda^2 over r-tuples with k boxes and lambda^(j) of length
/// at most m_j.
std::size_t predicted_centralizer_dimension(int k, const GradedBasis& basis);

}  // namespace qrook
