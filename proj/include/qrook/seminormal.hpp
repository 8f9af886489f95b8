#pragma once

#include <cstddef>
#include <vector>

#include "qrook/shapes.hpp"
#include "qrook/words.hpp"

namespace qrook {

/// How the diagonal coefficient (T_i)_{LL} is computed.
enum class DiagonalRule {
    /// Always c2 (q - q^{-1}) / (c2 - c1) with c1 = CT(L(i)), c2 = CT(L(i+1)).
    Quotient,
    /// q in a common row, -q^{-1} in a common column of one component,
    /// the quotient otherwise.
    ThreeCase,
};

/// Seminormal module: basis v_L over standard tableaux L in canonical order,
/// X_i diagonal with entry CT(L(i)), and
///   T_i v_L = (T_i)_{LL} v_L + (q^{-1} + (T_i)_{LL}) v_{s_i L},
/// where the second term is dropped when s_i L is not standard.
struct Representation {
    Shape shape;
    int k = 0;
    ContentRule rule;
    DiagonalRule diagonal = DiagonalRule::Quotient;
    std::vector<StandardTableau> basis;
    /// X_1..X_k and T_1..T_{k-1}; columns are images of basis vectors.
    Assignment<RatFunc> matrices;

    std::size_t dim() const { return basis.size(); }
    const Matrix<RatFunc>& X(int i) const { return matrices.at({GenKind::X, i, false}); }
    const Matrix<RatFunc>& T(int i) const { return matrices.at({GenKind::T, i, false}); }
};

/// Generic builder behind the three named constructions below.
/// Throws DegenerateContent when the quotient formula divides by zero.
Representation seminormal_module(const Shape& shape, const ContentRule& rule, DiagonalRule diagonal);

/// Calibrated module of the affine Hecke algebra on the skew shape,
/// contents q^{2(c-r)}. k must equal the number of boxes.
Representation calibrated_skew_module(const SkewShape& shape, int k);

/// Irreducible module of the cyclotomic Hecke algebra for an r-tuple of
/// partitions; contents u_i q^{2(c-r)}. Requires |u| = r.
Representation cyclotomic_module(const MultiPartition& lambda, const std::vector<RatFunc>& u);

/// One module per shape, built in parallel; order follows the input.
std::vector<Representation> cyclotomic_modules(const std::vector<MultiPartition>& shapes, const std::vector<RatFunc>& u);

/// The skew module (k-1, d)/(d-1) with contents u_1 q^{2(c-r)+2}: a module
/// for H_k(u_1, q^{2d} u_1; q) of dimension C(k, d) - 1. Needs 1 <= d < k.
Representation shifted_skew_module(int k, int d, const RatFunc& u1);

struct RestrictionBlock {
    /// Box holding k in every tableau of the block.
    Box removed;
    /// Shape with that box removed.
    Shape shape;
    /// Basis indices of the block, increasing.
    std::vector<std::size_t> indices;
};

/// Splits the basis by the shape left after deleting entry k. Blocks are
/// ordered by the removed box.
std::vector<RestrictionBlock> restrict(const Representation& rep);

/// Generators of the (k-1)-level algebra restricted to a block.
Assignment<RatFunc> block_assignment(const Representation& rep, const RestrictionBlock& block);

}  // namespace qrook
