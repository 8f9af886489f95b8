#pragma once

#include <optional>
#include <vector>

#include "qrook/words.hpp"

namespace qrook {

// Relation suites. Index ranges follow the usual conventions: quadratic
// relations for 1 <= i <= k-1, braid for 1 <= i <= k-2, distant
// commutation for |i-j| > 1.

/// Quadratic, braid and commutation relations among T_1..T_{k-1}.
std::vector<Relation> relations_hecke_type_a(int k);

/// Rook monoid algebra in P/T generators: A1-A3 and R1-R5, with R5 in its
/// expanded form P_{i+1} = q(P_i T_i P_i - (q - q^{-1}) P_i).
std::vector<Relation> relations_rook(int k);

/// Relations that follow from the rook presentation: the absorption law
/// P_i P_j = P_j P_i = P_j (i <= j), P_1 X_2 = P_1 - P_2 with
/// X_2 = T_1 (1 - P_1) T_1, and P_{i+1} = q P_i T_i^{-1} P_i.
std::vector<Relation> relations_rook_consequences(int k);

/// The X_1/T presentation: A1-A3 and B1-B4, X_2 = T_1 X_1 T_1. Needs k >= 2.
std::vector<Relation> relations_Ak_presentation(int k);

/// Affine Hecke algebra on X_1..X_k and T_1..T_{k-1}.
/// The mixed relation is X_i T_i = T_i X_{i+1} - (q - q^{-1}) X_{i+1}; see
/// relation_affine_mixed_as_printed for the other sign convention.
/// With derived = true the list also carries X_1 T_1 X_1 T_1 = T_1 X_1 T_1 X_1
/// and X_i = T_{i-1}...T_1 X_1 T_1...T_{i-1}.
std::vector<Relation> relations_affine(int k, bool derived = true);

/// X_i T_i = T_i X_{i+1} + (q - q^{-1}) X_i for 1 <= i <= k-1. It is not
/// satisfied by the calibrated modules; kept as a negative control.
std::vector<Relation> relation_affine_mixed_as_printed(int k);

/// (X_1 - u_1)...(X_1 - u_r) = 0.
Relation cyclotomic_relation(const std::vector<RatFunc>& u);

/// Affine relations plus the cyclotomic relation. Needs r >= 1.
std::vector<Relation> relations_cyclotomic(int k, const std::vector<RatFunc>& u);

enum class QuadraticConstant { One, Q };

/// The A_k(u1, u2; q) list on X_1, T_i. The quadratic relation uses the
/// constant term 1 unless QuadraticConstant::Q is requested. Needs k >= 2
/// and u2 != 0.
std::vector<Relation> relations_A_algebra(int k, const RatFunc& u1, const RatFunc& u2,
                                          QuadraticConstant constant = QuadraticConstant::One);

/// B1'-B4' on X_1 and T_i, with P_1 and P_2 written out through X_1.
std::vector<Relation> relations_Bprime(int k);

/// X_i -> T_{i-1}...T_1 (1 - P_1) T_1...T_{i-1} for 1 <= i <= k.
Substitution map_P_to_X(int k);
/// P_1 -> 1 - X_1, P_{i+1} -> q(P_i T_i P_i - (q - q^{-1}) P_i).
Substitution map_X_to_P(int k);

/// X_2 = T_1 X_1 T_1.
Element x2_from_x1();

/// Generator of the minimal ideal labelled ((1^2), empty) in H_2(u1, u2; q).
Element ideal_generator_p(const RatFunc& u1, const RatFunc& u2);

/// Scalar by which p acts on the ((1^2), empty) module.
RatFunc ideal_generator_scalar(const RatFunc& u1, const RatFunc& u2);

// Semisimplicity. q0 = nullopt means generic q; the u_i are then compared
// as rational functions. A concrete q0 must be nonzero.

bool semisimple_cyclotomic(int k, const std::vector<RatFunc>& u, const std::optional<Rational>& q0);
bool semisimple_A(int k, const RatFunc& u1, const RatFunc& u2, const std::optional<Rational>& q0);
bool semisimple_rook(int k, const std::optional<Rational>& q0);

/// 2-dimensional module with X_1 = [[u1, 1], [0, u1]] and T_i = q I.
Assignment<RatFunc> indecomposable_witness(int k, const RatFunc& u1);

/// For a 2-dimensional assignment: whether the line spanned by the first
/// basis vector is invariant under every generator.
bool first_line_invariant(const Assignment<RatFunc>& a);
/// Whether some invariant line meets the first basis line trivially.
/// Requires first_line_invariant.
bool first_line_has_invariant_complement(const Assignment<RatFunc>& a);

}  // namespace qrook
