#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qrook/intpoly.hpp"
#include "qrook/words.hpp"

namespace qrook {

/// Injective partial map on {1..k}. image[x-1] is the image of x, or 0
/// when x is outside the domain.
///
/// The matching rook matrix has a 1 in row image[j-1], column j, so that
/// matrix products correspond to composition.
struct PartialInjection {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int rank() const;

    static PartialInjection identity(int k);
    static PartialInjection zero(int k);
    /// Swaps i and i+1.
    static PartialInjection transposition(int k, int i);
    /// Identity on {from..k}, undefined below.
    static PartialInjection partial_identity(int k, int from);

    std::string to_string() const;
    friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;
};

/// Throws InvalidArgument for a non-injective or out-of-range image.
void validate(const PartialInjection& p);

/// a after b: x -> a(b(x)) wherever both are defined.
PartialInjection compose(const PartialInjection& a, const PartialInjection& b);

Matrix<Rational> to_matrix(const PartialInjection& p);

/// All partial injections of {1..k}, lexicographic in the image vector.
std::vector<PartialInjection> enumerate_rook(int k);

/// sum_i C(k,i)^2 i!.
Integer rook_count_formula(int k);

/// Matrices at q = 1: T_i swaps rows i and i+1, P_i = E_{i+1,i+1}+...+E_{k,k}.
Assignment<Rational> generators_q1(int k);

/// The generators of generators_q1 as partial injections.
std::vector<std::pair<Gen, PartialInjection>> generator_injections(int k);

/// Every product of generator injections, the identity included.
std::vector<PartialInjection> monoid_closure(int k);

/// Left multiplication by each generator on the basis enumerate_rook(k).
Assignment<Rational> regular_representation(int k);

/// Size of the monoid generated at q = 1. Equals the dimension of its
/// monoid algebra since monoid elements form a basis.
std::size_t monoid_algebra_dimension(int k);

}  // namespace qrook
