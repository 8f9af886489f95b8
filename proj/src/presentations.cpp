#include "qrook/presentations.hpp"

#include <string>

namespace qrook {

namespace {

std::string idx(int i) { return std::to_string(i); }
std::string idx(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

RatFunc qq() { return RatFunc::q(); }
const RatFunc& z() { return q_minus_qinv(); }

void require_k(int k, int min, const char* what) {
    if (k < min) throw InvalidArgument(std::string(what) + ": k must be at least " + std::to_string(min));
}

// P_{i+1} expressed through P_i.
Element next_p(const Element& pi, int i) { return qq() * (pi * T(i) * pi - z() * pi); }

}  // namespace

std::vector<Relation> relations_hecke_type_a(int k) {
    std::vector<Relation> out;
    for (int i = 1; i <= k - 1; ++i) out.push_back({"A1[" + idx(i) + "]", T(i) * T(i), z() * T(i) + Element(1)});
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({"A2[" + idx(i) + "]", T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i + 2; j <= k - 1; ++j) out.push_back({"A3[" + idx(i, j) + "]", T(i) * T(j), T(j) * T(i)});
    return out;
}

std::vector<Relation> relations_rook(int k) {
    require_k(k, 1, "relations_rook");
    auto out = relations_hecke_type_a(k);
    for (int i = 1; i <= k; ++i) out.push_back({"R1[" + idx(i) + "]", P(i) * P(i), P(i)});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.push_back({"R2[" + idx(i, j) + "]", P(i) * P(j), P(j) * P(i)});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k - 1; ++j) out.push_back({"R3[" + idx(i, j) + "]", P(i) * T(j), T(j) * P(i)});
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < i; ++j) {
            out.push_back({"R4[" + idx(i, j) + "].left", P(i) * T(j), qq() * P(i)});
            out.push_back({"R4[" + idx(i, j) + "].right", T(j) * P(i), qq() * P(i)});
        }
    for (int i = 1; i <= k - 1; ++i) out.push_back({"R5[" + idx(i) + "]", P(i + 1), next_p(P(i), i)});
    return out;
}

std::vector<Relation> relations_rook_consequences(int k) {
    require_k(k, 1, "relations_rook_consequences");
    std::vector<Relation> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            out.push_back({"absorb[" + idx(i, j) + "].left", P(i) * P(j), P(j)});
            out.push_back({"absorb[" + idx(i, j) + "].right", P(j) * P(i), P(j)});
        }
    if (k >= 2) {
        Element x2 = T(1) * (Element(1) - P(1)) * T(1);
        out.push_back({"P1X2", P(1) * x2, P(1) - P(2)});
    }
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({"R5inv[" + idx(i) + "]", P(i + 1), qq() * P(i) * Tinv(i) * P(i)});
    return out;
}

Element x2_from_x1() { return T(1) * X(1) * T(1); }

std::vector<Relation> relations_Ak_presentation(int k) {
    require_k(k, 2, "relations_Ak_presentation");
    auto out = relations_hecke_type_a(k);
    for (int j = 2; j <= k - 1; ++j) out.push_back({"B1[" + idx(j) + "]", X(1) * T(j), T(j) * X(1)});
    out.push_back({"B2", X(1) * X(1), X(1)});
    out.push_back({"B3", X(1) * T(1) * X(1) * T(1), T(1) * X(1) * T(1) * X(1)});
    Element one(1);
    out.push_back({"B4", (one - X(1)) * (T(1) - Element(qq())) * (one - X(1)) * (one - x2_from_x1()), Element()});
    return out;
}

std::vector<Relation> relations_affine(int k, bool derived) {
    require_k(k, 1, "relations_affine");
    auto out = relations_hecke_type_a(k);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.push_back({"XX[" + idx(i, j) + "]", X(i) * X(j), X(j) * X(i)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({"XT[" + idx(i) + "]", X(i) * T(i), T(i) * X(i + 1) - z() * X(i + 1)});
    if (derived) {
        if (k >= 2) out.push_back({"XTXT", X(1) * T(1) * X(1) * T(1), T(1) * X(1) * T(1) * X(1)});
        for (int i = 2; i <= k; ++i) out.push_back({"Xdef[" + idx(i) + "]", X(i), conjugate_down(X(1), i)});
    }
    return out;
}

std::vector<Relation> relation_affine_mixed_as_printed(int k) {
    std::vector<Relation> out;
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({"XT-printed[" + idx(i) + "]", X(i) * T(i), T(i) * X(i + 1) + z() * X(i)});
    return out;
}

Relation cyclotomic_relation(const std::vector<RatFunc>& u) {
    if (u.empty()) throw InvalidArgument("cyclotomic relation needs at least one parameter");
    Element prod(1);
    for (const auto& ui : u) prod *= X(1) - Element(ui);
    return {"cyclotomic", prod, Element()};
}

std::vector<Relation> relations_cyclotomic(int k, const std::vector<RatFunc>& u) {
    auto out = relations_affine(k);
    out.push_back(cyclotomic_relation(u));
    return out;
}

std::vector<Relation> relations_A_algebra(int k, const RatFunc& u1, const RatFunc& u2, QuadraticConstant constant) {
    require_k(k, 2, "relations_A_algebra");
    if (u2.is_zero()) throw InvalidArgument("relations_A_algebra: u2 must be nonzero");
    std::vector<Relation> out;
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i + 2; j <= k - 1; ++j) out.push_back({"(1)[" + idx(i, j) + "]", T(i) * T(j), T(j) * T(i)});
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({"(2)[" + idx(i) + "]", T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1)});
    Element c = constant == QuadraticConstant::One ? Element(1) : Element(qq());
    for (int i = 1; i <= k - 1; ++i) out.push_back({"(3)[" + idx(i) + "]", T(i) * T(i), z() * T(i) + c});
    out.push_back({"(4)", X(1) * T(1) * X(1) * T(1), T(1) * X(1) * T(1) * X(1)});
    out.push_back({"(5)", (X(1) - Element(u1)) * (X(1) - Element(u2)), Element()});
    out.push_back({"(6)", ideal_generator_p(u1, u2), Element()});
    return out;
}

std::vector<Relation> relations_Bprime(int k) {
    require_k(k, 2, "relations_Bprime");
    Element p1 = Element(1) - X(1);
    Element p2 = next_p(p1, 1);
    std::vector<Relation> out;
    for (int j = 2; j <= k - 1; ++j) out.push_back({"B1'[" + idx(j) + "]", p1 * T(j), T(j) * p1});
    out.push_back({"B2'", p1 * p1, p1});
    out.push_back({"B3'", p2 * T(1), T(1) * p2});
    out.push_back({"B4'", p2 * p2, p2});
    return out;
}

Substitution map_P_to_X(int k) {
    require_k(k, 1, "map_P_to_X");
    Substitution s;
    for (int i = 1; i <= k; ++i) s.emplace_back(Gen{GenKind::X, i, false}, conjugate_down(Element(1) - P(1), i));
    return s;
}

Substitution map_X_to_P(int k) {
    require_k(k, 1, "map_X_to_P");
    Substitution s;
    s.emplace_back(Gen{GenKind::P, 1, false}, Element(1) - X(1));
    for (int i = 1; i <= k - 1; ++i) s.emplace_back(Gen{GenKind::P, i + 1, false}, next_p(P(i), i));
    return s;
}

Element ideal_generator_p(const RatFunc& u1, const RatFunc& u2) {
    Element x2 = x2_from_x1();
    if (!u1.is_zero())
        return (X(1) - Element(u2)) * (x2 - Element(u2)) * (x2 - Element(qq() * qq() * u1));
    return (X(1) - Element(u2)) * (T(1) - Element(qq())) * (X(1) - Element(u2)) * (x2 - Element(u2));
}

RatFunc ideal_generator_scalar(const RatFunc& u1, const RatFunc& u2) {
    const RatFunc qinv = RatFunc::q_power(-1);
    if (!u1.is_zero()) {
        RatFunc qm2 = qinv * qinv;
        return (u1 - u2) * (qm2 * u1 - u2) * (qm2 * u1 - qq() * qq() * u1);
    }
    RatFunc zero;
    return (zero - u2) * (-qinv - qq()) * (zero - u2) * (zero - u2);
}

namespace {

void require_q0(const std::optional<Rational>& q0) {
    if (q0 && sgn(*q0) == 0) throw InvalidArgument("q0 must be nonzero");
}

bool factorial_nonzero(int k, const std::optional<Rational>& q0) {
    if (!q0) return true;
    for (int i = 1; i <= k; ++i)
        if (is_zero(specialize(quantum_integer(i), *q0))) return false;
    return true;
}

// q^{2d} a == b for some -k < d < k.
bool shifted_equal(int k, const RatFunc& a, const RatFunc& b, const std::optional<Rational>& q0) {
    for (int d = -(k - 1); d <= k - 1; ++d) {
        RatFunc lhs = RatFunc::q_power(2 * d) * a;
        if (q0 ? specialize(lhs, *q0) == specialize(b, *q0) : lhs == b) return true;
    }
    return false;
}

}  // namespace

bool semisimple_cyclotomic(int k, const std::vector<RatFunc>& u, const std::optional<Rational>& q0) {
    require_q0(q0);
    require_k(k, 1, "semisimple_cyclotomic");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (shifted_equal(k, u[i], u[j], q0)) return false;
    return factorial_nonzero(k, q0);
}

bool semisimple_A(int k, const RatFunc& u1, const RatFunc& u2, const std::optional<Rational>& q0) {
    require_q0(q0);
    require_k(k, 1, "semisimple_A");
    if (shifted_equal(k, u1, u2, q0)) return false;
    return factorial_nonzero(k, q0);
}

bool semisimple_rook(int k, const std::optional<Rational>& q0) {
    require_q0(q0);
    require_k(k, 0, "semisimple_rook");
    return factorial_nonzero(k, q0);
}

Assignment<RatFunc> indecomposable_witness(int k, const RatFunc& u1) {
    require_k(k, 1, "indecomposable_witness");
    Assignment<RatFunc> a;
    Matrix<RatFunc> x(2, 2);
    x(0, 0) = u1;
    x(0, 1) = RatFunc(1);
    x(1, 1) = u1;
    a.emplace(Gen{GenKind::X, 1, false}, std::move(x));
    for (int i = 1; i <= k - 1; ++i) a.emplace(Gen{GenKind::T, i, false}, Matrix<RatFunc>::scalar(2, qq()));
    return a;
}

bool first_line_invariant(const Assignment<RatFunc>& a) {
    for (const auto& [g, m] : a) {
        if (m.rows() != 2) throw InvalidArgument("first_line_invariant expects 2x2 matrices");
        if (!m(1, 0).is_zero()) return false;
    }
    return true;
}

bool first_line_has_invariant_complement(const Assignment<RatFunc>& a) {
    if (!first_line_invariant(a)) throw InvalidArgument("first basis line is not invariant");
    // A complement is spanned by (x, 1); each generator m then needs
    // (m11 - m00) x = m01.
    std::optional<RatFunc> x;
    for (const auto& [g, m] : a) {
        RatFunc coeff = m(1, 1) - m(0, 0);
        const RatFunc& rhs = m(0, 1);
        if (coeff.is_zero()) {
            if (!rhs.is_zero()) return false;
            continue;
        }
        RatFunc sol = rhs / coeff;
        if (x && *x != sol) return false;
        x = sol;
    }
    return true;
}

}  // namespace qrook
