#include "qrook/rook.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qrook {

int PartialInjection::rank() const {
    return static_cast<int>(std::count_if(image.begin(), image.end(), [](int y) { return y != 0; }));
}

PartialInjection PartialInjection::identity(int k) { return partial_identity(k, 1); }

PartialInjection PartialInjection::zero(int k) {
    if (k < 0) throw InvalidArgument("negative size");
    return {std::vector<int>(static_cast<std::size_t>(k), 0)};
}

PartialInjection PartialInjection::transposition(int k, int i) {
    if (i < 1 || i >= k) throw InvalidArgument("transposition index out of range");
    auto p = identity(k);
    std::swap(p.image[static_cast<std::size_t>(i - 1)], p.image[static_cast<std::size_t>(i)]);
    return p;
}

PartialInjection PartialInjection::partial_identity(int k, int from) {
    auto p = zero(k);
    for (int x = std::max(from, 1); x <= k; ++x) p.image[static_cast<std::size_t>(x - 1)] = x;
    return p;
}

std::string PartialInjection::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (i) s += ",";
        s += image[i] ? std::to_string(image[i]) : "-";
    }
    return s + "]";
}

void validate(const PartialInjection& p) {
    std::vector<bool> seen(p.image.size() + 1, false);
    for (int y : p.image) {
        if (y < 0 || y > p.size()) throw InvalidArgument("partial injection value out of range");
        if (y == 0) continue;
        if (seen[static_cast<std::size_t>(y)]) throw InvalidArgument("partial injection is not injective");
        seen[static_cast<std::size_t>(y)] = true;
    }
}

PartialInjection compose(const PartialInjection& a, const PartialInjection& b) {
    if (a.size() != b.size()) throw InvalidArgument("compose: size mismatch");
    auto out = PartialInjection::zero(a.size());
    for (std::size_t x = 0; x < b.image.size(); ++x) {
        int y = b.image[x];
        if (y) out.image[x] = a.image[static_cast<std::size_t>(y - 1)];
    }
    return out;
}

Matrix<Rational> to_matrix(const PartialInjection& p) {
    const auto k = static_cast<std::size_t>(p.size());
    Matrix<Rational> m(k, k);
    for (std::size_t j = 0; j < k; ++j)
        if (p.image[j]) m(static_cast<std::size_t>(p.image[j] - 1), j) = 1;
    return m;
}

namespace {

void extend(int k, std::size_t pos, std::vector<bool>& used, PartialInjection& cur, std::vector<PartialInjection>& out) {
    if (pos == static_cast<std::size_t>(k)) {
        out.push_back(cur);
        return;
    }
    for (int y = 0; y <= k; ++y) {
        if (y && used[static_cast<std::size_t>(y)]) continue;
        cur.image[pos] = y;
        if (y) used[static_cast<std::size_t>(y)] = true;
        extend(k, pos + 1, used, cur, out);
        if (y) used[static_cast<std::size_t>(y)] = false;
    }
    cur.image[pos] = 0;
}

}  // namespace

std::vector<PartialInjection> enumerate_rook(int k) {
    if (k < 0) throw InvalidArgument("enumerate_rook: k must be nonnegative");
    std::vector<PartialInjection> out;
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    auto cur = PartialInjection::zero(k);
    extend(k, 0, used, cur, out);
    return out;
}

Integer rook_count_formula(int k) {
    if (k < 0) throw InvalidArgument("rook_count_formula: k must be nonnegative");
    Integer total = 0;
    for (int i = 0; i <= k; ++i) {
        Integer c, f;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
        total += c * c * f;
    }
    return total;
}

std::vector<std::pair<Gen, PartialInjection>> generator_injections(int k) {
    if (k < 1) throw InvalidArgument("generators need k >= 1");
    std::vector<std::pair<Gen, PartialInjection>> out;
    for (int i = 1; i < k; ++i) out.emplace_back(Gen{GenKind::T, i, false}, PartialInjection::transposition(k, i));
    for (int i = 1; i <= k; ++i) out.emplace_back(Gen{GenKind::P, i, false}, PartialInjection::partial_identity(k, i + 1));
    return out;
}

Assignment<Rational> generators_q1(int k) {
    Assignment<Rational> a;
    for (const auto& [g, p] : generator_injections(k)) a.emplace(g, to_matrix(p));
    return a;
}

std::vector<PartialInjection> monoid_closure(int k) {
    if (k == 0) return {PartialInjection::identity(0)};
    auto gens = generator_injections(k);
    std::set<PartialInjection> seen{PartialInjection::identity(k)};
    std::vector<PartialInjection> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& [g, p] : gens) {
            auto next = compose(queue[head], p);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    return {seen.begin(), seen.end()};
}

Assignment<Rational> regular_representation(int k) {
    auto basis = enumerate_rook(k);
    std::map<PartialInjection, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
    Assignment<Rational> a;
    for (const auto& [g, p] : generator_injections(k)) {
        Matrix<Rational> m(basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) m(index.at(compose(p, basis[j])), j) = 1;
        a.emplace(g, std::move(m));
    }
    return a;
}

std::size_t monoid_algebra_dimension(int k) { return monoid_closure(k).size(); }

}  // namespace qrook
