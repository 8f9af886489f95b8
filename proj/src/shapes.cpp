#include "qrook/shapes.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "qrook/errors.hpp"

namespace qrook {

// --- Partition ---------------------------------------------------------------

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw InvalidArgument("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) throw InvalidArgument("partition rows must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int r = 1; r <= other.length(); ++r)
        if (other.row(r) > row(r)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
    return s + "]";
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!outer.contains(inner)) throw InvalidArgument("skew shape: inner partition not contained in outer");
}

std::string SkewShape::to_string() const {
    if (inner.empty()) return outer.to_string();
    return outer.to_string() + "/" + inner.to_string();
}

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidArgument("multipartition needs at least one component");
}

int MultiPartition::size() const {
    int n = 0;
    for (const auto& p : components_) n += p.size();
    return n;
}

bool MultiPartition::contains(const MultiPartition& other) const {
    if (other.r() != r()) return false;
    for (int i = 1; i <= r(); ++i)
        if (!component(i).contains(other.component(i))) return false;
    return true;
}

std::string MultiPartition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < components_.size(); ++i) s += (i ? "," : "") + components_[i].to_string();
    return s + "]";
}

// --- shapes as box sets ------------------------------------------------------

int shape_size(const Shape& s) {
    return std::visit([](const auto& x) { return x.size(); }, s);
}

std::string shape_to_string(const Shape& s) {
    return std::visit([](const auto& x) { return x.to_string(); }, s);
}

std::vector<Box> boxes(const Shape& s) {
    std::vector<Box> out;
    if (const auto* sk = std::get_if<SkewShape>(&s)) {
        for (int r = 1; r <= sk->outer.length(); ++r)
            for (int c = sk->inner.row(r) + 1; c <= sk->outer.row(r); ++c) out.push_back({0, r, c});
    } else {
        const auto& mp = std::get<MultiPartition>(s);
        for (int i = 1; i <= mp.r(); ++i)
            for (int r = 1; r <= mp.component(i).length(); ++r)
                for (int c = 1; c <= mp.component(i).row(r); ++c) out.push_back({i, r, c});
    }
    return out;
}

bool contains_box(const Shape& s, const Box& b) {
    if (b.row < 1 || b.col < 1) return false;
    if (const auto* sk = std::get_if<SkewShape>(&s))
        return b.component == 0 && b.col <= sk->outer.row(b.row) && b.col > sk->inner.row(b.row);
    const auto& mp = std::get<MultiPartition>(s);
    if (b.component < 1 || b.component > mp.r()) return false;
    return b.col <= mp.component(b.component).row(b.row);
}

StandardTableau StandardTableau::swapped(int i) const {
    StandardTableau t = *this;
    std::swap(t.cells.at(static_cast<std::size_t>(i - 1)), t.cells.at(static_cast<std::size_t>(i)));
    return t;
}

bool is_standard(const StandardTableau& t, const Shape& shape) {
    auto shape_boxes = boxes(shape);
    auto cells = t.cells;
    std::sort(cells.begin(), cells.end());
    if (cells != shape_boxes) return false;
    std::map<Box, int> entry;
    for (int i = 1; i <= t.size(); ++i) entry[t.at(i)] = i;
    for (const auto& [b, e] : entry) {
        auto right = entry.find({b.component, b.row, b.col + 1});
        if (right != entry.end() && right->second < e) return false;
        auto below = entry.find({b.component, b.row + 1, b.col});
        if (below != entry.end() && below->second < e) return false;
    }
    return true;
}

// --- enumeration ---------------------------------------------------------------

std::vector<Partition> enumerate_partitions(int k) {
    if (k < 0) throw InvalidArgument("enumerate_partitions: k must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

std::vector<Box> addable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int r = 1; r <= p.length() + 1; ++r)
        if (r == 1 || p.row(r - 1) > p.row(r)) out.push_back({0, r, p.row(r) + 1});
    return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int r = 1; r <= p.length(); ++r)
        if (p.row(r) > p.row(r + 1)) out.push_back({0, r, p.row(r)});
    return out;
}

std::vector<Box> addable_boxes(const MultiPartition& p) {
    std::vector<Box> out;
    for (int i = 1; i <= p.r(); ++i)
        for (auto b : addable_boxes(p.component(i))) {
            b.component = i;
            out.push_back(b);
        }
    return out;
}

std::vector<Box> removable_boxes(const MultiPartition& p) {
    std::vector<Box> out;
    for (int i = 1; i <= p.r(); ++i)
        for (auto b : removable_boxes(p.component(i))) {
            b.component = i;
            out.push_back(b);
        }
    return out;
}

std::vector<Box> removable_boxes(const SkewShape& s) {
    std::vector<Box> out;
    for (const auto& b : removable_boxes(s.outer))
        if (b.col > s.inner.row(b.row)) out.push_back(b);
    return out;
}

Partition add_box(const Partition& p, const Box& b) {
    auto rows = p.rows();
    if (b.row == p.length() + 1 && b.col == 1)
        rows.push_back(1);
    else if (b.row >= 1 && b.row <= p.length() && b.col == p.row(b.row) + 1)
        ++rows[static_cast<std::size_t>(b.row - 1)];
    else
        throw InvalidArgument("add_box: box is not at the end of a row");
    return Partition(std::move(rows));
}

Partition remove_box(const Partition& p, const Box& b) {
    if (b.row < 1 || b.row > p.length() || b.col != p.row(b.row))
        throw InvalidArgument("remove_box: box is not at the end of a row");
    auto rows = p.rows();
    if (--rows[static_cast<std::size_t>(b.row - 1)] == 0) rows.erase(rows.begin() + (b.row - 1));
    return Partition(std::move(rows));
}

MultiPartition add_box(const MultiPartition& p, const Box& b) {
    if (b.component < 1 || b.component > p.r()) throw InvalidArgument("add_box: bad component");
    auto comps = p.components();
    comps[static_cast<std::size_t>(b.component - 1)] = add_box(p.component(b.component), b);
    return MultiPartition(std::move(comps));
}

MultiPartition remove_box(const MultiPartition& p, const Box& b) {
    if (b.component < 1 || b.component > p.r()) throw InvalidArgument("remove_box: bad component");
    auto comps = p.components();
    comps[static_cast<std::size_t>(b.component - 1)] = remove_box(p.component(b.component), b);
    return MultiPartition(std::move(comps));
}

Shape remove_box(const Shape& s, const Box& b) {
    if (const auto* sk = std::get_if<SkewShape>(&s)) {
        if (b.col <= sk->inner.row(b.row)) throw InvalidArgument("remove_box: box belongs to the inner shape");
        return SkewShape(remove_box(sk->outer, b), sk->inner);
    }
    return remove_box(std::get<MultiPartition>(s), b);
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Shape& shape) {
    const auto all = boxes(shape);
    const std::size_t k = all.size();
    std::map<Box, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index[all[i]] = i;

    // A box may take the next entry once its left and upper neighbours
    // inside the shape are filled. Trying candidates in box order emits
    // tableaux in canonical order.
    std::vector<int> left(k, -1), up(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        const Box& b = all[i];
        if (auto it = index.find({b.component, b.row, b.col - 1}); it != index.end()) left[i] = static_cast<int>(it->second);
        if (auto it = index.find({b.component, b.row - 1, b.col}); it != index.end()) up[i] = static_cast<int>(it->second);
    }

    std::vector<StandardTableau> out;
    std::vector<char> filled(k, 0);
    StandardTableau cur;
    std::function<void()> rec = [&] {
        if (cur.cells.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (filled[i]) continue;
            if (left[i] >= 0 && !filled[static_cast<std::size_t>(left[i])]) continue;
            if (up[i] >= 0 && !filled[static_cast<std::size_t>(up[i])]) continue;
            filled[i] = 1;
            cur.cells.push_back(all[i]);
            rec();
            cur.cells.pop_back();
            filled[i] = 0;
        }
    };
    rec();
    return out;
}

std::size_t count_standard_tableaux(const Shape& shape) {
    // Memoized over the set of filled boxes, which is an order ideal.
    const auto all = boxes(shape);
    const std::size_t k = all.size();
    if (k > 62) throw InvalidArgument("count_standard_tableaux: shape too large");
    std::map<Box, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index[all[i]] = i;
    std::vector<std::uint64_t> need(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const Box& b = all[i];
        if (auto it = index.find({b.component, b.row, b.col - 1}); it != index.end()) need[i] |= 1ULL << it->second;
        if (auto it = index.find({b.component, b.row - 1, b.col}); it != index.end()) need[i] |= 1ULL << it->second;
    }
    std::map<std::uint64_t, std::size_t> memo;
    const std::uint64_t full = k == 64 ? ~0ULL : (1ULL << k) - 1;
    std::function<std::size_t(std::uint64_t)> rec = [&](std::uint64_t mask) -> std::size_t {
        if (mask == full) return 1;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t total = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (!(mask >> i & 1) && (need[i] & mask) == need[i]) total += rec(mask | 1ULL << i);
        memo[mask] = total;
        return total;
    };
    return rec(0);
}

std::vector<MultiPartition> index_set_H(int k, int r) {
    if (k < 0) throw InvalidArgument("index_set_H: k must be nonnegative");
    if (r < 1) throw InvalidArgument("index_set_H: r must be positive");
    std::vector<MultiPartition> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int comp, int remaining) {
        if (comp == r) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        const int lo = comp == r - 1 ? remaining : 0;
        for (int size = remaining; size >= lo; --size)
            for (const auto& p : enumerate_partitions(size)) {
                cur.push_back(p);
                rec(comp + 1, remaining - size);
                cur.pop_back();
            }
    };
    rec(0, k);
    return out;
}

std::vector<MultiPartition> index_set_A(int k) {
    std::vector<MultiPartition> out;
    for (auto& lam : index_set_H(k, 2))
        if (lam.component(1).length() <= 1) out.push_back(std::move(lam));
    return out;
}

// --- contents ----------------------------------------------------------------

RatFunc content(const Box& b, const ContentRule& rule) {
    const int diag = 2 * (b.col - b.row);
    switch (rule.kind) {
        case ContentRule::Kind::Plain:
            if (b.component != 0) throw InvalidArgument("content: component-indexed box needs u parameters");
            return RatFunc::q_power(diag);
        case ContentRule::Kind::Cyclotomic: {
            if (b.component < 1 || static_cast<std::size_t>(b.component) > rule.u.size())
                throw InvalidArgument("content: no u parameter for component " + std::to_string(b.component));
            return rule.u[static_cast<std::size_t>(b.component - 1)] * RatFunc::q_power(diag);
        }
        case ContentRule::Kind::Shifted:
            if (rule.u.empty()) throw InvalidArgument("content: shifted rule needs u_1");
            return rule.u[0] * RatFunc::q_power(diag + 2);
    }
    throw InvalidArgument("content: unknown rule");
}

RatFunc content(const Box& b, const std::optional<std::vector<RatFunc>>& u, const std::optional<RatFunc>& shift_u1) {
    if (shift_u1) return content(b, ContentRule::shifted(*shift_u1));
    if (b.component != 0) {
        if (!u) throw InvalidArgument("content: component-indexed box needs u parameters");
        return content(b, ContentRule::cyclotomic(*u));
    }
    return content(b, ContentRule::plain());
}

// --- Bratteli ------------------------------------------------------------------

BratteliGraph bratteli(int levels, BratteliFamily family) {
    if (levels < 0) throw InvalidArgument("bratteli: levels must be nonnegative");
    BratteliGraph g;
    g.family = family;
    for (int m = 0; m <= levels; ++m)
        g.levels.push_back(family == BratteliFamily::TypeB ? index_set_H(m, 2) : index_set_A(m));
    for (int m = 0; m < levels; ++m) {
        std::map<MultiPartition, std::size_t> below;
        for (std::size_t i = 0; i < g.levels[static_cast<std::size_t>(m)].size(); ++i)
            below[g.levels[static_cast<std::size_t>(m)][i]] = i;
        std::vector<std::pair<std::size_t, std::size_t>> e;
        const auto& upper = g.levels[static_cast<std::size_t>(m + 1)];
        for (std::size_t j = 0; j < upper.size(); ++j)
            for (const auto& b : removable_boxes(upper[j]))
                if (auto it = below.find(remove_box(upper[j], b)); it != below.end()) e.emplace_back(it->second, j);
        std::sort(e.begin(), e.end());
        g.edges.push_back(std::move(e));
    }
    return g;
}

std::string to_dot(const BratteliGraph& g) {
    std::ostringstream os;
    os << "graph bratteli {\n";
    os << "  label=\"" << (g.family == BratteliFamily::TypeB ? "TypeB" : "AQuotient") << "\";\n";
    os << "  node [shape=plaintext];\n";
    auto id = [](std::size_t level, std::size_t i) { return "v" + std::to_string(level) + "_" + std::to_string(i); };
    for (std::size_t m = 0; m < g.levels.size(); ++m) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < g.levels[m].size(); ++i)
            os << " " << id(m, i) << " [label=\"" << g.levels[m][i].to_string() << "\"];";
        os << " }\n";
    }
    for (std::size_t m = 0; m < g.edges.size(); ++m)
        for (const auto& [a, b] : g.edges[m]) os << "  " << id(m, a) << " -- " << id(m + 1, b) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qrook
