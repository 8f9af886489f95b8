#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qrook/ratfunc.hpp"

namespace qrook {

/// Weakly decreasing list of positive row lengths. The empty partition is
/// the unique shape with no boxes.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidArgument unless rows are positive and weakly decreasing.
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int length() const { return static_cast<int>(rows_.size()); }
    int size() const;
    bool empty() const { return rows_.empty(); }
    /// Length of row r (1-based); 0 past the last row.
    int row(int r) const { return r >= 1 && r <= length() ? rows_[static_cast<std::size_t>(r - 1)] : 0; }
    bool contains(const Partition& other) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> rows_;
};

/// Boxes of outer that are not in inner.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    /// Throws InvalidArgument unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);

    int size() const { return outer.size() - inner.size(); }
    std::string to_string() const;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

/// Ordered r-tuple of partitions, r >= 1.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const { return components_; }
    const Partition& component(int i) const { return components_.at(static_cast<std::size_t>(i - 1)); }
    int r() const { return static_cast<int>(components_.size()); }
    int size() const;
    bool contains(const MultiPartition& other) const;

    std::string to_string() const;
    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> components_;
};

/// Box at (row, col) of a shape, both 1-based. component is 1-based for
/// multipartitions and 0 for plain and skew shapes.
struct Box {
    int component = 0;
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Box&, const Box&) = default;
};

using Shape = std::variant<SkewShape, MultiPartition>;

int shape_size(const Shape& s);
std::string shape_to_string(const Shape& s);
/// All boxes of the shape, ordered by (component, row, col).
std::vector<Box> boxes(const Shape& s);
bool contains_box(const Shape& s, const Box& b);

/// Filling of a shape by 1..k, stored as the box holding each entry:
/// cells[i] is the box containing i+1. Ordering compares these sequences
/// lexicographically, which is the canonical basis order everywhere.
struct StandardTableau {
    std::vector<Box> cells;

    int size() const { return static_cast<int>(cells.size()); }
    /// Box containing entry i (1-based).
    const Box& at(int i) const { return cells.at(static_cast<std::size_t>(i - 1)); }
    /// Same tableau with i and i+1 exchanged (not necessarily standard).
    StandardTableau swapped(int i) const;

    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

/// Rows increase left to right and columns top to bottom, per component,
/// and the cells are exactly the boxes of the shape.
bool is_standard(const StandardTableau& t, const Shape& shape);

// --- enumeration ----------------------------------------------------------

/// All partitions of k in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int k);

std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> removable_boxes(const Partition& p);
/// Boxes of each component, tagged with their 1-based component index.
std::vector<Box> addable_boxes(const MultiPartition& p);
std::vector<Box> removable_boxes(const MultiPartition& p);
/// Corners of the outer shape whose removal keeps a skew shape.
std::vector<Box> removable_boxes(const SkewShape& s);

Partition add_box(const Partition& p, const Box& b);
Partition remove_box(const Partition& p, const Box& b);
MultiPartition add_box(const MultiPartition& p, const Box& b);
MultiPartition remove_box(const MultiPartition& p, const Box& b);
Shape remove_box(const Shape& s, const Box& b);

/// Standard tableaux in canonical order.
std::vector<StandardTableau> enumerate_standard_tableaux(const Shape& shape);
std::size_t count_standard_tableaux(const Shape& shape);

/// r-tuples of partitions with k boxes in total. Ordered by the
/// composition of sizes (first component largest first), then
/// reverse-lexicographically within components.
std::vector<MultiPartition> index_set_H(int k, int r);
/// Pairs in index_set_H(k, 2) whose first component has at most one row.
std::vector<MultiPartition> index_set_A(int k);

// --- contents ---------------------------------------------------------------

/// How a box is turned into its X-eigenvalue.
struct ContentRule {
    enum class Kind { Plain, Cyclotomic, Shifted };
    Kind kind = Kind::Plain;
    std::vector<RatFunc> u;

    static ContentRule plain() { return {}; }
    static ContentRule cyclotomic(std::vector<RatFunc> u) { return {Kind::Cyclotomic, std::move(u)}; }
    /// u_1 q^{2(c-r)+2}, used for the skew module at u_2 = q^{2d} u_1.
    static ContentRule shifted(RatFunc u1) { return {Kind::Shifted, {std::move(u1)}}; }
};

/// q^{2(c-r)}, u_i q^{2(c-r)} or u_1 q^{2(c-r)+2} depending on the rule.
/// Throws InvalidArgument if a component-indexed box has no matching u_i.
RatFunc content(const Box& b, const ContentRule& rule = ContentRule::plain());

/// Convenience overload with the optional arguments spelled out.
RatFunc content(const Box& b, const std::optional<std::vector<RatFunc>>& u, const std::optional<RatFunc>& shift_u1);

// --- Bratteli graphs --------------------------------------------------------

enum class BratteliFamily { TypeB, AQuotient };

struct BratteliGraph {
    BratteliFamily family = BratteliFamily::TypeB;
    /// levels[m] lists the vertices on level m.
    std::vector<std::vector<MultiPartition>> levels;
    /// edges[m] joins levels[m] (first) with levels[m+1] (second), by index.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;
};

BratteliGraph bratteli(int levels, BratteliFamily family);

/// Level-ranked DOT graph; identical input gives identical bytes.
std::string to_dot(const BratteliGraph& g);

}  // namespace qrook
