#pragma once

// Lattice models of the stacked-hypercube pyramid P_d(n) and its sections.
//
// Coordinates: the stacking axis is coordinate 1 with levels k = 1..n; the
// remaining d-1 coordinates index the unit (d-1)-cube of side k and run
// over 0..k-1. Axis numbers in this API are 1-based to match that.

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "powersum/figurate.hpp"

namespace powersum::pyramid {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 5;
/// Largest pyramid enumerated cell by cell: P_5(12).
inline constexpr std::size_t kMaxCells = 60710;

/// Unused trailing coordinates are zero, so lexicographic order on the
/// array is lexicographic order on the first d coordinates.
struct Cell {
    std::array<int, kMaxDim> coords{};
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class DimensionOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class AxisOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotAPyramid : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CellSet {
public:
    /// Sorts and deduplicates; every cell is read as a d-tuple.
    CellSet(int dimension, std::vector<Cell> cells);

    int dimension() const { return dim_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(const Cell& c) const;

    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    int dim_;
    std::vector<Cell> cells_;
};

/// P_d(n) = {(k, x_2, ..., x_d) : 1 <= k <= n, 0 <= x_j < k}.
CellSet build_pyramid(int d, int n);

/// Slices at fixed level k = 1..n with the level coordinate dropped.
std::vector<CellSet> main_sections(const CellSet& pyramid);

/// Slices x_axis = m - 1 for m = 1..n with that coordinate dropped; the
/// m-th slice is a truncated pyramid of sum_{k=m}^{n} k^{d-2} cells.
std::vector<CellSet> secondary_sections(const CellSet& pyramid, int axis);

/// Drops coordinate `axis` (1-based) of a cell of the given dimension.
Cell drop_coordinate(const Cell& c, int dimension, int axis);
/// Inverse of drop_coordinate: `dimension` is that of the result.
Cell insert_coordinate(const Cell& c, int dimension, int axis, int value);

std::vector<std::size_t> section_sizes(const std::vector<CellSet>& sections);

/// Both section families exhaust P_d(n) and the secondary sizes are the
/// rows of the triangular array of (d-2)-th powers. Reported as a
/// ROWS_COLS identity with lhs = sum of main sizes, rhs = sum of secondary
/// sizes.
figurate::IdentityReport sections_agree(int d, int n);

/// Levels lo..hi only; the truncated pyramid behind the truncated rows.
CellSet truncate_levels(const CellSet& pyramid, int lo, int hi);

}  // namespace powersum::pyramid
