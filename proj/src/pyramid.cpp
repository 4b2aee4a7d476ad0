#include "powersum/pyramid.hpp"

#include <algorithm>
#include <string>

namespace powersum::pyramid {

namespace {

std::size_t ipow(std::size_t base, int exponent) {
    std::size_t r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

void require_dimension(int d) {
    if (d < kMinDim || d > kMaxDim)
        throw DimensionOutOfRange("pyramid dimension must be in 2..5, got " + std::to_string(d));
}

int top_level(const CellSet& p) {
    int n = 0;
    for (const auto& c : p) n = std::max(n, c.coords[0]);
    return n;
}

// Reassembles sections into one set by putting the sliced coordinate back.
CellSet reassemble(const std::vector<CellSet>& sections, int d, int axis, int first_value) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (const auto& c : sections[i])
            cells.push_back(insert_coordinate(c, d, axis, first_value + static_cast<int>(i)));
    const std::size_t before = cells.size();
    CellSet set(d, std::move(cells));
    if (set.size() != before) return CellSet(d, {});  // duplicates: not a partition
    return set;
}

}  // namespace

CellSet::CellSet(int dimension, std::vector<Cell> cells) : dim_(dimension), cells_(std::move(cells)) {
    require_dimension(dim_);
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

CellSet build_pyramid(int d, int n) {
    require_dimension(d);
    if (n < 1) throw std::invalid_argument("pyramid height must be >= 1");
    const auto count = figurate::sum_powers_bruteforce(static_cast<unsigned>(d - 1), n);
    if (count > kMaxCells)
        throw std::out_of_range("P_" + std::to_string(d) + "(" + std::to_string(n)
                                + ") exceeds the cell enumeration cap");
    std::vector<Cell> cells;
    cells.reserve(count.get_ui());
    for (int k = 1; k <= n; ++k) {
        // Odometer over the (d-1)-cube of side k, last coordinate fastest.
        Cell c;
        c.coords[0] = k;
        while (true) {
            cells.push_back(c);
            int j = d - 1;
            while (j >= 1 && ++c.coords[static_cast<std::size_t>(j)] == k) {
                c.coords[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 1) break;
        }
    }
    return CellSet(d, std::move(cells));
}

Cell drop_coordinate(const Cell& c, int dimension, int axis) {
    Cell out;
    std::size_t w = 0;
    for (int j = 1; j <= dimension; ++j)
        if (j != axis) out.coords[w++] = c.coords[static_cast<std::size_t>(j - 1)];
    return out;
}

Cell insert_coordinate(const Cell& c, int dimension, int axis, int value) {
    Cell out;
    std::size_t r = 0;
    for (int j = 1; j <= dimension; ++j)
        out.coords[static_cast<std::size_t>(j - 1)] = (j == axis) ? value : c.coords[r++];
    return out;
}

std::vector<CellSet> main_sections(const CellSet& pyramid) {
    const int d = pyramid.dimension();
    const int n = top_level(pyramid);
    std::vector<std::vector<Cell>> slices(static_cast<std::size_t>(n));
    for (const auto& c : pyramid) {
        if (c.coords[0] < 1) throw NotAPyramid("cell below level 1");
        slices[static_cast<std::size_t>(c.coords[0] - 1)].push_back(drop_coordinate(c, d, 1));
    }
    std::vector<CellSet> out;
    out.reserve(slices.size());
    for (int k = 1; k <= n; ++k) {
        auto& slice = slices[static_cast<std::size_t>(k - 1)];
        if (slice.size() != ipow(static_cast<std::size_t>(k), d - 1))
            throw NotAPyramid("level " + std::to_string(k) + " has " + std::to_string(slice.size())
                              + " cells, expected k^" + std::to_string(d - 1));
        // A 1-dimensional slice still needs a CellSet of dimension >= 2; the
        // unused coordinate stays zero.
        out.emplace_back(std::max(d - 1, kMinDim), std::move(slice));
    }
    return out;
}

std::vector<CellSet> secondary_sections(const CellSet& pyramid, int axis) {
    const int d = pyramid.dimension();
    if (axis < 2 || axis > d)
        throw AxisOutOfRange("secondary axis must be in 2.." + std::to_string(d) + ", got "
                             + std::to_string(axis));
    const int n = top_level(pyramid);
    std::vector<std::vector<Cell>> slices(static_cast<std::size_t>(n));
    for (const auto& c : pyramid) {
        const int v = c.coords[static_cast<std::size_t>(axis - 1)];
        if (v < 0 || v >= n) throw NotAPyramid("cube coordinate out of range");
        slices[static_cast<std::size_t>(v)].push_back(drop_coordinate(c, d, axis));
    }
    std::vector<CellSet> out;
    out.reserve(slices.size());
    for (auto& slice : slices) out.emplace_back(std::max(d - 1, kMinDim), std::move(slice));
    return out;
}

std::vector<std::size_t> section_sizes(const std::vector<CellSet>& sections) {
    std::vector<std::size_t> sizes;
    sizes.reserve(sections.size());
    for (const auto& s : sections) sizes.push_back(s.size());
    return sizes;
}

CellSet truncate_levels(const CellSet& pyramid, int lo, int hi) {
    std::vector<Cell> cells;
    for (const auto& c : pyramid)
        if (c.coords[0] >= lo && c.coords[0] <= hi) cells.push_back(c);
    return CellSet(pyramid.dimension(), std::move(cells));
}

figurate::IdentityReport sections_agree(int d, int n) {
    const CellSet p = build_pyramid(d, n);
    const auto power = static_cast<unsigned>(d - 2);

    bool ok = true;
    const auto mains = main_sections(p);
    std::size_t main_total = 0;
    for (auto s : section_sizes(mains)) main_total += s;
    ok = ok && reassemble(mains, d, 1, 1) == p;

    std::size_t secondary_total = 0;
    for (int axis = 2; axis <= d; ++axis) {
        const auto secs = secondary_sections(p, axis);
        const auto sizes = section_sizes(secs);
        std::size_t total = 0;
        for (std::size_t m = 1; m <= sizes.size(); ++m) {
            total += sizes[m - 1];
            ok = ok && figurate::sum_powers_range(power, static_cast<long>(m), n) == sizes[m - 1];
        }
        if (axis == 2) secondary_total = total;
        ok = ok && total == secondary_total && reassemble(secs, d, axis, 0) == p;
    }
    ok = ok && figurate::sum_powers_bruteforce(power + 1, n) == p.size();

    figurate::IdentityReport report{figurate::Identity::RowsCols,
                                    {{"p", d - 2}, {"n", n}},
                                    exact::Rat(static_cast<long>(main_total)),
                                    exact::Rat(static_cast<long>(secondary_total)),
                                    false};
    report.holds = ok && report.lhs == report.rhs;
    return report;
}

}  // namespace powersum::pyramid
