#pragma once

#include <vector>

#include "hilbpairs/surface.hpp"

namespace hilbpairs {

/// Partition lambda_1 >= ... >= lambda_l > 0, encoding the monomial ideal
/// (y^{l1}, x y^{l2}, ..., x^{l-1} y^{ll}, x^l) in the chart coordinates.
struct Partition {
    std::vector<int> parts;

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    /// Boxes strictly to the right of (row, col), 0-based, row < length().
    int arm(int row, int col) const { return parts[static_cast<std::size_t>(row)] - 1 - col; }
    /// Boxes strictly below (row, col).
    int leg(int row, int col) const {
        int l = 0;
        for (int r = row + 1; r < length(); ++r)
            if (parts[static_cast<std::size_t>(r)] >= col + 1) ++l;
        return l;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Partitions of n in ascending lexicographic order on the part sequence,
/// e.g. (1,1,1) < (2,1) < (3).
std::vector<Partition> partitions_of(int n);

/// Torus-fixed subscheme of S^[m]: one partition per chart, total size m.
struct FixedPoint {
    std::vector<Partition> parts; // indexed like SurfaceModel::charts

    int size() const {
        int s = 0;
        for (const auto& p : parts) s += p.size();
        return s;
    }

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// All fixed points of S^[m] in a deterministic order: tuples are ordered
/// chart by chart in model order, each chart's partition keyed by size and
/// then lexicographically, last chart varying fastest. Results are memoized
/// per (chart count, m); set HILBPAIRS_CACHE_DIR to also persist them.
std::vector<FixedPoint> enumerate_fixed_points(const SurfaceModel& S, int m);

} // namespace hilbpairs
