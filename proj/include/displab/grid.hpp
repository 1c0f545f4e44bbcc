#pragma once

#include <stdexcept>
#include <vector>

namespace displab {

/// Uniform 1D grid with at least three nodes.
struct Grid1D {
    double lo = 0.0;
    double hi = 1.0;
    int count = 3;

    Grid1D() = default;
    Grid1D(double lo_, double hi_, int count_) : lo(lo_), hi(hi_), count(count_) {
        if (!(lo < hi)) throw std::domain_error("Grid1D: lo must be < hi");
        if (count < 3) throw std::domain_error("Grid1D: need at least 3 nodes");
    }

    double spacing() const { return (hi - lo) / (count - 1); }
    double node(int i) const { return lo + i * spacing(); }

    std::vector<double> nodes() const {
        std::vector<double> xs(count);
        for (int i = 0; i < count; ++i) xs[i] = node(i);
        return xs;
    }
};

}  // namespace displab
