#pragma once

#include <cstddef>
#include <vector>

#include "switchflow/model.hpp"

namespace switchflow {

/// Uniform cell-centered grid over the model interval. Faces 0 and n sit
/// exactly on the interval endpoints.
class Grid {
public:
    Grid() = default;
    Grid(int n_cells, DomainInterval iv);

    int n() const { return n_; }
    double dx() const { return dx_; }
    double left() const { return iv_.left; }
    double right() const { return iv_.right; }
    const DomainInterval& interval() const { return iv_; }

    double center(int i) const { return iv_.left + (i + 0.5) * dx_; }
    double face(int j) const {
        if (j == 0) return iv_.left;
        if (j == n_) return iv_.right;
        return iv_.left + j * dx_;
    }
    /// Cell index containing x, clamped to [0, n-1].
    int cell_of(double x) const;

    bool operator==(const Grid& other) const {
        return n_ == other.n_ && iv_.left == other.iv_.left && iv_.right == other.iv_.right;
    }

private:
    int n_ = 0;
    DomainInterval iv_;
    double dx_ = 0.0;
};

/// Cell-averaged density pair on a grid.
struct DensityField {
    Grid grid;
    std::vector<double> f1;
    std::vector<double> f2;
    double time = 0.0;

    DensityField() = default;
    explicit DensityField(const Grid& g)
        : grid(g), f1(static_cast<std::size_t>(g.n()), 0.0), f2(static_cast<std::size_t>(g.n()), 0.0) {}

    /// dx * sum(f1 + f2), accumulated in fixed cell order.
    double mass() const;
    double min_value() const;
};

/// mass-1 initial data presets; each returns the renormalization factor it
/// applied through *correction when non-null.
DensityField make_uniform(const Grid& g);
DensityField make_spike(const Grid& g, int mode, double x, double* correction = nullptr);
DensityField make_gaussian(const Grid& g, double center, double sigma, double* correction = nullptr);

/// Scales f1, f2 so that mass() == 1; returns the factor applied.
double renormalize(DensityField& field);

}  // namespace switchflow
