#pragma once

#include <cstdint>
#include <vector>

#include "switchflow/grid.hpp"
#include "switchflow/model.hpp"
#include "switchflow/rng.hpp"

namespace switchflow {

/// Where trajectories start.
struct InitialLaw {
    enum class Kind { point, uniform_split };
    Kind kind = Kind::uniform_split;
    int mode = 1;     // point only
    double x = 0.0;   // point only

    static InitialLaw point(int mode, double x) { return {Kind::point, mode, x}; }
    static InitialLaw uniform_split() { return {}; }
};

struct PdmpOptions {
    std::uint64_t n_traj = 100000;
    double t_final = 20.0;
    std::uint64_t seed = 1;
    int grid_cells = 400;
    InitialLaw initial;
    /// 0 = one worker per hardware thread (capped); results are identical
    /// for any thread count.
    int threads = 0;
};

/// Terminal-state histogram per mode. Bin counts are integers so the
/// parallel reduction is exact and order-independent.
struct EmpiricalDensity {
    Grid grid;
    std::uint64_t n_samples = 0;
    std::vector<std::uint64_t> count1;
    std::vector<std::uint64_t> count2;

    double f1(int i) const;
    double f2(int i) const;
    /// Cell-averaged density field (total mass 1).
    DensityField to_field() const;
};

struct SwitchStats {
    std::uint64_t total = 0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    double mean = 0.0;
};

struct PdmpResult {
    EmpiricalDensity density;
    double mode1_fraction = 0.0;  // terminal mode-1 occupancy
    SwitchStats switches;
};

/// Exact mode flow over dt: exponential relaxation toward the mode's drift
/// fixed point (xL for mode 1, xR for mode 2). Never leaves the interval.
double flow(const Model& model, int mode, double x, double dt);

/// Waiting time until the next mode switch from (mode, x), sampled by
/// thinning against the active rate's interval maximum. Exact in
/// distribution; requires strictly positive rates.
double next_switch_time(const Model& model, int mode, double x, CounterRng& rng);

/// n_traj independent trajectories of the piecewise-deterministic process to
/// t_final; terminal states histogrammed on the grid. Deterministic for a
/// fixed seed regardless of thread count.
PdmpResult simulate(const Model& model, const PdmpOptions& opts);

}  // namespace switchflow
