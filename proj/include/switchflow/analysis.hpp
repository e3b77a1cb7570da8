#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "switchflow/grid.hpp"
#include "switchflow/pdmp.hpp"
#include "switchflow/stationary.hpp"
#include "switchflow/transient.hpp"

namespace switchflow {

/// dx * sum(|f1A - f1B| + |f2A - f2B|). Throws GridMismatchError.
double l1_distance(const DensityField& a, const DensityField& b);

/// Stationary densities as cell averages (3-point Gauss per cell; never
/// samples the endpoints).
DensityField project_to_grid(const StationarySolution& sol, const Grid& grid);

/// Conservative restriction onto a coarser grid whose cell count divides the
/// fine one.
DensityField restrict_to(const DensityField& fine, int coarse_cells);

struct ConvergenceCurve {
    struct Point {
        double t = 0.0;
        double distance = 0.0;
    };
    std::vector<Point> points;
    bool non_increasing = true;  // within 1e-10 per checkpoint
    double final_distance = 0.0;
};

/// Evolves the initial field, sampling the L1 distance to the stationary
/// solution at the given (ascending) checkpoint times.
ConvergenceCurve convergence_run(const Model& model, const StationarySolution& sol,
                                 DensityField initial, std::span<const double> checkpoints,
                                 TransientOptions opts = {});

enum class Side { left, right };

/// Least-squares slope of log psi against log(distance to the endpoint) at
/// offsets {1e-3, 1e-4, 1e-5, 1e-6} * length; recovers the endpoint power
/// (p1 - 1 on the left for psi1, p2 - 1 on the right for psi2). Affine rates
/// only.
double fit_endpoint_exponent(const StationarySolution& sol, Side side);

struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct ComparisonReport {
    int grid_cells = 0;
    int mc_cells = 0;
    std::uint64_t n_traj = 0;
    double t_final = 0.0;
    std::uint64_t seed = 0;
    // Pairwise L1 distances among {stationary, transient final, empirical},
    // all measured on the Monte Carlo comparison grid.
    double d_stationary_transient = 0.0;
    double d_stationary_empirical = 0.0;
    double d_transient_empirical = 0.0;
    // Same distance on the fine transient grid.
    double d_stationary_transient_fine = 0.0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

struct CrossValidateConfig {
    int cells = 400;
    int mc_cells = 100;  // must divide cells
    double t_final = 20.0;
    std::uint64_t n_traj = 100000;
    std::uint64_t seed = 1;
    int threads = 0;
    double max_transient_distance = 0.05;
    double max_empirical_distance = 0.05;
    double max_pairwise_distance = 0.08;
    double flux_identity_factor = 1e-10;  // times max h
    double max_mass_drift = 1e-10;
};

/// Runs the three computation paths (closed form / PDE / Monte Carlo) and
/// assembles pass/fail checks. A failed check is reported, not thrown.
ComparisonReport cross_validate(const Model& model, const CrossValidateConfig& cfg = {});

}  // namespace switchflow
