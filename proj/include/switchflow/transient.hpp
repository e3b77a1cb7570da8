#pragma once

#include <vector>

#include "switchflow/grid.hpp"
#include "switchflow/model.hpp"

namespace switchflow {

/// Exact pointwise solution matrix of the switching subsystem over a step:
/// with r = lambda + mu and e = exp(-r*dt),
///   [ (lambda*e + mu)/r   mu*(1-e)/r       ]
///   [ lambda*(1-e)/r      (mu*e + lambda)/r ]
/// Columns sum to 1; all entries lie in [0, 1]; dt = 0 gives the identity.
struct ReactionMatrix {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;

    static ReactionMatrix at(double lambda, double mu, double dt);
    std::pair<double, double> apply(double f1, double f2) const {
        return {m11 * f1 + m12 * f2, m21 * f1 + m22 * f2};
    }
};

struct StepReport {
    double time = 0.0;
    double dt = 0.0;
    double mass_drift = 0.0;  // mass after - mass before this step
    double min_density = 0.0;
    double cfl = 0.0;
};

struct TransientOptions {
    double cfl_safety = 0.9;
    /// Strang variant: half reaction, transport, half reaction.
    bool strang = false;
};

/// Splitting solver for the coupled transport/switching system: conservative
/// first-order upwind transport plus the exact pointwise reaction solve, with
/// Dirichlet inflow values f1 = 0 at the right endpoint and f2 = 0 at the
/// left endpoint. Velocities are frozen at faces, rates at cell centers.
class TransientSolver {
public:
    TransientSolver(const Model& model, const Grid& grid, TransientOptions opts = {});

    const Grid& grid() const { return grid_; }
    const TransientOptions& options() const { return opts_; }

    /// max |velocity| over all faces and both modes.
    double max_speed() const { return max_speed_; }
    /// cfl_safety * dx / max_speed
    double stable_dt() const;

    /// One conservative upwind transport substep. Throws CflViolationError
    /// when dt * max_speed / dx > 1.
    void transport_step(DensityField& field, double dt) const;

    /// Exact reaction relaxation over dt; preserves f1+f2 per cell.
    void reaction_step(DensityField& field, double dt) const;

    /// One full splitting step (transport then reaction; Strang variant when
    /// configured). Advances field.time and returns a report.
    StepReport lie_trotter_step(DensityField& field, double dt) const;

    /// Repeated steps of size stable_dt() (last one shortened) until t_final.
    std::vector<StepReport> evolve(DensityField& field, double t_final) const;

private:
    void check_field(const DensityField& field) const;
    const std::vector<double>& reaction_weights(double dt) const;

    const Model* model_;
    Grid grid_;
    TransientOptions opts_;
    std::vector<double> v1_faces_;   // mode-1 velocity at faces (<= 0)
    std::vector<double> v2_faces_;   // mode-2 velocity at faces (>= 0)
    std::vector<double> lambda_c_;   // rates at cell centers
    std::vector<double> mu_c_;
    double max_speed_ = 0.0;

    // wlam/wmu caches for the last two dt values used (full and half step).
    struct WeightCache {
        double dt = -1.0;
        std::vector<double> wlam;
        std::vector<double> wmu;
    };
    mutable WeightCache cache_[2];
};

/// Exact characteristic solution of the pure transport system at time t,
/// sampled at cell centers from piecewise-constant initial data f0:
///   f1(x, t) = e^(tb) f01((x - xL) e^(tb) + xL),
///   f2(x, t) = e^(td) f02((x - xR) e^(td) + xR),
/// with f0 extended by zero outside the interval. Test oracle for the upwind
/// scheme.
DensityField transport_exact_oracle(const Model& model, const DensityField& f0, double t);

}  // namespace switchflow
