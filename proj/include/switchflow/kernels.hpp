#pragma once

#include <cstddef>

namespace switchflow::kernels {

/// Inner-loop kernels of the transient solver: a scalar reference
/// implementation plus SIMD variants selected at runtime. All variants are
/// elementwise with one rounding per operation (kernel translation units are
/// built with FP contraction off), so every lane produces bitwise identical
/// results.
enum class Lane { scalar, avx2, neon };

const char* lane_name(Lane lane);

/// Lane chosen for this process (best available unless forced).
Lane active_lane();
bool lane_available(Lane lane);
/// Force a specific lane (tests); throws Error if unavailable on this CPU.
void force_lane(Lane lane);
/// Return to automatic selection.
void reset_lane();

/// y[i] = a[i] * b[i]
void vec_mul(double* y, const double* a, const double* b, std::size_t n);

/// f[i] -= r * (flux[i+1] - flux[i]); flux has n+1 entries.
void flux_update(double* f, const double* flux, double r, std::size_t n);

/// d = wmu[i]*f2[i] - wlam[i]*f1[i]; f1[i] += d; f2[i] -= d.
/// Pointwise exact reaction relaxation with precomputed weights.
void reaction_update(double* f1, double* f2, const double* wlam,
                     const double* wmu, std::size_t n);

}  // namespace switchflow::kernels
