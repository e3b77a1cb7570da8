#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "switchflow/model.hpp"

namespace switchflow {

/// Behavior of a density component at its drift fixed point.
enum class EndpointKind { singular, finite_nonzero, zero };

const char* to_string(EndpointKind k);

/// psi1 at the left endpoint and psi2 at the right endpoint.
struct EndpointBehavior {
    EndpointKind psi1_at_left = EndpointKind::finite_nonzero;
    EndpointKind psi2_at_right = EndpointKind::finite_nonzero;
};

/// Quadratic factor of the density derivative: psi_j'(x) has the sign of
/// P_j(x) inside the interval. Affine rates only.
struct CriticalPolynomial {
    int component = 1;  // 1 or 2
    double a2 = 0.0, a1 = 0.0, a0 = 0.0;  // P(x) = a2 x^2 + a1 x + a0

    double operator()(double x) const { return (a2 * x + a1) * x + a0; }
    /// Real roots in ascending order (0, 1, or 2 of them; linear and constant
    /// degenerations handled).
    std::vector<double> real_roots() const;
};

enum class StationaryKind { affine, quadrature };

struct StationaryOptions {
    /// Force one evaluation path; defaults to affine when both rates are
    /// affine and quadrature otherwise.
    std::optional<StationaryKind> kind;
    /// Base point of the exponent integral; defaults to the interval midpoint.
    std::optional<double> x0;
    double tol_quad = 1e-10;
    /// Normalization tolerance; defaults to 1e-8, relaxed to 1e-6 when a
    /// component is singular at its endpoint.
    std::optional<double> tol_norm;
};

/// The stationary density pair. All evaluators are pure; the object is
/// immutable after normalize() and safe to use concurrently.
///
/// Both paths share the representation
///   psi1(x) = (C/b) (x-xL)^(p1-1) (xR-x)^p2     * G(x)
///   psi2(x) = (C/d) (x-xL)^p1     (xR-x)^(p2-1) * G(x)
///   h(x)    =  C    (x-xL)^p1     (xR-x)^p2     * G(x)
/// with p1 = lambda(xL)/b, p2 = mu(xR)/d; G(x) = exp(s*x) for affine rates
/// (s = l/b + m/d) and exp(B(x)) for the quadrature path, where B is the
/// bounded part of the exponent integral anchored at x0.
class StationarySolution {
public:
    const Model& model() const { return *model_; }
    StationaryKind kind() const { return kind_; }
    double x0() const { return x0_; }

    /// Normalization constant: the closed-form prefactor for the affine
    /// path, h(x0) for the quadrature path.
    double normalization_constant() const { return reported_k_; }
    /// Achieved |integral(psi1+psi2) - 1| estimate from the normalization
    /// quadrature.
    double norm_residual() const { return norm_residual_; }

    double left_exponent() const { return p1_; }    // exponent of h at xL
    double right_exponent() const { return p2_; }   // exponent of h at xR
    /// Rate of the exponential prefactor (affine path only; 0 otherwise).
    double drift_exponent() const { return s_; }

    /// Common flux h(x) = (bx-a) psi1 = (c-dx) psi2; defined on the closed
    /// interval with h = 0 at both endpoints.
    double h(double x) const;

    /// Pointwise densities, strictly inside the interval only; endpoint
    /// behavior is reported by classify_endpoints instead.
    std::pair<double, double> psi(double x) const;
    double psi1(double x) const { return psi(x).first; }
    double psi2(double x) const { return psi(x).second; }
    double sum(double x) const { auto p = psi(x); return p.first + p.second; }

    /// E(x) = integral from x0 to x of lambda/(by-a) - mu/(c-dy), strictly
    /// inside the interval.
    double exponent_integral(double x) const;

private:
    friend StationarySolution normalize(const Model& model, const StationaryOptions& opts);

    StationarySolution() = default;

    double bounded_part(double x) const;  // B(x); s*(x-x0) for affine
    void require_inside(double x) const;

    std::shared_ptr<const Model> model_;
    StationaryKind kind_ = StationaryKind::affine;
    double x0_ = 0.0;
    double p1_ = 0.0, p2_ = 0.0, s_ = 0.0;
    double prefactor_ = 1.0;   // C in the shared representation
    double reported_k_ = 1.0;
    double norm_residual_ = 0.0;
    double tol_quad_ = 1e-10;
};

/// Computes K so that integral(psi1 + psi2) = 1. Endpoint power singularities
/// are integrated with the substitution u = (x-xL)^p1 (mirrored on the
/// right) when the exponent is below 1. Throws NormalizationError when the
/// quadrature cannot reach tolerance or the density is not integrable.
StationarySolution normalize(const Model& model, const StationaryOptions& opts = {});

/// E(x) as above, standalone; works for affine (exact antiderivative) and
/// tabulated (exact logarithms plus adaptive quadrature of the bounded
/// remainder) rates. x and x0 must lie strictly inside the interval.
double exponent_integral(const Model& model, double x, double x0, double tol = 1e-10);

/// Classification by the sign of al + kb - b^2 (left) and cm + nd - d^2
/// (right); affine rates only.
EndpointBehavior classify_endpoints(const Model& model);

/// Expanded quadratic derivative factor for psi1 (component 1) or psi2
/// (component 2); affine rates only.
CriticalPolynomial critical_polynomial(const Model& model, int component);

struct Extremum {
    double x = 0.0;
    double value = 0.0;
    bool at_boundary = false;
};

/// Maximum of one density component, located through the roots of its
/// critical polynomial (interior) or the border-case endpoint rule.
/// Throws SingularComponentError when the component diverges at its endpoint.
Extremum locate_maximum(const StationarySolution& sol, int component);

struct ComponentMaximum {
    bool singular = false;
    std::optional<Extremum> maximum;
};

struct MaximaReport {
    ComponentMaximum psi1;
    ComponentMaximum psi2;
    ComponentMaximum total;  // psi1 + psi2, located numerically
};

/// Maxima of psi1, psi2 and their sum; singular components are flagged
/// rather than thrown.
MaximaReport locate_maxima(const StationarySolution& sol);

}  // namespace switchflow
