#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace switchflow::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    std::size_t evaluations = 0;
};

namespace detail {

// Adaptive Simpson with the classic Richardson acceptance test
// |S_fine - S_coarse| <= 15 * tol and one extrapolation step.
template <typename F>
void simpson_recurse(const F& f, double a, double fa, double b, double fb,
                     double m, double fm, double whole, double tol, int depth,
                     Result& out) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    out.evaluations += 2;
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) {
        out.converged = false;
        out.value += left + right + delta / 15.0;
        out.error_estimate += std::abs(delta) / 15.0;
        return;
    }
    if (std::abs(delta) <= 15.0 * tol) {
        out.value += left + right + delta / 15.0;
        out.error_estimate += std::abs(delta) / 15.0;
        return;
    }
    simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, out);
    simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// Interval-halving with a Richardson check; samples include the endpoints.
template <typename F>
Result integrate_adaptive(const F& f, double a, double b, double tol,
                          int max_depth = 48) {
    Result out;
    if (a == b) return out;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    out.evaluations = 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    detail::simpson_recurse(f, a, fa, b, fb, m, fm, whole, tol, max_depth, out);
    return out;
}

/// Integrates (x-a)^alpha * (b-x)^beta * g(x) over [a, b] for alpha, beta > -1
/// with g continuous up to the endpoints. Splits at the midpoint; a singular
/// side (exponent < 1 as a power of the distance, i.e. alpha < 0) is handled
/// by the substitution u = (x-a)^(alpha+1), which maps the weighted integrand
/// to (1/(alpha+1)) * g(x(u)) * (b-x(u))^beta, bounded at u = 0.
template <typename G>
Result integrate_endpoint_weighted(const G& g, double a, double b,
                                   double alpha, double beta, double tol,
                                   int max_depth = 48) {
    Result total;
    if (!(alpha > -1.0) || !(beta > -1.0) || !(b > a)) {
        total.converged = false;
        return total;
    }
    const double m = 0.5 * (a + b);

    auto accumulate = [&total](const Result& r) {
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.converged = total.converged && r.converged;
        total.evaluations += r.evaluations;
    };

    // Left half: weight (x-a)^alpha, the (b-x)^beta factor is smooth here.
    if (alpha < 0.0) {
        const double q = alpha + 1.0;
        const double u_hi = std::pow(m - a, q);
        auto trans = [&](double u) {
            const double x = a + std::pow(u, 1.0 / q);
            return g(x) * std::pow(b - x, beta) / q;
        };
        accumulate(integrate_adaptive(trans, 0.0, u_hi, 0.5 * tol, max_depth));
    } else {
        auto direct = [&](double x) {
            return std::pow(x - a, alpha) * std::pow(b - x, beta) * g(x);
        };
        accumulate(integrate_adaptive(direct, a, m, 0.5 * tol, max_depth));
    }

    // Right half, mirrored.
    if (beta < 0.0) {
        const double q = beta + 1.0;
        const double u_hi = std::pow(b - m, q);
        auto trans = [&](double u) {
            const double x = b - std::pow(u, 1.0 / q);
            return g(x) * std::pow(x - a, alpha) / q;
        };
        accumulate(integrate_adaptive(trans, 0.0, u_hi, 0.5 * tol, max_depth));
    } else {
        auto direct = [&](double x) {
            return std::pow(x - a, alpha) * std::pow(b - x, beta) * g(x);
        };
        accumulate(integrate_adaptive(direct, m, b, 0.5 * tol, max_depth));
    }
    return total;
}

}  // namespace switchflow::quad
