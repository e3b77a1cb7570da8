#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "switchflow/errors.hpp"

namespace switchflow {

/// Affine switching rate r(x) = slope * x + intercept.
struct AffineRate {
    double slope = 0.0;
    double intercept = 0.0;

    double operator()(double x) const { return slope * x + intercept; }
};

/// Piecewise-linear switching rate through strictly increasing (x, value) nodes.
struct TabulatedRate {
    std::vector<std::pair<double, double>> nodes;

    double operator()(double x) const;
    double front_x() const { return nodes.front().first; }
    double back_x() const { return nodes.back().first; }
};

/// A switching rate function: affine (exact) or tabulated (piecewise-linear).
class RateFunction {
public:
    RateFunction() = default;

    static RateFunction affine(double slope, double intercept);
    static RateFunction constant(double value) { return affine(0.0, value); }
    /// Nodes must be strictly increasing in x and there must be at least two.
    static RateFunction tabulated(std::vector<std::pair<double, double>> nodes);

    double operator()(double x) const;

    bool is_affine() const { return std::holds_alternative<AffineRate>(rep_); }
    const AffineRate* as_affine() const { return std::get_if<AffineRate>(&rep_); }
    const TabulatedRate* as_tabulated() const { return std::get_if<TabulatedRate>(&rep_); }

    /// One-sided slope of the rate at x approached from inside [lo, hi].
    double boundary_slope(double x, double lo, double hi) const;

private:
    std::variant<AffineRate, TabulatedRate> rep_ = AffineRate{};
};

/// Evaluate a rate function. Tabulated rates throw OutOfDomainError outside
/// their node span; affine rates evaluate everywhere.
double evaluate_rate(const RateFunction& r, double x);

/// The model interval [a/b, c/d].
struct DomainInterval {
    double left = 0.0;
    double right = 0.0;

    double length() const { return right - left; }
    double midpoint() const { return 0.5 * (left + right); }
    bool contains(double x) const { return x >= left && x <= right; }
    bool contains_open(double x) const { return x > left && x < right; }
};

/// Min/max of a rate over an interval: exact for affine (attained at the
/// endpoints), conservative node min/max for tabulated.
std::pair<double, double> rate_bounds(const RateFunction& r, const DomainInterval& iv);

/// Raw model parameters: drifts a - b*x (mode 1) and c - d*x (mode 2), and
/// switching rates lambda (1 -> 2) and mu (2 -> 1).
struct ModelParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    RateFunction lambda;
    RateFunction mu;
};

/// strict rejects any rate that is not positive on the closed interval,
/// except a zero value at a single endpoint (accepted with a warning).
/// permissive downgrades interior nonpositivity to a warning as well; only
/// the stationary machinery accepts such models.
enum class ValidationPolicy { strict, permissive };

/// A validated model: canonical parameters plus the derived interval.
/// Immutable; safe to share across threads.
class Model {
public:
    const ModelParams& params() const { return params_; }
    const DomainInterval& interval() const { return interval_; }

    double a() const { return params_.a; }
    double b() const { return params_.b; }
    double c() const { return params_.c; }
    double d() const { return params_.d; }

    /// Mode-1 velocity a - b*x, evaluated in the factored form -b*(x - xL)
    /// so that it vanishes exactly at the left endpoint.
    double drift1(double x) const { return -params_.b * (x - interval_.left); }
    /// Mode-2 velocity c - d*x = d*(xR - x); vanishes exactly at the right endpoint.
    double drift2(double x) const { return params_.d * (interval_.right - x); }

    double lambda_at(double x) const;
    double mu_at(double x) const;

    std::pair<double, double> lambda_bounds() const { return rate_bounds(params_.lambda, interval_); }
    std::pair<double, double> mu_bounds() const { return rate_bounds(params_.mu, interval_); }

    bool rates_affine() const { return params_.lambda.is_affine() && params_.mu.is_affine(); }
    /// True when both rates are > 0 on the whole closed interval.
    bool rates_strictly_positive() const { return strictly_positive_; }

    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    friend Model validate(ModelParams params, ValidationPolicy policy);

    Model() = default;

    ModelParams params_;
    DomainInterval interval_;
    bool strictly_positive_ = true;
    std::vector<std::string> warnings_;
};

/// Entry gate: checks ad < bc, b > 0, d > 0, and rate positivity on a
/// 1024-point probe grid (tabulated) or at the endpoints (affine).
Model validate(ModelParams params, ValidationPolicy policy = ValidationPolicy::strict);

}  // namespace switchflow
