#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cesaro/grid.hpp"

namespace cesaro {

enum class WeightKind { Power, Tabulated };

/// The weight w and exponent p defining the space C_{p,w} on (0, l).
/// Construction enforces only p > 1 (the theory needs the conjugate
/// exponent q = p/(p-1)); the analytic conditions on w are checked by
/// validate_weight and required by PsiTransform.
struct WeightSpec {
    WeightKind kind = WeightKind::Power;
    double p = 2.0;
    double l = 1.0;
    double s = -1.0;                          // power exponent, w(x) = x^s
    std::optional<SampledFunction> table;     // tabulated w samples
    std::optional<double> head_exponent;      // declared decay of w near 0

    static WeightSpec power(double s, double p, double l);
    static WeightSpec tabulated(SampledFunction w, double p, double l,
                                std::optional<double> head_exponent);

    double q() const { return p / (p - 1.0); }

    /// w(x). Tabulated weights interpolate linearly, use the declared head
    /// model below the table and reject points beyond it.
    double eval(double x) const;
};

/// Outcome of checking one weight condition. `assumed` marks conclusions
/// that rest on the declared head model rather than the data.
struct ConditionReport {
    bool pass = false;
    bool assumed = false;
    double quantity = 0.0;
    std::string detail;
};

struct WeightDiagnosis {
    ConditionReport positivity;       // w > 0 a.e.
    ConditionReport tail_integrable;  // integral of w^p from x to l finite
    ConditionReport head_divergent;   // integral of w^p over (0, l) infinite

    bool ok() const {
        return positivity.pass && tail_integrable.pass && head_divergent.pass;
    }
};

/// Diagnose the three weight conditions. Never throws: returns pass/fail
/// with the offending quantity per condition.
WeightDiagnosis validate_weight(const WeightSpec& spec);

/// Psi(x) = integral of w^p over (x, l): strictly decreasing, blows up at 0,
/// vanishes at l. Closed form for power weights; a right-cumulative
/// trapezoid table plus declared head model for tabulated ones.
/// Cheap to copy; immutable and thread-safe.
class PsiTransform {
  public:
    explicit PsiTransform(WeightSpec spec);

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;

    /// The unique x with Psi(x) = u, u > 0. For tabulated weights, values
    /// above the table head require the declared head model.
    double inverse(double u) const;

    const WeightSpec& weight() const;
    double l() const;
    double p() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

inline double psi_eval(const PsiTransform& psi, double x) { return psi.eval(x); }
inline double psi_inverse(const PsiTransform& psi, double u) {
    return psi.inverse(u);
}

/// Grid whose points have equal Psi-increments between x_min and x_max.
GridPtr make_grid_in_psi(const PsiTransform& psi, std::size_t n, double x_min,
                         double x_max);

} // namespace cesaro
