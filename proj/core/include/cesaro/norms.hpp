#pragma once

#include <string>

#include "cesaro/majorant.hpp"

namespace cesaro {

enum class NormMethod { Quadrature, SegmentSum };

struct NormReport {
    double value = 0.0;
    NormMethod method = NormMethod::Quadrature;
    std::string truncation_note;
};

/// A_w f(x_i) = w(x_i) * integral of |f| over (0, x_i].
SampledFunction apply_Aw(const SampledFunction& f, const WeightSpec& wspec);

/// ||A_w f||_p. L_p quadrature over the grid plus the closed-form head
/// (constant extension of f below x_1, power weights) and the closed-form
/// tail (f treated as zero beyond x_N, so A_w f = w * F(x_N) there).
NormReport cesaro_norm(const SampledFunction& f, const WeightSpec& wspec);

/// B_w f(x_i) = w(x_i)^(p-1) * D_Psi+ of the majorant of |f| at x_i.
SampledFunction apply_Bw(const SampledFunction& f, const WeightSpec& wspec);

/// The exact dual norm ||B_w f||_q via the segment sum: sum over majorant
/// segments of slope^q * (u_{k+1} - u_k). Exact for the piecewise model.
NormReport dual_norm(const SampledFunction& f, const WeightSpec& wspec);

/// Cross-check route: midpoint-rule L_q quadrature of B_w f in x. Within
/// each grid cell the slope is the model's constant; the weight is sampled
/// mid-cell, so this route integrates w^p numerically instead of through
/// the Psi closed form.
NormReport dual_norm_quadrature(const SampledFunction& f,
                                const WeightSpec& wspec);

/// Trapezoid integral of the pointwise product over the common grid.
double pairing(const SampledFunction& f, const SampledFunction& g);

struct HolderReport {
    double lhs = 0.0;    // |pairing|
    double rhs = 0.0;    // dual_norm(f) * cesaro_norm(g)
    double slack = 0.0;  // rhs - lhs
};

/// The duality inequality |<f, g>| <= ||B_w f||_q ||g||_{C_{p,w}}.
HolderReport holder_check(const SampledFunction& f, const SampledFunction& g,
                          const WeightSpec& wspec);

struct DualMembershipReport {
    double majorant_max = 0.0;   // value of the majorant at x_1
    double tail_value = 0.0;     // value of the majorant at x_N
    double tail_ratio = 0.0;     // tail relative to the maximum
    double eta = 0.0;            // threshold used for the tail test
    bool tail_vanishes = false;
    double first_slope = 0.0;    // D_Psi+ at x_1 (limit toward 0 proxy)
    double dual_norm_value = 0.0;
    bool member = false;
};

/// The three membership conditions for the Koethe dual: finite majorant,
/// vanishing tail, finite ||B_w f||_q. Reported, never enforced.
DualMembershipReport dual_membership(const SampledFunction& f,
                                     const WeightSpec& wspec,
                                     double eta = 1e-3);

} // namespace cesaro
