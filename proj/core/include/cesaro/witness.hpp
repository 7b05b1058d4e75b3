#pragma once

#include <optional>
#include <string>

#include "cesaro/norms.hpp"

namespace cesaro {

/// One cell (x_lo, x_hi] of the witness partition. Contact sets are
/// half-open on the left so a slope jump at the right boundary lands in
/// its own cell together with the hull vertex carrying it.
struct PartitionCell {
    std::size_t lo = 0;
    std::size_t hi = 0;
    double delta_h = 0.0;
    bool jump_bracket = false;
    double jump_size = 0.0;    // summed h-jump isolated by a bracket
    double psi_mass = 0.0;     // weight mass of the bracket
    double psi_bound = 0.0;    // target mass for the bracket
    bool psi_bound_met = true;
    std::vector<std::size_t> contact;       // grid indices
    std::vector<std::size_t> contact_b;     // disjoint halves (slice)
    std::vector<std::size_t> contact_c;
};

/// The constructed near-optimal g (or disjoint pair g1, g2) with the
/// achieved norm and pairing and the internal partition data.
struct WitnessReport {
    explicit WitnessReport(SampledFunction g0) : g(std::move(g0)) {}

    SampledFunction g;
    std::optional<SampledFunction> g2;

    double epsilon = 0.0;
    double eta = 0.0;            // slice parameter, zero otherwise
    double normalization = 1.0;  // dual norm of the input f
    double a = 0.0;
    double b = 0.0;
    double gamma = 0.0;          // Psi(a)^(1/p)
    double kappa = 0.0;
    double kappa2 = 0.0;

    std::vector<double> partition;     // the cut points a_n as x-values
    std::vector<PartitionCell> cells;

    double achieved_norm = 0.0;
    double achieved_pairing = 0.0;
    double achieved_norm2 = 0.0;
    double achieved_pairing2 = 0.0;
    double norm_bound = 0.0;       // 1 + eps
    double pairing_bound = 0.0;    // (1 - 3 eps)(1 + eps)
    double duality_gap = 0.0;      // 1 - pairing / norm
    double diameter_lower = 0.0;   // ||g1 - g2|| / (1 + eps)

    bool bracket_bounds_met = true;
    std::string notes;
};

struct HFunctionResult {
    SampledFunction h;
    double normalization = 1.0;
};

/// h = (D_Psi+ of the majorant)^(q/p) for f normalized to dual norm one.
/// Increasing in x; the factor used for normalization is reported.
HFunctionResult h_function(const SampledFunction& f, const WeightSpec& wspec);

/// The near-optimal witness: cuts (a, b) carrying all but eps^p of the
/// dual mass, a partition with small h-increments and isolated jumps,
/// contact sets where |f| touches its majorant, and the step function g
/// supported there. Guarantees ||g|| <= 1+eps and <f/nu, g> >= (1-3eps)(1+eps).
WitnessReport near_optimizer(const SampledFunction& f, const WeightSpec& wspec,
                             double eps);

/// The slice-diameter pair: contact cells split into disjoint halves giving
/// g1, g2 with disjoint supports, both in the slice {<f,.> > 1-eta} of the
/// unit ball after scaling by 1+eps, and ||g1-g2||/(1+eps) >= 2-6 eps.
WitnessReport slice_witnesses(const SampledFunction& f,
                              const WeightSpec& wspec, double eps, double eta);

struct L1EscapeReport {
    explicit L1EscapeReport(SampledFunction g0) : g(std::move(g0)) {}

    SampledFunction g;
    int n = 0;
    double a_lo = 0.0;   // solves Psi(a) = n^-p
    double a_hi = 0.0;   // right end of the support interval
    double cesaro = 0.0;
    double l1 = 0.0;
    std::string note;
};

/// The L1-escape function g_n: unit Cesaro norm (up to the ramp deficit),
/// L1 norm exactly n. Witnesses that C_{p,w} never embeds into L_1.
L1EscapeReport l1_escape_sequence(const WeightSpec& wspec, int n);

} // namespace cesaro
