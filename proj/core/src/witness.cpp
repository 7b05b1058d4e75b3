#include "cesaro/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cesaro {

namespace {

constexpr double kTinyMass = 1e-14;

struct Scaffold {
    SampledFunction fn;   // f scaled to dual norm one
    double nu = 1.0;
    PsiTransform psi;
    Majorant hat;
    std::vector<double> hat_vals;  // majorant at grid points
    std::vector<double> h;         // (D_Psi+)^(q/p), right-continuous
    std::vector<double> gap;       // majorant minus |fn|
    std::vector<double> head_mass; // dual q-mass on (0, x_i]
    double total_mass = 1.0;
    double contact_tol = 0.0;
    std::size_t a_idx = 0, b_idx = 0;
    double gamma = 0.0;
    double h_b = 0.0;
    std::vector<std::size_t> cuts;  // partition grid indices, a..b
    std::vector<PartitionCell> cells;
    double kappa_base = 0.0;        // h at a
    bool brackets_met = true;
    std::string notes;
    int steep_cells = 0;    // single-step cells past the decrement target
    int merged_cells = 0;   // slice-mode merges

    Scaffold(SampledFunction f, PsiTransform ps, Majorant m)
        : fn(std::move(f)), psi(std::move(ps)), hat(std::move(m)) {}
};

// Dual q-mass on [u, u_max], evaluated on the majorant segments through a
// precomputed suffix table.
class MassAbove {
  public:
    MassAbove(const Majorant& hat, double q) : hat_(hat) {
        const auto us = hat.knots_u();
        const auto sl = hat.slopes();
        powq_.resize(sl.size());
        suffix_.assign(sl.size() + 1, 0.0);
        for (std::size_t k = sl.size(); k-- > 0;) {
            powq_[k] = std::pow(sl[k], q);
            suffix_[k] = suffix_[k + 1] + powq_[k] * (us[k + 1] - us[k]);
        }
    }

    double total() const { return suffix_.empty() ? 0.0 : suffix_.front(); }

    double operator()(double u) const {
        const auto us = hat_.knots_u();
        if (powq_.empty() || u >= us.back()) return 0.0;
        if (u <= us.front()) return suffix_.front();
        const auto it = std::upper_bound(us.begin(), us.end(), u);
        const std::size_t k = static_cast<std::size_t>(it - us.begin()) - 1;
        return powq_[k] * (us[k + 1] - u) + suffix_[k + 1];
    }

  private:
    const Majorant& hat_;
    std::vector<double> powq_;
    std::vector<double> suffix_;
};

Scaffold build_scaffold(const SampledFunction& f, const WeightSpec& wspec,
                        double eps, int min_contacts) {
    const PsiTransform psi(wspec);
    const double q = wspec.q();
    const double p = wspec.p;

    const double nu = dual_norm(f, wspec).value;
    if (!(nu > 0.0))
        throw ValidationError("witness: f has zero dual norm, nothing to norm");

    std::vector<double> scaled(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = f.values[i] / nu;
    SampledFunction fn{f.grid, std::move(scaled)};
    Majorant hat = essential_majorant(fn, psi);

    Scaffold sc{std::move(fn), psi, std::move(hat)};
    sc.nu = nu;
    const std::size_t n = sc.fn.size();

    sc.hat_vals.resize(n);
    sc.h.resize(n);
    sc.gap.resize(n);
    sc.head_mass.resize(n);
    const MassAbove mass_above(sc.hat, q);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = sc.fn.x(i);
        sc.hat_vals[i] = sc.hat.eval(x);
        sc.h[i] = std::pow(sc.hat.slope_at_x(x), q / p);
        sc.gap[i] = std::max(sc.hat_vals[i] - std::abs(sc.fn.values[i]), 0.0);
        sc.head_mass[i] = mass_above(sc.psi.eval(x));
    }
    sc.total_mass = mass_above.total();

    const double cut_mass = 0.5 * std::pow(eps, p);

    // b: smallest interior grid point so the dual mass beyond it is at most
    // eps^p/2. The last point is excluded: the clipped extension makes h
    // vanish there and the contact tolerance meaningless. When the grid is
    // too coarse in u near l to realize the cut, take the interior point of
    // smallest tail mass and report the excess; the final norm and pairing
    // checks remain the arbiter.
    std::size_t b = n;
    for (std::size_t i = 2; i + 1 < n; ++i) {
        if (sc.total_mass - sc.head_mass[i] <= cut_mass) {
            b = i;
            break;
        }
    }
    if (b >= n) {
        b = n - 2;
        const double excess = sc.total_mass - sc.head_mass[b] - cut_mass;
        std::ostringstream note;
        note << "tail cut exceeds eps^p/2 by " << excess << " (grid-limited). ";
        sc.notes += note.str();
    }

    // a: largest grid point below b keeping the head mass small.
    std::size_t a = n;
    for (std::size_t i = 0; i + 2 <= b; ++i)
        if (sc.head_mass[i] <= cut_mass) a = i;
    if (a >= n)
        throw NumericalError(
            "witness: cannot cut the dual-mass head below eps^p/2 on this grid");

    // Move b off a large h-jump so the partition never anchors on one.
    const double gamma0 = std::pow(sc.psi.eval(sc.fn.x(a)), 1.0 / p);
    while (b + 2 < n && sc.h[b] - sc.h[b - 1] >= eps / (4.0 * gamma0)) ++b;

    sc.h_b = sc.h[b];
    if (!(sc.h_b > 0.0))
        throw NumericalError(
            "witness: h vanishes at the tail cut; the dual mass sits beyond "
            "the grid");
    sc.contact_tol = eps / (4.0 * sc.h_b);

    // If h(a) > 0 the kappa term needs contact in the first cell: step a
    // just below the nearest contact point, which the half-open first cell
    // then contains. Slice mode steps below the min_contacts-th one so the
    // leading cell (or a bracket anchored there) can be split.
    if (sc.h[a] > 0.0) {
        std::size_t below = n;
        int found = 0;
        for (std::size_t i = a + 1; i-- > 0;) {
            if (sc.gap[i] <= sc.contact_tol) {
                below = i;
                if (++found == min_contacts) break;
            }
        }
        if (found == min_contacts && below >= 1) {
            a = below - 1;
        } else if (found > 0 && below >= 1) {
            a = below - 1;
            sc.notes += "fewer leading contact points than requested. ";
        } else {
            sc.notes += "no contact point at or below a; kappa term may be "
                        "dropped. ";
        }
    }

    sc.a_idx = a;
    sc.b_idx = b;
    sc.gamma = std::pow(sc.psi.eval(sc.fn.x(a)), 1.0 / p);
    const double jump_threshold = eps / (4.0 * sc.gamma);

    // Jump brackets isolate genuine kinks of h: jumps that are both large
    // against the eps budget and large against the neighbouring slope
    // changes. A smooth hull has a small slope change at every grid point;
    // those are discretization texture, not kinks, and stay with the
    // ordinary cells (cut down to single grid steps when needed).
    struct Bracket {
        std::size_t lo, hi;
        double jump = 0.0;
    };
    std::vector<Bracket> brackets;
    {
        std::vector<std::size_t> verts;
        std::vector<double> jumps;
        for (std::size_t i = a + 1; i <= b; ++i) {
            const double jump = sc.h[i] - sc.h[i - 1];
            if (jump > 0.0) {
                verts.push_back(i);
                jumps.push_back(jump);
            }
        }
        for (std::size_t k = 0; k < verts.size(); ++k) {
            if (jumps[k] < jump_threshold) continue;
            const double prev = k > 0 ? jumps[k - 1] : 0.0;
            const double next = k + 1 < verts.size() ? jumps[k + 1] : 0.0;
            if (jumps[k] < 4.0 * std::max(prev, next)) continue;
            const std::size_t i = verts[k];
            const std::size_t lo = std::max(i - 1, a);
            const std::size_t hi = std::min(i + 1, b);
            if (!brackets.empty() && brackets.back().hi >= lo) {
                brackets.back().hi = hi;
                brackets.back().jump += jumps[k];
            } else {
                brackets.push_back({lo, hi, jumps[k]});
            }
        }
    }

    auto contacts_inside = [&](std::size_t lo, std::size_t hi) {
        int c = 0;
        for (std::size_t i = lo + 1; i <= hi; ++i)
            if (sc.gap[i] <= sc.contact_tol) ++c;
        return c;
    };

    // Slice mode needs two contact points per mass-bearing cell; widen
    // brackets (they always carry mass) until they can be split, preferring
    // the side whose next point is itself a contact so the bracket stays
    // tight around the jump.
    if (min_contacts > 1) {
        bool merged = true;
        while (merged) {
            merged = false;
            for (std::size_t k = 0; k < brackets.size(); ++k) {
                auto& br = brackets[k];
                while (contacts_inside(br.lo, br.hi) < min_contacts) {
                    const bool can_left = br.lo > a;
                    const bool can_right = br.hi < b;
                    if (!can_left && !can_right)
                        throw NumericalError(
                            "slice witness: a contact cell cannot be split on "
                            "this grid; refine the grid");
                    const bool left_contact =
                        can_left && sc.gap[br.lo] <= sc.contact_tol;
                    const bool right_contact =
                        can_right && sc.gap[br.hi + 1] <= sc.contact_tol;
                    if (left_contact)
                        --br.lo;
                    else if (right_contact)
                        ++br.hi;
                    else if (can_left)
                        --br.lo;
                    else
                        ++br.hi;
                }
                if (k + 1 < brackets.size() && br.hi >= brackets[k + 1].lo) {
                    br.hi = std::max(br.hi, brackets[k + 1].hi);
                    br.jump += brackets[k + 1].jump;
                    brackets.erase(brackets.begin() +
                                   static_cast<std::ptrdiff_t>(k + 1));
                    merged = true;
                    break;
                }
            }
        }
    }

    const double bracket_count = std::max<double>(1.0, brackets.size());

    // Partition: greedy cells with small h-increment and small majorant
    // decrement, brackets kept as single cells.
    sc.cuts.clear();
    sc.cuts.push_back(a);
    const double h_step = eps / (4.0 * sc.gamma);
    const double hat_step = eps / (4.0 * sc.h_b);
    auto greedy = [&](std::size_t from, std::size_t to) {
        std::size_t cur = from;
        while (cur < to) {
            std::size_t j = cur + 1;
            std::size_t ok = cur + 1;
            while (j <= to && sc.h[j] - sc.h[cur] <= h_step &&
                   sc.hat_vals[cur] - sc.hat_vals[j] <= hat_step) {
                ok = j;
                ++j;
            }
            if (ok == cur + 1 &&
                (sc.hat_vals[cur] - sc.hat_vals[ok] > hat_step ||
                 sc.h[ok] - sc.h[cur] > h_step))
                ++sc.steep_cells;
            sc.cuts.push_back(ok);
            cur = ok;
        }
    };
    std::size_t walker = a;
    for (const auto& br : brackets) {
        greedy(walker, br.lo);
        if (sc.cuts.back() != br.lo) sc.cuts.push_back(br.lo);
        sc.cuts.push_back(br.hi);
        walker = br.hi;
    }
    greedy(walker, b);

    // Cells with contact sets; a cell is (x_lo, x_hi], so the vertex that
    // carries each h-jump always lies in the cell accumulating it.
    std::size_t next_bracket = 0;
    for (std::size_t c = 0; c + 1 < sc.cuts.size(); ++c) {
        PartitionCell cell;
        cell.lo = sc.cuts[c];
        cell.hi = sc.cuts[c + 1];
        cell.delta_h = sc.h[cell.hi] - sc.h[cell.lo];
        if (next_bracket < brackets.size() &&
            brackets[next_bracket].lo == cell.lo &&
            brackets[next_bracket].hi == cell.hi) {
            const auto& br = brackets[next_bracket];
            cell.jump_bracket = true;
            cell.jump_size = br.jump;
            cell.psi_mass = sc.psi.eval(sc.fn.x(cell.lo)) -
                            sc.psi.eval(sc.fn.x(cell.hi));
            cell.psi_bound = std::pow(eps, p) /
                             (std::pow(2.0, p) * bracket_count *
                              std::pow(br.jump, p));
            cell.psi_bound_met = cell.psi_mass <= cell.psi_bound;
            if (!cell.psi_bound_met) sc.brackets_met = false;
            ++next_bracket;
        }
        for (std::size_t i = cell.lo + 1; i <= cell.hi; ++i)
            if (sc.gap[i] <= sc.contact_tol) cell.contact.push_back(i);
        if (cell.delta_h > kTinyMass && cell.contact.empty())
            throw NumericalError(
                "witness: a mass-bearing cell has an empty contact set "
                "(cell starting at x = " +
                std::to_string(sc.fn.x(cell.lo)) + "); refine the grid");
        sc.cells.push_back(std::move(cell));
    }

    // Slice mode: a mass-bearing cell with fewer than two contact points
    // cannot be split into disjoint halves; merge it with a neighbour and
    // let the final bound checks arbitrate the coarser partition.
    if (min_contacts > 1) {
        auto merge_into = [&](std::size_t dst, std::size_t src) {
            auto& cd = sc.cells[dst];
            const auto& cs = sc.cells[src];
            cd.lo = std::min(cd.lo, cs.lo);
            cd.hi = std::max(cd.hi, cs.hi);
            cd.delta_h = sc.h[cd.hi] - sc.h[cd.lo];
            cd.jump_bracket = cd.jump_bracket || cs.jump_bracket;
            cd.jump_size += cs.jump_size;
            if (cd.jump_bracket) {
                cd.psi_mass = sc.psi.eval(sc.fn.x(cd.lo)) -
                              sc.psi.eval(sc.fn.x(cd.hi));
                cd.psi_bound = std::pow(eps, p) /
                               (std::pow(2.0, p) * bracket_count *
                                std::pow(std::max(cd.jump_size, kTinyMass), p));
                cd.psi_bound_met = cd.psi_mass <= cd.psi_bound;
            }
            cd.contact.clear();
            for (std::size_t i = cd.lo + 1; i <= cd.hi; ++i)
                if (sc.gap[i] <= sc.contact_tol) cd.contact.push_back(i);
            sc.cells.erase(sc.cells.begin() + static_cast<std::ptrdiff_t>(src));
        };
        auto deficient = [&](std::size_t c) {
            const auto& cell = sc.cells[c];
            const bool needs_split =
                cell.delta_h > kTinyMass ||
                (c == 0 && sc.h[a] > 0.0 && !cell.contact.empty());
            return needs_split && cell.contact.size() <
                                      static_cast<std::size_t>(min_contacts);
        };
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t c = 0; c < sc.cells.size(); ++c) {
                if (!deficient(c)) continue;
                // Runs of deficient cells pair up with each other; an
                // isolated one joins its left neighbour, where the majorant
                // is at least as large, so the pairing bound is kept.
                if (c + 1 < sc.cells.size() && deficient(c + 1))
                    merge_into(c, c + 1);
                else if (c > 0)
                    merge_into(c - 1, c);
                else if (c + 1 < sc.cells.size())
                    merge_into(c, c + 1);
                else
                    throw NumericalError(
                        "slice witness: a contact cell with a single grid "
                        "point cannot be split; refine the grid");
                ++sc.merged_cells;
                again = true;
                break;
            }
        }
        sc.cuts.clear();
        sc.cuts.push_back(sc.cells.front().lo);
        sc.brackets_met = true;
        for (const auto& cell : sc.cells) {
            sc.cuts.push_back(cell.hi);
            if (cell.jump_bracket && !cell.psi_bound_met)
                sc.brackets_met = false;
        }
    }

    if (sc.steep_cells > 0) {
        std::ostringstream note;
        note << sc.steep_cells << " single-step cell(s) exceed the increment "
             << "targets (grid-limited). ";
        sc.notes += note.str();
    }
    if (sc.merged_cells > 0) {
        std::ostringstream note;
        note << sc.merged_cells << " cell merge(s) to keep contact sets "
             << "splittable. ";
        sc.notes += note.str();
    }

    sc.kappa_base = sc.h[a];
    return sc;
}

double cell_measure_of(const SampledFunction& f,
                       const std::vector<std::size_t>& idx) {
    double m = 0.0;
    for (std::size_t i : idx) m += f.grid->cell_width(i);
    return m;
}

// Assemble the witness step function from per-cell contact sets.
SampledFunction assemble(const Scaffold& sc,
                         const std::vector<const std::vector<std::size_t>*>&
                             supports,
                         double kappa) {
    std::vector<double> g(sc.fn.size(), 0.0);
    for (std::size_t c = 0; c < sc.cells.size(); ++c) {
        const auto& idx = *supports[c];
        if (idx.empty()) continue;
        double coeff = 0.0;
        if (sc.cells[c].delta_h > kTinyMass)
            coeff = sc.cells[c].delta_h / cell_measure_of(sc.fn, idx);
        if (c == 0) coeff += kappa;
        if (coeff == 0.0) continue;
        for (std::size_t i : idx) g[i] += coeff;
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (sc.fn.values[i] < 0.0) g[i] = -g[i];
    return SampledFunction{sc.fn.grid, std::move(g)};
}

} // namespace

HFunctionResult h_function(const SampledFunction& f, const WeightSpec& wspec) {
    const double nu = dual_norm(f, wspec).value;
    if (!(nu > 0.0))
        throw ValidationError("h_function: f has zero dual norm");
    const PsiTransform psi(wspec);
    std::vector<double> scaled(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = f.values[i] / nu;
    SampledFunction fn{f.grid, std::move(scaled)};
    const Majorant hat = essential_majorant(fn, psi);
    const double qp = wspec.q() / wspec.p;
    std::vector<double> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        h[i] = std::pow(hat.slope_at_x(f.x(i)), qp);
    return HFunctionResult{SampledFunction{f.grid, std::move(h)}, nu};
}

WitnessReport near_optimizer(const SampledFunction& f, const WeightSpec& wspec,
                             double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw ValidationError("near_optimizer: eps must lie in (0, 1)");
    Scaffold sc = build_scaffold(f, wspec, eps, 1);

    const double m0 = cell_measure_of(sc.fn, sc.cells.front().contact);
    double kappa = 0.0;
    if (sc.kappa_base > 0.0) {
        if (m0 > 0.0) {
            kappa = sc.kappa_base / m0;
        } else {
            sc.notes += "kappa term dropped: first cell has no contact. ";
        }
    }

    std::vector<const std::vector<std::size_t>*> supports;
    supports.reserve(sc.cells.size());
    for (const auto& cell : sc.cells) supports.push_back(&cell.contact);
    SampledFunction g = assemble(sc, supports, kappa);

    WitnessReport r{std::move(g)};
    r.epsilon = eps;
    r.normalization = sc.nu;
    r.a = sc.fn.x(sc.a_idx);
    r.b = sc.fn.x(sc.b_idx);
    r.gamma = sc.gamma;
    r.kappa = kappa;
    for (std::size_t c : sc.cuts) r.partition.push_back(sc.fn.x(c));
    r.cells = sc.cells;
    r.bracket_bounds_met = sc.brackets_met;
    r.notes = sc.notes;

    r.norm_bound = 1.0 + eps;
    r.pairing_bound = (1.0 - 3.0 * eps) * (1.0 + eps);
    r.achieved_norm = cesaro_norm(r.g, wspec).value;
    r.achieved_pairing = pairing(sc.fn, r.g);
    r.duality_gap =
        r.achieved_norm > 0.0
            ? 1.0 - r.achieved_pairing / r.achieved_norm
            : 1.0;

    if (r.achieved_norm > r.norm_bound * (1.0 + 1e-9))
        throw NumericalError("near_optimizer: witness norm " +
                             std::to_string(r.achieved_norm) +
                             " exceeds 1+eps");
    if (r.achieved_pairing < r.pairing_bound - 1e-9) {
        std::ostringstream msg;
        msg << "near_optimizer: witness pairing " << r.achieved_pairing
            << " misses the bound " << r.pairing_bound << " (a=" << r.a
            << ", b=" << r.b << ", cells=" << r.cells.size() << ")";
        throw NumericalError(msg.str());
    }
    return r;
}

WitnessReport slice_witnesses(const SampledFunction& f,
                              const WeightSpec& wspec, double eps,
                              double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw ValidationError("slice_witnesses: eta must lie in (0, 1)");
    if (!(eps > 0.0 && eps < eta / 10.0))
        throw ValidationError("slice_witnesses: need 0 < eps < eta/10");

    Scaffold sc = build_scaffold(f, wspec, eps, 2);

    // Split each contact set into disjoint halves of positive measure by
    // alternating grid cells; deterministic, so runs are reproducible.
    for (auto& cell : sc.cells) {
        const bool needs_mass = cell.delta_h > kTinyMass;
        for (std::size_t k = 0; k < cell.contact.size(); ++k)
            (k % 2 == 0 ? cell.contact_b : cell.contact_c)
                .push_back(cell.contact[k]);
        if (needs_mass &&
            (cell.contact_b.empty() || cell.contact_c.empty()))
            throw NumericalError(
                "slice witness: a contact cell with a single grid point "
                "cannot be split; refine the grid");
    }

    auto& first = sc.cells.front();
    double kappa1 = 0.0, kappa2 = 0.0;
    if (sc.kappa_base > 0.0 && !first.contact.empty()) {
        if (first.contact_b.empty() || first.contact_c.empty())
            throw NumericalError(
                "slice witness: the kappa cell cannot be split; refine the "
                "grid");
        kappa1 = sc.kappa_base / cell_measure_of(sc.fn, first.contact_b);
        kappa2 = sc.kappa_base / cell_measure_of(sc.fn, first.contact_c);
    } else if (sc.kappa_base > 0.0) {
        sc.notes += "kappa terms dropped: first cell has no contact. ";
    }

    std::vector<const std::vector<std::size_t>*> sup_b, sup_c;
    for (const auto& cell : sc.cells) {
        sup_b.push_back(&cell.contact_b);
        sup_c.push_back(&cell.contact_c);
    }
    SampledFunction g1 = assemble(sc, sup_b, kappa1);
    SampledFunction g2 = assemble(sc, sup_c, kappa2);

    for (std::size_t i = 0; i < g1.size(); ++i)
        if (g1.values[i] != 0.0 && g2.values[i] != 0.0)
            throw NumericalError("slice witness: supports are not disjoint");

    WitnessReport r{std::move(g1)};
    r.epsilon = eps;
    r.eta = eta;
    r.normalization = sc.nu;
    r.a = sc.fn.x(sc.a_idx);
    r.b = sc.fn.x(sc.b_idx);
    r.gamma = sc.gamma;
    r.kappa = kappa1;
    r.kappa2 = kappa2;
    for (std::size_t c : sc.cuts) r.partition.push_back(sc.fn.x(c));
    r.cells = sc.cells;
    r.bracket_bounds_met = sc.brackets_met;
    r.notes = sc.notes;

    r.norm_bound = 1.0 + eps;
    r.pairing_bound = (1.0 - 3.0 * eps) * (1.0 + eps);
    r.achieved_norm = cesaro_norm(r.g, wspec).value;
    r.achieved_pairing = pairing(sc.fn, r.g);
    r.achieved_norm2 = cesaro_norm(g2, wspec).value;
    r.achieved_pairing2 = pairing(sc.fn, g2);

    std::vector<double> diff(r.g.values);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= g2.values[i];
    const double dist =
        cesaro_norm(SampledFunction{sc.fn.grid, std::move(diff)}, wspec).value;
    r.diameter_lower = dist / (1.0 + eps);
    r.g2 = std::move(g2);

    const double slice_level = 1.0 - eta;
    for (int j = 0; j < 2; ++j) {
        const double nrm = j == 0 ? r.achieved_norm : r.achieved_norm2;
        const double pr = j == 0 ? r.achieved_pairing : r.achieved_pairing2;
        if (nrm > r.norm_bound * (1.0 + 1e-9))
            throw NumericalError("slice witness: norm exceeds 1+eps");
        if (pr / (1.0 + eps) <= slice_level)
            throw NumericalError("slice witness: pairing misses the slice");
    }
    if (r.diameter_lower < 2.0 - 6.0 * eps - 1e-7)
        throw NumericalError("slice witness: diameter bound 2-6eps missed");
    return r;
}

L1EscapeReport l1_escape_sequence(const WeightSpec& wspec, int n) {
    if (n < 1) throw ValidationError("l1_escape_sequence: n must be >= 1");
    const PsiTransform psi(wspec);
    const double p = wspec.p;
    const bool finite = !std::isinf(wspec.l);

    const double a_lo = psi.inverse(std::pow(double(n), -p));
    const double a_hi = finite
                            ? psi.inverse(std::pow(double(n) + 1.0, -p))
                            : a_lo + double(n);
    if (!(a_lo < a_hi) || !(a_hi < wspec.l))
        throw ValidationError(
            "l1_escape_sequence: support interval not resolvable inside (0, l)");

    const double width = a_hi - a_lo;
    const double delta = width * 1e-9;
    if (delta <= 8.0 * std::numeric_limits<double>::epsilon() * a_hi)
        throw ValidationError(
            "l1_escape_sequence: the support interval for this n is too "
            "narrow to resolve in double precision near l");
    const double height = double(n) / (width - delta);

    // Zero head, a thin ramp up at a_lo, a plateau, a thin ramp down at
    // a_hi, then zeros out to the truncation point. The trapezoid mass is
    // exactly height * (width - delta) = n.
    std::vector<double> xs, vs;
    xs.push_back(0.5 * a_lo);
    xs.push_back(0.75 * a_lo);
    xs.push_back(a_lo);
    vs.insert(vs.end(), {0.0, 0.0, 0.0});

    const int plateau = 48;
    for (int k = 0; k <= plateau; ++k) {
        xs.push_back(a_lo + delta +
                     (width - 2.0 * delta) * double(k) / double(plateau));
        vs.push_back(height);
    }
    xs.push_back(a_hi);
    vs.push_back(0.0);

    const double x_max =
        finite ? a_hi + 0.9 * (wspec.l - a_hi) : a_hi + 0.5 * (a_hi + 1.0);
    const int tail_pts = 64;
    for (int k = 1; k <= tail_pts; ++k) {
        xs.push_back(a_hi + (x_max - a_hi) * double(k) / double(tail_pts));
        vs.push_back(0.0);
    }

    auto grid = std::make_shared<Grid>(std::move(xs), wspec.l,
                                       GridScheme::Custom);
    L1EscapeReport r{SampledFunction{grid, std::move(vs)}};
    r.n = n;
    r.a_lo = a_lo;
    r.a_hi = a_hi;
    r.l1 = trapezoid_integral(r.g, grid->x_min(), grid->x_max());
    r.cesaro = cesaro_norm(r.g, wspec).value;
    std::ostringstream note;
    note << "support (" << a_lo << ", " << a_hi << "), plateau height "
         << height;
    r.note = note.str();
    return r;
}

} // namespace cesaro
