#include "cesaro/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cesaro/oracle.hpp"

namespace cesaro {

namespace {

bool log_enabled() {
    const char* v = std::getenv("CESARO_LOG");
    return v != nullptr && *v != '\0';
}

void log_note(const std::string& msg) {
    if (log_enabled()) std::cerr << "[cesaro] " << msg << "\n";
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write report: " + out_path);
    out << text << "\n";
}

void dump_curve(const std::string& prefix, const std::string& name,
                const SampledFunction& f) {
    if (prefix.empty()) return;
    write_function_csv(prefix + "_" + name + ".csv", f);
}

SampledFunction load_input(const RunConfig& cfg, const CliOptions& opts) {
    if (opts.input_path.empty())
        throw ValidationError("this command needs --input f.csv");
    return read_function_csv(opts.input_path, cfg.weight.l);
}

int dispatch(const std::string& command, const CliOptions& opts) {
    RunConfig cfg = parse_config_file(opts.config_path);
    if (opts.has_eps) cfg.eps = opts.eps;
    if (opts.has_eta) cfg.eta = opts.eta;
    if (opts.has_seed) cfg.seed = opts.seed;

    if (command == "validate-weight") {
        emit(opts.out_path, to_json(validate_weight(cfg.weight)));
        return 0;
    }

    if (command == "grid-template") {
        // Zero-valued template on the configured grid, ready to fill in.
        auto grid = cfg.build_grid();
        if (opts.out_path.empty())
            throw ValidationError("grid-template needs --out");
        write_function_csv(opts.out_path,
                           sample(grid, [](double) { return 0.0; }));
        return 0;
    }

    if (command == "l1-escape") {
        std::vector<L1EscapeReport> rows;
        for (int n = 1; n <= opts.n_max; ++n) {
            rows.push_back(l1_escape_sequence(cfg.weight, n));
            log_note("l1-escape n=" + std::to_string(n) + " l1=" +
                     std::to_string(rows.back().l1));
            dump_curve(opts.dump_prefix, "g" + std::to_string(n),
                       rows.back().g);
        }
        emit(opts.out_path, l1_escape_json(rows));
        return 0;
    }

    const SampledFunction f = load_input(cfg, opts);
    log_note("input: " + std::to_string(f.size()) + " samples on [" +
             std::to_string(f.grid->x_min()) + ", " +
             std::to_string(f.grid->x_max()) + "]");

    if (command == "norm") {
        const NormReport r = cesaro_norm(f, cfg.weight);
        dump_curve(opts.dump_prefix, "Awf", apply_Aw(f, cfg.weight));
        emit(opts.out_path, to_json(r));
        return 0;
    }

    if (command == "dual-norm") {
        const NormReport seg = dual_norm(f, cfg.weight);
        const NormReport quad = dual_norm_quadrature(f, cfg.weight);
        OracleResult oracle;
        const OracleResult* op = nullptr;
        if (opts.with_oracle) {
            oracle = brute_dual_norm(f, cfg.weight, 10000, cfg.seed);
            op = &oracle;
        }
        dump_curve(opts.dump_prefix, "Bwf", apply_Bw(f, cfg.weight));
        emit(opts.out_path, dual_norm_json(seg, quad, op));
        return 0;
    }

    if (command == "majorant") {
        const PsiTransform psi(cfg.weight);
        const Majorant m = essential_majorant(f, psi);
        if (opts.with_oracle) {
            const OracleResult o = brute_majorant(f, psi);
            double worst = 0.0;
            for (std::size_t i = 0; i < f.size(); ++i)
                worst = std::max(worst,
                                 std::abs(o.values[i] - m.eval(f.x(i))));
            log_note("oracle max deviation: " + std::to_string(worst));
        }
        if (!opts.dump_prefix.empty()) {
            std::vector<double> vals(f.size());
            for (std::size_t i = 0; i < f.size(); ++i)
                vals[i] = m.eval(f.x(i));
            dump_curve(opts.dump_prefix, "fhat",
                       SampledFunction{f.grid, std::move(vals)});
        }
        emit(opts.out_path, to_json(m));
        return 0;
    }

    if (command == "duality") {
        const WitnessReport r = near_optimizer(f, cfg.weight, cfg.eps);
        log_note("witness: a=" + std::to_string(r.a) + " b=" +
                 std::to_string(r.b) + " cells=" +
                 std::to_string(r.cells.size()));
        dump_curve(opts.dump_prefix, "g", r.g);
        emit(opts.out_path, to_json(r, false));
        return 0;
    }

    if (command == "slice") {
        const WitnessReport r =
            slice_witnesses(f, cfg.weight, cfg.eps, cfg.eta);
        dump_curve(opts.dump_prefix, "g1", r.g);
        if (r.g2) dump_curve(opts.dump_prefix, "g2", *r.g2);
        emit(opts.out_path, to_json(r, true));
        return 0;
    }

    throw ValidationError("unknown command: " + command);
}

} // namespace

int run_command(const std::string& command, const CliOptions& opts) {
    try {
        return dispatch(command, opts);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace cesaro
