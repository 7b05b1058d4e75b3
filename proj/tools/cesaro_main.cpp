#include <CLI11.hpp>

#include "cesaro/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Weighted Cesaro function spaces: norms, dual norms, "
                 "concave majorants and duality witnesses"};
    app.require_subcommand(1);

    cesaro::CliOptions opts;
    std::string command;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--config", opts.config_path, "JSON run configuration")
            ->required();
        if (needs_input)
            sub->add_option("--input", opts.input_path,
                            "sampled function CSV (x,value)")
                ->required();
        sub->add_option("--out", opts.out_path,
                        "report path (stdout when omitted)");
        sub->add_option("--dump", opts.dump_prefix,
                        "prefix for plot-ready CSV curves");
        sub->callback([&, sub] { command = sub->get_name(); });
    };

    add_common(app.add_subcommand("norm", "Cesaro norm of f"), true);

    auto* dual = app.add_subcommand("dual-norm", "dual norm of f");
    add_common(dual, true);
    dual->add_flag("--oracle", opts.with_oracle,
                   "cross-check against the ascent oracle (N <= 200)");
    dual->add_option("--seed", opts.seed, "oracle seed")
        ->each([&](const std::string&) { opts.has_seed = true; });

    add_common(app.add_subcommand("majorant",
                                  "essential Psi-concave majorant of |f|"),
               true);
    app.get_subcommand("majorant")
        ->add_flag("--oracle", opts.with_oracle,
                   "cross-check against the exhaustive oracle (N <= 200)");

    auto* duality = app.add_subcommand("duality", "near-optimal witness g");
    add_common(duality, true);
    duality->add_option("--eps", opts.eps, "accuracy parameter in (0,1)")
        ->each([&](const std::string&) { opts.has_eps = true; });

    auto* slice = app.add_subcommand("slice", "disjoint slice witnesses");
    add_common(slice, true);
    slice->add_option("--eps", opts.eps, "accuracy parameter, eps < eta/10")
        ->each([&](const std::string&) { opts.has_eps = true; });
    slice->add_option("--eta", opts.eta, "slice depth in (0,1)")
        ->each([&](const std::string&) { opts.has_eta = true; });

    auto* escape =
        app.add_subcommand("l1-escape", "unit-norm functions escaping L1");
    add_common(escape, false);
    escape->add_option("--n-max", opts.n_max, "largest n in the table");

    add_common(app.add_subcommand("validate-weight",
                                  "diagnose the weight conditions"),
               false);

    add_common(app.add_subcommand("grid-template",
                                  "write a zero-valued CSV on the configured "
                                  "grid"),
               false);

    CLI11_PARSE(app, argc, argv);
    return cesaro::run_command(command, opts);
}
