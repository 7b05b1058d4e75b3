#include "cesaro/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cesaro/oracle.hpp"

#include <json.hpp>

namespace cesaro {

using nlohmann::json;

SampledFunction read_function_csv(const std::string& path, double l) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open function file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw ValidationError(path + ": empty file");
    {
        std::string header = line;
        header.erase(remove_if(header.begin(), header.end(), ::isspace),
                     header.end());
        if (header != "x,value")
            throw ValidationError(path + ": expected header 'x,value'");
    }

    std::vector<double> xs, vs;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string sx, sv;
        if (!std::getline(ss, sx, ',') || !std::getline(ss, sv))
            throw ValidationError(path + ": row " + std::to_string(row) +
                                  ": expected two comma-separated fields");
        double x, v;
        try {
            x = std::stod(sx);
            v = std::stod(sv);
        } catch (const std::exception&) {
            throw ValidationError(path + ": row " + std::to_string(row) +
                                  ": not a number");
        }
        if (!std::isfinite(x) || !std::isfinite(v))
            throw ValidationError(path + ": row " + std::to_string(row) +
                                  ": value not finite");
        if (!xs.empty() && !(x > xs.back()))
            throw ValidationError(path + ": row " + std::to_string(row) +
                                  ": x not strictly increasing");
        xs.push_back(x);
        vs.push_back(v);
    }
    if (xs.size() < 3)
        throw ValidationError(path + ": need at least 3 rows");

    auto grid = std::make_shared<Grid>(std::move(xs), l, GridScheme::Custom);
    return SampledFunction{std::move(grid), std::move(vs)};
}

void write_function_csv(const std::string& path, const SampledFunction& f) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << "x,value\n";
    out.precision(17);
    for (std::size_t i = 0; i < f.size(); ++i)
        out << f.x(i) << "," << f.values[i] << "\n";
}

GridPtr RunConfig::build_grid() const {
    const double l = weight.l;
    double x_min = grid_x_min;
    double x_max = grid_x_max;
    if (x_min <= 0.0) x_min = std::isinf(l) ? 1e-6 : l * 1e-6;
    if (x_max <= 0.0) {
        if (std::isinf(l))
            throw ValidationError(
                "config: l is infinite, grid.x_max must be given");
        x_max = l * (1.0 - 1e-5);
    }
    if (grid_scheme == GridScheme::UniformInPsi)
        return make_grid_in_psi(PsiTransform(weight), grid_n, x_min, x_max);
    return make_grid(l, grid_n, grid_scheme, x_min, x_max);
}

namespace {

std::string dir_of(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

RunConfig parse_config_json(const json& j, const std::string& base_dir) {
    RunConfig cfg;
    if (!j.contains("p")) throw ValidationError("config: missing 'p'");
    const double p = j.at("p").get<double>();

    double l = 0.0;
    if (!j.contains("l")) throw ValidationError("config: missing 'l'");
    if (j.at("l").is_string()) {
        if (j.at("l").get<std::string>() != "inf")
            throw ValidationError("config: 'l' must be a number or \"inf\"");
        l = std::numeric_limits<double>::infinity();
    } else {
        l = j.at("l").get<double>();
    }

    const std::string kind = j.value("kind", std::string("power"));
    if (kind == "power") {
        if (!j.contains("s"))
            throw ValidationError("config: power weight needs 's'");
        cfg.weight = WeightSpec::power(j.at("s").get<double>(), p, l);
    } else if (kind == "table") {
        if (!j.contains("path"))
            throw ValidationError("config: table weight needs 'path'");
        const std::string rel = j.at("path").get<std::string>();
        const std::string full =
            rel.front() == '/' ? rel : base_dir + "/" + rel;
        std::optional<double> head;
        if (j.contains("head_exponent"))
            head = j.at("head_exponent").get<double>();
        cfg.weight =
            WeightSpec::tabulated(read_function_csv(full, l), p, l, head);
    } else {
        throw ValidationError("config: unknown weight kind '" + kind + "'");
    }

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        cfg.grid_n = g.value("n", cfg.grid_n);
        const std::string scheme = g.value("scheme", std::string("geometric"));
        if (scheme == "uniform")
            cfg.grid_scheme = GridScheme::Uniform;
        else if (scheme == "geometric")
            cfg.grid_scheme = GridScheme::GeometricNearZero;
        else if (scheme == "uniform-in-psi")
            cfg.grid_scheme = GridScheme::UniformInPsi;
        else
            throw ValidationError("config: unknown grid scheme '" + scheme +
                                  "'");
        cfg.grid_x_min = g.value("x_min", 0.0);
        cfg.grid_x_max = g.value("x_max", 0.0);
        if (cfg.grid_n < 3)
            throw ValidationError("config: grid.n must be at least 3");
        if (cfg.grid_x_min < 0.0 || cfg.grid_x_max < 0.0 ||
            (cfg.grid_x_min > 0.0 && cfg.grid_x_max > 0.0 &&
             cfg.grid_x_min >= cfg.grid_x_max))
            throw ValidationError("config: need 0 < grid.x_min < grid.x_max");
        if (cfg.grid_x_max >= l)
            throw ValidationError("config: grid.x_max must be below l");
    }
    cfg.eps = j.value("eps", cfg.eps);
    cfg.eta = j.value("eta", cfg.eta);
    cfg.seed = j.value("seed", cfg.seed);
    return cfg;
}

json cell_json(const PartitionCell& c, const SampledFunction& g) {
    json jc;
    jc["x_lo"] = g.x(c.lo);
    jc["x_hi"] = g.x(c.hi);
    jc["delta_h"] = c.delta_h;
    jc["contact"] = c.contact;
    if (c.jump_bracket) {
        jc["jump_bracket"] = true;
        jc["jump_size"] = c.jump_size;
        jc["psi_mass"] = c.psi_mass;
        jc["psi_bound"] = c.psi_bound;
        jc["psi_bound_met"] = c.psi_bound_met;
    }
    if (!c.contact_b.empty() || !c.contact_c.empty()) {
        jc["contact_b"] = c.contact_b;
        jc["contact_c"] = c.contact_c;
    }
    return jc;
}

} // namespace

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), dir_of(path));
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    try {
        return parse_config_json(j, base_dir);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
}

std::string to_json(const NormReport& r) {
    json j;
    j["value"] = r.value;
    j["method"] =
        r.method == NormMethod::SegmentSum ? "segment-sum" : "quadrature";
    j["truncation_note"] = r.truncation_note;
    return j.dump(2);
}

std::string dual_norm_json(const NormReport& segment, const NormReport& quad,
                           const OracleResult* oracle) {
    json j;
    j["value"] = segment.value;
    j["method"] = "segment-sum";
    j["truncation_note"] = segment.truncation_note;
    j["quadrature_value"] = quad.value;
    const double denom = std::max(segment.value, 1e-300);
    j["route_gap_rel"] = std::abs(segment.value - quad.value) / denom;
    if (oracle) {
        j["oracle_value"] = oracle->scalar;
        j["oracle_gap"] = segment.value - oracle->scalar;
        j["oracle_evaluations"] = oracle->evaluations;
    }
    return j.dump(2);
}

std::string to_json(const Majorant& m) {
    json j;
    json knots = json::array();
    for (std::size_t k = 0; k < m.knot_count(); ++k) {
        json jk;
        jk["u"] = m.knots_u()[k];
        jk["v"] = m.knots_v()[k];
        jk["x"] = m.knots_x()[k];
        knots.push_back(jk);
    }
    j["breakpoints"] = knots;
    j["slopes"] = std::vector<double>(m.slopes().begin(), m.slopes().end());
    return j.dump(2);
}

std::string to_json(const WitnessReport& r, bool slice) {
    json j;
    j["epsilon"] = r.epsilon;
    j["normalization"] = r.normalization;
    j["a"] = r.a;
    j["b"] = r.b;
    j["gamma"] = r.gamma;
    j["kappa"] = r.kappa;
    j["partition"] = r.partition;
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back(cell_json(c, r.g));
    j["cells"] = cells;
    j["achieved_norm"] = r.achieved_norm;
    j["achieved_pairing"] = r.achieved_pairing;
    j["norm_bound"] = r.norm_bound;
    j["pairing_bound"] = r.pairing_bound;
    j["bracket_bounds_met"] = r.bracket_bounds_met;
    j["notes"] = r.notes;
    if (slice) {
        j["eta"] = r.eta;
        j["kappa2"] = r.kappa2;
        j["achieved_norm2"] = r.achieved_norm2;
        j["achieved_pairing2"] = r.achieved_pairing2;
        j["diameter_lower_bound"] = r.diameter_lower;
        j["disjoint_supports"] = true;
    } else {
        j["duality_gap"] = r.duality_gap;
    }
    return j.dump(2);
}

std::string l1_escape_json(const std::vector<L1EscapeReport>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["n"] = r.n;
        j["a_n"] = r.a_lo;
        j["a_n_plus_1"] = r.a_hi;
        j["cesaro_norm"] = r.cesaro;
        j["l1_norm"] = r.l1;
        j["note"] = r.note;
        arr.push_back(j);
    }
    json out;
    out["rows"] = arr;
    return out.dump(2);
}

std::string to_json(const WeightDiagnosis& d) {
    auto cond = [](const ConditionReport& c) {
        json j;
        j["pass"] = c.pass;
        j["assumed"] = c.assumed;
        j["quantity"] = c.quantity;
        j["detail"] = c.detail;
        return j;
    };
    json j;
    j["positivity"] = cond(d.positivity);
    j["tail_integrable"] = cond(d.tail_integrable);
    j["head_divergent"] = cond(d.head_divergent);
    j["ok"] = d.ok();
    return j.dump(2);
}

} // namespace cesaro
