#include "vvl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace vvl {

namespace {

const std::set<std::string> kCases = {"channel", "pipe", "csf"};
const std::set<std::string> kChecks = {"rates", "lighthill", "sheet", "l1"};

double poly_eval(const std::vector<double>& c, double s) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
    return acc;
}

double term_eval(const DataTerm& term, double periodic_coord, double period, double zeta) {
    const double arg = 2.0 * std::numbers::pi * term.wavenumber * periodic_coord / period;
    const double trig = term.sine ? std::sin(arg) : std::cos(arg);
    return trig * poly_eval(term.poly, zeta);
}

double term_time(const DataTerm& term, double t) {
    return term.tpoly.empty() ? 1.0 : poly_eval(term.tpoly, t);
}

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ChannelProblem reference_channel_problem() {
    ExperimentConfig cfg;
    return make_channel_problem(cfg);
}

PipeProblem reference_pipe_problem() {
    ExperimentConfig cfg;
    cfg.case_id = "pipe";
    return make_pipe_problem(cfg);
}

PipeProblem rigid_rotation_problem() {
    ExperimentConfig cfg;
    cfg.case_id = "csf";
    cfg.preset = "rigid-rotation";
    return make_pipe_problem(cfg);
}

ChannelProblem make_channel_problem(const ExperimentConfig& cfg) {
    ChannelProblem p;
    p.h = cfg.h;
    p.L = cfg.L;
    p.T = cfg.T;
    p.axial_factor = cfg.axial_factor;
    const double h = cfg.h, L = cfg.L;
    if (cfg.preset == "zero") {
        p.g1 = [](double) { return 0.0; };
        p.g2 = [](double, double) { return 0.0; };
    } else if (cfg.preset == "reference") {
        // Ill-prepared data: nonzero tangential traces at both walls.
        p.g1 = [h](double z) { return std::cos(std::numbers::pi * z / h); };
        p.g2 = [h, L](double x, double z) {
            return std::cos(2.0 * std::numbers::pi * x / L) * std::cos(std::numbers::pi * z / h);
        };
    } else if (cfg.preset == "inline") {
        const InlineData d = cfg.data;
        p.g1 = [d, h](double z) {
            double acc = 0.0;
            for (const auto& t : d.tangential) acc += term_eval(t, 0.0, 1.0, z / h);
            return acc;
        };
        p.g2 = [d, h, L](double x, double z) {
            double acc = 0.0;
            for (const auto& t : d.axial) acc += term_eval(t, x, L, z / h);
            return acc;
        };
        if (!d.tangential_forcing.empty())
            p.f1 = [d, h](double z, double t) {
                double acc = 0.0;
                for (const auto& term : d.tangential_forcing)
                    acc += term_eval(term, 0.0, 1.0, z / h) * term_time(term, t);
                return acc;
            };
    } else {
        throw ConfigError("make_channel_problem: unsupported preset " + cfg.preset);
    }
    return p;
}

PipeProblem make_pipe_problem(const ExperimentConfig& cfg) {
    PipeProblem p;
    p.rL = cfg.rL;
    p.rR = cfg.rR;
    p.T = cfg.T;
    p.axial_factor = cfg.axial_factor;
    const double rL = cfg.rL, gap = cfg.rR - cfg.rL;
    if (cfg.preset == "zero") {
        p.u0phi = [](double) { return 0.0; };
        p.u0x = [](double, double) { return 0.0; };
    } else if (cfg.preset == "reference") {
        // Potential vortex and mode-1 harmonic: both are annihilated by the
        // viscous operator, so the sweep isolates the curvature-driven layer
        // rates instead of the O(eps) interior diffusion of the profile.
        // Nonzero wall slip keeps the data ill-prepared.
        p.u0phi = [](double r) { return 1.0 / r; };
        if (cfg.case_id == "csf")
            p.u0x = [](double, double) { return 0.0; };
        else
            p.u0x = [](double phi, double r) { return std::cos(phi) / r; };
    } else if (cfg.preset == "rigid-rotation") {
        p.u0phi = [](double r) { return r; };
        p.u0x = [](double, double) { return 0.0; };
    } else if (cfg.preset == "inline") {
        const InlineData d = cfg.data;
        p.u0phi = [d, rL, gap](double r) {
            double acc = 0.0;
            for (const auto& t : d.tangential) acc += term_eval(t, 0.0, 1.0, (r - rL) / gap);
            return acc;
        };
        p.u0x = [d, rL, gap](double phi, double r) {
            double acc = 0.0;
            for (const auto& t : d.axial)
                acc += term_eval(t, phi, 2.0 * std::numbers::pi, (r - rL) / gap);
            return acc;
        };
        if (!d.tangential_forcing.empty())
            p.fphi = [d, rL, gap](double r, double t) {
                double acc = 0.0;
                for (const auto& term : d.tangential_forcing)
                    acc += term_eval(term, 0.0, 1.0, (r - rL) / gap) * term_time(term, t);
                return acc;
            };
    } else {
        throw ConfigError("make_pipe_problem: unsupported preset " + cfg.preset);
    }
    return p;
}

void validate_config(const ExperimentConfig& cfg) {
    std::vector<std::string> bad;
    if (!kCases.count(cfg.case_id)) bad.push_back("case: must be channel, pipe, or csf");
    const bool is_channel = cfg.case_id == "channel";
    const std::set<std::string> presets =
        is_channel ? std::set<std::string>{"zero", "reference", "inline"}
        : cfg.case_id == "csf"
            ? std::set<std::string>{"zero", "reference", "rigid-rotation", "inline"}
            : std::set<std::string>{"zero", "reference", "inline"};
    if (kCases.count(cfg.case_id) && !presets.count(cfg.preset))
        bad.push_back("preset: '" + cfg.preset + "' not available for case " + cfg.case_id);
    if (!(cfg.T > 0.0)) bad.push_back("T: must be positive");
    if (is_channel) {
        if (!(cfg.h > 0.0)) bad.push_back("h: must be positive");
        if (!(cfg.L > 0.0)) bad.push_back("L: must be positive");
    } else {
        if (!(cfg.rL > 0.0)) bad.push_back("rL: must be positive");
        if (!(cfg.rR > cfg.rL)) bad.push_back("rR: must exceed rL");
    }
    if (!(cfg.axial_factor > 0.0)) bad.push_back("axial_factor: must be positive");
    if (cfg.eps_list.empty()) bad.push_back("eps_list: must be nonempty");
    for (std::size_t i = 0; i < cfg.eps_list.size(); ++i) {
        if (!(cfg.eps_list[i] > 0.0)) {
            bad.push_back("eps_list: entries must be positive");
            break;
        }
        if (i > 0 && !(cfg.eps_list[i] < cfg.eps_list[i - 1])) {
            bad.push_back("eps_list: entries must be strictly decreasing");
            break;
        }
    }
    if (cfg.eps_list.size() < 4 && !cfg.checks.empty())
        bad.push_back("eps_list: checks need >= 4 epsilon values");
    if (cfg.periodic_nodes < 4 || (cfg.periodic_nodes & (cfg.periodic_nodes - 1)) != 0)
        bad.push_back("periodic_nodes: must be a power of two, >= 4");
    if (cfg.normal_nodes < 9) bad.push_back("normal_nodes: must be >= 9");
    if (cfg.time_steps < 2) bad.push_back("time_steps: must be >= 2");
    if (cfg.samples < 2) bad.push_back("samples: must be >= 2");
    if (!(cfg.layer_factor > 0.0) || cfg.layer_factor > 0.5)
        bad.push_back("layer_factor: must lie in (0, 0.5]");
    if (cfg.threads < 1) bad.push_back("threads: must be >= 1");
    if (cfg.out_dir.empty()) bad.push_back("out_dir: must be nonempty");
    {
        std::set<std::string> seen;
        for (const auto& c : cfg.checks) {
            if (!kChecks.count(c)) bad.push_back("checks: unknown check '" + c + "'");
            if (!seen.insert(c).second) bad.push_back("checks: duplicate '" + c + "'");
            if (c == "lighthill" && !is_channel)
                bad.push_back("checks: lighthill applies to the channel case only");
        }
    }
    if (cfg.preset == "inline") {
        if (cfg.data.tangential.empty() && cfg.data.axial.empty())
            bad.push_back("data: inline preset needs at least one term");
        for (const auto& t : cfg.data.tangential)
            if (t.wavenumber != 0)
                bad.push_back("data.tangential: wavenumber must be 0 (axisymmetric component)");
        for (const auto& t : cfg.data.tangential_forcing)
            if (t.wavenumber != 0)
                bad.push_back("data.tangential_forcing: wavenumber must be 0");
        auto check_poly = [&](const std::vector<DataTerm>& terms, const std::string& which) {
            for (const auto& t : terms)
                if (t.poly.empty()) bad.push_back("data." + which + ": empty polynomial");
        };
        check_poly(cfg.data.tangential, "tangential");
        check_poly(cfg.data.axial, "axial");
        check_poly(cfg.data.tangential_forcing, "tangential_forcing");
        if (cfg.case_id == "csf" && !cfg.data.axial.empty())
            bad.push_back("data.axial: must be empty for the csf case");
    }
    if (!bad.empty()) {
        std::string msg = "invalid config:";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw ConfigError(msg);
    }
}

namespace {

std::vector<DataTerm> parse_terms(const nlohmann::json& arr, const std::string& where,
                                  std::vector<std::string>& bad) {
    std::vector<DataTerm> out;
    if (!arr.is_array()) {
        bad.push_back(where + ": must be an array of terms");
        return out;
    }
    for (const auto& t : arr) {
        DataTerm term;
        if (!t.is_object()) {
            bad.push_back(where + ": term must be an object");
            continue;
        }
        term.wavenumber = t.value("wavenumber", 0);
        const std::string trig = t.value("trig", std::string("cos"));
        if (trig != "cos" && trig != "sin") bad.push_back(where + ": trig must be cos or sin");
        term.sine = trig == "sin";
        if (t.contains("poly")) term.poly = t["poly"].get<std::vector<double>>();
        if (t.contains("tpoly")) term.tpoly = t["tpoly"].get<std::vector<double>>();
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& j) {
    std::vector<std::string> bad;
    if (!j.is_object()) throw ConfigError("invalid config:\n  - root must be an object");
    const std::set<std::string> known = {"case",        "preset",        "h",
                                        "L",           "rL",            "rR",
                                        "axial_factor", "T",            "eps_list",
                                        "normal_nodes", "periodic_nodes", "time_steps",
                                        "samples",     "layer_factor",  "checks",
                                        "threads",     "out_dir",       "data"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) bad.push_back("unknown field '" + it.key() + "'");

    ExperimentConfig cfg;
    try {
        cfg.case_id = j.value("case", cfg.case_id);
        cfg.preset = j.value("preset", cfg.preset);
        cfg.h = j.value("h", cfg.h);
        cfg.L = j.value("L", cfg.L);
        cfg.rL = j.value("rL", cfg.rL);
        cfg.rR = j.value("rR", cfg.rR);
        cfg.axial_factor = j.value("axial_factor", cfg.axial_factor);
        cfg.T = j.value("T", cfg.T);
        if (j.contains("eps_list")) cfg.eps_list = j["eps_list"].get<std::vector<double>>();
        cfg.normal_nodes = j.value("normal_nodes", cfg.normal_nodes);
        cfg.periodic_nodes = j.value("periodic_nodes", cfg.periodic_nodes);
        cfg.time_steps = j.value("time_steps", cfg.time_steps);
        cfg.samples = j.value("samples", cfg.samples);
        cfg.layer_factor = j.value("layer_factor", cfg.layer_factor);
        if (j.contains("checks")) cfg.checks = j["checks"].get<std::vector<std::string>>();
        cfg.threads = j.value("threads", cfg.threads);
        cfg.out_dir = j.value("out_dir", cfg.out_dir);
        if (j.contains("data")) {
            const auto& d = j["data"];
            if (d.contains("tangential"))
                cfg.data.tangential = parse_terms(d["tangential"], "data.tangential", bad);
            if (d.contains("axial")) cfg.data.axial = parse_terms(d["axial"], "data.axial", bad);
            if (d.contains("tangential_forcing"))
                cfg.data.tangential_forcing =
                    parse_terms(d["tangential_forcing"], "data.tangential_forcing", bad);
        }
    } catch (const nlohmann::json::exception& e) {
        bad.push_back(std::string("type error: ") + e.what());
    }
    if (!bad.empty()) {
        std::string msg = "invalid config:";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw ConfigError(msg);
    }
    validate_config(cfg);
    return cfg;
}

namespace {

nlohmann::ordered_json terms_to_json(const std::vector<DataTerm>& terms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
        nlohmann::ordered_json o;
        o["wavenumber"] = t.wavenumber;
        o["trig"] = t.sine ? "sin" : "cos";
        o["poly"] = t.poly;
        if (!t.tpoly.empty()) o["tpoly"] = t.tpoly;
        arr.push_back(std::move(o));
    }
    return arr;
}

}  // namespace

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["case"] = cfg.case_id;
    j["preset"] = cfg.preset;
    if (cfg.case_id == "channel") {
        j["h"] = cfg.h;
        j["L"] = cfg.L;
    } else {
        j["rL"] = cfg.rL;
        j["rR"] = cfg.rR;
    }
    j["axial_factor"] = cfg.axial_factor;
    j["T"] = cfg.T;
    j["eps_list"] = cfg.eps_list;
    j["normal_nodes"] = cfg.normal_nodes;
    j["periodic_nodes"] = cfg.periodic_nodes;
    j["time_steps"] = cfg.time_steps;
    j["samples"] = cfg.samples;
    j["layer_factor"] = cfg.layer_factor;
    j["checks"] = cfg.checks;
    j["threads"] = cfg.threads;
    j["out_dir"] = cfg.out_dir;
    if (cfg.preset == "inline") {
        nlohmann::ordered_json d;
        d["tangential"] = terms_to_json(cfg.data.tangential);
        d["axial"] = terms_to_json(cfg.data.axial);
        if (!cfg.data.tangential_forcing.empty())
            d["tangential_forcing"] = terms_to_json(cfg.data.tangential_forcing);
        j["data"] = std::move(d);
    }
    return j;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse failure in " + path + ": " + e.what());
    }
    return parse_config(j);
}

namespace {

nlohmann::ordered_json series_json(const NormSeries& s) {
    nlohmann::ordered_json j;
    j["norm_id"] = s.norm_id;
    j["eps"] = s.eps_list;
    j["values"] = s.values;
    return j;
}

nlohmann::ordered_json fit_json(const RateFit& f) {
    nlohmann::ordered_json j;
    j["norm_id"] = f.norm_id;
    j["degenerate"] = f.degenerate;
    if (!f.degenerate) {
        j["slope"] = f.slope;
        j["intercept"] = f.intercept;
        j["residual"] = f.residual;
    }
    return j;
}

nlohmann::ordered_json bounds_json(const BoundsReport& b) {
    nlohmann::ordered_json j;
    j["bound_id"] = b.bound_id;
    j["times"] = b.times;
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["slack"] = b.slack;
    j["pass"] = b.pass;
    j["notes"] = b.notes;
    return j;
}

nlohmann::ordered_json sheet_json(const SheetCheck& s) {
    nlohmann::ordered_json j;
    j["test_id"] = s.test_id;
    j["eps"] = s.eps_list;
    j["gaps"] = s.gaps;
    j["sheet_value"] = s.sheet_value;
    j["cross_check_error"] = s.cross_check_error;
    j["pass"] = s.pass;
    return j;
}

nlohmann::ordered_json table_json(const ConvergenceTable& t) {
    nlohmann::ordered_json j;
    j["case"] = t.case_id;
    j["series"] = nlohmann::ordered_json::array();
    for (const auto& s : t.series) j["series"].push_back(series_json(s));
    j["fits"] = nlohmann::ordered_json::array();
    for (const auto& f : t.fits) j["fits"].push_back(fit_json(f));
    j["metadata"] = t.metadata;
    j["diagnostics"] = t.diagnostics;
    return j;
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    Report rep;
    rep.payload["config"] = config_to_json(cfg);
    rep.payload["environment"] = {{"version", "0.1.0"},
                                  {"determinism",
                                   "seedless; per-epsilon slot reduction in fixed order"}};

    SweepPolicy policy;
    policy.normal_nodes = cfg.normal_nodes;
    policy.periodic_nodes = cfg.periodic_nodes;
    policy.time_steps = cfg.time_steps;
    policy.samples = cfg.samples;
    policy.layer_factor = cfg.layer_factor;
    policy.threads = cfg.threads;

    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    std::vector<NormSeries> all_series;
    bool all_pass = true;
    auto verdict = [&](nlohmann::ordered_json& node, bool pass) {
        node["pass"] = pass;
        all_pass = all_pass && pass;
    };

    const bool is_channel = cfg.case_id == "channel";
    if (!cfg.checks.empty()) {
        if (is_channel) {
            const ChannelProblem prob = make_channel_problem(cfg);
            const ChannelSweep sweep = channel_convergence_sweep(prob, cfg.eps_list, policy);
            for (const auto& c : cfg.checks) {
                nlohmann::ordered_json node;
                if (c == "rates") {
                    node["table"] = table_json(sweep.table);
                    verdict(node, sweep.eps_list.size() == cfg.eps_list.size());
                    for (const auto& s : sweep.table.series) all_series.push_back(s);
                } else if (c == "lighthill") {
                    bool pass = !sweep.eps_list.empty();
                    node["per_eps"] = nlohmann::ordered_json::array();
                    for (std::size_t i = 0; i < sweep.eps_list.size(); ++i) {
                        nlohmann::ordered_json e;
                        e["eps"] = sweep.eps_list[i];
                        e["bounds"] = nlohmann::ordered_json::array();
                        for (const auto& b : lighthill_bounds_check(sweep.viscous[i], prob)) {
                            e["bounds"].push_back(bounds_json(b));
                            pass = pass && b.pass;
                        }
                        node["per_eps"].push_back(std::move(e));
                    }
                    verdict(node, pass);
                } else if (c == "sheet") {
                    const double h = prob.h, L = prob.L;
                    std::vector<SheetCheck> tests = {
                        channel_sheet_omega2(
                            prob, sweep,
                            [h](double z) { return std::cos(std::numbers::pi * z / h); },
                            "omega2_cos"),
                        channel_sheet_omega2(
                            prob, sweep,
                            [h](double z) { return (1.0 - z / h) * (1.0 - z / h); },
                            "omega2_quadratic"),
                        channel_sheet_omega1(
                            prob, sweep,
                            [h, L](double x, double z) {
                                return std::sin(2.0 * std::numbers::pi * x / L) * (1.0 - z / h);
                            },
                            "omega1_sin_linear")};
                    bool pass = true;
                    node["tests"] = nlohmann::ordered_json::array();
                    for (const auto& t : tests) {
                        node["tests"].push_back(sheet_json(t));
                        pass = pass && t.pass;
                    }
                    verdict(node, pass);
                } else {  // l1
                    const UniformL1Result r = uniform_l1_check(prob, sweep);
                    node["report"] = bounds_json(r.report);
                    node["l2_fit"] = fit_json(r.l2_fit);
                    all_series.push_back(r.l1_series);
                    all_series.push_back(r.l2_series);
                    verdict(node, r.report.pass);
                }
                checks[c] = std::move(node);
            }
        } else {
            const PipeProblem prob = make_pipe_problem(cfg);
            const PipeSweep sweep = pipe_convergence_sweep(prob, cfg.eps_list, policy);
            for (const auto& c : cfg.checks) {
                nlohmann::ordered_json node;
                if (c == "rates") {
                    node["table"] = table_json(sweep.table);
                    verdict(node, sweep.eps_list.size() == cfg.eps_list.size());
                    for (const auto& s : sweep.table.series) all_series.push_back(s);
                } else if (c == "sheet") {
                    const double rL = prob.rL, rR = prob.rR, gap = prob.rR - prob.rL;
                    std::vector<SheetCheck> tests = {
                        csf_sheet_omega_x(
                            prob, sweep,
                            [rL, gap](double r) {
                                return std::cos(std::numbers::pi * (r - rL) / gap);
                            },
                            "omega_x_cos"),
                        csf_sheet_omega_x(
                            prob, sweep, [rR, gap](double r) { return (rR - r) / gap; },
                            "omega_x_linear"),
                        csf_sheet_omega_x(
                            prob, sweep, [rL](double r) { return std::exp(r - rL); },
                            "omega_x_exp")};
                    bool pass = true;
                    node["tests"] = nlohmann::ordered_json::array();
                    for (const auto& t : tests) {
                        node["tests"].push_back(sheet_json(t));
                        pass = pass && t.pass;
                    }
                    verdict(node, pass);
                } else {  // l1
                    const UniformL1Result r = uniform_l1_check(prob, sweep);
                    node["report"] = bounds_json(r.report);
                    node["l2_fit"] = fit_json(r.l2_fit);
                    all_series.push_back(r.l1_series);
                    all_series.push_back(r.l2_series);
                    verdict(node, r.report.pass);
                }
                checks[c] = std::move(node);
            }
        }
    }
    rep.payload["checks"] = std::move(checks);

    nlohmann::ordered_json flat = nlohmann::ordered_json::array();
    for (const auto& s : all_series) flat.push_back(series_json(s));
    rep.payload["series"] = std::move(flat);
    rep.payload["all_checks_passed"] = all_pass;
    rep.checks_passed = all_pass;
    return rep;
}

void emit_outputs(const Report& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());

    auto write_file = [&](const std::string& name, const std::string& body) {
        const std::string path = (fs::path(dir) / name).string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path + " for writing");
        out << body;
        if (!out) throw std::runtime_error("write failure on " + path);
    };

    write_file("report.json", report.payload.dump(2) + "\n");

    std::string csv = "eps,norm_id,value\n";
    if (report.payload.contains("series"))
        for (const auto& s : report.payload["series"]) {
            const std::string id = s["norm_id"].get<std::string>();
            const auto& eps = s["eps"];
            const auto& vals = s["values"];
            for (std::size_t i = 0; i < eps.size(); ++i)
                csv += g17(eps[i].get<double>()) + "," + id + "," +
                       g17(vals[i].get<double>()) + "\n";
        }
    write_file("series.csv", csv);

    std::ostringstream sum;
    if (report.payload.contains("config"))
        sum << "case: " << report.payload["config"].value("case", "?")
            << "  preset: " << report.payload["config"].value("preset", "?") << "\n";
    if (report.payload.contains("checks"))
        for (auto it = report.payload["checks"].begin(); it != report.payload["checks"].end();
             ++it) {
            sum << "check " << it.key() << ": "
                << (it.value().value("pass", false) ? "PASS" : "FAIL") << "\n";
            if (it.key() == "rates" && it.value().contains("table"))
                for (const auto& f : it.value()["table"]["fits"]) {
                    sum << "  " << f["norm_id"].get<std::string>() << ": ";
                    if (f["degenerate"].get<bool>())
                        sum << "degenerate\n";
                    else
                        sum << "slope " << g17(f["slope"].get<double>()) << "\n";
                }
        }
    sum << "overall: " << (report.checks_passed ? "PASS" : "FAIL") << "\n";
    write_file("summary.txt", sum.str());
}

}  // namespace vvl
