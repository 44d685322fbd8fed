#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vvl/analysis.hpp"

namespace vvl {

/// One periodic-mode x polynomial term: trig(2 pi k s / period) * poly(zeta),
/// zeta the normalized wall-normal coordinate in [0, 1].
struct DataTerm {
    int wavenumber = 0;
    bool sine = false;  // cos by default
    std::vector<double> poly;   // coefficients in zeta, constant first
    std::vector<double> tpoly;  // time factor for forcings; {1} if empty
};

struct InlineData {
    std::vector<DataTerm> tangential;  // g1 / u0phi (wavenumber must be 0)
    std::vector<DataTerm> axial;       // g2 / u0x
    std::vector<DataTerm> tangential_forcing;  // f1 / fphi (wavenumber 0)
};

struct ExperimentConfig {
    std::string case_id = "channel";  // channel | pipe | csf
    std::string preset = "reference";  // zero | reference | rigid-rotation | inline
    double h = 1.0;
    double L = 1.0;
    double rL = 0.5;
    double rR = 1.5;
    double axial_factor = 1.0;
    double T = 0.25;
    std::vector<double> eps_list = {1e-2, 3.16e-3, 1e-3, 3.16e-4, 1e-4};
    std::size_t normal_nodes = 257;
    std::size_t periodic_nodes = 64;
    std::size_t time_steps = 512;
    std::size_t samples = 33;
    double layer_factor = 0.25;
    std::vector<std::string> checks = {"rates", "lighthill", "sheet", "l1"};
    std::size_t threads = 1;
    std::string out_dir = "out";
    InlineData data;  // used when preset == "inline"
};

/// Parses and validates; collects every violation into one ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config_file(const std::string& path);
void validate_config(const ExperimentConfig& cfg);

struct Report {
    nlohmann::ordered_json payload;  // config echo, tables, verdicts, stamp
    bool checks_passed = false;
};

/// Deterministic end-to-end run: identical configs give byte-identical
/// payloads (no timestamps inside).
Report run_experiment(const ExperimentConfig& cfg);

/// Writes report.json, series.csv ("eps,norm_id,value", descending eps,
/// 17 significant digits), and summary.txt into dir.
void emit_outputs(const Report& report, const std::string& dir);

/// Problem builders shared with tests.
ChannelProblem make_channel_problem(const ExperimentConfig& cfg);
PipeProblem make_pipe_problem(const ExperimentConfig& cfg);

/// Reference data presets used across the acceptance criteria.
ChannelProblem reference_channel_problem();
PipeProblem reference_pipe_problem();
PipeProblem rigid_rotation_problem();

}  // namespace vvl
