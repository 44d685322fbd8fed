#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vvl/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"vvlab: vanishing-viscosity laboratory runner"};

    std::string config_path, case_id, eps_csv, out_dir, checks_csv;
    int threads = -1;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--case", case_id, "channel | pipe | csf (overrides config)");
    app.add_option("--eps", eps_csv, "comma-separated epsilon list (overrides config)");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--checks", checks_csv, "comma list of rates,lighthill,sheet,l1");
    app.add_option("--threads", threads, "worker pool size (overrides config)");
    CLI11_PARSE(app, argc, argv);

    try {
        vvl::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = vvl::load_config_file(config_path);
        if (!case_id.empty()) {
            cfg.case_id = case_id;
            if (config_path.empty() && case_id == "csf") cfg.preset = "rigid-rotation";
        }
        auto split = [](const std::string& s) {
            std::vector<std::string> out;
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) out.push_back(tok);
            return out;
        };
        if (!eps_csv.empty()) {
            cfg.eps_list.clear();
            for (const auto& tok : split(eps_csv)) cfg.eps_list.push_back(std::stod(tok));
        }
        if (!checks_csv.empty()) cfg.checks = split(checks_csv);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (threads > 0) cfg.threads = static_cast<std::size_t>(threads);
        vvl::validate_config(cfg);

        const vvl::Report report = vvl::run_experiment(cfg);
        vvl::emit_outputs(report, cfg.out_dir);
        std::printf("%s\n", report.checks_passed ? "all checks passed" : "some checks failed");
        return report.checks_passed ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
