#include "weightcat/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace weightcat;

namespace {

enum Exit { OK = 0, MISMATCH = 1, CONFIG = 2, UNCERTIFIABLE = 3 };

struct RunConfig {
    std::string type;
    std::vector<int> theta;  // 1-based, in theta
    std::string module;
    std::string a, b, c;
    std::string lemma;
    int B = 3;
    int D = 4;
    std::string format = "text";
    unsigned seed = 1;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--theta", cfg.theta, "1-based indices of the simple roots in theta")->delimiter(',');
    sub->add_option("--B", cfg.B, "window radius");
    sub->add_option("--D", cfg.D, "truncation depth");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

int emit(const RunConfig& cfg, const std::string& command, const CommandResult& r) {
    if (cfg.format == "json")
        std::cout << envelope(command, r.body).dump(2) << "\n";
    else
        std::cout << r.text;
    return r.pass ? OK : MISMATCH;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weightcat: weight modules in categories O_{S,theta}"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML file; flags go under a [classify], [verify], [ext] or [lab] table");
    RunConfig cfg;

    auto* classify_cmd = app.add_subcommand("classify", "classify the category for a Cartan type and theta");
    add_common(classify_cmd, cfg);
    auto* type_pos = classify_cmd->add_option("type_name", cfg.type, "Cartan type, e.g. A4");
    classify_cmd->add_option("--type", cfg.type, "Cartan type (alternative to the positional form)")->excludes(type_pos);

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites on a degree-one module");
    add_common(verify_cmd, cfg);
    verify_cmd->add_option("--module", cfg.module, "N or M")->check(CLI::IsMember({"N", "M"}))->required();
    verify_cmd->add_option("--a", cfg.a, "parameters, comma separated rationals p/q")->required();

    auto* ext_cmd = app.add_subcommand("ext", "certify Ext^1 between degree-one modules on a window");
    add_common(ext_cmd, cfg);
    ext_cmd->add_option("--module", cfg.module, "N, M or sl2")->check(CLI::IsMember({"N", "M", "sl2"}))->required();
    ext_cmd->add_option("--a", cfg.a, "parameters of the quotient module")->required();
    ext_cmd->add_option("--b", cfg.b, "parameters of the submodule (defaults to --a)");

    auto* lab_cmd = app.add_subcommand("lab", "reproduce a constant-extraction lemma");
    add_common(lab_cmd, cfg);
    lab_cmd->add_option("lemma", cfg.lemma, "lemma id or 'all'")->required();
    lab_cmd->add_option("--type", cfg.type, "algebra for A1N, AkAn and CC");
    lab_cmd->add_option("--a", cfg.a, "parameters (drawn from --seed when absent)");
    lab_cmd->add_option("--c", cfg.c, "branch constant for appendix-a3");
    lab_cmd->add_option("--seed", cfg.seed, "seed for drawn parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return CONFIG;
    }
    try {
        if (*classify_cmd) {
            if (cfg.type.empty()) throw ConfigError("classify needs a Cartan type");
            return emit(cfg, "classify", run_classify(cfg.type, cfg.theta));
        }
        if (*verify_cmd) {
            std::optional<std::vector<int>> theta;
            if (!cfg.theta.empty()) theta = cfg.theta;
            return emit(cfg, "verify", run_verify(cfg.module, cfg.a, theta, cfg.B, cfg.D));
        }
        if (*ext_cmd) return emit(cfg, "ext", run_ext(cfg.module, cfg.a, cfg.b, cfg.B));
        if (*lab_cmd)
            return emit(cfg, "lab", run_lab(cfg.lemma, cfg.a, cfg.c, cfg.type, cfg.theta, cfg.B, cfg.D, cfg.seed));
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return CONFIG;
    } catch (const CertificationImpossible& e) {
        std::cerr << "certification impossible: " << e.what() << "\n";
        return UNCERTIFIABLE;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return CONFIG;
    }
    return CONFIG;
}
