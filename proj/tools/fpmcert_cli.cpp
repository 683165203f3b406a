#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpmcert.h"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    std::optional<int> precision;
    bool max_unknown_fail = false;
};

int fail_with(int code, const std::string& context) {
    std::cerr << "fpmcert: " << context;
    const char* msg = fpmcert_last_error();
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Owns a string returned by the library.
struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { fpmcert_string_free(s); }
};

/// Apply the --precision override to a config JSON before parsing.
std::string with_precision(const std::string& config_text, const Options& opt) {
    if (!opt.precision) return config_text;
    ordered_json cfg = ordered_json::parse(config_text);
    cfg["precision"] = *opt.precision;
    return cfg.dump(2);
}

bool report_has_unknown(const std::string& report_json) {
    json rep = json::parse(report_json);
    for (const char* sect : {"admissibility", "semisimple", "condition3"}) {
        if (!rep.contains(sect) || rep[sect].is_null()) continue;
        std::string s = rep[sect].value("status", "");
        if (s == "Unknown" || s == "GridExhausted") return true;
    }
    if (rep.contains("splitting") && rep["splitting"].is_array())
        for (const auto& e : rep["splitting"])
            if (e.value("status", "") == "Unknown") return true;
    return !rep.value("errors", json::array()).empty();
}

int print_report(const std::string& report_json, const Options& opt) {
    if (opt.format == "text") {
        OwnedString text;
        if (int rc = fpmcert_report_text(report_json.c_str(), &text.s))
            return fail_with(rc, "rendering report");
        std::cout << text.s;
    } else {
        std::cout << report_json;
    }
    if (opt.max_unknown_fail && report_has_unknown(report_json)) return 1;
    return 0;
}

int cmd_check(const std::string& config_path, const Options& opt) {
    std::string config = with_precision(read_file(config_path), opt);
    fpmcert_module* mod = nullptr;
    if (int rc = fpmcert_module_parse(config.c_str(), &mod))
        return fail_with(rc, "parsing config");
    OwnedString report;
    int rc = fpmcert_module_run(mod, &report.s);
    fpmcert_module_free(mod);
    if (rc) return fail_with(rc, "running pipeline");
    return print_report(report.s, opt);
}

std::string params_json(long p, const Options& opt, std::optional<int> n, std::optional<int> m,
                        std::optional<long> a1, std::optional<long> a2) {
    ordered_json params;
    params["p"] = p;
    if (n) params["n"] = *n;
    if (m) params["m"] = *m;
    if (a1) params["a1"] = *a1;
    if (a2) params["a2"] = *a2;
    if (opt.precision) params["precision"] = *opt.precision;
    return params.dump();
}

int cmd_catalog(const std::string& name, const std::string& params, const Options& opt,
                const std::string& config_out) {
    OwnedString config, report;
    if (int rc = fpmcert_catalog(name.c_str(), params.c_str(), &config.s, &report.s))
        return fail_with(rc, "building catalog entry " + name);
    if (!config_out.empty()) {
        std::ofstream out(config_out);
        if (!out) return fail_with(FPMCERT_INTERNAL_ERROR, "cannot write " + config_out);
        out << config.s;
    } else if (opt.format == "json") {
        std::cout << "// config\n" << config.s << "// report\n";
    } else {
        std::cout << config.s;
    }
    return print_report(report.s, opt);
}

int cmd_sweep(const std::string& family, const std::vector<long>& primes,
              const std::string& base_params, const Options& opt) {
    int worst = 0;
    for (long p : primes) {
        json params = json::parse(base_params);
        params["p"] = p;
        OwnedString report;
        int rc = fpmcert_catalog(family.c_str(), params.dump().c_str(), nullptr, &report.s);
        if (rc) {
            std::cout << family << " p=" << p << ": error (" << fpmcert_last_error() << ")\n";
            worst = std::max(worst, rc);
            continue;
        }
        json rep = json::parse(std::string(report.s));
        std::cout << family << " p=" << p
                  << ": admissible=" << rep["admissibility"].value("status", "?")
                  << " polarization=" << rep["condition3"].value("status", "?")
                  << " semisimple=" << rep["semisimple"].value("status", "?")
                  << " realizable=" << (rep.value("abelian_variety_realizable", false) ? "yes" : "no")
                  << "\n";
        if (opt.max_unknown_fail && report_has_unknown(report.s)) worst = std::max(worst, 1);
    }
    return worst;
}

int cmd_verify(const std::string& config_path, const std::string& report_path,
               const Options& opt) {
    std::string config = with_precision(read_file(config_path), opt);
    fpmcert_module* mod = nullptr;
    if (int rc = fpmcert_module_parse(config.c_str(), &mod))
        return fail_with(rc, "parsing config");
    OwnedString result;
    int rc = fpmcert_module_verify(mod, read_file(report_path).c_str(), &result.s);
    fpmcert_module_free(mod);
    if (rc) return fail_with(rc, "verifying report");
    std::cout << result.s;
    json res = json::parse(std::string(result.s));
    return res.value("all_ok", false) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of filtered phi-modules over Q_p"};
    app.set_version_flag("--version", std::string(fpmcert_version()));
    app.require_subcommand(1);
    app.fallthrough(true);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    int precision = 0;
    auto* prec_opt = app.add_option("--precision", precision, "p-adic working precision override");
    app.add_flag("--max-unknown-fail", opt.max_unknown_fail,
                 "Exit nonzero when any verdict is Unknown");

    auto* check = app.add_subcommand("check", "Certify a module config");
    std::string config_path;
    check->add_option("config", config_path, "Config JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "Emit config and report for a built-in example");
    std::string name, config_out;
    long p = 0;
    std::optional<int> n_opt, m_opt;
    std::optional<long> a1_opt, a2_opt;
    catalog->add_option("name", name, "Entry name")->required();
    catalog->add_option("--p", p, "Prime")->required();
    catalog->add_option("--n", n_opt, "Cyclotomic order (cyclotomic entry)");
    catalog->add_option("--m", m_opt, "Number of blocks (nfold entry)");
    catalog->add_option("--a1", a1_opt, "First linear coefficient (distinct-curves)");
    catalog->add_option("--a2", a2_opt, "Second linear coefficient (distinct-curves)");
    catalog->add_option("--config-out", config_out, "Write the config to this file");

    auto* sweep = app.add_subcommand("sweep", "Certify a family over several primes");
    std::string family;
    std::vector<long> primes;
    sweep->add_option("--family", family, "Catalog entry name")->required();
    sweep->add_option("--primes", primes, "Primes to sweep")->required()->delimiter(',');
    sweep->add_option("--n", n_opt, "Cyclotomic order");
    sweep->add_option("--m", m_opt, "Number of blocks");
    sweep->add_option("--a1", a1_opt, "First linear coefficient");
    sweep->add_option("--a2", a2_opt, "Second linear coefficient");

    auto* verify = app.add_subcommand("verify-witness", "Re-check a report against its config");
    std::string verify_config, verify_report;
    verify->add_option("config", verify_config, "Config JSON file")->required();
    verify->add_option("report", verify_report, "Report JSON file")->required();

    CLI11_PARSE(app, argc, argv);
    if (*prec_opt) opt.precision = precision;

    try {
        if (*check) return cmd_check(config_path, opt);
        if (*catalog)
            return cmd_catalog(name, params_json(p, opt, n_opt, m_opt, a1_opt, a2_opt), opt,
                               config_out);
        if (*sweep)
            return cmd_sweep(family, primes, params_json(0, opt, n_opt, m_opt, a1_opt, a2_opt),
                             opt);
        if (*verify) return cmd_verify(verify_config, verify_report, opt);
    } catch (const std::exception& e) {
        std::cerr << "fpmcert: " << e.what() << "\n";
        return FPMCERT_INPUT_ERROR;
    }
    return 0;
}
