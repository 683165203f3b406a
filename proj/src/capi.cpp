#include "fpmcert.h"

#include <cstdlib>
#include <cstring>

#include "pipeline.hpp"

using namespace fpmcert;
using nlohmann::json;
using nlohmann::ordered_json;

struct fpmcert_module {
    FilteredPhiModule module;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FPMCERT_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FPMCERT_INTERNAL_ERROR;
    }
}

CatalogParams params_from_json(const char* params_json) {
    json root;
    try {
        root = json::parse(params_json ? params_json : "{}");
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("catalog params are not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw SchemaError("catalog params must be a JSON object");
    CatalogParams p;
    if (!root.contains("p") || !root.at("p").is_number_integer())
        throw SchemaError("catalog params need an integer p");
    p.p = Int(root.at("p").get<long>());
    auto opt_int = [&root](const char* key) -> std::optional<long> {
        if (!root.contains(key)) return std::nullopt;
        if (!root.at(key).is_number_integer())
            throw SchemaError(std::string(key) + " must be an integer");
        return root.at(key).get<long>();
    };
    if (auto v = opt_int("n")) p.n = static_cast<int>(*v);
    if (auto v = opt_int("m")) p.m = static_cast<int>(*v);
    if (auto v = opt_int("a1")) p.a1 = Int(*v);
    if (auto v = opt_int("a2")) p.a2 = Int(*v);
    if (auto v = opt_int("precision")) p.precision = static_cast<int>(*v);
    for (auto it = root.begin(); it != root.end(); ++it) {
        static const std::vector<std::string> known = {"p", "n", "m", "a1", "a2", "precision"};
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw SchemaError("unknown catalog param: " + it.key());
    }
    return p;
}

} // namespace

extern "C" {

const char* fpmcert_version(void) { return "1.0.0"; }

int fpmcert_module_parse(const char* config_json, fpmcert_module** out) {
    return guarded([&] {
        if (!config_json || !out) throw SchemaError("null argument");
        *out = new fpmcert_module{build_module(parse_config(config_json))};
    });
}

void fpmcert_module_free(fpmcert_module* m) { delete m; }

int fpmcert_module_run(const fpmcert_module* m, char** report_json) {
    return guarded([&] {
        if (!m || !report_json) throw SchemaError("null argument");
        *report_json = dup_string(run_pipeline(m->module).dump(2) + "\n");
    });
}

int fpmcert_module_verify(const fpmcert_module* m, const char* report_json, char** result_json) {
    return guarded([&] {
        if (!m || !report_json || !result_json) throw SchemaError("null argument");
        ordered_json rep;
        try {
            rep = ordered_json::parse(report_json);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("report is not valid JSON: ") + e.what());
        }
        *result_json = dup_string(verify_report(m->module, rep).dump(2) + "\n");
    });
}

int fpmcert_catalog(const char* name, const char* params_json, char** config_json,
                    char** report_json) {
    return guarded([&] {
        if (!name) throw SchemaError("null catalog name");
        CatalogEntry entry = catalog_entry(name, params_from_json(params_json));
        if (config_json) *config_json = dup_string(emit_config(entry.module));
        if (report_json) *report_json = dup_string(run_pipeline_entry(entry).dump(2) + "\n");
    });
}

int fpmcert_report_text(const char* report_json, char** text) {
    return guarded([&] {
        if (!report_json || !text) throw SchemaError("null argument");
        ordered_json rep;
        try {
            rep = ordered_json::parse(report_json);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("report is not valid JSON: ") + e.what());
        }
        *text = dup_string(report_text(rep));
    });
}

void fpmcert_string_free(char* s) { std::free(s); }

const char* fpmcert_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
