#include "astk/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using astk::Json;

namespace {

std::string flag_name(std::string s) {
    for (auto& c : s)
        if (c == '_') c = '-';
    return s;
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string it;
        while (std::getline(ss, it, ','))
            if (!it.empty()) out.push_back(it);
    }
    return out;
}

int emit(const Json& report, const std::string& out_path = "") {
    const std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw astk::UsageError("cannot write " + out_path);
        f << text;
    }
    std::cout << text;
    return astk::exit_code_for(astk::report_status(report));
}

int usage_error(const std::string& msg) {
    std::cout << Json{{"error", msg}, {"report_v", astk::kReportVersion}, {"status", "usage"}}.dump(2) << "\n";
    return astk::kExitUsage;
}

struct CheckCommand {
    const astk::CheckDescriptor* desc = nullptr;
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::string group_file;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"astk: exact checks for completed representation rings, class functions and descent"};
    app.require_subcommand(1);
    app.set_version_flag("--version", astk::kToolVersion);

    std::vector<std::unique_ptr<CheckCommand>> commands;
    for (const auto& d : astk::check_registry()) {
        auto cmd = std::make_unique<CheckCommand>();
        cmd->desc = &d;
        cmd->app = app.add_subcommand(d.name, d.summary);
        for (const auto& p : d.params) {
            auto* opt = cmd->app->add_option("--" + flag_name(p.name), cmd->values[p.name], p.help);
            if (!p.default_value.is_null()) opt->default_str(p.default_value.is_string() ? p.default_value.get<std::string>()
                                                                                          : p.default_value.dump());
        }
        if (d.name == "cech") cmd->app->add_option("--group-file", cmd->group_file, "group file (same as --group <path>)");
        commands.push_back(std::move(cmd));
    }

    unsigned jobs = 1;
    std::vector<std::string> exclude_raw;
    std::string out_path;
    long precision = -1;
    auto* va = app.add_subcommand("verify-all", "run the default suite");
    va->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    va->add_option("--exclude", exclude_raw, "check ids or names to skip (comma list)");
    va->add_option("--out", out_path, "also write the report to this file");
    va->add_option("--precision", precision, "override the precision of precision-driven checks")->check(CLI::Range(0L, 24L));

    auto* list = app.add_subcommand("list", "list checks and their parameters");

    auto* group = app.add_subcommand("group", "group file utilities");
    group->require_subcommand(1);
    std::string validate_path;
    auto* gv = group->add_subcommand("validate", "validate a group file");
    gv->add_option("file", validate_path, "group file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    try {
        if (*va) {
            astk::VerifyConfig cfg;
            cfg.jobs = jobs;
            cfg.exclude = split_list(exclude_raw);
            if (precision >= 0) cfg.precision = precision;
            std::set<std::string> known;
            for (const auto& e : astk::default_suite()) {
                known.insert(e.id);
                known.insert(e.check);
            }
            for (const auto& x : cfg.exclude)
                if (!known.count(x)) throw astk::UsageError("verify-all: --exclude names no suite entry: " + x);
            return emit(astk::verify_all(cfg), out_path);
        }
        if (*list) {
            Json out = Json::object();
            for (const auto& d : astk::check_registry()) {
                Json ps = Json::array();
                for (const auto& p : d.params)
                    ps.push_back({{"name", flag_name(p.name)},
                                  {"kind", p.kind == astk::ParamSpec::Kind::Int ? "int" : "string"},
                                  {"default", p.default_value},
                                  {"help", p.help}});
                out[d.name] = {{"module", d.module}, {"anchor", d.anchor}, {"summary", d.summary}, {"params", ps}};
            }
            std::cout << Json{{"report_v", astk::kReportVersion}, {"checks", out}}.dump(2) << "\n";
            return astk::kExitPass;
        }
        if (*gv) return emit(astk::group_validation_report(validate_path));
        for (const auto& c : commands) {
            if (!*c->app) continue;
            Json params = Json::object();
            for (const auto& p : c->desc->params)
                if (c->app->count("--" + flag_name(p.name))) params[p.name] = c->values[p.name];
            if (!c->group_file.empty()) {
                if (params.contains("group")) throw astk::UsageError("cech: give either --group or --group-file");
                params["group"] = c->group_file;
            }
            return emit(astk::run_check(c->desc->name, params));
        }
    } catch (const astk::UsageError& e) {
        return usage_error(e.what());
    } catch (const astk::Error& e) {
        return usage_error(e.what());
    }
    return usage_error("no command");
}
