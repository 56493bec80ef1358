#include "astk/report.hpp"

#include "astk/groups.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <set>
#include <thread>

namespace astk {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Undetermined: return "undetermined";
    }
    return "fail";
}

int exit_code_for(Status s) {
    switch (s) {
        case Status::Pass: return kExitPass;
        case Status::Fail: return kExitFail;
        case Status::Undetermined: return kExitUndetermined;
    }
    return kExitFail;
}

Status combine(const std::vector<Status>& all) {
    Status out = Status::Pass;
    for (Status s : all) {
        if (s == Status::Fail) return Status::Fail;
        if (s == Status::Undetermined) out = Status::Undetermined;
    }
    return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("ASTK_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            return fnv1a(s);
        }
    }
    return 20240611ull;
}

const CheckDescriptor& find_check(const std::string& name) {
    for (const auto& d : check_registry())
        if (d.name == name) return d;
    throw UsageError("unknown check '" + name + "'");
}

Json validate_params(const CheckDescriptor& d, const Json& given) {
    if (!given.is_null() && !given.is_object()) throw UsageError("parameters must be a JSON object");
    Json out = Json::object();
    std::set<std::string> known;
    for (const auto& p : d.params) {
        known.insert(p.name);
        Json v = given.is_object() && given.contains(p.name) ? given.at(p.name) : p.default_value;
        if (v.is_null()) throw UsageError(d.name + ": missing parameter --" + p.name);
        if (p.kind == ParamSpec::Kind::Int) {
            if (v.is_string()) {
                try {
                    std::size_t used = 0;
                    long x = std::stol(v.get<std::string>(), &used);
                    if (used != v.get<std::string>().size()) throw std::invalid_argument("trailing");
                    v = x;
                } catch (const std::exception&) {
                    throw UsageError(d.name + ": --" + p.name + " expects an integer");
                }
            }
            if (!v.is_number_integer()) throw UsageError(d.name + ": --" + p.name + " expects an integer");
            long x = v.get<long>();
            if (x < p.min || x > p.max)
                throw UsageError(d.name + ": --" + p.name + " must lie in [" + std::to_string(p.min) + ", " +
                                 std::to_string(p.max) + "]");
        } else {
            if (!v.is_string()) throw UsageError(d.name + ": --" + p.name + " expects a string");
            if (!p.choices.empty() &&
                std::find(p.choices.begin(), p.choices.end(), v.get<std::string>()) == p.choices.end())
                throw UsageError(d.name + ": --" + p.name + " must be one of the listed choices");
        }
        out[p.name] = v;
    }
    if (given.is_object())
        for (const auto& [k, v] : given.items())
            if (!known.count(k)) throw UsageError(d.name + ": unknown parameter --" + k);
    return out;
}

std::string report_digest(const Json& report) {
    Json copy = report;
    copy.erase("digest");
    copy.erase("timings");
    return hex64(fnv1a(copy.dump()));
}

Json without_timings(const Json& report) {
    Json copy = report;
    copy.erase("timings");
    if (copy.contains("checks"))
        for (auto& [k, v] : copy["checks"].items()) v.erase("timings");
    return copy;
}

Status report_status(const Json& report) {
    const std::string s = report.value("status", "fail");
    if (s == "pass") return Status::Pass;
    if (s == "undetermined") return Status::Undetermined;
    return Status::Fail;
}

Json run_check(const std::string& name, const Json& params) {
    const CheckDescriptor& d = find_check(name);
    Json p = validate_params(d, params);
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
        outcome = d.run(p);
    } catch (const IntegrityError& e) {
        outcome.status = Status::Fail;
        outcome.result = {{"integrity_error", e.what()}};
    } catch (const UsageError&) {
        throw;
    } catch (const LoadError& e) {
        throw UsageError(std::string("load error: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    } catch (const UnsupportedError& e) {
        throw UsageError(std::string("unsupported: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json r;
    r["report_v"] = kReportVersion;
    r["check"] = d.name;
    r["module"] = d.module;
    r["anchor"] = d.anchor;
    r["params"] = p;
    r["status"] = status_name(outcome.status);
    r["result"] = outcome.result;
    r["tool_version"] = kToolVersion;
    Json inputs = {{"params", hex64(fnv1a(p.dump()))}};
    if (!outcome.input_bytes.empty()) inputs["files"] = hex64(fnv1a(outcome.input_bytes));
    r["input_digests"] = inputs;
    r["digest"] = report_digest(r);
    r["timings"] = {{"wall_ms", ms}};
    return r;
}

std::vector<SuiteEntry> default_suite(const VerifyConfig& cfg) {
    std::vector<SuiteEntry> s;
    auto prec = [&](long dflt) { return cfg.precision ? *cfg.precision : dflt; };
    s.push_back({"adams", "adams", {{"precision", prec(12)}}});
    s.push_back({"bgm-k", "bgm-k", {{"precision", prec(8)}}});
    s.push_back({"bmun", "bmun", {{"n_min", 2}, {"n_max", 12}}});
    for (int n = 1; n <= 6; ++n) {
        const std::string g = "mu" + std::to_string(n);
        s.push_back({"cech[" + g + "]", "cech", {{"group", g}, {"max_degree", 2}, {"truncation", 4}}});
        s.push_back({"descent-gap[" + g + "]", "descent-gap", {{"group", g}}});
    }
    s.push_back({"cech[s3]", "cech", {{"group", "s3"}, {"max_degree", 2}, {"truncation", 3}}});
    s.push_back({"change-of-groups[mu_n-gm]", "change-of-groups", {{"pair", "mu_n-gm"}, {"max_exponent", 4}, {"max_n", 6}}});
    s.push_back({"change-of-groups[t1-sl2]", "change-of-groups", {{"pair", "t1-sl2"}, {"max_exponent", 6}}});
    s.push_back({"change-of-groups[t2-gl2]", "change-of-groups", {{"pair", "t2-gl2"}, {"max_exponent", 4}}});
    s.push_back({"counterexample", "counterexample", {{"degree", 4}, {"precision", prec(3)}}});
    s.push_back({"koszul-check", "koszul-check", {{"vars", 2}, {"precision", prec(4)}}});
    s.push_back({"properties", "properties", Json::object()});
    for (const char* g : {"gl2", "sl2", "s3", "mu2", "mu3", "mu4", "mu5", "mu6"})
        s.push_back({std::string("trace-radical[") + g + "]", "trace-radical", {{"group", g}, {"max_exponent", 3}}});
    for (const char* g : {"gm", "t2", "mu2", "mu3", "mu4", "mu5", "mu6", "s3"})
        s.push_back({std::string("unipotent-check[") + g + "]", "unipotent-check", {{"group", g}}});
    s.push_back({"trace[s3-regular]", "trace", {{"group", "s3"}, {"element", R"({"regular": true})"}}});
    std::sort(s.begin(), s.end(), [](const SuiteEntry& a, const SuiteEntry& b) { return a.id < b.id; });
    return s;
}

Json verify_all(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteEntry> run;
    std::vector<std::string> excluded;
    for (auto& e : default_suite(cfg)) {
        bool skip = std::find(cfg.exclude.begin(), cfg.exclude.end(), e.id) != cfg.exclude.end() ||
                    std::find(cfg.exclude.begin(), cfg.exclude.end(), e.check) != cfg.exclude.end();
        (skip ? excluded.push_back(e.id) : run.push_back(std::move(e)));
    }
    std::vector<Json> reports(run.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < run.size();) {
            try {
                reports[i] = run_check(run[i].check, run[i].params);
            } catch (const std::exception& e) {
                reports[i] = {{"report_v", kReportVersion},
                              {"check", run[i].check},
                              {"params", run[i].params},
                              {"status", "fail"},
                              {"error", e.what()}};
            }
        }
    };
    const unsigned jobs = std::max(1u, cfg.jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Json out;
    out["report_v"] = kReportVersion;
    out["check"] = "verify-all";
    out["tool_version"] = kToolVersion;
    out["excluded"] = excluded;
    Json config = {{"exclude", cfg.exclude}};
    config["precision"] = cfg.precision ? Json(*cfg.precision) : Json(nullptr);
    out["config"] = config;
    Json checks = Json::object(), timings = Json::object();
    std::vector<Status> statuses;
    std::size_t np = 0, nf = 0, nu = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        Json r = reports[i];
        if (r.contains("timings")) timings[run[i].id] = r["timings"];
        r.erase("timings");
        Status s = report_status(r);
        statuses.push_back(s);
        (s == Status::Pass ? np : s == Status::Fail ? nf : nu)++;
        checks[run[i].id] = r;
    }
    out["checks"] = checks;
    out["summary"] = {{"pass", np}, {"fail", nf}, {"undetermined", nu}, {"total", run.size()}};
    out["status"] = status_name(combine(statuses));
    out["digest"] = report_digest(out);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out["timings"] = {{"wall_ms", ms}, {"jobs", jobs}, {"checks", timings}};
    return out;
}

Json group_validation_report(const std::string& path) {
    std::string bytes;
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw UsageError("cannot read " + path);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    Json r;
    r["report_v"] = kReportVersion;
    r["check"] = "group-validate";
    r["module"] = "group-catalog";
    r["params"] = {{"file", path}};
    r["tool_version"] = kToolVersion;
    r["input_digests"] = {{"files", hex64(fnv1a(bytes))}};
    try {
        auto g = parse_finite_group(bytes);
        Json chars = Json::array();
        for (const auto& c : g->characters) chars.push_back({{"name", c.name}, {"dim", format_rational(c.dim)}});
        Json pm = Json::array();
        for (const auto& [l, m] : g->power_maps) pm.push_back(l);
        r["result"] = {{"name", g->name},
                       {"order", g->order()},
                       {"classes", g->class_count()},
                       {"characters", chars},
                       {"split", g->split},
                       {"power_maps", pm}};
        r["status"] = "pass";
    } catch (const LoadError& e) {
        r["result"] = {{"load_error", e.what()}};
        r["status"] = "fail";
    }
    r["digest"] = report_digest(r);
    return r;
}

}  // namespace astk
