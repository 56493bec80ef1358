#ifndef ASTK_REPORT_HPP
#define ASTK_REPORT_HPP

#include "astk/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace astk {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

inline constexpr const char* kToolVersion = "astk 1.0.0";
inline constexpr int kReportVersion = 1;

enum class Status { Pass, Fail, Undetermined };
std::string status_name(Status s);

/// Bad flags, unknown check, input outside an operation's domain. Exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitUndetermined = 3 };
int exit_code_for(Status s);
/// Fail dominates, then undetermined.
Status combine(const std::vector<Status>& all);

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);
/// ASTK_SEED or a fixed default.
std::uint64_t seed_from_env();

struct ParamSpec {
    enum class Kind { Int, String };
    std::string name;
    Kind kind = Kind::Int;
    Json default_value;  // null = required
    long min = 0, max = 1L << 30;
    std::vector<std::string> choices;
    std::string help;
};

struct CheckOutcome {
    Status status = Status::Fail;
    Json result = Json::object();
    /// Extra bytes hashed into the input digest (file contents).
    std::string input_bytes;
};

struct CheckDescriptor {
    std::string name;
    std::string module;
    /// Statement checked, in this tool's own notation.
    std::string anchor;
    std::string summary;
    std::vector<ParamSpec> params;
    std::function<CheckOutcome(const Json& params)> run;
};

const std::vector<CheckDescriptor>& check_registry();
const CheckDescriptor& find_check(const std::string& name);
/// Defaults filled, types and ranges checked. Throws UsageError.
Json validate_params(const CheckDescriptor& d, const Json& given);

/// Full report. Keys sorted; timings sit under "timings" and are kept out of "digest".
/// Throws UsageError for bad params or inputs outside the domain of the check.
Json run_check(const std::string& name, const Json& params);

/// Recomputes the digest of a report (everything except "digest" and "timings").
std::string report_digest(const Json& report);
/// Report with timings removed, for byte comparisons.
Json without_timings(const Json& report);
Status report_status(const Json& report);

struct VerifyConfig {
    unsigned jobs = 1;
    std::vector<std::string> exclude;
    std::optional<long> precision;
};

struct SuiteEntry {
    std::string id;     // e.g. "cech[mu3]"
    std::string check;  // registry name
    Json params;
};

/// The default acceptance suite, sorted by id.
std::vector<SuiteEntry> default_suite(const VerifyConfig& cfg = {});
Json verify_all(const VerifyConfig& cfg);

/// Loads and validates a group file. Status fail (with the violated invariant) on LoadError.
Json group_validation_report(const std::string& path);

}  // namespace astk

#endif
