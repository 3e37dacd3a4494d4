#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "strata/curves.hpp"
#include "strata/verify.hpp"

namespace strata {

inline constexpr const char* kEngineVersion = "0.1.0";

struct RunConfig {
    int m = 0;
    int depth = kDefaultDepth;
    int max_index = kDefaultMaxIndex;
    std::string out;  // empty = stdout
    std::map<VarId, Rational> at;
    std::filesystem::path golden_dir;
    bool timing = false;

    /// Smallest product bound that still multiplies the lowest generic
    /// generator p_{m+1}.
    static int min_max_index(int m) { return m + 1; }
    /// Throws UsageError on depth < 4, m outside 0..9 or a too small bound.
    void validate() const;
};

/// Bad flag values; mapped to exit code 64 like parse errors.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Report {
    std::string command;
    VerifyReport verify;
    /// Command-specific top-level fields (merged into the JSON object).
    nlohmann::json payload = nlohmann::json::object();
    std::optional<double> timing_ms;

    /// 0 all pass, 2 flagged only, 1 any failure.
    int exit_code() const;
    /// Keys sorted; "timing_ms" only present when measured.
    nlohmann::json to_json() const;
    std::string dump() const;
};

/// Parses {"H[3,-1]": "0", "H[3,3]": "1/2"} into a specialization.
std::map<VarId, Rational> parse_specialization(const std::string& json_text);

/// Canonical golden text: a curve is its normalized polynomial plus a
/// newline; a constraint set is the JSON array of its unresolved
/// generators, sorted as strings ("[]" when empty).
std::string golden_text(const CurveRecord& record);
std::string golden_text(const ConstraintSet& cs);
void emit_golden(const CurveRecord& record, const std::filesystem::path& path);
void emit_golden(const ConstraintSet& cs, const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace strata
