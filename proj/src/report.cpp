#include "strata/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace strata {

void RunConfig::validate() const {
    if (m < 0 || m > kMaxStratum) throw UsageError("--m must lie in 0.." + std::to_string(kMaxStratum));
    if (depth < 4) throw UsageError("--depth must be at least 4");
    if (max_index < min_max_index(m)) {
        throw UsageError("--max-index must be at least " + std::to_string(min_max_index(m)) + " for stratum " +
                         std::to_string(m));
    }
}

int Report::exit_code() const {
    switch (verify.overall()) {
        case Status::Pass: return 0;
        case Status::Flagged: return 2;
        case Status::Fail: return 1;
    }
    return 1;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j = payload;
    nlohmann::json v = verify.to_json();
    j["command"] = command;
    j["version"] = kEngineVersion;
    j["verdicts"] = v["verdicts"];
    j["summary"] = v["summary"];
    if (!verify.data.empty()) j["data"] = verify.data;
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::map<VarId, Rational> parse_specialization(const std::string& json_text) {
    std::map<VarId, Rational> at;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("--spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("--spec must be a JSON object");
    for (const auto& [name, value] : j.items()) {
        VarId v;
        try {
            v = parse_var(name);
        } catch (const Error& e) {
            throw UsageError("--spec: " + std::string(e.what()));
        }
        if (!v.is_param()) throw UsageError("--spec binds " + name + ", which is not an H parameter");
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        try {
            at[v] = parse_rational(text);
        } catch (const Error& e) {
            throw UsageError("--spec: " + std::string(e.what()));
        }
    }
    return at;
}

std::string golden_text(const CurveRecord& record) { return record.poly.normalized().str() + "\n"; }

std::string golden_text(const ConstraintSet& cs) {
    std::vector<std::string> gens;
    for (const auto& p : cs.unresolved) gens.push_back(p.normalized().str());
    std::sort(gens.begin(), gens.end());
    return nlohmann::json(gens).dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw Error("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed for " + path.string());
}

void emit_golden(const CurveRecord& record, const std::filesystem::path& path) {
    write_text_file(path, golden_text(record));
}

void emit_golden(const ConstraintSet& cs, const std::filesystem::path& path) { write_text_file(path, golden_text(cs)); }

}  // namespace strata
