#include "qder/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "qder/version.hpp"

namespace qder {

int Report::passed() const {
    int n = 0;
    for (const auto& r : records)
        if (r.equal) ++n;
    return n;
}

void Report::strip_timing() {
    for (auto& r : records) r.elapsed_ms = 0;
}

std::string Report::render(OutputFormat fmt) const {
    switch (fmt) {
        case OutputFormat::json: return to_json();
        case OutputFormat::csv: return to_csv();
        case OutputFormat::pretty: return to_pretty();
    }
    return {};
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json jr;
        jr["family"] = r.family;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) p[k] = v;
        jr["params"] = p;
        jr["lhs"] = r.lhs;
        jr["rhs"] = r.rhs;
        jr["equal"] = r.equal;
        jr["conjectural"] = r.conjectural;
        jr["terms"] = r.terms;
        jr["elapsed_ms"] = r.elapsed_ms;
        j["records"].push_back(jr);
    }
    j["summary"] = {{"checked", checked()}, {"passed", passed()}, {"failed", failed()}};
    return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "family,params,lhs,rhs,equal,conjectural,terms,elapsed_ms\n";
    for (const auto& r : records) {
        std::ostringstream ps;
        for (size_t i = 0; i < r.params.size(); ++i) {
            if (i) ps << " ";
            ps << r.params[i].first << "=" << r.params[i].second;
        }
        os << csv_quote(r.family) << "," << csv_quote(ps.str()) << "," << csv_quote(r.lhs) << ","
           << csv_quote(r.rhs) << "," << (r.equal ? "true" : "false") << ","
           << (r.conjectural ? "true" : "false") << "," << r.terms << "," << r.elapsed_ms << "\n";
    }
    return os.str();
}

std::string Report::to_pretty() const {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << " -- " << command << "\n";
    for (const auto& r : records) {
        os << (r.equal ? "  [ok]   " : "  [FAIL] ") << r.family;
        for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
        if (r.conjectural) os << " (conjectural)";
        if (r.terms > 0) os << " terms=" << r.terms;
        os << " elapsed=" << r.elapsed_ms << "ms\n";
        if (!r.equal) {
            os << "         lhs = " << r.lhs << "\n";
            os << "         rhs = " << r.rhs << "\n";
        }
    }
    os << "summary: checked=" << checked() << " passed=" << passed() << " failed=" << failed()
       << "\n";
    return os.str();
}

}  // namespace qder
