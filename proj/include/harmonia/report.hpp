#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace harmonia {

using json = nlohmann::ordered_json;

inline const char* tool_version() { return "0.1.0"; }

// One verification check: what was asked, what was expected, what came out.
struct VerificationReport {
    std::string id;
    std::string family;
    int n = 0;
    json params = json::object();
    json expected = json::object();
    json computed = json::object();
    std::string status = "pass";  // pass | fail | open
    long long ms = 0;

    void set_status(bool ok) { status = ok ? "pass" : "fail"; }
};

struct RunManifest {
    std::string version = tool_version();
    std::uint64_t seed = 0;
    std::vector<VerificationReport> reports;

    json to_json() const {
        json j;
        j["version"] = version;
        j["seed"] = seed;
        json arr = json::array();
        for (const auto& r : reports) {
            json e;
            e["id"] = r.id;
            e["family"] = r.family;
            e["n"] = r.n;
            e["params"] = r.params;
            e["expected"] = r.expected;
            e["computed"] = r.computed;
            e["status"] = r.status;
            e["ms"] = r.ms;
            arr.push_back(std::move(e));
        }
        j["reports"] = std::move(arr);
        return j;
    }

    int fail_count() const {
        int c = 0;
        for (const auto& r : reports)
            if (r.status == "fail") ++c;
        return c;
    }
    int open_count() const {
        int c = 0;
        for (const auto& r : reports)
            if (r.status == "open") ++c;
        return c;
    }
    int exit_code() const { return fail_count() > 0 ? 1 : 0; }
};

}  // namespace harmonia
