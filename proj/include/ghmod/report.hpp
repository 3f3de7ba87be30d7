#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ghmod {

struct Check {
    std::string name;
    nlohmann::json expected;
    nlohmann::json actual;
    bool pass = false;
};

struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Check> checks;
    std::int64_t runtime_ms = 0;
    std::uint64_t seed = 0;
    // Diagnostics outside the check list; emitted only when non-empty.
    nlohmann::json notes = nlohmann::json::object();

    bool pass() const;
    void add(std::string name, nlohmann::json expected, nlohmann::json actual);
    void add(std::string name, nlohmann::json expected, nlohmann::json actual, bool pass);
    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace ghmod
