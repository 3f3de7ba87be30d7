#include "ghmod/report.hpp"

#include <sstream>

namespace ghmod {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(std::string name, nlohmann::json expected, nlohmann::json actual) {
    const bool ok = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

void Report::add(std::string name, nlohmann::json expected, nlohmann::json actual, bool ok) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["runtime_ms"] = runtime_ms;
    j["seed"] = seed;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << command;
    if (!params.empty()) os << ' ' << params.dump();
    os << '\n';
    for (const auto& c : checks)
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << ": expected " << c.expected.dump() << ", actual "
           << c.actual.dump() << '\n';
    if (!notes.empty()) os << "  notes " << notes.dump() << '\n';
    os << (pass() ? "all checks passed" : "some checks FAILED") << " (" << checks.size() << " checks, " << runtime_ms
       << " ms, seed " << seed << ")\n";
    return os.str();
}

}  // namespace ghmod
