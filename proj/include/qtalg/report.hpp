#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace qtalg {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

// outcome of one verification suite
struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    bool ok() const;
    int failures() const;
    std::string summary() const;
    nlohmann::json to_json() const;
};

// Runs body(i, worker) for i in [0, n) on `threads` workers. Items are claimed
// dynamically; results must be written to per-index slots by the caller.
void parallel_for(int n, int threads, const std::function<void(int, int)>& body);

int default_threads();

}  // namespace qtalg
