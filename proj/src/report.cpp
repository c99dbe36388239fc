#include "qtalg/report.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>

namespace qtalg {

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.ok) ++n;
    return n;
}

std::string Report::summary() const {
    return suite + ": " + std::to_string(checks.size() - failures()) + "/" + std::to_string(checks.size()) +
           " checks passed";
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["passed"] = static_cast<int>(checks.size()) - failures();
    j["failed"] = failures();
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& c : checks)
        if (!c.ok) fails.push_back({{"check", c.name}, {"detail", c.detail}});
    j["failures"] = fails;
    return j;
}

void parallel_for(int n, int threads, const std::function<void(int, int)>& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i, 0);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i, w);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                    next = n;
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

int default_threads() {
    if (const char* e = std::getenv("QTALG_THREADS"); e && *e) {
        int n = std::atoi(e);
        if (n > 0) return n;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

}  // namespace qtalg
