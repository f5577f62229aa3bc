#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace medico {

/// Worker count: explicit value, else MEDICO_JOBS, else hardware concurrency.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("MEDICO_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

/// Runs f(i) for i in [0, count) on up to `jobs` threads. Results must be
/// written to disjoint, preallocated slots so the outcome is schedule-independent.
template <class F>
void parallel_for(long long count, int jobs, F&& f) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
    };
    std::vector<std::thread> pool;
    int t = int(std::min<long long>(jobs, count));
    pool.reserve(std::size_t(t));
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace medico
