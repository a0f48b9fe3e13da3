#pragma once
// Static striping of an index range over worker threads.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ce {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += jobs) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace ce
