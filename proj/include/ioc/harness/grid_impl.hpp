#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace ioc::harness {

template <class Result>
std::vector<Result> parallel_map(std::size_t count, int workers,
                                 const std::function<Result(std::size_t)>& task) {
    std::vector<Result> out(count);
    const auto threads = static_cast<std::size_t>(std::clamp<long>(workers, 1, 256));
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = task(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < std::min(threads, count); ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace ioc::harness
