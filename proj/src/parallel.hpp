#pragma once

#include <packlab/errors.hpp>
#include <packlab/solvers.hpp>

#include <atomic>
#include <exception>
#include <mutex>
#include <stop_token>
#include <thread>
#include <vector>

namespace packlab {

// Runs fn(chunk, limits) for every chunk index and returns the results in
// chunk order, whatever the worker count. The first exception stops the
// remaining workers and is rethrown; a SearchAborted raised only because of
// that stop is not reported in its place.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::uint64_t chunks, int workers, const SearchLimits & limits, Fn fn)
{
    std::vector<Result> results(chunks);
    std::atomic<std::uint64_t> next{0};
    std::stop_source stop;
    std::mutex error_mutex;
    std::exception_ptr error;

    SearchLimits shared = limits;
    shared.stop = stop.get_token();
    std::stop_callback forward(limits.stop, [&] { stop.request_stop(); });

    auto work = [&] {
        for (;;) {
            if (stop.stop_requested())
                return;
            std::uint64_t chunk = next.fetch_add(1);
            if (chunk >= chunks)
                return;
            try {
                results[chunk] = fn(chunk, shared);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
                stop.request_stop();
                return;
            }
        }
    };

    const auto count = static_cast<std::uint64_t>(workers) < chunks ? static_cast<std::uint64_t>(workers) : chunks;
    std::vector<std::jthread> pool;
    for (std::uint64_t i = 1; i < count; ++i)
        pool.emplace_back(work);
    work();
    pool.clear();

    if (error)
        std::rethrow_exception(error);
    if (limits.stop.stop_requested())
        throw SearchAborted("verification cancelled");
    return results;
}

} // namespace packlab
