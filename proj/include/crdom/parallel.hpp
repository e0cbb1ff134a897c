#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace crdom {

/// Worker count used when callers ask for "all cores".
inline unsigned hardware_workers() noexcept
{
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Splits [0, total) into `workers` contiguous chunks and runs
/// `body(begin, end)` on each, one thread per chunk. Results come back in
/// chunk order, so an in-order fold gives the same answer for any worker
/// count as long as the fold is associative.
template <typename Body>
auto parallel_chunks(std::uint64_t total, unsigned workers, Body body)
    -> std::vector<decltype(body(std::uint64_t{}, std::uint64_t{}))>
{
    using Result = decltype(body(std::uint64_t{}, std::uint64_t{}));
    workers = std::max(1U, workers);
    if (static_cast<std::uint64_t>(workers) > total)
        workers = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));

    auto chunk_begin = [&](unsigned w) { return total * w / workers; };
    if (workers == 1) {
        std::vector<Result> single;
        single.push_back(body(0, total));
        return single;
    }

    std::vector<std::optional<Result>> results(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    results[w].emplace(body(chunk_begin(w), chunk_begin(w + 1)));
                }
                catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Result> out;
    out.reserve(workers);
    for (auto& r : results)
        out.push_back(std::move(*r));
    return out;
}

} // namespace crdom
