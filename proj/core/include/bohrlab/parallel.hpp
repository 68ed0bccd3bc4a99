#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace bohr {

// Worker count: BOHR_LAB_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t thread_count();

// Calls body(i) for i in [0, n) on up to thread_count() threads. The first
// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// results[i] = f(i), computed in parallel; order follows the index, never
// completion order.
template <typename F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<decltype(f(std::size_t{}))>
{
    using T = decltype(f(std::size_t{}));
    std::vector<std::optional<T>> slots(n);
    parallel_for(n, [&](std::size_t i) { slots[i].emplace(f(i)); });
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace bohr
