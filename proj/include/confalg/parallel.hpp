#ifndef CONFALG_PARALLEL_HPP
#define CONFALG_PARALLEL_HPP

#include <cstddef>
#include <future>
#include <vector>

namespace confalg {

// Runs fn(i) for i in [0, n) split into chunks; per-chunk results are merged
// in index order, so the outcome is independent of the thread count.
template <typename Result, typename Fn, typename Merge>
Result parallel_map_reduce(std::size_t n, int threads, Fn fn, Merge merge,
                           Result init)
{
    if (threads <= 1 || n < 2) {
        Result acc = std::move(init);
        for (std::size_t i = 0; i < n; ++i)
            merge(acc, fn(i));
        return acc;
    }
    std::size_t nchunks = std::min<std::size_t>(threads, n);
    std::size_t chunk = (n + nchunks - 1) / nchunks;
    std::vector<std::future<Result>> futs;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        futs.push_back(std::async(std::launch::async, [=]() {
            Result acc{};
            for (std::size_t i = lo; i < hi; ++i)
                merge(acc, fn(i));
            return acc;
        }));
    }
    Result acc = std::move(init);
    for (auto& f : futs)
        merge(acc, f.get());
    return acc;
}

} // namespace confalg

#endif
