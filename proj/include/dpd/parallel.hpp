#pragma once

#include <cstddef>
#include <functional>
#include <memory>

namespace dpd {

// Fixed-size thread team with static work partitioning. Results must not
// depend on the team size: callers only perform disjoint writes per chunk,
// so any chunk count yields the same output.
class WorkerPool {
public:
    explicit WorkerPool(unsigned workers = 1);
    ~WorkerPool();
    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    unsigned size() const { return workers_; }

    // Splits [0,n) into size() contiguous chunks, runs f(chunk, begin, end)
    // on the team (chunk 0 on the calling thread). Blocks until done.
    void run_chunks(std::size_t n,
                    const std::function<void(unsigned, std::size_t, std::size_t)>& f);

    // Convenience: plain parallel loop over [0,n).
    template <class F>
    void for_each(std::size_t n, F&& f) {
        run_chunks(n, [&](unsigned, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) f(i);
        });
    }

    static std::pair<std::size_t, std::size_t>
    chunk_bounds(std::size_t n, unsigned chunks, unsigned c) {
        return {n * c / chunks, n * (c + 1) / chunks};
    }

private:
    struct Impl;
    unsigned workers_;
    std::unique_ptr<Impl> impl_; // null when workers_ == 1
};

} // namespace dpd
