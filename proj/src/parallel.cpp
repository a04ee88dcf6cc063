#include "dpd/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

namespace dpd {

struct WorkerPool::Impl {
    std::mutex mtx;
    std::condition_variable cv_work, cv_done;
    std::uint64_t generation = 0;
    unsigned pending = 0;
    bool stop = false;
    std::size_t job_n = 0;
    const std::function<void(unsigned, std::size_t, std::size_t)>* job = nullptr;
    std::vector<std::thread> threads;

    void worker_main(unsigned id, unsigned team) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(unsigned, std::size_t, std::size_t)>* f;
            std::size_t n;
            {
                std::unique_lock lk(mtx);
                cv_work.wait(lk, [&] { return stop || generation != seen; });
                if (stop) return;
                seen = generation;
                f = job;
                n = job_n;
            }
            auto [b, e] = chunk_bounds(n, team, id);
            (*f)(id, b, e);
            {
                std::lock_guard lk(mtx);
                if (--pending == 0) cv_done.notify_one();
            }
        }
    }
};

WorkerPool::WorkerPool(unsigned workers) : workers_(workers ? workers : 1) {
    if (workers_ > 1) {
        impl_ = std::make_unique<Impl>();
        for (unsigned id = 1; id < workers_; ++id)
            impl_->threads.emplace_back([this, id] { impl_->worker_main(id, workers_); });
    }
}

WorkerPool::~WorkerPool() {
    if (impl_) {
        {
            std::lock_guard lk(impl_->mtx);
            impl_->stop = true;
        }
        impl_->cv_work.notify_all();
        for (auto& t : impl_->threads) t.join();
    }
}

void WorkerPool::run_chunks(std::size_t n,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& f) {
    if (workers_ == 1) {
        f(0, 0, n);
        return;
    }
    {
        std::lock_guard lk(impl_->mtx);
        impl_->job = &f;
        impl_->job_n = n;
        impl_->pending = workers_ - 1;
        ++impl_->generation;
    }
    impl_->cv_work.notify_all();
    auto [b, e] = chunk_bounds(n, workers_, 0);
    f(0, b, e);
    {
        std::unique_lock lk(impl_->mtx);
        impl_->cv_done.wait(lk, [&] { return impl_->pending == 0; });
    }
}

} // namespace dpd
