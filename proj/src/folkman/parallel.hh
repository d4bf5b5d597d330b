#ifndef FOLKMAN_GUARD_PARALLEL_HH
#define FOLKMAN_GUARD_PARALLEL_HH 1

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace folkman
{
    /**
     * Calls work(i) for every i in [0, count) using up to the given number of
     * threads. Items are handed out dynamically. The first exception thrown by
     * any call is rethrown after all threads stop.
     */
    template <typename Work>
    auto parallel_for(std::size_t count, int workers, const Work & work) -> void
    {
        if (workers <= 1 || count <= 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                work(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto body = [&] {
            while (! failed) {
                auto i = next++;
                if (i >= count)
                    return;
                try {
                    work(i);
                }
                catch (...) {
                    std::scoped_lock lock{error_mutex};
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };

        std::vector<std::thread> threads;
        auto thread_count = std::min<std::size_t>(std::size_t(workers), count);
        for (std::size_t t = 0 ; t < thread_count ; ++t)
            threads.emplace_back(body);
        for (auto & t : threads)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }
}

#endif
