#include "fblab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fblab {

int worker_count()
{
    if (const char* env = std::getenv("FBLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_blocks(std::size_t begin, std::size_t end, std::size_t block,
                         const std::function<void(std::size_t, std::size_t)>& fn)
{
    if (begin >= end) return;
    if (block == 0) block = 1;
    const std::size_t nblocks = (end - begin + block - 1) / block;
    const int workers = std::min<std::size_t>(worker_count(), nblocks);

    if (workers <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b) {
            const std::size_t lo = begin + b * block;
            fn(lo, std::min(end, lo + block));
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            const std::size_t lo = begin + b * block;
            fn(lo, std::min(end, lo + block));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int i = 1; i < workers; ++i) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
}

double parallel_max(std::size_t n, const std::function<double(std::size_t)>& fn)
{
    if (n == 0) return 0.0;
    const std::size_t block = 4096;
    const std::size_t nblocks = (n + block - 1) / block;
    std::vector<double> partial(nblocks, -1.0);
    parallel_for_blocks(0, n, block, [&](std::size_t lo, std::size_t hi) {
        double m = -1.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, fn(i));
        partial[lo / block] = m;
    });
    double m = partial[0];
    for (std::size_t b = 1; b < nblocks; ++b) m = std::max(m, partial[b]);
    return m;
}

} // namespace fblab
