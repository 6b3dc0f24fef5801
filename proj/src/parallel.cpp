#include "gs/parallel.hpp"

#include <atomic>

namespace gs {

namespace {
std::atomic<unsigned> g_threads{1};
}

unsigned thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n, std::memory_order_relaxed); }

} // namespace gs
