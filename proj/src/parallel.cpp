#include "hsp/parallel.hpp"

namespace hsp {

namespace {
std::atomic<unsigned> configured_threads{0};
}

void set_thread_count(unsigned n) { configured_threads = n; }

unsigned thread_count() {
  const unsigned n = configured_threads;
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hsp
