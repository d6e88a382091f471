#include "deepzero/parallel.hpp"

#include <cstdlib>
#include <string>

namespace deepzero {

std::size_t thread_budget() {
  if (const char* env = std::getenv("DEEPZERO_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace deepzero
