#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace skein {

/// Worker count: hardware concurrency, capped by SKEIN_THREADS when set.
inline unsigned worker_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SKEIN_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return n;
}

}  // namespace skein
