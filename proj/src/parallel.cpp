#include "negcurve/parallel.hpp"

#include <cstdlib>
#include <string>

namespace negcurve {

unsigned default_jobs() {
  if (const char* env = std::getenv("NEGCURVE_JOBS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace negcurve
