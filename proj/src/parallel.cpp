#include "graphsq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace graphsq {

unsigned default_jobs() {
  const char* env = std::getenv("GRAPHSQ_JOBS");
  if (!env || !*env) return 1;
  try {
    long v = std::stol(env);
    return v >= 1 ? static_cast<unsigned>(v) : 1U;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace graphsq
