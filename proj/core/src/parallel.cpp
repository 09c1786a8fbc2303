#include "softbte/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "softbte/errors.hpp"

namespace softbte {

int apply_thread_limit_from_env() {
  const char* env = std::getenv("SOFTBTE_THREADS");
  if (env == nullptr || *env == '\0') return max_threads();
  const std::string s(env);
  int n = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n < 1)
    throw ConfigError("SOFTBTE_THREADS = '" + s + "' is not a positive integer");
  omp_set_num_threads(n);
  return n;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace softbte
