#pragma once

namespace softbte {

/// Caps the OpenMP worker count from SOFTBTE_THREADS (a positive integer); returns the cap in
/// effect. Invalid values throw ConfigError; an unset variable leaves the runtime default.
int apply_thread_limit_from_env();

int max_threads();

}  // namespace softbte
