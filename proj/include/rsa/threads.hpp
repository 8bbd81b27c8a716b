#pragma once

namespace rsa {

// Applies RSA_KINETICS_THREADS (if set) as an upper bound on OpenMP workers.
// Returns the resulting worker count.
int apply_thread_cap_from_env();

int max_threads();

}  // namespace rsa
