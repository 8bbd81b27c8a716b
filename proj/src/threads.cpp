#include "rsa/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "rsa/errors.hpp"

namespace rsa {

int apply_thread_cap_from_env() {
    const char* raw = std::getenv("RSA_KINETICS_THREADS");
    if (raw == nullptr || *raw == '\0') return omp_get_max_threads();
    char* end = nullptr;
    const long cap = std::strtol(raw, &end, 10);
    if (*end != '\0' || cap < 1) throw ConfigError(std::string("RSA_KINETICS_THREADS must be a positive integer, got ") + raw);
    const int n = cap < omp_get_max_threads() ? static_cast<int>(cap) : omp_get_max_threads();
    omp_set_num_threads(n);
    return n;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace rsa
