#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace entlab {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Primitive cube root of unity e^{2 pi i / 3}.
inline const cplx omega = std::polar(1.0, 2.0 * pi / 3.0);

/// Raised when inputs violate a documented precondition (bad dimension,
/// party index out of range, non-Hermitian matrix, size cap exceeded...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical routine fails to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

using Rng = std::mt19937_64;

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stable sub-seed for (seed, module, task index). Independent of platform
/// and of the order in which tasks are scheduled.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view module,
                                 std::uint64_t index = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : module) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(mix64(seed ^ h) + index);
}

/// Worker count: ENTLAB_THREADS if set, otherwise hardware concurrency.
inline int default_threads() {
    if (const char* env = std::getenv("ENTLAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is split in
/// contiguous stripes, so results written to per-index slots are identical
/// for any thread count.
template <class Fn>
void parallel_for(int n, Fn&& fn, int threads = 0) {
    if (threads <= 0) threads = default_threads();
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < n; i += threads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    // lowest stripe first, so the rethrown error does not depend on timing
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline long ipow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace entlab
