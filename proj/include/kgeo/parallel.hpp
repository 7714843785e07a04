#ifndef KGEO_PARALLEL_HPP
#define KGEO_PARALLEL_HPP

#include <complex>
#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

// Data-parallel kernel layer. Every grid loop in the library goes through
// pointwise()/reduce_*() below. The OpenMP path and the serial path share one
// algorithm: pointwise writes are disjoint, and reductions accumulate fixed-size
// blocks whose partial sums are combined in index order. Results are therefore
// bit-identical for any thread count, which is what the deterministic-output
// guarantees of the CLI rest on. kernels_ref.hpp keeps naive serial versions
// for cross-checks and benchmarking.
namespace kgeo::par {

/** Thread count used by parallel regions (0 = OpenMP default). */
void set_threads(int k);
int threads();

/** Globally disable OpenMP paths (serial mode for reference runs). */
void set_serial(bool on);
bool serial();

inline constexpr std::size_t kReduceBlock = 4096;

template <class F>
void pointwise(std::size_t n, F&& f) {
#if defined(_OPENMP)
    if (!serial()) {
        const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(threads() > 0 ? threads() : omp_get_max_threads())
        for (long long i = 0; i < nn; ++i) f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

/** Parallel loop over coarse work items (r-sweeps, probe samples, fibres). */
template <class F>
void over_items(std::size_t n, F&& f) {
#if defined(_OPENMP)
    if (!serial()) {
        const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads() > 0 ? threads() : omp_get_max_threads())
        for (long long i = 0; i < nn; ++i) f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

/** Blocked sum of term(i), combined in block order. Deterministic. */
template <class T, class Term>
T reduce_sum(std::size_t n, Term&& term) {
    const std::size_t nblk = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<T> partial(nblk, T{});
    pointwise(nblk, [&](std::size_t b) {
        const std::size_t lo = b * kReduceBlock;
        const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[b] = acc;
    });
    T total{};
    for (std::size_t b = 0; b < nblk; ++b) total += partial[b];
    return total;
}

template <class Term>
double reduce_max(std::size_t n, Term&& term) {
    const std::size_t nblk = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(nblk, 0.0);
    pointwise(nblk, [&](std::size_t b) {
        const std::size_t lo = b * kReduceBlock;
        const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double t = term(i);
            if (t > m) m = t;
        }
        partial[b] = m;
    });
    double m = 0.0;
    for (double p : partial)
        if (p > m) m = p;
    return m;
}

} // namespace kgeo::par

#endif
