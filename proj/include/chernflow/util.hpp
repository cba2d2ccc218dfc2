#ifndef CHERNFLOW_UTIL_HPP
#define CHERNFLOW_UTIL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace chernflow {

using cplx = std::complex<double>;

class ChernflowError : public std::runtime_error {
public:
  explicit ChernflowError(const std::string& what) : std::runtime_error(what) {}
};

class SingularMetricError : public ChernflowError {
public:
  explicit SingularMetricError(const std::string& what) : ChernflowError(what) {}
};

/// Applies the CHERNFLOW_THREADS cap (if set) to the OpenMP runtime.
/// Idempotent; called once by the CLI and the test mains.
void init_threads();

/// Sum of a complex array with a fixed chunk decomposition, so the result is
/// bit-identical regardless of thread count. Chunks are summed in parallel,
/// partials combined in chunk order.
cplx det_sum(const cplx* x, std::size_t count);
double det_sum(const double* x, std::size_t count);

/// Uniform double in [0,1) from the top 53 bits of the engine output.
/// std::uniform_real_distribution is implementation-defined; this mapping is
/// reproducible everywhere.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform in [-1,1).
inline double uniform_sym(std::mt19937_64& eng) { return 2.0 * uniform01(eng) - 1.0; }

std::string format_g17(double v);

}  // namespace chernflow

#endif
