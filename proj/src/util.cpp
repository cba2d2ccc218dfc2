#include "chernflow/util.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace chernflow {

void init_threads() {
  static bool done = false;
  if (done) return;
  done = true;
  const char* env = std::getenv("CHERNFLOW_THREADS");
  if (env != nullptr) {
    int cap = std::atoi(env);
    if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
  }
}

namespace {
constexpr std::size_t kChunk = 4096;
}

cplx det_sum(const cplx* x, std::size_t count) {
  const std::size_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<cplx> partial(nchunks, cplx(0.0, 0.0));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(lo + kChunk, count);
    cplx s(0.0, 0.0);
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    partial[static_cast<std::size_t>(c)] = s;
  }
  cplx total(0.0, 0.0);
  for (const cplx& p : partial) total += p;
  return total;
}

double det_sum(const double* x, std::size_t count) {
  const std::size_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(lo + kChunk, count);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace chernflow
