#include "chernflow/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace chernflow {

SmallMat SmallMat::identity(int n) {
  SmallMat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

SmallMat SmallMat::zero(int n) {
  SmallMat m;
  m.n = n;
  return m;
}

SmallMat matmul(const SmallMat& x, const SmallMat& y) {
  SmallMat r = SmallMat::zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const cplx xik = x(i, k);
      if (xik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

SmallMat adjoint(const SmallMat& x) {
  SmallMat r = SmallMat::zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

double max_abs_diff(const SmallMat& x, const SmallMat& y) {
  double m = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

void hermitian_eigen(const SmallMat& h, std::array<double, kMaxDim>& vals, SmallMat* vecs) {
  const int n = h.n;
  SmallMat a = h;
  SmallMat v = SmallMat::identity(n);

  double scale2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale2 += std::norm(h(i, j));

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= 1e-30 * scale2 || off == 0.0) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Unitary rotation in the (p,q)-plane annihilating a(p,q).
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phase = apq / mag;  // e^{i arg(apq)}
        const cplx sp = s * phase;

        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - std::conj(sp) * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(sp) * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, kMaxDim> order{};
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.begin() + n,
            [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
  for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
  if (vecs != nullptr) {
    *vecs = SmallMat::zero(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) (*vecs)(i, j) = v(i, order[static_cast<std::size_t>(j)]);
  }
}

double hermitian_min_eigenvalue(const SmallMat& h) {
  std::array<double, kMaxDim> vals{};
  hermitian_eigen(h, vals, nullptr);
  return vals[0];
}

SmallMat hermitian_inverse(const SmallMat& h, double cond_limit) {
  const int n = h.n;
  std::array<double, kMaxDim> vals{};
  SmallMat vecs;
  hermitian_eigen(h, vals, &vecs);
  const double lmin = vals[0];
  const double lmax = vals[static_cast<std::size_t>(n - 1)];
  if (lmin <= 0.0) throw SingularMetricError("metric not positive-definite (min eigenvalue " + std::to_string(lmin) + ")");
  if (lmax / lmin > cond_limit) throw SingularMetricError("metric condition number above limit");

  SmallMat inv = SmallMat::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s(0.0, 0.0);
      for (int k = 0; k < n; ++k) s += vecs(i, k) * std::conj(vecs(j, k)) / vals[static_cast<std::size_t>(k)];
      inv(i, j) = s;
    }
  // Exact Hermitian symmetrization of the result.
  for (int i = 0; i < n; ++i) {
    inv(i, i) = cplx(inv(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (inv(i, j) + std::conj(inv(j, i)));
      inv(i, j) = m;
      inv(j, i) = std::conj(m);
    }
  }
  return inv;
}

bool cholesky_pd(const SmallMat& h) {
  const int n = h.n;
  SmallMat l = SmallMat::zero(n);
  for (int j = 0; j < n; ++j) {
    double d = h(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      cplx s = h(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

}  // namespace chernflow
