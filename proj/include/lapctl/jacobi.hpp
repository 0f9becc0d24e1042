#pragma once

// Jacobi rotation kernels for dense symmetric matrices.
//
// Two sweep orderings are provided:
//   jacobi_cyclic    serial row-cyclic order (p<q lexicographic). Kept as
//                    the reference implementation for tests and benchmarks.
//   jacobi_parallel  round-robin (tournament) order: each round is a set of
//                    n/2 disjoint pairs whose rotations commute, so the row
//                    and column updates of a round run as OpenMP loops over
//                    pairs. Every element is written by exactly one thread
//                    and the convergence norm is summed serially, so results
//                    are bitwise identical for any thread count.
//
// Both are templated on the scalar so the Gramian check can run them in
// extended precision.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lapctl/error.hpp"
#include "lapctl/matrix.hpp"

namespace lapctl::kernels {

struct JacobiOptions {
  double tol = 1e-12;     // stop when off-diagonal Frobenius <= tol * ||A||_F
  int max_sweeps = 100;
  std::size_t parallel_min_order = 64;  // below this the OpenMP loops run inline
};

template <typename Real>
struct JacobiResult {
  std::vector<Real> values;  // diagonal after convergence, unsorted
  Matrix<Real> vectors;      // column j pairs with values[j]
  int sweeps = 0;
};

namespace detail {

template <typename Real>
Real frobenius(const Matrix<Real>& a) {
  using std::sqrt;
  Real s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return sqrt(s);
}

template <typename Real>
Real off_diagonal(const Matrix<Real>& a) {
  using std::sqrt;
  Real s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return sqrt(s);
}

// (c, s) of the rotation annihilating a_pq.
template <typename Real>
std::pair<Real, Real> rotation(const Real& app, const Real& aqq,
                               const Real& apq) {
  using std::abs;
  using std::sqrt;
  if (apq == 0) return {Real(1), Real(0)};
  const Real theta = (aqq - app) / (2 * apq);
  Real t;
  if (abs(theta) > Real(1e100))
    t = 1 / (2 * theta);
  else
    t = 1 / (abs(theta) + sqrt(theta * theta + 1));
  if (theta < 0) t = -t;
  const Real c = 1 / sqrt(t * t + 1);
  return {c, t * c};
}

template <typename Real>
void rotate_rows(Matrix<Real>& a, std::size_t p, std::size_t q, const Real& c,
                 const Real& s) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Real apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
}

template <typename Real>
void rotate_cols(Matrix<Real>& a, std::size_t p, std::size_t q, const Real& c,
                 const Real& s) {
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const Real akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
}

template <typename Real>
void check_input(const Matrix<Real>& a) {
  if (!a.square()) throw InvalidArgument("jacobi: matrix is not square");
  if (!a.is_symmetric()) throw InvalidArgument("jacobi: matrix is not symmetric");
}

template <typename Real>
JacobiResult<Real> finish(Matrix<Real>& a, Matrix<Real>& v, int sweeps) {
  JacobiResult<Real> r;
  r.values.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) r.values[i] = a(i, i);
  r.vectors = std::move(v);
  r.sweeps = sweeps;
  return r;
}

}  // namespace detail

template <typename Real>
JacobiResult<Real> jacobi_cyclic(Matrix<Real> a, const JacobiOptions& opt = {}) {
  detail::check_input(a);
  const std::size_t n = a.rows();
  Matrix<Real> v = Matrix<Real>::identity(n);
  const Real limit = Real(opt.tol) * detail::frobenius(a);
  for (int sweep = 0; sweep <= opt.max_sweeps; ++sweep) {
    if (detail::off_diagonal(a) <= limit) return detail::finish(a, v, sweep);
    if (sweep == opt.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        const auto [c, s] = detail::rotation(a(p, p), a(q, q), a(p, q));
        detail::rotate_rows(a, p, q, c, s);
        detail::rotate_cols(a, p, q, c, s);
        detail::rotate_cols(v, p, q, c, s);
        a(p, q) = 0;
        a(q, p) = 0;
      }
    }
  }
  throw ConvergenceError("jacobi_cyclic: no convergence after " +
                         std::to_string(opt.max_sweeps) + " sweeps");
}

// Round-robin schedule on m (even) slots: m-1 rounds of m/2 pairs, every
// unordered pair exactly once. Slots >= n are padding and dropped.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
tournament_rounds(std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  if (n < 2) return rounds;
  const std::size_t m = n + (n % 2);
  std::vector<std::size_t> slot(m);
  std::iota(slot.begin(), slot.end(), std::size_t{0});
  for (std::size_t r = 0; r + 1 < m; ++r) {
    std::vector<std::pair<std::size_t, std::size_t>> round;
    for (std::size_t i = 0; i < m / 2; ++i) {
      std::size_t p = slot[i], q = slot[m - 1 - i];
      if (p >= n || q >= n) continue;
      if (p > q) std::swap(p, q);
      round.emplace_back(p, q);
    }
    rounds.push_back(std::move(round));
    // keep slot[0] fixed, rotate the rest by one
    const std::size_t last = slot[m - 1];
    for (std::size_t i = m - 1; i > 1; --i) slot[i] = slot[i - 1];
    slot[1] = last;
  }
  return rounds;
}

template <typename Real>
JacobiResult<Real> jacobi_parallel(Matrix<Real> a,
                                   const JacobiOptions& opt = {}) {
  detail::check_input(a);
  const std::size_t n = a.rows();
  Matrix<Real> v = Matrix<Real>::identity(n);
  const Real limit = Real(opt.tol) * detail::frobenius(a);
  const auto rounds = tournament_rounds(n);
  const bool par = n >= opt.parallel_min_order;
  std::vector<Real> cs, sn;

  for (int sweep = 0; sweep <= opt.max_sweeps; ++sweep) {
    if (detail::off_diagonal(a) <= limit) return detail::finish(a, v, sweep);
    if (sweep == opt.max_sweeps) break;
    for (const auto& round : rounds) {
      const long np = static_cast<long>(round.size());
      cs.assign(round.size(), Real(1));
      sn.assign(round.size(), Real(0));
#pragma omp parallel if (par)
      {
#pragma omp for schedule(static)
        for (long i = 0; i < np; ++i) {
          const auto [p, q] = round[i];
          std::tie(cs[i], sn[i]) = detail::rotation(a(p, p), a(q, q), a(p, q));
        }
#pragma omp for schedule(static)
        for (long i = 0; i < np; ++i) {
          const auto [p, q] = round[i];
          detail::rotate_rows(a, p, q, cs[i], sn[i]);
        }
#pragma omp for schedule(static)
        for (long i = 0; i < np; ++i) {
          const auto [p, q] = round[i];
          detail::rotate_cols(a, p, q, cs[i], sn[i]);
          detail::rotate_cols(v, p, q, cs[i], sn[i]);
        }
#pragma omp for schedule(static)
        for (long i = 0; i < np; ++i) {
          const auto [p, q] = round[i];
          a(p, q) = 0;
          a(q, p) = 0;
        }
      }
    }
  }
  throw ConvergenceError("jacobi_parallel: no convergence after " +
                         std::to_string(opt.max_sweeps) + " sweeps");
}

}  // namespace lapctl::kernels
