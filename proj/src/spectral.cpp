#include "lapctl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "lapctl/jacobi.hpp"

namespace lapctl {

double norm_inf(const RealMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double x : m.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double max_abs(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

bool is_zero_entry(std::span<const double> v, std::size_t i) {
  return std::abs(v[i]) <= kZeroEntryRel * max_abs(v);
}

double residual_inf(const RealMatrix& m, std::span<const double> v,
                    double lambda) {
  const auto mv = multiply(m, v);
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    r = std::max(r, std::abs(mv[i] - lambda * v[i]));
  return r;
}

namespace {

void normalize_sign(std::vector<double>& v) {
  const double top = max_abs(v);
  if (top == 0.0) return;
  // First entry within rounding of the max magnitude decides the sign.
  for (double x : v) {
    if (std::abs(x) >= top * (1.0 - 1e-12)) {
      if (x < 0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

void normalize_length(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s > 0)
    for (double& x : v) x /= s;
}

}  // namespace

EigDecomp eig_sym(const RealMatrix& m, double rtol, EigenKernel kernel) {
  if (!m.square()) throw InvalidArgument("eig_sym: matrix is not square");
  if (!m.is_symmetric()) throw InvalidArgument("eig_sym: matrix is not symmetric");
  if (!(rtol > 0)) throw InvalidArgument("eig_sym: rtol must be positive");

  const auto raw = kernel == EigenKernel::Parallel
                       ? kernels::jacobi_parallel(m)
                       : kernels::jacobi_cyclic(m);
  const std::size_t n = m.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw.values[a] < raw.values[b];
  });

  EigDecomp dec;
  dec.values.resize(n);
  dec.modal = RealMatrix(n, n);
  const double bound = rtol * norm_inf(m);
  for (std::size_t j = 0; j < n; ++j) {
    dec.values[j] = raw.values[order[j]];
    auto col = raw.vectors.column(order[j]);
    normalize_length(col);
    normalize_sign(col);
    const double res = residual_inf(m, col, dec.values[j]);
    if (res > bound)
      throw ConvergenceError("eig_sym: residual " + std::to_string(res) +
                             " exceeds bound for column " + std::to_string(j));
    dec.modal.set_column(j, col);
  }
  return dec;
}

EigDecomp eig_sym(const IntMatrix& m, double rtol, EigenKernel kernel) {
  return eig_sym(m.cast<double>(), rtol, kernel);
}

double default_grouping_tol(std::span<const double> values) {
  return 1e-7 * std::max(1.0, max_abs(values));
}

std::vector<Eigenspace> eigenspaces(const EigDecomp& dec, double gtol) {
  if (gtol <= 0) gtol = default_grouping_tol(dec.values);
  std::vector<Eigenspace> out;
  const std::size_t n = dec.values.size();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && dec.values[end] - dec.values[end - 1] <= gtol) ++end;

    Eigenspace es;
    double sum = 0.0;
    for (std::size_t j = start; j < end; ++j) {
      sum += dec.values[j];
      // modified Gram-Schmidt against the vectors already accepted
      auto v = dec.modal.column(j);
      for (const auto& b : es.basis) {
        const double d = std::inner_product(v.begin(), v.end(), b.begin(), 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * b[i];
      }
      normalize_length(v);
      es.basis.push_back(std::move(v));
    }
    es.value = sum / static_cast<double>(end - start);
    out.push_back(std::move(es));
    start = end;
  }
  return out;
}

std::vector<std::int64_t> antiregular_spectrum(std::size_t k) {
  if (k < 2) throw InvalidArgument("antiregular spectrum needs k >= 2");
  const auto skip = static_cast<std::int64_t>((k + 1) / 2);
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v <= static_cast<std::int64_t>(k); ++v)
    if (v != skip) out.push_back(v);
  return out;
}

IntMatrix antiregular_modal(std::size_t k) {
  if (k < 2) throw InvalidArgument("antiregular modal needs k >= 2");
  // T1: the Laplacian itself.
  IntMatrix t = laplacian(gen_antiregular(k));
  // T2: flip the strict upper triangle, t_ij -> -1 - t_ij.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) t(i, j) = -1 - t(i, j);
  // T3: diagonal entry becomes minus the off-diagonal column sum.
  for (std::size_t j = 0; j < k; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) s += t(i, j);
    t(j, j) = -s;
  }
  // T4: drop the unique zero column, append the all-ones column.
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < k; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < k && zero; ++i) zero = t(i, j) == 0;
    if (zero) zero_cols.push_back(j);
  }
  if (zero_cols.size() != 1)
    throw InternalError("antiregular_modal: expected exactly one zero column, found " +
                        std::to_string(zero_cols.size()) + " for k=" +
                        std::to_string(k));
  IntMatrix out(k, k);
  std::size_t dst = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == zero_cols.front()) continue;
    for (std::size_t i = 0; i < k; ++i) out(i, dst) = t(i, j);
    ++dst;
  }
  for (std::size_t i = 0; i < k; ++i) out(i, k - 1) = 1;
  return out;
}

namespace {

// cos(m * pi / (2k)), returning exact 0 and +-1 at the quarter points.
double cos_half_turns(std::size_t m, std::size_t k) {
  std::size_t r = m % (4 * k);
  if (r > 2 * k) r = 4 * k - r;
  double sign = 1.0;
  if (r > k) {
    r = 2 * k - r;
    sign = -1.0;
  }
  if (r == k) return 0.0;
  if (r == 0) return sign;
  return sign * std::cos(static_cast<double>(r) * std::numbers::pi /
                         (2.0 * static_cast<double>(k)));
}

}  // namespace

RealMatrix path_modal(std::size_t k) {
  if (k == 0) throw InvalidArgument("path modal needs k >= 1");
  RealMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(j, i) = cos_half_turns(i * (2 * j + 1), k);
  return out;
}

std::vector<double> path_spectrum(std::size_t k) {
  if (k == 0) throw InvalidArgument("path spectrum needs k >= 1");
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i)
    out[i] = 2.0 - 2.0 * cos_half_turns(2 * i, k);
  return out;
}

bool check_majorization(std::span<const double> ascending_values,
                        const DegreeSequence& dstar) {
  const std::size_t k = ascending_values.size();
  if (k != dstar.length())
    throw InvalidArgument("check_majorization: length mismatch");
  const double tol = 1e-8 * static_cast<double>(k);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t t = 0; t < k; ++t) {
    lhs += ascending_values[k - 1 - t];
    rhs += static_cast<double>(dstar[t]);
    if (lhs > rhs + tol) return false;
  }
  return true;
}

}  // namespace lapctl
