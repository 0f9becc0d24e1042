#include "lapctl/controllability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "lapctl/jacobi.hpp"
#include "lapctl/spectral.hpp"

namespace lapctl {

using BigInt = boost::multiprecision::cpp_int;
using WideReal = boost::multiprecision::cpp_bin_float_100;

ControlMatrix::ControlMatrix(std::size_t n, std::size_t p,
                             std::vector<std::vector<int>> columns)
    : n_(n), columns_(std::move(columns)) {
  if (n == 0) throw InvalidArgument("control matrix needs n >= 1");
  if (p == 0 || columns_.size() != p)
    throw InvalidArgument("control matrix column count mismatch");
  bool any = false;
  for (const auto& col : columns_) {
    if (col.size() != n) throw InvalidArgument("control column has wrong length");
    for (int x : col) {
      if (x != 0 && x != 1) throw InvalidArgument("control entries must be 0 or 1");
      any = any || x == 1;
    }
  }
  if (!any) throw InvalidArgument("control matrix has no nonzero entry");
}

ControlMatrix ControlMatrix::unit(std::size_t n, Vertex v) {
  return single(n, {v});
}

ControlMatrix ControlMatrix::single(std::size_t n,
                                    const std::vector<Vertex>& vertices) {
  std::vector<int> col(n, 0);
  for (Vertex v : vertices) {
    if (v < 1 || v > n)
      throw InvalidArgument("input vertex " + std::to_string(v) + " out of range");
    col[v - 1] = 1;
  }
  return ControlMatrix(n, 1, {std::move(col)});
}

ControlMatrix ControlMatrix::from_vector(const std::vector<int>& b) {
  return ControlMatrix(b.size(), 1, {b});
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::PBH: return "PBH";
    case Method::ExactKalman: return "ExactKalman";
    case Method::Gramian: return "Gramian";
  }
  return "?";
}

namespace {

void check_dims(std::size_t order, const ControlMatrix& b) {
  if (b.n() != order)
    throw InvalidArgument("dimension mismatch: L has order " +
                          std::to_string(order) + ", B has " +
                          std::to_string(b.n()) + " rows");
}

}  // namespace

Verdict pbh_verdict(const RealMatrix& l, const ControlMatrix& b, double tol) {
  if (!l.square()) throw InvalidArgument("pbh_verdict: L is not square");
  check_dims(l.rows(), b);
  const auto spaces = eigenspaces(eig_sym(l));
  const std::size_t n = l.rows(), p = b.p();

  for (const auto& es : spaces) {
    const std::size_t m = es.multiplicity();
    // C = Q^T B restricted to this eigenspace; a witness is Q y with C^T y = 0.
    RealMatrix c(m, p);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        double d = 0.0;
        for (std::size_t r = 0; r < n; ++r) d += es.basis[i][r] * b.column(j)[r];
        c(i, j) = d;
      }
    RealMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = i; k < m; ++k) {
        double d = 0.0;
        for (std::size_t j = 0; j < p; ++j) d += c(i, j) * c(k, j);
        gram(i, k) = gram(k, i) = d;
      }
    const auto inner = eig_sym(gram);
    const bool multiple_single_input = p == 1 && m >= 2;
    const double smallest = std::sqrt(std::max(inner.values.front(), 0.0));
    if (!multiple_single_input && smallest > tol) continue;

    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < n; ++r) w[r] += inner.modal(i, 0) * es.basis[i][r];
    const double top = max_abs(w);
    for (double x : w)
      if (std::abs(x) >= top * (1.0 - 1e-12)) {
        if (x < 0)
          for (double& y : w) y = -y;
        break;
      }
    return Verdict{false, Method::PBH, std::move(w), std::nullopt};
  }
  return Verdict{true, Method::PBH, std::nullopt, std::nullopt};
}

Verdict pbh_verdict(const IntMatrix& l, const ControlMatrix& b, double tol) {
  return pbh_verdict(l.cast<double>(), b, tol);
}

namespace {

// Row-echelon basis grown one vector at a time by fraction-free (Bareiss)
// elimination. Stored rows are kept in the state they had when they became
// pivots, so every later division by the previous pivot is exact.
class BareissBasis {
 public:
  explicit BareissBasis(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns true iff v is independent of the stored rows.
  bool insert(std::vector<BigInt> v) {
    BigInt prev = 1;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const auto& piv_row = rows_[t];
      const BigInt& piv = pivots_[t];
      const BigInt factor = v[cols_[t]];
      for (std::size_t j = 0; j < width_; ++j) {
        BigInt num = piv * v[j] - factor * piv_row[j];
        BigInt q, r;
        boost::multiprecision::divide_qr(num, prev, q, r);
        if (r != 0) throw InternalError("Bareiss step left a remainder");
        v[j] = std::move(q);
      }
      prev = piv;
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
    if (it == v.end()) return false;
    const auto col = static_cast<std::size_t>(it - v.begin());
    cols_.push_back(col);
    pivots_.push_back(v[col]);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  std::size_t width_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::size_t> cols_;
  std::vector<BigInt> pivots_;
};

std::vector<BigInt> times(const IntMatrix& l, const std::vector<BigInt>& x) {
  std::vector<BigInt> y(x.size());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < l.cols(); ++j)
      if (l(i, j) != 0) acc += l(i, j) * x[j];
    y[i] = std::move(acc);
  }
  return y;
}

}  // namespace

std::size_t kalman_rank_exact(const IntMatrix& l, const ControlMatrix& b) {
  if (!l.square()) throw InvalidArgument("kalman_rank_exact: L is not square");
  check_dims(l.rows(), b);
  const std::size_t n = l.rows();
  BareissBasis basis(n);

  std::vector<std::vector<BigInt>> block;
  for (std::size_t j = 0; j < b.p(); ++j) {
    const auto& col = b.column(j);
    block.emplace_back(col.begin(), col.end());
  }
  for (std::size_t power = 0; power < n && basis.rank() < n; ++power) {
    bool grew = false;
    for (const auto& x : block) grew = basis.insert(x) || grew;
    // The Krylov span is L-invariant once a whole block adds nothing.
    if (!grew) break;
    for (auto& x : block) x = times(l, x);
  }
  return basis.rank();
}

Verdict kalman_verdict(const IntMatrix& l, const ControlMatrix& b) {
  const auto r = kalman_rank_exact(l, b);
  return Verdict{r == l.rows(), Method::ExactKalman, std::nullopt, r};
}

GramianResult gramian_check(const IntMatrix& l, const ControlMatrix& b,
                            double horizon, int steps) {
  if (!l.square()) throw InvalidArgument("gramian_check: L is not square");
  check_dims(l.rows(), b);
  if (!(horizon > 0)) throw InvalidArgument("gramian_check: horizon must be positive");
  if (steps < 16) throw InvalidArgument("gramian_check: steps must be >= 16");
  const std::size_t n = l.rows();

  kernels::JacobiOptions wide;
  wide.tol = 1e-90;
  const auto modes = kernels::jacobi_cyclic(l.cast<WideReal>(), wide);

  // Input directions in the modal basis: C = V^T B.
  Matrix<WideReal> c(n, b.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.p(); ++j) {
      WideReal d = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (b.column(j)[r]) d += modes.vectors(r, i);
      c(i, j) = d;
    }

  // Simpson needs an even interval count and at least n nodes to span the
  // reachable subspace.
  std::size_t intervals = std::max<std::size_t>(static_cast<std::size_t>(steps), n);
  intervals += intervals % 2;
  const WideReal h = WideReal(horizon) / intervals;

  Matrix<WideReal> w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      WideReal cc = 0;
      for (std::size_t j = 0; j < b.p(); ++j) cc += c(i, j) * c(k, j);
      const WideReal rate = modes.values[i] + modes.values[k];
      WideReal integral = 0;
      for (std::size_t t = 0; t <= intervals; ++t) {
        const int weight = (t == 0 || t == intervals) ? 1 : (t % 2 ? 4 : 2);
        integral += weight * exp(-rate * (h * t));
      }
      w(i, k) = w(k, i) = cc * integral * h / 3;
    }

  const auto gram = kernels::jacobi_cyclic(w, wide);
  WideReal smallest = *std::min_element(gram.values.begin(), gram.values.end());
  WideReal trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += w(i, i);

  GramianResult out;
  out.min_eigenvalue = static_cast<double>(smallest);
  out.trace = static_cast<double>(trace);
  out.controllable = smallest > WideReal(kGramianRelThreshold) * trace / n;
  return out;
}

Verdict gramian_verdict(const IntMatrix& l, const ControlMatrix& b,
                        double horizon, int steps) {
  const auto g = gramian_check(l, b, horizon, steps);
  return Verdict{g.controllable, Method::Gramian, std::nullopt, std::nullopt};
}

Decision decide(const IntMatrix& l, const ControlMatrix& b) {
  if (l.rows() <= kExactOracleMaxOrder) return Decision{kalman_verdict(l, b), false};

  Decision d{pbh_verdict(l, b), false};
  const auto dec = eig_sym(l);
  const double gtol = default_grouping_tol(dec.values);
  for (std::size_t j = 1; j < dec.values.size(); ++j) {
    const double gap = dec.values[j] - dec.values[j - 1];
    if (gap > gtol && gap <= 10 * gtol) d.near_degenerate = true;
  }
  return d;
}

std::vector<Vertex> controllable_vertices(const Graph& g) {
  const auto l = laplacian(g);
  const long n = static_cast<long>(g.order());
  std::vector<char> hit(g.order(), 0);
#pragma omp parallel for schedule(dynamic)
  for (long v = 1; v <= n; ++v)
    hit[v - 1] = kalman_rank_exact(l, ControlMatrix::unit(g.order(), v)) == g.order();
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (hit[v - 1]) out.push_back(v);
  return out;
}

}  // namespace lapctl
