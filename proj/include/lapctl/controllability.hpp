#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapctl/graph.hpp"
#include "lapctl/matrix.hpp"

namespace lapctl {

// Binary n x p input matrix B of the consensus system x' = -L x + B u.
class ControlMatrix {
 public:
  ControlMatrix(std::size_t n, std::size_t p, std::vector<std::vector<int>> columns);

  // Single input attached to vertex v (1-indexed).
  static ControlMatrix unit(std::size_t n, Vertex v);
  // Single input attached to every listed vertex.
  static ControlMatrix single(std::size_t n, const std::vector<Vertex>& vertices);
  // Single input from a 0/1 vector.
  static ControlMatrix from_vector(const std::vector<int>& b);

  std::size_t n() const { return n_; }
  std::size_t p() const { return columns_.size(); }
  const std::vector<int>& column(std::size_t j) const { return columns_[j]; }

 private:
  std::size_t n_;
  std::vector<std::vector<int>> columns_;
};

enum class Method { PBH, ExactKalman, Gramian };

std::string_view to_string(Method m);

struct Verdict {
  bool controllable = false;
  Method method = Method::PBH;
  // Unit eigenvector orthogonal to every column of B; PBH only.
  std::optional<std::vector<double>> witness;
  std::optional<std::size_t> rank;  // ExactKalman only
};

inline constexpr double kDefaultPbhTol = 1e-8;

// Popov-Belevitch-Hautus test: uncontrollable iff some eigenvector of L is
// orthogonal to the column space of B. With p = 1 any eigenspace of
// dimension >= 2 is decided uncontrollable without projection.
Verdict pbh_verdict(const RealMatrix& l, const ControlMatrix& b,
                    double tol = kDefaultPbhTol);
Verdict pbh_verdict(const IntMatrix& l, const ControlMatrix& b,
                    double tol = kDefaultPbhTol);

// Rank of [B, LB, ..., L^{n-1}B] over the rationals, by fraction-free
// elimination on arbitrary-precision integers.
std::size_t kalman_rank_exact(const IntMatrix& l, const ControlMatrix& b);
Verdict kalman_verdict(const IntMatrix& l, const ControlMatrix& b);

struct GramianResult {
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  bool controllable = false;
};

// Finite-horizon Gramian W = int_0^T e^{-Lt} B B^T e^{-Lt} dt by composite
// Simpson quadrature, evaluated in 100-digit arithmetic. Controllable iff
// min eig(W) > kGramianRelThreshold * trace(W) / n.
inline constexpr double kGramianRelThreshold = 1e-50;
GramianResult gramian_check(const IntMatrix& l, const ControlMatrix& b,
                            double horizon = 1.0, int steps = 64);
Verdict gramian_verdict(const IntMatrix& l, const ControlMatrix& b,
                        double horizon = 1.0, int steps = 64);

struct Decision {
  Verdict verdict;
  // Set when the float PBH route ran and two eigenvalues sit within 10x of
  // the grouping tolerance.
  bool near_degenerate = false;
};

inline constexpr std::size_t kExactOracleMaxOrder = 64;

// Exact Kalman up to kExactOracleMaxOrder vertices, float PBH above.
Decision decide(const IntMatrix& l, const ControlMatrix& b);

// { v : (L, e_v) controllable } by the exact oracle, ascending.
std::vector<Vertex> controllable_vertices(const Graph& g);

}  // namespace lapctl
