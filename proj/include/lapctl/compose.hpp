#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lapctl/controllability.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/spectral.hpp"

namespace lapctl {

// k1 copies of `cell` joined through their vertex s so that the copies'
// s-vertices form `structure`. Layout is copy-major: copy i (1-based)
// occupies vertices (i-1)*k2+1 .. i*k2, which makes
//   L = I_{k1} (x) L_cell + L_structure (x) e_s e_s^T
// hold without permutation.
struct CompositeSpec {
  Graph structure;
  Graph cell;
  Vertex s;

  void validate() const;
  std::size_t composite_vertex(Vertex w) const {
    return (w - 1) * cell.order() + s;
  }
};

enum class Link { Dominating, Terminal };

// c copies of AR(k2) in a row. Junction i links block i's vertex 1
// (Dominating) or vertex k2 (Terminal) to block i+1's vertex ceil(k2/2).
// A tail path of `tail` vertices hangs off block-1 vertex `tail_attach`.
struct ChainSpec {
  std::size_t c = 1;
  std::size_t k2 = 2;
  std::vector<Link> links;
  std::size_t tail = 0;
  std::optional<Vertex> tail_attach;  // defaults to ceil(k2/2)

  void validate() const;
  std::size_t kappa() const { return (k2 + 1) / 2; }
  Vertex attach_vertex() const { return tail_attach.value_or(kappa()); }
  std::size_t block_order() const { return c * k2; }
};

Graph composite(const CompositeSpec& spec);
IntMatrix composite_laplacian_kron(const CompositeSpec& spec);

struct EigenPair {
  double value;
  std::vector<double> vector;
};

// Eigenpairs of the composite assembled per structure eigenpair
// (lambda_i, v_i): diagonalize L_cell + lambda_i e_s e_s^T to U_i, then the
// columns of v_i (x) U_i. Sorted by value.
std::vector<EigenPair> composite_modal(const CompositeSpec& spec);

struct CompositePrediction {
  bool controllable;
  Vertex input_vertex;      // (w-1)*k2 + s in the composite
  Verdict structure_verdict;
};

// Controllability of the composite from copy w's composite vertex, predicted
// from the structure graph alone. Throws HypothesisNotMet unless the cell is
// controllable from s (checked with the exact oracle).
CompositePrediction predict_composite(const CompositeSpec& spec, Vertex w);

// Smallest j >= 1 with m in C_j = {j, j + (2j+1), j + 2(2j+1), ...}.
// m belongs to C_j exactly when (2j+1) divides (2m+1), so m can lie in
// several classes; this returns the smallest. None for m = 0.
std::optional<std::size_t> cj_index(std::size_t m);
bool in_cj(std::size_t m, std::size_t j);

// A path split by the input vertex into sides of k11 and k12 vertices is
// controllable iff no C_j contains both.
bool path_split_controllable(std::size_t k11, std::size_t k12);

Graph chain_antiregular(const ChainSpec& spec);
// Laplacian of the block part from I (x) L_AR + sum z_i z_i^T.
IntMatrix chain_laplacian_formula(const ChainSpec& spec);

// Closed-form verdict for an input supported on block 1 of the chain:
// entries ceil(k2/2) and ceil(k2/2)+1 of the block-1 part must sum to 1.
// A Terminal first junction shortens the block-1 part to k2-1 entries and
// requires entry k2 to be 0. References past the support read as 0.
// Throws OutOfSupport if b is nonzero outside block 1.
bool valid_chain_input(const ChainSpec& spec, const std::vector<int>& b);

// Attaches an m-vertex path to v. New vertices are |g|+1 .. |g|+m with
// |g|+1 adjacent to v and |g|+m the far end.
Graph append_path(const Graph& g, Vertex v, std::size_t m);

}  // namespace lapctl
