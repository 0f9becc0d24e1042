#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "lapctl/matrix.hpp"

namespace lapctl {

// Vertices are 1-indexed throughout the public API.
using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph on vertices 1..n. Edges are stored canonically
// (u < v) in sorted order, so two graphs compare equal iff they have the
// same labelled edge set.
class Graph {
 public:
  explicit Graph(std::size_t n, std::vector<Edge> edges = {});

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  // degrees()[v-1] is the degree of vertex v.
  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

// Nonincreasing sequence of nonnegative integers.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> d);

  std::size_t length() const { return d_.size(); }
  std::int64_t operator[](std::size_t i) const { return d_[i]; }
  std::span<const std::int64_t> values() const { return d_; }
  std::int64_t sum() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) =
      default;

 private:
  std::vector<std::int64_t> d_;
};

enum class ThresholdStep { Union, Join };

Graph gen_path(std::size_t k);
// Vertices ordered by nonincreasing degree: vertex 1 dominating, vertex k
// terminal, the repeated degree sits at ceil(k/2) and ceil(k/2)+1. Vertex
// i < j adjacent iff i + j <= k + 1. Downstream indexing relies on this.
Graph gen_antiregular(std::size_t k);
// Starts from a single vertex; step t adds vertex t+1 joined to all
// earlier vertices (Join) or to none (Union).
Graph gen_threshold(std::span<const ThresholdStep> creation);
Graph gen_complete(std::size_t k);
Graph gen_cycle(std::size_t k);
// Erdos-Renyi G(n, p) conditioned on connectivity (rejection sampling).
Graph gen_random_connected(std::size_t n, double p, std::mt19937_64& rng);

// Parses a creation string of 'U'/'J' characters (case-insensitive).
std::vector<ThresholdStep> parse_creation(std::string_view s);

DegreeSequence degree_sequence(const Graph& g);
DegreeSequence conjugate(const DegreeSequence& d);
std::int64_t trace_of(const DegreeSequence& d);
bool is_graphical(const DegreeSequence& d);
// True iff every inequality of the graphicality test is tight for j up to
// the trace (threshold-graph characterization).
bool is_threshold_sequence(const DegreeSequence& d);

IntMatrix laplacian(const Graph& g);
bool is_connected(const Graph& g);

// Relabels vertex v as perm[v-1].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace lapctl
