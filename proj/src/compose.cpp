#include "lapctl/compose.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lapctl {

void CompositeSpec::validate() const {
  if (!is_connected(structure)) throw InvalidArgument("structure graph is not connected");
  if (!is_connected(cell)) throw InvalidArgument("cell graph is not connected");
  if (s < 1 || s > cell.order())
    throw InvalidArgument("composite vertex s=" + std::to_string(s) +
                          " outside 1.." + std::to_string(cell.order()));
}

void ChainSpec::validate() const {
  if (c < 1) throw InvalidArgument("chain needs at least one block");
  if (k2 < 2) throw InvalidArgument("chain blocks need k2 >= 2");
  if (links.size() != c - 1)
    throw InvalidArgument("chain needs exactly c-1 links, got " +
                          std::to_string(links.size()));
  const Vertex a = attach_vertex();
  if (a < 1 || a > k2)
    throw InvalidArgument("tail_attach must be a block-1 vertex in 1.." +
                          std::to_string(k2));
}

Graph composite(const CompositeSpec& spec) {
  spec.validate();
  const std::size_t k1 = spec.structure.order(), k2 = spec.cell.order();
  std::vector<Edge> edges;
  for (std::size_t copy = 0; copy < k1; ++copy)
    for (const auto& e : spec.cell.edges())
      edges.push_back({copy * k2 + e.u, copy * k2 + e.v});
  for (const auto& e : spec.structure.edges())
    edges.push_back({spec.composite_vertex(e.u), spec.composite_vertex(e.v)});
  return Graph(k1 * k2, std::move(edges));
}

IntMatrix composite_laplacian_kron(const CompositeSpec& spec) {
  spec.validate();
  const std::size_t k1 = spec.structure.order(), k2 = spec.cell.order();
  IntMatrix ess(k2, k2, 0);
  ess(spec.s - 1, spec.s - 1) = 1;
  return kronecker(IntMatrix::identity(k1), laplacian(spec.cell)) +
         kronecker(laplacian(spec.structure), ess);
}

std::vector<EigenPair> composite_modal(const CompositeSpec& spec) {
  spec.validate();
  const std::size_t k1 = spec.structure.order(), k2 = spec.cell.order();
  const auto outer = eig_sym(laplacian(spec.structure));
  const RealMatrix cell = laplacian(spec.cell).cast<double>();

  std::vector<EigenPair> pairs;
  pairs.reserve(k1 * k2);
  for (std::size_t i = 0; i < k1; ++i) {
    RealMatrix shifted = cell;
    shifted(spec.s - 1, spec.s - 1) += outer.values[i];
    const auto inner = eig_sym(shifted);
    for (std::size_t j = 0; j < k2; ++j) {
      std::vector<double> v(k1 * k2);
      for (std::size_t a = 0; a < k1; ++a)
        for (std::size_t b = 0; b < k2; ++b)
          v[a * k2 + b] = outer.modal(a, i) * inner.modal(b, j);
      pairs.push_back({inner.values[j], std::move(v)});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& x, const EigenPair& y) { return x.value < y.value; });
  return pairs;
}

CompositePrediction predict_composite(const CompositeSpec& spec, Vertex w) {
  spec.validate();
  if (w < 1 || w > spec.structure.order())
    throw InvalidArgument("structure vertex w=" + std::to_string(w) + " out of range");
  const auto cell_l = laplacian(spec.cell);
  if (kalman_rank_exact(cell_l, ControlMatrix::unit(spec.cell.order(), spec.s)) !=
      spec.cell.order())
    throw HypothesisNotMet("cell graph is not controllable from composite vertex s=" +
                           std::to_string(spec.s));
  const auto structure_verdict = kalman_verdict(
      laplacian(spec.structure), ControlMatrix::unit(spec.structure.order(), w));
  return {structure_verdict.controllable, spec.composite_vertex(w), structure_verdict};
}

bool in_cj(std::size_t m, std::size_t j) {
  return j >= 1 && m >= j && (m - j) % (2 * j + 1) == 0;
}

std::optional<std::size_t> cj_index(std::size_t m) {
  for (std::size_t j = 1; j <= m; ++j)
    if (in_cj(m, j)) return j;
  return std::nullopt;
}

bool path_split_controllable(std::size_t k11, std::size_t k12) {
  const std::size_t hi = std::min(k11, k12);
  for (std::size_t j = 1; j <= hi; ++j)
    if (in_cj(k11, j) && in_cj(k12, j)) return false;
  return true;
}

namespace {

Vertex link_source(const ChainSpec& spec, std::size_t junction) {
  // junction is 1-based; source lives in block `junction`
  const std::size_t base = (junction - 1) * spec.k2;
  return spec.links[junction - 1] == Link::Dominating ? base + 1 : base + spec.k2;
}

Vertex link_target(const ChainSpec& spec, std::size_t junction) {
  return junction * spec.k2 + spec.kappa();
}

}  // namespace

Graph chain_antiregular(const ChainSpec& spec) {
  spec.validate();
  const Graph block = gen_antiregular(spec.k2);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.c; ++i)
    for (const auto& e : block.edges())
      edges.push_back({i * spec.k2 + e.u, i * spec.k2 + e.v});
  for (std::size_t j = 1; j < spec.c; ++j)
    edges.push_back({link_source(spec, j), link_target(spec, j)});
  Graph g(spec.block_order(), std::move(edges));
  return append_path(g, spec.attach_vertex(), spec.tail);
}

IntMatrix chain_laplacian_formula(const ChainSpec& spec) {
  spec.validate();
  IntMatrix l = kronecker(IntMatrix::identity(spec.c),
                          laplacian(gen_antiregular(spec.k2)));
  for (std::size_t j = 1; j < spec.c; ++j) {
    // z z^T with z = e_src - e_dst
    const std::size_t a = link_source(spec, j) - 1, b = link_target(spec, j) - 1;
    l(a, a) += 1;
    l(b, b) += 1;
    l(a, b) -= 1;
    l(b, a) -= 1;
  }
  return l;
}

bool valid_chain_input(const ChainSpec& spec, const std::vector<int>& b) {
  spec.validate();
  const std::size_t k2 = spec.k2;
  if (b.size() != spec.block_order() && b.size() != spec.block_order() + spec.tail)
    throw InvalidArgument("control vector length " + std::to_string(b.size()) +
                          " does not match chain order");
  for (int x : b)
    if (x != 0 && x != 1) throw InvalidArgument("control vector must be binary");
  for (std::size_t i = k2; i < b.size(); ++i)
    if (b[i] != 0)
      throw OutOfSupport("control vector is nonzero outside block 1 (index " +
                         std::to_string(i + 1) + ")");

  const bool terminal = spec.c > 1 && spec.links.front() == Link::Terminal;
  const std::size_t support = terminal ? k2 - 1 : k2;
  if (terminal && b[k2 - 1] != 0) return false;
  auto entry = [&](std::size_t i) { return i <= support ? b[i - 1] : 0; };
  return entry(spec.kappa()) + entry(spec.kappa() + 1) == 1;
}

Graph append_path(const Graph& g, Vertex v, std::size_t m) {
  if (v < 1 || v > g.order())
    throw InvalidArgument("append_path: vertex " + std::to_string(v) + " out of range");
  if (m == 0) return g;
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  edges.push_back({v, n + 1});
  for (std::size_t i = 1; i < m; ++i) edges.push_back({n + i, n + i + 1});
  return Graph(n + m, std::move(edges));
}

}  // namespace lapctl
