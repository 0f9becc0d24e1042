#include "lapctl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lapctl {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.u == e.v)
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n)
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} out of range 1.." +
                            std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgument("duplicate edge");
  edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u - 1];
    ++deg[e.v - 1];
  }
  return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u - 1].push_back(e.v);
    adj[e.v - 1].push_back(e.u);
  }
  return adj;
}

DegreeSequence::DegreeSequence(std::vector<std::int64_t> d) : d_(std::move(d)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 0) throw InvalidArgument("degree sequence has negative entry");
    if (i > 0 && d_[i] > d_[i - 1])
      throw InvalidArgument("degree sequence must be nonincreasing");
  }
}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(d_.begin(), d_.end(), std::int64_t{0});
}

Graph gen_path(std::size_t k) {
  if (k == 0) throw InvalidArgument("path needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.push_back({i, i + 1});
  return Graph(k, std::move(edges));
}

Graph gen_antiregular(std::size_t k) {
  if (k < 2) throw InvalidArgument("antiregular graph needs k >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i)
    for (Vertex j = i + 1; i + j <= k + 1; ++j) edges.push_back({i, j});
  return Graph(k, std::move(edges));
}

Graph gen_threshold(std::span<const ThresholdStep> creation) {
  if (creation.empty()) throw InvalidArgument("empty creation sequence");
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < creation.size(); ++t) {
    const Vertex added = t + 2;
    if (creation[t] == ThresholdStep::Join)
      for (Vertex u = 1; u < added; ++u) edges.push_back({u, added});
  }
  return Graph(creation.size() + 1, std::move(edges));
}

Graph gen_complete(std::size_t k) {
  if (k == 0) throw InvalidArgument("complete graph needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i)
    for (Vertex j = i + 1; j <= k; ++j) edges.push_back({i, j});
  return Graph(k, std::move(edges));
}

Graph gen_cycle(std::size_t k) {
  if (k < 3) throw InvalidArgument("cycle needs k >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, k});
  return Graph(k, std::move(edges));
}

Graph gen_random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  if (n == 0) throw InvalidArgument("random graph needs n >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("edge probability in (0,1]");
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j)
        if (coin(rng)) edges.push_back({i, j});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

std::vector<ThresholdStep> parse_creation(std::string_view s) {
  std::vector<ThresholdStep> out;
  for (char c : s) {
    if (c == 'J' || c == 'j')
      out.push_back(ThresholdStep::Join);
    else if (c == 'U' || c == 'u')
      out.push_back(ThresholdStep::Union);
    else
      throw InvalidArgument(std::string("bad creation step '") + c + "'");
  }
  return out;
}

DegreeSequence degree_sequence(const Graph& g) {
  auto deg = g.degrees();
  std::vector<std::int64_t> d(deg.begin(), deg.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSequence(std::move(d));
}

DegreeSequence conjugate(const DegreeSequence& d) {
  const std::size_t k = d.length();
  std::vector<std::int64_t> star(k, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    std::int64_t count = 0;
    for (auto dj : d.values())
      if (dj >= static_cast<std::int64_t>(i)) ++count;
    star[i - 1] = count;
  }
  return DegreeSequence(std::move(star));
}

std::int64_t trace_of(const DegreeSequence& d) {
  std::int64_t t = 0;
  for (std::size_t j = 1; j <= d.length(); ++j)
    if (d[j - 1] >= static_cast<std::int64_t>(j)) ++t;
  return t;
}

namespace {

// Slack of the j-th graphicality inequality: sum d*_i - sum (d_i + 1).
std::vector<std::int64_t> graphical_slacks(const DegreeSequence& d) {
  const auto star = conjugate(d);
  const auto tau = trace_of(d);
  std::vector<std::int64_t> slack;
  std::int64_t lhs = 0, rhs = 0;
  for (std::int64_t j = 1; j <= tau; ++j) {
    lhs += d[j - 1] + 1;
    rhs += star[j - 1];
    slack.push_back(rhs - lhs);
  }
  return slack;
}

}  // namespace

bool is_graphical(const DegreeSequence& d) {
  if (d.sum() % 2 != 0) return false;
  const auto slack = graphical_slacks(d);
  return std::all_of(slack.begin(), slack.end(),
                     [](std::int64_t s) { return s >= 0; });
}

bool is_threshold_sequence(const DegreeSequence& d) {
  const auto slack = graphical_slacks(d);
  return std::all_of(slack.begin(), slack.end(),
                     [](std::int64_t s) { return s == 0; });
}

IntMatrix laplacian(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix l(n, n, 0);
  for (const auto& e : g.edges()) {
    l(e.u - 1, e.v - 1) = -1;
    l(e.v - 1, e.u - 1) = -1;
    ++l(e.u - 1, e.u - 1);
    ++l(e.v - 1, e.v - 1);
  }
  return l;
}

bool is_connected(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw InvalidArgument("relabel: size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 1 || p > perm.size() || hit[p - 1])
      throw InvalidArgument("relabel: not a permutation");
    hit[p - 1] = 1;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return Graph(g.order(), std::move(edges));
}

}  // namespace lapctl
