#include <doctest.h>

#include <cmath>

#include "lapctl/compose.hpp"
#include "lapctl/controllability.hpp"
#include "lapctl/error.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/spectral.hpp"

using namespace lapctl;
using doctest::Approx;

TEST_CASE("composite construction") {
  const CompositeSpec p2p2{gen_path(2), gen_path(2), 1};
  const auto g = composite(p2p2);
  CHECK(g == Graph(4, {{1, 2}, {3, 4}, {1, 3}}));
  CHECK(laplacian(g) == IntMatrix(4, 4, std::vector<std::int64_t>{2, -1, -1, 0, -1, 1, 0, 0,
                                                                   -1, 0, 2, -1, 0, 0, -1, 1}));
  CHECK(laplacian(g) == composite_laplacian_kron(p2p2));

  const CompositeSpec fig{gen_antiregular(7), gen_antiregular(5), 3};
  CHECK(composite(fig).order() == 35);
  CHECK(laplacian(composite(fig)) == composite_laplacian_kron(fig));
  CHECK(fig.composite_vertex(4) == 18);

  CHECK(composite({gen_path(1), gen_antiregular(4), 2}) == gen_antiregular(4));
  CHECK_THROWS_AS(composite({gen_path(2), gen_path(2), 3}), InvalidArgument);
}

TEST_CASE("composite modal matches direct decomposition") {
  for (const CompositeSpec& spec : {CompositeSpec{gen_path(2), gen_path(2), 1},
                                    CompositeSpec{gen_path(2), gen_antiregular(5), 3},
                                    CompositeSpec{gen_path(1), gen_antiregular(4), 1}}) {
    const auto l = composite_laplacian_kron(spec).cast<double>();
    const auto pairs = composite_modal(spec);
    const auto direct = eig_sym(l);
    REQUIRE(pairs.size() == l.rows());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      CHECK(pairs[i].value == Approx(direct.values[i]).epsilon(1e-9));
      CHECK(residual_inf(l, pairs[i].vector, pairs[i].value) < 1e-8);
      for (std::size_t j = 0; j < i; ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < l.rows(); ++k) dot += pairs[i].vector[k] * pairs[j].vector[k];
        CHECK(std::abs(dot) < 1e-8);
      }
    }
  }
}

TEST_CASE("composite prediction") {
  const auto a = predict_composite({gen_path(2), gen_path(2), 1}, 1);
  CHECK(a.controllable);
  CHECK(a.input_vertex == 1);
  const auto fig = predict_composite({gen_antiregular(7), gen_antiregular(5), 3}, 4);
  CHECK(fig.controllable);
  CHECK(fig.input_vertex == 18);
  CHECK_FALSE(predict_composite({gen_path(3), gen_path(2), 1}, 2).controllable);
  CHECK_THROWS_AS(predict_composite({gen_path(2), gen_complete(3), 1}, 1), HypothesisNotMet);
  CHECK_THROWS_AS(predict_composite({gen_path(2), gen_path(3), 2}, 1), HypothesisNotMet);
}

TEST_CASE("C_j classes") {
  CHECK(cj_index(4) == 1u);
  CHECK(cj_index(2) == 2u);
  CHECK_FALSE(cj_index(0));
  CHECK(in_cj(7, 1));
  CHECK(in_cj(7, 2));
  CHECK_FALSE(in_cj(3, 1));
  CHECK_FALSE(path_split_controllable(1, 4));
  CHECK_FALSE(path_split_controllable(2, 2));
  for (std::size_t k = 0; k <= 20; ++k) CHECK(path_split_controllable(0, k));
}

TEST_CASE("antiregular chain") {
  ChainSpec tt;
  tt.c = 3;
  tt.k2 = 2;
  tt.links = {Link::Terminal, Link::Terminal};
  CHECK(chain_antiregular(tt) == gen_path(6));

  ChainSpec d;
  d.c = 2;
  d.k2 = 5;
  d.links = {Link::Dominating};
  const auto g = chain_antiregular(d);
  CHECK(g.order() == 10);
  CHECK(g.has_edge(1, 8));
  CHECK(g.size() == 13);
  CHECK(laplacian(g) == chain_laplacian_formula(d));

  ChainSpec one;
  one.c = 1;
  one.k2 = 5;
  CHECK(chain_antiregular(one) == gen_antiregular(5));

  ChainSpec bad = d;
  bad.links = {};
  CHECK_THROWS_AS(chain_antiregular(bad), InvalidArgument);
}

TEST_CASE("chain input condition") {
  ChainSpec d;
  d.c = 2;
  d.k2 = 5;
  d.links = {Link::Dominating};
  auto e = [](std::initializer_list<std::size_t> vs) {
    std::vector<int> b(10, 0);
    for (auto v : vs) b[v - 1] = 1;
    return b;
  };
  CHECK(valid_chain_input(d, e({3})));
  CHECK_FALSE(valid_chain_input(d, e({3, 4})));
  CHECK_THROWS_AS(valid_chain_input(d, e({3, 7})), OutOfSupport);

  ChainSpec t = d;
  t.links = {Link::Terminal};
  CHECK(valid_chain_input(t, e({4})));
  CHECK(kalman_verdict(laplacian(chain_antiregular(t)), ControlMatrix::from_vector(e({4})))
            .controllable);
}

TEST_CASE("append path") {
  const auto g = append_path(gen_antiregular(5), 3, 4);
  CHECK(g.order() == 9);
  CHECK(g.has_edge(3, 6));
  CHECK(g.has_edge(8, 9));
  CHECK(append_path(gen_antiregular(4), 2, 0) == gen_antiregular(4));
  CHECK(append_path(gen_path(1), 1, 3) == gen_path(4));
}

TEST_CASE("all-terminal chains of P2 blocks are paths") {
  for (std::size_t c = 1; c <= 6; ++c) {
    ChainSpec spec;
    spec.c = c;
    spec.k2 = 2;
    spec.links.assign(c - 1, Link::Terminal);
    const auto g = chain_antiregular(spec);
    CHECK(g == gen_path(2 * c));
    for (Vertex v = 1; v <= 2 * c; ++v)
      CHECK(kalman_verdict(laplacian(g), ControlMatrix::unit(2 * c, v)).controllable ==
            path_split_controllable(v - 1, 2 * c - v));
  }
}
