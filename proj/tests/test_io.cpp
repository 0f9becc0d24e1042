#include <doctest.h>

#include <algorithm>
#include <random>

#include "lapctl/compose.hpp"
#include "lapctl/error.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/io.hpp"
#include "lapctl/spectral.hpp"

using namespace lapctl;

TEST_CASE("graph JSON") {
  CHECK(io::to_json(gen_path(1)).dump() == R"({"n":1,"edges":[]})");
  CHECK(io::to_json(gen_path(3)).dump() == R"({"n":3,"edges":[[1,2],[2,3]]})");
  CHECK(io::graph_from_json(io::Json::parse(R"({"n":3,"edges":[[2,1],[3,2]]})")) == gen_path(3));
  CHECK_THROWS_AS(io::graph_from_json(io::Json::parse(R"({"n":3})")), InvalidArgument);
  CHECK_THROWS_AS(io::graph_from_json(io::Json::parse(R"({"n":2,"edges":[[1,1]]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::graph_from_json(io::Json::parse(R"({"n":"x","edges":[]})")),
                  InvalidArgument);
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    const auto g = gen_random_connected(2 + i % 9, 0.4, rng);
    CHECK(io::graph_from_json(io::Json::parse(io::to_json(g).dump())) == g);
  }
  ChainSpec c;
  c.c = 3;
  c.k2 = 4;
  c.links = {Link::Dominating, Link::Terminal};
  c.tail = 2;
  const auto back = io::chain_spec_from_json(io::to_json(c));
  CHECK(chain_antiregular(back) == chain_antiregular(c));
  const CompositeSpec s{gen_path(2), gen_antiregular(5), 3};
  CHECK(composite(io::composite_spec_from_json(io::to_json(s))) == composite(s));
}

TEST_CASE("DOT export") {
  CHECK(io::to_dot(gen_path(2)) == "graph { 1 -- 2; }");
  CHECK(io::to_dot(Graph(2)) == "graph { 1; 2; }");
  const auto ar4 = io::to_dot(gen_antiregular(4));
  CHECK(std::count(ar4.begin(), ar4.end(), '-') == 8);
  const auto p2p2 = io::to_dot(composite({gen_path(2), gen_path(2), 1}));
  CHECK(std::count(p2p2.begin(), p2p2.end(), '-') == 6);
}

TEST_CASE("verdict and decomposition JSON") {
  Verdict v;
  v.controllable = true;
  v.method = Method::ExactKalman;
  v.rank = 3;
  CHECK(io::to_json(v).dump() ==
        R"({"controllable":true,"method":"ExactKalman","witness":null,"rank":3})");
  const auto j = io::to_json(eig_sym(laplacian(gen_path(2))));
  CHECK(j["values"].size() == 2);
  CHECK(j["modal"].size() == 2);
}
