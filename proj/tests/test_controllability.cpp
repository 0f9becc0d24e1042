#include <doctest.h>

#include <cmath>
#include <random>

#include "lapctl/controllability.hpp"
#include "lapctl/error.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/spectral.hpp"

using namespace lapctl;
using doctest::Approx;

TEST_CASE("control matrix validation") {
  CHECK_THROWS_AS(ControlMatrix(2, 1, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ControlMatrix(2, 1, {{2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ControlMatrix(2, 1, {{1}}), InvalidArgument);
  CHECK_THROWS_AS(ControlMatrix(2, 2, {{1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ControlMatrix::unit(3, 4), InvalidArgument);
  CHECK(ControlMatrix::single(3, {1, 3}).column(0) == std::vector<int>{1, 0, 1});
}

TEST_CASE("PBH") {
  const auto p3 = pbh_verdict(laplacian(gen_path(3)), ControlMatrix::unit(3, 2));
  CHECK_FALSE(p3.controllable);
  REQUIRE(p3.witness);
  const auto& w = *p3.witness;
  CHECK(w[0] == Approx(1.0 / std::sqrt(2.0)));
  CHECK(w[1] == Approx(0.0));
  CHECK(w[2] == Approx(-1.0 / std::sqrt(2.0)));

  CHECK(pbh_verdict(laplacian(gen_path(2)), ControlMatrix::unit(2, 1)).controllable);
  CHECK_FALSE(pbh_verdict(laplacian(gen_complete(3)), ControlMatrix::unit(3, 1)).controllable);
  CHECK_FALSE(pbh_verdict(laplacian(gen_cycle(5)), ControlMatrix::unit(5, 1)).controllable);
  // two inputs can control a repeated eigenvalue
  CHECK(pbh_verdict(laplacian(gen_complete(3)), ControlMatrix(3, 2, {{1, 0, 0}, {0, 1, 0}}))
            .controllable);
  CHECK_THROWS_AS(pbh_verdict(laplacian(gen_path(3)), ControlMatrix::unit(2, 1)),
                  InvalidArgument);
}

TEST_CASE("exact Kalman rank") {
  CHECK(kalman_rank_exact(laplacian(gen_path(2)), ControlMatrix::unit(2, 1)) == 2);
  CHECK(kalman_rank_exact(laplacian(gen_path(3)), ControlMatrix::unit(3, 2)) == 2);
  CHECK(kalman_rank_exact(laplacian(gen_complete(3)), ControlMatrix::unit(3, 1)) == 2);
  CHECK(kalman_rank_exact(laplacian(gen_path(1)), ControlMatrix::unit(1, 1)) == 1);
  const auto v = kalman_verdict(laplacian(gen_antiregular(5)), ControlMatrix::unit(5, 3));
  CHECK(v.controllable);
  CHECK(v.rank == 5u);
  CHECK(v.method == Method::ExactKalman);
  // long path: Krylov entries grow past 64 bits
  CHECK(kalman_rank_exact(laplacian(gen_path(40)), ControlMatrix::unit(40, 1)) == 40);
}

TEST_CASE("controllable vertices") {
  CHECK(controllable_vertices(gen_path(3)) == std::vector<Vertex>{1, 3});
  CHECK(controllable_vertices(gen_complete(3)).empty());
  CHECK(controllable_vertices(gen_antiregular(5)) == std::vector<Vertex>{3, 4});
  CHECK(controllable_vertices(gen_antiregular(4)) == std::vector<Vertex>{2, 3});
  CHECK(controllable_vertices(gen_path(5)) == std::vector<Vertex>{1, 2, 4, 5});
}

TEST_CASE("Gramian check") {
  const auto p2 = gramian_check(laplacian(gen_path(2)), ControlMatrix::unit(2, 1));
  CHECK(p2.controllable);
  CHECK(p2.min_eigenvalue > 0);

  const auto p3 = gramian_check(laplacian(gen_path(3)), ControlMatrix::unit(3, 2));
  CHECK_FALSE(p3.controllable);
  CHECK(p3.min_eigenvalue <= kGramianRelThreshold * p3.trace / 3);

  // L = [0]: W = T exactly
  const auto p1 = gramian_check(laplacian(gen_path(1)), ControlMatrix::unit(1, 1), 2.0);
  CHECK(p1.controllable);
  CHECK(p1.min_eigenvalue == Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(gramian_check(laplacian(gen_path(2)), ControlMatrix::unit(2, 1), 0.0),
                  InvalidArgument);
  CHECK_THROWS_AS(gramian_check(laplacian(gen_path(2)), ControlMatrix::unit(2, 1), 1.0, 8),
                  InvalidArgument);
}

TEST_CASE("decide picks the exact oracle for small graphs") {
  const auto d = decide(laplacian(gen_path(4)), ControlMatrix::unit(4, 1));
  CHECK(d.verdict.controllable);
  CHECK(d.verdict.method == Method::ExactKalman);
  const auto big = decide(laplacian(gen_path(70)), ControlMatrix::unit(70, 1));
  CHECK(big.verdict.method == Method::PBH);
}

TEST_CASE("methods agree on random instances") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const auto g = gen_random_connected(n, 0.5, rng);
    const auto b = ControlMatrix::unit(n, 1 + rng() % n);
    const auto l = laplacian(g);
    const bool exact = kalman_verdict(l, b).controllable;
    CHECK(pbh_verdict(l, b).controllable == exact);
    CHECK(gramian_verdict(l, b).controllable == exact);
  }
}

TEST_CASE("repeated eigenvalue blocks any single input") {
  for (std::size_t k : {3, 4, 5}) {
    for (Vertex v = 1; v <= k; ++v) {
      CHECK_FALSE(kalman_verdict(laplacian(gen_complete(k)), ControlMatrix::unit(k, v)).controllable);
      CHECK_FALSE(kalman_verdict(laplacian(gen_cycle(k + 1)), ControlMatrix::unit(k + 1, v)).controllable);
    }
  }
}
