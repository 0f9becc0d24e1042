#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "lapctl/error.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/jacobi.hpp"
#include "lapctl/spectral.hpp"

using namespace lapctl;
using doctest::Approx;

namespace {

RealMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("serial and parallel Jacobi agree") {
  std::mt19937_64 rng(11);
  kernels::JacobiOptions forced;
  forced.parallel_min_order = 1;  // exercise the OpenMP path on small inputs
  for (std::size_t n : {1, 2, 3, 7, 16, 33}) {
    const auto m = random_symmetric(n, rng);
    const auto a = kernels::jacobi_cyclic(m);
    const auto b = kernels::jacobi_parallel(m, forced);
    const auto c = kernels::jacobi_parallel(m);
    const auto va = sorted(a.values), vb = sorted(b.values), vc = sorted(c.values);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(va[i] == Approx(vb[i]).epsilon(1e-10));
      CHECK(vb[i] == vc[i]);  // inline and threaded loops give identical bits
    }
    // V^T V = I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < n; ++k) dot += b.vectors(k, i) * b.vectors(k, j);
        CHECK(dot == Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
      }
  }
}

TEST_CASE("tournament rounds cover every pair once") {
  for (std::size_t n : {2, 3, 4, 5, 8, 9}) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& round : kernels::tournament_rounds(n)) {
      std::set<std::size_t> used;
      for (auto [p, q] : round) {
        CHECK(p < q);
        CHECK(used.insert(p).second);
        CHECK(used.insert(q).second);
        CHECK(seen.insert({p, q}).second);
      }
    }
    CHECK(seen.size() == n * (n - 1) / 2);
  }
}

TEST_CASE("Jacobi rejects asymmetric input and hits the sweep cap") {
  RealMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(kernels::jacobi_cyclic(m), InvalidArgument);
  CHECK_THROWS_AS(eig_sym(m), InvalidArgument);
  std::mt19937_64 rng(3);
  kernels::JacobiOptions tight;
  tight.max_sweeps = 1;
  tight.tol = 1e-300;
  CHECK_THROWS_AS(kernels::jacobi_cyclic(random_symmetric(6, rng), tight), ConvergenceError);
  CHECK_THROWS_AS(kernels::jacobi_parallel(random_symmetric(6, rng), tight), ConvergenceError);
}

TEST_CASE("eig_sym on small Laplacians") {
  const auto p2 = eig_sym(laplacian(gen_path(2)));
  CHECK(p2.values[0] == Approx(0.0).epsilon(1e-12));
  CHECK(p2.values[1] == Approx(2.0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(p2.modal(0, 0) == Approx(r));
  CHECK(p2.modal(1, 0) == Approx(r));
  // sign rule: tie on magnitude goes to the lower index
  CHECK(p2.modal(0, 1) == Approx(r));
  CHECK(p2.modal(1, 1) == Approx(-r));

  const auto k3 = eig_sym(laplacian(gen_complete(3)));
  CHECK(k3.values[0] == Approx(0.0).epsilon(1e-12));
  CHECK(k3.values[1] == Approx(3.0));
  CHECK(k3.values[2] == Approx(3.0));

  const auto ar5 = eig_sym(laplacian(gen_antiregular(5)));
  const std::vector<double> want{0, 1, 2, 4, 5};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(ar5.values[i] - want[i]) <= 1e-8);

  const auto serial = eig_sym(laplacian(gen_antiregular(5)), 1e-9, EigenKernel::SerialReference);
  for (std::size_t i = 0; i < 5; ++i) CHECK(serial.values[i] == Approx(ar5.values[i]));
}

TEST_CASE("eig_sym residuals and large parallel case") {
  std::mt19937_64 rng(17);
  const auto g = gen_random_connected(80, 0.1, rng);
  const auto l = laplacian(g).cast<double>();
  const auto dec = eig_sym(l);
  for (std::size_t j = 0; j < dec.values.size(); ++j) {
    const auto col = dec.modal.column(j);
    CHECK(residual_inf(l, col, dec.values[j]) <= 1e-9 * norm_inf(l));
  }
}

TEST_CASE("eigenspaces") {
  const auto k3 = eigenspaces(eig_sym(laplacian(gen_complete(3))));
  REQUIRE(k3.size() == 2);
  CHECK(k3[0].multiplicity() == 1);
  CHECK(k3[1].multiplicity() == 2);
  CHECK(k3[1].value == Approx(3.0));

  const auto p3 = eigenspaces(eig_sym(laplacian(gen_path(3))));
  REQUIRE(p3.size() == 3);
  CHECK(p3[1].value == Approx(1.0));
  CHECK(p3[2].value == Approx(3.0));

  CHECK(eigenspaces(eig_sym(laplacian(gen_antiregular(5)))).size() == 5);
  CHECK(eigenspaces(eig_sym(laplacian(gen_cycle(6)))).size() == 4);
}

TEST_CASE("antiregular spectrum formula") {
  CHECK(antiregular_spectrum(5) == std::vector<std::int64_t>{0, 1, 2, 4, 5});
  CHECK(antiregular_spectrum(4) == std::vector<std::int64_t>{0, 1, 3, 4});
  CHECK(antiregular_spectrum(2) == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("antiregular integer modal matrix") {
  const auto m2 = antiregular_modal(2);
  CHECK(m2(0, 0) == -m2(1, 0));
  CHECK(m2(0, 1) == 1);
  CHECK(m2(1, 1) == 1);
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto l = laplacian(gen_antiregular(k));
    const auto u = antiregular_modal(k);
    const auto dstar = conjugate(degree_sequence(gen_antiregular(k)));
    for (std::size_t j = 0; j < k; ++j) {
      const auto col = u.column(j);
      const auto lv = multiply(l, std::span<const std::int64_t>(col));
      for (std::size_t i = 0; i < k; ++i) CHECK(lv[i] == dstar[j] * col[i]);
    }
  }
}

TEST_CASE("path modal matrix") {
  CHECK(path_modal(1)(0, 0) == 1.0);
  const auto p3 = path_modal(3);
  CHECK(p3(0, 1) == Approx(std::cos(std::numbers::pi / 6)));
  CHECK(p3(1, 1) == 0.0);
  CHECK(p3(2, 1) == Approx(std::cos(5 * std::numbers::pi / 6)));
  const auto p2 = path_modal(2);
  CHECK(p2(0, 1) == Approx(-p2(1, 1)));
  for (std::size_t k = 1; k <= 9; ++k) {
    const auto l = laplacian(gen_path(k)).cast<double>();
    const auto u = path_modal(k);
    const auto lam = path_spectrum(k);
    for (std::size_t i = 0; i < k; ++i)
      CHECK(residual_inf(l, u.column(i), lam[i]) <= 1e-12);
  }
}

TEST_CASE("majorization") {
  const auto ar5 = eig_sym(laplacian(gen_antiregular(5)));
  CHECK(check_majorization(ar5.values, DegreeSequence({5, 4, 2, 1, 0})));
  CHECK(check_majorization(eig_sym(laplacian(gen_path(3))).values, DegreeSequence({3, 1, 0})));
  CHECK(check_majorization(eig_sym(laplacian(gen_complete(3))).values, DegreeSequence({3, 3, 0})));
  const std::vector<double> too_big{0, 1, 6};
  CHECK_FALSE(check_majorization(too_big, DegreeSequence({3, 1, 0})));
}
