#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "thresh/errors.hpp"
#include "thresh/experiments.hpp"
#include "thresh/generators.hpp"
#include "thresh/spectral.hpp"

using namespace thresh;

TEST_CASE("K4 spectrum is {1, -1/3, -1/3, -1/3}") {
  const SpectralProfile p = normalized_spectrum(complete_graph(4));
  REQUIRE(p.eigenvalues.size() == 4);
  CHECK(p.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(p.eigenvalues[i] + 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(p.sigma - 1.0 / 3.0) < 1e-12);
  CHECK(p.gamma == 1.0);
  CHECK_FALSE(p.disconnected);
}

TEST_CASE("closed-form sigma values") {
  CHECK(std::abs(sigma(star_graph(5)) - 1.0) < 1e-9);
  CHECK(std::abs(sigma(petersen_graph()) - 2.0 / 3.0) < 1e-9);
  CHECK(std::abs(sigma(cycle_graph(4)) - 1.0) < 1e-9);
  CHECK(std::abs(sigma(complete_graph(10)) - 1.0 / 9.0) < 1e-9);
  for (std::size_t n = 3; n <= 50; ++n) CHECK(std::abs(sigma(complete_graph(n)) - 1.0 / (n - 1.0)) < 1e-9);
  // Odd cycle: eigenvalues cos(2 pi k / n), largest magnitude besides 1 is |cos(pi (n-1)/n)|.
  CHECK(std::abs(sigma(cycle_graph(7)) - std::cos(std::numbers::pi / 7.0)) < 1e-9);
}

TEST_CASE("cycle spectrum matches cos(2 pi k / n)") {
  const SpectralProfile p = normalized_spectrum(cycle_graph(4));
  const std::vector<double> expected{1.0, 0.0, 0.0, -1.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(p.eigenvalues[i] - expected[i]) < 1e-12);
}

TEST_CASE("gamma and preconditions") {
  CHECK(gamma(petersen_graph()) == 1.0);
  CHECK(gamma(star_graph(5)) == doctest::Approx(0.25));
  CHECK(gamma(path_graph(4)) == doctest::Approx(0.5));
  const std::vector<Edge> one_edge{{0, 1}};
  CHECK_THROWS_AS(normalized_spectrum(Graph(3, one_edge)), PreconditionError);
}

TEST_CASE("disconnected graphs report sigma = 1") {
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const SpectralProfile p = normalized_spectrum(Graph(6, two_triangles));
  CHECK(p.disconnected);
  CHECK(p.sigma == 1.0);
}

TEST_CASE("eigensolver agrees with Jacobi iteration, trace is zero, bipartite iff sigma = 1") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; checked < 60 && trial < 1000; ++trial) {
    const std::size_t n = 3 + trial % 20;
    auto edges = oracle::random_edges(n, 0.35, rng);
    const Graph g(n, edges);
    if (g.min_degree() == 0) continue;
    ++checked;
    const auto a = oracle::matrix(n, edges);
    const auto reference = oracle::jacobi_eigenvalues(oracle::normalized_adjacency(a));
    const SpectralProfile p = normalized_spectrum(g);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(p.eigenvalues[i] - reference[i]) < 1e-9);
      CHECK(p.eigenvalues[i] <= 1.0 + p.tolerance);
      CHECK(p.eigenvalues[i] >= -1.0 - p.tolerance);
      trace += p.eigenvalues[i];
    }
    CHECK(std::abs(p.eigenvalues[0] - 1.0) < 1e-9);
    CHECK(std::abs(trace) < 1e-8 * static_cast<double>(n));

    // Bipartite test by 2-coloring; only meaningful when connected.
    if (!p.disconnected) {
      std::vector<int> side(n, -1);
      bool bipartite = true;
      std::vector<NodeId> stack{0};
      side[0] = 0;
      while (!stack.empty() && bipartite) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : g.neighbors(v)) {
          if (side[u] == -1) {
            side[u] = 1 - side[v];
            stack.push_back(u);
          } else if (side[u] == side[v]) {
            bipartite = false;
          }
        }
      }
      if (bipartite) {
        CHECK(std::abs(p.sigma - 1.0) < 1e-9);
      } else {
        CHECK(p.sigma < 1.0 - 1e-9);
      }
    }
  }
  CHECK(checked == 60);
}

TEST_CASE("expander mixing inequality holds with the computed sigma") {
  std::mt19937_64 rng(17);
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{60, 3}, {80, 6}, {100, 10}, {10, 3}}) {
    const Graph g = n == 10 ? petersen_graph() : gen_random_regular(n, d, n);
    const double s = sigma(g);
    // A = B = V: deviation |2m - n d| is zero.
    const auto full = mixing_terms(g, s, NodeSet::full(n), NodeSet::full(n));
    CHECK(full.deviation < 1e-9);
    for (int pair = 0; pair < 300; ++pair) {
      NodeSet a(n);
      NodeSet b(n);
      std::bernoulli_distribution pa(std::uniform_real_distribution<double>(0, 1)(rng));
      std::bernoulli_distribution pb(std::uniform_real_distribution<double>(0, 1)(rng));
      for (NodeId v = 0; v < n; ++v) {
        if (pa(rng)) a.insert(v);
        if (pb(rng)) b.insert(v);
      }
      const auto terms = mixing_terms(g, s, a, b);
      CHECK(terms.deviation <= terms.bound + 1e-9);
    }
  }
}
