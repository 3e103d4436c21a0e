#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/verify.hpp"

using namespace spexlab;

namespace {

Graph star(int leaves) {  // center is vertex 0
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace

TEST_CASE("closed-form spectral radii") {
  for (int n = 1; n <= 12; ++n)
    CHECK(spectral_radius(complete_graph(n)).rho == doctest::Approx(n - 1.0).epsilon(1e-9));
  for (int n = 3; n <= 10; ++n)
    CHECK(spectral_radius(cycle_graph(n)).rho == doctest::Approx(2.0).epsilon(1e-9));
  for (int k = 2; k <= 8; ++k)
    CHECK(spectral_radius(star(k)).rho == doctest::Approx(std::sqrt(double(k))).epsilon(1e-9));
  CHECK(spectral_radius(turan_graph(5, 2)).rho == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
  CHECK(spectral_radius(path_graph(4)).rho ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
  CHECK(spectral_radius(empty_graph(8)).rho == 0.0);
  CHECK(spectral_radius(empty_graph(1)).rho == 0.0);
  CHECK_THROWS_AS(spectral_radius(Graph(0)), std::invalid_argument);
}

TEST_CASE("eigenvalue matches dense Jacobi oracle") {
  Rng rng(21);
  for (int i = 0; i < 120; ++i) {
    int n = rng.uniform(2, 12);
    Graph g = random_graph(rng, n, 0.15 + 0.7 * rng.real01());
    SpectralResult sr = spectral_radius(g);
    CHECK(sr.rho == doctest::Approx(naive_rho(g)).epsilon(1e-8));
    double avg = 2.0 * g.edge_count() / n;
    int dmax = 0;
    for (int v = 0; v < n; ++v) dmax = std::max(dmax, g.degree(v));
    CHECK(sr.rho >= avg - 1e-9);
    CHECK(sr.rho <= dmax + 1e-9);
  }
}

TEST_CASE("perron vector contract") {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    int n = rng.uniform(2, 10);
    Graph g = random_graph(rng, n, 0.4);
    SpectralResult sr = spectral_radius(g, 1e-11);
    REQUIRE(static_cast<int>(sr.perron.size()) == n);
    double norm = 0.0;
    for (double x : sr.perron) {
      CHECK(x >= 0.0);
      norm += x * x;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sr.residual <= 1e-11);
    CHECK(sr.iterations <= 1000000);
    CHECK(rayleigh(g, sr.perron) == doctest::Approx(sr.rho).epsilon(1e-8));
  }
  // regular graph: flat vector
  SpectralResult c6 = spectral_radius(cycle_graph(6));
  for (double x : c6.perron) CHECK(x == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-8));
}

TEST_CASE("disconnected input takes the dominant component") {
  Graph g = disjoint_union({complete_graph(3), complete_graph(2)});
  SpectralResult sr = spectral_radius(g);
  CHECK(sr.rho == doctest::Approx(2.0).epsilon(1e-9));
  for (int v = 0; v < 3; ++v) CHECK(sr.perron[v] > 0.1);
  for (int v = 3; v < 5; ++v) CHECK(sr.perron[v] == 0.0);

  // bipartite component: the A+I shift must still settle
  Graph h = disjoint_union({turan_graph(4, 2), empty_graph(2)});
  CHECK(spectral_radius(h).rho == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("quadratic form evaluation") {
  Graph p3 = path_graph(3);
  std::vector<double> x = {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)};
  CHECK(rayleigh(p3, x) == doctest::Approx(0.0));
  std::vector<double> y = {0.5, 1.0 / std::sqrt(2.0), 0.5};
  CHECK(rayleigh(p3, y) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(rayleigh(p3, {1.0, 0.0}), std::invalid_argument);

  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    int n = rng.uniform(2, 9);
    Graph g = random_graph(rng, n, 0.5);
    std::vector<double> v(n);
    double norm = 0.0;
    for (double& e : v) {
      e = rng.real01();
      norm += e * e;
    }
    for (double& e : v) e /= std::sqrt(norm);
    CHECK(rayleigh(g, v) <= spectral_radius(g).rho + 1e-8);
  }
}

TEST_CASE("strictly smaller subgraphs have strictly smaller radius") {
  TrialSummary ts = subgraph_monotonicity_trials(60, 31, 8);
  CHECK(ts.trials == 60);
  CHECK(ts.violations == 0);
  CHECK(ts.min_margin > 0.0);
}

TEST_CASE("pivot rewiring toward heavier mass") {
  // path 0-1-2-3: detach 3 from 2, reattach to 1; the star strictly wins
  auto [st, rep] = rotate_edges(path_graph(4), 3, VertexSet::of({2}), VertexSet::of({1}));
  CHECK(rep.connected);
  CHECK(rep.sums_favor_added);
  CHECK(rep.sets_differ);
  CHECK(rep.increase_certified);
  CHECK(naive_is_isomorphic(st, star(3)));
  CHECK(spectral_radius(st).rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

  // 4-cycle pivot: equal sums still certify, and the result is the triangle
  // with a pendant vertex
  auto [pawish, rep2] = rotate_edges(cycle_graph(4), 0, VertexSet::of({1}), VertexSet::of({2}));
  CHECK(rep2.increase_certified);
  CHECK(rep2.removed_sum == doctest::Approx(rep2.added_sum).epsilon(1e-9));
  double before = spectral_radius(cycle_graph(4)).rho;
  double after = spectral_radius(pawish).rho;
  CHECK(after == doctest::Approx(2.1700864866).epsilon(1e-8));
  CHECK(after > before + 1e-3);

  // moving mass from the hub to a leaf is not certified
  Graph s4 = star(4);
  auto [worse, rep3] = rotate_edges(s4, 1, VertexSet::of({0}), VertexSet::of({2}));
  CHECK_FALSE(rep3.sums_favor_added);
  CHECK_FALSE(rep3.increase_certified);
  CHECK(spectral_radius(worse).rho < spectral_radius(s4).rho);
}

TEST_CASE("pivot rewiring input validation") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(rotate_edges(c4, 0, VertexSet::of({1}), VertexSet::of({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotate_edges(c4, 0, VertexSet{}, VertexSet::of({2})), std::invalid_argument);
  CHECK_THROWS_AS(rotate_edges(c4, 0, VertexSet::of({1}), VertexSet{}), std::invalid_argument);
  CHECK_THROWS_AS(rotate_edges(c4, 0, VertexSet::of({2}), VertexSet::of({1})),
                  std::invalid_argument);  // 2 is not a neighbor of 0
  CHECK_THROWS_AS(rotate_edges(c4, 0, VertexSet::of({1}), VertexSet::of({0})),
                  std::invalid_argument);  // cannot attach to the pivot
  CHECK_THROWS_AS(rotate_edges(c4, 4, VertexSet::of({1}), VertexSet::of({2})),
                  std::invalid_argument);
}

TEST_CASE("randomized pivot rewiring increases the radius") {
  TrialSummary ts = rotation_trials(60, 32);
  CHECK(ts.trials == 60);
  CHECK(ts.violations == 0);
  CHECK(ts.min_margin > 0.0);
}

TEST_CASE("attachment swap worked instance") {
  // star with center 2; sides A = {0,1}, B = {3}, U2 = {3}... U = {3} wired to B
  Graph st = make_graph(4, {{2, 0}, {2, 1}, {2, 3}});
  SwapSpec spec;
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  spec.u1 = VertexSet{};
  spec.u2 = VertexSet::of({3});
  SwapCheck chk = check_swap_preconditions(st, spec);
  CHECK(chk.pass);
  CHECK(chk.u1_sum < chk.u2_sum);
  Graph out = neighborhood_swap(st, spec);
  CHECK(naive_is_isomorphic(out, cycle_graph(4)));
  CHECK(spectral_radius(st).rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(spectral_radius(out).rho == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("attachment swap precondition clauses") {
  SwapSpec spec;

  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({1});
  CHECK(check_swap_preconditions(cycle_graph(4), spec).clause == "sets");

  spec.a = VertexSet::of({0});
  spec.b = VertexSet::of({1});
  CHECK(check_swap_preconditions(cycle_graph(4), spec).clause == "|A|>|B|>0");
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet{};
  CHECK(check_swap_preconditions(cycle_graph(4), spec).clause == "|A|>|B|>0");

  Graph disc = disjoint_union({make_graph(3, {{0, 1}, {0, 2}, {1, 2}}), complete_graph(2)});
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  CHECK(check_swap_preconditions(disc, spec).clause == "connected");

  // internal A edge breaks the complete-bipartite requirement
  Graph tri = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  CHECK(check_swap_preconditions(tri, spec).clause == "(i)");

  // missing cross edge
  Graph gap = make_graph(4, {{0, 2}, {1, 3}, {2, 3}});
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  CHECK(check_swap_preconditions(gap, spec).clause == "(i)");

  // unequal attachment within A
  Graph uneq = make_graph(5, {{0, 2}, {1, 2}, {0, 3}, {2, 4}, {3, 4}});
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  CHECK(check_swap_preconditions(uneq, spec).clause == "(ii)");

  // mass already favors U1: both A vertices feed 3, only B feeds 4
  Graph heavy = make_graph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}});
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  spec.u1 = VertexSet::of({3});
  spec.u2 = VertexSet::of({4});
  CHECK(check_swap_preconditions(heavy, spec).clause == "(iii)");

  CHECK_THROWS_AS(neighborhood_swap(heavy, spec), std::invalid_argument);
}

TEST_CASE("randomized attachment swaps increase the radius") {
  TrialSummary ts = swap_trials(60, 33);
  CHECK(ts.trials == 60);
  CHECK(ts.violations == 0);
  CHECK(ts.min_margin > 0.0);
}

TEST_CASE("multipartite radius floor") {
  CHECK(turan_rho_floor(10, 2) == doctest::Approx(4.95).epsilon(1e-12));
  CHECK(turan_rho_floor(2, 2) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(turan_rho_floor(60, 3) == doctest::Approx(39.9875).epsilon(1e-12));
  CHECK_THROWS_AS(turan_rho_floor(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(turan_rho_floor(4, 0), std::invalid_argument);
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= 30; ++n)
      CHECK(spectral_radius(turan_graph(n, r)).rho >= turan_rho_floor(n, r) - 1e-9);
}
