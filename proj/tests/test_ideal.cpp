#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eidepth/ideal.hpp"
#include "oracle_helpers.hpp"

using namespace eidepth;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// no stored generator divides another
bool minimality_holds(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i].divides(g[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("edge_ideal") {
  const MonomialIdeal p3 = edge_ideal(path_graph(3));
  CHECK(p3.num_gens() == 2);
  CHECK(to_string(p3) == "x1*x2, x2*x3");

  CHECK(edge_ideal(Forest::from_edge_list({}, 3)).is_zero());

  const Forest k3 = Forest::from_edge_list({{1, 2}, {1, 3}, {2, 3}}, 3);
  CHECK(to_string(edge_ideal(k3)) == "x1*x2, x1*x3, x2*x3");
}

TEST_CASE("minimalization") {
  const PolyContext r2(2);
  const MonomialIdeal a =
      MonomialIdeal::from_generators(r2, {mono({1, 1}), mono({2, 1})});
  CHECK(a.gens() == std::vector<Monomial>{mono({1, 1})});

  CHECK(MonomialIdeal::from_generators(r2, {}).is_zero());

  const MonomialIdeal incomparable =
      MonomialIdeal::from_generators(r2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  CHECK(incomparable.num_gens() == 3);
}

TEST_CASE("power") {
  const MonomialIdeal p2 = edge_ideal(path_graph(2));
  CHECK(power(p2, 3).gens() == std::vector<Monomial>{mono({3, 3})});

  const MonomialIdeal p3 = edge_ideal(path_graph(3));
  const MonomialIdeal p3sq = power(p3, 2);
  CHECK(testoracle::gens_of(p3sq) ==
        std::set<testoracle::Exp>{{2, 2, 0}, {1, 2, 1}, {0, 2, 2}});

  CHECK(equal_ideals(power(p3, 1), p3));
  CHECK_THROWS_AS(power(p3, 0), std::invalid_argument);
}

TEST_CASE("power matches brute-force product enumeration") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const Forest tree = random_tree(n, seed + 101);
    const MonomialIdeal ideal = edge_ideal(tree);
    std::vector<testoracle::Exp> gens;
    for (const auto& g : ideal.gens()) gens.push_back(g.exp);
    for (int t = 2; t <= 4; ++t)
      CHECK(testoracle::gens_of(power(ideal, t)) == testoracle::power_gens(gens, t));
  }
}

TEST_CASE("power is multiplicative: I^a * I^b = I^(a+b)") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);  // n <= 8
    const MonomialIdeal ideal = edge_ideal(random_tree(n, seed * 13 + 1));
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; a + b <= 4; ++b) {
        const MonomialIdeal ia = power(ideal, a);
        const MonomialIdeal ib = power(ideal, b);
        std::vector<Monomial> prods;
        for (const auto& ga : ia.gens())
          for (const auto& gb : ib.gens()) prods.push_back(ga * gb);
        const MonomialIdeal lhs =
            MonomialIdeal::from_generators(ideal.context(), std::move(prods));
        CHECK(equal_ideals(lhs, power(ideal, a + b)));
      }
  }
}

TEST_CASE("colon") {
  const MonomialIdeal p5 = edge_ideal(path_graph(5));
  const MonomialIdeal q = colon(p5, Monomial::variable(5, 4));
  CHECK(to_string(q) == "x3, x5, x1*x2");

  CHECK(equal_ideals(colon(p5, Monomial::one(5)), p5));

  const MonomialIdeal p4 = edge_ideal(path_graph(4));
  const Monomial x3x4 = Monomial::variable(4, 3) * Monomial::variable(4, 4);
  CHECK(equal_ideals(colon(power(p4, 2), x3x4), p4));
}

TEST_CASE("colon monotonicity and generator containment") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const MonomialIdeal ideal = edge_ideal(random_tree(n, seed + 7));
    for (int v = 1; v <= n; ++v) {
      const MonomialIdeal q = colon(ideal, Monomial::variable(n, v));
      CHECK(q.contains(ideal));  // I is inside (I : m)
    }
    // (I^t : g) contains I^(t-1) for every generator g
    for (int t = 2; t <= 3; ++t) {
      const MonomialIdeal it = power(ideal, t);
      for (const auto& g : ideal.gens())
        CHECK(colon(it, g).contains(power(ideal, t - 1)));
    }
  }
}

TEST_CASE("add_variable_gen") {
  const PolyContext r2(2);
  const MonomialIdeal i = MonomialIdeal::from_generators(r2, {mono({1, 1})});
  CHECK(to_string(add_variable_gen(i, 2)) == "x2");

  const MonomialIdeal p4 = edge_ideal(path_graph(4));
  CHECK(to_string(add_variable_gen(p4, 3)) == "x3, x1*x2");

  const MonomialIdeal zero(PolyContext(2));
  CHECK(to_string(add_variable_gen(zero, 1)) == "x1");
}

TEST_CASE("delete_variable") {
  const MonomialIdeal p4 = edge_ideal(path_graph(4));
  CHECK(to_string(delete_variable(p4, 2)) == "x3*x4");

  const Forest star = Forest::from_edge_list({{1, 2}, {1, 3}, {1, 4}}, 4);
  CHECK(delete_variable(edge_ideal(star), 1).is_zero());

  const MonomialIdeal p6 = edge_ideal(path_graph(6));
  CHECK(to_string(delete_variable(p6, 3)) == "x1*x2, x4*x5, x5*x6");
}

TEST_CASE("equal_ideals") {
  const PolyContext r3(3);
  const MonomialIdeal a = MonomialIdeal::from_generators(r3, {mono({1, 1, 0})});
  const MonomialIdeal b =
      MonomialIdeal::from_generators(r3, {mono({1, 1, 0}), mono({2, 1, 0})});
  CHECK(equal_ideals(a, b));

  const MonomialIdeal p3 = edge_ideal(path_graph(3));
  const MonomialIdeal p3r =
      MonomialIdeal::from_generators(PolyContext(3), {mono({0, 1, 1}), mono({1, 1, 0})});
  CHECK(equal_ideals(p3, p3r));

  const MonomialIdeal p4_in_r3 =
      MonomialIdeal::from_generators(r3, {mono({1, 1, 0}), mono({0, 1, 1}), mono({0, 0, 2})});
  CHECK_FALSE(equal_ideals(p3, p4_in_r3));

  const MonomialIdeal other_ring = MonomialIdeal::from_generators(PolyContext(4), {});
  CHECK_THROWS_AS(equal_ideals(p3, other_ring), std::invalid_argument);
}

TEST_CASE("minimality invariant after every operation") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const MonomialIdeal ideal = edge_ideal(random_tree(n, seed + 23));
    CHECK(minimality_holds(ideal));
    CHECK(minimality_holds(power(ideal, 3)));
    CHECK(minimality_holds(colon(power(ideal, 2), ideal.gens().front())));
    CHECK(minimality_holds(add_variable_gen(ideal, 1)));
    CHECK(minimality_holds(delete_variable(ideal, 2)));
    CHECK(minimality_holds(intersect(ideal, delete_variable(ideal, 1))));
  }
}

TEST_CASE("leaf colon identity") {
  CHECK(check_leaf_colon_identity(path_graph(4), 4, 2));
  CHECK(check_leaf_colon_identity(path_graph(2), 2, 2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Forest tree = random_tree(n, seed * 31 + 5);
    for (int v = 1; v <= n; ++v)
      if (tree.is_leaf(v)) {
        CHECK(check_leaf_colon_identity(tree, v, 3));
        break;
      }
  }
  CHECK_THROWS_AS(check_leaf_colon_identity(path_graph(4), 2, 2), std::invalid_argument);
}

TEST_CASE("colon/deletion swap identity") {
  const MonomialIdeal p5 = edge_ideal(path_graph(5));
  CHECK(check_rhs_identity(p5, Monomial::variable(5, 4), 5, 2));

  // M = 1, t = 1 reduces to (I, y) = (K, y)
  const MonomialIdeal p6 = edge_ideal(path_graph(6));
  CHECK(check_rhs_identity(p6, Monomial::one(6), 3, 1));

  // y divides M: precondition violation
  const Monomial x5x6 = Monomial::variable(6, 5) * Monomial::variable(6, 6);
  CHECK_THROWS_AS(check_rhs_identity(p6, x5x6, 6, 2), std::invalid_argument);
}

TEST_CASE("canonical monomial rendering") {
  const PolyContext r3(3);
  CHECK(to_string(mono({2, 0, 1}), r3) == "x1^2*x3");
  CHECK(to_string(mono({0, 0, 0}), r3) == "1");
  CHECK(to_string(mono({1, 1, 1}), r3) == "x1*x2*x3");
}

TEST_CASE("membership-based equality agrees with canonical equality") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const MonomialIdeal a = edge_ideal(random_tree(n, seed));
    const MonomialIdeal b = edge_ideal(random_tree(n, seed + 1000));
    CHECK(equal_ideals(a, b) == testoracle::equal_by_membership(a, b));
    CHECK(testoracle::equal_by_membership(power(a, 2), power(a, 2)));
  }
}
