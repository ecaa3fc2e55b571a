#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eidepth/depth_oracle.hpp"
#include "eidepth/primes.hpp"

using namespace eidepth;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::set<std::vector<int>> prime_sets(const std::set<MonomialPrime>& primes) {
  std::set<std::vector<int>> out;
  for (const auto& p : primes) out.insert(p.variables);
  return out;
}

// componentwise max of generator exponents, plus one
std::vector<int> sample_box(const MonomialIdeal& ideal) {
  std::vector<int> box(static_cast<size_t>(ideal.context().num_vars), 1);
  for (const auto& g : ideal.gens())
    for (size_t i = 0; i < box.size(); ++i)
      box[i] = std::max(box[i], g.exp[i] + 1);
  return box;
}

// membership in I must equal membership in every component, for every
// monomial up to the sample box
bool decomposition_matches_membership(const MonomialIdeal& ideal) {
  const auto comps = irreducible_decomposition(ideal);
  std::vector<MonomialIdeal> comp_ideals;
  for (const auto& c : comps) comp_ideals.push_back(component_ideal(ideal.context(), c));
  const auto box = sample_box(ideal);
  std::vector<int> cur(box.size(), 0);
  while (true) {
    const Monomial m{std::vector<int>(cur)};
    bool in_all = true;
    for (const auto& c : comp_ideals)
      if (!c.contains(m)) {
        in_all = false;
        break;
      }
    if (ideal.contains(m) != in_all) return false;
    size_t i = 0;
    while (i < cur.size() && cur[i] == box[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return true;
}

}  // namespace

TEST_CASE("irreducible decomposition of simple ideals") {
  const PolyContext r2(2);
  const MonomialIdeal xy = MonomialIdeal::from_generators(r2, {mono({1, 1})});
  const auto comps = irreducible_decomposition(xy);
  CHECK(comps.size() == 2);
  CHECK(comps[0].pure_powers == std::map<int, int>{{1, 1}});
  CHECK(comps[1].pure_powers == std::map<int, int>{{2, 1}});

  // (x1^2, x1 x2) = (x1) cap (x1^2, x2)
  const MonomialIdeal mixed =
      MonomialIdeal::from_generators(r2, {mono({2, 0}), mono({1, 1})});
  const auto mixed_comps = irreducible_decomposition(mixed);
  CHECK(mixed_comps.size() == 2);
  CHECK(mixed_comps[0].pure_powers == std::map<int, int>{{1, 1}});
  CHECK(mixed_comps[1].pure_powers == std::map<int, int>{{1, 2}, {2, 1}});

  // I(P3) = (x2) cap (x1, x3)
  const auto p3_comps = irreducible_decomposition(edge_ideal(path_graph(3)));
  CHECK(p3_comps.size() == 2);
  CHECK(p3_comps[0].pure_powers == std::map<int, int>{{1, 1}, {3, 1}});
  CHECK(p3_comps[1].pure_powers == std::map<int, int>{{2, 1}});

  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(r2)), std::invalid_argument);
}

TEST_CASE("decomposition correctness by membership sampling") {
  CHECK(decomposition_matches_membership(edge_ideal(path_graph(4))));
  CHECK(decomposition_matches_membership(power(edge_ideal(path_graph(4)), 2)));
  const PolyContext r3(3);
  CHECK(decomposition_matches_membership(
      MonomialIdeal::from_generators(r3, {mono({2, 1, 0}), mono({0, 1, 2}), mono({1, 0, 1})})));
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    CHECK(decomposition_matches_membership(
        power(edge_ideal(random_tree(4 + static_cast<int>(seed % 3), seed + 31)),
              1 + static_cast<int>(seed % 2))));
}

TEST_CASE("associated primes") {
  CHECK(prime_sets(associated_primes(edge_ideal(path_graph(3)))) ==
        std::set<std::vector<int>>{{2}, {1, 3}});

  const PolyContext r2(2);
  CHECK(prime_sets(associated_primes(MonomialIdeal::from_generators(r2, {mono({1, 1})}))) ==
        std::set<std::vector<int>>{{1}, {2}});

  // the maximal ideal is associated to I(K3)^2
  const Forest k3 = Forest::from_edge_list({{1, 2}, {1, 3}, {2, 3}}, 3);
  const auto ass = associated_primes(power(edge_ideal(k3), 2));
  CHECK(ass.count(MonomialPrime{{1, 2, 3}}) == 1);
}

TEST_CASE("minimal primes = minimal vertex covers") {
  CHECK(prime_sets(minimal_primes(edge_ideal(path_graph(3)))) ==
        std::set<std::vector<int>>{{2}, {1, 3}});
  CHECK(prime_sets(minimal_primes(edge_ideal(path_graph(2)))) ==
        std::set<std::vector<int>>{{1}, {2}});

  const auto p5_covers = minimal_vertex_covers(path_graph(5));
  const std::set<std::vector<int>> cover_set(p5_covers.begin(), p5_covers.end());
  CHECK(cover_set.count({2, 4}) == 1);
  CHECK(cover_set.count({1, 3, 5}) == 1);
  std::set<size_t> sizes;
  for (const auto& c : p5_covers) sizes.insert(c.size());
  CHECK(sizes == std::set<size_t>{2, 3});

  CHECK_THROWS_AS(minimal_primes(power(edge_ideal(path_graph(3)), 2)),
                  std::invalid_argument);
}

TEST_CASE("every minimal cover is a cover and is minimal") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const Forest t = random_tree(n, seed * 7 + 2);
    for (const auto& cover : minimal_vertex_covers(t)) {
      const std::set<int> cs(cover.begin(), cover.end());
      for (auto [u, v] : t.edges) CHECK((cs.count(u) || cs.count(v)));
      for (int drop : cover) {
        bool still_cover = true;
        for (auto [u, v] : t.edges) {
          const bool covered = (cs.count(u) && u != drop) || (cs.count(v) && v != drop);
          if (!covered) {
            still_cover = false;
            break;
          }
        }
        CHECK_FALSE(still_cover);
      }
    }
  }
}

TEST_CASE("height and unmixedness") {
  CHECK(height_and_unmixed(path_graph(3)) == std::pair<int, bool>{1, false});
  CHECK(height_and_unmixed(path_graph(4)) == std::pair<int, bool>{2, true});
  CHECK(height_and_unmixed(path_graph(5)) == std::pair<int, bool>{2, false});
}

TEST_CASE("normally torsion-free") {
  CHECK(is_normally_torsion_free_up_to(path_graph(4), 3));
  CHECK(is_normally_torsion_free_up_to(path_graph(6), 2));
  const Forest k3 = Forest::from_edge_list({{1, 2}, {1, 3}, {2, 3}}, 3);
  CHECK_FALSE(is_normally_torsion_free_up_to(k3, 2));
}

TEST_CASE("Min is contained in Ass of every power; equality when squarefree") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const MonomialIdeal ideal = edge_ideal(random_tree(n, seed + 13));
    const auto minimal = minimal_primes(ideal);
    CHECK(associated_primes(ideal) == minimal);  // squarefree: Ass = Min
    for (int t = 2; t <= 3; ++t) {
      const auto ass = associated_primes(power(ideal, t));
      for (const auto& p : minimal) CHECK(ass.count(p) == 1);
    }
  }
}

TEST_CASE("depth zero iff the maximal ideal is associated") {
  const FieldSpec Q = FieldSpec::rationals();
  std::vector<std::pair<Forest, int>> corpus;
  corpus.push_back({path_graph(4), 2});
  corpus.push_back({path_graph(3), 3});
  const Forest k3 = Forest::from_edge_list({{1, 2}, {1, 3}, {2, 3}}, 3);
  corpus.push_back({k3, 1});
  corpus.push_back({k3, 2});
  for (const auto& [g, t] : corpus) {
    const MonomialIdeal it = power(edge_ideal(g), t);
    std::vector<int> all;
    for (int v = 1; v <= g.num_vertices; ++v) all.push_back(v);
    const bool max_associated = associated_primes(it).count(MonomialPrime{all}) == 1;
    CHECK(max_associated == (depth_of_quotient(it, Q).depth == 0));
  }
}

TEST_CASE("prime rendering") {
  const PolyContext r4(4);
  CHECK(to_string(MonomialPrime{{2, 4}}, r4) == "x2,x4");
}
