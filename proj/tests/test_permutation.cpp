#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "symorb/permutation.hpp"

using namespace symorb;

TEST_CASE("image word round trip") {
  const Permutation p = Permutation::parse("2,1,3");
  CHECK(p.str() == "2,1,3");
  CHECK(p(0) == 1);
  CHECK(p(1) == 0);
  CHECK(p(2) == 2);
  CHECK(Permutation::identity(3).is_identity());
  CHECK_THROWS_AS(Permutation::parse("2,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,4"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,x"), std::invalid_argument);
}

TEST_CASE("compose applies the left factor first") {
  const Permutation t12 = Permutation::parse("2,1,3");
  const Permutation t13 = Permutation::parse("3,2,1");
  CHECK(compose(t12, t13).str() == "2,3,1");
  CHECK(compose(t13, t12).str() == "3,1,2");

  const Permutation id = Permutation::identity(3);
  for (const Permutation& p : all_permutations(3)) {
    CHECK(compose(p, id) == p);
    CHECK(compose(id, p) == p);
    CHECK(compose(p, inverse(p)) == id);
  }
  CHECK_THROWS_AS(compose(t12, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("compose is associative on S_4") {
  const auto all = all_permutations(4);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int rep = 0; rep < 500; ++rep) {
    const Permutation& a = all[pick(rng)];
    const Permutation& b = all[pick(rng)];
    const Permutation& c = all[pick(rng)];
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("conjugation relabels points") {
  const Permutation p = Permutation::parse("2,1,3");
  const Permutation k = Permutation::parse("1,3,2");
  const Permutation c = conjugate(p, k);
  CHECK(c == compose(compose(inverse(k), p), k));
  for (const Permutation& q : all_permutations(4))
    for (const Permutation& h : all_permutations(4))
      CHECK(CycleType::of(conjugate(q, h)) == CycleType::of(q));
}

TEST_CASE("cycle type is a complete conjugacy invariant for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::map<CycleType, std::set<Permutation>> classes;
    const auto all = all_permutations(n);
    for (const Permutation& p : all) classes[CycleType::of(p)].insert(p);
    CHECK(classes.size() == partitions(n).size());
    for (auto& [ct, members] : classes) {
      CHECK(Int(static_cast<long>(members.size())) == conjugacy_class_size(ct));
      const Permutation rep = representative(ct);
      CHECK(CycleType::of(rep) == ct);
      std::set<Permutation> reached;
      for (const Permutation& k : all) reached.insert(conjugate(rep, k));
      CHECK(reached == members);
    }
  }
}

TEST_CASE("partitions are listed largest part first") {
  const auto parts4 = partitions(4);
  REQUIRE(parts4.size() == 5);
  CHECK(parts4[0].str() == "4^1");
  CHECK(parts4[1].str() == "3^1 1^1");
  CHECK(parts4[2].str() == "2^2");
  CHECK(parts4[3].str() == "2^1 1^2");
  CHECK(parts4[4].str() == "1^4");
  CHECK(partitions(0).size() == 1);
  const long expected_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n)
    CHECK(partitions(n).size() == static_cast<size_t>(expected_counts[n]));
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order(CycleType::from_parts({2, 1})) == 2);
  CHECK(centralizer_order(CycleType::from_parts({3})) == 3);
  CHECK(centralizer_order(CycleType::from_parts({1, 1, 1, 1})) == 24);
  CHECK(centralizer_order(CycleType::from_parts({2, 2})) == 8);

  for (int n = 1; n <= 6; ++n) {
    Int total = 0;
    for (const CycleType& ct : partitions(n)) total += conjugacy_class_size(ct);
    CHECK(total == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("centralizer generators commute with the representative") {
  for (int n = 1; n <= 6; ++n) {
    for (const CycleType& ct : partitions(n)) {
      const Permutation rep = representative(ct);
      for (const Permutation& g : centralizer_generators(ct))
        CHECK(compose(rep, g) == compose(g, rep));
    }
  }
  // generated subgroup size equals the centralizer order on a spot check
  const CycleType ct = CycleType::from_parts({2, 2, 1});
  const auto gens = centralizer_generators(ct);
  std::set<Permutation> group{Permutation::identity(5)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Permutation> next = group;
    for (const Permutation& a : group)
      for (const Permutation& g : gens)
        if (next.insert(compose(a, g)).second) grew = true;
    group = next;
  }
  CHECK(Int(static_cast<long>(group.size())) == centralizer_order(ct));
}

TEST_CASE("orbit structures") {
  const Permutation id2 = Permutation::identity(2);
  CHECK(orbit_structure(id2).orbit_count() == 2);
  CHECK(orbit_structure(Permutation::parse("2,1")).orbit_count() == 1);
  CHECK(singleton_orbits(4).orbit_count() == 4);

  const Permutation t12 = Permutation::transposition(3, 0, 1);
  const Permutation t23 = Permutation::transposition(3, 1, 2);
  CHECK(orbit_structure(t12, t23).orbit_count() == 1);

  const OrbitStructure os = orbit_structure(Permutation::parse("2,1,3"));
  CHECK(os.orbit_of == std::vector<int>{0, 0, 1});
  CHECK(os.orbit_sizes == std::vector<int>{2, 1});
  CHECK(os.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(orbit_structure(t12, t23).coarsens(os));
  CHECK(!os.coarsens(orbit_structure(t12, t23)));
}

TEST_CASE("orbit counting ignores generator order and conjugates cleanly") {
  const auto all = all_permutations(4);
  std::mt19937 rng(777);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int rep = 0; rep < 300; ++rep) {
    const Permutation& p = all[pick(rng)];
    const Permutation& q = all[pick(rng)];
    const Permutation& k = all[pick(rng)];
    CHECK(orbit_structure(p, q).orbit_count() == orbit_structure(q, p).orbit_count());
    CHECK(orbit_structure(conjugate(p, k), conjugate(q, k)).orbit_count() ==
          orbit_structure(p, q).orbit_count());
    CHECK(orbit_structure(conjugate(p, k)).orbit_count() ==
          orbit_structure(p).orbit_count());
  }
}

TEST_CASE("degree formulas on transposition pairs") {
  const Permutation t12 = Permutation::transposition(2, 0, 1);
  CHECK(excess_euler_degree(t12, t12, 2) == 2);
  CHECK(chen_ruan_degree(t12, t12, 2) == 0);

  const Permutation id = Permutation::identity(2);
  CHECK(excess_euler_degree(id, id, 2) == 0);
  CHECK(excess_euler_degree(id, t12, 2) == 0);
  CHECK(chen_ruan_degree(id, t12, 2) == 0);

  CHECK_THROWS_AS(chen_ruan_degree(t12, t12, 3), std::invalid_argument);

  const Permutation a = Permutation::transposition(3, 0, 1);
  const Permutation b = Permutation::transposition(3, 1, 2);
  // product is a 3-cycle: joint orbits 1, each factor has 2 orbits
  CHECK(excess_euler_degree(a, b, 2) == 2 * (3 + 1 - 2 - 2));
  CHECK(chen_ruan_degree(a, b, 2) == (3 + 2 - 2 - 2 - 1));
}

TEST_CASE("excess multiplicities split the degree orbit by orbit") {
  const auto all5 = all_permutations(5);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<size_t> pick(0, all5.size() - 1);
  for (int rep = 0; rep < 400; ++rep) {
    const Permutation& p = all5[pick(rng)];
    const Permutation& q = all5[pick(rng)];
    const auto mult = excess_multiplicities(p, q);
    CHECK(mult.size() == static_cast<size_t>(orbit_structure(p, q).orbit_count()));
    int total = 0;
    for (int m : mult) {
      CHECK(m >= 0);
      total += m;
    }
    CHECK(2 * total == excess_euler_degree(p, q, 2));
  }
  const Permutation t = Permutation::transposition(2, 0, 1);
  CHECK(excess_multiplicities(t, t) == std::vector<int>{1});
  const Permutation id = Permutation::identity(2);
  CHECK(excess_multiplicities(id, id) == std::vector<int>{0, 0});
}

TEST_CASE("slack between the two degrees is controlled by orbit counts") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const Permutation& p : all) {
      for (const Permutation& q : all) {
        const int slack = excess_euler_degree(p, q, 2) - 2 * chen_ruan_degree(p, q, 2);
        const int drop = orbit_structure(compose(p, q)).orbit_count() -
                         orbit_structure(p, q).orbit_count();
        CHECK(slack == 2 * drop);
        CHECK(slack >= 0);
      }
    }
  }
}
