#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tvlab/catalog.hpp"
#include "tvlab/group.hpp"
#include "tvlab/homogeneity.hpp"
#include "tvlab/wreath.hpp"

using namespace tvlab;

TEST_CASE("orders of small classical groups") {
  PermGroup s4 = symmetric_group(4);
  REQUIRE(s4.order_u64() == 24);
  REQUIRE(alternating_group(7).order_u64() == 2520);
  REQUIRE(cyclic_group(12).order_u64() == 12);
  REQUIRE(symmetric_group(24).order().str() == "620448401733239439360000");
}

TEST_CASE("chain order equals naive closure on small groups") {
  for (const char *name : {"S5", "A6", "S3wrS2", "PSL(2,7)", "PGL(2,7)", "AGL(1,13)"}) {
    PermGroup g = catalog_group(name);
    if (g.order_u64() <= 100000) {
      REQUIRE(g.elements().size() == g.order_u64());
    }
  }
}

TEST_CASE("PGL(2,7) has order 336 by naive closure") {
  PermGroup g = catalog_group("PGL(2,7)");
  REQUIRE(g.degree() == 8);
  REQUIRE(g.elements().size() == 336);
  REQUIRE(g.order_u64() == 336);
}

TEST_CASE("M11 order by naive closure") {
  PermGroup g = catalog_group("M11");
  REQUIRE(g.degree() == 11);
  REQUIRE(g.order_u64() == 7920);
  REQUIRE(g.elements(10000).size() == 7920);
}

TEST_CASE("sifting: membership for random words, rejection outside") {
  PermGroup g = catalog_group("M11");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    // random word in the generators
    Permutation w(g.degree());
    std::uniform_int_distribution<size_t> d(0, g.generators().size() - 1);
    for (int j = 0; j < 6; ++j) w = w * g.generators()[d(rng)];
    REQUIRE(g.contains(w));
  }
  // random permutations mostly fall outside a group of index > 1
  size_t rejected = 0;
  std::vector<Point> id(g.degree());
  std::iota(id.begin(), id.end(), 0u);
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> im = id;
    std::shuffle(im.begin(), im.end(), rng);
    if (!g.contains(Permutation(im))) ++rejected;
  }
  REQUIRE(rejected > 190);  // |M11| / 11! is tiny
}

TEST_CASE("random elements are members") {
  PermGroup g = catalog_group("M12");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) REQUIRE(g.contains(g.random_element(rng)));
}

TEST_CASE("orbit structure") {
  // <(0 1)(2 3)> on 5 points
  PermGroup g(5, {Permutation::from_cycles(5, {{0, 1}, {2, 3}})});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 3);
  REQUIRE(orbs[0] == PointSet{0, 1});
  REQUIRE(orbs[1] == PointSet{2, 3});
  REQUIRE(orbs[2] == PointSet{4});
  REQUIRE_FALSE(g.is_transitive());
  REQUIRE(symmetric_group(6).is_transitive());

  PermGroup fix0 = point_fixing_extension(symmetric_group(5));
  auto o2 = fix0.orbits();
  REQUIRE(o2.size() == 2);
  REQUIRE(o2[1] == PointSet{5});
}

TEST_CASE("k-transitivity and k-homogeneity") {
  REQUIRE(is_k_homogeneous(symmetric_group(5), 3));
  REQUIRE_FALSE(is_k_homogeneous(cyclic_group(5), 2));
  REQUIRE(is_k_transitive(catalog_group("M11"), 4));
  REQUIRE_FALSE(is_k_transitive(catalog_group("M11"), 5));
  REQUIRE(is_k_transitive(catalog_group("M12"), 5));
  REQUIRE(is_k_transitive(catalog_group("PGL(2,7)"), 3));
  REQUIRE_FALSE(is_k_transitive(catalog_group("PSL(2,7)"), 3));
  REQUIRE(is_k_homogeneous(catalog_group("PSL(2,7)"), 3));
}

TEST_CASE("M24 is 5-transitive") {
  PermGroup g = catalog_group("M24");
  REQUIRE(is_k_transitive(g, 5));
}

TEST_CASE("k-transitive implies k-homogeneous across the catalog") {
  for (const char *name : {"M11", "M12", "PGL(2,7)", "AGL(3,2)", "S7", "A7"}) {
    PermGroup g = catalog_group(name);
    for (unsigned k = 1; k <= 5 && k <= g.degree() / 2; ++k)
      if (is_k_transitive(g, k)) REQUIRE(is_k_homogeneous(g, k));
  }
}
