#include <catch2/catch_amalgamated.hpp>

#include "tvlab/bigint.hpp"
#include "tvlab/perm.hpp"

using namespace tvlab;

TEST_CASE("composition is a right action") {
  // identity composition
  Permutation p = Permutation::from_cycles(3, {{0, 1, 2}});
  Permutation id(3);
  REQUIRE(p * id == p);
  REQUIRE(id * p == p);

  // involution squares to the identity
  Permutation t = Permutation::from_cycles(3, {{0, 1}});
  REQUIRE((t * t).is_identity());

  // convention pin: apply p first, then q
  Permutation q = Permutation::from_cycles(3, {{0, 1}});
  Permutation r = p * q;
  REQUIRE(r[0] == 0);  // (0)p = 1, (1)q = 0
  REQUIRE(r[1] == 2);
  REQUIRE(r[2] == 1);
}

TEST_CASE("inverse and associativity") {
  Permutation a = Permutation::from_cycles(6, {{0, 3, 4}, {1, 5}});
  Permutation b = Permutation::from_cycles(6, {{2, 3}});
  Permutation c = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  REQUIRE((a * a.inverse()).is_identity());
  REQUIRE((a * b) * c == a * (b * c));
}

TEST_CASE("degree mismatch and bad images are rejected") {
  Permutation a(3), b(4);
  REQUIRE_THROWS_AS(a * b, std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("cycle string round trip") {
  Permutation a = Permutation::from_cycles(5, {{0, 2}, {1, 4, 3}});
  REQUIRE(a.cycle_string() == "(1 3)(2 5 4)");
  REQUIRE(Permutation(4).cycle_string() == "()");
}

TEST_CASE("big integers") {
  BigUint f(1);
  for (unsigned i = 2; i <= 24; ++i) f *= i;
  REQUIRE(f.str() == "620448401733239439360000");
  REQUIRE(BigUint::binomial(24, 7).as_u64() == 346104);
  REQUIRE(BigUint::binomial(175, 5).str() == "1291150035");
  BigUint a(12), b(30);
  a += b;
  REQUIRE(a.as_u64() == 42);
  REQUIRE(BigUint(7) < BigUint(8));
  REQUIRE(BigUint::binomial(5, 9).is_zero());
}
