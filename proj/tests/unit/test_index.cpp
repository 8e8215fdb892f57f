#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "pqech/index.hpp"

using namespace pqech;

namespace {

// All ECH generators (hyperbolic 0/1) with total multiplicity exactly m.
std::vector<OrbitSet> generators_of_total(Int genus, Int m) {
  std::vector<OrbitSet> out;
  const auto n = static_cast<std::size_t>(2 * genus);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Int> hyp(n);
    Int h = 0;
    for (std::size_t i = 0; i < n; ++i) h += hyp[i] = (mask >> i) & 1u;
    if (h > m) continue;
    for (Int mp = 0; mp <= m - h; ++mp) out.emplace_back(mp, hyp, m - h - mp);
  }
  return out;
}

}  // namespace

TEST_CASE("ech_index examples") {
  CHECK(ech_index(PrequantizationBundle(0, -1), OrbitSet(0, {}, 1), 0) == 0);
  CHECK(ech_index(PrequantizationBundle(3, -4), OrbitSet::empty(3), 0) == 0);
  CHECK(ech_index(PrequantizationBundle(1, -2), OrbitSet(2, {0, 0}, 0), 1) == 4);
  CHECK_THROWS_AS(ech_index(PrequantizationBundle(1, -2), OrbitSet(2, {}, 0), 1), InputError);
  CHECK_THROWS_AS(ech_index(PrequantizationBundle(0, -1), OrbitSet(1 << 30, {}, 0), Int(1) << 40), OverflowError);
}

TEST_CASE("index_ambiguity examples") {
  CHECK(index_ambiguity(PrequantizationBundle(0, -1), OrbitSet(0, {}, 1), 0, 1) == 2);
  CHECK(index_ambiguity(PrequantizationBundle(0, -5), OrbitSet::empty(0), 0, 0) == 0);
  CHECK(index_ambiguity(PrequantizationBundle(1, -2), OrbitSet(2, {0, 0}, 0), 4, 1) == 4);
}

TEST_CASE("fredholm_index examples") {
  CHECK(fredholm_index(PrequantizationBundle(0, -1), {0, 0, 0, 1, 0}) == 0);
  CHECK(fredholm_index(PrequantizationBundle(1, -5), {1, 0, 0, 0, 0}) == 0);
  CHECK(fredholm_index(PrequantizationBundle(0, -1), {0, 0, 0, 1, 1}) == 2);
  CHECK_THROWS_AS(fredholm_index(PrequantizationBundle(0, -1), {0, 1, 1, 1, 0}), InputError);
  CHECK_THROWS_AS(fredholm_index(PrequantizationBundle(0, -1), {-1, 0, 0, 1, 0}), InputError);
}

TEST_CASE("two_i_minus_ind examples") {
  const PrequantizationBundle s1(0, -1);
  CHECK(two_i_minus_ind(s1, OrbitSet(0, {}, 1), 0, {0, 0, 0, 1, 0}) == 0);
  CHECK(two_i_minus_ind(s1, OrbitSet::empty(0), 0, {0, 0, 0, 0, 0}) == 2);
  CHECK(two_i_minus_ind(PrequantizationBundle(1, -2), OrbitSet(2, {0, 0}, 0), 1, {0, 0, 2, 2, 1}) == 6);
  CHECK_THROWS_AS(two_i_minus_ind(s1, OrbitSet(0, {}, 1), 0, {0, 0, 0, 2, 0}), InputError);
  CHECK_THROWS_AS(two_i_minus_ind(s1, OrbitSet(0, {}, 1), 1, {0, 0, 0, 1, 0}), InputError);
  CHECK_THROWS_AS(two_i_minus_ind(PrequantizationBundle(1, -1), OrbitSet(0, {1, 0}, 0), 0, {0, 0, 0, 1, 0}),
                  InputError);
}

TEST_CASE("relative_index examples") {
  const PrequantizationBundle t1(1, -1);
  OrbitSet a(2, {0, 0}, 0);
  CHECK(relative_index(t1, a, a) == 0);
  CHECK(relative_index(t1, OrbitSet(2, {0, 0}, 0), OrbitSet(0, {0, 0}, 2)) == 4);
  CHECK(relative_index(PrequantizationBundle(0, -1), OrbitSet(0, {}, 1), OrbitSet::empty(0)) == 2);
  CHECK_THROWS_AS(relative_index(PrequantizationBundle(0, -2), OrbitSet(0, {}, 1), OrbitSet::empty(0)), InputError);
}

TEST_CASE("grading examples") {
  CHECK(grading(PrequantizationBundle(2, -3), OrbitSet::empty(2)) == 0);
  CHECK(grading(PrequantizationBundle(1, -2), OrbitSet(2, {0, 0}, 0)) == 4);
  CHECK(grading(PrequantizationBundle(0, -1), OrbitSet(0, {}, 1)) == 2);
  CHECK(grading(PrequantizationBundle(1, -1), OrbitSet(0, {1, 0}, 0)) == 1);  // odd: one hyperbolic orbit
  CHECK_THROWS_AS(grading(PrequantizationBundle(0, -2), OrbitSet(0, {}, 1)), InputError);
  CHECK_THROWS_AS(grading(PrequantizationBundle(1, -1), OrbitSet(0, {2, 0}, 0)), InputError);
}

TEST_CASE("partition conditions") {
  CHECK(partition_of(OrbitKind::NegativeElliptic, 3) == std::vector<Int>{3});
  CHECK(partition_of(OrbitKind::PositiveElliptic, 3) == std::vector<Int>{1, 1, 1});
  CHECK(partition_of(OrbitKind::PositiveHyperbolic, 1) == std::vector<Int>{1});
  CHECK_THROWS_AS(partition_of(OrbitKind::NegativeElliptic, 0), InputError);
}

TEST_CASE("grading equals relative index to the empty set, exhaustively") {
  // M <= 60, |e| <= 6, g <= 2
  for (Int genus = 0; genus <= 2; ++genus) {
    for (Int abs_e = 1; abs_e <= 6; ++abs_e) {
      const PrequantizationBundle b(genus, -abs_e);
      for (Int m = 0; m <= 60; m += abs_e) {
        for (const auto& alpha : generators_of_total(genus, m)) {
          const Int gr = grading(b, alpha);
          REQUIRE(gr == relative_index(b, alpha, OrbitSet::empty(genus)));
          // parity is the number of hyperbolic orbits
          REQUIRE(arith::mod(gr, 2) == alpha.hyperbolic_total() % 2);
          oracle::Tuple t{alpha.m_plus(), alpha.m_hyp(), alpha.m_minus()};
          REQUIRE(gr == oracle::raw_index(genus, -abs_e, t, m / abs_e));
        }
      }
    }
  }
}

TEST_CASE("grading is even on the sphere") {
  for (Int abs_e = 1; abs_e <= 6; ++abs_e) {
    const PrequantizationBundle b(0, -abs_e);
    for (Int m = 0; m <= 60; m += abs_e)
      for (const auto& alpha : generators_of_total(0, m)) REQUIRE(grading(b, alpha) % 2 == 0);
  }
}

TEST_CASE("relative index is additive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> mult(0, 8);
  for (int i = 0; i < 20000; ++i) {
    const Int genus = i % 3;
    const Int abs_e = 1 + i % 4;
    const PrequantizationBundle b(genus, -abs_e);
    auto draw = [&](Int residue) {
      std::vector<Int> hyp(static_cast<std::size_t>(2 * genus));
      for (auto& h : hyp) h = mult(rng) % 2;
      OrbitSet o(mult(rng), hyp, mult(rng));
      // pad e- until the class matches
      while (gamma_class(b, o).value != residue) o = o + OrbitSet(0, std::vector<Int>(hyp.size(), 0), 1);
      return o;
    };
    const Int residue = mult(rng) % abs_e;
    OrbitSet x = draw(residue), y = draw(residue), z = draw(residue);
    REQUIRE(relative_index(b, x, y) + relative_index(b, y, z) == relative_index(b, x, z));
    REQUIRE(relative_index(b, x, y) == -relative_index(b, y, x));
  }
}
