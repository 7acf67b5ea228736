#include <doctest.h>

#include <algorithm>
#include <set>

#include "tautwist/abelian.hpp"
#include "tautwist/builders.hpp"
#include "tautwist/enumeration.hpp"

using namespace tautwist;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

// Oracle: order of a permutation group by closure.
std::size_t closure_order(const std::vector<Perm>& gens) {
  Perm id(gens[0].size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// The images must satisfy every relator for the closure to bound the order.
bool satisfies(const Presentation& p, const std::vector<Perm>& images) {
  for (const Word& r : p.relators()) {
    Perm x(images[0].size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<int>(i);
    for (Letter l : r.letters()) x = compose(x, l.sign > 0 ? images[l.gen] : inverse(images[l.gen]));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Perm rotation(int n) {
  Perm r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
  return r;
}

Perm reflection(int n) {
  Perm s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (n - i) % n;
  return s;
}

Perm transposition(int n, int a, int b) {
  Perm t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
  std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]);
  return t;
}

Completed enumerate(const Presentation& p, std::size_t budget = 100'000) {
  auto out = todd_coxeter(p, std::nullopt, budget);
  REQUIRE(std::holds_alternative<Completed>(out));
  return std::get<Completed>(out);
}

}  // namespace

TEST_CASE("dihedral orders agree with the permutation oracle") {
  for (int m = 3; m <= 15; ++m) {
    Presentation p = dihedral(m);
    // a is a reflection, b the rotation: a², (ab)², b^m hold.
    std::vector<Perm> images{reflection(m), rotation(m)};
    REQUIRE(satisfies(p, images));
    Completed c = enumerate(p);
    CHECK(c.order == closure_order(images));
    CHECK(table_is_consistent(p, c.table));
  }
}

TEST_CASE("finite Coxeter quotients agree with symmetric group oracles") {
  // W(3,3,2) acts faithfully on 4 points by adjacent transpositions.
  Presentation a3 = coxeter(3, 3, 2);
  std::vector<Perm> s4{transposition(4, 0, 1), transposition(4, 1, 2), transposition(4, 2, 3)};
  REQUIRE(satisfies(a3, s4));
  CHECK(enumerate(a3).order == closure_order(s4));
  // W(2,2,2) = (Z2)^3 on 6 points.
  Presentation z2cubed = coxeter(2, 2, 2);
  std::vector<Perm> flips{transposition(6, 0, 1), transposition(6, 2, 3), transposition(6, 4, 5)};
  REQUIRE(satisfies(z2cubed, flips));
  CHECK(enumerate(z2cubed).order == closure_order(flips));
}

TEST_CASE("tau family orders") {
  for (long n = 0; n <= 6; ++n) CHECK(enumerate(tau_torus2(n).base).order == static_cast<std::size_t>(4 * n + 2));
  CHECK(enumerate(dihedral(3), 10'000).order == 6);
}

TEST_CASE("infinite Coxeter group exceeds the budget") {
  auto out = todd_coxeter(coxeter(3, 3, std::nullopt), std::nullopt, 10'000);
  REQUIRE(std::holds_alternative<BudgetExceeded>(out));
  CHECK(std::get<BudgetExceeded>(out).max_live_reached >= 10'000);
  auto free_group = todd_coxeter(parse_presentation("< x1 | >"), std::nullopt, 50);
  CHECK(std::holds_alternative<BudgetExceeded>(free_group));
}

TEST_CASE("enumeration is deterministic") {
  Presentation p = tau_torus(3, 4).base;
  Completed a = enumerate(p), b = enumerate(p);
  CHECK(a.table.rows == b.table.rows);
  CHECK(a.stats.total_defined == b.stats.total_defined);
}

TEST_CASE("coset tables are closed permutation actions") {
  Completed c = enumerate(fixture("12a990"));
  CHECK(c.order == 240);
  CHECK(table_is_consistent(fixture("12a990"), c.table));
  for (std::uint32_t coset = 0; coset < c.table.num_live(); ++coset)
    for (std::uint32_t g = 0; g < c.table.ngens; ++g)
      CHECK(c.table.act(c.table.act(coset, pos(g)), neg(g)) == coset);
}

TEST_CASE("multiplication tables are groups") {
  for (const Presentation& p : {cyclic(4), tau_torus2(1).base, dihedral(7), tau_torus(3, 4).base}) {
    GroupTable t = multiplication_table(todd_coxeter(p, std::nullopt, 10'000));
    const std::uint32_t n = static_cast<std::uint32_t>(t.order);
    for (std::uint32_t a = 0; a < n; ++a) {
      CHECK(t(0, a) == a);
      CHECK(t(a, 0) == a);
      CHECK(t(a, t.inverse(a)) == 0);
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; c += 5) CHECK(t(t(a, b), c) == t(a, t(b, c)));
    }
  }
  GroupTable z4 = multiplication_table(todd_coxeter(cyclic(4), std::nullopt, 100));
  CHECK(z4.order == 4);
  CHECK(z4.element_order(z4.generators[0]) == 4);
  CHECK(multiplication_table(todd_coxeter(dihedral(7), std::nullopt, 100)).order == 14);
  CHECK_THROWS(multiplication_table(todd_coxeter(coxeter(3, 3, std::nullopt), std::nullopt, 100)));
}

TEST_CASE("index-2 parity kernels") {
  Presentation d3 = dihedral(3);
  Index2Spec a_odd{{1, 0}};
  auto out = todd_coxeter(d3, a_odd, 1000);
  REQUIRE(std::holds_alternative<Completed>(out));
  CHECK(std::get<Completed>(out).order == 2);
  Presentation kernel = reidemeister_schreier_index2(d3, a_odd);
  CHECK(enumerate(kernel).order == 3);

  for (long n = 1; n <= 3; ++n) {
    Presentation p = tau_torus2(n).base;
    Presentation k = reidemeister_schreier_index2(p, Index2Spec{{1, 1}});
    CHECK(enumerate(k).order == static_cast<std::size_t>(2 * n + 1));
  }
  // Index 2 means the kernel has half the order.
  for (const Presentation& p : {tau_torus(3, 4).base, coxeter(3, 3, 2), coxeter(3, 5, 2)}) {
    Index2Spec all{std::vector<int>(p.ngens(), 1)};
    CHECK(2 * enumerate(reidemeister_schreier_index2(p, all)).order == enumerate(p).order);
    auto words = index2_subgroup_generators(p, all);
    auto idx = todd_coxeter_words(p, words, 10'000);
    REQUIRE(std::holds_alternative<Completed>(idx));
    CHECK(std::get<Completed>(idx).order == 2);
  }
}

TEST_CASE("kernel of the infinite Coxeter group") {
  Presentation p = coxeter(3, 3, std::nullopt);
  Presentation k = reidemeister_schreier_index2(p, Index2Spec{{1, 1, 1}});
  // Oracle: the rotation subgroup abelianizes through the relator exponent matrix.
  AbelianInvariants ab = abelianization(k);
  CHECK(ab == abelianization(k));
  CHECK(render_abelian(ab) == "Z3 x Z3");
}

TEST_CASE("invalid parity specs") {
  CHECK_THROWS_AS(validate_index2(dihedral(3), Index2Spec{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_index2(dihedral(3), Index2Spec{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_index2(dihedral(3), Index2Spec{{1}}), std::invalid_argument);
  CHECK_NOTHROW(validate_index2(dihedral(4), Index2Spec{{0, 1}}));
}
