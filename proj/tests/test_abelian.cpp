#include <doctest.h>

#include <numeric>
#include <random>

#include "tautwist/abelian.hpp"
#include "tautwist/builders.hpp"

using namespace tautwist;

namespace {

using Small = std::vector<std::vector<long long>>;

long long laplace(const Small& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Small minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    sum += (c % 2 ? -1 : 1) * m[0][c] * laplace(minor);
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Oracle: invariant factors as quotients of determinantal divisors (gcd of k×k minors).
std::vector<long long> invariant_factors(const Small& a) {
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Small m;
        for (std::size_t i : r) {
          std::vector<long long> row;
          for (std::size_t j : c) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = std::gcd(g, laplace(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix to_mpz(const Small& a) {
  IntMatrix out;
  for (const auto& row : a) {
    std::vector<mpz_class> r;
    for (long long v : row) r.emplace_back(static_cast<long>(v));
    out.push_back(r);
  }
  return out;
}

AbelianInvariants invariants(std::vector<long> torsion, std::size_t rank) {
  AbelianInvariants a;
  for (long t : torsion) a.torsion.emplace_back(t);
  a.free_rank = rank;
  return a;
}

}  // namespace

TEST_CASE("Smith form matches determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    Small a(rows, std::vector<long long>(cols));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<long long>(rng() % 13) - 6;
    SmithForm s = smith_normal_form(to_mpz(a));
    REQUIRE(verify_smith(to_mpz(a), s));
    std::vector<mpz_class> diag = s.diagonal();
    std::vector<long long> expected = invariant_factors(a);
    std::vector<long long> nonzero;
    for (const mpz_class& d : diag) {
      CHECK(d >= 0);
      if (d != 0) nonzero.push_back(d.get_si());
    }
    CHECK(nonzero == expected);
    for (std::size_t i = 1; i < nonzero.size(); ++i) CHECK(nonzero[i] % nonzero[i - 1] == 0);
  }
}

TEST_CASE("Smith form of small fixed matrices") {
  SmithForm s = smith_normal_form(to_mpz({{2, 0}, {0, 0}}));
  CHECK(s.diagonal() == std::vector<mpz_class>{2, 0});
  SmithForm t = smith_normal_form(to_mpz({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(t.diagonal() == std::vector<mpz_class>{2, 6, 12});
  CHECK(verify_smith(to_mpz({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), t));
  SmithForm bad = t;
  bad.d[0][0] = 3;
  CHECK_FALSE(verify_smith(to_mpz({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), bad));
}

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Small a(n, std::vector<long long>(n));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<long long>(rng() % 9) - 4;
    CHECK(determinant(to_mpz(a)) == static_cast<long>(laplace(a)));
  }
  IntMatrix i3 = identity_matrix(3);
  CHECK(multiply(i3, to_mpz({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == to_mpz({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
}

TEST_CASE("abelianizations of standard groups") {
  for (long m = 1; m <= 12; ++m) {
    AbelianInvariants ab = abelianization(dihedral(m));
    CHECK(ab == (m % 2 ? invariants({2}, 0) : invariants({2, 2}, 0)));
    CHECK(abelianization(cyclic(m)) == (m == 1 ? invariants({}, 0) : invariants({m}, 0)));
  }
  CHECK(abelianization(parse_presentation("< x1, x2 | >")) == invariants({}, 2));
  CHECK(abelianization(parse_presentation("< x1 | >")) == invariants({}, 1));
  CHECK(abelianization(coxeter(3, 3, std::nullopt)) == invariants({2}, 0));
  CHECK(abelianization(coxeter(2, 2, 2)) == invariants({2, 2, 2}, 0));
  for (const std::string& name : fixture_names())
    if (fixture_is_tau(name)) CHECK(abelianization(fixture(name)) == invariants({2}, 0));
}

TEST_CASE("relation matrix rows are exponent sums") {
  Presentation p = parse_presentation("< a, b | a^2*b^-1*a, b^3, (a*b)^2 >");
  CHECK(relation_matrix(p) == to_mpz({{3, -1}, {0, 3}, {2, 2}}));
}

TEST_CASE("rendering") {
  CHECK(render_abelian(invariants({}, 0)) == "0");
  CHECK(render_abelian(invariants({2}, 0)) == "Z2");
  CHECK(render_abelian(invariants({2, 4}, 1)) == "Z2 x Z4 x Z^1");
  CHECK(render_abelian(invariants({}, 2)) == "Z^2");
}
