#include <doctest.h>

#include <random>

#include "tautwist/laurent.hpp"

using namespace tautwist;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::vector<mpz_class> c;
  const std::size_t len = rng() % 6;
  for (std::size_t i = 0; i < len; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
  return LaurentPoly(static_cast<long>(rng() % 9) - 4, c);
}

// Oracle: direct rational evaluation of Σ cᵢ tⁱ.
mpq_class eval(const LaurentPoly& p, const mpq_class& t) {
  mpq_class sum = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    long e = p.min_exp() + static_cast<long>(i);
    mpq_class term = p.coeffs()[i];
    for (long k = 0; k < std::labs(e); ++k) term = e > 0 ? mpq_class(term * t) : mpq_class(term / t);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("normalization trims zero ends") {
  LaurentPoly p(-2, {0, 0, 3, 0, -1, 0});
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 2);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(7) == 0);
  CHECK(LaurentPoly(5, {0, 0}).is_zero());
  CHECK(LaurentPoly(5, {0, 0}) == LaurentPoly());
}

TEST_CASE("arithmetic agrees with evaluation") {
  std::mt19937 rng(17);
  const std::vector<mpq_class> points{mpq_class(2), mpq_class(-3), mpq_class(1, 2), mpq_class(-5, 3)};
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    for (const mpq_class& t : points) {
      CHECK(eval(a + b, t) == eval(a, t) + eval(b, t));
      CHECK(eval(a - b, t) == eval(a, t) - eval(b, t));
      CHECK(eval(a * b, t) == eval(a, t) * eval(b, t));
      CHECK(eval(-a, t) == -eval(a, t));
      CHECK(eval(a.mirrored(), t) == eval(a, 1 / t));
      CHECK(eval(a.shifted(3), t) == eval(a, t) * t * t * t);
    }
    CHECK(a.evaluate(-1) == eval(a, -1));
    CHECK(a.evaluate(1) == eval(a, 1));
    if (a.min_exp() >= 0) CHECK(a.evaluate(2) == eval(a, 2));
  }
}

TEST_CASE("evaluation at other points needs non-negative exponents") {
  CHECK_THROWS_AS((void)LaurentPoly::monomial(-1).evaluate(2), std::domain_error);
  CHECK(LaurentPoly::monomial(-1).evaluate(-1) == -1);
}

TEST_CASE("dot equality") {
  LaurentPoly delta(-1, {1, -1, 1});
  LaurentPoly shifted(0, {1, -1, 1});
  CHECK(dot_equal(delta, shifted));
  CHECK(dot_normal_form(delta) == shifted);
  CHECK(dot_normal_form(-delta) == shifted);
  CHECK_FALSE(dot_equal(delta, LaurentPoly(0, {1, 1, 1})));
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    for (long k = -8; k <= 8; ++k) {
      CHECK(dot_equal(p, p.shifted(k)));
      CHECK(dot_equal(p, -p.shifted(k)));
      CHECK(dot_equal(p.shifted(k), p));
    }
    LaurentPoly q = random_poly(rng), r = random_poly(rng);
    if (dot_equal(p, q) && dot_equal(q, r)) CHECK(dot_equal(p, r));
  }
}

TEST_CASE("rendering") {
  CHECK(render(LaurentPoly()) == "0");
  CHECK(render(LaurentPoly(-1, {1, -1, 1})) == "t^-1 - 1 + t");
  CHECK(render(LaurentPoly(0, {-2, 0, 3})) == "-2 + 3*t^2");
  CHECK(render(LaurentPoly::monomial(0, 7)) == "7");
}
