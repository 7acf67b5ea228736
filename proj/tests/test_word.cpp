#include <doctest.h>

#include <random>

#include "tautwist/word.hpp"

using namespace tautwist;

namespace {

// Oracle: repeatedly delete the first adjacent cancelling pair.
std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::vector<Letter> random_letters(std::mt19937& rng, std::size_t len, std::uint32_t ngens) {
  std::uniform_int_distribution<std::uint32_t> g(0, ngens - 1);
  std::bernoulli_distribution s(0.5);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back({g(rng), s(rng) ? 1 : -1});
  return out;
}

const std::vector<std::string> kNames{"x1", "x2", "x3"};

}  // namespace

TEST_CASE("free reduction agrees with the naive oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = random_letters(rng, 1 + trial % 20, 2);
    CHECK(Word(raw).letters() == naive_reduce(raw));
  }
}

TEST_CASE("group laws hold in the free group") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word a(random_letters(rng, 8, 3)), b(random_letters(rng, 8, 3)), c(random_letters(rng, 8, 3));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * invert(a)).empty());
    CHECK(invert(a * b) == invert(b) * invert(a));
    CHECK(conjugate(a, b) == b * a * invert(b));
  }
}

TEST_CASE("powers") {
  Word x = Word::generator(0);
  CHECK(power(x, 3).size() == 3);
  CHECK(power(x, -2) == invert(power(x, 2)));
  CHECK(power(x, 0).empty());
  Word ab{pos(0), pos(1)};
  CHECK(power(ab, 2) == Word{pos(0), pos(1), pos(0), pos(1)});
}

TEST_CASE("cyclic reduction and rotation") {
  Word w{pos(1), pos(0), pos(2), neg(1)};
  CHECK(cyclic_reduce(w) == Word{pos(0), pos(2)});
  Word r{pos(0), pos(1), pos(2)};
  CHECK(rotate(r, 1) == Word{pos(1), pos(2), pos(0)});
  CHECK(rotate(r, -1) == Word{pos(2), pos(0), pos(1)});
  CHECK(rotate(r, 3) == r);
}

TEST_CASE("exponent sums and occurrences") {
  Word w{pos(0), pos(1), neg(0), neg(0), pos(2)};
  CHECK(w.exponent_sum(0) == -1);
  CHECK(w.occurrences(0) == 3);
  CHECK(w.generator_bound() == 3);
  CHECK_FALSE(Word{pos(1)}.contains(0));
}

TEST_CASE("substitution") {
  Word w{pos(0), neg(1), pos(0)};
  Word img{pos(2), pos(2)};
  CHECK(substitute(w, 1, img) == Word{pos(0), neg(2), neg(2), pos(0)});
  std::vector<Word> images{Word{pos(1)}, Word{pos(0)}, Word{pos(2)}};
  CHECK(substitute_all(w, images) == Word{pos(1), neg(0), pos(1)});
}

TEST_CASE("parse and render round trip") {
  Word w = parse_word("x1*(x2*x1)^2*x3^-1", kNames);
  CHECK(w == Word{pos(0), pos(1), pos(0), pos(1), pos(0), neg(2)});
  CHECK(render_word(w, kNames) == "x1*x2*x1*x2*x1*x3^-1");
  CHECK(parse_word(render_word(w, kNames), kNames) == w);
  CHECK(render_word(Word{}, kNames) == "1");
  CHECK(render_word(Word::generator(1, 3), kNames) == "x2^3");
  CHECK(parse_word("x1*x2 = x2*x1", kNames) == Word{pos(0), pos(1), neg(0), neg(1)});
  CHECK(parse_word("1", kNames).empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_word("x1*y", kNames), ParseError);
  CHECK_THROWS_AS(parse_word("(x1", kNames), ParseError);
  CHECK_THROWS_AS(parse_word("x1^", kNames), ParseError);
}
