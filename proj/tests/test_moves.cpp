#include <doctest.h>

#include <random>

#include "tautwist/abelian.hpp"
#include "tautwist/builders.hpp"
#include "tautwist/enumeration.hpp"
#include "tautwist/moves.hpp"

using namespace tautwist;

namespace {

std::optional<std::size_t> order_of(const Presentation& p, std::size_t budget = 20'000) {
  auto out = todd_coxeter(p, std::nullopt, budget);
  if (auto* c = std::get_if<Completed>(&out)) return c->order;
  return std::nullopt;
}

Word random_word(std::mt19937& rng, std::uint32_t ngens, std::size_t len) {
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < len; ++i) raw.push_back({static_cast<std::uint32_t>(rng() % ngens), rng() % 2 ? 1 : -1});
  return Word(raw);
}

Move random_move(const Presentation& p, std::mt19937& rng) {
  const std::size_t n = p.relators().size();
  auto rel = [&] { return static_cast<std::size_t>(rng() % n); };
  switch (rng() % 7) {
    case 0: return move::CyclicPermute{rel(), static_cast<long>(rng() % 7) - 3};
    case 1: return move::InvertRelator{rel()};
    case 2: return move::ConjugateRelator{rel(), random_word(rng, p.ngens(), 3)};
    case 3: return move::SlideMultiply{rel(), rel()};
    case 4: return move::AlphaFlip{rel(), static_cast<std::size_t>(rng() % 12)};
    case 5: return move::BetaSwap{rel()};
    default: return move::FreeReduce{rel()};
  }
}

}  // namespace

TEST_CASE("AlphaFlip turns the 12n556 relator into the 12n553 one") {
  Presentation p = apply_move(fixture("12n556"), move::AlphaFlip{1, 1});
  CHECK(p.relator(1) == fixture("12n553").relator(1));
}

TEST_CASE("AlphaFlip is an involution and keeps the shape") {
  Presentation p = fixture("12n553");
  for (std::size_t rel : {1u, 2u}) {
    for (std::size_t at = 1; at < p.relator(rel).size(); ++at) {
      Presentation q = apply_move(p, move::AlphaFlip{rel, at});
      CHECK(is_tau_shape(q));
      CHECK(apply_move(q, move::AlphaFlip{rel, at}).same_structure(p));
    }
  }
}

TEST_CASE("AlphaFlip refuses the head and the square relator") {
  Presentation p = tau_torus2(1).base;
  CHECK_THROWS_AS(apply_move(p, move::AlphaFlip{1, 0}), IllegalMove);
  CHECK_THROWS_AS(apply_move(p, move::AlphaFlip{0, 1}), IllegalMove);
  CHECK_THROWS_AS(apply_move(p, move::AlphaFlip{1, 99}), IllegalMove);
  CHECK_THROWS_AS(apply_move(dihedral(3), move::AlphaFlip{1, 1}), IllegalMove);
}

TEST_CASE("BetaSwap moves the square along a conjugation relator") {
  Presentation p = parse_presentation("< a, b, c | a^2, a*c*b*c^-1, b*a*c*a^-1 >");
  Presentation q = apply_move(p, move::BetaSwap{1});
  CHECK(q.relator(0) == Word::generator(1, 2));
  CHECK(q.relator(1) == p.relator(1));
  CHECK(is_tau_shape(q));
  CHECK(apply_move(q, move::BetaSwap{1}).same_structure(p));
  CHECK_THROWS_AS(apply_move(p, move::BetaSwap{2}), IllegalMove);
}

TEST_CASE("SlideMultiply") {
  Presentation p = parse_presentation("< a | a^2, a^3 >");
  CHECK(apply_move(p, move::SlideMultiply{0, 1}).relator(1) == Word::generator(0, 5));
  CHECK_THROWS_AS(apply_move(p, move::SlideMultiply{1, 1}), IllegalMove);
}

TEST_CASE("AddConsequence checks its derivation") {
  Presentation p = dihedral(3);
  // a² conjugated by b, times b³.
  Derivation d{{0, parse_word("b", p), 1}, {2, Word{}, 1}};
  Word claimed = evaluate_derivation(p, d);
  CHECK(apply_move(p, move::AddConsequence{claimed, d}).relators().size() == 4);
  CHECK_THROWS_AS(apply_move(p, move::AddConsequence{parse_word("a*b", p), d}), IllegalMove);
  CHECK_THROWS_AS(apply_move(p, move::AddConsequence{claimed, {{7, Word{}, 1}}}), IllegalMove);
}

TEST_CASE("RemoveRelator needs a duplicate or a derivation avoiding it") {
  Presentation p = parse_presentation("< a, b | a^2, b^3, b^-3, (a*b)^2 >");
  CHECK(apply_move(p, move::RemoveRelator{2, {}}).relators().size() == 3);
  CHECK_THROWS_AS(apply_move(p, move::RemoveRelator{3, {}}), IllegalMove);
  CHECK_THROWS_AS(apply_move(p, move::RemoveRelator{3, {{3, Word{}, 1}}}), IllegalMove);
  CHECK(apply_move(p, move::RemoveRelator{1, {{2, Word{}, -1}}}).relators().size() == 3);
}

TEST_CASE("AddGenerator and RemoveGenerator") {
  Presentation p = dihedral(5);
  Presentation q = apply_move(p, move::AddGenerator{parse_word("a*b", p), "c"});
  CHECK(q.names().back() == "c");
  CHECK(q.relators().back() == parse_word("c*b^-1*a^-1", q));
  CHECK_THROWS_AS(apply_move(q, move::AddGenerator{Word{}, "a"}), IllegalMove);
  // Eliminating b through c = ab gives b = a⁻¹c.
  Presentation r = apply_move(q, move::RemoveGenerator{1, 3});
  CHECK(r.ngens() == 2);
  CHECK(order_of(r) == 10u);
  CHECK_THROWS_AS(apply_move(p, move::RemoveGenerator{0, 0}), IllegalMove);
}

TEST_CASE("fresh generator names") {
  CHECK(fresh_generator_name({"x1", "x2"}) == "x3");
  CHECK(fresh_generator_name({"x3", "a"}) == "x4");
}

TEST_CASE("random legal moves preserve the order and the abelianization") {
  std::mt19937 rng(5);
  std::vector<Presentation> finite{tau_torus2(1).base, tau_torus2(3).base, dihedral(7),
                                   tau_torus(3, 4).base, fixture("12a990")};
  for (const Presentation& start : finite) {
    const auto order = order_of(start);
    REQUIRE(order.has_value());
    const AbelianInvariants ab = abelianization(start);
    Presentation p = start;
    int applied = 0;
    for (int step = 0; step < 40; ++step) {
      try {
        p = apply_move(p, random_move(p, rng));
        ++applied;
      } catch (const IllegalMove&) {
      }
      if (step % 8 == 7) {
        INFO(render_presentation(p));
        CHECK(order_of(p, 1'000'000) == order);
        CHECK(abelianization(p) == ab);
      }
    }
    CHECK(applied > 0);
  }
}

TEST_CASE("random shape moves keep fixtures certified") {
  std::mt19937 rng(9);
  for (const auto& name : fixture_names()) {
    if (!fixture_is_tau(name)) continue;
    Presentation p = fixture(name);
    const AbelianInvariants ab = abelianization(p);
    for (int step = 0; step < 30; ++step) {
      std::size_t rel = 1 + rng() % (p.relators().size() - 1);
      Move m = rng() % 3 ? Move{move::AlphaFlip{rel, 1 + rng() % (p.relator(rel).size() - 1)}}
                         : Move{move::BetaSwap{rel}};
      try {
        p = apply_move(p, m);
      } catch (const IllegalMove&) {
        continue;
      }
      CHECK(is_tau_shape(p));
    }
    CHECK(abelianization(p) == ab);
  }
}

TEST_CASE("replay reports the failing move") {
  MoveScript s{dihedral(3), {move::InvertRelator{0}, move::SlideMultiply{2, 2}}, std::nullopt, "bad"};
  try {
    replay(s);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.index() == 1);
  }
  MoveScript empty{dihedral(3), {}, dihedral(3), "empty"};
  ReplayResult r = replay(empty);
  CHECK(r.final == dihedral(3));
  CHECK(r.matches_expected == true);
}
