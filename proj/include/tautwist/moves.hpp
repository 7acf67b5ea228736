#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tautwist/presentation.hpp"

namespace tautwist {

/// One factor u · r^sign · u⁻¹ of a derivation; `rel` indexes the relators of
/// the presentation the move is applied to.
struct DerivationStep {
  std::size_t rel = 0;
  Word conjugator;
  int sign = 1;
};
using Derivation = std::vector<DerivationStep>;

/// Product of the derivation factors, freely reduced.
Word evaluate_derivation(const Presentation& p, const Derivation& d);

namespace move {
struct FreeReduce { std::size_t rel; };
struct CyclicPermute { std::size_t rel; long shift; };
struct InvertRelator { std::size_t rel; };
struct ConjugateRelator { std::size_t rel; Word by; };
/// r_dst := r_src · r_dst
struct SlideMultiply { std::size_t src; std::size_t dst; };
/// Appends `word` after checking it equals the derivation up to cyclic reduction.
struct AddConsequence { Word word; Derivation derivation; };
/// Legal if the relator duplicates another one (up to rotation and
/// inversion), or if `derivation` expresses it from the other relators.
struct RemoveRelator { std::size_t rel; Derivation derivation; };
/// Appends generator g with relator g · defining⁻¹.
struct AddGenerator { Word defining; std::string name; };
/// `via` must contain `gen` exactly once; gen is solved for and eliminated.
struct RemoveGenerator { std::uint32_t gen; std::size_t via; };
/// Flips one letter of the conjugation data of a τ-shaped relator.
struct AlphaFlip { std::size_t rel; std::size_t pos; };
/// Moves the square relator along a conjugation relator.
struct BetaSwap { std::size_t rel; };
}  // namespace move

using Move = std::variant<move::FreeReduce, move::CyclicPermute, move::InvertRelator,
                          move::ConjugateRelator, move::SlideMultiply, move::AddConsequence,
                          move::RemoveRelator, move::AddGenerator, move::RemoveGenerator,
                          move::AlphaFlip, move::BetaSwap>;

std::string move_name(const Move& m);
/// First x<k> (k >= names.size()+1) not already taken; AddGenerator uses it when no name is given.
std::string fresh_generator_name(const std::vector<std::string>& names);

class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(std::string op, const std::string& reason)
      : std::runtime_error(op + ": " + reason), op_(std::move(op)), reason_(reason) {}
  [[nodiscard]] const std::string& op() const { return op_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  std::string op_;
  std::string reason_;
};

/// Applies one move and returns the new presentation with every relator
/// cyclically reduced. Throws IllegalMove; the input is never modified.
Presentation apply_move(const Presentation& p, const Move& m);

struct MoveScript {
  Presentation initial;
  std::vector<Move> moves;
  std::optional<Presentation> expected_final;
  std::string name;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t index, const IllegalMove& cause)
      : std::runtime_error("move " + std::to_string(index) + " (" + cause.what() + ")"),
        index_(index),
        reason_(cause.reason()) {}
  [[nodiscard]] std::size_t index() const { return index_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

struct ReplayResult {
  Presentation final;
  std::size_t moves_applied = 0;
  /// Set only when the script carries an expected final presentation.
  std::optional<bool> matches_expected;
};

/// Replays every move; throws ReplayError at the first illegal one.
ReplayResult replay(const MoveScript& script);

}  // namespace tautwist
