#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tautwist {

/// Index of a generator inside its owning presentation (0-based).
struct Generator {
  std::uint32_t index = 0;
  friend auto operator<=>(Generator, Generator) = default;
};

/// A signed occurrence of a generator.
struct Letter {
  std::uint32_t gen = 0;
  int sign = 1;

  [[nodiscard]] Letter inverse() const { return {gen, -sign}; }
  [[nodiscard]] bool cancels(Letter other) const {
    return gen == other.gen && sign == -other.sign;
  }
  friend auto operator<=>(Letter, Letter) = default;
};

inline Letter pos(std::uint32_t gen) { return {gen, 1}; }
inline Letter neg(std::uint32_t gen) { return {gen, -1}; }

/// Free-group element, always stored freely reduced.
class Word {
 public:
  Word() = default;
  /// Reduces the given raw sequence.
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  static Word generator(std::uint32_t gen, int exponent = 1);

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }

  /// Largest generator index used plus one (0 for the empty word).
  [[nodiscard]] std::uint32_t generator_bound() const;
  [[nodiscard]] bool contains(std::uint32_t gen) const;
  [[nodiscard]] std::size_t occurrences(std::uint32_t gen) const;
  /// Exponent sum of `gen`.
  [[nodiscard]] long exponent_sum(std::uint32_t gen) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Freely reduces a raw letter sequence (single stack pass).
Word reduce(std::span<const Letter> raw);
Word invert(const Word& w);
Word power(const Word& w, long k);
/// reduce(by · w · by⁻¹)
Word conjugate(const Word& w, const Word& by);
/// Strips matching inverse first/last letters until none remain.
Word cyclic_reduce(const Word& w);
/// Rotates left by `shift` (mod length). The input must be cyclically reduced
/// for the result to stay freely reduced; the result is reduced regardless.
Word rotate(const Word& w, long shift);
/// Replaces every occurrence of `gen` by `replacement` (inverse occurrences by
/// its inverse) and reduces.
Word substitute(const Word& w, std::uint32_t gen, const Word& replacement);
/// Simultaneous substitution: `images[g]` replaces generator g.
Word substitute_all(const Word& w, std::span<const Word> images);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Default display name of generator `gen`: x1, x2, ...
std::string default_generator_name(std::uint32_t gen);

/// Parses the word syntax: factors joined by `*`, `^k` powers (any integer),
/// parentheses, `1` for the identity, and `u = v` meaning u·v⁻¹.
/// Names are looked up in `names`.
Word parse_word(std::string_view text, std::span<const std::string> names);

/// Renders with `*` joins and `^-1` / `^k` for runs of one generator.
std::string render_word(const Word& w, std::span<const std::string> names);

}  // namespace tautwist
