#include "tautwist/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "text_cursor.hpp"

namespace tautwist {

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::generator(std::uint32_t gen, int exponent) {
  std::vector<Letter> raw(static_cast<std::size_t>(std::abs(exponent)),
                          Letter{gen, exponent < 0 ? -1 : 1});
  return Word(std::span<const Letter>(raw));
}

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

bool Word::contains(std::uint32_t gen) const { return occurrences(gen) > 0; }

std::size_t Word::occurrences(std::uint32_t gen) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [gen](Letter l) { return l.gen == gen; }));
}

long Word::exponent_sum(std::uint32_t gen) const {
  long sum = 0;
  for (Letter l : letters_)
    if (l.gen == gen) sum += l.sign;
  return sum;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t skip = 0;
  while (!letters_.empty() && skip < rhs.letters_.size() &&
         letters_.back().cancels(rhs.letters_[skip])) {
    letters_.pop_back();
    ++skip;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<long>(skip),
                  rhs.letters_.end());
  return *this;
}

Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
  return Word(std::span<const Letter>(raw));
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? invert(w) : w;
  Word out;
  for (long i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Word conjugate(const Word& w, const Word& by) { return by * w * invert(by); }

Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo].cancels(l[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::span<const Letter>(l.data() + lo, hi - lo));
}

Word rotate(const Word& w, long shift) {
  if (w.empty()) return w;
  long n = static_cast<long>(w.size());
  long s = ((shift % n) + n) % n;
  std::vector<Letter> raw(w.letters().begin() + s, w.letters().end());
  raw.insert(raw.end(), w.letters().begin(), w.letters().begin() + s);
  return Word(std::span<const Letter>(raw));
}

Word substitute(const Word& w, std::uint32_t gen, const Word& replacement) {
  Word inv = invert(replacement);
  Word out;
  for (Letter l : w.letters()) {
    if (l.gen == gen) {
      out *= l.sign > 0 ? replacement : inv;
    } else {
      out *= Word{l};
    }
  }
  return out;
}

Word substitute_all(const Word& w, std::span<const Word> images) {
  Word out;
  for (Letter l : w.letters()) {
    if (l.gen >= images.size()) throw std::out_of_range("substitution image missing");
    out *= l.sign > 0 ? images[l.gen] : invert(images[l.gen]);
  }
  return out;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

std::string default_generator_name(std::uint32_t gen) { return "x" + std::to_string(gen + 1); }

Word parse_word(std::string_view text, std::span<const std::string> names) {
  detail::TextCursor cursor(text);
  Word w = cursor.equation(names);
  if (!cursor.at_end()) cursor.fail("unexpected trailing input");
  return w;
}

std::string render_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    long run = static_cast<long>(j - i) * l[i].sign;
    if (i > 0) out << '*';
    out << (l[i].gen < names.size() ? names[l[i].gen] : default_generator_name(l[i].gen));
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

}  // namespace tautwist
