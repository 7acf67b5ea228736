#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tautwist/word.hpp"

namespace tautwist {

/// Finite presentation: generator count, relator list, display names.
///
/// Relators are freely reduced words over generators 0..ngens-1. Names only
/// matter for text I/O; structural comparison ignores them.
class Presentation {
 public:
  Presentation() = default;
  /// Uses default names x1..xn. Throws std::invalid_argument if a relator
  /// references a generator >= ngens.
  Presentation(std::uint32_t ngens, std::vector<Word> relators, std::string label = {});
  Presentation(std::vector<std::string> names, std::vector<Word> relators, std::string label = {});

  [[nodiscard]] std::uint32_t ngens() const { return static_cast<std::uint32_t>(names_.size()); }
  [[nodiscard]] const std::vector<Word>& relators() const { return relators_; }
  [[nodiscard]] const Word& relator(std::size_t i) const { return relators_.at(i); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Same generator count and identical relator sequence (names and label ignored).
  [[nodiscard]] bool same_structure(const Presentation& other) const {
    return ngens() == other.ngens() && relators_ == other.relators_;
  }
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.same_structure(b) && a.names_ == b.names_;
  }

 private:
  void validate() const;

  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::string label_;
};

/// `< g1, g2 | w1, w2 >`; `#` starts a comment running to end of line.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);
/// Parses a word against the presentation's generator names.
Word parse_word(std::string_view text, const Presentation& p);
std::string render_word(const Word& w, const Presentation& p);

/// Least cyclic rotation of the word or its inverse, after cyclic reduction.
Word cyclic_normal_form(const Word& w);

/// Canonical form up to generator renaming, relator order, cyclic rotation and
/// inversion of each relator. Trivial and duplicate relators are dropped.
/// Generators are relabeled by trying every permutation (ngens <= 6) and keeping the
/// lexicographically smallest sorted relator list; beyond that, generators are
/// ordered by first occurrence across the sorted relators.
struct CanonicalForm {
  std::uint32_t ngens = 0;
  std::vector<Word> relators;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};
CanonicalForm canonical_form(const Presentation& p);
bool equal_up_to_relabeling(const Presentation& a, const Presentation& b);

/// Conjugation data of one relator: relator = x_i · w · x_j^eps · w⁻¹.
struct ConjugationData {
  std::uint32_t head = 0;
  std::uint32_t tail = 0;
  int eps = 1;
  Word conjugator;
};

struct TauPresentation {
  Presentation base;
  std::uint32_t square_gen = 0;
  /// Entry k describes relator k+1.
  std::vector<ConjugationData> conj_data;
};

class NotTauShape : public std::runtime_error {
 public:
  NotTauShape(const std::string& reason, std::optional<std::size_t> relator)
      : std::runtime_error(relator ? "relator " + std::to_string(*relator) + ": " + reason : reason),
        relator_(relator) {}
  [[nodiscard]] std::optional<std::size_t> relator() const { return relator_; }

 private:
  std::optional<std::size_t> relator_;
};

/// Splits a relator as x_i · u · y · u⁻¹ with the head letter literally first.
/// Prefers head != tail; returns nullopt when no split exists.
std::optional<ConjugationData> split_conjugation_relator(const Word& relator);

TauPresentation certify_tau(const Presentation& p);
bool is_tau_shape(const Presentation& p);

}  // namespace tautwist
