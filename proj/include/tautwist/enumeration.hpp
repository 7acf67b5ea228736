#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tautwist/presentation.hpp"

namespace tautwist {

/// Closed coset table. Column 2g is the action of x_g, column 2g+1 of x_g⁻¹.
/// Row 0 is the subgroup coset.
struct CosetTable {
  std::uint32_t ngens = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  [[nodiscard]] std::size_t num_live() const { return rows.size(); }
  [[nodiscard]] std::uint32_t act(std::uint32_t coset, Letter l) const {
    return rows[coset][2 * l.gen + (l.sign > 0 ? 0 : 1)];
  }
  [[nodiscard]] std::uint32_t trace(std::uint32_t coset, const Word& w) const;
};

struct EnumerationStats {
  std::size_t max_live = 0;
  std::size_t total_defined = 0;
};

struct Completed {
  std::size_t order = 0;  ///< index of the subgroup; the group order when it is trivial
  CosetTable table;
  EnumerationStats stats;
};

struct BudgetExceeded {
  std::size_t max_live_reached = 0;
  std::size_t total_defined = 0;
};

using EnumerationOutcome = std::variant<Completed, BudgetExceeded>;

/// Parity homomorphism onto ℤ₂; its kernel is the index-2 subgroup.
struct Index2Spec {
  std::vector<int> parity;
};

/// Throws std::invalid_argument unless the spec is a homomorphism from p onto ℤ₂.
void validate_index2(const Presentation& p, const Index2Spec& spec);
/// Generating words for the kernel: Schreier generators for the transversal {1, g0}.
std::vector<Word> index2_subgroup_generators(const Presentation& p, const Index2Spec& spec);

constexpr std::size_t kDefaultDefinitionFactor = 50;

/// HLT enumeration with union-find coincidence handling. `budget` caps live
/// cosets, and total definitions are capped at definition_factor × budget.
EnumerationOutcome todd_coxeter(const Presentation& p, const std::optional<Index2Spec>& sub,
                                std::size_t budget,
                                std::size_t definition_factor = kDefaultDefinitionFactor);
/// Enumeration over the subgroup generated by arbitrary words.
EnumerationOutcome todd_coxeter_words(const Presentation& p, const std::vector<Word>& subgroup,
                                      std::size_t budget,
                                      std::size_t definition_factor = kDefaultDefinitionFactor);

/// Every entry defined, columns mutually inverse, every relator closes at every coset.
bool table_is_consistent(const Presentation& p, const CosetTable& table);

/// Cayley table of a finite group; element 0 is the identity.
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> mult;  ///< row-major order × order
  std::vector<std::uint32_t> generators;  ///< element of each presentation generator

  [[nodiscard]] std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const {
    return mult[static_cast<std::size_t>(a) * order + b];
  }
  [[nodiscard]] std::uint32_t inverse(std::uint32_t a) const;
  [[nodiscard]] std::size_t element_order(std::uint32_t a) const;
};

/// Requires a Completed outcome over the trivial subgroup.
GroupTable multiplication_table(const EnumerationOutcome& outcome);

/// Presentation of the kernel on the Schreier generators y_{c,x} = t_c x t_{c·x}⁻¹.
Presentation reidemeister_schreier_index2(const Presentation& p, const Index2Spec& spec);

}  // namespace tautwist
