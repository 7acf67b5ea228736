#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautwist/enumeration.hpp"

namespace tautwist {

using Permutation = std::vector<std::uint8_t>;

/// Small permutation group with its Cayley table precomputed.
class TargetGroup {
 public:
  TargetGroup(std::string name, std::size_t degree, std::vector<Permutation> generators);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Permutation>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<Permutation>& elements() const { return elements_; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[a * elements_.size() + b];
  }
  [[nodiscard]] std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  /// Element 0 is the identity.
  [[nodiscard]] std::uint32_t identity() const { return 0; }
  /// Size of the subgroup generated by the given elements.
  [[nodiscard]] std::size_t generated_order(const std::vector<std::uint32_t>& gens) const;

 private:
  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

/// S3, D4, D5, A4, S4, D7, A5 in that order.
const std::vector<TargetGroup>& builtin_targets();
const TargetGroup& target_by_name(const std::string& name);

class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HomCount {
  std::uint64_t total = 0;
  std::uint64_t surjective = 0;
  friend bool operator==(const HomCount&, const HomCount&) = default;
};

constexpr std::uint64_t kDefaultHomSearchCap = 100'000'000;

HomCount count_homs(const Presentation& p, const TargetGroup& t,
                    std::uint64_t cap = kDefaultHomSearchCap);

constexpr int kFingerprintVersion = 1;

struct GroupFingerprint {
  int version = kFingerprintVersion;
  std::vector<std::string> targets;
  std::vector<HomCount> counts;
};

GroupFingerprint fingerprint(const Presentation& p);
GroupFingerprint fingerprint(const Presentation& p, const std::vector<std::string>& targets,
                             std::uint64_t cap = kDefaultHomSearchCap);
bool fingerprints_equal(const GroupFingerprint& a, const GroupFingerprint& b);

struct RecognitionResult {
  enum class Kind { Dihedral, Cyclic, OtherFinite };
  Kind kind = Kind::OtherFinite;
  std::size_t m = 0;  ///< dihedral or cyclic parameter; the order for OtherFinite

  [[nodiscard]] std::size_t order() const { return kind == Kind::Dihedral ? 2 * m : m; }
  friend bool operator==(const RecognitionResult&, const RecognitionResult&) = default;
};

/// Equality with D₁ and ℤ₂ identified.
bool same_type(const RecognitionResult& a, const RecognitionResult& b);
std::string describe(const RecognitionResult& r);

constexpr std::size_t kDefaultRecognitionCap = 10'000;

RecognitionResult recognize_finite(const GroupTable& table,
                                   std::size_t cap = kDefaultRecognitionCap);

struct WitnessReport {
  enum class Status { Witness, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<std::size_t> quotient_order;
  std::optional<RecognitionResult> recognition;
  std::string reason;
};

/// Enumerates p with the extra relators; a completed quotient that is neither
/// cyclic nor dihedral shows p is not dihedral, since quotients of dihedral
/// groups are dihedral or cyclic.
WitnessReport nondihedral_quotient_witness(const Presentation& p, const std::vector<Word>& extra,
                                           std::size_t budget);

}  // namespace tautwist
