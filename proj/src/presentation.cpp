#include "tautwist/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "text_cursor.hpp"

namespace tautwist {

namespace {

std::vector<std::string> default_names(std::uint32_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t g = 0; g < n; ++g) names.push_back(default_generator_name(g));
  return names;
}

}  // namespace

Presentation::Presentation(std::uint32_t ngens, std::vector<Word> relators, std::string label)
    : Presentation(default_names(ngens), std::move(relators), std::move(label)) {}

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators,
                           std::string label)
    : names_(std::move(names)), relators_(std::move(relators)), label_(std::move(label)) {
  validate();
}

void Presentation::validate() const {
  for (std::size_t i = 0; i < relators_.size(); ++i)
    if (relators_[i].generator_bound() > ngens())
      throw std::invalid_argument("relator " + std::to_string(i) +
                                  " uses a generator outside the declared range");
  for (std::size_t a = 0; a < names_.size(); ++a)
    for (std::size_t b = a + 1; b < names_.size(); ++b)
      if (names_[a] == names_[b]) throw std::invalid_argument("duplicate generator name " + names_[a]);
}

Presentation parse_presentation(std::string_view text) {
  detail::TextCursor cursor(text);
  cursor.expect('<');
  std::vector<std::string> names;
  if (cursor.peek() != '|') {
    names.push_back(cursor.identifier());
    while (cursor.accept(',')) names.push_back(cursor.identifier());
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (names[a] == names[b]) cursor.fail("duplicate generator name '" + names[a] + "'");
  cursor.expect('|');
  std::vector<Word> relators;
  if (cursor.peek() != '>') {
    relators.push_back(cursor.equation(names));
    while (cursor.accept(',')) relators.push_back(cursor.equation(names));
  }
  cursor.expect('>');
  if (!cursor.at_end()) cursor.fail("unexpected trailing input");
  if (names.empty()) cursor.fail("a presentation needs at least one generator");
  return Presentation(std::move(names), std::move(relators));
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t g = 0; g < p.names().size(); ++g) out << (g ? ", " : "") << p.names()[g];
  out << " |";
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    out << (r ? ", " : " ") << render_word(p.relators()[r], p.names());
  out << " >";
  return out.str();
}

Word parse_word(std::string_view text, const Presentation& p) { return parse_word(text, p.names()); }

std::string render_word(const Word& w, const Presentation& p) { return render_word(w, p.names()); }

Word cyclic_normal_form(const Word& w) {
  Word base = cyclic_reduce(w);
  if (base.empty()) return base;
  Word best = base;
  Word inv = invert(base);
  for (long s = 0; s < static_cast<long>(base.size()); ++s) {
    best = std::min(best, rotate(base, s));
    best = std::min(best, rotate(inv, s));
  }
  return best;
}

namespace {

std::vector<Word> normalized_relators(const std::vector<Word>& rels,
                                      const std::vector<std::uint32_t>& relabel) {
  std::vector<Word> out;
  out.reserve(rels.size());
  for (const Word& r : rels) {
    std::vector<Letter> raw;
    raw.reserve(r.size());
    for (Letter l : r.letters()) raw.push_back({relabel[l.gen], l.sign});
    Word nf = cyclic_normal_form(Word(std::span<const Letter>(raw)));
    if (!nf.empty()) out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

constexpr std::uint32_t kPermutationSearchLimit = 6;

}  // namespace

CanonicalForm canonical_form(const Presentation& p) {
  std::vector<std::uint32_t> perm(p.ngens());
  std::iota(perm.begin(), perm.end(), 0u);
  CanonicalForm best{p.ngens(), normalized_relators(p.relators(), perm)};
  if (p.ngens() <= kPermutationSearchLimit) {
    while (std::next_permutation(perm.begin(), perm.end())) {
      auto candidate = normalized_relators(p.relators(), perm);
      if (candidate < best.relators) best.relators = std::move(candidate);
    }
    return best;
  }
  // First-occurrence relabeling across the sorted, identity-labelled relators.
  std::vector<std::uint32_t> relabel(p.ngens(), p.ngens());
  std::uint32_t next = 0;
  for (const Word& r : best.relators)
    for (Letter l : r.letters())
      if (relabel[l.gen] == p.ngens()) relabel[l.gen] = next++;
  for (auto& r : relabel)
    if (r == p.ngens()) r = next++;
  best.relators = normalized_relators(p.relators(), relabel);
  return best;
}

bool equal_up_to_relabeling(const Presentation& a, const Presentation& b) {
  return a.ngens() == b.ngens() && canonical_form(a) == canonical_form(b);
}

std::optional<ConjugationData> split_conjugation_relator(const Word& relator) {
  const auto& l = relator.letters();
  if (l.size() < 2 || l.size() % 2 != 0 || l.front().sign != 1) return std::nullopt;
  // relator = head · u · y · u⁻¹ with |u| = m, so the length is 2m + 2.
  std::size_t m = (l.size() - 2) / 2;
  for (std::size_t k = 0; k < m; ++k)
    if (!l[1 + k].cancels(l[l.size() - 1 - k])) return std::nullopt;
  ConjugationData data;
  data.head = l.front().gen;
  data.tail = l[1 + m].gen;
  data.eps = l[1 + m].sign;
  data.conjugator = Word(std::span<const Letter>(l.data() + 1, m));
  return data;
}

TauPresentation certify_tau(const Presentation& p) {
  if (p.relators().empty()) throw NotTauShape("no square relator", std::nullopt);
  const Word& square = p.relators().front();
  if (square.size() != 2 || square[0] != square[1] || square[0].sign != 1)
    throw NotTauShape("first relator is not the square of a generator", 0);

  TauPresentation tau;
  tau.base = p;
  tau.square_gen = square[0].gen;

  std::vector<std::uint32_t> parent(p.ngens());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 1; k < p.relators().size(); ++k) {
    auto data = split_conjugation_relator(p.relators()[k]);
    if (!data) throw NotTauShape("not of the form x_i w x_j^(+-1) w^-1", k);
    parent[find(data->head)] = find(data->tail);
    tau.conj_data.push_back(std::move(*data));
  }
  for (std::uint32_t g = 0; g < p.ngens(); ++g)
    if (find(g) != find(tau.square_gen))
      throw NotTauShape("conjugacy graph is disconnected (generator " + p.names()[g] +
                            " is not reached)",
                        std::nullopt);
  return tau;
}

bool is_tau_shape(const Presentation& p) {
  try {
    certify_tau(p);
    return true;
  } catch (const NotTauShape&) {
    return false;
  }
}

}  // namespace tautwist
