#include "tautwist/enumeration.hpp"

#include <algorithm>
#include <deque>

namespace tautwist {

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (Letter l : w.letters()) coset = act(coset, l);
  return coset;
}

void validate_index2(const Presentation& p, const Index2Spec& spec) {
  if (spec.parity.size() != p.ngens())
    throw std::invalid_argument("parity spec must give one value per generator");
  bool any = false;
  for (int v : spec.parity) {
    if (v != 0 && v != 1) throw std::invalid_argument("parity values must be 0 or 1");
    any = any || v == 1;
  }
  if (!any) throw std::invalid_argument("parity spec is identically zero");
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    int total = 0;
    for (Letter l : p.relator(r).letters()) total ^= spec.parity[l.gen];
    if (total != 0)
      throw std::invalid_argument("relator " + std::to_string(r) + " has odd parity");
  }
}

namespace {

std::uint32_t first_odd(const Index2Spec& spec) {
  auto it = std::find(spec.parity.begin(), spec.parity.end(), 1);
  return static_cast<std::uint32_t>(it - spec.parity.begin());
}

constexpr std::uint32_t kUndefined = 0xffffffffu;

struct BudgetHit {};

// HLT enumeration state. Dead cosets keep a parent link into the union-find forest.
class Enumerator {
 public:
  Enumerator(std::uint32_t ngens, std::size_t budget, std::size_t max_defs)
      : cols_(2 * ngens), budget_(budget), max_defs_(max_defs) {
    new_coset();
  }

  EnumerationOutcome run(const std::vector<std::vector<std::uint32_t>>& relators,
                         const std::vector<std::vector<std::uint32_t>>& subgroup) {
    try {
      for (const auto& w : subgroup) scan_and_fill(0, w);
      for (std::uint32_t c = 0; c < table_.size(); ++c) {
        for (const auto& r : relators) {
          if (!live(c)) break;
          scan_and_fill(c, r);
        }
        for (std::uint32_t x = 0; x < cols_ && live(c); ++x)
          if (table_[c][x] == kUndefined) define(c, x);
      }
    } catch (const BudgetHit&) {
      return BudgetExceeded{max_live_, defined_};
    }
    return compact();
  }

 private:
  static std::uint32_t inv(std::uint32_t x) { return x ^ 1u; }
  bool live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      std::uint32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::uint32_t new_coset() {
    if (live_count_ >= budget_ || defined_ >= max_defs_) throw BudgetHit{};
    auto c = static_cast<std::uint32_t>(table_.size());
    table_.emplace_back(cols_, kUndefined);
    parent_.push_back(c);
    ++live_count_;
    ++defined_;
    max_live_ = std::max(max_live_, live_count_);
    return c;
  }

  void define(std::uint32_t c, std::uint32_t x) {
    std::uint32_t d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }

  void scan_and_fill(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] != kUndefined) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void merge(std::uint32_t k, std::uint32_t l, std::deque<std::uint32_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
    --live_count_;
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::deque<std::uint32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::uint32_t e = queue.front();
      queue.pop_front();
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::uint32_t f = table_[e][x];
        if (f == kUndefined) continue;
        if (table_[f][inv(x)] == e) table_[f][inv(x)] = kUndefined;
        std::uint32_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inv(x)] != kUndefined) {
          merge(e1, table_[f1][inv(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

  Completed compact() {
    std::vector<std::uint32_t> index(table_.size(), kUndefined);
    std::uint32_t next = 0;
    for (std::uint32_t c = 0; c < table_.size(); ++c)
      if (live(c)) index[c] = next++;
    Completed out;
    out.table.ngens = cols_ / 2;
    for (std::uint32_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::uint32_t> row(cols_);
      for (std::uint32_t x = 0; x < cols_; ++x) row[x] = index[rep(table_[c][x])];
      out.table.rows.push_back(std::move(row));
    }
    out.order = out.table.rows.size();
    out.stats = {max_live_, defined_};
    return out;
  }

  std::uint32_t cols_;
  std::size_t budget_;
  std::size_t max_defs_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> parent_;
  std::size_t live_count_ = 0;
  std::size_t max_live_ = 0;
  std::size_t defined_ = 0;
};

std::vector<std::uint32_t> columns(const Word& w) {
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(2 * l.gen + (l.sign > 0 ? 0 : 1));
  return out;
}

}  // namespace

std::vector<Word> index2_subgroup_generators(const Presentation& p, const Index2Spec& spec) {
  validate_index2(p, spec);
  const std::uint32_t g0 = first_odd(spec);
  const Word t = Word::generator(g0);
  std::vector<Word> gens;
  for (std::uint32_t x = 0; x < p.ngens(); ++x) {
    Word gx = Word::generator(x);
    if (spec.parity[x] == 0) {
      gens.push_back(gx);
      gens.push_back(conjugate(gx, t));
    } else {
      if (x != g0) gens.push_back(gx * invert(t));
      gens.push_back(t * gx);
    }
  }
  return gens;
}

EnumerationOutcome todd_coxeter_words(const Presentation& p, const std::vector<Word>& subgroup,
                                      std::size_t budget, std::size_t definition_factor) {
  if (budget == 0) throw std::invalid_argument("budget must be at least 1");
  std::vector<std::vector<std::uint32_t>> rels, subs;
  for (const Word& r : p.relators()) rels.push_back(columns(cyclic_reduce(r)));
  for (const Word& w : subgroup) {
    if (w.generator_bound() > p.ngens())
      throw std::invalid_argument("subgroup word uses an undeclared generator");
    subs.push_back(columns(w));
  }
  Enumerator e(p.ngens(), budget, definition_factor * budget);
  return e.run(rels, subs);
}

EnumerationOutcome todd_coxeter(const Presentation& p, const std::optional<Index2Spec>& sub,
                                std::size_t budget, std::size_t definition_factor) {
  std::vector<Word> gens;
  if (sub) gens = index2_subgroup_generators(p, *sub);
  return todd_coxeter_words(p, gens, budget, definition_factor);
}

bool table_is_consistent(const Presentation& p, const CosetTable& table) {
  const std::size_t n = table.num_live();
  if (table.ngens != p.ngens()) return false;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (table.rows[c].size() != 2 * table.ngens) return false;
    for (std::uint32_t x = 0; x < 2 * table.ngens; ++x) {
      std::uint32_t d = table.rows[c][x];
      if (d >= n || table.rows[d][x ^ 1u] != c) return false;
    }
    for (const Word& r : p.relators())
      if (table.trace(c, r) != c) return false;
  }
  return true;
}

std::uint32_t GroupTable::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order; ++b)
    if ((*this)(a, b) == 0) return b;
  throw std::logic_error("element without inverse");
}

std::size_t GroupTable::element_order(std::uint32_t a) const {
  std::size_t k = 1;
  for (std::uint32_t x = a; x != 0; x = (*this)(x, a)) ++k;
  return k;
}

GroupTable multiplication_table(const EnumerationOutcome& outcome) {
  const auto* done = std::get_if<Completed>(&outcome);
  if (!done) throw std::invalid_argument("multiplication table needs a completed enumeration");
  const CosetTable& t = done->table;
  const std::size_t n = t.num_live();
  const std::uint32_t cols = 2 * t.ngens;

  // Spanning tree from the identity: element j = element parent[j] · column via[j].
  std::vector<std::uint32_t> parent(n, kUndefined), via(n, kUndefined), order_seen{0};
  parent[0] = 0;
  for (std::size_t k = 0; k < order_seen.size(); ++k) {
    std::uint32_t c = order_seen[k];
    for (std::uint32_t x = 0; x < cols; ++x) {
      std::uint32_t d = t.rows[c][x];
      if (parent[d] == kUndefined) {
        parent[d] = c;
        via[d] = x;
        order_seen.push_back(d);
      }
    }
  }
  if (order_seen.size() != n)
    throw std::invalid_argument("coset table is not transitive; subgroup is not trivial");

  GroupTable g;
  g.order = n;
  g.mult.assign(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.mult[static_cast<std::size_t>(i) * n] = i;
    for (std::size_t k = 1; k < n; ++k) {
      std::uint32_t j = order_seen[k];
      g.mult[static_cast<std::size_t>(i) * n + j] =
          t.rows[g.mult[static_cast<std::size_t>(i) * n + parent[j]]][via[j]];
    }
  }
  for (std::uint32_t x = 0; x < t.ngens; ++x) g.generators.push_back(t.rows[0][2 * x]);
  return g;
}

Presentation reidemeister_schreier_index2(const Presentation& p, const Index2Spec& spec) {
  validate_index2(p, spec);
  const std::uint32_t g0 = first_odd(spec);
  const std::uint32_t n = p.ngens();
  // Schreier generator y_{c,x} gets index slot(c, x); the trivial y_{0,g0} is dropped.
  auto slot = [&](int c, std::uint32_t x) -> std::optional<std::uint32_t> {
    std::uint32_t raw = static_cast<std::uint32_t>(c) * n + x;
    if (c == 0 && x == g0) return std::nullopt;
    return raw > g0 ? raw - 1 : raw;
  };
  std::vector<std::string> names;
  for (int c = 0; c < 2; ++c)
    for (std::uint32_t x = 0; x < n; ++x)
      if (slot(c, x)) names.push_back(p.names()[x] + "_" + std::to_string(c));

  auto rewrite = [&](const Word& w, int c) {
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
      int next = c ^ spec.parity[l.gen];
      if (l.sign > 0) {
        if (auto s = slot(c, l.gen)) out.push_back(pos(*s));
      } else {
        if (auto s = slot(next, l.gen)) out.push_back(neg(*s));
      }
      c = next;
    }
    return cyclic_reduce(Word(std::span<const Letter>(out)));
  };
  std::vector<Word> rels;
  for (int c = 0; c < 2; ++c)
    for (const Word& r : p.relators()) rels.push_back(rewrite(r, c));
  return Presentation(std::move(names), std::move(rels),
                      p.label().empty() ? std::string{} : p.label() + " index-2 kernel");
}

}  // namespace tautwist
