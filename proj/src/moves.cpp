#include "tautwist/moves.hpp"

#include <algorithm>

namespace tautwist {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Presentation finish(std::vector<std::string> names, std::vector<Word> relators,
                    const std::string& label) {
  for (Word& r : relators) r = cyclic_reduce(r);
  return Presentation(std::move(names), std::move(relators), label);
}

void check_relator(const Presentation& p, std::size_t rel, const std::string& op) {
  if (rel >= p.relators().size())
    throw IllegalMove(op, "relator index " + std::to_string(rel) + " out of range");
}

void check_word(const Presentation& p, const Word& w, const std::string& op) {
  if (w.generator_bound() > p.ngens()) throw IllegalMove(op, "word uses an undeclared generator");
}

void check_derivation(const Presentation& p, const Derivation& d, const std::string& op) {
  for (const auto& step : d) {
    check_relator(p, step.rel, op);
    check_word(p, step.conjugator, op);
    if (step.sign != 1 && step.sign != -1) throw IllegalMove(op, "derivation sign must be +1 or -1");
  }
}

TauPresentation certify_for(const Presentation& p, const std::string& op) {
  try {
    return certify_tau(p);
  } catch (const NotTauShape& e) {
    throw IllegalMove(op, std::string("presentation is not tau-shaped: ") + e.what());
  }
}

}  // namespace

std::string fresh_generator_name(const std::vector<std::string>& names) {
  for (std::uint32_t k = static_cast<std::uint32_t>(names.size());; ++k) {
    std::string candidate = default_generator_name(k);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
  }
}

Word evaluate_derivation(const Presentation& p, const Derivation& d) {
  Word out;
  for (const auto& step : d) {
    Word factor = step.sign > 0 ? p.relator(step.rel) : invert(p.relator(step.rel));
    out *= conjugate(factor, step.conjugator);
  }
  return out;
}

std::string move_name(const Move& m) {
  return std::visit(Overloaded{
                        [](const move::FreeReduce&) { return "FreeReduce"; },
                        [](const move::CyclicPermute&) { return "CyclicPermute"; },
                        [](const move::InvertRelator&) { return "InvertRelator"; },
                        [](const move::ConjugateRelator&) { return "ConjugateRelator"; },
                        [](const move::SlideMultiply&) { return "SlideMultiply"; },
                        [](const move::AddConsequence&) { return "AddConsequence"; },
                        [](const move::RemoveRelator&) { return "RemoveRelator"; },
                        [](const move::AddGenerator&) { return "AddGenerator"; },
                        [](const move::RemoveGenerator&) { return "RemoveGenerator"; },
                        [](const move::AlphaFlip&) { return "AlphaFlip"; },
                        [](const move::BetaSwap&) { return "BetaSwap"; },
                    },
                    m);
}

Presentation apply_move(const Presentation& p, const Move& m) {
  const std::string op = move_name(m);
  auto names = p.names();
  auto rels = p.relators();

  return std::visit(
      Overloaded{
          [&](const move::FreeReduce& mv) {
            check_relator(p, mv.rel, op);
            return finish(names, rels, p.label());
          },
          [&](const move::CyclicPermute& mv) {
            check_relator(p, mv.rel, op);
            rels[mv.rel] = rotate(cyclic_reduce(rels[mv.rel]), mv.shift);
            return finish(names, rels, p.label());
          },
          [&](const move::InvertRelator& mv) {
            check_relator(p, mv.rel, op);
            rels[mv.rel] = invert(rels[mv.rel]);
            return finish(names, rels, p.label());
          },
          [&](const move::ConjugateRelator& mv) {
            check_relator(p, mv.rel, op);
            check_word(p, mv.by, op);
            rels[mv.rel] = conjugate(rels[mv.rel], mv.by);
            return finish(names, rels, p.label());
          },
          [&](const move::SlideMultiply& mv) {
            check_relator(p, mv.src, op);
            check_relator(p, mv.dst, op);
            if (mv.src == mv.dst) throw IllegalMove(op, "source and destination coincide");
            rels[mv.dst] = rels[mv.src] * rels[mv.dst];
            return finish(names, rels, p.label());
          },
          [&](const move::AddConsequence& mv) {
            check_word(p, mv.word, op);
            check_derivation(p, mv.derivation, op);
            if (cyclic_reduce(evaluate_derivation(p, mv.derivation)) != cyclic_reduce(mv.word))
              throw IllegalMove(op, "derivation does not reduce to the stated word");
            rels.push_back(mv.word);
            return finish(names, rels, p.label());
          },
          [&](const move::RemoveRelator& mv) {
            check_relator(p, mv.rel, op);
            const Word target = cyclic_normal_form(rels[mv.rel]);
            bool justified = target.empty();
            for (std::size_t j = 0; j < rels.size() && !justified; ++j)
              justified = j != mv.rel && cyclic_normal_form(rels[j]) == target;
            if (!justified) {
              if (mv.derivation.empty())
                throw IllegalMove(op, "relator is not a duplicate and no derivation was given");
              check_derivation(p, mv.derivation, op);
              for (const auto& step : mv.derivation)
                if (step.rel == mv.rel)
                  throw IllegalMove(op, "derivation uses the relator being removed");
              if (cyclic_reduce(evaluate_derivation(p, mv.derivation)) !=
                  cyclic_reduce(rels[mv.rel]))
                throw IllegalMove(op, "derivation does not reduce to the removed relator");
            }
            rels.erase(rels.begin() + static_cast<long>(mv.rel));
            return finish(names, rels, p.label());
          },
          [&](const move::AddGenerator& mv) {
            check_word(p, mv.defining, op);
            std::string name = mv.name.empty() ? fresh_generator_name(names) : mv.name;
            if (std::find(names.begin(), names.end(), name) != names.end())
              throw IllegalMove(op, "generator name '" + name + "' already in use");
            auto g = static_cast<std::uint32_t>(names.size());
            names.push_back(std::move(name));
            rels.push_back(Word::generator(g) * invert(mv.defining));
            return finish(names, rels, p.label());
          },
          [&](const move::RemoveGenerator& mv) {
            check_relator(p, mv.via, op);
            if (mv.gen >= p.ngens()) throw IllegalMove(op, "generator index out of range");
            if (p.ngens() == 1) throw IllegalMove(op, "cannot remove the last generator");
            const Word& via = rels[mv.via];
            if (via.occurrences(mv.gen) != 1)
              throw IllegalMove(op, "relator must contain the generator exactly once");
            auto at = std::find_if(via.letters().begin(), via.letters().end(),
                                   [&](Letter l) { return l.gen == mv.gen; });
            Word rotated = rotate(via, at - via.letters().begin());
            Word rest(std::span<const Letter>(rotated.letters().data() + 1, rotated.size() - 1));
            // gen^s · rest = 1  =>  gen = rest^(-s)
            Word image = rotated.front().sign > 0 ? invert(rest) : rest;
            rels.erase(rels.begin() + static_cast<long>(mv.via));
            std::vector<Word> images;
            for (std::uint32_t g = 0; g < p.ngens(); ++g) {
              if (g == mv.gen) {
                images.push_back(image);
              } else {
                images.push_back(Word::generator(g > mv.gen ? g - 1 : g));
              }
            }
            // Renumber the image itself: it is free of gen.
            Word renumbered = substitute_all(image, images);
            images[mv.gen] = renumbered;
            for (Word& r : rels) r = substitute_all(r, images);
            names.erase(names.begin() + mv.gen);
            return finish(names, rels, p.label());
          },
          [&](const move::AlphaFlip& mv) {
            check_relator(p, mv.rel, op);
            TauPresentation tau = certify_for(p, op);
            if (mv.rel == 0) throw IllegalMove(op, "the square relator cannot be flipped");
            const ConjugationData& data = tau.conj_data[mv.rel - 1];
            std::size_t m = data.conjugator.size();
            if (mv.pos >= rels[mv.rel].size())
              throw IllegalMove(op, "position out of range");
            if (mv.pos == 0)
              throw IllegalMove(op, "the head letter is fixed; flip the conjugated letter instead");
            std::vector<Letter> u = data.conjugator.letters();
            int eps = data.eps;
            if (mv.pos <= m) {
              u[mv.pos - 1] = u[mv.pos - 1].inverse();
            } else if (mv.pos == m + 1) {
              eps = -eps;
            } else {
              std::size_t k = m - 1 - (mv.pos - m - 2);
              u[k] = u[k].inverse();
            }
            Word conj(std::span<const Letter>(u.data(), u.size()));
            rels[mv.rel] = Word{pos(data.head)} *
                           conjugate(Word::generator(data.tail, eps), conj);
            Presentation out = finish(names, rels, p.label());
            if (!is_tau_shape(out)) throw IllegalMove(op, "result is no longer tau-shaped");
            return out;
          },
          [&](const move::BetaSwap& mv) {
            check_relator(p, mv.rel, op);
            TauPresentation tau = certify_for(p, op);
            if (mv.rel == 0) throw IllegalMove(op, "target must be a conjugation relator");
            const ConjugationData& data = tau.conj_data[mv.rel - 1];
            std::uint32_t next;
            if (data.head == tau.square_gen && data.tail != tau.square_gen) {
              next = data.tail;
            } else if (data.tail == tau.square_gen && data.head != tau.square_gen) {
              next = data.head;
            } else {
              throw IllegalMove(op, "relator does not join the square generator to another one");
            }
            rels[0] = Word::generator(next, 2);
            return finish(names, rels, p.label());
          },
      },
      m);
}

ReplayResult replay(const MoveScript& script) {
  ReplayResult result{script.initial, 0, std::nullopt};
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    try {
      result.final = apply_move(result.final, script.moves[i]);
    } catch (const IllegalMove& e) {
      throw ReplayError(i, e);
    } catch (const std::invalid_argument& e) {
      throw ReplayError(i, IllegalMove(move_name(script.moves[i]), e.what()));
    }
    ++result.moves_applied;
  }
  if (script.expected_final)
    result.matches_expected = equal_up_to_relabeling(result.final, *script.expected_final);
  return result;
}

}  // namespace tautwist
