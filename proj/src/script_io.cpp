#include "tautwist/script_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tautwist {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const json& field(const json& obj, const char* key, std::size_t index) {
  if (!obj.contains(key))
    throw ScriptFormatError("move " + std::to_string(index) + ": missing field '" + key + "'");
  return obj.at(key);
}

std::size_t index_field(const json& obj, const char* key, std::size_t index) {
  const json& v = field(obj, key, index);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw ScriptFormatError("move " + std::to_string(index) + ": '" + key +
                            "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Word word_field(const json& obj, const char* key, std::size_t index,
                const std::vector<std::string>& names) {
  const json& v = field(obj, key, index);
  if (!v.is_string())
    throw ScriptFormatError("move " + std::to_string(index) + ": '" + key + "' must be a string");
  try {
    return parse_word(v.get<std::string>(), names);
  } catch (const ParseError& e) {
    throw ScriptFormatError("move " + std::to_string(index) + ": " + e.what());
  }
}

Derivation derivation_field(const json& obj, std::size_t index,
                            const std::vector<std::string>& names) {
  Derivation d;
  if (!obj.contains("derivation")) return d;
  for (const json& step : obj.at("derivation")) {
    DerivationStep s;
    s.rel = index_field(step, "rel", index);
    s.conjugator = step.contains("conj") ? word_field(step, "conj", index, names) : Word{};
    s.sign = step.value("sign", 1);
    d.push_back(std::move(s));
  }
  return d;
}

Presentation presentation_field(const json& root, const char* key) {
  if (!root.contains(key) || !root.at(key).is_string())
    throw ScriptFormatError(std::string("script needs a string field '") + key + "'");
  try {
    return parse_presentation(root.at(key).get<std::string>());
  } catch (const ParseError& e) {
    throw ScriptFormatError(std::string(key) + ": " + e.what());
  }
}

json derivation_json(const Derivation& d, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& s : d)
    out.push_back({{"rel", s.rel}, {"conj", render_word(s.conjugator, names)}, {"sign", s.sign}});
  return out;
}

}  // namespace

MoveScript parse_script(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScriptFormatError(std::string("invalid JSON: ") + e.what());
  }
  MoveScript script;
  script.initial = presentation_field(root, "initial");
  if (root.contains("expected_final")) script.expected_final = presentation_field(root, "expected_final");
  script.name = root.value("name", std::string{});

  std::vector<std::string> names = script.initial.names();
  const json moves = root.value("moves", json::array());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const json& m = moves[i];
    const std::string op = field(m, "op", i).get<std::string>();
    if (op == "FreeReduce") {
      script.moves.push_back(move::FreeReduce{index_field(m, "rel", i)});
    } else if (op == "CyclicPermute") {
      script.moves.push_back(move::CyclicPermute{index_field(m, "rel", i), field(m, "shift", i).get<long>()});
    } else if (op == "InvertRelator") {
      script.moves.push_back(move::InvertRelator{index_field(m, "rel", i)});
    } else if (op == "ConjugateRelator") {
      script.moves.push_back(move::ConjugateRelator{index_field(m, "rel", i), word_field(m, "by", i, names)});
    } else if (op == "SlideMultiply") {
      script.moves.push_back(move::SlideMultiply{index_field(m, "src", i), index_field(m, "dst", i)});
    } else if (op == "AddConsequence") {
      script.moves.push_back(
          move::AddConsequence{word_field(m, "word", i, names), derivation_field(m, i, names)});
    } else if (op == "RemoveRelator") {
      script.moves.push_back(move::RemoveRelator{index_field(m, "rel", i), derivation_field(m, i, names)});
    } else if (op == "AddGenerator") {
      std::string name = m.value("name", std::string{});
      script.moves.push_back(move::AddGenerator{word_field(m, "defining", i, names), name});
      names.push_back(name.empty() ? fresh_generator_name(names) : name);
    } else if (op == "RemoveGenerator") {
      const json& g = field(m, "gen", i);
      std::uint32_t gen = 0;
      if (g.is_string()) {
        auto it = std::find(names.begin(), names.end(), g.get<std::string>());
        if (it == names.end()) throw ScriptFormatError("move " + std::to_string(i) + ": unknown generator");
        gen = static_cast<std::uint32_t>(it - names.begin());
      } else {
        gen = static_cast<std::uint32_t>(index_field(m, "gen", i));
      }
      script.moves.push_back(move::RemoveGenerator{gen, index_field(m, "via", i)});
      if (gen < names.size()) names.erase(names.begin() + gen);
    } else if (op == "AlphaFlip") {
      script.moves.push_back(move::AlphaFlip{index_field(m, "rel", i), index_field(m, "pos", i)});
    } else if (op == "BetaSwap") {
      script.moves.push_back(move::BetaSwap{index_field(m, "rel", i)});
    } else {
      throw ScriptFormatError("move " + std::to_string(i) + ": unknown op '" + op + "'");
    }
  }
  return script;
}

MoveScript load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScriptFormatError("cannot open script " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  MoveScript s = parse_script(buf.str());
  if (s.name.empty()) s.name = path;
  return s;
}

std::string render_script(const MoveScript& script) {
  json root;
  if (!script.name.empty()) root["name"] = script.name;
  root["initial"] = render_presentation(script.initial);
  std::vector<std::string> names = script.initial.names();
  json moves = json::array();
  for (const Move& mv : script.moves) {
    json m = {{"op", move_name(mv)}};
    std::visit(Overloaded{
                   [&](const move::FreeReduce& x) { m["rel"] = x.rel; },
                   [&](const move::CyclicPermute& x) {
                     m["rel"] = x.rel;
                     m["shift"] = x.shift;
                   },
                   [&](const move::InvertRelator& x) { m["rel"] = x.rel; },
                   [&](const move::ConjugateRelator& x) {
                     m["rel"] = x.rel;
                     m["by"] = render_word(x.by, names);
                   },
                   [&](const move::SlideMultiply& x) {
                     m["src"] = x.src;
                     m["dst"] = x.dst;
                   },
                   [&](const move::AddConsequence& x) {
                     m["word"] = render_word(x.word, names);
                     m["derivation"] = derivation_json(x.derivation, names);
                   },
                   [&](const move::RemoveRelator& x) {
                     m["rel"] = x.rel;
                     if (!x.derivation.empty()) m["derivation"] = derivation_json(x.derivation, names);
                   },
                   [&](const move::AddGenerator& x) {
                     m["defining"] = render_word(x.defining, names);
                     if (!x.name.empty()) m["name"] = x.name;
                     names.push_back(x.name.empty() ? fresh_generator_name(names) : x.name);
                   },
                   [&](const move::RemoveGenerator& x) {
                     m["gen"] = x.gen;
                     m["via"] = x.via;
                     if (x.gen < names.size()) names.erase(names.begin() + x.gen);
                   },
                   [&](const move::AlphaFlip& x) {
                     m["rel"] = x.rel;
                     m["pos"] = x.pos;
                   },
                   [&](const move::BetaSwap& x) { m["rel"] = x.rel; },
               },
               mv);
    moves.push_back(std::move(m));
  }
  root["moves"] = std::move(moves);
  if (script.expected_final) root["expected_final"] = render_presentation(*script.expected_final);
  return root.dump(2);
}

}  // namespace tautwist
