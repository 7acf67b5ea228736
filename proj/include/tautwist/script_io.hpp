#pragma once

#include <string>
#include <string_view>

#include "tautwist/moves.hpp"

namespace tautwist {

/// Thrown for malformed script JSON (missing fields, unknown ops, bad words).
class ScriptFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the frozen MoveScript JSON format. Words inside a move are read with
/// the generator names current at that point of the replay.
MoveScript parse_script(std::string_view json_text);
MoveScript load_script(const std::string& path);
std::string render_script(const MoveScript& script);

}  // namespace tautwist
