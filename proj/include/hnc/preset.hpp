#pragma once

// Text presets: a foliation presentation plus the operators, points and
// Poisson scenarios that go with it. The format is documented in
// docs/preset_format.md.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnc/foliation.hpp"

namespace hnc {

struct PresetLine {
  std::string text;
  std::size_t line = 0;    // 1-based line in the preset file
  std::size_t column = 0;  // 1-based column where `text` starts
};

struct NamedEntry {
  std::string name;
  PresetLine value;
};

struct Preset {
  std::string name;
  std::string tag;
  std::string source;  // file path or "builtin:<name>"
  std::vector<std::string> vars;
  std::vector<NamedEntry> generators;
  /// Absent section: no structure functions. "auto": solve at load time.
  bool has_structure = false;
  bool structure_auto = false;
  std::vector<PresetLine> structure;
  std::vector<NamedEntry> operators;
  std::vector<RationalVector> points;
  std::vector<NamedEntry> scenarios;
};

/// Parses the text format. Throws ParseError with the file line and column.
Preset parse_preset(std::string_view text, const std::string& source);
/// Builds and checks the presentation; structure identities are verified exactly.
FoliationPresentation build_presentation(const Preset& preset);

struct LoadedPreset {
  Preset preset;
  FoliationPresentation presentation;
};

/// A builtin name (see builtin_preset_names) or a path to a preset file.
LoadedPreset load_preset(const std::string& name_or_path);

/// The text of a named operator of the preset, or `op` itself.
std::string resolve_operator(const LoadedPreset& lp, const std::string& op);

std::vector<std::string> builtin_preset_names();
/// Text of a builtin preset; throws std::out_of_range for unknown names.
std::string builtin_preset_text(const std::string& name);

/// Generators x_i d/dx_j of the foliation of fields vanishing at the origin of
/// Q^d, named g<i><j>, with gl_d structure constants.
std::string vanishing_origin_text(std::size_t d, const std::string& name, const std::string& tag);

struct PoissonScenario {
  std::string name;
  RationalVector section;  // constant combination of generators
  RationalVector point;
  double duration = 1.0;
  std::size_t steps = 1000;
  std::optional<RationalVector> eta;
};

/// "a=g3 m=1,0,0 T=1 steps=1000 [eta=1,2,3]"
PoissonScenario parse_scenario(const std::string& name, std::string_view text, const FoliationPresentation& p);

}  // namespace hnc
