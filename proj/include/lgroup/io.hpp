#pragma once

// JSON instance files and report rendering.
//
// Instance file keys (anything else is rejected):
//   "name"       optional string
//   "structure"  "Z" | {"prod": [s, s, ...]} | {"lex": s}
//   "unit"       element
//   "ideals"     optional list of "zero" | "all" | {"prod": [...]} | {"bottom": ideal}
//   "elements"   optional list of elements
//   "task"       optional {"mode": "keimel" | "strong" | "zeroset", "generators": [...]}
//   "mv"         optional bool; elements are then MV elements in [0, u]
//
// Elements nest like the structure: an integer for Z, an array of components
// for a product, [top, bottom] for a lex pair. Integers outside the int64
// range are written as decimal strings.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgroup/crt.hpp"
#include "lgroup/semisimple.hpp"
#include "lgroup/spectrum.hpp"
#include "lgroup/yosida.hpp"

namespace lgroup {

using json = nlohmann::json;

enum class TaskMode { keimel, strong, zeroset };

struct Task {
  TaskMode mode = TaskMode::keimel;
  std::vector<Element> generators;  // zeroset only
};

struct Instance {
  std::string name;
  UnitalGroup group;
  std::vector<Ideal> ideals;
  std::vector<Element> elements;
  std::optional<Task> task;
  bool mv = false;
};

json to_json(const Integer& n);
json to_json(const Structure& s);
json to_json(const Element& g);
json to_json(const Ideal& I);
json to_json(const Instance& instance);

Integer integer_from_json(const json& j);
Structure structure_from_json(const json& j);
Element element_from_json(const Structure& s, const json& j);
/// "zero" and "all" are accepted at any position and expanded to canonical form.
Ideal ideal_from_json(const Structure& s, const json& j);
/// Throws Error(parse_error) for malformed files, and the validation errors of
/// the group, ideals and elements otherwise.
Instance instance_from_json(const json& j);
Instance load_instance(const std::filesystem::path& path);

/// Pretty-printed with sorted keys and a trailing newline; byte-stable.
std::string canonical_dump(const json& j);

std::string_view to_string(TaskMode mode) noexcept;

/// Builds the congruence system of a keimel/strong task: ideals[k] with elements[k].
CongruenceSystem task_system(const Instance& instance);
PatchResult run_task(const Instance& instance, Exec exec = Exec::parallel);

json to_json(const Certificate& certificate);
json to_json(const PatchResult& result);
/// Primes, maximality flags, specialization pairs and the closure table.
json spectrum_to_json(const SpectrumSpace& X);
/// Prime id ("p<k>") to "p/q".
json yosida_to_json(const SpectrumSpace& X, const YosidaTable& table);
json analyze(const Instance& instance, Exec exec = Exec::parallel);

}  // namespace lgroup
