#include "lgroup/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "lgroup/mv.hpp"

namespace lgroup {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) parse_error("unknown key '" + key + "' in " + where);
  }
}

std::string prime_id(std::size_t p) { return "p" + std::to_string(p); }

}  // namespace

// ----------------------------------------------------------------- writing

json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

json to_json(const Structure& s) {
  switch (s.kind()) {
    case Kind::atom: return "Z";
    case Kind::lex: return json{{"lex", to_json(s.bottom())}};
    case Kind::prod: {
      json parts = json::array();
      for (const auto& c : s.children()) parts.push_back(to_json(c));
      return json{{"prod", parts}};
    }
  }
  return nullptr;
}

json to_json(const Element& g) {
  switch (g.kind()) {
    case Kind::atom: return to_json(g.value());
    case Kind::lex: return json::array({to_json(g.value()), to_json(g.bottom())});
    case Kind::prod: {
      json parts = json::array();
      for (const auto& p : g.parts()) parts.push_back(to_json(p));
      return parts;
    }
  }
  return nullptr;
}

json to_json(const Ideal& I) {
  switch (I.kind()) {
    case Ideal::Kind::zero: return "zero";
    case Ideal::Kind::all: return "all";
    case Ideal::Kind::bottom: return json{{"bottom", to_json(I.inner())}};
    case Ideal::Kind::prod: {
      json parts = json::array();
      for (const auto& c : I.children()) parts.push_back(to_json(c));
      return json{{"prod", parts}};
    }
  }
  return nullptr;
}

std::string_view to_string(TaskMode mode) noexcept {
  switch (mode) {
    case TaskMode::keimel: return "keimel";
    case TaskMode::strong: return "strong";
    case TaskMode::zeroset: return "zeroset";
  }
  return "keimel";
}

json to_json(const Instance& instance) {
  json j;
  if (!instance.name.empty()) j["name"] = instance.name;
  j["structure"] = to_json(instance.group.structure());
  j["unit"] = to_json(instance.group.unit());
  if (!instance.ideals.empty()) {
    j["ideals"] = json::array();
    for (const auto& I : instance.ideals) j["ideals"].push_back(to_json(I));
  }
  if (!instance.elements.empty()) {
    j["elements"] = json::array();
    for (const auto& g : instance.elements) j["elements"].push_back(to_json(g));
  }
  if (instance.task) {
    json task{{"mode", std::string(to_string(instance.task->mode))}};
    if (instance.task->mode == TaskMode::zeroset) {
      task["generators"] = json::array();
      for (const auto& h : instance.task->generators) task["generators"].push_back(to_json(h));
    }
    j["task"] = task;
  }
  if (instance.mv) j["mv"] = true;
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// ----------------------------------------------------------------- reading

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
    if (start == text.size()) parse_error("empty integer string");
    for (std::size_t k = start; k < text.size(); ++k) {
      if (text[k] < '0' || text[k] > '9') parse_error("bad integer string '" + text + "'");
    }
    return Integer(text);
  }
  parse_error("expected an integer, got " + j.dump());
}

Structure structure_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Z") return Structure::atom();
    parse_error("unknown structure " + j.dump());
  }
  if (!j.is_object() || j.size() != 1) parse_error("structure must be \"Z\", {\"prod\":[...]} or {\"lex\":...}");
  if (j.contains("lex")) return Structure::lex(structure_from_json(j["lex"]));
  if (j.contains("prod")) {
    const json& parts = j["prod"];
    if (!parts.is_array() || parts.size() < 2) parse_error("\"prod\" needs an array of at least two structures");
    std::vector<Structure> children;
    for (const auto& p : parts) children.push_back(structure_from_json(p));
    return Structure::prod(std::move(children));
  }
  parse_error("unknown structure " + j.dump());
}

Element element_from_json(const Structure& s, const json& j) {
  // Numbers and arrays are well-formed elements; a wrong nesting is a shape error.
  auto mismatch = [&] {
    throw Error(ErrorCode::shape_mismatch, "element " + j.dump() + " does not match " + s.to_string());
  };
  if (!j.is_array() && !j.is_number_integer() && !j.is_string()) parse_error("bad element " + j.dump());
  switch (s.kind()) {
    case Kind::atom:
      if (j.is_array()) mismatch();
      return Element::atom(integer_from_json(j));
    case Kind::lex:
      if (!j.is_array() || j.size() != 2) mismatch();
      return Element::lex(integer_from_json(j[0]), element_from_json(s.bottom(), j[1]));
    case Kind::prod: {
      if (!j.is_array() || j.size() != s.children().size()) mismatch();
      std::vector<Element> parts;
      for (std::size_t k = 0; k < s.children().size(); ++k) {
        parts.push_back(element_from_json(s.children()[k], j[k]));
      }
      return Element::tuple(std::move(parts));
    }
  }
  parse_error("bad element");
}

Ideal ideal_from_json(const Structure& s, const json& j) {
  if (j.is_string()) {
    const auto& word = j.get_ref<const std::string&>();
    if (word == "zero") return zero_ideal(s);
    if (word == "all") return full_ideal(s);
    parse_error("unknown ideal \"" + word + "\"");
  }
  if (!j.is_object() || j.size() != 1) parse_error("bad ideal " + j.dump());
  if (j.contains("bottom")) {
    if (s.kind() != Kind::lex) {
      throw Error(ErrorCode::shape_mismatch, "\"bottom\" ideal for non-lex structure " + s.to_string());
    }
    return Ideal::bottom(ideal_from_json(s.bottom(), j["bottom"]));
  }
  if (j.contains("prod")) {
    const json& parts = j["prod"];
    if (s.kind() != Kind::prod || !parts.is_array() || parts.size() != s.children().size()) {
      throw Error(ErrorCode::shape_mismatch, "ideal " + j.dump() + " does not match " + s.to_string());
    }
    std::vector<Ideal> children;
    for (std::size_t k = 0; k < parts.size(); ++k) children.push_back(ideal_from_json(s.children()[k], parts[k]));
    return Ideal::prod(std::move(children));
  }
  parse_error("bad ideal " + j.dump());
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) parse_error("instance must be a JSON object");
  reject_unknown_keys(j, {"name", "structure", "unit", "ideals", "elements", "task", "mv"}, "instance");
  if (!j.contains("structure") || !j.contains("unit")) parse_error("instance needs \"structure\" and \"unit\"");

  const Structure s = structure_from_json(j["structure"]);
  Element unit = element_from_json(s, j["unit"]);
  auto validated = validate_unital_group(s, std::move(unit));
  if (auto* problems = std::get_if<std::vector<Diagnostic>>(&validated)) {
    const Diagnostic& d = problems->front();
    throw Error(d.code, d.message);
  }
  Instance instance{"", std::get<UnitalGroup>(std::move(validated)), {}, {}, std::nullopt, false};

  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_error("\"name\" must be a string");
    instance.name = j["name"].get<std::string>();
  }
  if (j.contains("mv")) {
    if (!j["mv"].is_boolean()) parse_error("\"mv\" must be a boolean");
    instance.mv = j["mv"].get<bool>();
  }
  if (j.contains("ideals")) {
    if (!j["ideals"].is_array()) parse_error("\"ideals\" must be an array");
    for (const auto& I : j["ideals"]) instance.ideals.push_back(ideal_from_json(s, I));
  }
  if (j.contains("elements")) {
    if (!j["elements"].is_array()) parse_error("\"elements\" must be an array");
    for (const auto& g : j["elements"]) {
      Element e = element_from_json(s, g);
      if (instance.mv) (void)MVElement(instance.group, e);  // validates 0 <= e <= u
      instance.elements.push_back(std::move(e));
    }
  }
  if (j.contains("task")) {
    const json& t = j["task"];
    if (!t.is_object()) parse_error("\"task\" must be an object");
    reject_unknown_keys(t, {"mode", "generators"}, "task");
    if (!t.contains("mode") || !t["mode"].is_string()) parse_error("task needs a \"mode\" string");
    Task task;
    const auto mode = t["mode"].get<std::string>();
    if (mode == "keimel") {
      task.mode = TaskMode::keimel;
    } else if (mode == "strong") {
      task.mode = TaskMode::strong;
    } else if (mode == "zeroset") {
      task.mode = TaskMode::zeroset;
    } else {
      parse_error("unknown task mode \"" + mode + "\"");
    }
    if (t.contains("generators")) {
      if (task.mode != TaskMode::zeroset) parse_error("\"generators\" only applies to zeroset tasks");
      if (!t["generators"].is_array()) parse_error("\"generators\" must be an array");
      for (const auto& h : t["generators"]) task.generators.push_back(element_from_json(s, h));
    }
    instance.task = std::move(task);
  }
  return instance;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

// ------------------------------------------------------------------ tasks

CongruenceSystem task_system(const Instance& instance) {
  if (instance.ideals.size() != instance.elements.size()) {
    throw Error(ErrorCode::length_mismatch, std::to_string(instance.ideals.size()) + " ideals but " +
                                                std::to_string(instance.elements.size()) + " elements");
  }
  CongruenceSystem system;
  for (std::size_t k = 0; k < instance.ideals.size(); ++k) {
    system.constraints.push_back({instance.ideals[k], instance.elements[k]});
  }
  return system;
}

PatchResult run_task(const Instance& instance, Exec exec) {
  if (!instance.task) parse_error("instance has no task block");
  switch (instance.task->mode) {
    case TaskMode::zeroset:
      return zero_set_patch(instance.group, instance.task->generators, instance.elements, exec);
    case TaskMode::keimel:
    case TaskMode::strong: {
      if (instance.ideals.size() != instance.elements.size()) {
        PatchResult r;
        r.certificate.status = PatchStatus::length_mismatch;
        r.certificate.message = std::to_string(instance.ideals.size()) + " ideals but " +
                                std::to_string(instance.elements.size()) + " elements";
        return r;
      }
      const CongruenceSystem system = task_system(instance);
      return instance.task->mode == TaskMode::keimel ? keimel_patch(instance.group, system)
                                                     : strong_patch(instance.group, system, exec);
    }
  }
  parse_error("unknown task mode");
}

json to_json(const Certificate& c) {
  json j{{"status", std::string(to_string(c.status))}, {"message", c.message}};
  if (c.i != 0) j["pair"] = json::array({c.i, c.j});
  if (c.difference) j["difference"] = to_json(*c.difference);
  if (c.prime) j["prime"] = to_json(*c.prime);
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.max_hypothesis_holds) j["max_hypothesis_holds"] = *c.max_hypothesis_holds;
  if (c.keimel) {
    json k{{"holds", c.keimel->holds}};
    if (!c.keimel->holds) {
      k["pair"] = json::array({c.keimel->i, c.keimel->j});
      k["difference"] = to_json(*c.keimel->difference);
    }
    if (c.keimel_solution) k["solution"] = to_json(*c.keimel_solution);
    j["keimel_hypothesis"] = k;
  }
  return j;
}

json to_json(const PatchResult& result) {
  json j{{"status", std::string(to_string(result.certificate.status))}, {"unique", result.unique}};
  j["solution"] = result.solution ? to_json(*result.solution) : json(nullptr);
  if (!result.solved()) j["certificate"] = to_json(result.certificate);
  return j;
}

// ---------------------------------------------------------------- reports

json spectrum_to_json(const SpectrumSpace& X) {
  json primes = json::array();
  for (std::size_t p = 0; p < X.size(); ++p) {
    primes.push_back({{"id", prime_id(p)}, {"ideal", to_json(X.prime(p))}, {"maximal", X.is_maximal(p)}});
  }
  json order = json::array();
  for (std::size_t p = 0; p < X.size(); ++p) {
    for (std::size_t q = 0; q < X.size(); ++q) {
      if (p != q && X.specializes(p, q)) order.push_back(json::array({prime_id(p), prime_id(q)}));
    }
  }
  auto ids = [&](const PrimeSet& S) {
    json out = json::array();
    for (auto p = S.find_first(); p != PrimeSet::npos; p = S.find_next(p)) out.push_back(prime_id(p));
    return out;
  };
  json table = json::array();
  if (X.size() <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << X.size()); ++mask) {
      PrimeSet S(X.size(), mask);
      table.push_back({{"set", ids(S)}, {"closure", ids(closure(X, S))}});
    }
  }
  return json{{"primes", primes},
              {"specialization", order},
              {"closure", table},
              {"max_dense", closure(X, X.maximal()) == X.full_set()}};
}

json yosida_to_json(const SpectrumSpace& X, const YosidaTable& table) {
  (void)X;
  json j = json::object();
  for (std::size_t k = 0; k < table.primes.size(); ++k) j[prime_id(table.primes[k])] = table.values[k].to_string();
  return j;
}

json analyze(const Instance& instance, Exec exec) {
  const UnitalGroup& G = instance.group;
  const SpectrumSpace X(G);
  const StrongSemisimplicity ss = is_strongly_semisimple(X, exec);
  json j;
  if (!instance.name.empty()) j["name"] = instance.name;
  j["structure"] = to_json(G.structure());
  j["unit"] = to_json(G.unit());
  j["ideal_count"] = X.lattice().size();
  j["spec_size"] = X.size();
  j["max_size"] = X.maximal().count();
  j["spectrum"] = spectrum_to_json(X)["primes"];
  j["radical"] = to_json(radical(X));
  j["semisimple"] = is_semisimple(X);
  j["strongly_semisimple"] = ss.holds;
  j["witness"] = ss.witness ? to_json(*ss.witness) : json(nullptr);
  json yosida = json::array();
  for (const auto& g : instance.elements) {
    yosida.push_back({{"element", to_json(g)}, {"values", yosida_to_json(X, yosida_table(X, g))}});
  }
  j["yosida"] = yosida;
  return j;
}

}  // namespace lgroup
