#include "lgroup/gallery.hpp"

namespace lgroup {

namespace {

Element e(std::initializer_list<long long> values) {
  std::vector<Element> parts;
  for (long long v : values) parts.push_back(Element::atom(v));
  return Element::tuple(std::move(parts));
}

Element lex(long long top, long long bottom) { return Element::lex(top, Element::atom(bottom)); }

Ideal coordinate_killer(std::size_t n, std::size_t keep) {
  // The maximal ideal of Z^n that is zero exactly at coordinate `keep`.
  std::vector<Ideal> parts(n, Ideal::all());
  parts[keep] = Ideal::zero();
  return Ideal::prod(std::move(parts));
}

Structure zn(std::size_t n) { return Structure::prod(std::vector<Structure>(n, Structure::atom())); }

}  // namespace

const std::vector<std::string_view>& gallery_names() {
  static const std::vector<std::string_view> names{"a2", "c3", "lex", "mix", "chang"};
  return names;
}

Instance gallery(std::string_view name) {
  if (name == "a2") {
    return Instance{"a2",
                    UnitalGroup(zn(2), e({1, 1})),
                    {coordinate_killer(2, 0), coordinate_killer(2, 1)},
                    {e({5, 7}), e({3, 4})},
                    Task{TaskMode::keimel, {}},
                    false};
  }
  if (name == "c3") {
    return Instance{"c3",
                    UnitalGroup(zn(3), e({1, 2, 1})),
                    {},
                    {e({2, 4, 6}), e({0, 4, 1})},
                    Task{TaskMode::zeroset, {e({0, 0, 1}), e({1, 0, 0})}},
                    false};
  }
  const Structure z_lex_z = Structure::lex(Structure::atom());
  if (name == "lex") {
    return Instance{"lex",
                    UnitalGroup(z_lex_z, lex(1, 0)),
                    {zero_ideal(z_lex_z), zero_ideal(z_lex_z)},
                    {lex(0, 0), lex(0, 1)},
                    Task{TaskMode::strong, {}},
                    false};
  }
  if (name == "mix") {
    const Structure s = Structure::prod({Structure::atom(), z_lex_z});
    auto m = [](long long a, long long top, long long bottom) {
      return Element::tuple({Element::atom(a), lex(top, bottom)});
    };
    return Instance{"mix",
                    UnitalGroup(s, m(1, 1, 0)),
                    {Ideal::prod({Ideal::zero(), Ideal::all()}), Ideal::prod({Ideal::all(), Ideal::bottom(Ideal::all())})},
                    {m(2, 0, 0), m(0, 0, 0)},
                    Task{TaskMode::strong, {}},
                    false};
  }
  if (name == "chang") {
    return Instance{"chang", UnitalGroup(z_lex_z, lex(1, 0)), {}, {lex(0, 3), lex(0, 4), lex(1, -3)}, std::nullopt, true};
  }
  throw Error(ErrorCode::parse_error, "unknown gallery instance '" + std::string(name) + "'");
}

}  // namespace lgroup
