#include "lgroup/yosida.hpp"

namespace lgroup {

namespace {

Rational evaluate_at(const Quotient& q, const Element& g) {
  const Element image = q.project(g);
  const Element unit = q.group().unit();
  return Rational(image.value(), unit.value());
}

bool lex_free(const Structure& s) {
  if (s.kind() == Kind::lex) return false;
  for (const auto& c : s.children()) {
    if (!lex_free(c)) return false;
  }
  return true;
}

}  // namespace

Rational holder_eval(const UnitalGroup& G, const Element& g, const Ideal& m) {
  check_ideal(G, m);
  G.check(g);
  Quotient q(G, m);
  if (q.trivial() || q.group().structure().kind() != Kind::atom) {
    throw Error(ErrorCode::not_maximal, m.to_string() + " is not a maximal ideal of " + G.to_string());
  }
  return evaluate_at(q, g);
}

YosidaTable yosida_table(const SpectrumSpace& X, const Element& g) {
  X.group().check(g);
  YosidaTable table;
  for (std::size_t p = 0; p < X.size(); ++p) {
    if (!X.is_maximal(p)) continue;
    table.primes.push_back(p);
    table.values.push_back(evaluate_at(Quotient(X.group(), X.prime(p)), g));
  }
  return table;
}

PrimeSet principal_zero_set(const SpectrumSpace& X, const Element& g) {
  X.group().check(g);
  PrimeSet Z(X.size());
  for (std::size_t p = 0; p < X.size(); ++p) Z[p] = X.is_maximal(p) && contains(X.prime(p), g);
  return Z;
}

PrimeSet zero_set_by_values(const SpectrumSpace& X, const Element& g) {
  const YosidaTable table = yosida_table(X, g);
  PrimeSet Z(X.size());
  for (std::size_t k = 0; k < table.primes.size(); ++k) Z[table.primes[k]] = table.values[k].is_zero();
  return Z;
}

std::vector<std::size_t> yosida_points(const SpectrumSpace& X) {
  const Structure& s = X.group().structure();
  if (!lex_free(s)) throw Error(ErrorCode::shape_mismatch, s.to_string() + " has a lexicographic factor");
  std::vector<std::size_t> points;
  const std::size_t leaves = s.leaf_count();
  for (std::size_t p = 0; p < X.size(); ++p) {
    if (!X.is_maximal(p)) continue;
    // The coordinate where every member of m vanishes: the one leaf not killed.
    std::vector<Integer> probe(leaves, Integer(0));
    std::size_t found = leaves;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < leaves; ++k) {
      probe.assign(leaves, Integer(0));
      probe[k] = 1;
      if (!contains(X.prime(p), from_leaves(s, probe))) {
        found = k;
        ++hits;
      }
    }
    if (hits != 1) throw Error(ErrorCode::internal_invariant_violation, "maximal ideal without a unique point");
    points.push_back(found);
  }
  return points;
}

}  // namespace lgroup
