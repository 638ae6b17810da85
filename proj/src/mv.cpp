#include "lgroup/mv.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgroup/semisimple.hpp"

namespace lgroup {

MVElement::MVElement(const UnitalGroup& G, Element carrier) : carrier_(std::move(carrier)) {
  G.check(carrier_);
  if (!leq(G.zero(), carrier_) || !leq(carrier_, G.unit())) {
    throw Error(ErrorCode::out_of_interval, carrier_.to_string() + " is not in [0, " + G.unit().to_string() + "]");
  }
}

MVElement mv_zero(const UnitalGroup& G) { return MVElement(G, G.zero()); }
MVElement mv_one(const UnitalGroup& G) { return MVElement(G, G.unit()); }

MVElement oplus(const UnitalGroup& G, const MVElement& x, const MVElement& y) {
  return MVElement(G, meet(G.unit(), x.carrier() + y.carrier()));
}

MVElement odot(const UnitalGroup& G, const MVElement& x, const MVElement& y) {
  return MVElement(G, join(G.zero(), x.carrier() + y.carrier() - G.unit()));
}

MVElement neg(const UnitalGroup& G, const MVElement& x) { return MVElement(G, G.unit() - x.carrier()); }

MVElement gamma_op(const UnitalGroup& G, MvOp op, const MVElement& x, const std::optional<MVElement>& y) {
  if (op == MvOp::neg) return neg(G, x);
  if (!y) throw std::invalid_argument("gamma_op: binary operation without a second operand");
  return op == MvOp::oplus ? oplus(G, x, *y) : odot(G, x, *y);
}

bool mv_leq(const UnitalGroup& G, const MVElement& x, const MVElement& y) {
  return oplus(G, neg(G, x), y) == mv_one(G);
}

MVElement random_mv_element(const UnitalGroup& G, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Integer> leaf(G.structure().leaf_count());
  for (auto& v : leaf) v = dist(rng);
  const Element x = from_leaves(G.structure(), leaf);
  return MVElement(G, meet(join(x, G.zero()), G.unit()));
}

std::vector<MVElement> bounded_interval(const UnitalGroup& G, int bound) {
  const std::size_t leaves = G.structure().leaf_count();
  if (leaves > 6) throw std::length_error("bounded_interval: more than 6 leaves");
  std::vector<int> digit(leaves, -bound);
  std::vector<Integer> leaf(leaves);
  std::vector<MVElement> out;
  const Element zero = G.zero();
  for (;;) {
    for (std::size_t k = 0; k < leaves; ++k) leaf[k] = digit[k];
    Element x = from_leaves(G.structure(), leaf);
    if (leq(zero, x) && leq(x, G.unit())) out.emplace_back(G, std::move(x));
    std::size_t k = leaves;
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++digit[k] <= bound) break;
      digit[k] = -bound;
    }
  }
}

MvCorrespondence mv_ideal_correspondence(const SpectrumSpace& X, int bound) {
  const UnitalGroup& G = X.group();
  const IdealLattice& L = X.lattice();
  int box = bound;
  for (const auto& v : leaves(G.unit())) box = std::max(box, static_cast<int>(boost::multiprecision::abs(v)));
  const std::vector<MVElement> sample = bounded_interval(G, box);
  const std::size_t n = L.size();
  const std::size_t m = sample.size();

  MvCorrespondence report;
  report.l_ideals = n;
  report.sample_size = m;

  std::vector<std::vector<bool>> restriction(n, std::vector<bool>(m));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < m; ++k) restriction[r][k] = contains(L[r], sample[k].carrier());
  }
  auto included = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < m; ++k) {
      if (restriction[a][k] && !restriction[b][k]) return false;
    }
    return true;
  };

  std::vector<std::vector<bool>> distinct = restriction;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  report.mv_ideals = distinct.size();
  report.injective = distinct.size() == n;

  report.ideals_closed = true;
  for (std::size_t r = 0; r < n && report.ideals_closed; ++r) {
    if (!contains(L[r], G.zero())) report.ideals_closed = false;
    for (std::size_t a = 0; a < m && report.ideals_closed; ++a) {
      if (!restriction[r][a]) continue;
      for (std::size_t b = 0; b < m; ++b) {
        const bool below = leq(sample[b].carrier(), sample[a].carrier());
        if ((below && !restriction[r][b]) ||
            (restriction[r][b] && !contains(L[r], oplus(G, sample[a], sample[b]).carrier()))) {
          report.ideals_closed = false;
          break;
        }
      }
    }
  }

  report.order_preserved = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (L.leq(a, b) != included(a, b)) report.order_preserved = false;
    }
  }

  // Proper MV-ideals are those missing the unit.
  const auto unit_pos = static_cast<std::size_t>(
      std::find(sample.begin(), sample.end(), mv_one(G)) - sample.begin());
  auto proper = [&](std::size_t r) { return !restriction[r][unit_pos]; };

  report.primes_preserved = true;
  std::vector<bool> mv_maximal(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    bool mv_prime = proper(r);
    for (std::size_t a = 0; a < m && mv_prime; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (!contains(L[r], odot(G, sample[a], neg(G, sample[b])).carrier()) &&
            !contains(L[r], odot(G, sample[b], neg(G, sample[a])).carrier())) {
          mv_prime = false;
          break;
        }
      }
    }
    if (mv_prime != X.find(L[r]).has_value()) report.primes_preserved = false;

    mv_maximal[r] = proper(r);
    for (std::size_t s = 0; s < n && mv_maximal[r]; ++s) {
      if (s != r && proper(s) && included(r, s) && restriction[r] != restriction[s]) mv_maximal[r] = false;
    }
  }

  report.maximals_preserved = true;
  std::vector<bool> mv_radical(m, true);
  for (std::size_t r = 0; r < n; ++r) {
    const auto p = X.find(L[r]);
    const bool l_maximal = p && X.is_maximal(*p);
    if (mv_maximal[r] != l_maximal) report.maximals_preserved = false;
    if (mv_maximal[r]) {
      for (std::size_t k = 0; k < m; ++k) mv_radical[k] = mv_radical[k] && restriction[r][k];
    }
  }
  const auto hit = std::find(restriction.begin(), restriction.end(), mv_radical);
  report.radical_index = static_cast<std::size_t>(hit - restriction.begin());
  report.radical_matches = hit != restriction.end() && L[report.radical_index] == radical(X);
  return report;
}

}  // namespace lgroup
