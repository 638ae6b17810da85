#include "lgroup/laws.hpp"

#include <algorithm>

#include "lgroup/crt.hpp"
#include "lgroup/detail/law_kernel.hpp"
#include "lgroup/gallery.hpp"
#include "lgroup/mv.hpp"
#include "lgroup/semisimple.hpp"
#include "lgroup/yosida.hpp"

namespace lgroup {

using detail::run_law;

namespace {

// Describes the pair (g, h) behind case k of an m*m sweep.
std::string pair_name(std::span<const Element> sample, std::size_t k) {
  const std::size_t m = sample.size();
  return "g=" + sample[k / m].to_string() + ", h=" + sample[k % m].to_string();
}

LawCheck single(std::string name, bool ok, std::string detail) {
  LawCheck law{std::move(name), 1, ok ? 0u : 1u, {}};
  if (!ok) law.first_failure = std::move(detail);
  return law;
}

bool has_lex(const Structure& s) {
  if (s.kind() == Kind::lex) return true;
  if (s.kind() == Kind::prod) {
    return std::any_of(s.children().begin(), s.children().end(), [](const Structure& c) { return has_lex(c); });
  }
  return false;
}

// Ideals of G containing lattice index i, in canonical order.
std::vector<std::size_t> interval_above(const IdealLattice& L, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (L.leq(i, k)) out.push_back(k);
  }
  return out;
}

bool quotient_semisimple(const UnitalGroup& G, const Ideal& P) {
  const Quotient q(G, P);
  return q.trivial() || is_semisimple(q.group());
}

}  // namespace

std::vector<Element> sample_elements(const UnitalGroup& G, std::mt19937_64& rng, std::size_t extra) {
  const Structure& s = G.structure();
  const std::size_t leaves = s.leaf_count();
  std::vector<Element> out;
  if (leaves <= 4) {
    std::vector<Integer> leaf(leaves, -1);
    for (;;) {
      out.push_back(from_leaves(s, leaf));
      std::size_t k = leaves;
      while (k > 0 && leaf[k - 1] == 1) leaf[--k] = -1;
      if (k == 0) break;
      leaf[k - 1] += 1;
    }
  }
  out.push_back(G.unit());
  out.push_back(canonical_generator(G, radical(G)));
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Integer> leaf(leaves);
  for (std::size_t k = 0; k < extra; ++k) {
    for (auto& v : leaf) v = dist(rng);
    out.push_back(from_leaves(s, leaf));
  }
  return out;
}

// ------------------------------------------------------------------ ideals

LawCheck principal_is_least(const IdealLattice& L, std::span<const Element> sample) {
  const UnitalGroup& G = L.group();
  const std::size_t n = L.size();
  std::vector<Ideal> principal;
  for (const auto& g : sample) principal.push_back(principal_ideal(G, g));
  return run_law(
      "principal_is_least", sample.size() * n, Exec::serial,
      [&](std::size_t k) {
        const std::size_t g = k / n;
        const std::size_t r = k % n;
        return contains(principal[g], sample[g]) && contains(L[r], sample[g]) == subset(principal[g], L[r]);
      },
      [&](std::size_t k) { return "g=" + sample[k / n].to_string() + ", I=" + L[k % n].to_string(); });
}

LawCheck lattice_distributive(const IdealLattice& L) {
  const std::size_t n = L.size();
  return run_law(
      "lattice_distributive", n * n * n, Exec::parallel,
      [&](std::size_t k) {
        const std::size_t a = k / (n * n);
        const std::size_t b = (k / n) % n;
        const std::size_t c = k % n;
        return L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)) &&
               L[L.meet(a, b)] == meet(L[a], L[b]) && L[L.join(a, b)] == join(L[a], L[b]);
      },
      [&](std::size_t k) {
        return "I=" + L[k / (n * n)].to_string() + ", J=" + L[(k / n) % n].to_string() + ", K=" + L[k % n].to_string();
      });
}

LawCheck every_ideal_principal(const IdealLattice& L) {
  return run_law(
      "every_ideal_principal", L.size(), Exec::serial,
      [&](std::size_t k) {
        return L.is_principal(k) && principal_ideal(L.group(), L.generator(k)) == L[k] &&
               principal_ideal(L.group(), canonical_generator(L.group(), L[k])) == L[k];
      },
      [&](std::size_t k) { return "I=" + L[k].to_string(); });
}

LawCheck ideal_sum_law(const IdealLattice& L, std::span<const Element> sample) {
  const UnitalGroup& G = L.group();
  const std::size_t n = L.size();
  const std::size_t m = sample.size();
  return run_law(
      "ideal_sum_law", n * n * m, Exec::parallel,
      [&](std::size_t k) {
        const Ideal& I = L[k / (n * m)];
        const Ideal& J = L[(k / m) % n];
        const Element& d = sample[k % m];
        if (!contains(join(I, J), d)) {
          try {
            (void)riesz_split(G, d, I, J);
            return false;
          } catch (const Error& e) {
            return e.code() == ErrorCode::not_in_join;
          }
        }
        const auto [a, b] = riesz_split(G, d, I, J);
        return contains(I, a) && contains(J, b) && a + b == d && contains(join(I, J), a + b);
      },
      [&](std::size_t k) {
        return "I=" + L[k / (n * m)].to_string() + ", J=" + L[(k / m) % n].to_string() +
               ", d=" + sample[k % m].to_string();
      });
}

LawCheck quotient_lattice_correspondence(const IdealLattice& L) {
  const UnitalGroup& G = L.group();
  return run_law(
      "quotient_lattice_correspondence", L.size(), Exec::serial,
      [&](std::size_t i) {
        const std::vector<std::size_t> above = interval_above(L, i);
        const Quotient q(G, L[i]);
        if (q.trivial()) return above.size() == 1;
        const IdealLattice LQ(q.group());
        if (LQ.size() != above.size()) return false;
        std::vector<std::size_t> image;
        for (std::size_t k : above) image.push_back(LQ.index_of(q.project_ideal(L[k])));
        std::vector<std::size_t> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (std::size_t a = 0; a < above.size(); ++a) {
          for (std::size_t b = 0; b < above.size(); ++b) {
            if (L.leq(above[a], above[b]) != LQ.leq(image[a], image[b])) return false;
          }
        }
        return true;
      },
      [&](std::size_t i) { return "I=" + L[i].to_string(); });
}

LawCheck spectrum_quotient_correspondence(const SpectrumSpace& X) {
  const UnitalGroup& G = X.group();
  const IdealLattice& L = X.lattice();
  return run_law(
      "spectrum_quotient_correspondence", L.size(), Exec::serial,
      [&](std::size_t i) {
        const PrimeSet& V = X.vanishing_locus_of(i);
        const Quotient q(G, L[i]);
        if (q.trivial()) return V.none();
        const SpectrumSpace Y(q.group());
        if (Y.size() != V.count()) return false;
        std::vector<std::size_t> pts;
        std::vector<std::size_t> image;
        for (auto p = V.find_first(); p != PrimeSet::npos; p = V.find_next(p)) {
          const auto r = Y.find(q.project_ideal(X.prime(p)));
          if (!r || X.is_maximal(p) != Y.is_maximal(*r)) return false;
          pts.push_back(p);
          image.push_back(*r);
        }
        std::vector<std::size_t> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (std::size_t a = 0; a < pts.size(); ++a) {
          for (std::size_t b = 0; b < pts.size(); ++b) {
            if (X.specializes(pts[a], pts[b]) != Y.specializes(image[a], image[b])) return false;
          }
        }
        return true;
      },
      [&](std::size_t i) { return "I=" + L[i].to_string(); });
}

// ------------------------------------------------------------- semisimple

LawCheck semisimple_iff_max_dense(const SpectrumSpace& X) {
  const bool ss = is_semisimple(X);
  const bool dense = closure(X, X.maximal()) == X.full_set();
  return single("semisimple_iff_max_dense", ss == dense,
                "semisimple=" + std::to_string(ss) + ", max dense=" + std::to_string(dense));
}

LawCheck strongly_semisimple_characterizations(const SpectrumSpace& X, Exec exec) {
  const IdealLattice& L = X.lattice();
  std::vector<std::size_t> principal;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (L.is_principal(k)) principal.push_back(k);
  }
  std::vector<std::uint8_t> quotient_ss(principal.size());
  for (std::size_t c = 0; c < principal.size(); ++c) {
    quotient_ss[c] = quotient_semisimple(X.group(), L[principal[c]]);
  }
  const StrongSemisimplicity strong = is_strongly_semisimple(X, exec);
  const bool all_ss = std::all_of(quotient_ss.begin(), quotient_ss.end(), [](std::uint8_t b) { return b != 0; });
  const std::size_t n = principal.size();
  return run_law(
      "strongly_semisimple_characterizations", n + 1, exec,
      [&](std::size_t c) {
        if (c == n) return strong.holds == all_ss && (!strong.holds || is_semisimple(X));
        const PrimeSet& V = X.vanishing_locus_of(principal[c]);
        const PrimeSet VM = V & X.maximal();
        const bool dense = V == closure(X, VM);
        const bool meet_of_max = X.ideal_of_locus_index(VM) == principal[c];
        return dense == (quotient_ss[c] != 0) && meet_of_max == (quotient_ss[c] != 0);
      },
      [&](std::size_t c) {
        if (c == n) return "strongly semisimple=" + std::to_string(strong.holds);
        return "P=" + L[principal[c]].to_string();
      });
}

LawCheck archimedean_cross_check(const SpectrumSpace& X, int bound) {
  const UnitalGroup& G = X.group();
  const auto witness = archimedean_falsify(G, bound);
  const bool ss = is_semisimple(X);
  bool valid = true;
  if (witness) {
    const auto& [g, h] = *witness;
    valid = leq(G.zero(), g) && g != G.zero() && leq(g, h) && all_multiples_below(g, h) &&
            !contains(X.lattice()[0], g) && contains(radical(X), g);
  }
  std::string detail = "semisimple=" + std::to_string(ss) + ", witness=";
  detail += witness ? witness->first.to_string() + " <= " + witness->second.to_string() : "none";
  return single("archimedean_cross_check", witness.has_value() != ss && valid, detail);
}

// ----------------------------------------------------------------- yosida

LawCheck yosida_laws(const SpectrumSpace& X, std::span<const Element> sample) {
  const UnitalGroup& G = X.group();
  std::vector<std::size_t> maxima;
  std::vector<Quotient> quotients;
  for (std::size_t p = 0; p < X.size(); ++p) {
    if (!X.is_maximal(p)) continue;
    maxima.push_back(p);
    quotients.emplace_back(G, X.prime(p));
  }
  auto value = [&](std::size_t mi, const Element& g) {
    const Quotient& q = quotients[mi];
    return Rational(q.project(g).value(), q.project(G.unit()).value());
  };
  const Ideal rad = radical(X);
  const std::size_t m = sample.size();
  const bool lex_free = !has_lex(G.structure());

  LawCheck law = run_law(
      "yosida_laws", m * m + 1, Exec::parallel,
      [&](std::size_t k) {
        if (k == m * m) {
          if (!lex_free) return true;
          const std::vector<std::size_t> pts = yosida_points(X);
          std::vector<std::size_t> sorted = pts;
          std::sort(sorted.begin(), sorted.end());
          return pts.size() == G.structure().leaf_count() &&
                 std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
        const Element& g = sample[k / m];
        const Element& h = sample[k % m];
        for (std::size_t mi = 0; mi < maxima.size(); ++mi) {
          const Rational vg = value(mi, g);
          const Rational vh = value(mi, h);
          if (value(mi, g + h) != vg + vh) return false;
          if (value(mi, meet(g, h)) != min(vg, vh)) return false;
          if (value(mi, join(g, h)) != max(vg, vh)) return false;
          if (value(mi, G.unit()) != Rational(1)) return false;
        }
        if (k % m != 0) return true;
        // Per-element checks run once, on the first pair of each row.
        const YosidaTable t = yosida_table(X, g);
        for (std::size_t mi = 0; mi < maxima.size(); ++mi) {
          if (t.primes[mi] != maxima[mi] || t.values[mi] != value(mi, g)) return false;
          if (holder_eval(G, g, X.prime(maxima[mi])) != t.values[mi]) return false;
        }
        const PrimeSet Z = principal_zero_set(X, g);
        return Z == zero_set_by_values(X, g) && (Z == X.maximal()) == contains(rad, g);
      },
      [&](std::size_t k) { return k == m * m ? std::string("yosida_points") : pair_name(sample, k); });
  return law;
}

// -------------------------------------------------------------------- crt

LawCheck spectral_patching_equivalence(const SpectrumSpace& X, std::span<const Element> sample) {
  const IdealLattice& L = X.lattice();
  const std::size_t n = L.size();
  const std::size_t m = sample.size();
  return run_law(
      "spectral_patching_equivalence", n * m * m, Exec::parallel,
      [&](std::size_t k) {
        const std::size_t r = k / (m * m);
        const Element d = sample[(k / m) % m] - sample[k % m];
        const PrimeSet& V = X.vanishing_locus_of(r);
        bool everywhere = true;
        for (auto p = V.find_first(); p != PrimeSet::npos && everywhere; p = V.find_next(p)) {
          everywhere = contains(X.prime(p), d);
        }
        return everywhere == contains(L[r], d);
      },
      [&](std::size_t k) { return "I=" + L[k / (m * m)].to_string() + ", " + pair_name(sample, k % (m * m)); });
}

LawCheck merge_distributivity(const IdealLattice& L) {
  const std::size_t n = L.size();
  return run_law(
      "merge_distributivity", n * n * n, Exec::parallel,
      [&](std::size_t k) {
        const std::size_t a = k / (n * n);
        const std::size_t b = (k / n) % n;
        const std::size_t c = k % n;
        return L.meet(L.join(a, c), L.join(b, c)) == L.join(L.meet(a, b), c);
      },
      [&](std::size_t k) {
        return "I1=" + L[k / (n * n)].to_string() + ", I2=" + L[(k / n) % n].to_string() +
               ", J=" + L[k % n].to_string();
      });
}

LawCheck upgrade_lemma(const SpectrumSpace& X, std::span<const Element> sample, Exec exec) {
  const UnitalGroup& G = X.group();
  const IdealLattice& L = X.lattice();
  const std::size_t n = L.size();
  const std::size_t m = sample.size();
  const std::size_t per = m * m + 1;
  // The last difference of each row generates the meet of the maximal ideals
  // above K, which escapes K exactly when G/K is not semisimple.
  std::vector<Element> hull;
  for (std::size_t r = 0; r < n; ++r) {
    hull.push_back(canonical_generator(G, L[X.ideal_of_locus_index(X.vanishing_locus_of(r) & X.maximal())]));
  }
  auto difference = [&](std::size_t k) {
    const std::size_t c = k % per;
    return c == m * m ? hull[k / per] : sample[c / m] - sample[c % m];
  };
  const LawCheck inner = run_law(
      "upgrade_lemma", n * per, exec,
      [&](std::size_t k) {
        const std::size_t r = k / per;
        const Element d = difference(k);
        const PrimeSet VM = X.vanishing_locus_of(r) & X.maximal();
        for (auto p = VM.find_first(); p != PrimeSet::npos; p = VM.find_next(p)) {
          if (!contains(X.prime(p), d)) return true;
        }
        return contains(L[r], d);
      },
      [&](std::size_t k) { return "K=" + L[k / per].to_string() + ", d=" + difference(k).to_string(); });
  const bool strong = is_strongly_semisimple(X, exec).holds;
  LawCheck law{"upgrade_lemma", inner.cases, inner.holds() == strong ? 0u : 1u, {}};
  if (!law.holds()) {
    law.first_failure = "strongly semisimple=" + std::to_string(strong) +
                        (inner.holds() ? std::string(", no violation found") : ", violation at " + inner.first_failure);
  }
  return law;
}

// --------------------------------------------------------------------- mv

LawCheck mv_axioms(const UnitalGroup& G, std::mt19937_64& rng, std::size_t triples) {
  int bound = 3;
  for (const auto& v : leaves(G.unit())) bound = std::max(bound, static_cast<int>(boost::multiprecision::abs(v)) + 1);
  std::vector<MVElement> xs;
  xs.reserve(3 * triples);
  for (std::size_t k = 0; k < 3 * triples; ++k) xs.push_back(random_mv_element(G, rng, bound));
  const MVElement zero = mv_zero(G);
  const MVElement one = mv_one(G);
  return run_law(
      "mv_axioms", triples, Exec::parallel,
      [&](std::size_t k) {
        const MVElement& x = xs[3 * k];
        const MVElement& y = xs[3 * k + 1];
        const MVElement& z = xs[3 * k + 2];
        return oplus(G, x, oplus(G, y, z)) == oplus(G, oplus(G, x, y), z) && oplus(G, x, y) == oplus(G, y, x) &&
               oplus(G, x, zero) == x && neg(G, neg(G, x)) == x && oplus(G, x, neg(G, zero)) == one &&
               oplus(G, neg(G, oplus(G, neg(G, x), y)), y) == oplus(G, neg(G, oplus(G, neg(G, y), x)), x) &&
               odot(G, x, y) == neg(G, oplus(G, neg(G, x), neg(G, y))) &&
               mv_leq(G, x, y) == leq(x.carrier(), y.carrier()) &&
               gamma_op(G, MvOp::oplus, x, y) == oplus(G, x, y) && gamma_op(G, MvOp::odot, x, y) == odot(G, x, y) &&
               gamma_op(G, MvOp::neg, x) == neg(G, x);
      },
      [&](std::size_t k) {
        return "x=" + xs[3 * k].carrier().to_string() + ", y=" + xs[3 * k + 1].carrier().to_string() +
               ", z=" + xs[3 * k + 2].carrier().to_string();
      });
}

LawCheck mv_correspondence(const SpectrumSpace& X) {
  const MvCorrespondence c = mv_ideal_correspondence(X);
  std::string detail = "l_ideals=" + std::to_string(c.l_ideals) + ", mv_ideals=" + std::to_string(c.mv_ideals) +
                       ", injective=" + std::to_string(c.injective) + ", closed=" + std::to_string(c.ideals_closed) +
                       ", order=" + std::to_string(c.order_preserved) + ", primes=" +
                       std::to_string(c.primes_preserved) + ", maximals=" + std::to_string(c.maximals_preserved) +
                       ", radical=" + std::to_string(c.radical_matches);
  return single("mv_correspondence", c.holds(), detail);
}

// --------------------------------------------------------------- selftest

std::vector<SuiteResult> run_selftest(Exec exec) {
  std::vector<SuiteResult> out;
  std::uint64_t seed = 0x5eed;
  for (std::string_view name : gallery_names()) {
    const Instance inst = gallery(name);
    const UnitalGroup& G = inst.group;
    const SpectrumSpace X(G);
    const IdealLattice& L = X.lattice();
    std::mt19937_64 rng(seed++);
    const std::vector<Element> sample = sample_elements(G, rng);
    auto add = [&](LawCheck law) { out.push_back({inst.name, std::move(law)}); };

    const SpectralReport report = spectral_axioms_report(X, exec);
    for (const auto& law : report.laws) add(law);

    const SpectralReport serial = spectral_axioms_report(X, Exec::serial);
    bool agree = serial.laws.size() == report.laws.size() && serial.max_dense == report.max_dense;
    for (std::size_t k = 0; agree && k < serial.laws.size(); ++k) {
      agree = serial.laws[k].failures == report.laws[k].failures &&
              serial.laws[k].first_failure == report.laws[k].first_failure;
    }
    const auto ss_serial = is_strongly_semisimple(X, Exec::serial);
    const auto ss_parallel = is_strongly_semisimple(X, Exec::parallel);
    agree = agree && ss_serial.holds == ss_parallel.holds && ss_serial.witness == ss_parallel.witness;
    add(single("exec_agreement", agree, "serial and parallel kernels disagree"));

    add(principal_is_least(L, sample));
    add(lattice_distributive(L));
    add(every_ideal_principal(L));
    add(ideal_sum_law(L, sample));
    add(quotient_lattice_correspondence(L));
    add(spectrum_quotient_correspondence(X));
    add(semisimple_iff_max_dense(X));
    add(strongly_semisimple_characterizations(X, exec));
    add(archimedean_cross_check(X, 3));
    add(yosida_laws(X, sample));
    add(spectral_patching_equivalence(X, sample));
    add(merge_distributivity(L));
    add(upgrade_lemma(X, sample, exec));
    add(mv_axioms(G, rng, 1000));
    add(mv_correspondence(X));

    if (inst.task) {
      bool ok = true;
      std::string detail;
      try {
        const PatchResult result = run_task(inst, exec);
        detail = std::string(to_string(result.certificate.status));
        if (result.solved() && inst.task->mode != TaskMode::zeroset) {
          ok = verify_congruences(G, task_system(inst), *result.solution);
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
      add(single("task_runs", ok, detail));
    }
  }
  return out;
}

}  // namespace lgroup
