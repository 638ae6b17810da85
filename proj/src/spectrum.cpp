#include "lgroup/spectrum.hpp"

#include "lgroup/detail/law_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace lgroup {

// ----------------------------------------------------------- SpectrumSpace

SpectrumSpace::SpectrumSpace(const UnitalGroup& G) : lattice_(G) {
  std::vector<bool> max_flags;
  for (std::size_t k = 0; k < lattice_.size(); ++k) {
    if (k == lattice_.top()) continue;  // proper ideals only
    Quotient q(G, lattice_[k]);
    const Structure& s = q.group().structure();
    if (!is_chain(s)) continue;
    primes_.push_back(k);
    max_flags.push_back(s.kind() == Kind::atom);
  }
  maximal_.resize(primes_.size());
  for (std::size_t p = 0; p < primes_.size(); ++p) maximal_[p] = max_flags[p];

  vanishing_.reserve(lattice_.size());
  for (std::size_t r = 0; r < lattice_.size(); ++r) {
    PrimeSet v(primes_.size());
    for (std::size_t p = 0; p < primes_.size(); ++p) v[p] = lattice_.leq(r, primes_[p]);
    vanishing_.push_back(std::move(v));
  }
}

std::optional<std::size_t> SpectrumSpace::find(const Ideal& I) const {
  if (!I.matches(group().structure())) return std::nullopt;
  const std::size_t k = ideal_index(group().structure(), I);
  auto it = std::lower_bound(primes_.begin(), primes_.end(), k);
  if (it == primes_.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

std::size_t SpectrumSpace::prime_index(const Ideal& I) const {
  if (auto p = find(I)) return *p;
  throw Error(ErrorCode::unknown_prime, I.to_string() + " is not a prime of " + group().to_string());
}

PrimeSet SpectrumSpace::to_set(std::span<const Ideal> primes) const {
  PrimeSet S(size());
  for (const auto& I : primes) S.set(prime_index(I));
  return S;
}

std::size_t SpectrumSpace::ideal_of_locus_index(const PrimeSet& S) const {
  if (S.size() != size()) throw Error(ErrorCode::unknown_prime, "prime set of the wrong size");
  std::size_t k = lattice_.top();
  for (auto p = S.find_first(); p != PrimeSet::npos; p = S.find_next(p)) k = lattice_.meet(k, primes_[p]);
  return k;
}

SpectrumSpace compute_spectrum(const UnitalGroup& G) { return SpectrumSpace(G); }

PrimeSet vanishing_locus(const SpectrumSpace& X, const Ideal& R) {
  return X.vanishing_locus_of(X.lattice().index_of(R));
}

PrimeSet vanishing_locus(const SpectrumSpace& X, std::span<const Element> R) {
  // p ⊇ R iff p ⊇ <R>; checked element by element to stay close to the definition.
  PrimeSet V = X.full_set();
  for (const auto& g : R) {
    X.group().check(g);
    for (std::size_t p = 0; p < X.size(); ++p) {
      if (!contains(X.prime(p), g)) V.reset(p);
    }
  }
  return V;
}

Ideal ideal_of_locus(const SpectrumSpace& X, const PrimeSet& S) { return X.lattice()[X.ideal_of_locus_index(S)]; }

Ideal ideal_of_locus(const SpectrumSpace& X, std::span<const Ideal> S) { return ideal_of_locus(X, X.to_set(S)); }

PrimeSet closure(const SpectrumSpace& X, const PrimeSet& S) {
  return X.vanishing_locus_of(X.ideal_of_locus_index(S));
}

std::vector<Ideal> closure(const SpectrumSpace& X, std::span<const Ideal> S) {
  return members(X, closure(X, X.to_set(S)));
}

std::vector<Ideal> members(const SpectrumSpace& X, const PrimeSet& S) {
  std::vector<Ideal> out;
  for (auto p = S.find_first(); p != PrimeSet::npos; p = S.find_next(p)) out.push_back(X.prime(p));
  return out;
}

// ------------------------------------------------------------------ report

bool SpectralReport::all_hold() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.holds(); });
}

namespace {

using Mask = std::uint64_t;

bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

using detail::run_law;

// Precomputed bitmask tables over a spectrum with at most 20 points.
struct Tables {
  const SpectrumSpace& X;
  std::size_t n;             // |Spec|
  std::size_t subsets;       // 2^n
  std::size_t ideals;        // |Idl|
  std::vector<Mask> vmask;   // V(r) per lattice ideal
  std::vector<std::size_t> kernel;  // I(S) per subset
  std::vector<Mask> cl;      // cl(S) per subset
  std::vector<std::uint8_t> is_locus;  // S = V(r) for some r
  std::vector<Mask> up;      // specialization up-set of each point
  std::vector<Mask> closed;  // distinct closed sets
  std::vector<std::size_t> principal;  // lattice indices of principal ideals

  explicit Tables(const SpectrumSpace& space)
      : X(space), n(space.size()), subsets(std::size_t{1} << space.size()), ideals(space.lattice().size()) {
    const auto& L = X.lattice();
    vmask.resize(ideals);
    for (std::size_t r = 0; r < ideals; ++r) {
      Mask m = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (L.leq(r, X.lattice_index(p))) m |= Mask{1} << p;
      }
      vmask[r] = m;
    }
    kernel.resize(subsets);
    kernel[0] = L.top();
    for (std::size_t S = 1; S < subsets; ++S) {
      const auto low = static_cast<std::size_t>(std::countr_zero(static_cast<Mask>(S)));
      kernel[S] = L.meet(kernel[S & (S - 1)], X.lattice_index(low));
    }
    cl.resize(subsets);
    for (std::size_t S = 0; S < subsets; ++S) cl[S] = vmask[kernel[S]];
    is_locus.assign(subsets, 0);
    for (std::size_t r = 0; r < ideals; ++r) is_locus[vmask[r]] = 1;
    for (std::size_t S = 0; S < subsets; ++S) {
      if (is_locus[S]) closed.push_back(static_cast<Mask>(S));
    }
    up.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (X.specializes(p, q)) up[p] |= Mask{1} << q;
      }
    }
    for (std::size_t r = 0; r < ideals; ++r) {
      if (L.is_principal(r)) principal.push_back(r);
    }
  }

  Mask full() const { return subsets - 1; }

  std::string subset_name(Mask S) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t p = 0; p < n; ++p) {
      if (S >> p & 1) {
        if (!first) out += ", ";
        out += X.prime(p).to_string();
        first = false;
      }
    }
    return out + "}";
  }

  std::string ideal_name(std::size_t r) const { return X.lattice()[r].to_string(); }
};

}  // namespace

SpectralReport spectral_axioms_report(const SpectrumSpace& X, Exec exec) {
  if (X.size() > 20) throw std::length_error("spectral_axioms_report: more than 20 primes");
  const Tables t(X);
  const auto& L = X.lattice();
  const std::size_t N = t.ideals;
  const std::size_t S2 = t.subsets;
  SpectralReport report;

  // Item 1: R ⊆ I(S) iff S ⊆ V(R).
  report.laws.push_back(run_law(
      "galois_adjunction", N * S2, exec,
      [&](std::size_t i) {
        const std::size_t r = i / S2;
        const Mask S = i % S2;
        return L.leq(r, t.kernel[S]) == is_subset(S, t.vmask[r]);
      },
      [&](std::size_t i) { return "R=" + t.ideal_name(i / S2) + ", S=" + t.subset_name(i % S2); }));

  // Item 2: V(R1 ∨ R2) = V(R1) ∩ V(R2) and I(S ∪ T) = I(S) ∧ I(T).
  report.laws.push_back(run_law(
      "unions_to_intersections", N * N + S2 * S2, exec,
      [&](std::size_t i) {
        if (i < N * N) {
          const std::size_t a = i / N;
          const std::size_t b = i % N;
          return t.vmask[L.join(a, b)] == (t.vmask[a] & t.vmask[b]);
        }
        const std::size_t k = i - N * N;
        const Mask S = k / S2;
        const Mask T = k % S2;
        return t.kernel[S | T] == L.meet(t.kernel[S], t.kernel[T]);
      },
      [&](std::size_t i) {
        if (i < N * N) return "R1=" + t.ideal_name(i / N) + ", R2=" + t.ideal_name(i % N);
        const std::size_t k = i - N * N;
        return "S=" + t.subset_name(k / S2) + ", T=" + t.subset_name(k % S2);
      }));

  report.laws.push_back(run_law(
      "galois_triangles", N + S2, exec,
      [&](std::size_t i) {
        if (i < N) return t.vmask[t.kernel[t.vmask[i]]] == t.vmask[i];
        const Mask S = i - N;
        return t.kernel[t.vmask[t.kernel[S]]] == t.kernel[S];
      },
      [&](std::size_t i) {
        return i < N ? "R=" + t.ideal_name(i) : "S=" + t.subset_name(i - N);
      }));

  // Item 5: cl = V∘I is a closure operator preserving finite unions.
  report.laws.push_back(run_law(
      "closure_extensive", S2, exec, [&](std::size_t S) { return is_subset(S, t.cl[S]); },
      [&](std::size_t S) { return "S=" + t.subset_name(S); }));
  report.laws.push_back(run_law(
      "closure_idempotent", S2, exec, [&](std::size_t S) { return t.cl[t.cl[S]] == t.cl[S]; },
      [&](std::size_t S) { return "S=" + t.subset_name(S); }));
  report.laws.push_back(run_law(
      "closure_monotone", S2 * S2, exec,
      [&](std::size_t i) {
        const Mask S = i / S2;
        const Mask T = i % S2;
        return !is_subset(S, T) || is_subset(t.cl[S], t.cl[T]);
      },
      [&](std::size_t i) { return "S=" + t.subset_name(i / S2) + ", T=" + t.subset_name(i % S2); }));
  report.laws.push_back(run_law(
      "closure_finite_unions", S2 * S2 + 1, exec,
      [&](std::size_t i) {
        if (i == S2 * S2) return t.cl[0] == 0;
        const Mask S = i / S2;
        const Mask T = i % S2;
        return t.cl[S | T] == (t.cl[S] | t.cl[T]);
      },
      [&](std::size_t i) {
        if (i == S2 * S2) return std::string("cl(empty) is not empty");
        return "S=" + t.subset_name(i / S2) + ", T=" + t.subset_name(i % S2);
      }));

  // Items 3 and 4: fixed points.
  report.laws.push_back(run_law(
      "ideal_fixed_points", N, exec, [&](std::size_t r) { return t.kernel[t.vmask[r]] == r; },
      [&](std::size_t r) { return "I(V(R)) != R for R=" + t.ideal_name(r); }));
  report.laws.push_back(run_law(
      "locus_fixed_points", S2, exec,
      [&](std::size_t S) { return (t.cl[S] == S) == (t.is_locus[S] != 0); },
      [&](std::size_t S) { return "S=" + t.subset_name(S); }));

  report.laws.push_back(run_law(
      "closed_sets_form_topology", t.closed.size() * t.closed.size() + 2, exec,
      [&](std::size_t i) {
        const std::size_t K = t.closed.size();
        if (i == K * K) return t.is_locus[0] != 0;
        if (i == K * K + 1) return t.is_locus[t.full()] != 0;
        const Mask A = t.closed[i / K];
        const Mask B = t.closed[i % K];
        return t.is_locus[A | B] != 0 && t.is_locus[A & B] != 0;
      },
      [&](std::size_t i) {
        const std::size_t K = t.closed.size();
        if (i >= K * K) return std::string("empty set or whole space not closed");
        return "A=" + t.subset_name(t.closed[i / K]) + ", B=" + t.subset_name(t.closed[i % K]);
      }));

  report.laws.push_back(run_law(
      "closed_sets_are_upsets", S2, exec,
      [&](std::size_t S) {
        bool upset = true;
        for (std::size_t p = 0; p < t.n; ++p) {
          if ((S >> p & 1) && !is_subset(t.up[p], S)) upset = false;
        }
        return upset == (t.is_locus[S] != 0);
      },
      [&](std::size_t S) { return "S=" + t.subset_name(S); }));

  // Item 6: spectral.
  report.laws.push_back(run_law(
      "t0", t.n * t.n, exec,
      [&](std::size_t i) {
        const std::size_t p = i / t.n;
        const std::size_t q = i % t.n;
        return p == q || t.cl[Mask{1} << p] != t.cl[Mask{1} << q];
      },
      [&](std::size_t i) {
        return "points " + X.prime(i / t.n).to_string() + " and " + X.prime(i % t.n).to_string() +
               " have equal closures";
      }));
  report.laws.push_back(run_law(
      "sober", t.closed.size(), exec,
      [&](std::size_t k) {
        const Mask C = t.closed[k];
        if (C == 0) return true;
        bool reducible = false;
        std::vector<Mask> proper;
        for (Mask A : t.closed) {
          if (A != C && is_subset(A, C)) proper.push_back(A);
        }
        for (std::size_t a = 0; a < proper.size() && !reducible; ++a) {
          for (std::size_t b = a; b < proper.size(); ++b) {
            if ((proper[a] | proper[b]) == C) {
              reducible = true;
              break;
            }
          }
        }
        std::size_t generic = 0;
        for (std::size_t p = 0; p < t.n; ++p) {
          if (t.cl[Mask{1} << p] == C) ++generic;
        }
        return reducible ? generic == 0 : generic == 1;
      },
      [&](std::size_t k) { return "closed set " + t.subset_name(t.closed[k]); }));

  // Items 6 and 7: compact opens are the complements of V(P), P principal.
  {
    std::vector<std::uint8_t> compact_open(S2, 0);
    for (std::size_t P : t.principal) compact_open[t.full() & ~t.vmask[P]] = 1;
    const std::size_t NP = t.principal.size();
    const std::size_t K = t.closed.size();
    report.laws.push_back(run_law(
        "compact_open_basis", NP * NP + K * t.n + K, exec,
        [&](std::size_t i) {
          if (i < NP * NP) {
            const Mask a = t.full() & ~t.vmask[t.principal[i / NP]];
            const Mask b = t.full() & ~t.vmask[t.principal[i % NP]];
            return compact_open[a & b] != 0;
          }
          if (i < NP * NP + K * t.n) {
            const std::size_t k = i - NP * NP;
            const Mask open = t.full() & ~t.closed[k / t.n];
            const std::size_t p = k % t.n;
            if (!(open >> p & 1)) return true;
            return std::any_of(t.principal.begin(), t.principal.end(), [&](std::size_t P) {
              const Mask B = t.full() & ~t.vmask[P];
              return (B >> p & 1) && is_subset(B, open);
            });
          }
          // Finite space: every open is compact, so every open must be of the form Spec \ V(P).
          const std::size_t k = i - NP * NP - K * t.n;
          return compact_open[t.full() & ~t.closed[k]] != 0;
        },
        [&](std::size_t i) {
          if (i < NP * NP) {
            return "intersection of basics for P=" + t.ideal_name(t.principal[i / NP]) +
                   ", Q=" + t.ideal_name(t.principal[i % NP]);
          }
          if (i < NP * NP + K * t.n) {
            const std::size_t k = i - NP * NP;
            return "no basic neighbourhood of " + X.prime(k % t.n).to_string() + " inside complement of " +
                   t.subset_name(t.closed[k / t.n]);
          }
          return "open complement of " + t.subset_name(t.closed[i - NP * NP - K * t.n]) + " is not basic";
        }));
    report.laws.push_back(run_law(
        "principal_isomorphism", NP * NP, exec,
        [&](std::size_t i) {
          const std::size_t P = t.principal[i / NP];
          const std::size_t Q = t.principal[i % NP];
          const Mask oP = t.full() & ~t.vmask[P];
          const Mask oQ = t.full() & ~t.vmask[Q];
          const bool order = L.leq(P, Q) == is_subset(oP, oQ);
          const bool injective = (P == Q) == (oP == oQ);
          const bool meets = t.vmask[L.meet(P, Q)] == (t.vmask[P] | t.vmask[Q]);
          const bool joins = t.vmask[L.join(P, Q)] == (t.vmask[P] & t.vmask[Q]);
          return order && injective && meets && joins;
        },
        [&](std::size_t i) {
          return "P=" + t.ideal_name(t.principal[i / NP]) + ", Q=" + t.ideal_name(t.principal[i % NP]);
        }));
  }

  // Item 8: Max is compact Hausdorff, i.e. a discrete antichain when finite.
  {
    Mask max = 0;
    for (std::size_t p = 0; p < t.n; ++p) {
      if (X.is_maximal(p)) max |= Mask{1} << p;
    }
    report.laws.push_back(run_law(
        "max_discrete_antichain", t.n, exec,
        [&](std::size_t m) {
          if (!(max >> m & 1)) return true;
          if ((t.up[m] & max) != (Mask{1} << m)) return false;
          const Mask others = max & ~(Mask{1} << m);
          return std::any_of(t.closed.begin(), t.closed.end(), [&](Mask C) { return (C & max) == others; });
        },
        [&](std::size_t m) { return "maximal " + X.prime(m).to_string(); }));
    report.max_dense = t.cl[max] == t.full();
  }
  return report;
}

std::string to_dot(const SpectrumSpace& X) {
  std::string out = "digraph spectrum {\n  rankdir=BT;\n";
  for (std::size_t p = 0; p < X.size(); ++p) {
    out += "  p" + std::to_string(p) + " [label=\"" + X.prime(p).to_string() + "\", shape=" +
           (X.is_maximal(p) ? "doublecircle" : "circle") + "];\n";
  }
  // Covering pairs of the specialization order.
  for (std::size_t p = 0; p < X.size(); ++p) {
    for (std::size_t q = 0; q < X.size(); ++q) {
      if (p == q || !X.specializes(p, q)) continue;
      bool covers = true;
      for (std::size_t r = 0; r < X.size(); ++r) {
        if (r != p && r != q && X.specializes(p, r) && X.specializes(r, q)) covers = false;
      }
      if (covers) out += "  p" + std::to_string(p) + " -> p" + std::to_string(q) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace lgroup
