#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bclab/dyadic.hpp"
#include "bclab/omega_map.hpp"
#include "bclab/pl_map.hpp"

namespace bclab {

inline constexpr int kDefaultDepth = 16;

/// Parameters of the canonical dissipator for (a,b): rungs
///   x_{-1} = 2a - b, x_0 = a, x_1 = b, x_{j+1} - x_j = (b - a) 2^-(t + j - 1)  (j >= 1),
/// accumulating at b + 2^(1-t)(b - a) with t >= 1 minimal such that this is < 1.
struct DissipatorSpec {
  Dyadic a;
  Dyadic b;
  Dyadic x_minus1;
  Dyadic accumulation;
  int t = 1;
  int depth = kDefaultDepth;

  /// x_j for j >= -1.
  Dyadic rung(int j) const;
};

struct Dissipator {
  OmegaPLMap rho;
  DissipatorSpec spec;
};

/// rho maps [x_{-1}, x_0] onto [x_{-1}, x_1] and [x_{j-1}, x_j] onto [x_j, x_{j+1}],
/// stored exactly on [0, x_{K+1}). Throws PreconditionError naming the violated inequality.
Dissipator build_dissipator(const Dyadic& a, const Dyadic& b, int depth = kDefaultDepth);

struct LadderReport {
  std::vector<std::pair<Dyadic, Dyadic>> intervals;  // rho^k((a,b)), k = 0..K
  bool disjoint = true;
};

/// Images of (a,b) under rho^k computed by iterating rho on the endpoints.
LadderReport dissipation_ladder(const Dissipator& d);

/// Slope pattern check: 2 on the first rung, 2^-t on the second, 1/2 afterwards.
bool rung_slopes_ok(const Dissipator& d);

/// Infinite diagonal: rho^k g rho^-k on rho^k((a,b)) for 1 <= k <= K, identity elsewhere.
/// Throws PreconditionError unless the support of g lies in (a,b).
OmegaPLMap dissipate(const PLMap& g, const Dissipator& d);

/// Group words: letters (generator index, +1 or -1), multiplied left to right as composition.
using Word = std::vector<std::pair<int, int>>;

PLMap evaluate_word(const std::vector<PLMap>& gens, const Word& w);
OmegaPLMap evaluate_word(const std::vector<OmegaPLMap>& images, const Word& w);

struct PseudoMitosisWitness {
  std::vector<PLMap> generators;
  std::vector<OmegaPLMap> psi0;
  std::vector<OmegaPLMap> psi1;
  OmegaPLMap g;
  Dissipator dissipator;
  /// Claims are exact on [0, window) up to stored depth and on [accumulation, 1].
  Dyadic window;
};

/// psi1 = dissipate, psi0 = rho^-1 psi1 rho, g = rho^-1.
PseudoMitosisWitness make_witness(const std::vector<PLMap>& generators, const Dissipator& d);

struct ConditionCheck {
  std::string name;
  std::string subject;  // e.g. "h0" or "h0,h1"
  bool pass = true;
  Dyadic checked_up_to;
  Dyadic identity_from;
  std::optional<Dyadic> first_disagreement;
  std::string note;
};

struct WitnessReport {
  std::vector<ConditionCheck> checks;
  bool pass = true;
  Dyadic window;
  /// Homomorphism of psi0/psi1 is only tested on these sampled words.
  int sampled_word_pairs = 0;
};

/// Conditions h psi1(h) = psi0(h), [h, psi1(h')] = 1, psi1(h) = g^-1 psi0(h) g, plus
/// multiplicativity of psi0, psi1 and mu(h, h') = h psi1(h') on sampled word pairs.
WitnessReport verify_witness(const PseudoMitosisWitness& w, int word_pairs = 4, std::uint64_t seed = 1);

struct CommutatorReport {
  /// [a,b] = a^-1 b^-1 a b with a = psi0(h)^-1, b = g.
  bool psi0_form_matches = false;
  /// The opposite order a b a^-1 b^-1.
  bool opposite_form_matches = false;
  Dyadic checked_up_to;
  std::optional<Dyadic> first_disagreement;
  bool pass = false;
};

/// Evaluates both commutator conventions for h given as a word in the witness generators.
/// Throws TruncationExceeded if the stored depth does not cover the support of h.
CommutatorReport binate_commutator_check(const Word& h, const PseudoMitosisWitness& w);

}  // namespace bclab
