#pragma once

#include <vector>

#include "bclab/dyadic.hpp"
#include "bclab/pl_map.hpp"
#include "bclab/rng.hpp"

namespace bclab {

using CircTuple = std::vector<CirclePoint>;

/// True iff the entries are pairwise distinct and some cut of the circle makes
/// them strictly increasing. Tuples with repeats are never circularly ordered.
bool circ_ordered(const CircTuple& t);

/// A standard dyadic interval [m/2^n, (m+1)/2^n].
struct StandardInterval {
  mpz_class m;
  unsigned long n = 0;
  Dyadic lo() const { return Dyadic::normalize(m, static_cast<long>(n)); }
  Dyadic hi() const { return Dyadic::normalize(m + 1, static_cast<long>(n)); }
};

/// Greedy left-to-right decomposition of [lo, hi] into maximal standard dyadic intervals.
std::vector<StandardInterval> standard_decomposition(const Dyadic& lo, const Dyadic& hi);

/// Element of F mapping [0,1] to itself with f(u_i) = v_i.
/// Both tuples must be strictly increasing inside (0,1) and of equal length.
PLMap interval_witness(const std::vector<Dyadic>& u, const std::vector<Dyadic>& v);

/// Element of T with f(u_i) = v_i for circularly ordered tuples of equal length.
PLMap circle_witness(const CircTuple& u, const CircTuple& v);

/// True iff f fixes every point of t.
bool stabilizer_check(const PLMap& f, const CircTuple& t);

/// Strictly increasing points m/2^denominator_exp inside (0,1).
std::vector<Dyadic> random_interval_tuple(SplitMix64& rng, int size, int denominator_exp);

/// circle_witness between two random circularly ordered 4-tuples.
PLMap random_t_element(SplitMix64& rng, int denominator_exp = 10);

}  // namespace bclab
