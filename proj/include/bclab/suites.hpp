#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bclab/binate.hpp"
#include "bclab/json_io.hpp"
#include "bclab/pl_map.hpp"
#include "bclab/ubc_opt.hpp"

namespace bclab {

// Each suite runs one family of checks and fills a RunReport (without wall time).

RunReport alt_identity_suite(int k, std::uint64_t seed);
RunReport last_differential_suite(int samples, std::uint64_t seed);
RunReport euler_suite(int samples, std::uint64_t seed);
RunReport theta_suite(const std::string& group, int degree, int trials, std::uint64_t seed);
RunReport psi_suite(const std::string& group, int trials, std::uint64_t seed);
RunReport ubc_suite(const std::string& group, int degree, int samples, std::uint64_t seed, SolveMode mode);
RunReport modulus_suite(const std::string& group, int degree, int samples, std::uint64_t seed, SolveMode mode);
RunReport map_tuple_suite(ThompsonGroup group, const std::vector<Dyadic>& from, const std::vector<Dyadic>& to);
RunReport transitivity_suite(int pairs, std::uint64_t seed);
RunReport dissipator_suite(const Dyadic& a, const Dyadic& b, int depth);
RunReport witness_suite(const Dyadic& a, const Dyadic& b, const std::vector<PLMap>& generators, int depth,
                        std::uint64_t seed);
/// Every suite above at the acceptance parameters, merged into one report.
RunReport all_suite(std::uint64_t seed);

/// Groups used by the cochain suites in `all`.
const std::vector<std::string>& standard_groups();

/// Two F elements supported in (3/8, 1/2) used as default witness generators.
std::vector<PLMap> default_witness_generators();

}  // namespace bclab
