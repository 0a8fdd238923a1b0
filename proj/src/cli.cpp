#include "bclab/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bclab/errors.hpp"
#include "bclab/json_io.hpp"
#include "bclab/suites.hpp"

namespace bclab {

namespace {

std::vector<Dyadic> parse_tuple(const std::string& text) {
  std::vector<Dyadic> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Dyadic::parse(item));
  if (out.empty()) throw ParseError("empty tuple \"" + text + "\"");
  return out;
}

SolveMode parse_mode(const std::string& m) { return m == "float" ? SolveMode::Float : SolveMode::Exact; }

void emit(const RunReport& r, const std::string& format, std::ostream& out) {
  if (format == "text") {
    for (const auto& c : r.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  expected=" << c.expected.dump() << " actual=" << c.actual.dump()
          << "\n";
    out << "result: " << r.result.dump() << "\n";
    out << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  } else {
    out << to_json(r).dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bclab: exact constructions and checks for bounded cohomology of Thompson-type groups", "bclab"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int samples = 100;
  int trials = 50;
  int degree = 2;
  int depth = kDefaultDepth;
  int k = 2;
  std::string format = "json";
  std::string mode = "exact";
  std::string group;
  std::string from, to, a_text, b_text, gens_path;
  std::function<RunReport()> job;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto with_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed, "PRNG seed (SplitMix64)"); };

  CLI::App* verify = app.add_subcommand("verify", "identity verifiers");
  verify->require_subcommand(1);
  CLI::App* alt = verify->add_subcommand("alt-identity", "alternating cup-power identity");
  alt->add_option("--k", k, "cup power k");
  with_seed(alt);
  common(alt);
  alt->callback([&] {
    if (k < 1 || k > 4) throw ParseError("k out of supported range (1..4)");
    job = [&] { return alt_identity_suite(k, seed); };
  });
  CLI::App* last = verify->add_subcommand("last-differential", "delta f_2k = 0 on circularly ordered tuples");
  last->add_option("--samples", samples);
  with_seed(last);
  common(last);
  last->callback([&] { job = [&] { return last_differential_suite(samples, seed); }; });

  CLI::App* euler = app.add_subcommand("euler", "orientation and Euler cocycles");
  euler->require_subcommand(1);
  CLI::App* cc = euler->add_subcommand("cocycle-check", "cocycle identities on random T elements");
  cc->add_option("--samples", samples);
  with_seed(cc);
  common(cc);
  cc->callback([&] { job = [&] { return euler_suite(samples, seed); }; });

  CLI::App* th = app.add_subcommand("theta", "chain homotopy identity");
  th->add_option("--group", group, "C<n>, S<n> or products like C2xC2")->required();
  th->add_option("--degree", degree);
  th->add_option("--trials", trials);
  with_seed(th);
  common(th);
  th->callback([&] { job = [&] { return theta_suite(group, degree, trials, seed); }; });

  CLI::App* psi = app.add_subcommand("psi", "explicit inverse of the degree-2 coboundary");
  psi->add_option("--group", group)->required();
  psi->add_option("--trials", trials);
  with_seed(psi);
  common(psi);
  psi->callback([&] { job = [&] { return psi_suite(group, trials, seed); }; });

  CLI::App* ubc = app.add_subcommand("ubc", "sampled lower bound for the uniform boundary condition constant");
  ubc->add_option("--group", group)->required();
  ubc->add_option("--degree", degree)->default_val(1);
  ubc->add_option("--samples", samples);
  ubc->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  with_seed(ubc);
  common(ubc);
  ubc->callback([&] { job = [&] { return ubc_suite(group, degree, samples, seed, parse_mode(mode)); }; });

  CLI::App* mod = app.add_subcommand("modulus", "sampled lower bound for the vanishing modulus");
  mod->add_option("--group", group)->required();
  mod->add_option("--degree", degree);
  mod->add_option("--samples", samples);
  mod->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  with_seed(mod);
  common(mod);
  mod->callback([&] { job = [&] { return modulus_suite(group, degree, samples, seed, parse_mode(mode)); }; });

  CLI::App* thompson = app.add_subcommand("thompson", "Thompson group actions");
  thompson->require_subcommand(1);
  CLI::App* mt = thompson->add_subcommand("map-tuple", "element of F or T mapping one dyadic tuple to another");
  std::string tgroup = "T";
  mt->add_option("--group", tgroup)->check(CLI::IsMember({"F", "T"}));
  mt->add_option("--from", from, "comma-separated dyadics, e.g. 0/2^0,1/2^2")->required();
  mt->add_option("--to", to)->required();
  common(mt);
  mt->callback([&] {
    job = [&] {
      return map_tuple_suite(tgroup == "F" ? ThompsonGroup::F : ThompsonGroup::T, parse_tuple(from), parse_tuple(to));
    };
  });

  CLI::App* dis = app.add_subcommand("dissipator", "canonical dissipator for (a,b)");
  dis->add_option("--a", a_text)->required();
  dis->add_option("--b", b_text)->required();
  dis->add_option("--depth", depth);
  common(dis);
  dis->callback([&] { job = [&] { return dissipator_suite(Dyadic::parse(a_text), Dyadic::parse(b_text), depth); }; });

  CLI::App* wit = app.add_subcommand("witness", "pseudo-mitosis witness for generators supported in (a,b)");
  wit->add_option("--a", a_text)->required();
  wit->add_option("--b", b_text)->required();
  wit->add_option("--gens", gens_path, "JSON file with PL maps; default: two built-in bumps in (3/8,1/2)");
  wit->add_option("--depth", depth);
  with_seed(wit);
  common(wit);
  wit->callback([&] {
    job = [&] {
      std::vector<PLMap> gens = default_witness_generators();
      if (!gens_path.empty()) {
        std::ifstream in(gens_path);
        if (!in) throw ParseError("cannot open generator file " + gens_path);
        gens = generators_from_json(Json::parse(in));
      }
      return witness_suite(Dyadic::parse(a_text), Dyadic::parse(b_text), gens, depth, seed);
    };
  });

  CLI::App* all = app.add_subcommand("all", "full acceptance suite");
  with_seed(all);
  common(all);
  all->callback([&] { job = [&] { return all_suite(seed); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = job();
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string cmd;
  for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
  report.command = cmd;
  emit(report, format, out);
  return report.pass() ? kExitPass : kExitCheckFailure;
}

}  // namespace bclab
