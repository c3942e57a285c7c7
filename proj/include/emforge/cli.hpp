#pragma once

// Command-line front end. run_cli is the whole program; main() only forwards.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emforge/cohomology.hpp"
#include "emforge/em_construct.hpp"
#include "emforge/hopf_cyclic.hpp"
#include "emforge/moore.hpp"

namespace emforge {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kFailures = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
  std::string command;
  std::string target;  // verify target or cohomology kind
  std::string construction = "kan";
  std::string group;
  std::string algebra;
  std::string algebra_file;
  std::string table;
  std::string coeff;
  std::string field = "rational";
  std::string method = "auto";
  int n = 0;
  int q_max = -1;
  int samples = 0;
  std::uint64_t seed = 0;
  Integer cap = Integer(1) << 22;
  bool brute = false;
  std::string format = "text";
  std::string out;
  bool timing = true;

  Strategy strategy(int default_q) const {
    const int q = q_max >= 0 ? q_max : default_q;
    return samples > 0 ? Strategy::sampled(q, samples, seed) : Strategy::exhaustive(q);
  }
};

namespace cli {

using Json = nlohmann::ordered_json;

inline Json group_json(const FinAbGroup& g) {
  const FinAbGroup c = g.canonical_form();
  Json j = Json::array();
  for (std::int64_t m : c.moduli()) j.push_back(m);
  return j;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

inline bool is_table_spec(const RunConfig& c) { return !c.table.empty() || c.group == "S3" || c.group == "D4" || c.group == "Q8"; }

inline TableGroup table_group(const RunConfig& c) {
  if (!c.table.empty()) return TableGroup::load(c.table);
  if (c.group.empty()) throw InvalidInput("--group or --table is required");
  return TableGroup::builtin(c.group);
}

inline FinAbGroup abelian_group(const std::string& spec, const char* flag) {
  if (spec.empty()) throw InvalidInput(std::string(flag) + " is required");
  if (spec == "S3" || spec == "D4" || spec == "Q8") throw InvalidInput(spec + " is not abelian; " + flag + " needs an abelian group");
  return group_from_spec(spec);
}

template <class S>
HopfAlgebra<S> algebra(const RunConfig& c) {
  if (!c.algebra_file.empty()) return load_hopf<S>(c.algebra_file);
  if (c.algebra.empty()) throw InvalidInput("--algebra or --algebra-file is required");
  return parse_algebra<S>(c.algebra);
}

inline std::string strategy_text(const Strategy& s) {
  std::string t = (s.is_sampled() ? "sampled" : "exhaustive") + std::string(", q_max ") + std::to_string(s.q_max);
  if (s.is_sampled()) t += ", " + std::to_string(s.samples) + " samples, seed " + std::to_string(s.seed);
  return t;
}

inline std::string report_text(const VerificationReport& r) {
  std::ostringstream o;
  o << "suite: " << r.suite << "\n"
    << "subject: " << r.subject << "\n"
    << "strategy: " << strategy_text(r.strategy) << "\n"
    << "equality: " << r.equality << "\n"
    << "relations checked: " << r.relations_checked << "\n";
  for (const auto& [k, v] : r.families) o << "  " << k << ": " << v << "\n";
  for (const Failure& f : r.failures) {
    std::vector<std::string> idx;
    for (int i : f.indices) idx.push_back(std::to_string(i));
    o << "FAIL " << f.relation << " [level " << f.level << (idx.empty() ? "" : ", indices " + join(idx, ",")) << "] at "
      << f.witness << ": " << f.lhs << " != " << f.rhs << "\n";
  }
  o << "verdict: " << r.verdict() << "\n";
  return o.str();
}

template <class S>
VerificationReport verify_linear(const RunConfig& c, const LinearFamily<S>& K) {
  const LinearContext<S> ctx(K);
  if (c.target == "simplicial") return verify_simplicial(ctx, c.strategy(4));
  if (c.target == "cyclic") return verify_cyclic(ctx, c.strategy(4));
  if (c.target == "symmetric") return verify_symmetric(ctx, c.strategy(4));
  throw InvalidInput("target " + c.target + " does not apply to construction " + c.construction);
}

template <class S>
VerificationReport verify_hopf(const RunConfig& c) {
  const HopfAlgebra<S> H = algebra<S>(c);
  if (c.target == "hopf-axioms") return verify_hopf_axioms(H);
  if (c.construction == "sk") return verify_linear(c, sk_family(H));
  if (c.construction == "cm") {
    if (c.target == "symmetric") return verify_linear(c, symmetric_family(H));
    return verify_linear(c, cm_family(H, ModularPair<S>::trivial(H)));
  }
  throw InvalidInput("unknown construction '" + c.construction + "'");
}

inline VerificationReport run_verify(const RunConfig& c, Json& params) {
  const std::string& t = c.target;
  params["target"] = t;
  if (t == "hopf-axioms") {
    params["algebra"] = c.algebra_file.empty() ? c.algebra : c.algebra_file;
    params["field"] = c.field;
    return c.field == "rational" ? verify_hopf<Rational>(c) : verify_hopf<FieldScalar>(c);
  }
  if (t == "crosscheck") {
    const FinAbGroup A = abelian_group(c.group, "--group");
    params["group"] = A.str();
    return crosscheck_specializations(A, c.q_max >= 0 ? c.q_max : 6);
  }
  if (t == "linearization") {
    const int q = c.q_max >= 0 ? c.q_max : 4;
    if (is_table_spec(c)) {
      const TableGroup G = table_group(c);
      params["group"] = G.name();
      return kg1_linearization_report(G, q, c.cap);
    }
    const FinAbGroup A = abelian_group(c.group, "--group");
    params["group"] = A.str();
    return linearization_report(A, q, c.cap);
  }
  if (t != "simplicial" && t != "cyclic" && t != "symmetric")
    throw InvalidInput("unknown verify target '" + t + "' (simplicial, cyclic, symmetric, hopf-axioms, crosscheck, linearization)");

  params["construction"] = c.construction;
  const std::string& k = c.construction;
  if (k == "kan" || k == "ka2") {
    const FinAbGroup A = abelian_group(c.group, "--group");
    params["group"] = A.str();
    AbelianFamily K;
    if (k == "kan") {
      if (c.n < 1) throw InvalidInput("--n must be at least 1 for construction kan");
      params["n"] = c.n;
      K = kan_family(A, c.n);
    } else {
      K = ka2_family(A);
    }
    const MatrixContext ctx(K);
    if (t == "simplicial") return verify_simplicial(ctx, c.strategy(6));
    if (t == "cyclic") return verify_cyclic(ctx, c.strategy(5));
    return verify_symmetric(ctx, c.strategy(4));
  }
  if (k == "kg1") {
    const TableGroup G = table_group(c);
    params["group"] = G.name();
    const IndexedFamily K = kg1_table_family(G);
    const IndexedContext ctx(K, c.cap);
    if (t == "simplicial") return verify_simplicial(ctx, c.strategy(3));
    if (t == "cyclic") return verify_cyclic(ctx, c.strategy(3));
    return verify_symmetric(ctx, c.strategy(3));
  }
  if (k == "sk" || k == "cm") {
    params["algebra"] = c.algebra_file.empty() ? c.algebra : c.algebra_file;
    params["field"] = c.field;
    return c.field == "rational" ? verify_hopf<Rational>(c) : verify_hopf<FieldScalar>(c);
  }
  throw InvalidInput("unknown construction '" + k + "' (kan, ka2, kg1, sk, cm)");
}

inline KernelMethod kernel_method(const std::string& m) {
  if (m == "auto") return KernelMethod::Auto;
  if (m == "lattice") return KernelMethod::Lattice;
  if (m == "modular") return KernelMethod::Modular;
  throw InvalidInput("unknown method '" + m + "' for pi (auto, lattice, modular)");
}

inline CohomologyMethod cohomology_method(const std::string& m) {
  if (m == "auto") return CohomologyMethod::Auto;
  if (m == "smith") return CohomologyMethod::Smith;
  if (m == "prime-field") return CohomologyMethod::PrimeField;
  throw InvalidInput("unknown method '" + m + "' for cohomology (auto, smith, prime-field)");
}

struct Outcome {
  Json result;
  std::string text;
  int code = kPass;
};

inline Outcome cmd_pi(const RunConfig& c, Json& params) {
  if (c.n < 1) throw InvalidInput("--n must be at least 1");
  const int q_max = c.q_max >= 0 ? c.q_max : 4;
  params["n"] = c.n;
  params["q_max"] = q_max;
  Outcome o;
  std::ostringstream t;
  if (c.brute || is_table_spec(c)) {
    IndexedFamily K;
    if (is_table_spec(c)) {
      if (c.n != 1) throw InvalidInput("non-abelian groups are supported only for n = 1");
      const TableGroup G = table_group(c);
      params["group"] = G.name();
      K = kg1_table_family(G);
    } else {
      const FinAbGroup A = abelian_group(c.group, "--group");
      params["group"] = A.str();
      K = indexed_from_abelian(kan_family(A, c.n));
    }
    params["method"] = "enumeration";
    const auto d = brute_force_homotopy(K, q_max, c.cap);
    Json groups = Json::array();
    for (int q = 0; q <= q_max; ++q) {
      Json h = Json::object();
      for (const auto& [k, v] : d[q].order_histogram) h[std::to_string(k)] = v;
      groups.push_back({{"order", d[q].order.str()}, {"element_orders", h}});
      t << "pi_" << q << "(" << K.name << "): " << d[q].str() << "\n";
    }
    o.result["groups"] = groups;
    o.text = t.str();
    return o;
  }
  const FinAbGroup A = abelian_group(c.group, "--group");
  params["group"] = A.str();
  params["method"] = c.method;
  const KernelMethod m = kernel_method(c.method);
  const auto K = kan_family(A, c.n);
  const auto pi = homotopy_groups(K, q_max, m);
  Json groups = Json::array();
  std::vector<std::string> names;
  for (int q = 0; q <= q_max; ++q) {
    groups.push_back(group_json(pi[q]));
    names.push_back(pi[q].str());
    t << "pi_" << q << "(" << K.name << ") = " << pi[q].str() << "\n";
  }
  t << "pi = [" << join(names, ", ") << "]\n";
  o.result["groups"] = groups;
  o.text = t.str();
  return o;
}

inline Outcome cmd_cohomology(const RunConfig& c, Json& params) {
  const int n_max = c.q_max >= 0 ? c.q_max : 4;
  CohomologyOptions opt;
  opt.method = cohomology_method(c.method);
  opt.cap = c.cap;
  const FinAbGroup B = abelian_group(c.coeff, "--coeff");
  params["kind"] = c.target;
  params["coeff"] = B.str();
  params["n_max"] = n_max;
  params["method"] = c.method;
  CohomologyResult r;
  if (c.target == "group") {
    if (is_table_spec(c)) {
      const TableGroup G = table_group(c);
      params["g"] = G.name();
      r = group_cohomology(G, B, n_max, opt);
    } else {
      const FinAbGroup G = abelian_group(c.group, "--g");
      params["g"] = G.str();
      r = group_cohomology(G, B, n_max, opt);
    }
  } else if (c.target == "secondary") {
    const FinAbGroup A = abelian_group(c.group, "--a");
    params["a"] = A.str();
    r = secondary_cohomology(A, B, n_max, opt);
  } else {
    throw InvalidInput("unknown cohomology kind '" + c.target + "' (group, secondary)");
  }
  Outcome o;
  Json groups = Json::array();
  std::vector<std::string> names;
  std::ostringstream t;
  for (int q = 0; q <= n_max; ++q) {
    groups.push_back(group_json(r.groups[q]));
    names.push_back(r.groups[q].canonical_form().str());
    t << "H^" << q << " = " << names.back() << "\n";
  }
  t << "H = [" << join(names, ", ") << "]\nmethod: " << r.method << "\n";
  o.result["subject"] = r.subject;
  o.result["method"] = r.method;
  o.result["groups"] = groups;
  o.result["cochain_dims"] = r.dims;
  o.text = t.str();
  return o;
}

inline Integer env_cap() {
  const char* v = std::getenv("EMFORGE_CAP");
  if (!v || !*v) return Integer(1) << 22;
  try {
    Integer c(v);
    if (c <= 0) throw ParseError(v, "EMFORGE_CAP must be positive");
    return c;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(v, "EMFORGE_CAP must be a positive integer");
  }
}

}  // namespace cli

/// Runs one command; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli::Json;
  RunConfig c;
  std::string cap_text, timing = "on";

  CLI::App app{"Eilenberg-MacLane simplicial groups, their cohomology, and Hopf cyclic modules", "emforge"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", c.out, "write the report here instead of stdout");
    s->add_option("--timing", timing, "embed wall-clock time (on|off)")->check(CLI::IsMember({"on", "off"}));
    s->add_option("--cap", cap_text, "largest enumeration/level size (default: EMFORGE_CAP or 4194304)");
  };

  auto* pi = app.add_subcommand("pi", "homotopy groups of K(A,n)");
  pi->add_option("--group", c.group, "group spec, e.g. \"Z/2 x Z/4\", or S3/D4/Q8 with --n 1")->required();
  pi->add_option("--n", c.n, "Eilenberg-MacLane degree")->required();
  pi->add_option("--qmax", c.q_max, "highest homotopy group");
  pi->add_option("--method", c.method, "kernel method: auto, lattice, modular");
  pi->add_flag("--brute", c.brute, "count elements instead of using Smith normal form");
  pi->add_option("--table", c.table, "multiplication table file (n = 1)");
  common(pi);

  auto* verify = app.add_subcommand("verify", "machine-check structural identities");
  verify->add_option("target", c.target, "simplicial, cyclic, symmetric, hopf-axioms, crosscheck, linearization")->required();
  verify->add_option("--construction", c.construction, "kan, ka2, kg1, sk, cm");
  verify->add_option("--group", c.group, "group spec");
  verify->add_option("--n", c.n, "degree for kan");
  verify->add_option("--qmax", c.q_max, "highest level");
  verify->add_option("--samples", c.samples, "sampled strategy with this many samples per relation");
  verify->add_option("--seed", c.seed, "seed of the sampled strategy");
  verify->add_option("--algebra", c.algebra, "Hopf algebra, e.g. \"k[Z/2]\", \"k[S3]\", \"k^S3\"");
  verify->add_option("--algebra-file", c.algebra_file, "Hopf algebra JSON file");
  verify->add_option("--table", c.table, "multiplication table file for kg1");
  verify->add_option("--field", c.field, "scalars: rational or prime (Z/1000003)")->check(CLI::IsMember({"rational", "prime"}));
  common(verify);

  auto* coh = app.add_subcommand("cohomology", "group or secondary cohomology with trivial coefficients");
  coh->add_option("kind", c.target, "group or secondary")->required();
  coh->add_option("--g", c.group, "group for 'group'");
  coh->add_option("--a", c.group, "group for 'secondary'");
  coh->add_option("--coeff", c.coeff, "coefficient group")->required();
  coh->add_option("--nmax", c.q_max, "highest degree");
  coh->add_option("--method", c.method, "auto, smith, prime-field");
  coh->add_option("--table", c.table, "multiplication table file for 'group'");
  common(coh);

  std::vector<const char*> argv{"emforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  c.timing = timing == "on";
  c.command = pi->parsed() ? "pi" : verify->parsed() ? "verify" : "cohomology";

  const auto t0 = std::chrono::steady_clock::now();
  Json doc;
  doc["schema"] = "emforge/1";
  doc["tool"] = {{"name", "emforge"}, {"version", kToolVersion}};
  doc["command"] = c.command + (c.target.empty() ? "" : " " + c.target);
  Json params = Json::object();
  std::string text;
  int code = kPass;
  try {
    if (!cap_text.empty()) {
      try {
        c.cap = Integer(cap_text);
      } catch (const std::exception&) {
        throw ParseError(cap_text, "--cap must be a positive integer");
      }
      if (c.cap <= 0) throw ParseError(cap_text, "--cap must be positive");
    } else {
      c.cap = cli::env_cap();
    }
    if (c.samples < 0) throw InvalidInput("--samples must be non-negative");
    if (c.q_max < -1) throw InvalidInput("--qmax/--nmax must be non-negative");
    if (c.command == "verify") {
      const VerificationReport r = cli::run_verify(c, params);
      params["cap"] = c.cap.str();
      params["seed"] = c.seed;
      doc["parameters"] = params;
      doc["strategy"] = r.strategy.to_json();
      doc["report"] = r.to_json();
      doc["verdict"] = r.verdict();
      text = cli::report_text(r);
      code = r.pass() ? kPass : kFailures;
    } else {
      const cli::Outcome o = c.command == "pi" ? cli::cmd_pi(c, params) : cli::cmd_cohomology(c, params);
      params["cap"] = c.cap.str();
      params["seed"] = c.seed;
      doc["parameters"] = params;
      doc["result"] = o.result;
      text = o.text;
      code = o.code;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (c.timing) {
    doc["elapsed_ms"] = ms;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(1);
    t << "elapsed: " << ms << " ms\n";
    text += t.str();
  }
  const std::string payload = c.format == "json" ? doc.dump(2) + "\n" : text;
  if (c.out.empty()) {
    out << payload;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << "error: cannot write '" << c.out << "'\n";
      return kUsage;
    }
    f << payload;
  }
  return code;
}

}  // namespace emforge
