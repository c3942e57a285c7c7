#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace emforge {

/// How relations are evaluated: every element, or a seeded sample.
struct Strategy {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  int q_max = 1;
  int samples = 0;
  std::uint64_t seed = 0;

  static Strategy exhaustive(int q_max) { return {Kind::Exhaustive, q_max, 0, 0}; }
  static Strategy sampled(int q_max, int samples, std::uint64_t seed) { return {Kind::Sampled, q_max, samples, seed}; }

  bool is_sampled() const noexcept { return kind == Kind::Sampled; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = is_sampled() ? "sampled" : "exhaustive";
    j["q_max"] = q_max;
    if (is_sampled()) {
      j["samples"] = samples;
      j["seed"] = seed;
    }
    return j;
  }
};

struct Failure {
  std::string relation;
  int level = 0;
  std::vector<int> indices;
  std::string witness;
  std::string lhs;
  std::string rhs;

  nlohmann::ordered_json to_json() const {
    return {{"relation", relation}, {"level", level}, {"indices", indices},
            {"witness", witness},   {"lhs", lhs},     {"rhs", rhs}};
  }
};

/// Outcome of a verification suite. An empty failure list is a pass.
struct VerificationReport {
  std::string suite;
  std::string subject;
  Strategy strategy;
  std::string equality;  // how two maps were compared
  std::size_t relations_checked = 0;
  std::map<std::string, std::size_t> families;  // relation family -> instances checked
  std::vector<Failure> failures;

  bool pass() const noexcept { return failures.empty(); }
  std::string verdict() const { return pass() ? "pass" : "fail"; }

  void merge(const VerificationReport& other) {
    relations_checked += other.relations_checked;
    for (const auto& [k, v] : other.families) families[k] += v;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["subject"] = subject;
    j["strategy"] = strategy.to_json();
    j["equality"] = equality;
    j["relations_checked"] = relations_checked;
    j["families"] = families;
    j["verdict"] = verdict();
    auto f = nlohmann::ordered_json::array();
    for (const Failure& x : failures) f.push_back(x.to_json());
    j["failures"] = f;
    return j;
  }
};

}  // namespace emforge
