#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tensalg/caps.hpp"
#include "tensalg/element.hpp"

namespace tensalg {

// Random inputs for the property suites. Choices are taken modulo the
// engine output so a seed reproduces the same inputs on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : engine_() % n; }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  // One of -2, -1, -1/2, 1/2, 1, 2.
  Scalar coefficient();
  Word word(std::size_t dim, std::size_t length);
  // 1-4 terms, each of uniform grade in [0, max_grade].
  Element element(Side side, std::size_t dim, std::size_t max_grade);
  Element homogeneous(Side side, std::size_t dim, std::size_t grade);
  // Random combination of generators.
  Element vector(Side side, std::size_t dim);
  // 1-4 terms; per-side grades bounded by max_u / max_v, total by max_total.
  JointElement joint(std::size_t dim_u, std::size_t dim_v, std::size_t max_u, std::size_t max_v,
                     std::size_t max_total = SIZE_MAX);
  // An element whose words have the swapped grade signature of some term of
  // `other`, so that pairing against `other` is rarely trivially zero.
  JointElement partner(const JointElement& other, std::size_t dim_u, std::size_t dim_v);

 private:
  std::mt19937_64 engine_;
};

// Printed source of a random expression over `spec`, mostly well-typed.
std::string random_expression(Sampler& rng, const SpaceSpec& spec, int depth);

using PairingHook = std::function<Scalar(const JointElement&, const JointElement&)>;

struct CheckOptions {
  std::uint64_t seed = 42;
  std::size_t max_grade = 5;
  std::size_t trials = 100;
  // Trial count for individual suites, by name.
  std::map<std::string, std::size_t> suite_trials;
  Caps caps;
  // Replaces the Laplace pairing inside the pairing suites. Lets tests feed
  // a broken pairing to make sure the harness notices.
  PairingHook pairing;
};

enum class SuiteStatus { kPass, kFail, kSkip };

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  SuiteStatus status = SuiteStatus::kPass;
  std::uint64_t seed = 0;      // stream seed of this suite
  std::size_t failed_trial = 0;
  std::string counterexample;  // set on failure
  std::string note;            // skip reason
  double seconds = 0;
};

struct CheckReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

const std::vector<std::string>& suite_names();

// Throws Error(kPrecondition) for an unknown name or max_grade above the cap.
SuiteResult run_suite(const std::string& name, const SpaceSpec& spec,
                      const CheckOptions& options = {});

// Every suite in order; empty when options.trials is 0.
CheckReport run_checks(const SpaceSpec& spec, const CheckOptions& options = {});

std::string format_report(const CheckReport& report, bool timing = false);

}  // namespace tensalg
