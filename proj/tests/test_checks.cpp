#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tensalg/checks.hpp"
#include "tensalg/error.hpp"
#include "tensalg/expr.hpp"
#include "tensalg/laplace.hpp"

using namespace testing;

namespace {

const std::set<std::string> kKnownFailing = {"circle.associativity_asym",
                                             "phi.homomorphism_asym"};

CheckOptions quick(std::size_t trials = 15) {
  CheckOptions o;
  o.trials = trials;
  o.max_grade = 4;
  return o;
}

bool needs_self_dual(const std::string& name) {
  return name.rfind("circle.", 0) == 0 ||
         (name.rfind("phi.", 0) == 0 && name != "phi.grade_one_pairing");
}

}  // namespace

TEST_CASE("suite names are unique") {
  const auto& names = suite_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(names.size() > 40);
}

TEST_CASE("suites on the identity space") {
  const CheckReport report = run_checks(identity_space(2), quick());
  REQUIRE(report.suites.size() == suite_names().size());
  for (const auto& s : report.suites) {
    CAPTURE(s.name);
    CAPTURE(s.counterexample);
    if (kKnownFailing.count(s.name)) {
      CHECK(s.status == SuiteStatus::kFail);
      CHECK_FALSE(s.counterexample.empty());
    } else {
      CHECK(s.status == SuiteStatus::kPass);
    }
  }
  CHECK_FALSE(report.passed());
}

TEST_CASE("suites on a non-diagonal self-dual space") {
  const CheckReport report = run_checks(skew_self_dual(), quick(10));
  for (const auto& s : report.suites) {
    CAPTURE(s.name);
    CAPTURE(s.counterexample);
    CHECK(s.status == (kKnownFailing.count(s.name) ? SuiteStatus::kFail : SuiteStatus::kPass));
  }
}

TEST_CASE("self-dual suites skip on the rational space") {
  const CheckReport report = run_checks(rational_space(), quick(10));
  for (const auto& s : report.suites) {
    CAPTURE(s.name);
    CAPTURE(s.counterexample);
    CHECK(s.status == (needs_self_dual(s.name) ? SuiteStatus::kSkip : SuiteStatus::kPass));
  }
  CHECK(report.passed());
}

TEST_CASE("zero trials gives an empty report") {
  const CheckReport report = run_checks(identity_space(2), quick(0));
  CHECK(report.suites.empty());
  CHECK(report.passed());
  CHECK(format_report(report) == "summary: 0 passed, 0 failed, 0 skipped\n");
}

TEST_CASE("same seed, same report") {
  CheckOptions o = quick(8);
  const std::string a = format_report(run_checks(identity_space(2), o));
  const std::string b = format_report(run_checks(identity_space(2), o));
  CHECK(a == b);
  o.seed = 7;
  // The failing suites print their counterexample, which depends on the seed.
  CHECK(format_report(run_checks(identity_space(2), o)) != a);
}

TEST_CASE("per-suite trial counts") {
  CheckOptions o = quick(5);
  o.suite_trials["laplace.oracle"] = 12;
  const SuiteResult r = run_suite("laplace.oracle", rational_space(), o);
  CHECK(r.trials == 12);
  CHECK(r.status == SuiteStatus::kPass);
}

TEST_CASE("a broken pairing is caught") {
  const SpaceSpec spec = rational_space();
  CheckOptions o = quick(50);

  // Not bilinear: shifts every nonzero value.
  o.pairing = [&](const JointElement& a, const JointElement& b) {
    const Scalar p = laplace_closed(a, b, spec);
    return is_zero(p) ? p : p + 1;
  };
  const SuiteResult split = run_suite("laplace.splitting", spec, o);
  CHECK(split.status == SuiteStatus::kFail);
  CHECK_FALSE(split.counterexample.empty());
  CHECK(run_suite("laplace.oracle", spec, o).status == SuiteStatus::kFail);

  // Squared pairing breaks the spot value (x^2 | y^2) = 2<x,y>^2.
  o.pairing = [&](const JointElement& a, const JointElement& b) {
    const Scalar p = laplace_closed(a, b, spec);
    return p * p;
  };
  CHECK(run_suite("laplace.spot_values", spec, o).status == SuiteStatus::kFail);
  CHECK(run_suite("laplace.splitting", spec, o).status == SuiteStatus::kFail);
}

TEST_CASE("report format") {
  CheckReport report;
  SuiteResult pass;
  pass.name = "hopf.counit";
  pass.trials = 3;
  SuiteResult fail;
  fail.name = "circle.associativity_asym";
  fail.trials = 3;
  fail.status = SuiteStatus::kFail;
  fail.seed = 9;
  fail.failed_trial = 1;
  fail.counterexample = "a = e1";
  SuiteResult skip;
  skip.name = "phi.triangular_sym";
  skip.trials = 3;
  skip.status = SuiteStatus::kSkip;
  skip.note = "needs a self-dual space";
  report.suites = {pass, fail, skip};
  CHECK(format_report(report) ==
        "PASS hopf.counit                        trials=3\n"
        "FAIL circle.associativity_asym          trials=3\n"
        "     counterexample (seed=9, trial=1): a = e1\n"
        "SKIP phi.triangular_sym                 trials=3 (needs a self-dual space)\n"
        "summary: 1 passed, 1 failed, 1 skipped\n");
  CHECK(format_report(report, true).find("time=0.000s") != std::string::npos);
}

TEST_CASE("bad options") {
  CheckOptions o;
  o.max_grade = 9;
  CHECK_THROWS_AS(run_checks(identity_space(2), o), Error);
  CHECK_THROWS_AS(run_suite("no.such.suite", identity_space(2)), Error);
}

TEST_CASE("random expressions mostly evaluate") {
  Sampler rng(5);
  const SpaceSpec spec = rational_space();
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    try {
      evaluate_text(random_expression(rng, spec, 3), spec);
      ++ok;
    } catch (const Error&) {
    }
  }
  CHECK(ok > 150);
}
