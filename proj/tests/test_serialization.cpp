#include <doctest.h>

#include "quatlie/serialization.hpp"
#include "test_support.hpp"

using namespace quatlie;
using quatlie::testing::random_multivector;

TEST_CASE("multivector JSON schema and round trip") {
  Signature sig(1, 3);
  Multivector u(sig);
  u.set(0b0101, ExactComplex(Rational(1, 2), Rational(-3, 4)));
  json j = multivector_to_json(u);
  CHECK(j["p"] == 1);
  CHECK(j["q"] == 3);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["blade"] == json::array({1, 3}));
  CHECK(j["terms"][0]["re"] == "1/2");
  CHECK(j["terms"][0]["im"] == "-3/4");
  CHECK(multivector_from_json(j) == u);

  std::mt19937_64 rng(61);
  for (int t = 0; t < 25; ++t) {
    Multivector w = random_multivector(Signature(2, 2), rng, 6);
    CHECK(multivector_from_json(multivector_to_json(w)) == w);
  }
}

TEST_CASE("closure report schema") {
  ClosureReport report = closure_check(SubspaceSpec::parse("1"), Signature(3, 0));
  json j = closure_report_to_json(report);
  CHECK(j["id"] == 0);
  CHECK(j["p"] == 3);
  CHECK(j["q"] == 0);
  CHECK(j["passed"] == false);
  CHECK(j["violations"].size() > 0);
  CHECK(j["violations"][0].contains("a"));
  CHECK(j["violations"][0].contains("b"));

  json ok = closure_report_to_json(closure_check(16, Signature(3, 0)));
  CHECK(ok["id"] == 16);
  CHECK(ok["passed"] == true);
  CHECK(ok["violations"].empty());
}

TEST_CASE("spin report uses the shared schema") {
  json j = spin_report_to_json(spin_lie_checks(Signature(2, 1)));
  CHECK(j["id"] == 0);
  CHECK(j["passed"] == true);
  CHECK(j.contains("violations"));
}

TEST_CASE("representation export") {
  Representation rep = build_beta(Signature(1, 3));
  json j = representation_to_json(rep, additional_signature(rep));
  CHECK(j["kind"] == "beta");
  CHECK(j["p"] == 1);
  CHECK(j["q"] == 3);
  REQUIRE(j["matrices"].size() == 4);
  // beta_1 = diag(1,-1,-1,1) as integer pairs
  CHECK(j["matrices"][0][0][0] == json::array({1, 0}));
  CHECK(j["matrices"][0][1][1] == json::array({-1, 0}));
  // e_2 image carries the factor i
  CHECK(j["matrices"][1][0][1] == json::array({0, 1}));
  const auto& as = j["additional_signature"];
  CHECK(as["k"].get<int>() + as["l"].get<int>() == 4);
  CHECK(as.contains("kp"));
  CHECK(as.contains("lq"));

  NormalFormedRep nf = normal_form_rep(build_beta(Signature(2, 0)), NormalFormKind::JFromP);
  json g = normal_formed_to_json(nf, additional_signature(build_beta(Signature(2, 0))));
  CHECK(g["kind"] == "gamma");
  NormalFormedRep zeta =
      normal_form_rep(build_beta(Signature(2, 0)), NormalFormKind::OrthOmega);
  json z = normal_formed_to_json(zeta, additional_signature(build_beta(Signature(2, 0))));
  CHECK(z["kind"] == "zeta");
}

TEST_CASE("classification export") {
  Signature sig(3, 2);
  json j = classification_to_json(9, sig, classify(9, sig));
  CHECK(j["id"] == 9);
  CHECK(j["family"] == "sp");
  CHECK(j["matrix_size"] == 4);
  CHECK(j["summands"] == 2);
  CHECK(j["real_dim"] == 40);
  CHECK(j["paper_branch"] == "n=5 mod 8");

  json g = classification_to_json(2, Signature(1, 3), classify(2, Signature(1, 3)));
  CHECK(g["base"] == "H");
}

TEST_CASE("verification report export") {
  VerificationReport r = verify_signature(6, Signature(1, 1));
  json j = verification_report_to_json(r);
  CHECK(j["id"] == 6);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 42);
  CHECK(j["tolerances"]["structural"] == 1e-10);
  CHECK(j["tolerances"]["exponential"] == 1e-8);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("residual"));
    CHECK(c.contains("witness"));
  }
}
