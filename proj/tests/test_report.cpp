#include <doctest.h>

#include "gcdtn/report.hpp"

using namespace gcdtn;

TEST_SUITE("report") {

TEST_CASE("method and verdict names round-trip") {
  for (TnMethod m : {TnMethod::Tn2, TnMethod::Condition3, TnMethod::Condition4,
                     TnMethod::Exponents, TnMethod::Green, TnMethod::BruteForce})
    CHECK(method_from_name(method_name(m)) == m);
  CHECK(verdict_from_name("TN") == TnVerdict::TN);
  CHECK(verdict_from_name("NOT_TN") == TnVerdict::NOT_TN);
  CHECK_THROWS_AS(method_from_name("nope"), std::invalid_argument);
  CHECK_THROWS_AS(verdict_from_name("MAYBE"), std::invalid_argument);
}

TEST_CASE("witnesses round-trip and use 1-based indices on the wire") {
  MinorWitness m;
  m.alpha = {0, 1};
  m.beta = {1, 2};
  m.value = make_rational(-2, 1);
  const nlohmann::json jm = witness_to_json(m);
  CHECK(jm["rows"] == nlohmann::json::array({1, 2}));
  CHECK(jm["cols"] == nlohmann::json::array({2, 3}));
  CHECK(jm["value"] == "-2");
  CHECK(std::get<MinorWitness>(witness_from_json(jm)) == m);

  TripleWitness t{0, 1, 2, TripleWitness::Failed::DivisibilityProduct};
  const nlohmann::json jt = witness_to_json(t);
  CHECK(jt["i"] == 1);
  CHECK(jt["k"] == 3);
  CHECK(std::get<TripleWitness>(witness_from_json(jt)) == t);

  ExponentWitness e{BigInt(3), 0, 1};
  const nlohmann::json je = witness_to_json(e);
  CHECK(je["prime"] == "3");
  CHECK(std::get<ExponentWitness>(witness_from_json(je)) == e);
}

TEST_CASE("check report round-trips verdict and witness exactly") {
  CheckReport r;
  r.input = {2, 3, 5};
  r.method = "all";
  r.verdict = TnVerdict::NOT_TN;
  r.witness = TripleWitness{0, 1, 2, TripleWitness::Failed::ProductIdentity};
  r.elapsed_us = 37;

  const CheckReport back = CheckReport::from_json(r.to_json());
  CHECK(back.input == r.input);
  CHECK(back.method == r.method);
  CHECK(back.verdict == r.verdict);
  REQUIRE(back.witness.has_value());
  CHECK(std::get<TripleWitness>(*back.witness) == std::get<TripleWitness>(*r.witness));

  CheckReport tn;
  tn.input = {1, 2, 4};
  tn.method = "bruteforce";
  tn.verdict = TnVerdict::TN;
  const CheckReport tnback = CheckReport::from_json(tn.to_json());
  CHECK(tnback.verdict == TnVerdict::TN);
  CHECK_FALSE(tnback.witness.has_value());
  CHECK(tnback.input == tn.input);

  // rational witness values survive the trip
  CheckReport mw;
  mw.input = {2, 3, 5};
  mw.method = "bruteforce";
  mw.verdict = TnVerdict::NOT_TN;
  mw.witness = MinorWitness{{0, 1}, {1, 2}, make_rational(-7, 3)};
  const CheckReport mwback = CheckReport::from_json(mw.to_json());
  CHECK(std::get<MinorWitness>(*mwback.witness) == std::get<MinorWitness>(*mw.witness));
}

}  // TEST_SUITE
