#include "gcdtn/report.hpp"

namespace gcdtn {

using nlohmann::json;

std::string method_name(TnMethod m) {
  switch (m) {
    case TnMethod::Tn2: return "tn2";
    case TnMethod::Condition3: return "cond3";
    case TnMethod::Condition4: return "cond4";
    case TnMethod::Exponents: return "exponents";
    case TnMethod::Green: return "green";
    case TnMethod::BruteForce: return "bruteforce";
  }
  throw std::invalid_argument("unknown method");
}

TnMethod method_from_name(const std::string& name) {
  if (name == "tn2") return TnMethod::Tn2;
  if (name == "cond3") return TnMethod::Condition3;
  if (name == "cond4") return TnMethod::Condition4;
  if (name == "exponents") return TnMethod::Exponents;
  if (name == "green") return TnMethod::Green;
  if (name == "bruteforce") return TnMethod::BruteForce;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string verdict_name(TnVerdict v) { return v == TnVerdict::TN ? "TN" : "NOT_TN"; }

TnVerdict verdict_from_name(const std::string& name) {
  if (name == "TN") return TnVerdict::TN;
  if (name == "NOT_TN") return TnVerdict::NOT_TN;
  throw std::invalid_argument("unknown verdict '" + name + "'");
}

namespace {

json index_set_to_json(const std::vector<std::size_t>& idx) {
  json a = json::array();
  for (std::size_t i : idx) a.push_back(i + 1);  // 1-based on the wire
  return a;
}

std::vector<std::size_t> index_set_from_json(const json& a) {
  std::vector<std::size_t> idx;
  for (const auto& v : a) {
    const std::size_t i = v.get<std::size_t>();
    if (i == 0) throw std::invalid_argument("index sets on the wire are 1-based");
    idx.push_back(i - 1);
  }
  return idx;
}

std::string triple_failure_name(TripleWitness::Failed f) {
  switch (f) {
    case TripleWitness::Failed::GcdCollapse: return "gcd_collapse";
    case TripleWitness::Failed::DivisibilityProduct: return "divisibility_product";
    case TripleWitness::Failed::ProductIdentity: return "product_identity";
  }
  throw std::invalid_argument("unknown triple failure");
}

TripleWitness::Failed triple_failure_from_name(const std::string& name) {
  if (name == "gcd_collapse") return TripleWitness::Failed::GcdCollapse;
  if (name == "divisibility_product") return TripleWitness::Failed::DivisibilityProduct;
  if (name == "product_identity") return TripleWitness::Failed::ProductIdentity;
  throw std::invalid_argument("unknown triple failure '" + name + "'");
}

}  // namespace

json witness_to_json(const TnWitness& w) {
  json j;
  if (const auto* m = std::get_if<MinorWitness>(&w)) {
    j["kind"] = "minor";
    j["rows"] = index_set_to_json(m->alpha);
    j["cols"] = index_set_to_json(m->beta);
    j["value"] = to_string(m->value);
  } else if (const auto* t = std::get_if<TripleWitness>(&w)) {
    j["kind"] = "triple";
    j["i"] = t->i + 1;
    j["j"] = t->j + 1;
    j["k"] = t->k + 1;
    j["failed"] = triple_failure_name(t->failed);
  } else if (const auto* e = std::get_if<ExponentWitness>(&w)) {
    j["kind"] = "exponent";
    j["prime"] = to_string(e->prime);
    j["rise_at"] = e->rise_at + 1;
    j["fall_at"] = e->fall_at + 1;
  }
  return j;
}

TnWitness witness_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "minor") {
    MinorWitness m;
    m.alpha = index_set_from_json(j.at("rows"));
    m.beta = index_set_from_json(j.at("cols"));
    m.value = parse_rational(j.at("value").get<std::string>());
    return m;
  }
  if (kind == "triple") {
    TripleWitness t;
    t.i = j.at("i").get<std::size_t>() - 1;
    t.j = j.at("j").get<std::size_t>() - 1;
    t.k = j.at("k").get<std::size_t>() - 1;
    t.failed = triple_failure_from_name(j.at("failed").get<std::string>());
    return t;
  }
  if (kind == "exponent") {
    ExponentWitness e;
    e.prime = parse_positive_bigint(j.at("prime").get<std::string>());
    e.rise_at = j.at("rise_at").get<std::size_t>() - 1;
    e.fall_at = j.at("fall_at").get<std::size_t>() - 1;
    return e;
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

json CheckReport::to_json() const {
  json j;
  j["command"] = "check";
  json in = json::array();
  for (const BigInt& v : input) in.push_back(to_string(v));
  j["input"] = in;
  j["method"] = method;
  j["verdict"] = verdict_name(verdict);
  j["witness"] = witness ? witness_to_json(*witness) : json(nullptr);
  j["elapsed_us"] = elapsed_us;
  return j;
}

CheckReport CheckReport::from_json(const json& j) {
  CheckReport r;
  for (const auto& v : j.at("input")) r.input.push_back(parse_positive_bigint(v.get<std::string>()));
  r.method = j.at("method").get<std::string>();
  r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
  r.elapsed_us = j.value("elapsed_us", 0LL);
  return r;
}

}  // namespace gcdtn
