#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "gcdtn/tn.hpp"
#include "gcdtn/types.hpp"

namespace gcdtn {

// Wire format notes: big integers and rationals are JSON strings (they do
// not fit JSON numbers), indices are 1-based to match the text output.

std::string method_name(TnMethod m);
TnMethod method_from_name(const std::string& name);

std::string verdict_name(TnVerdict v);
TnVerdict verdict_from_name(const std::string& name);

nlohmann::json witness_to_json(const TnWitness& w);
TnWitness witness_from_json(const nlohmann::json& j);

struct CheckReport {
  std::vector<BigInt> input;
  std::string method;  // a method name or "all"
  TnVerdict verdict = TnVerdict::TN;
  std::optional<TnWitness> witness;
  long long elapsed_us = 0;

  nlohmann::json to_json() const;
  static CheckReport from_json(const nlohmann::json& j);
};

}  // namespace gcdtn
