#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "codelattice/gf2.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const std::vector<IntVector>& vectors);
Json to_json(const BinaryVector& v);
Json to_json(const Rational& q);

/// {lambda1_sq, kissing, vectors}
Json to_json(const ShortVectorReport& report);

struct Check {
  std::string name;
  bool pass = false;
  /// Witness for hypotheses, certificate for conclusions; null when absent.
  Json detail;
};

struct VerificationReport {
  std::string theorem;
  Json params = Json::object();
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  Json exact_values = Json::object();
  /// Set when a search neither confirmed nor refuted its claim.
  bool inconclusive = false;
  double runtime_ms = 0;

  void hypothesis(std::string name, bool pass, Json witness = nullptr) {
    hypotheses.push_back({std::move(name), pass, std::move(witness)});
  }
  void conclusion(std::string name, bool pass, Json certificate = nullptr) {
    conclusions.push_back({std::move(name), pass, std::move(certificate)});
  }

  bool hypotheses_pass() const;
  /// Conjunction of every hypothesis and conclusion, false if inconclusive.
  bool pass() const;
  std::string verdict() const;  // "PASS", "FAIL" or "INCONCLUSIVE"

  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

}  // namespace codelattice
