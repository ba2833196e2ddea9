#include "codelattice/report.hpp"

#include <sstream>

namespace codelattice {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const std::vector<IntVector>& vectors) {
  Json out = Json::array();
  for (const auto& v : vectors) out.push_back(to_json(v));
  return out;
}

Json to_json(const BinaryVector& v) { return Json(v.to_string()); }

Json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(q.get_num());
  return Json(q.get_str());
}

Json to_json(const ShortVectorReport& report) {
  Json out = Json::object();
  out["lambda1_sq"] = to_json(report.lambda1_sq);
  out["kissing"] = report.kissing;
  out["vectors"] = to_json(report.vectors);
  return out;
}

bool VerificationReport::hypotheses_pass() const {
  for (const auto& h : hypotheses) {
    if (!h.pass) return false;
  }
  return true;
}

bool VerificationReport::pass() const {
  if (inconclusive || !hypotheses_pass()) return false;
  for (const auto& c : conclusions) {
    if (!c.pass) return false;
  }
  return true;
}

std::string VerificationReport::verdict() const {
  if (!hypotheses_pass()) return "FAIL";
  for (const auto& c : conclusions) {
    if (!c.pass) return "FAIL";
  }
  return inconclusive ? "INCONCLUSIVE" : "PASS";
}

Json VerificationReport::to_json(bool include_timing) const {
  auto checks = [](const std::vector<Check>& list, const char* label_key,
                   const char* detail_key) {
    Json out = Json::array();
    for (const auto& c : list) {
      Json item = Json::object();
      item[label_key] = c.name;
      item["pass"] = c.pass;
      if (!c.detail.is_null()) item[detail_key] = c.detail;
      out.push_back(std::move(item));
    }
    return out;
  };
  Json out = Json::object();
  out["theorem"] = theorem;
  out["verdict"] = verdict();
  out["params"] = params;
  out["hypotheses"] = checks(hypotheses, "name", "witness");
  out["conclusions"] = checks(conclusions, "claim", "certificate");
  out["exact_values"] = exact_values;
  if (include_timing) out["runtime_ms"] = runtime_ms;
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << theorem << ": " << verdict() << '\n';
  for (const auto& h : hypotheses) {
    os << "  hypothesis " << (h.pass ? "ok  " : "FAIL") << "  " << h.name << '\n';
  }
  for (const auto& c : conclusions) {
    os << "  conclusion " << (c.pass ? "ok  " : "FAIL") << "  " << c.name << '\n';
  }
  for (const auto& [key, value] : exact_values.items()) {
    os << "  " << key << " = " << value.dump() << '\n';
  }
  return os.str();
}

}  // namespace codelattice
