#include "mahon/json_io.hpp"

#include <cstdint>
#include <vector>

#include "mahon/errors.hpp"

namespace mahon {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing JSON field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("JSON field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<std::int64_t> int_array(const json& v, const char* key) {
  if (!v.is_array()) throw ParseError(std::string("JSON field \"") + key + "\" must be an array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer()) {
      throw ParseError(std::string("JSON field \"") + key + "\" must hold integers");
    }
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

}  // namespace

json cyc_to_json(const CycInt& v) {
  return json{{"r", v.order()}, {"c", v.coeffs()}};
}

CycInt cyc_from_json(const json& j) {
  const int r = int_field(j, "r");
  if (r < 1) throw ParseError("ring order must be >= 1");
  return CycInt::from_coeffs(r, int_array(field(j, "c"), "c"));
}

json poly_to_json(const Poly2& p) {
  json terms = json::array();
  for (const auto& [qt, c] : p.terms()) {
    terms.push_back(json{{"q", qt.q}, {"t", qt.t}, {"c", c.coeffs()}});
  }
  return json{{"r", p.ring_order()}, {"terms", std::move(terms)}};
}

Poly2 poly_from_json(const json& j) {
  const int r = int_field(j, "r");
  if (r < 1) throw ParseError("ring order must be >= 1");
  Poly2 p(r);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("JSON field \"terms\" must be an array");
  for (const json& t : terms) {
    const CycInt c = CycInt::from_coeffs(r, int_array(field(t, "c"), "c"));
    p.add_term(int_field(t, "q"), int_field(t, "t"), c);
  }
  return p;
}

json perm_to_json(const ColoredPerm& pi) {
  return json{{"r", pi.r()}, {"sigma", pi.sigma()}, {"z", pi.z()}};
}

ColoredPerm perm_from_json(const json& j) {
  const int r = int_field(j, "r");
  const std::vector<std::int64_t> sigma64 = int_array(field(j, "sigma"), "sigma");
  const std::vector<std::int64_t> z64 = int_array(field(j, "z"), "z");
  std::vector<int> sigma(sigma64.begin(), sigma64.end());
  std::vector<int> z(z64.begin(), z64.end());
  try {
    return ColoredPerm(r, std::move(sigma), std::move(z));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json params_to_json(const VerifyParams& p) {
  return json{{"n", p.n}, {"r", p.r}, {"a", p.a}, {"b", p.b}};
}

VerifyParams params_from_json(const json& j) {
  VerifyParams p;
  p.n = int_field(j, "n");
  p.r = int_field(j, "r");
  p.a = int_field(j, "a");
  p.b = int_field(j, "b");
  return p;
}

json report_to_json(const VerifyReport& rep) {
  json j{{"id", rep.id},
         {"params", params_to_json(rep.params)},
         {"verdict", verdict_name(rep.verdict)},
         {"as_expected", rep.as_expected()},
         {"lhs", poly_to_json(rep.lhs)},
         {"rhs", poly_to_json(rep.rhs)},
         {"diff", poly_to_json(rep.diff)},
         {"count", rep.count},
         {"ms", rep.ms}};
  if (!rep.note.empty()) j["note"] = rep.note;
  if (rep.witness) j["witness"] = *rep.witness;
  return j;
}

}  // namespace mahon
