#include "zetaform/json_io.hpp"

namespace zetaform {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
  return arr;
}

Polynomial polynomial_from_json(const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& item : j) coeffs.push_back(rat_from_string(item.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

json linear_form_to_json(const LinearForm& form, const json& meta) {
  json terms = json::array();
  for (const auto& [s, poly] : form.terms()) {
    json t;
    t["s"] = s.entries;
    t["poly_w"] = polynomial_to_json(poly);
    terms.push_back(std::move(t));
  }
  json out;
  out["terms"] = std::move(terms);
  out["free"] = polynomial_to_json(form.free_term());
  out["meta"] = meta;
  return out;
}

LinearForm linear_form_from_json(const json& j) {
  LinearForm form;
  for (const auto& t : j.at("terms")) {
    MultiIndex s(t.at("s").get<std::vector<int>>());
    form.add_term(s, polynomial_from_json(t.at("poly_w")));
  }
  form.add_free(polynomial_from_json(j.at("free")));
  return form;
}

json integral_params_to_json(const IntegralParams& p, const ShiftVector& d) {
  json out;
  out["m"] = p.m;
  out["group_ends"] = p.group_ends;
  out["a"] = p.a;
  out["b"] = p.b;
  out["c"] = p.c;
  out["d"] = d.d;
  return out;
}

std::pair<IntegralParams, ShiftVector> integral_params_from_json(const json& j) {
  IntegralParams p;
  p.m = j.at("m").get<int>();
  p.group_ends = j.at("group_ends").get<std::vector<int>>();
  p.a = j.at("a").get<std::vector<long>>();
  p.b = j.at("b").get<std::vector<long>>();
  p.c = j.at("c").get<std::vector<long>>();
  ShiftVector d;
  if (j.contains("d")) d.d = j.at("d").get<std::vector<long>>();
  else d.d.assign(p.c.size(), 0);
  p.check_well_formed();
  return {std::move(p), std::move(d)};
}

}  // namespace zetaform
