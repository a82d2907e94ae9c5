#pragma once

#include "json.hpp"
#include "zetaform/integral.hpp"
#include "zetaform/linear_form.hpp"

namespace zetaform {

/// Polynomial in w as an array of exact coefficient strings, lowest degree
/// first ("num" or "num/den").
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// {"terms": [{"s": [..], "poly_w": ["..."]}, ...], "free": ["..."],
///  "meta": {...}} with terms in canonical index order.
nlohmann::json linear_form_to_json(const LinearForm& form,
                                   const nlohmann::json& meta = nlohmann::json::object());
LinearForm linear_form_from_json(const nlohmann::json& j);

/// {"m": .., "group_ends": [..], "a": [..], "b": [..], "c": [..], "d": [..]}.
nlohmann::json integral_params_to_json(const IntegralParams& p, const ShiftVector& d);
std::pair<IntegralParams, ShiftVector> integral_params_from_json(const nlohmann::json& j);

}  // namespace zetaform
