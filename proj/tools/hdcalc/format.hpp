#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hdiff/diffring.hpp"
#include "hdiff/lowestweight.hpp"
#include "hdiff/potential.hpp"
#include "hdiff/ratfun.hpp"
#include "hdiff/report.hpp"

namespace hdcalc {

enum class Mode { Text, Latex, Json };

// "text", "latex", "json"; throws std::invalid_argument otherwise.
Mode mode_from(const std::string& s);

std::string text(const hdiff::Poly& p);
std::string text(const hdiff::RatFun& f);
std::string text(const hdiff::NormalElement& e);
std::string latex(const hdiff::RatFun& f);
std::string latex(const hdiff::NormalElement& e);

nlohmann::json to_json(const hdiff::RatFun& f, int n);
nlohmann::json to_json(const hdiff::NormalElement& e, int n);
nlohmann::json to_json(const hdiff::Report& r);
hdiff::RatFun ratfun_from_json(const nlohmann::json& j);
// Returns the element and sets n from the "n" field.
hdiff::NormalElement element_from_json(const nlohmann::json& j, int& n);

std::string show(const hdiff::RatFun& f, Mode m, int n);
std::string show(const hdiff::NormalElement& e, Mode m, int n);

// sum of c_L H(L) when f is such a combination, else text(f)
std::string text_potential(const hdiff::RatFun& f, int n);
std::string text(const hdiff::WDecomposition& d, int n);
std::string text(const hdiff::LWVector& v);
std::string latex(const hdiff::LWVector& v);

}  // namespace hdcalc
