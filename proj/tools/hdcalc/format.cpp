#include "format.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdiff/errors.hpp"

namespace hdcalc {

using hdiff::Monomial;
using hdiff::NormalElement;
using hdiff::Poly;
using hdiff::RatFun;
using hdiff::Rational;
using json = nlohmann::json;

Mode mode_from(const std::string& s) {
  if (s == "text") return Mode::Text;
  if (s == "latex") return Mode::Latex;
  if (s == "json") return Mode::Json;
  throw std::invalid_argument("unknown format '" + s + "' (text, latex or json)");
}

namespace {

// Degree descending, then h1 before h2 before ...
std::vector<Poly::Term> ordered(const Poly& p) {
  std::vector<Poly::Term> t = p.terms();
  std::sort(t.begin(), t.end(), [](const Poly::Term& a, const Poly::Term& b) {
    const int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da > db;
    for (int k = 0; k < hdiff::kMaxVars; ++k)
      if (a.first[k] != b.first[k]) return a.first[k] > b.first[k];
    return false;
  });
  return t;
}

std::string mono_text(const Monomial& m) {
  std::string s;
  for (int k = 0; k < hdiff::kMaxVars; ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "h" + std::to_string(k + 1);
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

std::string mono_latex(const Monomial& m) {
  std::string s;
  for (int k = 0; k < hdiff::kMaxVars; ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += " ";
    s += "\\tilde h_{" + std::to_string(k + 1) + "}";
    if (m[k] > 1) s += "^{" + std::to_string(m[k]) + "}";
  }
  return s;
}

std::string q_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

// Joins signed pieces as "a + b - c".
std::string join(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& [neg, body] = parts[k];
    if (k == 0) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
  }
  return s;
}

std::vector<std::pair<bool, std::string>> poly_parts(const Poly& p, bool tex) {
  std::vector<std::pair<bool, std::string>> out;
  for (const auto& [m, c] : ordered(p)) {
    const Rational a = abs(c);
    const std::string mono = tex ? mono_latex(m) : mono_text(m);
    std::string body;
    if (m.is_one()) body = tex ? q_latex(a) : a.get_str();
    else if (a == 1) body = mono;
    else body = tex ? q_latex(a) + " " + mono : a.get_str() + "*" + mono;
    out.emplace_back(c < 0, body);
  }
  return out;
}

std::string factor_text(const hdiff::LinFactor& f) {
  std::string s = "h" + std::to_string(f.i + 1) + "-h" + std::to_string(f.j + 1);
  if (f.a > 0) s += "+" + std::to_string(f.a);
  if (f.a < 0) s += std::to_string(f.a);
  return s;
}

std::string factor_latex(const hdiff::LinFactor& f) {
  std::string s = "\\tilde h_{" + std::to_string(f.i + 1) + "} - \\tilde h_{" + std::to_string(f.j + 1) + "}";
  if (f.a > 0) s += " + " + std::to_string(f.a);
  if (f.a < 0) s += " - " + std::to_string(-f.a);
  return s;
}

std::string den_text(const hdiff::Denominator& d) {
  std::string s;
  for (const auto& [f, m] : d) {
    if (!s.empty()) s += "*";
    s += "(" + factor_text(f) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  if (d.size() > 1 || d.front().second > 1) s = "(" + s + ")";
  return s;
}

std::string den_latex(const hdiff::Denominator& d) {
  std::string s;
  for (const auto& [f, m] : d) {
    if (!s.empty()) s += " ";
    s += "(" + factor_latex(f) + ")";
    if (m > 1) s += "^{" + std::to_string(m) + "}";
  }
  return s;
}

// Sign pulled out and the rest as a product factor, e.g. (false, "(h1 + h2)").
std::pair<bool, std::string> coefficient_factor(const RatFun& f, bool tex) {
  auto parts = poly_parts(f.num(), tex);
  bool neg = false;
  if (parts.size() == 1) {
    neg = parts[0].first;
    parts[0].first = false;
  }
  std::string num = join(parts);
  if (f.den().empty()) {
    if (parts.size() > 1) num = tex ? "\\left(" + num + "\\right)" : "(" + num + ")";
    return {neg, num};
  }
  if (tex) return {neg, "\\frac{" + num + "}{" + den_latex(f.den()) + "}"};
  if (parts.size() > 1) num = "(" + num + ")";
  return {neg, num + "/" + den_text(f.den())};
}

std::string gen_text(const hdiff::Gen& g) { return (g.is_x() ? "x" : "d") + std::to_string(g.index + 1); }
std::string gen_latex(const hdiff::Gen& g) {
  const std::string i = std::to_string(g.index + 1);
  const std::string idx = i.size() == 1 ? i : "{" + i + "}";
  return g.is_x() ? "x^" + idx : "\\bar\\partial_" + idx;
}

// Words by degree descending, then by the word order.
std::vector<std::pair<hdiff::Word, RatFun>> ordered(const NormalElement& e) {
  std::vector<std::pair<hdiff::Word, RatFun>> t(e.terms().begin(), e.terms().end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  return t;
}

std::string element(const NormalElement& e, bool tex) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [w, c] : ordered(e)) {
    std::string word;
    for (const auto& g : w) {
      if (!word.empty()) word += tex ? " " : "*";
      word += tex ? gen_latex(g) : gen_text(g);
    }
    if (w.empty()) {
      const std::string whole = tex ? latex(c) : text(c);
      if (c.den().empty() && c.num().size() > 1) {
        for (auto& p : poly_parts(c.num(), tex)) parts.push_back(p);
      } else if (whole[0] == '-') {
        parts.emplace_back(true, whole.substr(1));
      } else {
        parts.emplace_back(false, whole);
      }
      continue;
    }
    auto [neg, coef] = coefficient_factor(c, tex);
    if (coef == "1") parts.emplace_back(neg, word);
    else parts.emplace_back(neg, coef + (tex ? " " : "*") + word);
  }
  return join(parts);
}

}  // namespace

std::string text(const Poly& p) { return join(poly_parts(p, false)); }

std::string text(const RatFun& f) {
  if (f.den().empty()) return text(f.num());
  auto [neg, body] = coefficient_factor(f, false);
  return neg ? "-" + body : body;
}

std::string latex(const RatFun& f) {
  if (f.den().empty()) return join(poly_parts(f.num(), true));
  auto [neg, body] = coefficient_factor(f, true);
  return neg ? "-" + body : body;
}

std::string text(const NormalElement& e) { return element(e, false); }
std::string latex(const NormalElement& e) { return element(e, true); }

json to_json(const RatFun& f, int n) {
  json num = json::array();
  for (const auto& [m, c] : ordered(f.num())) num.push_back({m.exponents(n), c.get_str()});
  json den = json::array();
  for (const auto& [fa, mult] : f.den()) den.push_back({fa.i + 1, fa.j + 1, fa.a, mult});
  return {{"num", num}, {"den", den}};
}

json to_json(const NormalElement& e, int n) {
  json terms = json::array();
  for (const auto& [w, c] : ordered(e)) {
    std::vector<int> a, b;
    hdiff::pbw_exponents(w, n, a, b);
    terms.push_back({{"d", a}, {"x", b}, {"coeff", to_json(c, n)}});
  }
  return {{"n", n}, {"terms", terms}};
}

json to_json(const hdiff::Report& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    json j = {{"check", it.check}, {"tuple", it.tuple}, {"pass", it.pass}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    items.push_back(j);
  }
  return {{"name", r.name}, {"passed", r.passed()}, {"total", r.total()}, {"summary", r.summary()}, {"items", items}};
}

RatFun ratfun_from_json(const json& j) {
  std::vector<Poly::Term> terms;
  for (const auto& t : j.at("num")) {
    const auto e = t.at(0).get<std::vector<int>>();
    if (static_cast<int>(e.size()) > hdiff::kMaxVars) throw hdiff::DomainError("too many variables");
    for (int x : e)
      if (x < 0 || x > 255) throw hdiff::DomainError("bad exponent");
    terms.emplace_back(Monomial(e), hdiff::parse_rational(t.at(1).get<std::string>()));
  }
  RatFun f(Poly::from_terms(std::move(terms)));
  for (const auto& d : j.at("den")) {
    const int i = d.at(0).get<int>() - 1, k = d.at(1).get<int>() - 1, mult = d.at(3).get<int>();
    if (i < 0 || k < 0 || i == k || i >= hdiff::kMaxVars || k >= hdiff::kMaxVars || mult < 1)
      throw hdiff::DomainError("bad denominator factor");
    f *= RatFun::inverse_linear(i, k, d.at(2).get<long>()).pow(mult);
  }
  return f;
}

NormalElement element_from_json(const json& j, int& n) {
  n = j.at("n").get<int>();
  if (n < 1 || n > hdiff::kMaxVars) throw hdiff::DomainError("n out of range");
  NormalElement e;
  for (const auto& t : j.at("terms")) {
    const auto a = t.at("d").get<std::vector<int>>();
    const auto b = t.at("x").get<std::vector<int>>();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) throw hdiff::DomainError("exponent length differs from n");
    for (int x : a)
      if (x < 0) throw hdiff::DomainError("negative exponent");
    for (int x : b)
      if (x < 0) throw hdiff::DomainError("negative exponent");
    e.add_term(hdiff::pbw_word(a, b), ratfun_from_json(t.at("coeff")));
  }
  return e;
}

std::string show(const RatFun& f, Mode m, int n) {
  switch (m) {
    case Mode::Text:
      return text(f);
    case Mode::Latex:
      return latex(f);
    case Mode::Json:
      return to_json(f, n).dump();
  }
  return {};
}

std::string show(const NormalElement& e, Mode m, int n) {
  switch (m) {
    case Mode::Text:
      return text(e);
    case Mode::Latex:
      return latex(e);
    case Mode::Json:
      return to_json(e, n).dump();
  }
  return {};
}

std::string text_potential(const RatFun& f, int n) {
  if (!f.is_polynomial()) return text(f);
  const auto h = hdiff::h_expansion(f.num(), n);
  if (!h) return text(f);
  std::vector<std::pair<bool, std::string>> parts;
  for (auto it = h->rbegin(); it != h->rend(); ++it) {
    const auto& [L, c] = *it;
    const Rational a = abs(c);
    const std::string body = "H(" + std::to_string(L) + ")";
    parts.emplace_back(c < 0, a == 1 ? body : a.get_str() + "*" + body);
  }
  return join(parts);
}

std::string text(const hdiff::WDecomposition& d, int n) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [k, pi] : d.parts) {
    Poly p;
    for (std::size_t e = 0; e < pi.size(); ++e) p += Poly::monomial(Monomial::var(k, static_cast<int>(e)), pi[e]);
    auto pp = poly_parts(p, false);
    const std::string chi = "chi(" + std::to_string(k + 1) + ")";
    if (pp.size() == 1) parts.emplace_back(pp[0].first, (pp[0].second == "1" ? "1" : pp[0].second) + "/" + chi);
    else parts.emplace_back(false, "(" + join(pp) + ")/" + chi);
  }
  for (const auto& [L, c] : d.symmetric) {
    const Rational a = abs(c);
    const std::string body = "H(" + std::to_string(L) + ")";
    parts.emplace_back(c < 0, a == 1 ? body : a.get_str() + "*" + body);
  }
  (void)n;
  return join(parts);
}

namespace {

std::string lw(const hdiff::LWVector& v, bool tex) {
  std::vector<std::pair<bool, std::string>> parts;
  std::vector<std::pair<std::vector<int>, Rational>> t(v.terms.begin(), v.terms.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da > db;
  });
  const int n = static_cast<int>(v.lambda.size());
  for (const auto& [b, c] : t) {
    std::string word;
    for (int i = n - 1; i >= 0; --i)
      for (int k = 0; k < b[static_cast<std::size_t>(i)]; ++k) {
        if (!word.empty()) word += tex ? " " : "*";
        word += tex ? gen_latex(hdiff::Gen::x(i)) : gen_text(hdiff::Gen::x(i));
      }
    const Rational a = abs(c);
    std::string body = tex ? q_latex(a) : a.get_str();
    if (!word.empty()) body = a == 1 ? word : body + (tex ? " " : "*") + word;
    parts.emplace_back(c < 0, body + (tex ? " |0\\rangle" : "|0>"));
  }
  return join(parts);
}

}  // namespace

std::string text(const hdiff::LWVector& v) { return lw(v, false); }
std::string latex(const hdiff::LWVector& v) { return lw(v, true); }

}  // namespace hdcalc
