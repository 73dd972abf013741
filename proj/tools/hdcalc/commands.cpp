#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "expr.hpp"
#include "format.hpp"
#include "hdiff/central.hpp"
#include "hdiff/errors.hpp"
#include "hdiff/lowestweight.hpp"
#include "hdiff/multicopy.hpp"
#include "hdiff/potential.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdcalc {

namespace {

using hdiff::DiffRing;
using hdiff::NormalElement;
using hdiff::RatFun;
using hdiff::Rational;
using json = nlohmann::json;

// Raised for bad command lines that CLI11 itself accepts.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;
  std::string potential;
  std::string sigmas;
  std::string format;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool is_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\n");
  return p != std::string::npos && s[p] == '{';
}

// Parsed inputs of one invocation plus the rank they determine.
struct Inputs {
  int n = 0;
  std::vector<NodePtr> exprs;
  NodePtr potential;
  std::vector<NodePtr> sigmas;
};

Inputs gather(const Common& c, const std::vector<std::string>& exprs, int json_n = 0) {
  Inputs in;
  if (!c.potential.empty() && !c.sigmas.empty()) throw Usage("give either --potential or --sigmas, not both");
  int seen = json_n;
  for (const auto& e : exprs) {
    in.exprs.push_back(parse(e));
    seen = std::max(seen, max_index(in.exprs.back()));
  }
  if (!c.potential.empty()) {
    in.potential = parse(c.potential);
    seen = std::max(seen, max_index(in.potential));
  }
  if (!c.sigmas.empty()) {
    for (const auto& s : split(c.sigmas, ';')) {
      in.sigmas.push_back(parse(s));
      seen = std::max(seen, max_index(in.sigmas.back()));
    }
  }
  if (c.n < 0) throw Usage("n must be positive");
  if (c.n > 0 && seen > c.n)
    throw Usage("input mentions index " + std::to_string(seen) + " but n = " + std::to_string(c.n));
  in.n = c.n > 0 ? c.n : seen;
  if (c.n == 0 && !in.sigmas.empty()) in.n = std::max(in.n, static_cast<int>(in.sigmas.size()));
  if (in.n == 0) throw Usage("cannot infer n from the input; pass -n");
  if (in.n > hdiff::kMaxVars) throw Usage("n is at most " + std::to_string(hdiff::kMaxVars));
  if (!in.sigmas.empty() && static_cast<int>(in.sigmas.size()) != in.n)
    throw Usage("got " + std::to_string(in.sigmas.size()) + " sigmas for n = " + std::to_string(in.n));
  for (const auto& s : in.sigmas)
    if (has_generators(s)) throw Usage("sigmas must be free of x and d");
  if (in.potential && has_generators(in.potential)) throw Usage("the potential must be free of x and d");
  return in;
}

std::vector<RatFun> sigma_of(const Inputs& in) {
  if (in.potential) return hdiff::sigma_from_potential(evaluate_scalar(in.potential, in.n), in.n);
  if (!in.sigmas.empty()) {
    std::vector<RatFun> s;
    for (const auto& e : in.sigmas) s.push_back(evaluate_scalar(e, in.n));
    return s;
  }
  return std::vector<RatFun>(static_cast<std::size_t>(in.n), RatFun(1));
}

// The potential itself: given, reconstructed from sigmas, or H_1 by default.
RatFun potential_of(const Inputs& in) {
  if (in.potential) return evaluate_scalar(in.potential, in.n);
  return hdiff::reconstruct_potential(sigma_of(in));
}

Mode mode_of(const Common& c) {
  if (!c.format.empty()) return mode_from(c.format);
  if (const char* env = std::getenv("HDCALC_FORMAT"); env && *env) return mode_from(env);
  return Mode::Text;
}

void add_common(CLI::App* sub, Common& c, bool sigma = true) {
  sub->add_option("-n,--n", c.n, "rank (inferred from the largest index when omitted)");
  if (sigma) {
    sub->add_option("--potential", c.potential, "potential sigma; sigma_i = Delta_i sigma");
    sub->add_option("--sigmas", c.sigmas, "sigma_1;...;sigma_n (default all 1)");
  }
  sub->add_option("--format", c.format, "text, latex or json (default $HDCALC_FORMAT or text)");
}

std::string tuple_text(const std::vector<int>& t) {
  std::string s;
  for (int x : t) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

void report_lines(std::ostream& out, const std::string& label, const hdiff::Report& r) {
  out << label << ": " << r.summary() << "\n";
  if (const auto* f = r.first_failure()) out << "  first failure: " << f->check << " " << tuple_text(f->tuple) << "\n";
}

Rational parse_number(const std::string& s) {
  try {
    return hdiff::parse_rational(s);
  } catch (const std::exception&) {
    throw Usage("not a rational number: '" + s + "'");
  }
}

hdiff::Weight lambda_of(const std::string& s, int n) {
  if (s.empty()) return hdiff::generic_lambda(n);
  hdiff::Weight w;
  for (const auto& p : split(s, ',')) w.push_back(parse_number(p));
  if (static_cast<int>(w.size()) != n)
    throw Usage("lambda has " + std::to_string(w.size()) + " entries for n = " + std::to_string(n));
  return w;
}

std::string join_q(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& q : v) s += (s.empty() ? "" : ", ") + q.get_str();
  return s;
}

json q_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

hdiff::SigmaArray load_sigma_array(const std::string& path, int n, int nx, int nd) {
  std::ifstream f(path);
  if (!f) throw Usage("cannot read " + path);
  json j = json::parse(f);
  if (j.is_object() && j.contains("entries")) j = j["entries"];
  if (!j.is_array()) throw Usage("sigma file must hold an array of entries");
  hdiff::SigmaArray s(n, nx, nd);
  for (const auto& e : j) {
    const int i = e.at("i").get<int>(), a = e.at("alpha").get<int>(), b = e.at("beta").get<int>();
    if (i < 1 || i > n || a < 1 || a > nx || b < 1 || b > nd) throw hdiff::IndexError("sigma entry index out of range");
    const json& v = e.at("value");
    RatFun val;
    if (v.is_string()) {
      const NodePtr p = parse(v.get<std::string>());
      if (max_index(p) > n) throw Usage("sigma entry mentions an index beyond n");
      val = evaluate_scalar(p, n);
    } else if (v.is_number_integer()) {
      val = RatFun(Rational(v.get<long>()));
    } else {
      val = ratfun_from_json(v);
    }
    if (val.max_var() >= n) throw Usage("sigma entry mentions an index beyond n");
    s.set(i - 1, a - 1, b - 1, val);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in rings of h-deformed differential operators", "hdcalc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int code = 0;
  std::function<void()> action;

  Common c_nf;
  std::string nf_expr;
  auto* nf = app.add_subcommand("nf", "normal form of an expression (or of element JSON)");
  add_common(nf, c_nf);
  nf->add_option("expr", nf_expr, "expression")->required();
  nf->callback([&] {
    action = [&] {
      std::vector<std::string> exprs;
      int jn = 0;
      json j;
      if (is_json(nf_expr)) {
        j = json::parse(nf_expr);
        jn = j.at("n").get<int>();
      } else {
        exprs.push_back(nf_expr);
      }
      const Inputs in = gather(c_nf, exprs, jn);
      const Mode m = mode_of(c_nf);
      DiffRing ring({in.n, sigma_of(in)});
      NormalElement e;
      if (exprs.empty()) {
        int n = 0;
        const NormalElement raw = element_from_json(j, n);
        e = ring.multiply(NormalElement(RatFun(1)), raw);
      } else {
        e = evaluate(in.exprs[0], ring);
      }
      out << show(e, m, in.n) << "\n";
    };
  });

  Common c_mul;
  std::string mul_a, mul_b;
  auto* mul = app.add_subcommand("mul", "product of two expressions in normal form");
  add_common(mul, c_mul);
  mul->add_option("a", mul_a)->required();
  mul->add_option("b", mul_b)->required();
  mul->callback([&] {
    action = [&] {
      const Inputs in = gather(c_mul, {mul_a, mul_b});
      DiffRing ring({in.n, sigma_of(in)});
      out << show(ring.multiply(evaluate(in.exprs[0], ring), evaluate(in.exprs[1], ring)), mode_of(c_mul), in.n) << "\n";
    };
  });

  Common c_pbw;
  auto* pbw = app.add_subcommand("check-pbw", "overlap resolution against the finite-difference system");
  add_common(pbw, c_pbw);
  pbw->callback([&] {
    action = [&] {
      const Inputs in = gather(c_pbw, {});
      const DiffRing ring({in.n, sigma_of(in)});
      const auto r = hdiff::verify_pbw(ring);
      const bool agree = r.direct_flat() == r.algebraic_flat();
      const std::string verdict = !agree ? "mismatch" : r.direct_flat() ? "flat" : "not flat";
      if (mode_of(c_pbw) == Mode::Json) {
        out << json{{"verdict", verdict}, {"direct", to_json(r.direct)}, {"algebraic", to_json(r.algebraic)}}.dump() << "\n";
      } else {
        out << verdict << "\n";
        report_lines(out, "overlaps", r.direct);
        report_lines(out, "sigma system", r.algebraic);
      }
      code = verdict == "flat" ? 0 : 1;
    };
  });

  Common c_delta;
  std::string delta_expr;
  auto* delta = app.add_subcommand("delta-check", "is the element a solution of the Delta-system");
  add_common(delta, c_delta, false);
  delta->add_option("expr", delta_expr)->required();
  delta->callback([&] {
    action = [&] {
      const Inputs in = gather(c_delta, {delta_expr});
      const auto r = hdiff::delta_system_report(evaluate_scalar(in.exprs[0], in.n), in.n);
      if (mode_of(c_delta) == Mode::Json) {
        out << to_json(r).dump() << "\n";
      } else {
        out << (r.ok() ? "in W" : "not in W") << "\n";
        report_lines(out, "delta", r);
      }
      code = r.ok() ? 0 : 1;
    };
  });

  Common c_solve;
  auto* solve = app.add_subcommand("solve-potential", "potential sigma with Delta_i sigma = sigma_i");
  add_common(solve, c_solve);
  solve->callback([&] {
    action = [&] {
      if (c_solve.sigmas.empty()) throw Usage("solve-potential needs --sigmas");
      const Inputs in = gather(c_solve, {});
      const RatFun f = hdiff::reconstruct_potential(sigma_of(in));
      const Mode m = mode_of(c_solve);
      out << (m == Mode::Text ? text_potential(f, in.n) : show(f, m, in.n)) << "\n";
    };
  });

  Common c_dec;
  std::string dec_expr;
  int pivot = 1;
  auto* dec = app.add_subcommand("decompose", "split an element of W into pi(h_k)/chi_k parts and H_L");
  add_common(dec, c_dec, false);
  dec->add_option("--pivot", pivot, "component left out of the chi parts (1-based)");
  dec->add_option("expr", dec_expr)->required();
  dec->callback([&] {
    action = [&] {
      const Inputs in = gather(c_dec, {dec_expr});
      const auto d = hdiff::w_decompose(evaluate_scalar(in.exprs[0], in.n), in.n, pivot - 1);
      if (mode_of(c_dec) == Mode::Json) {
        json parts = json::array(), sym = json::array();
        for (const auto& [k, pi] : d.parts) parts.push_back({{"k", k + 1}, {"coeffs", q_json(pi)}});
        for (const auto& [L, c] : d.symmetric) sym.push_back({{"L", L}, {"c", c.get_str()}});
        out << json{{"pivot", d.pivot + 1}, {"parts", parts}, {"symmetric", sym}}.dump() << "\n";
      } else {
        out << text(d, in.n) << "\n";
      }
    };
  });

  Common c_cen;
  bool cen_verify = false;
  auto* cen = app.add_subcommand("central", "generators c_1..c_n of the center and rho(t)");
  add_common(cen, c_cen);
  cen->add_flag("--verify", cen_verify, "check the rho equation and all commutators");
  cen->callback([&] {
    action = [&] {
      const Inputs in = gather(c_cen, {});
      const RatFun f = potential_of(in);
      const DiffRing ring({in.n, hdiff::sigma_from_potential(f, in.n)});
      const auto fam = hdiff::central_family(ring, f);
      const Mode m = mode_of(c_cen);
      std::optional<hdiff::Report> rho_rep, com_rep;
      if (cen_verify) {
        rho_rep = hdiff::verify_rho(fam.rho, ring.spec().sigma);
        com_rep = hdiff::verify_central(ring, fam);
        code = rho_rep->ok() && com_rep->ok() ? 0 : 1;
      }
      if (m == Mode::Json) {
        json rho = json::array(), cs = json::array();
        for (int k = 0; k <= fam.rho.degree(); ++k) rho.push_back(to_json(fam.rho[k], in.n));
        for (const auto& e : fam.c) cs.push_back(to_json(e, in.n));
        json j = {{"rho", rho}, {"c", cs}};
        if (cen_verify) j["verify"] = {to_json(*rho_rep), to_json(*com_rep)};
        out << j.dump() << "\n";
        return;
      }
      for (int k = 0; k <= fam.rho.degree(); ++k) out << "rho_" << k << " = " << show(fam.rho[k], m, in.n) << "\n";
      for (std::size_t k = 0; k < fam.c.size(); ++k) out << "c_" << k + 1 << " = " << show(fam.c[k], m, in.n) << "\n";
      if (cen_verify) {
        report_lines(out, "rho", *rho_rep);
        report_lines(out, "commutators", *com_rep);
      }
    };
  });

  Common c_lw;
  std::string lw_lambda, lw_elem;
  auto* lwe = app.add_subcommand("lw-eval", "act on the lowest weight vector of M_lambda");
  add_common(lwe, c_lw);
  lwe->add_option("--lambda", lw_lambda, "l1,...,ln (default a generic weight)");
  lwe->add_option("--element", lw_elem, "element to apply")->required();
  lwe->callback([&] {
    action = [&] {
      const Inputs in = gather(c_lw, {lw_elem});
      const DiffRing ring({in.n, sigma_of(in)});
      hdiff::LowestWeightModule mod(ring, lambda_of(lw_lambda, in.n));
      const auto v = mod.act(evaluate(in.exprs[0], ring), mod.vacuum());
      switch (mode_of(c_lw)) {
        case Mode::Text:
          out << text(v) << "\n";
          break;
        case Mode::Latex:
          out << latex(v) << "\n";
          break;
        case Mode::Json: {
          json terms = json::array();
          for (const auto& [b, q] : v.terms) terms.push_back({{"x", b}, {"c", q.get_str()}});
          out << json{{"lambda", q_json(v.lambda)}, {"terms", terms}}.dump() << "\n";
        }
      }
    };
  });

  Common c_ch;
  std::string ch_lambda;
  auto* ch = app.add_subcommand("lw-character", "central character by action and by -rho(t)[-eps]");
  add_common(ch, c_ch);
  ch->add_option("--lambda", ch_lambda, "l1,...,ln (default a generic weight)");
  ch->callback([&] {
    action = [&] {
      const Inputs in = gather(c_ch, {});
      const RatFun f = potential_of(in);
      const DiffRing ring({in.n, hdiff::sigma_from_potential(f, in.n)});
      const auto fam = hdiff::central_family(ring, f);
      const auto cc = hdiff::central_character(ring, fam, lambda_of(ch_lambda, in.n));
      if (mode_of(c_ch) == Mode::Json) {
        out << json{{"action", q_json(cc.action)}, {"predicted", q_json(cc.predicted)}, {"agree", cc.agree()}}.dump()
            << "\n";
      } else {
        out << "action: " << join_q(cc.action) << "\n";
        out << "predicted: " << join_q(cc.predicted) << "\n";
        out << (cc.agree() ? "agree" : "disagree") << "\n";
      }
      code = cc.agree() ? 0 : 1;
    };
  });

  Common c_ver;
  std::string ver_kind;
  auto* ver = app.add_subcommand("verify", "identities of R and Psi");
  add_common(ver, c_ver, false);
  ver->add_option("kind", ver_kind)->required()->check(CLI::IsMember({"ybe", "rsq", "ice", "shift", "skew", "qid"}));
  ver->callback([&] {
    action = [&] {
      if (c_ver.n < 1) throw Usage("verify needs -n");
      if (c_ver.n > hdiff::kMaxVars) throw Usage("n is at most " + std::to_string(hdiff::kMaxVars));
      const int n = c_ver.n;
      hdiff::Report r;
      if (ver_kind == "ybe") r = hdiff::verify_dybe(n);
      else if (ver_kind == "rsq") r = hdiff::verify_rsq(n);
      else if (ver_kind == "ice") r = hdiff::verify_ice(n);
      else if (ver_kind == "shift") r = hdiff::verify_shift_invariance(n);
      else if (ver_kind == "skew") r = hdiff::verify_skew_inverse(n);
      else r = hdiff::verify_q_identity(n);
      if (mode_of(c_ver) == Mode::Json) {
        out << to_json(r).dump() << "\n";
      } else {
        out << r.summary() << "\n";
        if (const auto* f = r.first_failure()) out << "first failure: " << f->check << " " << tuple_text(f->tuple) << "\n";
      }
      code = r.ok() ? 0 : 1;
    };
  });

  Common c_zh;
  int zh_i = 0;
  auto* zh = app.add_subcommand("zhelobenko-check", "do the Zhelobenko maps respect the relations");
  add_common(zh, c_zh);
  zh->add_option("-i,--reflection", zh_i, "only s_i (default all i = 1..n-1)");
  zh->callback([&] {
    action = [&] {
      const Inputs in = gather(c_zh, {});
      const DiffRing ring({in.n, sigma_of(in)});
      if (in.n < 2) throw Usage("Zhelobenko maps need n >= 2");
      const int lo = zh_i > 0 ? zh_i : 1, hi = zh_i > 0 ? zh_i : in.n - 1;
      if (lo < 1 || hi > in.n - 1) throw Usage("reflection index outside 1.." + std::to_string(in.n - 1));
      bool ok = true;
      json reps = json::array();
      std::ostringstream lines;
      for (int i = lo; i <= hi; ++i) {
        const auto r = hdiff::check_assignment(ring, ring, hdiff::zhelobenko_assignment(ring, i - 1));
        ok = ok && r.ok();
        reps.push_back(to_json(r));
        report_lines(lines, "s" + std::to_string(i), r);
      }
      if (mode_of(c_zh) == Mode::Json) out << json{{"automorphism", ok}, {"reports", reps}}.dump() << "\n";
      else out << (ok ? "automorphism" : "not an automorphism") << "\n" << lines.str();
      code = ok ? 0 : 1;
    };
  });

  Common c_fl;
  std::string copies = "1,1", sigma_file;
  bool oracle = false;
  std::size_t budget = 0;
  auto* fl = app.add_subcommand("flatness", "flatness of the several-copies ring");
  add_common(fl, c_fl, false);
  fl->add_option("--copies", copies, "N,N': copies of dbar and of x");
  fl->add_option("--sigma-file", sigma_file, "JSON array of {i, alpha, beta, value}")->required();
  fl->add_flag("--oracle", oracle, "also reduce the overlaps directly");
  fl->add_option("--budget", budget, "sample at most this many overlaps (0 = all)");
  fl->callback([&] {
    action = [&] {
      if (c_fl.n < 1) throw Usage("flatness needs -n");
      if (c_fl.n > hdiff::kMaxVars) throw Usage("n is at most " + std::to_string(hdiff::kMaxVars));
      const auto parts = split(copies, ',');
      if (parts.size() != 2) throw Usage("--copies takes N,N'");
      int nd = 0, nx = 0;
      try {
        nd = std::stoi(parts[0]);
        nx = std::stoi(parts[1]);
      } catch (const std::exception&) {
        throw Usage("--copies takes two positive integers");
      }
      if (nd < 1 || nx < 1 || nd > 8 || nx > 8) throw Usage("copy counts must be in 1..8");
      const auto s = load_sigma_array(sigma_file, c_fl.n, nx, nd);
      const auto r = hdiff::flatness_check(s);
      std::optional<hdiff::Report> o;
      if (oracle) o = hdiff::ambiguity_oracle(s, budget);
      const auto prof = hdiff::constant_profile(s);
      const bool agree = !o || o->ok() == r.ok();
      if (mode_of(c_fl) == Mode::Json) {
        json j = {{"flat", r.ok()}, {"conditions", to_json(r)}};
        if (o) j["oracle"] = to_json(*o);
        if (prof) j["constant"] = {{"rank", prof->rank}, {"diagonal", q_json(prof->diagonal)}};
        out << j.dump() << "\n";
      } else {
        out << (r.ok() ? "flat" : "not flat") << "\n";
        report_lines(out, "conditions", r);
        if (o) report_lines(out, "overlaps", *o);
        if (prof) out << "constant sigma: rank " << prof->rank << ", diagonal (" << join_q(prof->diagonal) << ")\n";
        if (!agree) out << "mismatch between conditions and overlaps\n";
      }
      code = r.ok() && agree ? 0 : 1;
    };
  });

  // "-h1*x1" would otherwise reach CLI11 as the -h flag; a leading space
  // hides the minus and the expression parser skips it.
  static const std::regex negated(R"(^-([hxd]_?[0-9]|\(|(H|e|chi|Delta)\())");
  std::vector<std::string> kept;
  kept.reserve(args.size());
  for (const auto& a : args) kept.push_back(std::regex_search(a, negated) ? " " + a : a);
  std::vector<const char*> argv{"hdcalc"};
  for (const auto& a : kept) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hdcalc: " << e.what() << "\n";
    return 2;
  }

  try {
    if (action) action();
    return code;
  } catch (const hdiff::NotFlat& e) {
    err << "hdcalc: not flat: " << e.what() << "\n";
    return 1;
  } catch (const hdiff::NotInW& e) {
    err << "hdcalc: " << e.what() << "\n";
    return 1;
  } catch (const hdiff::MismatchError& e) {
    err << "hdcalc: mismatch: " << e.what() << "\n";
    return 1;
  } catch (const hdiff::SyntaxError& e) {
    err << "hdcalc: syntax error: " << e.what() << "\n";
    return 2;
  } catch (const hdiff::Error& e) {
    err << "hdcalc: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    err << "hdcalc: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "hdcalc: bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "hdcalc: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hdcalc
