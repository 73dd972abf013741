#include "hdiff/rmatrix.hpp"

#include <future>

#include "hdiff/errors.hpp"

namespace hdiff {

namespace {

void check_index(int n, int i) {
  if (i < 0 || i >= n) throw IndexError("index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n));
}

ShiftVector eps(int n, int i, int sign = 1) { return ShiftVector::unit(n, i, sign); }

// Runs body(i) for i in [0, n) concurrently and concatenates the reports in order.
template <class F>
Report fan_out(const std::string& name, int n, F body) {
  std::vector<std::future<Report>> parts;
  for (int i = 0; i < n; ++i) parts.push_back(std::async(std::launch::async, body, i));
  Report r;
  r.name = name;
  for (auto& p : parts) r.append(p.get());
  return r;
}

}  // namespace

RatFun hd(int i, int j) { return RatFun::linear(i, j, 0); }

RatFun psi(int n, int i) {
  check_index(n, i);
  RatFun r(1);
  for (int k = i + 1; k < n; ++k) r *= hd(i, k);
  return r;
}

RatFun psi_prime(int n, int i) {
  check_index(n, i);
  RatFun r(1);
  for (int k = 0; k < i; ++k) r *= hd(i, k);
  return r;
}

RatFun chi(int n, int i) { return psi(n, i) * psi_prime(n, i); }

RatFun phi(int n, int i) {
  check_index(n, i);
  RatFun r(1);
  for (int k = i + 1; k < n; ++k) r *= hd(i, k) * RatFun::inverse_linear(i, k, -1);
  return r;
}

RatFun q_plus(int n, int i) {
  check_index(n, i);
  RatFun r(1);
  for (int k = 0; k < n; ++k)
    if (k != i) r *= RatFun::linear(i, k, 1) * RatFun::inverse_linear(i, k, 0);
  return r;
}

RatFun q_minus(int n, int i) {
  check_index(n, i);
  RatFun r(1);
  for (int k = 0; k < n; ++k)
    if (k != i) r *= RatFun::linear(i, k, -1) * RatFun::inverse_linear(i, k, 0);
  return r;
}

TPoly e_of_t(int n) {
  TPoly e({RatFun(1)});
  for (int k = 0; k < n; ++k) e = e * TPoly::one_plus_ht(k);
  return e;
}

TPoly e_of_t_without(int n, int i) {
  TPoly e({RatFun(1)});
  for (int k = 0; k < n; ++k)
    if (k != i) e = e * TPoly::one_plus_ht(k);
  return e;
}

RatFun r_component(int n, int i, int j, int k, int l) {
  for (int x : {i, j, k, l}) check_index(n, x);
  if (i == j) return (k == i && l == i) ? RatFun(1) : RatFun();
  if (k == i && l == j) return RatFun::inverse_linear(i, j, 0);
  if (k == j && l == i) {
    if (i > j) return RatFun(1);
    return RatFun::linear(i, j, 1) * RatFun::linear(i, j, -1) * RatFun::inverse_linear(i, j, 0).pow(2);
  }
  return {};
}

RatFun psi_component(int n, int i, int j, int k, int l) {
  for (int x : {i, j, k, l}) check_index(n, x);
  if (k == i && l == j) {
    RatFun r = q_plus(n, i) * q_minus(n, j);
    if (i != j) r *= RatFun::inverse_linear(i, j, 1);
    return r;
  }
  if (k == j && l == i) {
    if (i < j) return RatFun(1);
    return RatFun::linear(i, j, -1).pow(2) * RatFun::inverse_linear(i, j, 0) * RatFun::inverse_linear(i, j, -2);
  }
  return {};
}

Report verify_dybe(int n) {
  return fan_out("ybe", n, [n](int i) {
    Report rep;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
          for (int p = 0; p < n; ++p)
            for (int r = 0; r < n; ++r) {
              RatFun lhs, rhs;
              for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                  for (int u = 0; u < n; ++u) {
                    if (ice_allowed(i, j, a, b) && ice_allowed(b, k, u, r) && ice_allowed(a, u, m, p))
                      lhs += r_component(n, i, j, a, b) * r_component(n, b, k, u, r).shifted(eps(n, a, -1)) *
                             r_component(n, a, u, m, p);
                    if (ice_allowed(j, k, a, b) && ice_allowed(i, a, m, u) && ice_allowed(u, b, p, r))
                      rhs += r_component(n, j, k, a, b).shifted(eps(n, i, -1)) * r_component(n, i, a, m, u) *
                             r_component(n, u, b, p, r).shifted(eps(n, m, -1));
                  }
              rep.add("ybe", {i + 1, j + 1, k + 1, m + 1, p + 1, r + 1}, lhs == rhs);
            }
    return rep;
  });
}

Report verify_ice(int n) {
  Report rep;
  rep.name = "ice";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (ice_allowed(i, j, k, l)) continue;
          const bool ok = r_component(n, i, j, k, l).is_zero() && psi_component(n, i, j, k, l).is_zero();
          rep.add("ice", {i + 1, j + 1, k + 1, l + 1}, ok);
        }
  if (rep.items.empty()) rep.add("ice", {}, true, "no off-pattern components");
  return rep;
}

Report verify_shift_invariance(int n) {
  Report rep;
  rep.name = "shift";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ShiftVector s = eps(n, i) + eps(n, j);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          RatFun r = r_component(n, i, j, k, l);
          rep.add("shift", {i + 1, j + 1, k + 1, l + 1}, r.shifted(s) == r);
        }
    }
  return rep;
}

Report verify_rsq(int n) {
  Report rep;
  rep.name = "rsq";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          RatFun s;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              if (ice_allowed(i, j, a, b) && ice_allowed(a, b, k, l))
                s += r_component(n, i, j, a, b) * r_component(n, a, b, k, l);
          rep.add("rsq", {i + 1, j + 1, k + 1, l + 1}, s == RatFun(i == k && j == l ? 1 : 0));
        }
  return rep;
}

Report verify_r_properties(int n) {
  Report rep;
  rep.name = "r-properties";
  rep.append(verify_shift_invariance(n));
  rep.append(verify_ice(n));
  rep.append(verify_rsq(n));
  return rep;
}

Report verify_skew_inverse(int n) {
  return fan_out("skew", n, [n](int i) {
    Report rep;
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p) {
          RatFun s;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              if (ice_allowed(i, k, j, l) && ice_allowed(m, l, p, k))
                s += psi_component(n, i, k, j, l) * r_component(n, m, l, p, k).shifted(eps(n, m));
          rep.add("skew", {i + 1, j + 1, m + 1, p + 1}, s == RatFun(i == p && m == j ? 1 : 0));
        }
    return rep;
  });
}

Report verify_q_identity(int n) {
  Report rep;
  rep.name = "qid";
  const TPoly t({RatFun(0), RatFun(1)});
  TPoly lhs;
  for (int j = 0; j < n; ++j) lhs += t * e_of_t_without(n, j) * q_plus(n, j);
  const TPoly e = e_of_t(n);
  rep.add("qid-cleared", {n}, lhs == e - e.shifted(ShiftVector::all(n, -1)));
  for (int m = 0; m < n; ++m) {
    RatFun s;
    for (int j = 0; j < n; ++j) {
      RatFun term = q_plus(n, j);
      if (j != m) term *= RatFun::inverse_linear(j, m, 1);
      s += term;
    }
    rep.add("qid-special", {m + 1}, s == RatFun(1));
  }
  return rep;
}

}  // namespace hdiff
