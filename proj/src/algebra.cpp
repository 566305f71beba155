#include "dmf/algebra.hpp"

#include "dmf/error.hpp"

namespace dmf {

namespace {

std::uint64_t qpow(const Field* f, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= f->q();
    if (r > kThetaMask) throw DomainError("exponent overflow in q-power");
  }
  return r;
}

}  // namespace

BiPoly bracket(const Field* f, int i) {
  if (i < 1) throw DomainError("[i] needs i >= 1");
  return BiPoly::monomial(f, 0, qpow(f, i)) - BiPoly::theta(f);
}

BiPoly dfact(const Field* f, int i) {
  if (i < 0) throw DomainError("d_i needs i >= 0");
  BiPoly d = BiPoly::constant(f, 1);
  for (int n = 1; n <= i; ++n) d = bracket(f, n) * d.twist(1);
  return d;
}

BiPoly lfact(const Field* f, int i) {
  if (i < 0) throw DomainError("l_i needs i >= 0");
  BiPoly r = BiPoly::constant(f, 1);
  for (int j = 1; j <= i; ++j) r *= -bracket(f, j);
  return r;
}

BiPoly bracket_product(const Field* f, int k) {
  if (k < 0) throw DomainError("bracket product needs k >= 0");
  BiPoly r = BiPoly::constant(f, 1);
  for (int j = 1; j <= k; ++j) r *= bracket(f, j);
  return r;
}

BiPoly t_minus_theta_qk(const Field* f, int k) {
  if (k < 0) throw DomainError("t - theta^(q^k) needs k >= 0");
  return BiPoly::t(f) - BiPoly::monomial(f, 0, qpow(f, k));
}

BiPoly lstar(const Field* f, int k) {
  if (k < -1) throw DomainError("L_k^* needs k >= -1");
  BiPoly r = BiPoly::constant(f, 1);
  for (int i = 0; i <= k; ++i) r *= t_minus_theta_qk(f, i);
  return r;
}

BiPoly t_chain(const Field* f, int k, int i) {
  BiPoly r = BiPoly::constant(f, 1);
  for (int j = i + 1; j <= k; ++j) r *= t_minus_theta_qk(f, j);
  return r;
}

std::vector<std::vector<Fq>> enumerate_monic(const Field* f, int d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  std::vector<std::vector<Fq>> out;
  std::vector<Fq> c(d + 1, 0);
  c[d] = 1;
  std::uint64_t count = qpow(f, d);
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t x = code;
    for (int i = 0; i < d; ++i, x /= f->q()) c[i] = static_cast<Fq>(x % f->q());
    out.push_back(c);
  }
  return out;
}

BiPoly theta_poly(const Field* f, const std::vector<Fq>& coeffs) { return BiPoly::from_theta_coeffs(f, coeffs); }

BiPoly t_poly(const Field* f, const std::vector<Fq>& coeffs) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) t.push_back({mono(i, 0), coeffs[i]});
  return BiPoly::from_terms(f, std::move(t));
}

BiPoly determinant(const std::vector<std::vector<BiPoly>>& m0) {
  // Fraction-free Bareiss elimination.
  std::size_t n = m0.size();
  if (n == 0) return BiPoly();
  const Field* f = nullptr;
  for (auto& row : m0)
    for (auto& x : row) f = join_fields(f, x.field());
  auto m = m0;
  BiPoly prev = BiPoly::constant(f, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return BiPoly(f);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto d = divexact(v, prev);
        if (!d) throw DomainError("internal: Bareiss division not exact");
        m[i][j] = *d;
      }
    prev = m[k][k];
  }
  BiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

RhoMatrix rho_symmetric(const Mat2& g, int l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  const Field* f = nullptr;
  for (auto& row : g)
    for (auto& x : row) {
      if (!x.theta_only()) throw DomainError("gamma must have entries in F_q[theta]");
      f = join_fields(f, x.field());
    }
  BiPoly det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (det.is_zero() || !det.is_constant()) throw DomainError("det(gamma) is not a unit");
  BiPoly a = g[0][0].swap_vars(), b = g[0][1].swap_vars(), c = g[1][0].swap_vars(), d = g[1][1].swap_vars();
  RhoMatrix out;
  out.l = l;
  out.m.assign(l + 1, std::vector<BiPoly>(l + 1, BiPoly(f)));
  // Bivariate forms in (X, Y) are stored as vectors indexed by the Y-exponent.
  auto mul = [&](const std::vector<BiPoly>& u, const std::vector<BiPoly>& v) {
    std::vector<BiPoly> w(u.size() + v.size() - 1, BiPoly(f));
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
  };
  std::vector<BiPoly> first = {a, c}, second = {b, d};
  for (int r = 0; r <= l; ++r) {
    std::vector<BiPoly> form = {BiPoly::constant(f, 1)};
    for (int i = 0; i < l - r; ++i) form = mul(form, first);
    for (int i = 0; i < r; ++i) form = mul(form, second);
    for (int s = 0; s <= l; ++s) out.m[s][r] = form[s];
  }
  return out;
}

RhoMatrix matmul(const RhoMatrix& a, const RhoMatrix& b) {
  RhoMatrix r;
  r.l = a.l;
  std::size_t n = a.m.size();
  r.m.assign(n, std::vector<BiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<const BiPoly*, const BiPoly*>> pairs;
      for (std::size_t k = 0; k < n; ++k) pairs.push_back({&a.m[i][k], &b.m[k][j]});
      r.m[i][j] = sum_of_products(nullptr, pairs);
    }
  return r;
}

}  // namespace dmf
