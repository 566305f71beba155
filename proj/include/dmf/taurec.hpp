#ifndef DMF_TAUREC_HPP
#define DMF_TAUREC_HPP

#include <map>
#include <utility>
#include <vector>

#include "dmf/deformations.hpp"
#include "dmf/error.hpp"

namespace dmf {

// Finite sum of c_ij F^i S^j with u-series coefficients, i >= 0. tau acts by
// tau F = F + 1/((t - theta) u S) and tau S = (t - theta) S.
class SymSeries {
 public:
  using Key = std::pair<int, int>;

  SymSeries() = default;
  explicit SymSeries(const Field* f) : f_(f) {}
  SymSeries(const USeries& c);  // NOLINT: pure series embed implicitly
  static SymSeries term(const USeries& c, int fdeg, int sdeg);
  static SymSeries F(const Field* f);
  static SymSeries S(const Field* f, int power = 1);

  const Field* field() const { return f_; }
  const std::map<Key, USeries>& terms() const { return terms_; }
  // Every component is zero to its certified order.
  bool is_zero() const;
  bool is_pure() const;
  // The (0, 0) component; throws DomainError unless is_pure().
  USeries collapse() const;
  USeries component(int fdeg, int sdeg) const;
  int f_degree() const;
  // Smallest certified order over the components.
  Exp min_order() const;

  SymSeries operator-() const;
  friend SymSeries operator+(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator-(const SymSeries& a, const SymSeries& b) { return a + (-b); }
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator*(const CoeffElem& c, const SymSeries& a);

  // tau^k for any k; negative powers rewrite F, S backwards and throw
  // NotInImageError when a coefficient has no preimage.
  SymSeries tau(int k = 1) const;
  // Only elements c S^j with c invertible are units.
  SymSeries inverse(Exp cap = kExact) const;

 private:
  void add_term(const Key& k, const USeries& c);
  SymSeries tau_once() const;
  SymSeries tau_inverse_once() const;

  const Field* f_ = nullptr;
  std::map<Key, USeries> terms_;
};

// Ring hooks used by the generic code below.
inline USeries ring_tau(const USeries& x, int k) { return x.tau(k); }
inline SymSeries ring_tau(const SymSeries& x, int k) { return x.tau(k); }
inline bool ring_is_zero(const USeries& x) { return x.is_zero(); }
inline bool ring_is_zero(const SymSeries& x) { return x.is_zero(); }
inline USeries ring_zero(const USeries& x) { return USeries(x.field()); }
inline SymSeries ring_zero(const SymSeries& x) { return SymSeries(x.field()); }
inline USeries ring_inverse(const USeries& x, Exp cap) { return x.inverse(cap); }
inline SymSeries ring_inverse(const SymSeries& x, Exp cap) { return x.inverse(cap); }

// L = a_0 tau^0 + ... + a_s tau^s.
template <class R>
struct SkewOperator {
  std::vector<R> a;

  int order() const { return static_cast<int>(a.size()) - 1; }
  bool simple() const { return !a.empty() && !ring_is_zero(a.front()); }

  R apply(const R& x) const {
    R acc = ring_zero(x);
    for (int i = 0; i <= order(); ++i) acc = acc + a[i] * ring_tau(x, i);
    return acc;
  }

  // (L G)_k = a_0 G_k + a_1 tau G_(k-1) + ... + a_s tau^s G_(k-s); needs k >= s.
  R apply_sequence(const std::vector<R>& g, int k) const {
    R acc = ring_zero(g.at(k));
    for (int i = 0; i <= order(); ++i) acc = acc + a[i] * ring_tau(g.at(k - i), i);
    return acc;
  }
};

template <class R>
SkewOperator<R> operator+(const SkewOperator<R>& x, const SkewOperator<R>& y) {
  const SkewOperator<R>& big = x.a.size() >= y.a.size() ? x : y;
  const SkewOperator<R>& small = x.a.size() >= y.a.size() ? y : x;
  SkewOperator<R> r = big;
  for (std::size_t i = 0; i < small.a.size(); ++i) r.a[i] = r.a[i] + small.a[i];
  return r;
}

template <class R>
SkewOperator<R> operator-(const SkewOperator<R>& x) {
  SkewOperator<R> r = x;
  for (auto& c : r.a) c = -c;
  return r;
}

template <class R>
SkewOperator<R> operator-(const SkewOperator<R>& x, const SkewOperator<R>& y) {
  return x + (-y);
}

// (sum a_i tau^i)(sum b_j tau^j) = sum a_i tau^i(b_j) tau^(i+j).
template <class R>
SkewOperator<R> operator*(const SkewOperator<R>& x, const SkewOperator<R>& y) {
  SkewOperator<R> r;
  if (x.a.empty() || y.a.empty()) return r;
  r.a.assign(x.a.size() + y.a.size() - 1, ring_zero(x.a.front()));
  for (std::size_t i = 0; i < x.a.size(); ++i)
    for (std::size_t j = 0; j < y.a.size(); ++j)
      r.a[i + j] = r.a[i + j] + x.a[i] * ring_tau(y.a[j], static_cast<int>(i));
  return r;
}

// Expansion along the first row; the matrices here are at most 4 x 4.
template <class R>
R ring_determinant(const std::vector<std::vector<R>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw DomainError("empty matrix");
  if (n == 1) return m[0][0];
  R acc = ring_zero(m[0][0]);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<R>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    R term = m[0][c] * ring_determinant(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

// Rows (x_i, tau^1 x_i, ..., tau^(cols-1) x_i).
template <class R>
std::vector<std::vector<R>> tau_matrix(const std::vector<R>& x, int cols) {
  std::vector<std::vector<R>> m;
  for (const auto& xi : x) {
    std::vector<R> row;
    for (int j = 0; j < cols; ++j) row.push_back(ring_tau(xi, j));
    m.push_back(std::move(row));
  }
  return m;
}

template <class R>
R tau_wronskian(const std::vector<R>& x) {
  if (x.empty()) throw DomainError("wronskian of an empty family");
  return ring_determinant(tau_matrix(x, static_cast<int>(x.size())));
}

// a_k = (-1)^(s+k) det of the tau-matrix with column k removed, so that
// a_s = W(x) and a_0 = (-1)^s tau W(x).
template <class R>
SkewOperator<R> build_annihilator(const std::vector<R>& x) {
  int s = static_cast<int>(x.size());
  if (s == 0) throw DomainError("annihilator of an empty family");
  auto full = tau_matrix(x, s + 1);
  SkewOperator<R> op;
  for (int k = 0; k <= s; ++k) {
    std::vector<std::vector<R>> m;
    for (const auto& row : full) {
      std::vector<R> r;
      for (int j = 0; j <= s; ++j)
        if (j != k) r.push_back(row[j]);
      m.push_back(std::move(r));
    }
    R d = ring_determinant(m);
    op.a.push_back((s + k) % 2 == 0 ? d : -d);
  }
  if (ring_is_zero(op.a.back())) throw DomainError("wronskian vanishes: the family is dependent");
  return op;
}

template <class R>
struct SkewDivision {
  SkewOperator<R> quotient, remainder;
};

// l = q d + r with order(r) < order(d).
template <class R>
SkewDivision<R> skew_right_divide(const SkewOperator<R>& l, const SkewOperator<R>& d, Exp cap = kExact) {
  if (d.a.empty() || ring_is_zero(d.a.back())) throw DomainError("division by an operator with zero leading coefficient");
  int m = d.order();
  SkewDivision<R> out;
  SkewOperator<R> rem = l;
  int n = rem.order();
  if (n < m) {
    out.remainder = rem;
    return out;
  }
  out.quotient.a.assign(n - m + 1, ring_zero(d.a.back()));
  for (int k = n; k >= m; --k) {
    int shift = k - m;
    R c = rem.a[k] * ring_inverse(ring_tau(d.a.back(), shift), cap);
    out.quotient.a[shift] = c;
    for (int j = 0; j <= m; ++j) rem.a[shift + j] = rem.a[shift + j] - c * ring_tau(d.a[j], shift);
    rem.a.pop_back();  // cancelled up to precision
  }
  if (rem.a.empty()) rem.a.push_back(ring_zero(d.a.back()));
  out.remainder = rem;
  return out;
}

// G_k = (tau^k row) . col for k in [k0, k1].
template <class R>
std::vector<R> sequence_eval(const std::vector<R>& row, const std::vector<R>& col, int k0, int k1) {
  if (row.size() != col.size() || row.empty()) throw DomainError("row and column sizes differ");
  std::vector<R> out;
  for (int k = k0; k <= k1; ++k) {
    R acc = ring_zero(col.front());
    for (std::size_t i = 0; i < row.size(); ++i) acc = acc + ring_tau(row[i], k) * col[i];
    out.push_back(acc);
  }
  return out;
}

// Linearised recurrence from the tau-form adjoint lad = c_0 + ... + c_s tau^s:
// sum_i tau^(k-s)(c_(s-i)) G_(k-i); needs k >= s.
template <class R>
R linearised_residual(const SkewOperator<R>& lad, const std::vector<R>& g, int k) {
  int s = lad.order();
  R acc = ring_zero(g.at(k));
  for (int i = 0; i <= s; ++i) acc = acc + ring_tau(lad.a[s - i], k - s) * g.at(k - i);
  return acc;
}

// The row E with G_k = (tau^k E) . col for k < s. Solves the forward system
// (tau^(s-1) E) . tau^(s-1-k) col = tau^(s-1-k) G_k, then applies tau^-(s-1).
template <class R>
std::vector<R> recover_row(const std::vector<R>& col, const std::vector<R>& initial, Exp cap = kExact) {
  std::size_t s = col.size();
  if (s == 0 || initial.size() != s) throw DomainError("need one initial value per column entry");
  int top = static_cast<int>(s) - 1;
  std::vector<std::vector<R>> m(s);
  std::vector<R> rhs;
  for (std::size_t j = 0; j < s; ++j) rhs.push_back(ring_tau(initial[j], top - static_cast<int>(j)));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m[i].push_back(ring_tau(col[i], top - static_cast<int>(j)));
  R det = ring_determinant(m);
  if (ring_is_zero(det)) throw DomainError("singular system: the column is dependent");
  R dinv = ring_inverse(det, cap);
  std::vector<R> row;
  for (std::size_t i = 0; i < s; ++i) {
    auto mi = m;
    mi[i] = rhs;
    row.push_back(ring_tau(ring_determinant(mi) * dinv, -top));
  }
  return row;
}

// Operators of the difference equations for d_1, d_2 and their squares.

// -1 + g tau + Delta (t - theta^q) tau^2.
SkewOperator<USeries> l1_operator(const BaseForms& b);
// The printed form -1 - g tau + Delta (t - theta^q) tau^2.
SkewOperator<USeries> l1_operator_printed(const BaseForms& b);
// The order-3 operator annihilating d_1^2, d_1 d_2, d_2^2, with A = g^(1+q) + Delta (t - theta^q):
// -1 + g^(1-q) A tau + A Delta (t - theta^q) tau^2 + g^(1-q) Delta^(1+2q) (theta^q - t)(theta^(q^2) - t)^2 tau^3.
SkewOperator<USeries> l2_operator(const BaseForms& b, Exp cap);
// The printed form, with the tau and tau^2 coefficients negated.
SkewOperator<USeries> l2_operator_printed(const BaseForms& b, Exp cap);
// -tau^2 + g^q tau + Delta (t - theta^q), the tau-form of the adjoint.
SkewOperator<USeries> lad_operator(const BaseForms& b);

// d_1 = d_2 F + d_3^* / ((t - theta) S).
SymSeries d1_symbolic(const DeformCatalog& c);
// (t - theta) S h (tau d_2, -tau d_1), normalised so that G_0 = 1.
std::vector<SymSeries> thm3_row(const DeformCatalog& c);
// The printed row (t - theta) S h (-tau d_2, tau d_1).
std::vector<SymSeries> thm3_row_printed(const DeformCatalog& c);
// (d_1, d_2).
std::vector<SymSeries> thm3_column(const DeformCatalog& c);

template <class R>
SkewOperator<R> lift_operator(const SkewOperator<USeries>& op) {
  SkewOperator<R> r;
  for (const auto& c : op.a) r.a.push_back(R(c));
  return r;
}

}  // namespace dmf

#endif
