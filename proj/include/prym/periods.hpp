#pragma once

#include <prym/surface.hpp>

#include <array>
#include <numeric>
#include <optional>
#include <variant>

namespace prym {

using IMat4 = std::array<std::array<long, 4>, 4>;

inline IMat4 imat_zero() {
  IMat4 m{};
  for (auto& r : m) r.fill(0);
  return m;
}

inline IMat4 imat_id(long k = 1) {
  IMat4 m = imat_zero();
  for (int i = 0; i < 4; ++i) m[i][i] = k;
  return m;
}

inline IMat4 imat_mul(const IMat4& a, const IMat4& b) {
  IMat4 c = imat_zero();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if (a[i][k])
        for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IMat4 imat_transpose(const IMat4& a) {
  IMat4 c = imat_zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[j][i] = a[i][j];
  return c;
}

inline bool imat_eq(const IMat4& a, const IMat4& b) { return a == b; }

// intersection form diag(c1*J, c2*J) with J the standard 2x2 symplectic block
struct SympForm {
  long c1 = 1, c2 = 1;
  IMat4 matrix() const {
    IMat4 m = imat_zero();
    m[0][1] = c1; m[1][0] = -c1;
    m[2][3] = c2; m[3][2] = -c2;
    return m;
  }
};

struct PeriodData {
  SympForm form;
  std::vector<QF> re, im;            // row 4-vectors
  std::vector<std::string> basis_labels;
};

// candidate generator of the order O_D acting on H_1(X,Z)^-; satisfies
// t^2 = e t + c Id, period row vectors are acted on by right multiplication
struct RMEndo {
  IMat4 t = imat_zero();
  long e = 0, c = 0;
};

inline bool check_quadratic_relation(const RMEndo& endo) {
  IMat4 sq = imat_mul(endo.t, endo.t);
  IMat4 rhs = imat_zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rhs[i][j] = endo.e * endo.t[i][j] + (i == j ? endo.c : 0);
  return imat_eq(sq, rhs);
}

// self-adjoint for the symplectic form M:  t^T M == M t
inline bool check_self_adjoint(const RMEndo& endo, const SympForm& form) {
  IMat4 m = form.matrix();
  return imat_eq(imat_mul(imat_transpose(endo.t), m), imat_mul(m, endo.t));
}

inline std::vector<QF> row_mul(const std::vector<QF>& v, const IMat4& t) {
  std::vector<QF> out;
  for (int j = 0; j < 4; ++j) {
    QF s = QF::rational(Rat(0), v[0].disc());
    for (int i = 0; i < 4; ++i)
      if (t[i][j]) s += rat(t[i][j]) * v[i];
    out.push_back(s);
  }
  return out;
}

inline bool periods_rank2(const PeriodData& p) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(p.re[i] * p.im[j] - p.re[j] * p.im[i]).is_zero()) return true;
  return false;
}

// omega * t = lambda * omega with omega = re + i im and lambda real:
// both row vectors must be eigenvectors with the same exact eigenvalue.
inline std::optional<QF> check_eigenform(const RMEndo& endo, const PeriodData& p) {
  if (!periods_rank2(p)) throw SurfaceError("rank-degenerate period data");
  std::vector<QF> rt = row_mul(p.re, endo.t);
  std::vector<QF> it = row_mul(p.im, endo.t);
  std::optional<QF> lambda;
  for (int i = 0; i < 4 && !lambda; ++i)
    if (!p.re[i].is_zero()) lambda = rt[i] / p.re[i];
  for (int i = 0; i < 4 && !lambda; ++i)
    if (!p.im[i].is_zero()) lambda = it[i] / p.im[i];
  if (!lambda) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    if (rt[i] != *lambda * p.re[i]) return std::nullopt;
    if (it[i] != *lambda * p.im[i]) return std::nullopt;
  }
  // lambda must satisfy the order's quadratic relation
  QF l = *lambda;
  Disc d = l.disc();
  if (l * l != rat(endo.e) * l + QF::rational(rat(endo.c), d)) return std::nullopt;
  return lambda;
}

// k = content of the matrix; the proper order is generated by t/k and has
// discriminant (e^2 + 4c)/k^2
struct ProperDisc {
  long k = 1;
  Disc d_proper;
};

inline ProperDisc proper_discriminant(const RMEndo& endo) {
  if (!check_quadratic_relation(endo))
    throw SurfaceError("endomorphism does not satisfy its quadratic relation");
  long k = 0;
  for (auto& row : endo.t)
    for (long v : row) k = std::gcd(k, std::abs(v));
  if (k == 0) throw SurfaceError("zero endomorphism");
  long raw = endo.e * endo.e + 4 * endo.c;
  if (raw <= 0) throw SurfaceError("non-real-quadratic endomorphism");
  if (endo.e % k != 0 || endo.c % (k * k) != 0)
    throw SurfaceError("generator does not divide to an integral proper generator");
  long dp = raw / (k * k);
  return ProperDisc{k, Disc(dp)};
}

// --- paper matrices --------------------------------------------------------

// three-tori family, basis (a0~, b0~, a~, b~), form diag(J, 2J)
inline RMEndo three_tori_endo(long w, long h, long t, long e) {
  RMEndo r;
  r.t = {{{e, 0, 2 * w, 2 * t}, {0, e, 0, 2 * h}, {h, -t, 0, 0}, {0, w, 0, 0}}};
  r.e = e;
  r.c = 2 * w * h;
  return r;
}
inline SympForm three_tori_form() { return SympForm{1, 2}; }

// H(2) splitting family, basis (a1, b1, a2, b2), standard genus-2 form
inline RMEndo h2_endo(long w, long h, long t, long e) {
  RMEndo r;
  r.t = {{{e, 0, w, t}, {0, e, 0, h}, {h, -t, 0, 0}, {0, w, 0, 0}}};
  r.e = e;
  r.c = w * h;
  return r;
}
inline SympForm h2_form() { return SympForm{1, 1}; }

// double covers of the H(2) splitting: model 1 has form diag(J,2J),
// model 2 diag(2J,J); both satisfy T^2 = 2e T + 4wh Id with eigenvalue 2*lambda
inline RMEndo cover_endo(int model, long w, long h, long t, long e) {
  RMEndo r;
  if (model == 1)
    r.t = {{{2 * e, 0, 4 * w, 4 * t}, {0, 2 * e, 0, 2 * h}, {h, -2 * t, 0, 0}, {0, 2 * w, 0, 0}}};
  else
    r.t = {{{2 * e, 0, w, 2 * t}, {0, 2 * e, 0, 2 * h}, {4 * h, -4 * t, 0, 0}, {0, 2 * w, 0, 0}}};
  r.e = 2 * e;
  r.c = 4 * w * h;
  return r;
}
inline SympForm cover_form(int model) { return model == 1 ? SympForm{1, 2} : SympForm{2, 1}; }

// --- period data from a constructed surface ---------------------------------

inline PeriodData build_period_data(const CylSurface& s) {
  if (!s.cert)
    throw SurfaceError("surface carries no recorded symplectic basis (not constructor-built)");
  const EigenformCert& c = *s.cert;
  PeriodData p;
  p.form = SympForm{c.form_blocks[0], c.form_blocks[1]};
  p.re = c.re;
  p.im = c.im;
  p.basis_labels = c.basis;
  return p;
}

inline RMEndo endo_of(const CylSurface& s) {
  if (!s.cert) throw SurfaceError("surface carries no recorded endomorphism");
  RMEndo r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.t[i][j] = s.cert->endo[i][j];
  r.e = s.cert->quad_e;
  r.c = s.cert->quad_c;
  return r;
}

}  // namespace prym
