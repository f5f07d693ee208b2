#pragma once

// Shared helpers for the unit tests: error-code assertions and a matrix
// representation of every family, used as an oracle independent of the
// library's multiplication law.

#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hiergraph/element.hpp"
#include "hiergraph/error.hpp"
#include "hiergraph/group_view.hpp"

#define CHECK_ERROR_CODE(expr, expected)                 \
  do {                                                   \
    bool thrown_ = false;                                \
    try {                                                \
      (void)(expr);                                      \
    } catch (const ::hiergraph::Error& e_) {             \
      thrown_ = true;                                    \
      CHECK(e_.code() == (expected));                    \
    }                                                    \
    CHECK_MESSAGE(thrown_, "expected " #expected);       \
  } while (false)

namespace oracle {

using C = std::complex<double>;
using Mat = std::array<C, 4>;  // row-major 2x2

inline Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline bool close(const Mat& a, const Mat& b) {
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

inline const Mat kIdentity = {1, 0, 0, 1};

inline double turns(const hiergraph::RationalAngle& a) {
  return static_cast<double>(a.num()) / static_cast<double>(a.den());
}

inline Mat rotation(double t) {
  const double c = std::cos(2 * std::numbers::pi * t), s = std::sin(2 * std::numbers::pi * t);
  return {c, -s, s, c};
}
inline const Mat kReflection = {1, 0, 0, -1};

inline Mat diag_phase(double t) {
  const C w = std::polar(1.0, 2 * std::numbers::pi * t);
  return {w, 0, 0, std::conj(w)};
}
inline const Mat kJ = {0, 1, -1, 0};

// Free coordinates go to rationally independent irrational angles, which
// embeds Q/Z + Z^2 into the circle.
inline double toral_turns(const hiergraph::ToralParam& p) {
  double t = turns(p.angle());
  const double irr[] = {std::sqrt(2.0) / 10, std::sqrt(3.0) / 10, std::sqrt(5.0) / 10};
  for (std::size_t i = 0; i < p.rank(); ++i) t += static_cast<double>(p.free()[i]) * irr[i % 3];
  return t;
}

/// One matrix per direct factor.
inline std::vector<Mat> represent(const hiergraph::GroupElement& x) {
  using namespace hiergraph;
  if (const auto* e = x.get_if<CyclicElem>()) return {rotation(turns(e->angle))};
  if (const auto* e = x.get_if<DihedralElem>())
    return {e->flip ? mul(rotation(turns(e->angle)), kReflection) : rotation(turns(e->angle))};
  if (const auto* e = x.get_if<LocallyDihedralElem>())
    return {e->flip ? mul(rotation(turns(e->angle.angle())), kReflection)
                    : rotation(turns(e->angle.angle()))};
  if (const auto* e = x.get_if<DicyclicElem>())
    return {e->jpart ? mul(diag_phase(turns(e->angle)), kJ) : diag_phase(turns(e->angle))};
  if (const auto* e = x.get_if<LocallyQuaternionElem>())
    return {e->jpart ? mul(diag_phase(turns(e->angle.angle())), kJ)
                     : diag_phase(turns(e->angle.angle()))};
  if (const auto* e = x.get_if<InfiniteQuaternionElem>())
    return {e->jpart ? mul(diag_phase(toral_turns(e->param)), kJ)
                     : diag_phase(toral_turns(e->param))};
  if (const auto* e = x.get_if<InfiniteDihedralElem>())
    return {Mat{e->flip ? -1.0 : 1.0, static_cast<double>(e->shift), 0, 1}};
  std::vector<Mat> out = represent(x.left());
  for (const auto& m : represent(x.right())) out.push_back(m);
  return out;
}

inline std::vector<Mat> mul(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(mul(a[i], b[i]));
  return out;
}

inline bool close(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!close(a[i], b[i])) return false;
  return true;
}

inline bool is_identity(const std::vector<Mat>& a) {
  for (const auto& m : a)
    if (!close(m, kIdentity)) return false;
  return true;
}

/// Powers y^0, y^1, ... until the identity recurs; empty if it does not
/// within `cap` steps.
inline std::vector<std::vector<Mat>> powers(const hiergraph::GroupElement& y, int cap = 512) {
  const auto m = represent(y);
  std::vector<std::vector<Mat>> out{std::vector<Mat>(m.size(), kIdentity)};
  auto cur = m;
  for (int k = 1; k <= cap; ++k) {
    if (is_identity(cur)) return out;
    out.push_back(cur);
    cur = mul(cur, m);
  }
  return {};
}

inline Mat inverse(const Mat& a) {
  const C det = a[0] * a[3] - a[1] * a[2];
  return {a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};
}

/// x = y^k for some integer k; infinite-order y is searched over |k| <= 64.
inline bool is_power(const hiergraph::GroupElement& x, const hiergraph::GroupElement& y) {
  const auto mx = represent(x);
  const auto finite = powers(y);
  for (const auto& p : finite)
    if (close(p, mx)) return true;
  if (!finite.empty()) return false;
  auto up = represent(y), down = up;
  for (auto& m : down) m = inverse(m);
  auto a = up, b = down;
  for (int k = 1; k <= 64; ++k) {
    if (close(a, mx) || close(b, mx)) return true;
    a = mul(a, up);
    b = mul(b, down);
  }
  return is_identity(mx);
}

inline bool commute(const hiergraph::GroupElement& x, const hiergraph::GroupElement& y) {
  const auto a = represent(x), b = represent(y);
  return close(mul(a, b), mul(b, a));
}

inline bool pow_adjacent(const hiergraph::GroupElement& x, const hiergraph::GroupElement& y) {
  return is_power(x, y) || is_power(y, x);
}

/// In a finite closed view, <x, y> is cyclic iff both lie in <z> for some
/// element z of the view.
inline bool epow_adjacent(const hiergraph::FiniteGroupView& view, const hiergraph::GroupElement& x,
                          const hiergraph::GroupElement& y) {
  for (const auto& z : view.elements())
    if (is_power(x, z) && is_power(y, z)) return true;
  return false;
}

}  // namespace oracle
