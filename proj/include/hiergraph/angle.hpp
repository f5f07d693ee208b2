#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hiergraph {

/// Order of a group element: a positive integer or infinite.
class Order {
 public:
  static Order finite(std::int64_t n);
  static Order infinite() { return Order(0); }

  bool is_finite() const noexcept { return value_ != 0; }
  bool is_infinite() const noexcept { return value_ == 0; }
  /// Requires is_finite().
  std::int64_t value() const;

  bool operator==(const Order&) const = default;
  std::string to_string() const;

 private:
  explicit Order(std::int64_t v) : value_(v) {}
  std::int64_t value_;  // 0 encodes infinite
};

/// An element of Q/Z kept in lowest terms with 0 <= num < den.
/// Zero is 0/1. Equality is structural.
class RationalAngle {
 public:
  RationalAngle() = default;
  /// Reduces any integer fraction mod 1. den must be nonzero.
  RationalAngle(std::int64_t num, std::int64_t den);

  static RationalAngle zero() { return {}; }
  static RationalAngle half() { return {1, 2}; }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  RationalAngle operator+(const RationalAngle& other) const;
  RationalAngle operator-(const RationalAngle& other) const;
  RationalAngle operator-() const;
  /// k * x mod 1 for any integer k.
  RationalAngle times(std::int64_t k) const;

  bool operator==(const RationalAngle&) const = default;
  /// Orders by (den, num).
  std::strong_ordering operator<=>(const RationalAngle& other) const;

  std::string to_string() const;  // "num/den"
  static RationalAngle parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

RationalAngle angle_add(const RationalAngle& x, const RationalAngle& y);
std::int64_t angle_order(const RationalAngle& x);

/// A RationalAngle whose denominator is a power of two: an element of the
/// Prüfer 2-group.
class DyadicAngle {
 public:
  DyadicAngle() = default;
  /// Throws BadParam if the denominator is not a power of two.
  explicit DyadicAngle(const RationalAngle& angle);
  DyadicAngle(std::int64_t num, std::int64_t den) : DyadicAngle(RationalAngle(num, den)) {}

  const RationalAngle& angle() const noexcept { return angle_; }

  DyadicAngle operator+(const DyadicAngle& o) const { return DyadicAngle(angle_ + o.angle_); }
  DyadicAngle operator-(const DyadicAngle& o) const { return DyadicAngle(angle_ - o.angle_); }
  DyadicAngle operator-() const { return DyadicAngle(-angle_); }

  bool operator==(const DyadicAngle&) const = default;
  std::strong_ordering operator<=>(const DyadicAngle& o) const { return angle_ <=> o.angle_; }

 private:
  RationalAngle angle_;
};

/// An element of Q/Z + Z^k, written multiplicatively: the parameter a of the
/// diagonal element x_a. The angle q stands for the root of unity e^{2 pi i q}
/// and each free coordinate for an independent infinite-order generator.
class ToralParam {
 public:
  static constexpr std::size_t kDefaultRank = 2;

  ToralParam() : ToralParam(RationalAngle{}, std::vector<std::int64_t>(kDefaultRank, 0)) {}
  ToralParam(RationalAngle angle, std::vector<std::int64_t> free)
      : angle_(angle), free_(std::move(free)) {}

  static ToralParam identity(std::size_t rank = kDefaultRank);
  static ToralParam torsion(RationalAngle angle, std::size_t rank = kDefaultRank);

  const RationalAngle& angle() const noexcept { return angle_; }
  std::span<const std::int64_t> free() const noexcept { return free_; }
  std::size_t rank() const noexcept { return free_.size(); }
  bool is_torsion() const noexcept;
  bool is_identity() const noexcept { return angle_.is_zero() && is_torsion(); }

  /// k-th power (integer k, possibly negative).
  ToralParam pow(std::int64_t k) const;

  bool operator==(const ToralParam&) const = default;
  /// Orders by (angle, free lexicographic).
  std::strong_ordering operator<=>(const ToralParam& other) const;

  std::string to_string() const;  // "num/den;f1,f2"
  static ToralParam parse(std::string_view text);

 private:
  RationalAngle angle_;
  std::vector<std::int64_t> free_;
};

/// Throws MismatchedRank when ranks differ.
ToralParam toral_mul(const ToralParam& x, const ToralParam& y);
ToralParam toral_inv(const ToralParam& x);
Order toral_order(const ToralParam& x);

/// Decides whether <x, y> <= Q/Z + Z^k is cyclic (finite or infinite).
bool cyclic_two_gen_abelian(const ToralParam& x, const ToralParam& y);

/// Primitive generator of the kernel of (m1, m2) -> m1*v1 + m2*v2 for
/// integer vectors of rank exactly one. First nonzero coordinate positive.
std::pair<std::int64_t, std::int64_t> rank_one_kernel(std::span<const std::int64_t> v1,
                                                      std::span<const std::int64_t> v2);

/// Rank (0, 1 or 2) of the integer vectors v1, v2.
int pair_rank(std::span<const std::int64_t> v1, std::span<const std::int64_t> v2);

}  // namespace hiergraph
