#include "hiergraph/angle.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hiergraph/checked.hpp"
#include "hiergraph/error.hpp"

namespace hiergraph {

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::Parse, "expected integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

Order Order::finite(std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::BadParam, "finite order must be positive");
  return Order(n);
}

std::int64_t Order::value() const {
  if (is_infinite()) throw Error(ErrorCode::BadParam, "order is infinite");
  return value_;
}

std::string Order::to_string() const {
  return is_finite() ? std::to_string(value_) : std::string("INFINITE");
}

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::BadParam, "zero denominator");
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  num = checked::mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalAngle RationalAngle::operator+(const RationalAngle& other) const {
  const std::int64_t l = checked::lcm(den_, other.den_);
  const std::int64_t n =
      checked::add(checked::mul(num_, l / den_), checked::mul(other.num_, l / other.den_));
  return {n, l};
}

RationalAngle RationalAngle::operator-() const { return {den_ - num_, den_}; }

RationalAngle RationalAngle::operator-(const RationalAngle& other) const { return *this + (-other); }

RationalAngle RationalAngle::times(std::int64_t k) const {
  return {checked::mul(num_, checked::mod(k, den_)), den_};
}

std::strong_ordering RationalAngle::operator<=>(const RationalAngle& other) const {
  if (auto c = den_ <=> other.den_; c != 0) return c;
  return num_ <=> other.num_;
}

std::string RationalAngle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle RationalAngle::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

RationalAngle angle_add(const RationalAngle& x, const RationalAngle& y) { return x + y; }

std::int64_t angle_order(const RationalAngle& x) { return x.den(); }

DyadicAngle::DyadicAngle(const RationalAngle& angle) : angle_(angle) {
  const std::int64_t d = angle.den();
  if ((d & (d - 1)) != 0)
    throw Error(ErrorCode::BadParam, "denominator of " + angle.to_string() + " is not a power of 2");
}

ToralParam ToralParam::identity(std::size_t rank) {
  return {RationalAngle{}, std::vector<std::int64_t>(rank, 0)};
}

ToralParam ToralParam::torsion(RationalAngle angle, std::size_t rank) {
  return {angle, std::vector<std::int64_t>(rank, 0)};
}

bool ToralParam::is_torsion() const noexcept {
  for (auto f : free_)
    if (f != 0) return false;
  return true;
}

ToralParam ToralParam::pow(std::int64_t k) const {
  std::vector<std::int64_t> f(free_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = checked::mul(free_[i], k);
  return {angle_.times(k), std::move(f)};
}

std::strong_ordering ToralParam::operator<=>(const ToralParam& other) const {
  if (auto c = angle_ <=> other.angle_; c != 0) return c;
  return std::lexicographical_compare_three_way(free_.begin(), free_.end(), other.free_.begin(),
                                                other.free_.end());
}

std::string ToralParam::to_string() const {
  std::ostringstream os;
  os << angle_.to_string() << ';';
  for (std::size_t i = 0; i < free_.size(); ++i) os << (i ? "," : "") << free_[i];
  return os.str();
}

ToralParam ToralParam::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    return torsion(RationalAngle::parse(text));
  std::vector<std::int64_t> free;
  std::string_view rest = text.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    free.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return {RationalAngle::parse(text.substr(0, semi)), std::move(free)};
}

ToralParam toral_mul(const ToralParam& x, const ToralParam& y) {
  if (x.rank() != y.rank())
    throw Error(ErrorCode::MismatchedRank,
                "ranks " + std::to_string(x.rank()) + " and " + std::to_string(y.rank()));
  std::vector<std::int64_t> f(x.rank());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = checked::add(x.free()[i], y.free()[i]);
  return {x.angle() + y.angle(), std::move(f)};
}

ToralParam toral_inv(const ToralParam& x) { return x.pow(-1); }

Order toral_order(const ToralParam& x) {
  if (!x.is_torsion()) return Order::infinite();
  return Order::finite(angle_order(x.angle()));
}

int pair_rank(std::span<const std::int64_t> v1, std::span<const std::int64_t> v2) {
  const auto nonzero = [](std::span<const std::int64_t> v) {
    for (auto c : v)
      if (c != 0) return true;
    return false;
  };
  if (!nonzero(v1) && !nonzero(v2)) return 0;
  for (std::size_t i = 0; i < v1.size(); ++i)
    for (std::size_t j = i + 1; j < v1.size(); ++j)
      if (checked::sub(checked::mul(v1[i], v2[j]), checked::mul(v1[j], v2[i])) != 0) return 2;
  return 1;
}

std::pair<std::int64_t, std::int64_t> rank_one_kernel(std::span<const std::int64_t> v1,
                                                      std::span<const std::int64_t> v2) {
  const auto is_zero = [](std::span<const std::int64_t> v) {
    for (auto c : v)
      if (c != 0) return false;
    return true;
  };
  if (is_zero(v1)) return {1, 0};
  if (is_zero(v2)) return {0, 1};
  std::int64_t c1 = 0;
  for (auto c : v1) c1 = std::gcd(c1, c);
  std::size_t lead = 0;
  while (v1[lead] == 0) ++lead;
  const std::int64_t w_lead = v1[lead] / c1;
  const std::int64_t c2 = v2[lead] / w_lead;
  const std::int64_t g = std::gcd(c1, c2);
  std::int64_t u1 = c2 / g;
  std::int64_t u2 = checked::neg(c1 / g);
  if (u1 < 0 || (u1 == 0 && u2 < 0)) {
    u1 = checked::neg(u1);
    u2 = checked::neg(u2);
  }
  return {u1, u2};
}

bool cyclic_two_gen_abelian(const ToralParam& x, const ToralParam& y) {
  if (x.rank() != y.rank())
    throw Error(ErrorCode::MismatchedRank,
                "ranks " + std::to_string(x.rank()) + " and " + std::to_string(y.rank()));
  switch (pair_rank(x.free(), y.free())) {
    case 0:
      return true;  // Q/Z is locally cyclic
    case 2:
      return false;
    default:
      break;
  }
  const auto [u1, u2] = rank_one_kernel(x.free(), y.free());
  return (x.angle().times(u1) + y.angle().times(u2)).is_zero();
}

}  // namespace hiergraph
