#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hiergraph/angle.hpp"

namespace hiergraph {

// Element types, one per group family. Rotation-like parts are angles in
// Q/Z (or shifts in Z for the infinite dihedral group); the flip / jpart bit
// selects the non-trivial coset. All families share the semidirect law
//   (c1, a1)(c2, a2) = (c1 + (-1)^a1 c2, a1 xor a2)
// and the quaternionic ones add the central involution (angle 1/2) when
// a1 = a2 = 1. Element ordering within a family is (flip, rotation part).

/// Element of a cyclic group, as a subgroup of Q/Z.
struct CyclicElem {
  RationalAngle angle;
  bool operator==(const CyclicElem&) const = default;
  auto operator<=>(const CyclicElem&) const = default;
};

/// r^i s^flip in a dihedral group D_2m, with angle i/m.
struct DihedralElem {
  RationalAngle angle;
  bool flip = false;
  bool operator==(const DihedralElem&) const = default;
  std::strong_ordering operator<=>(const DihedralElem& o) const {
    if (auto c = flip <=> o.flip; c != 0) return c;
    return angle <=> o.angle;
  }
};

/// h^i x^jpart in a dicyclic group Q_4m, with angle i/2m.
struct DicyclicElem {
  RationalAngle angle;
  bool jpart = false;
  bool operator==(const DicyclicElem&) const = default;
  std::strong_ordering operator<=>(const DicyclicElem& o) const {
    if (auto c = jpart <=> o.jpart; c != 0) return c;
    return angle <=> o.angle;
  }
};

/// c s^flip in the locally dihedral group, c in the Prüfer 2-group.
struct LocallyDihedralElem {
  DyadicAngle angle;
  bool flip = false;
  bool operator==(const LocallyDihedralElem&) const = default;
  std::strong_ordering operator<=>(const LocallyDihedralElem& o) const {
    if (auto c = flip <=> o.flip; c != 0) return c;
    return angle <=> o.angle;
  }
};

/// c x^jpart in the locally quaternion group, x^2 = z = 1/2.
struct LocallyQuaternionElem {
  DyadicAngle angle;
  bool jpart = false;
  bool operator==(const LocallyQuaternionElem&) const = default;
  std::strong_ordering operator<=>(const LocallyQuaternionElem& o) const {
    if (auto c = jpart <=> o.jpart; c != 0) return c;
    return angle <=> o.angle;
  }
};

/// r^shift t^flip in the infinite dihedral group.
struct InfiniteDihedralElem {
  std::int64_t shift = 0;
  bool flip = false;
  bool operator==(const InfiniteDihedralElem&) const = default;
  std::strong_ordering operator<=>(const InfiniteDihedralElem& o) const {
    if (auto c = flip <=> o.flip; c != 0) return c;
    return shift <=> o.shift;
  }
};

/// x_a j^jpart in the infinite quaternion group, j^2 = -I.
struct InfiniteQuaternionElem {
  ToralParam param;
  bool jpart = false;
  bool operator==(const InfiniteQuaternionElem&) const = default;
  std::strong_ordering operator<=>(const InfiniteQuaternionElem& o) const {
    if (auto c = jpart <=> o.jpart; c != 0) return c;
    return param <=> o.param;
  }
};

class GroupElement;

/// (left, right) in a direct product; parts has exactly two entries.
struct ProductElem {
  std::vector<GroupElement> parts;
};

enum class Family {
  Cyclic,
  Dihedral,
  Dicyclic,
  LocallyDihedral,
  LocallyQuaternion,
  InfiniteDihedral,
  InfiniteQuaternion,
  Product,
};

std::string_view family_name(Family f);

class GroupElement {
 public:
  using Variant = std::variant<CyclicElem, DihedralElem, DicyclicElem, LocallyDihedralElem,
                               LocallyQuaternionElem, InfiniteDihedralElem,
                               InfiniteQuaternionElem, ProductElem>;

  template <typename T>
    requires(!std::same_as<std::remove_cvref_t<T>, GroupElement> &&
             std::is_constructible_v<Variant, T>)
  GroupElement(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static GroupElement product(GroupElement left, GroupElement right);

  const Variant& value() const noexcept { return value_; }
  Family family() const noexcept { return static_cast<Family>(value_.index()); }

  template <typename T>
  const T& as() const {
    return std::get<T>(value_);
  }
  template <typename T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&value_);
  }

  const GroupElement& left() const { return as<ProductElem>().parts[0]; }
  const GroupElement& right() const { return as<ProductElem>().parts[1]; }

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  Variant value_;
};

/// Throws FamilyMismatch unless both elements belong to the same family
/// (component-wise for products).
GroupElement elem_mul(const GroupElement& x, const GroupElement& y);
GroupElement elem_inv(const GroupElement& x);
Order elem_order(const GroupElement& x);
/// Identity of the family x belongs to.
GroupElement identity_like(const GroupElement& x);
bool is_identity(const GroupElement& x);
/// x^k by repeated squaring; negative k uses the inverse.
GroupElement elem_pow(const GroupElement& x, std::int64_t k);

/// Vertex label: c(n/d), c(n/d)*s, c(n/d)*x, r(n), r(n)*t, x(n/d;f..), x(..)*j,
/// or (left,right) for products.
std::string elem_label(const GroupElement& x);

/// Whether x and y are elements of the same group family.
bool same_family(const GroupElement& x, const GroupElement& y);

}  // namespace hiergraph
