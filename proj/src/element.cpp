#include "hiergraph/element.hpp"

#include "hiergraph/checked.hpp"
#include "hiergraph/error.hpp"

namespace hiergraph {

namespace {

// Rotation-part arithmetic, overloaded per carrier.
RationalAngle add(const RationalAngle& a, const RationalAngle& b) { return a + b; }
RationalAngle sub(const RationalAngle& a, const RationalAngle& b) { return a - b; }
RationalAngle with_half(const RationalAngle& a) { return a + RationalAngle::half(); }

DyadicAngle add(const DyadicAngle& a, const DyadicAngle& b) { return a + b; }
DyadicAngle sub(const DyadicAngle& a, const DyadicAngle& b) { return a - b; }
DyadicAngle with_half(const DyadicAngle& a) { return a + DyadicAngle(1, 2); }

std::int64_t add(std::int64_t a, std::int64_t b) { return checked::add(a, b); }
std::int64_t sub(std::int64_t a, std::int64_t b) { return checked::sub(a, b); }

ToralParam add(const ToralParam& a, const ToralParam& b) { return toral_mul(a, b); }
ToralParam sub(const ToralParam& a, const ToralParam& b) { return toral_mul(a, toral_inv(b)); }
ToralParam with_half(const ToralParam& a) {
  return toral_mul(a, ToralParam::torsion(RationalAngle::half(), a.rank()));
}

template <typename C>
std::pair<C, bool> dihedral_law(const C& c1, bool f1, const C& c2, bool f2) {
  return {f1 ? sub(c1, c2) : add(c1, c2), f1 != f2};
}

template <typename C>
std::pair<C, bool> quaternion_law(const C& c1, bool a1, const C& c2, bool a2) {
  auto [c, a] = dihedral_law(c1, a1, c2, a2);
  if (a1 && a2) c = with_half(c);
  return {c, a};
}

[[noreturn]] void mismatch(const GroupElement& x, const GroupElement& y) {
  throw Error(ErrorCode::FamilyMismatch, std::string(family_name(x.family())) + " vs " +
                                             std::string(family_name(y.family())));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
    case Family::LocallyDihedral: return "locally-dihedral";
    case Family::LocallyQuaternion: return "locally-quaternion";
    case Family::InfiniteDihedral: return "infinite-dihedral";
    case Family::InfiniteQuaternion: return "infinite-quaternion";
    case Family::Product: return "product";
  }
  return "unknown";
}

GroupElement GroupElement::product(GroupElement left, GroupElement right) {
  ProductElem p;
  p.parts.reserve(2);
  p.parts.push_back(std::move(left));
  p.parts.push_back(std::move(right));
  return GroupElement(std::move(p));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* pa = a.get_if<ProductElem>()) {
    const auto& pb = b.as<ProductElem>();
    return pa->parts == pb.parts;
  }
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
  if (const auto* pa = a.get_if<ProductElem>()) {
    const auto& pb = b.as<ProductElem>();
    return std::lexicographical_compare_three_way(pa->parts.begin(), pa->parts.end(),
                                                  pb.parts.begin(), pb.parts.end());
  }
  return std::visit(
      [&b](const auto& va) -> std::strong_ordering {
        using T = std::decay_t<decltype(va)>;
        if constexpr (std::is_same_v<T, ProductElem>) {
          return std::strong_ordering::equal;  // handled above
        } else {
          return va <=> b.as<T>();
        }
      },
      a.value_);
}

bool same_family(const GroupElement& x, const GroupElement& y) {
  if (x.family() != y.family()) return false;
  if (x.family() == Family::Product)
    return same_family(x.left(), y.left()) && same_family(x.right(), y.right());
  if (x.family() == Family::InfiniteQuaternion)
    return x.as<InfiniteQuaternionElem>().param.rank() ==
           y.as<InfiniteQuaternionElem>().param.rank();
  return true;
}

GroupElement elem_mul(const GroupElement& x, const GroupElement& y) {
  if (x.family() != y.family()) mismatch(x, y);
  switch (x.family()) {
    case Family::Cyclic:
      return CyclicElem{x.as<CyclicElem>().angle + y.as<CyclicElem>().angle};
    case Family::Dihedral: {
      const auto &a = x.as<DihedralElem>(), &b = y.as<DihedralElem>();
      auto [c, f] = dihedral_law(a.angle, a.flip, b.angle, b.flip);
      return DihedralElem{c, f};
    }
    case Family::Dicyclic: {
      const auto &a = x.as<DicyclicElem>(), &b = y.as<DicyclicElem>();
      auto [c, j] = quaternion_law(a.angle, a.jpart, b.angle, b.jpart);
      return DicyclicElem{c, j};
    }
    case Family::LocallyDihedral: {
      const auto &a = x.as<LocallyDihedralElem>(), &b = y.as<LocallyDihedralElem>();
      auto [c, f] = dihedral_law(a.angle, a.flip, b.angle, b.flip);
      return LocallyDihedralElem{c, f};
    }
    case Family::LocallyQuaternion: {
      const auto &a = x.as<LocallyQuaternionElem>(), &b = y.as<LocallyQuaternionElem>();
      auto [c, j] = quaternion_law(a.angle, a.jpart, b.angle, b.jpart);
      return LocallyQuaternionElem{c, j};
    }
    case Family::InfiniteDihedral: {
      const auto &a = x.as<InfiniteDihedralElem>(), &b = y.as<InfiniteDihedralElem>();
      auto [s, f] = dihedral_law(a.shift, a.flip, b.shift, b.flip);
      return InfiniteDihedralElem{s, f};
    }
    case Family::InfiniteQuaternion: {
      const auto &a = x.as<InfiniteQuaternionElem>(), &b = y.as<InfiniteQuaternionElem>();
      auto [p, j] = quaternion_law(a.param, a.jpart, b.param, b.jpart);
      return InfiniteQuaternionElem{p, j};
    }
    case Family::Product:
      return GroupElement::product(elem_mul(x.left(), y.left()), elem_mul(x.right(), y.right()));
  }
  mismatch(x, y);
}

GroupElement elem_inv(const GroupElement& x) {
  switch (x.family()) {
    case Family::Cyclic:
      return CyclicElem{-x.as<CyclicElem>().angle};
    case Family::Dihedral: {
      const auto& a = x.as<DihedralElem>();
      return a.flip ? x : GroupElement(DihedralElem{-a.angle, false});
    }
    case Family::Dicyclic: {
      const auto& a = x.as<DicyclicElem>();
      return DicyclicElem{a.jpart ? with_half(a.angle) : -a.angle, a.jpart};
    }
    case Family::LocallyDihedral: {
      const auto& a = x.as<LocallyDihedralElem>();
      return a.flip ? x : GroupElement(LocallyDihedralElem{-a.angle, false});
    }
    case Family::LocallyQuaternion: {
      const auto& a = x.as<LocallyQuaternionElem>();
      return LocallyQuaternionElem{a.jpart ? with_half(a.angle) : -a.angle, a.jpart};
    }
    case Family::InfiniteDihedral: {
      const auto& a = x.as<InfiniteDihedralElem>();
      return a.flip ? x : GroupElement(InfiniteDihedralElem{checked::neg(a.shift), false});
    }
    case Family::InfiniteQuaternion: {
      const auto& a = x.as<InfiniteQuaternionElem>();
      return InfiniteQuaternionElem{a.jpart ? with_half(a.param) : toral_inv(a.param), a.jpart};
    }
    case Family::Product:
      return GroupElement::product(elem_inv(x.left()), elem_inv(x.right()));
  }
  return x;
}

Order elem_order(const GroupElement& x) {
  switch (x.family()) {
    case Family::Cyclic:
      return Order::finite(angle_order(x.as<CyclicElem>().angle));
    case Family::Dihedral: {
      const auto& a = x.as<DihedralElem>();
      return Order::finite(a.flip ? 2 : angle_order(a.angle));
    }
    case Family::Dicyclic: {
      const auto& a = x.as<DicyclicElem>();
      return Order::finite(a.jpart ? 4 : angle_order(a.angle));
    }
    case Family::LocallyDihedral: {
      const auto& a = x.as<LocallyDihedralElem>();
      return Order::finite(a.flip ? 2 : angle_order(a.angle.angle()));
    }
    case Family::LocallyQuaternion: {
      const auto& a = x.as<LocallyQuaternionElem>();
      return Order::finite(a.jpart ? 4 : angle_order(a.angle.angle()));
    }
    case Family::InfiniteDihedral: {
      const auto& a = x.as<InfiniteDihedralElem>();
      if (a.flip) return Order::finite(2);
      return a.shift == 0 ? Order::finite(1) : Order::infinite();
    }
    case Family::InfiniteQuaternion: {
      const auto& a = x.as<InfiniteQuaternionElem>();
      return a.jpart ? Order::finite(4) : toral_order(a.param);
    }
    case Family::Product: {
      const Order l = elem_order(x.left()), r = elem_order(x.right());
      if (l.is_infinite() || r.is_infinite()) return Order::infinite();
      return Order::finite(checked::lcm(l.value(), r.value()));
    }
  }
  return Order::infinite();
}

GroupElement identity_like(const GroupElement& x) {
  switch (x.family()) {
    case Family::Cyclic: return CyclicElem{};
    case Family::Dihedral: return DihedralElem{};
    case Family::Dicyclic: return DicyclicElem{};
    case Family::LocallyDihedral: return LocallyDihedralElem{};
    case Family::LocallyQuaternion: return LocallyQuaternionElem{};
    case Family::InfiniteDihedral: return InfiniteDihedralElem{};
    case Family::InfiniteQuaternion:
      return InfiniteQuaternionElem{ToralParam::identity(x.as<InfiniteQuaternionElem>().param.rank())};
    case Family::Product:
      return GroupElement::product(identity_like(x.left()), identity_like(x.right()));
  }
  return x;
}

bool is_identity(const GroupElement& x) { return x == identity_like(x); }

GroupElement elem_pow(const GroupElement& x, std::int64_t k) {
  GroupElement result = identity_like(x);
  GroupElement base = k < 0 ? elem_inv(x) : x;
  if (k < 0) k = checked::neg(k);
  while (k > 0) {
    if (k & 1) result = elem_mul(result, base);
    k >>= 1;
    if (k > 0) base = elem_mul(base, base);
  }
  return result;
}

std::string elem_label(const GroupElement& x) {
  const auto angle_label = [](const RationalAngle& a, bool coset, const char* suffix) {
    std::string s = "c(" + a.to_string() + ")";
    if (coset) s += suffix;
    return s;
  };
  switch (x.family()) {
    case Family::Cyclic:
      return angle_label(x.as<CyclicElem>().angle, false, "");
    case Family::Dihedral: {
      const auto& a = x.as<DihedralElem>();
      return angle_label(a.angle, a.flip, "*s");
    }
    case Family::Dicyclic: {
      const auto& a = x.as<DicyclicElem>();
      return angle_label(a.angle, a.jpart, "*x");
    }
    case Family::LocallyDihedral: {
      const auto& a = x.as<LocallyDihedralElem>();
      return angle_label(a.angle.angle(), a.flip, "*s");
    }
    case Family::LocallyQuaternion: {
      const auto& a = x.as<LocallyQuaternionElem>();
      return angle_label(a.angle.angle(), a.jpart, "*x");
    }
    case Family::InfiniteDihedral: {
      const auto& a = x.as<InfiniteDihedralElem>();
      return "r(" + std::to_string(a.shift) + ")" + (a.flip ? "*t" : "");
    }
    case Family::InfiniteQuaternion: {
      const auto& a = x.as<InfiniteQuaternionElem>();
      return "x(" + a.param.to_string() + ")" + (a.jpart ? "*j" : "");
    }
    case Family::Product:
      return "(" + elem_label(x.left()) + "," + elem_label(x.right()) + ")";
  }
  return "?";
}

}  // namespace hiergraph
