#include "hiergraph/group_view.hpp"

#include <algorithm>
#include <deque>

#include "hiergraph/error.hpp"

namespace hiergraph {

FiniteGroupView::FiniteGroupView(std::string name, std::vector<GroupElement> elements, bool closed)
    : name_(std::move(name)), elements_(std::move(elements)), closed_(closed) {
  if (elements_.empty()) throw Error(ErrorCode::BadParam, "empty view " + name_);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!same_family(elements_[i], elements_[0]))
      throw Error(ErrorCode::BadParam, "view " + name_ + " mixes families");
    if (!index_.emplace(elements_[i], i).second)
      throw Error(ErrorCode::BadParam, "duplicate element " + elem_label(elements_[i]));
  }
  auto it = index_.find(identity_like(elements_[0]));
  if (it == index_.end()) throw Error(ErrorCode::BadParam, "view " + name_ + " lacks the identity");
  identity_ = it->second;
}

std::optional<std::size_t> FiniteGroupView::index_of(const GroupElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FiniteGroupView::labels() const {
  std::vector<std::string> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(elem_label(e));
  return out;
}

std::size_t FiniteGroupView::multiply(std::size_t i, std::size_t j) const {
  const GroupElement p = elem_mul(element(i), element(j));
  auto idx = index_of(p);
  if (!idx) throw Error(ErrorCode::NotClosed, "product " + elem_label(p) + " is outside " + name_);
  return *idx;
}

void FiniteGroupView::require_closed(const char* operation) const {
  if (!closed_)
    throw Error(ErrorCode::WindowNotClosed,
                std::string(operation) + " requires a subgroup, but " + name_ + " is a window");
}

ElementSet subgroup_closure(const FiniteGroupView& view, const ElementSet& gens) {
  view.require_closed("subgroup_closure");
  std::vector<bool> seen(view.size(), false);
  std::deque<std::size_t> work{view.identity_index()};
  seen[view.identity_index()] = true;
  // In a finite group the semigroup generated by gens is already a group.
  while (!work.empty()) {
    const std::size_t a = work.front();
    work.pop_front();
    for (std::size_t g : gens) {
      const std::size_t b = view.multiply(a, g);
      if (!seen[b]) {
        seen[b] = true;
        work.push_back(b);
      }
    }
  }
  ElementSet out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

bool is_cyclic_subgroup(const FiniteGroupView& view, const ElementSet& s) {
  if (s.empty()) throw Error(ErrorCode::NotClosed, "empty set");
  const auto contains = [&s](std::size_t i) { return std::binary_search(s.begin(), s.end(), i); };
  if (!contains(view.identity_index()))
    throw Error(ErrorCode::NotClosed, "set lacks the identity");
  for (std::size_t k = 0; k < s.size(); ++k) {
    const GroupElement& a = view.element(s[k]);
    const GroupElement& b = view.element(s[(k + 1) % s.size()]);
    for (const GroupElement& p : {elem_mul(a, a), elem_mul(a, b), elem_inv(a)}) {
      auto idx = view.index_of(p);
      if (!idx || !contains(*idx))
        throw Error(ErrorCode::NotClosed, "set is not closed at " + elem_label(p));
    }
  }
  const auto n = static_cast<std::int64_t>(s.size());
  return std::any_of(s.begin(), s.end(), [&](std::size_t i) {
    const Order o = elem_order(view.element(i));
    return o.is_finite() && o.value() == n;
  });
}

std::optional<std::string> check_group_axioms(const FiniteGroupView& view,
                                              std::size_t triple_stride) {
  const std::size_t n = view.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement& x = view.element(i);
    if (!view.index_of(elem_inv(x))) return "inverse of " + elem_label(x) + " missing";
    if (elem_mul(x, elem_inv(x)) != view.element(view.identity_index()))
      return "x * inv(x) != e for " + elem_label(x);
    for (std::size_t j = 0; j < n; ++j)
      if (!view.index_of(elem_mul(x, view.element(j))))
        return "product " + elem_label(x) + " * " + elem_label(view.element(j)) + " missing";
  }
  const std::size_t stride = std::max<std::size_t>(1, triple_stride);
  for (std::size_t i = 0; i < n; i += stride)
    for (std::size_t j = 0; j < n; j += stride)
      for (std::size_t k = 0; k < n; k += stride) {
        const auto &a = view.element(i), &b = view.element(j), &c = view.element(k);
        if (elem_mul(elem_mul(a, b), c) != elem_mul(a, elem_mul(b, c)))
          return "associativity fails at " + elem_label(a) + ", " + elem_label(b) + ", " +
                 elem_label(c);
      }
  return std::nullopt;
}

}  // namespace hiergraph
