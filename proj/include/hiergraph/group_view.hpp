#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hiergraph/element.hpp"

namespace hiergraph {

/// Sorted list of element indices into a FiniteGroupView.
using ElementSet = std::vector<std::size_t>;

/// A finite list of group elements with the family's multiplication.
///
/// A view is either a truncation (a genuine finite subgroup, `closed()`) or
/// a window (a finite vertex set inside an infinite group, not closed under
/// multiplication). Operations that need subgroup structure reject windows
/// with WindowNotClosed.
class FiniteGroupView {
 public:
  /// Throws BadParam if elements are not pairwise distinct, mix families,
  /// or do not contain the identity.
  FiniteGroupView(std::string name, std::vector<GroupElement> elements, bool closed);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool closed() const noexcept { return closed_; }

  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  std::size_t identity_index() const noexcept { return identity_; }
  std::optional<std::size_t> index_of(const GroupElement& x) const;
  std::vector<std::string> labels() const;

  /// Index of element(i) * element(j). Throws NotClosed if the product falls
  /// outside the view.
  std::size_t multiply(std::size_t i, std::size_t j) const;

  /// Throws WindowNotClosed unless the view is a truncation.
  void require_closed(const char* operation) const;

 private:
  std::string name_;
  std::vector<GroupElement> elements_;
  std::map<GroupElement, std::size_t> index_;
  bool closed_;
  std::size_t identity_ = 0;
};

/// Smallest subset of the view containing gens and the identity that is
/// closed under multiplication (worklist saturation).
ElementSet subgroup_closure(const FiniteGroupView& view, const ElementSet& gens);

/// True iff some element of s has order |s|. Throws NotClosed if s fails a
/// closure spot-check.
bool is_cyclic_subgroup(const FiniteGroupView& view, const ElementSet& s);

/// Exhaustive check that the view is closed, contains inverses, and that
/// multiplication is associative on every triple (or on `triple_stride`
/// spaced samples). Returns a description of the first failure.
std::optional<std::string> check_group_axioms(const FiniteGroupView& view,
                                              std::size_t triple_stride = 1);

}  // namespace hiergraph
