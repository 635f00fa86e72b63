#include <map>
#include <vector>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/gmod.hpp"

namespace hopf {

namespace {

// Row reduction of the columns of a matrix, each column kept as a sparse
// vector together with a tag recording which combination of the original
// columns it is. A column that reduces to zero contributes its tag to the
// kernel. The pivot of each stored vector is its leftmost nonzero key and is
// normalised to 1.
template <class Key>
KernelResult eliminate(const BasisPtr& basis, const RingSpec& ring,
                       const std::vector<std::pair<LabelId, std::map<Key, RingElement>>>& columns) {
  if (!ring.is_field())
    throw UnsupportedRingError("kernel computation needs a field; " + ring.to_string() + " is not one");

  struct Row {
    std::map<Key, RingElement> vec;
    Element tag;
  };
  std::map<Key, Row> pivots;
  KernelResult out;
  out.dimension = columns.size();

  for (const auto& [id, column] : columns) {
    std::map<Key, RingElement> vec = column;
    Element tag = Element::basis_vector(basis, ring, id);

    auto it = vec.begin();
    while (it != vec.end()) {
      auto piv = pivots.find(it->first);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const RingElement c = it->second;
      for (const auto& [k, v] : piv->second.vec) {
        auto [slot, inserted] = vec.try_emplace(k, -(c * v));
        if (!inserted) {
          slot->second -= c * v;
          if (slot->second.is_zero()) vec.erase(slot);
        }
      }
      tag.add_scaled(-c, piv->second.tag);
      // Every key of the pivot row is >= key, so nothing left of key changed.
      it = vec.upper_bound(key);
    }

    if (vec.empty()) {
      out.kernel.push_back(std::move(tag));
      continue;
    }
    const Key lead = vec.begin()->first;
    RingElement inv = vec.begin()->second.inverse();
    for (auto& [k, v] : vec) v *= inv;
    Element scaled_tag = inv * tag;
    pivots.emplace(lead, Row{std::move(vec), std::move(scaled_tag)});
    ++out.rank;
  }
  return out;
}

}  // namespace

KernelResult kernel_basis(const GradedMap& f, int degree) {
  std::vector<std::pair<LabelId, std::map<LabelId, RingElement>>> columns;
  for (LabelId id : f.basis()->in_degree(degree)) {
    const auto& t = f.image(id).terms();
    columns.emplace_back(id, std::map<LabelId, RingElement>(t.begin(), t.end()));
  }
  return eliminate(f.basis(), f.ring(), columns);
}

KernelResult kernel_basis(const Tensor2ValuedMap& f, std::span<const LabelId> domain) {
  std::vector<std::pair<LabelId, std::map<LabelPair, RingElement>>> columns;
  for (LabelId id : domain) {
    const auto& t = f.image(id).terms();
    columns.emplace_back(id, std::map<LabelPair, RingElement>(t.begin(), t.end()));
  }
  return eliminate(f.basis(), f.ring(), columns);
}

}  // namespace hopf
