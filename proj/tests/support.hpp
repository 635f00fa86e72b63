#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <ostream>
#include <map>
#include <string>
#include <vector>

#include "hopfcheck/hopfcheck.hpp"

namespace hopf {

inline void PrintTo(const Element& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const Tensor2Element& t, std::ostream* os) { *os << t.to_string(); }

}  // namespace hopf

namespace support {

// Label-wise equality of two presentations with equal label lists; their
// bases are distinct objects, so elements are compared through text.
inline ::testing::AssertionResult same_structure(const hopf::HopfPresentation& a, const hopf::HopfPresentation& b) {
  using namespace hopf;
  if (a.basis()->labels_by_degree() != b.basis()->labels_by_degree())
    return ::testing::AssertionFailure() << "label lists differ";
  const auto& basis = *a.basis();
  for (LabelId i = 0; i < basis.size(); ++i) {
    if (a.coproduct(i).to_string() != b.coproduct(i).to_string())
      return ::testing::AssertionFailure() << "coproduct of " << basis.label(i);
    if (a.antipode().image(i).to_string() != b.antipode().image(i).to_string())
      return ::testing::AssertionFailure() << "antipode of " << basis.label(i);
    for (LabelId j = 0; j < basis.size(); ++j) {
      if (a.product_in_range(i, j) != b.product_in_range(i, j))
        return ::testing::AssertionFailure() << "range of " << basis.label(i) << " * " << basis.label(j);
      if (a.product_in_range(i, j) && a.product(i, j).to_string() != b.product(i, j).to_string())
        return ::testing::AssertionFailure() << "product " << basis.label(i) << " * " << basis.label(j);
    }
  }
  return ::testing::AssertionSuccess();
}

struct Tables {
  std::map<hopf::LabelPair, hopf::Element> products;
  std::vector<hopf::Tensor2Element> coproducts;
  std::optional<std::vector<hopf::Element>> antipode;
};

// Table copy of h with every in-range product; `edit` may alter the tables
// before the copy is built.
inline hopf::HopfPtr table_copy(const hopf::HopfPresentation& h, const std::function<void(Tables&)>& edit = {},
                                std::string name = "copy") {
  using namespace hopf;
  const auto& b = *h.basis();
  Tables t;
  for (LabelId i = 0; i < b.size(); ++i) {
    t.coproducts.push_back(h.coproduct(i));
    for (LabelId j = 0; j < b.size(); ++j)
      if (h.product_in_range(i, j)) t.products.emplace(LabelPair{i, j}, h.product(i, j));
  }
  t.antipode = h.explicit_antipode();
  if (edit) edit(t);
  HopfPresentation::Parts p;
  p.name = std::move(name);
  p.basis = h.basis();
  p.ring = h.ring();
  p.rule = std::make_shared<TableRule>(h.basis(), h.ring(), std::move(t.products), std::move(t.coproducts));
  p.unit = h.unit_label();
  for (LabelId id : b.in_degree(0)) p.counit.push_back(h.counit(id));
  p.complete = h.complete();
  p.antipode = std::move(t.antipode);
  return std::make_shared<HopfPresentation>(std::move(p));
}

inline hopf::Element parse(const hopf::HopfPresentation& h, std::string_view text) {
  return hopf::parse_element(text, h.basis(), h.ring());
}

inline hopf::Tensor2Element parse2(const hopf::HopfPresentation& h, std::string_view text) {
  return hopf::parse_tensor(text, h.basis(), h.ring());
}

}  // namespace support
