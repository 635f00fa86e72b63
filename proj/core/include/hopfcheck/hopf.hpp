#pragma once

// Graded bialgebras and Hopf algebras presented by structure constants up to
// a truncation degree N.
//
// Truncation is exact: the coproduct preserves total degree and the antipode
// recursion in degree n only multiplies pieces of total degree n, so every
// result on inputs of degree <= N is the true value. Asking for a product
// whose degrees sum past N raises TruncationError instead of dropping terms.

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcheck/coeff.hpp"
#include "hopfcheck/gmod.hpp"
#include "hopfcheck/report.hpp"

namespace hopf {

/// Source of structure constants for a presentation. Implementations are
/// pure functions of their construction arguments; the presentation memoises.
class StructureRule {
 public:
  virtual ~StructureRule() = default;
  /// Product of two basis labels. Only called for pairs the presentation
  /// considers in range.
  virtual Element product(LabelId left, LabelId right) const = 0;
  virtual Tensor2Element coproduct(LabelId id) const = 0;
};

/// Extensional structure constants. Missing product entries are zero.
class TableRule final : public StructureRule {
 public:
  TableRule(BasisPtr basis, RingSpec ring, std::map<LabelPair, Element> products,
            std::vector<Tensor2Element> coproducts);
  Element product(LabelId left, LabelId right) const override;
  Tensor2Element coproduct(LabelId id) const override;

 private:
  BasisPtr basis_;
  RingSpec ring_;
  std::map<LabelPair, Element> products_;
  std::vector<Tensor2Element> coproducts_;
};

/// A generator of a free graded bialgebra. `coproduct` is a formal sum of
/// label pairs such as `c|1 + a|b + 1|c`; empty means primitive.
struct FreeGenerator {
  std::string label;
  int degree = 1;
  std::string coproduct;
};

class HopfPresentation {
 public:
  struct Parts {
    std::string name;
    BasisPtr basis;
    RingSpec ring = RingSpec::integers();
    std::shared_ptr<const StructureRule> rule;
    LabelId unit = 0;
    /// epsilon on the degree-0 labels, in id order; zero on positive degrees.
    std::vector<RingElement> counit;
    /// Finite-dimensional presentation: every product is materialised and
    /// nothing is truncated.
    bool complete = false;
    /// Supplied antipode (required for non-connected presentations).
    std::optional<std::vector<Element>> antipode;
    /// Intensional description, kept for export.
    std::optional<std::vector<FreeGenerator>> generators;
  };

  explicit HopfPresentation(Parts parts);
  HopfPresentation(const HopfPresentation&) = delete;
  HopfPresentation& operator=(const HopfPresentation&) = delete;

  const std::string& name() const { return parts_.name; }
  const BasisPtr& basis() const { return parts_.basis; }
  const RingSpec& ring() const { return parts_.ring; }
  int max_degree() const { return parts_.basis->max_degree(); }
  bool complete() const { return parts_.complete; }
  LabelId unit_label() const { return parts_.unit; }
  const std::optional<std::vector<FreeGenerator>>& generators() const { return parts_.generators; }
  const std::optional<std::vector<Element>>& explicit_antipode() const { return parts_.antipode; }

  Element zero() const { return Element(basis(), ring()); }
  Element unit() const { return Element::basis_vector(basis(), ring(), unit_label()); }
  Element vec(LabelId id) const { return Element::basis_vector(basis(), ring(), id); }
  /// Basis vector by label; StructuralError for unknown labels.
  Element vec(std::string_view label) const { return vec(basis()->at(label)); }
  RingElement scalar(long n) const { return RingElement::from_int(n, ring()); }

  /// False when the pair lies past the truncation degree.
  bool product_in_range(LabelId left, LabelId right) const;
  const Element& product(LabelId left, LabelId right) const;
  Element product(const Element& x, const Element& y) const;
  const Tensor2Element& coproduct(LabelId id) const;
  Tensor2Element coproduct(const Element& x) const;
  RingElement counit(LabelId id) const;
  RingElement counit(const Element& x) const;
  /// Product in the algebra H (x) H: (a|b)(c|d) = ac|bd.
  Tensor2Element product(const Tensor2Element& s, const Tensor2Element& t) const;

  /// The antipode: the supplied table when present, otherwise the left
  /// recursion S(x) = -x - sum S(x')x'' over the reduced coproduct.
  /// Memoised. UnsupportedError for non-connected presentations without a table.
  const GradedMap& antipode() const;

 private:
  Parts parts_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, Element> product_cache_;
  mutable std::unordered_map<LabelId, Tensor2Element> coproduct_cache_;
  mutable std::mutex antipode_mutex_;
  mutable std::optional<GradedMap> antipode_;
};

using HopfPtr = std::shared_ptr<const HopfPresentation>;

struct Connectivity {
  bool connected = false;
  std::size_t degree0_rank = 0;
  bool counit_of_unit_is_one = false;
  /// The coalgebra unity (epsilon restricted to degree 0)^-1(1) equals the
  /// algebra unit. Only meaningful when connected.
  bool unit_agreement = false;
  explicit operator bool() const { return connected; }
};

Connectivity is_connected(const HopfPresentation& h);

/// Left-recursion antipode (same as h.antipode() for connected h).
GradedMap antipode(const HopfPresentation& h);
/// Independent right recursion S(x) = -x - sum x' S(x''), for cross-checking.
GradedMap antipode_oracle(const HopfPresentation& h);
/// S^k; S^0 = id.
GradedMap antipode_power(const HopfPresentation& h, int k);

/// Grading of both structure maps, (co)associativity, (co)unit axioms,
/// multiplicativity of Delta and epsilon, on labels of degree <= up_to
/// (pairs and triples with total degree <= up_to unless h is complete).
VerificationReport verify_bialgebra(const HopfPresentation& h, int up_to);

/// m o (S (x) id) o Delta = u o eps = m o (id (x) S) o Delta on every label of
/// degree <= up_to.
VerificationReport verify_antipode_axioms(const HopfPresentation& h, const GradedMap& s, int up_to);

/// Multiplication map applied to a tensor: m(a|b) = ab.
Element multiply(const HopfPresentation& h, const Tensor2Element& t);

}  // namespace hopf
