#pragma once

// Graded free modules of finite rank per degree, their tensor squares and
// linear maps given by basis images.
//
// Labels are interned as LabelId in degree order, so the labels of degree
// <= d always form the prefix [0, basis.end_of_degree(d)).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfcheck/coeff.hpp"

namespace hopf {

using LabelId = std::uint32_t;
using LabelPair = std::pair<LabelId, LabelId>;

class GradedBasis {
 public:
  /// labels_by_degree[d] lists the labels of degree d; labels must be unique.
  explicit GradedBasis(std::vector<std::vector<std::string>> labels_by_degree);

  int max_degree() const { return static_cast<int>(offsets_.size()) - 2; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank(int degree) const;

  const std::string& label(LabelId id) const { return labels_.at(id); }
  int degree(LabelId id) const { return degrees_.at(id); }
  std::optional<LabelId> find(std::string_view label) const;
  /// Throws StructuralError for unknown labels.
  LabelId at(std::string_view label) const;

  /// Ids of the degree-d labels (empty outside [0, max_degree]).
  std::vector<LabelId> in_degree(int d) const;
  /// One past the last id of degree <= d.
  LabelId end_of_degree(int d) const;
  /// Ids of all labels with degree <= d.
  std::vector<LabelId> up_to_degree(int d) const;

  const std::vector<std::vector<std::string>>& labels_by_degree() const { return by_degree_; }

 private:
  std::vector<std::vector<std::string>> by_degree_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<LabelId> offsets_;  // offsets_[d] = first id of degree d
  std::unordered_map<std::string, LabelId> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(std::vector<std::vector<std::string>> labels_by_degree);

/// Sparse linear combination of basis labels. No zero coefficient is stored.
class Element {
 public:
  using Terms = std::map<LabelId, RingElement>;

  Element(BasisPtr basis, RingSpec ring);
  static Element basis_vector(BasisPtr basis, RingSpec ring, LabelId id);
  static Element term(BasisPtr basis, const RingElement& c, LabelId id);

  const BasisPtr& basis() const { return basis_; }
  const RingSpec& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  RingElement coeff(LabelId id) const;

  /// this += c * label
  void add_term(LabelId id, const RingElement& c);
  /// this += c * x
  void add_scaled(const RingElement& c, const Element& x);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const RingElement& c, const Element& x);
  friend bool operator==(const Element& a, const Element& b);

  /// Degrees carrying a nonzero coefficient.
  std::set<int> degree_support() const;

  /// `2*ab - c`, `0` for the zero element.
  std::string to_string() const;

  void check_compatible(const Element& o) const;

 private:
  BasisPtr basis_;
  RingSpec ring_;
  Terms terms_;
};

/// Sparse element of D (x) D on the product basis.
class Tensor2Element {
 public:
  using Terms = std::map<LabelPair, RingElement>;

  Tensor2Element(BasisPtr basis, RingSpec ring);
  static Tensor2Element pure(BasisPtr basis, RingSpec ring, LabelId left, LabelId right);

  const BasisPtr& basis() const { return basis_; }
  const RingSpec& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  RingElement coeff(LabelId left, LabelId right) const;

  void add_term(LabelId left, LabelId right, const RingElement& c);
  void add_scaled(const RingElement& c, const Tensor2Element& t);

  Tensor2Element& operator+=(const Tensor2Element& o);
  Tensor2Element& operator-=(const Tensor2Element& o);
  Tensor2Element operator-() const;
  friend Tensor2Element operator+(Tensor2Element a, const Tensor2Element& b) { return a += b; }
  friend Tensor2Element operator-(Tensor2Element a, const Tensor2Element& b) { return a -= b; }
  friend Tensor2Element operator*(const RingElement& c, const Tensor2Element& t);
  friend bool operator==(const Tensor2Element& a, const Tensor2Element& b);

  /// `a|b + 2*c|1`
  std::string to_string() const;

  void check_compatible(const Tensor2Element& o) const;

 private:
  BasisPtr basis_;
  RingSpec ring_;
  Terms terms_;
};

/// x (x) y
Tensor2Element tensor_of(const Element& x, const Element& y);

/// Set of (deg l1, deg l2) over the nonzero keys of t.
std::set<std::pair<int, int>> bidegree_support(const Tensor2Element& t);

/// Endomorphism of the graded module, stored as one image per basis label.
class GradedMap {
 public:
  /// `filtered` asserts that the image of a degree-d label lives in degrees <= d;
  /// the assertion is checked and a violation throws StructuralError.
  GradedMap(BasisPtr basis, RingSpec ring, std::vector<Element> images, bool filtered = false);

  static GradedMap identity(BasisPtr basis, RingSpec ring);
  static GradedMap zero(BasisPtr basis, RingSpec ring);

  const BasisPtr& basis() const { return basis_; }
  const RingSpec& ring() const { return ring_; }
  bool filtered() const { return filtered_; }
  const Element& image(LabelId id) const { return images_.at(id); }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& x) const;
  Element operator()(const Element& x) const { return apply(x); }

  /// (this o g)(x) = this(g(x))
  GradedMap compose(const GradedMap& g) const;
  /// f^k with f^0 = id; StructuralError for k < 0.
  GradedMap power(int k) const;

  GradedMap& operator+=(const GradedMap& o);
  GradedMap& operator-=(const GradedMap& o);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
  friend GradedMap operator*(const RingElement& c, const GradedMap& f);
  friend bool operator==(const GradedMap& a, const GradedMap& b);

  void check_compatible(const GradedMap& o) const;

 private:
  BasisPtr basis_;
  RingSpec ring_;
  std::vector<Element> images_;
  bool filtered_;
};

/// (f (x) g)(t) without materialising f (x) g.
Tensor2Element apply_tensor(const GradedMap& f, const GradedMap& g, const Tensor2Element& t);

/// Endomorphism of D (x) D stored as one image per label pair.
class Tensor2Map {
 public:
  Tensor2Map(BasisPtr basis, RingSpec ring, std::vector<Tensor2Element> images);

  static Tensor2Map identity(BasisPtr basis, RingSpec ring);
  static Tensor2Map zero(BasisPtr basis, RingSpec ring);

  const BasisPtr& basis() const { return basis_; }
  const RingSpec& ring() const { return ring_; }
  const Tensor2Element& image(LabelId left, LabelId right) const;

  Tensor2Element apply(const Tensor2Element& t) const;
  Tensor2Map compose(const Tensor2Map& g) const;
  Tensor2Map power(int k) const;

  Tensor2Map& operator+=(const Tensor2Map& o);
  Tensor2Map& operator-=(const Tensor2Map& o);
  friend Tensor2Map operator+(Tensor2Map a, const Tensor2Map& b) { return a += b; }
  friend Tensor2Map operator-(Tensor2Map a, const Tensor2Map& b) { return a -= b; }
  friend Tensor2Map operator*(const RingElement& c, const Tensor2Map& f);
  friend bool operator==(const Tensor2Map& a, const Tensor2Map& b);

  /// First label pair whose images differ, if any.
  friend std::optional<LabelPair> first_difference(const Tensor2Map& a, const Tensor2Map& b);

  void check_compatible(const Tensor2Map& o) const;

 private:
  std::size_t slot(LabelId left, LabelId right) const { return std::size_t(left) * n_ + right; }

  BasisPtr basis_;
  RingSpec ring_;
  std::size_t n_;
  std::vector<Tensor2Element> images_;
};

/// f (x) g as a Tensor2Map.
Tensor2Map tensor_map(const GradedMap& f, const GradedMap& g);

/// Linear map D -> D (x) D by basis images (a reduced coproduct, say).
class Tensor2ValuedMap {
 public:
  Tensor2ValuedMap(BasisPtr basis, RingSpec ring, std::vector<Tensor2Element> images);

  const BasisPtr& basis() const { return basis_; }
  const RingSpec& ring() const { return ring_; }
  const Tensor2Element& image(LabelId id) const { return images_.at(id); }
  const std::vector<Tensor2Element>& images() const { return images_; }
  Tensor2Element apply(const Element& x) const;

 private:
  BasisPtr basis_;
  RingSpec ring_;
  std::vector<Tensor2Element> images_;
};

/// Result of exact Gaussian elimination on a list of column vectors.
struct KernelResult {
  std::vector<Element> kernel;  // spanning list of the null space
  std::size_t rank = 0;
  std::size_t dimension = 0;    // number of columns
};

/// Kernel of f restricted to the degree-d component. Field rings only.
KernelResult kernel_basis(const GradedMap& f, int degree);
/// Kernel of a D -> D (x) D map restricted to the span of `domain`.
KernelResult kernel_basis(const Tensor2ValuedMap& f, std::span<const LabelId> domain);

}  // namespace hopf
