#include "hopfcheck/gmod.hpp"

#include <sstream>

#include "hopfcheck/errors.hpp"

namespace hopf {

namespace {

// Accumulate c into terms[key], erasing the entry when it cancels.
template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const RingElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void append_term(std::ostringstream& os, bool first, const RingElement& c, const std::string& key) {
  std::string cs = c.to_string();
  bool neg = !cs.empty() && cs.front() == '-';
  if (neg) cs.erase(0, 1);
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  if (cs != "1") os << cs << "*";
  os << key;
}

}  // namespace

// ------------------------------------------------------------- GradedBasis

GradedBasis::GradedBasis(std::vector<std::vector<std::string>> labels_by_degree)
    : by_degree_(std::move(labels_by_degree)) {
  if (by_degree_.empty()) by_degree_.emplace_back();
  offsets_.push_back(0);
  for (std::size_t d = 0; d < by_degree_.size(); ++d) {
    for (const auto& l : by_degree_[d]) {
      if (l.empty()) throw StructuralError("empty basis label");
      auto id = static_cast<LabelId>(labels_.size());
      if (!index_.emplace(l, id).second) throw StructuralError("duplicate basis label '" + l + "'");
      labels_.push_back(l);
      degrees_.push_back(static_cast<int>(d));
    }
    offsets_.push_back(static_cast<LabelId>(labels_.size()));
  }
}

std::size_t GradedBasis::rank(int degree) const {
  if (degree < 0 || degree > max_degree()) return 0;
  return offsets_[degree + 1] - offsets_[degree];
}

std::optional<LabelId> GradedBasis::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabelId GradedBasis::at(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw StructuralError("unknown basis label '" + std::string(label) + "'");
}

std::vector<LabelId> GradedBasis::in_degree(int d) const {
  std::vector<LabelId> out;
  if (d < 0 || d > max_degree()) return out;
  for (LabelId i = offsets_[d]; i < offsets_[d + 1]; ++i) out.push_back(i);
  return out;
}

LabelId GradedBasis::end_of_degree(int d) const {
  if (d < 0) return 0;
  if (d > max_degree()) return static_cast<LabelId>(labels_.size());
  return offsets_[d + 1];
}

std::vector<LabelId> GradedBasis::up_to_degree(int d) const {
  std::vector<LabelId> out;
  for (LabelId i = 0; i < end_of_degree(d); ++i) out.push_back(i);
  return out;
}

BasisPtr make_basis(std::vector<std::vector<std::string>> labels_by_degree) {
  return std::make_shared<const GradedBasis>(std::move(labels_by_degree));
}

// ----------------------------------------------------------------- Element

Element::Element(BasisPtr basis, RingSpec ring) : basis_(std::move(basis)), ring_(std::move(ring)) {
  if (!basis_) throw StructuralError("element without basis");
}

Element Element::basis_vector(BasisPtr basis, RingSpec ring, LabelId id) {
  Element x(std::move(basis), ring);
  x.add_term(id, RingElement::one(ring));
  return x;
}

Element Element::term(BasisPtr basis, const RingElement& c, LabelId id) {
  Element x(std::move(basis), c.ring());
  x.add_term(id, c);
  return x;
}

void Element::check_compatible(const Element& o) const {
  if (basis_ != o.basis_) throw StructuralError("basis mismatch between elements");
  if (!(ring_ == o.ring_)) throw StructuralError("ring mismatch between elements");
}

RingElement Element::coeff(LabelId id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void Element::add_term(LabelId id, const RingElement& c) {
  if (id >= basis_->size()) throw StructuralError("label id outside basis");
  if (!(c.ring() == ring_)) throw StructuralError("coefficient from a different ring");
  accumulate(terms_, id, c);
}

void Element::add_scaled(const RingElement& c, const Element& x) {
  check_compatible(x);
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [id, v] : x.terms_) accumulate(terms_, id, unit ? v : c * v);
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [id, v] : o.terms_) accumulate(terms_, id, v);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_compatible(o);
  for (const auto& [id, v] : o.terms_) accumulate(terms_, id, -v);
  return *this;
}

Element Element::operator-() const {
  Element r(basis_, ring_);
  for (const auto& [id, v] : terms_) r.terms_.emplace(id, -v);
  return r;
}

Element operator*(const RingElement& c, const Element& x) {
  Element r(x.basis_, x.ring_);
  r.add_scaled(c, x);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

std::set<int> Element::degree_support() const {
  std::set<int> out;
  for (const auto& [id, v] : terms_) out.insert(basis_->degree(id));
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, v] : terms_) {
    append_term(os, first, v, basis_->label(id));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------- Tensor2Element

Tensor2Element::Tensor2Element(BasisPtr basis, RingSpec ring)
    : basis_(std::move(basis)), ring_(std::move(ring)) {
  if (!basis_) throw StructuralError("tensor without basis");
}

Tensor2Element Tensor2Element::pure(BasisPtr basis, RingSpec ring, LabelId left, LabelId right) {
  Tensor2Element t(std::move(basis), ring);
  t.add_term(left, right, RingElement::one(ring));
  return t;
}

void Tensor2Element::check_compatible(const Tensor2Element& o) const {
  if (basis_ != o.basis_) throw StructuralError("basis mismatch between tensors");
  if (!(ring_ == o.ring_)) throw StructuralError("ring mismatch between tensors");
}

RingElement Tensor2Element::coeff(LabelId left, LabelId right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void Tensor2Element::add_term(LabelId left, LabelId right, const RingElement& c) {
  if (left >= basis_->size() || right >= basis_->size())
    throw StructuralError("label id outside basis");
  if (!(c.ring() == ring_)) throw StructuralError("coefficient from a different ring");
  accumulate(terms_, LabelPair{left, right}, c);
}

void Tensor2Element::add_scaled(const RingElement& c, const Tensor2Element& t) {
  check_compatible(t);
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [k, v] : t.terms_) accumulate(terms_, k, unit ? v : c * v);
}

Tensor2Element& Tensor2Element::operator+=(const Tensor2Element& o) {
  check_compatible(o);
  for (const auto& [k, v] : o.terms_) accumulate(terms_, k, v);
  return *this;
}

Tensor2Element& Tensor2Element::operator-=(const Tensor2Element& o) {
  check_compatible(o);
  for (const auto& [k, v] : o.terms_) accumulate(terms_, k, -v);
  return *this;
}

Tensor2Element Tensor2Element::operator-() const {
  Tensor2Element r(basis_, ring_);
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
  return r;
}

Tensor2Element operator*(const RingElement& c, const Tensor2Element& t) {
  Tensor2Element r(t.basis_, t.ring_);
  r.add_scaled(c, t);
  return r;
}

bool operator==(const Tensor2Element& a, const Tensor2Element& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

std::string Tensor2Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    append_term(os, first, v, basis_->label(k.first) + "|" + basis_->label(k.second));
    first = false;
  }
  return os.str();
}

Tensor2Element tensor_of(const Element& x, const Element& y) {
  x.check_compatible(y);
  Tensor2Element t(x.basis(), x.ring());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) t.add_term(i, j, a * b);
  return t;
}

std::set<std::pair<int, int>> bidegree_support(const Tensor2Element& t) {
  std::set<std::pair<int, int>> out;
  for (const auto& [k, v] : t.terms()) out.emplace(t.basis()->degree(k.first), t.basis()->degree(k.second));
  return out;
}

// --------------------------------------------------------------- GradedMap

GradedMap::GradedMap(BasisPtr basis, RingSpec ring, std::vector<Element> images, bool filtered)
    : basis_(std::move(basis)), ring_(std::move(ring)), images_(std::move(images)), filtered_(filtered) {
  if (images_.size() != basis_->size()) throw StructuralError("map needs one image per basis label");
  for (LabelId id = 0; id < images_.size(); ++id) {
    const auto& img = images_[id];
    if (img.basis() != basis_ || !(img.ring() == ring_)) throw StructuralError("map image from another module");
    if (filtered_) {
      auto support = img.degree_support();
      if (!support.empty() && *support.rbegin() > basis_->degree(id))
        throw StructuralError("map flagged filtered raises the degree of '" + basis_->label(id) + "'");
    }
  }
}

GradedMap GradedMap::identity(BasisPtr basis, RingSpec ring) {
  std::vector<Element> images;
  images.reserve(basis->size());
  for (LabelId i = 0; i < basis->size(); ++i) images.push_back(Element::basis_vector(basis, ring, i));
  return GradedMap(basis, ring, std::move(images), true);
}

GradedMap GradedMap::zero(BasisPtr basis, RingSpec ring) {
  std::vector<Element> images(basis->size(), Element(basis, ring));
  return GradedMap(basis, ring, std::move(images), true);
}

void GradedMap::check_compatible(const GradedMap& o) const {
  if (basis_ != o.basis_ || !(ring_ == o.ring_)) throw StructuralError("maps on different modules");
}

Element GradedMap::apply(const Element& x) const {
  if (x.basis() != basis_ || !(x.ring() == ring_)) throw StructuralError("map applied to foreign element");
  Element r(basis_, ring_);
  for (const auto& [id, c] : x.terms()) r.add_scaled(c, images_[id]);
  return r;
}

GradedMap GradedMap::compose(const GradedMap& g) const {
  check_compatible(g);
  std::vector<Element> images;
  images.reserve(images_.size());
  for (const auto& img : g.images_) images.push_back(apply(img));
  return GradedMap(basis_, ring_, std::move(images), filtered_ && g.filtered_);
}

GradedMap GradedMap::power(int k) const {
  if (k < 0) throw StructuralError("negative power of a map");
  GradedMap result = identity(basis_, ring_);
  GradedMap base = *this;
  bool first = true;
  while (k) {
    if (k & 1) {
      result = first ? base : result.compose(base);
      first = false;
    }
    k >>= 1;
    if (k) base = base.compose(base);
  }
  return result;
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
  filtered_ = filtered_ && o.filtered_;
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= o.images_[i];
  filtered_ = filtered_ && o.filtered_;
  return *this;
}

GradedMap operator*(const RingElement& c, const GradedMap& f) {
  std::vector<Element> images;
  images.reserve(f.images_.size());
  for (const auto& img : f.images_) images.push_back(c * img);
  return GradedMap(f.basis_, f.ring_, std::move(images), f.filtered_);
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  a.check_compatible(b);
  return a.images_ == b.images_;
}

Tensor2Element apply_tensor(const GradedMap& f, const GradedMap& g, const Tensor2Element& t) {
  f.check_compatible(g);
  if (t.basis() != f.basis() || !(t.ring() == f.ring())) throw StructuralError("tensor from another module");
  Tensor2Element r(f.basis(), f.ring());
  for (const auto& [k, c] : t.terms()) {
    const auto& fx = f.image(k.first);
    const auto& gy = g.image(k.second);
    for (const auto& [i, a] : fx.terms()) {
      RingElement ca = c * a;
      for (const auto& [j, b] : gy.terms()) r.add_term(i, j, ca * b);
    }
  }
  return r;
}

// -------------------------------------------------------------- Tensor2Map

Tensor2Map::Tensor2Map(BasisPtr basis, RingSpec ring, std::vector<Tensor2Element> images)
    : basis_(std::move(basis)), ring_(std::move(ring)), n_(basis_->size()), images_(std::move(images)) {
  if (images_.size() != n_ * n_) throw StructuralError("tensor map needs one image per label pair");
  for (const auto& img : images_)
    if (img.basis() != basis_ || !(img.ring() == ring_)) throw StructuralError("tensor map image from another module");
}

Tensor2Map Tensor2Map::identity(BasisPtr basis, RingSpec ring) {
  const std::size_t n = basis->size();
  std::vector<Tensor2Element> images;
  images.reserve(n * n);
  for (LabelId i = 0; i < n; ++i)
    for (LabelId j = 0; j < n; ++j) images.push_back(Tensor2Element::pure(basis, ring, i, j));
  return Tensor2Map(basis, ring, std::move(images));
}

Tensor2Map Tensor2Map::zero(BasisPtr basis, RingSpec ring) {
  const std::size_t n = basis->size();
  std::vector<Tensor2Element> images(n * n, Tensor2Element(basis, ring));
  return Tensor2Map(basis, ring, std::move(images));
}

void Tensor2Map::check_compatible(const Tensor2Map& o) const {
  if (basis_ != o.basis_ || !(ring_ == o.ring_)) throw StructuralError("tensor maps on different modules");
}

const Tensor2Element& Tensor2Map::image(LabelId left, LabelId right) const {
  return images_.at(slot(left, right));
}

Tensor2Element Tensor2Map::apply(const Tensor2Element& t) const {
  if (t.basis() != basis_ || !(t.ring() == ring_)) throw StructuralError("tensor map applied to foreign tensor");
  Tensor2Element r(basis_, ring_);
  for (const auto& [k, c] : t.terms()) r.add_scaled(c, images_[slot(k.first, k.second)]);
  return r;
}

Tensor2Map Tensor2Map::compose(const Tensor2Map& g) const {
  check_compatible(g);
  std::vector<Tensor2Element> images;
  images.reserve(images_.size());
  for (const auto& img : g.images_) images.push_back(apply(img));
  return Tensor2Map(basis_, ring_, std::move(images));
}

Tensor2Map Tensor2Map::power(int k) const {
  if (k < 0) throw StructuralError("negative power of a tensor map");
  Tensor2Map result = identity(basis_, ring_);
  for (int i = 0; i < k; ++i) result = i == 0 ? *this : compose(result);
  return result;
}

Tensor2Map& Tensor2Map::operator+=(const Tensor2Map& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
  return *this;
}

Tensor2Map& Tensor2Map::operator-=(const Tensor2Map& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= o.images_[i];
  return *this;
}

Tensor2Map operator*(const RingElement& c, const Tensor2Map& f) {
  std::vector<Tensor2Element> images;
  images.reserve(f.images_.size());
  for (const auto& img : f.images_) images.push_back(c * img);
  return Tensor2Map(f.basis_, f.ring_, std::move(images));
}

bool operator==(const Tensor2Map& a, const Tensor2Map& b) { return !first_difference(a, b).has_value(); }

std::optional<LabelPair> first_difference(const Tensor2Map& a, const Tensor2Map& b) {
  a.check_compatible(b);
  for (LabelId i = 0; i < a.n_; ++i)
    for (LabelId j = 0; j < a.n_; ++j)
      if (!(a.images_[a.slot(i, j)] == b.images_[b.slot(i, j)])) return LabelPair{i, j};
  return std::nullopt;
}

Tensor2Map tensor_map(const GradedMap& f, const GradedMap& g) {
  f.check_compatible(g);
  const auto& basis = f.basis();
  const std::size_t n = basis->size();
  std::vector<Tensor2Element> images;
  images.reserve(n * n);
  for (LabelId i = 0; i < n; ++i)
    for (LabelId j = 0; j < n; ++j) images.push_back(tensor_of(f.image(i), g.image(j)));
  return Tensor2Map(basis, f.ring(), std::move(images));
}

// -------------------------------------------------------- Tensor2ValuedMap

Tensor2ValuedMap::Tensor2ValuedMap(BasisPtr basis, RingSpec ring, std::vector<Tensor2Element> images)
    : basis_(std::move(basis)), ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != basis_->size()) throw StructuralError("map needs one image per basis label");
  for (const auto& img : images_)
    if (img.basis() != basis_ || !(img.ring() == ring_)) throw StructuralError("map image from another module");
}

Tensor2Element Tensor2ValuedMap::apply(const Element& x) const {
  if (x.basis() != basis_ || !(x.ring() == ring_)) throw StructuralError("map applied to foreign element");
  Tensor2Element r(basis_, ring_);
  for (const auto& [id, c] : x.terms()) r.add_scaled(c, images_[id]);
  return r;
}

}  // namespace hopf
