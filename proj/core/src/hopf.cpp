#include "hopfcheck/hopf.hpp"

#include <array>
#include <map>

#include "hopfcheck/anchors.hpp"
#include "hopfcheck/errors.hpp"

namespace hopf {

namespace {

std::uint64_t pair_key(LabelId a, LabelId b) { return (std::uint64_t(a) << 32) | b; }

using Triple = std::array<LabelId, 3>;
using TripleTerms = std::map<Triple, RingElement>;

void accumulate(TripleTerms& t, const Triple& k, const RingElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string render(const GradedBasis& b, const TripleTerms& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*" + b.label(k[0]) + "|" + b.label(k[1]) + "|" + b.label(k[2]);
  }
  return s;
}

// Delta(x) - x|1 - 1|x + eps(x) 1|1, computed on a basis label.
Tensor2Element reduced_terms(const HopfPresentation& h, LabelId id) {
  Tensor2Element t = h.coproduct(id);
  const LabelId u = h.unit_label();
  const RingElement one = RingElement::one(h.ring());
  t.add_term(id, u, -one);
  t.add_term(u, id, -one);
  t.add_term(u, u, h.counit(id));
  return t;
}

// One step of either antipode recursion. `left` selects S(x) = -x - sum S(x')x''.
GradedMap recursive_antipode(const HopfPresentation& h, bool left) {
  const auto& basis = h.basis();
  std::vector<std::optional<Element>> s(basis->size());
  s[h.unit_label()] = h.unit();
  for (int n = 0; n <= basis->max_degree(); ++n) {
    for (LabelId id : basis->in_degree(n)) {
      if (id == h.unit_label()) continue;
      if (n == 0) throw UnsupportedError("antipode recursion needs a connected presentation");
      Element sx = -h.vec(id);
      const Tensor2Element reduced = reduced_terms(h, id);
      for (const auto& [k, c] : reduced.terms()) {
        const int d1 = basis->degree(k.first), d2 = basis->degree(k.second);
        if (d1 < 1 || d2 < 1 || d1 >= n || d2 >= n)
          throw ConstructionError("coproduct of '" + basis->label(id) +
                                  "' has a reduced term outside bidegrees (i, n-i), 0 < i < n");
        Element piece = left ? h.product(*s[k.first], h.vec(k.second)) : h.product(h.vec(k.first), *s[k.second]);
        sx.add_scaled(-c, piece);
      }
      s[id] = std::move(sx);
    }
  }
  std::vector<Element> images;
  images.reserve(s.size());
  for (auto& e : s) images.push_back(std::move(*e));
  return GradedMap(basis, h.ring(), std::move(images), true);
}

}  // namespace

// --------------------------------------------------------------- TableRule

TableRule::TableRule(BasisPtr basis, RingSpec ring, std::map<LabelPair, Element> products,
                     std::vector<Tensor2Element> coproducts)
    : basis_(std::move(basis)), ring_(std::move(ring)), products_(std::move(products)),
      coproducts_(std::move(coproducts)) {
  if (coproducts_.size() != basis_->size()) throw ConstructionError("coproduct table needs one entry per label");
}

Element TableRule::product(LabelId left, LabelId right) const {
  auto it = products_.find({left, right});
  return it == products_.end() ? Element(basis_, ring_) : it->second;
}

Tensor2Element TableRule::coproduct(LabelId id) const { return coproducts_.at(id); }

// -------------------------------------------------------- HopfPresentation

HopfPresentation::HopfPresentation(Parts parts) : parts_(std::move(parts)) {
  if (!parts_.basis || !parts_.rule) throw ConstructionError("presentation needs a basis and a structure rule");
  const auto& b = *parts_.basis;
  if (parts_.unit >= b.size() || b.degree(parts_.unit) != 0)
    throw ConstructionError("unit label must be a degree-0 label");
  if (parts_.counit.size() != b.rank(0)) throw ConstructionError("counit needs one value per degree-0 label");
  for (const auto& c : parts_.counit)
    if (!(c.ring() == parts_.ring)) throw ConstructionError("counit value from another ring");
  if (parts_.antipode) {
    if (parts_.antipode->size() != b.size()) throw ConstructionError("antipode table needs one image per label");
    for (const auto& img : *parts_.antipode)
      if (img.basis() != parts_.basis || !(img.ring() == parts_.ring))
        throw ConstructionError("antipode image from another module");
  }
}

bool HopfPresentation::product_in_range(LabelId left, LabelId right) const {
  if (parts_.complete) return true;
  return basis()->degree(left) + basis()->degree(right) <= max_degree();
}

const Element& HopfPresentation::product(LabelId left, LabelId right) const {
  if (!product_in_range(left, right))
    throw TruncationError("product " + basis()->label(left) + " * " + basis()->label(right) +
                          " exceeds truncation degree " + std::to_string(max_degree()));
  const auto key = pair_key(left, right);
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  }
  Element value = parts_.rule->product(left, right);
  std::unique_lock lock(cache_mutex_);
  return product_cache_.try_emplace(key, std::move(value)).first->second;
}

Element HopfPresentation::product(const Element& x, const Element& y) const {
  x.check_compatible(y);
  Element r = zero();
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) r.add_scaled(a * b, product(i, j));
  return r;
}

const Tensor2Element& HopfPresentation::coproduct(LabelId id) const {
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = coproduct_cache_.find(id); it != coproduct_cache_.end()) return it->second;
  }
  Tensor2Element value = parts_.rule->coproduct(id);
  std::unique_lock lock(cache_mutex_);
  return coproduct_cache_.try_emplace(id, std::move(value)).first->second;
}

Tensor2Element HopfPresentation::coproduct(const Element& x) const {
  Tensor2Element t(basis(), ring());
  for (const auto& [id, c] : x.terms()) t.add_scaled(c, coproduct(id));
  return t;
}

RingElement HopfPresentation::counit(LabelId id) const {
  if (basis()->degree(id) != 0) return RingElement::zero(ring());
  return parts_.counit.at(id);
}

RingElement HopfPresentation::counit(const Element& x) const {
  RingElement r = RingElement::zero(ring());
  for (const auto& [id, c] : x.terms())
    if (basis()->degree(id) == 0) r += c * parts_.counit.at(id);
  return r;
}

Tensor2Element HopfPresentation::product(const Tensor2Element& s, const Tensor2Element& t) const {
  s.check_compatible(t);
  Tensor2Element r(basis(), ring());
  for (const auto& [k1, c1] : s.terms()) {
    for (const auto& [k2, c2] : t.terms()) {
      const Element& left = product(k1.first, k2.first);
      if (left.is_zero()) continue;
      const Element& right = product(k1.second, k2.second);
      RingElement c = c1 * c2;
      for (const auto& [i, a] : left.terms()) {
        RingElement ca = c * a;
        for (const auto& [j, b] : right.terms()) r.add_term(i, j, ca * b);
      }
    }
  }
  return r;
}

const GradedMap& HopfPresentation::antipode() const {
  std::lock_guard lock(antipode_mutex_);
  if (!antipode_) {
    if (parts_.antipode) {
      antipode_.emplace(basis(), ring(), *parts_.antipode, false);
    } else {
      if (!is_connected(*this))
        throw UnsupportedError("presentation '" + name() + "' is not connected and has no antipode table");
      antipode_.emplace(recursive_antipode(*this, true));
    }
  }
  return *antipode_;
}

// ---------------------------------------------------------- free functions

Connectivity is_connected(const HopfPresentation& h) {
  Connectivity c;
  c.degree0_rank = h.basis()->rank(0);
  c.counit_of_unit_is_one = h.counit(h.unit_label()).is_one();
  c.connected = c.degree0_rank == 1 && c.counit_of_unit_is_one;
  if (c.degree0_rank == 1) {
    // epsilon restricted to degree 0 is c -> c * eps(u0); it is an isomorphism
    // onto k exactly when eps(u0) is a unit, and the preimage of 1 is eps(u0)^-1 u0.
    const LabelId u0 = h.basis()->in_degree(0).front();
    const RingElement e = h.counit(u0);
    std::optional<RingElement> inv;
    if (e.is_one()) {
      inv = e;
    } else if ((-e).is_one()) {
      inv = e;
    } else if (h.ring().is_field() && !e.is_zero()) {
      inv = e.inverse();
    }
    if (inv) c.unit_agreement = (*inv * h.vec(u0)) == h.unit();
  }
  return c;
}

GradedMap antipode(const HopfPresentation& h) { return h.antipode(); }

GradedMap antipode_oracle(const HopfPresentation& h) {
  if (!is_connected(h)) {
    if (h.explicit_antipode()) return GradedMap(h.basis(), h.ring(), *h.explicit_antipode(), false);
    throw UnsupportedError("presentation '" + h.name() + "' is not connected and has no antipode table");
  }
  return recursive_antipode(h, false);
}

GradedMap antipode_power(const HopfPresentation& h, int k) { return h.antipode().power(k); }

Element multiply(const HopfPresentation& h, const Tensor2Element& t) {
  Element r = h.zero();
  for (const auto& [k, c] : t.terms()) r.add_scaled(c, h.product(k.first, k.second));
  return r;
}

VerificationReport verify_bialgebra(const HopfPresentation& h, int up_to) {
  VerificationReport rep("bialgebra");
  const auto& b = *h.basis();
  up_to = std::min(up_to, h.max_degree());
  const auto labels = b.up_to_degree(up_to);
  const char* anchor = anchor::kBialgebra;
  auto in_range = [&](std::initializer_list<LabelId> ids) {
    int total = 0;
    for (LabelId i : ids) {
      if (b.degree(i) > up_to) return false;
      total += b.degree(i);
    }
    return h.complete() || total <= up_to;
  };

  rep.add(check_labels("coproduct-graded", anchor, labels, [&](LabelId id) -> std::optional<Witness> {
    const int n = b.degree(id);
    for (auto [i, j] : bidegree_support(h.coproduct(id)))
      if (i + j != n) return Witness::of(b.label(id), h.coproduct(id));
    return std::nullopt;
  }));

  {
    CheckEntry e{"product-graded", anchor};
    for (LabelId x : labels) {
      for (LabelId y : labels) {
        if (!in_range({x, y})) continue;
        const auto& p = h.product(x, y);
        for (int d : p.degree_support())
          if (d != b.degree(x) + b.degree(y)) {
            e.status = Status::Fail;
            e.witness = Witness::of(b.label(x) + "*" + b.label(y), p);
            break;
          }
        if (e.witness) break;
      }
      if (e.witness) break;
    }
    rep.add(e);
  }

  rep.add(check_labels("coassociativity", anchor, labels, [&](LabelId id) -> std::optional<Witness> {
    TripleTerms lhs, rhs;
    for (const auto& [k, c] : h.coproduct(id).terms()) {
      for (const auto& [k2, c2] : h.coproduct(k.first).terms()) accumulate(lhs, {k2.first, k2.second, k.second}, c * c2);
      for (const auto& [k2, c2] : h.coproduct(k.second).terms()) accumulate(rhs, {k.first, k2.first, k2.second}, c * c2);
    }
    if (lhs == rhs) return std::nullopt;
    return Witness::note(b.label(id), "(D|id)D = " + render(b, lhs) + " but (id|D)D = " + render(b, rhs));
  }));

  rep.add(check_labels("counit-left", anchor, labels, [&](LabelId id) -> std::optional<Witness> {
    Element r = h.zero();
    for (const auto& [k, c] : h.coproduct(id).terms()) r.add_term(k.second, c * h.counit(k.first));
    if (r == h.vec(id)) return std::nullopt;
    return Witness::of(b.label(id), r);
  }));

  rep.add(check_labels("counit-right", anchor, labels, [&](LabelId id) -> std::optional<Witness> {
    Element r = h.zero();
    for (const auto& [k, c] : h.coproduct(id).terms()) r.add_term(k.first, c * h.counit(k.second));
    if (r == h.vec(id)) return std::nullopt;
    return Witness::of(b.label(id), r);
  }));

  rep.add(check_labels("unit", anchor, labels, [&](LabelId id) -> std::optional<Witness> {
    const auto u = h.unit_label();
    const auto& l = h.product(u, id);
    if (!(l == h.vec(id))) return Witness::of("1*" + b.label(id), l);
    const auto& r = h.product(id, u);
    if (!(r == h.vec(id))) return Witness::of(b.label(id) + "*1", r);
    return std::nullopt;
  }));

  {
    CheckEntry e{"unit-coproduct-counit", anchor};
    const auto u = h.unit_label();
    if (!(h.coproduct(u) == Tensor2Element::pure(h.basis(), h.ring(), u, u))) {
      e.status = Status::Fail;
      e.witness = Witness::of(b.label(u), h.coproduct(u));
    } else if (!h.counit(u).is_one()) {
      e.status = Status::Fail;
      e.witness = Witness::of(b.label(u), h.counit(u));
    }
    rep.add(e);
  }

  {
    CheckEntry e{"associativity", anchor};
    for (LabelId x : labels) {
      for (LabelId y : labels) {
        if (!in_range({x, y})) continue;
        for (LabelId z : labels) {
          if (!in_range({x, y, z})) continue;
          Element lhs = h.product(h.product(x, y), h.vec(z));
          Element rhs = h.product(h.vec(x), h.product(y, z));
          if (!(lhs == rhs)) {
            e.status = Status::Fail;
            e.witness = Witness::of(b.label(x) + "*" + b.label(y) + "*" + b.label(z), lhs - rhs);
            break;
          }
        }
        if (e.witness) break;
      }
      if (e.witness) break;
    }
    rep.add(e);
  }

  {
    CheckEntry mult{"coproduct-multiplicative", anchor};
    CheckEntry eps{"counit-multiplicative", anchor};
    for (LabelId x : labels) {
      for (LabelId y : labels) {
        if (!in_range({x, y})) continue;
        const auto& xy = h.product(x, y);
        if (!mult.witness) {
          Tensor2Element lhs = h.coproduct(xy);
          Tensor2Element rhs = h.product(h.coproduct(x), h.coproduct(y));
          if (!(lhs == rhs)) {
            mult.status = Status::Fail;
            mult.witness = Witness::of(b.label(x) + "*" + b.label(y), lhs - rhs);
          }
        }
        if (!eps.witness) {
          RingElement lhs = h.counit(xy);
          RingElement rhs = h.counit(x) * h.counit(y);
          if (!(lhs == rhs)) {
            eps.status = Status::Fail;
            eps.witness = Witness::of(b.label(x) + "*" + b.label(y), lhs - rhs);
          }
        }
      }
    }
    rep.add(mult);
    rep.add(eps);
  }
  return rep;
}

VerificationReport verify_antipode_axioms(const HopfPresentation& h, const GradedMap& s, int up_to) {
  VerificationReport rep("antipode-axioms");
  const auto& b = *h.basis();
  const auto labels = b.up_to_degree(std::min(up_to, h.max_degree()));
  auto probe = [&](bool left) {
    return [&, left](LabelId id) -> std::optional<Witness> {
      Element lhs = h.zero();
      try {
        for (const auto& [k, c] : h.coproduct(id).terms()) {
          Element piece = left ? h.product(s.image(k.first), h.vec(k.second))
                               : h.product(h.vec(k.first), s.image(k.second));
          lhs.add_scaled(c, piece);
        }
      } catch (const TruncationError& err) {
        return Witness::note(b.label(id), err.what());
      }
      Element rhs = h.counit(id) * h.unit();
      if (lhs == rhs) return std::nullopt;
      return Witness::of(b.label(id), lhs - rhs);
    };
  };
  rep.add(check_labels("m(S|id)D = u eps", anchor::kAntipodeAxioms, labels, probe(true)));
  rep.add(check_labels("m(id|S)D = u eps", anchor::kAntipodeAxioms, labels, probe(false)));
  return rep;
}

}  // namespace hopf
