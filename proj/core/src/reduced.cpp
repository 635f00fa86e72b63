#include "hopfcheck/reduced.hpp"

#include <random>

#include "hopfcheck/anchors.hpp"

namespace hopf {

namespace {

// Coefficients in {-2, ..., 2}; drawn by hand so that the sequence depends on
// the seed only, not on the standard library's distribution code.
RingElement small_coeff(std::mt19937_64& rng, const RingSpec& r) {
  return RingElement::from_int(static_cast<long>(rng() % 5) - 2, r);
}

Element random_combination(std::mt19937_64& rng, const HopfPresentation& h, const std::vector<LabelId>& pool,
                           std::size_t terms) {
  Element x = h.zero();
  if (pool.empty()) return x;
  for (std::size_t i = 0; i < terms; ++i) x.add_term(pool[rng() % pool.size()], small_coeff(rng, h.ring()));
  return x;
}

// Test vectors for the primitivity checks: basis labels, random combinations
// inside and across degrees, and random combinations of commutators of
// degree-1 labels (which are primitive in every connected graded bialgebra).
std::vector<std::pair<std::string, Element>> test_vectors(const HopfPresentation& h, int up_to, std::uint64_t seed) {
  std::vector<std::pair<std::string, Element>> out;
  const auto& b = *h.basis();
  for (LabelId id : b.up_to_degree(up_to)) out.emplace_back(b.label(id), h.vec(id));
  std::mt19937_64 rng(seed);
  for (int d = 0; d <= up_to; ++d) {
    auto pool = b.in_degree(d);
    for (int k = 0; k < 4; ++k) {
      Element x = random_combination(rng, h, pool, 3);
      out.emplace_back("random(deg " + std::to_string(d) + ")#" + std::to_string(k) + " = " + x.to_string(), x);
    }
  }
  auto all = b.up_to_degree(up_to);
  for (int k = 0; k < 6; ++k) {
    Element x = random_combination(rng, h, all, 4);
    out.emplace_back("random(mixed)#" + std::to_string(k) + " = " + x.to_string(), x);
  }
  auto deg1 = b.in_degree(1);
  if (!deg1.empty() && (h.complete() || up_to >= 2) && h.max_degree() >= 2) {
    for (int k = 0; k < 4; ++k) {
      Element comm = h.zero();
      for (int t = 0; t < 2; ++t) {
        LabelId x = deg1[rng() % deg1.size()], y = deg1[rng() % deg1.size()];
        Element c = h.product(x, y) - h.product(y, x);
        comm.add_scaled(small_coeff(rng, h.ring()), c);
      }
      out.emplace_back("commutators#" + std::to_string(k) + " = " + comm.to_string(), comm);
    }
  }
  return out;
}

}  // namespace

Element idbar(const HopfPresentation& h, const Element& x) { return x - h.counit(x) * h.unit(); }

GradedMap idbar_map(const HopfPresentation& h) {
  std::vector<Element> images;
  for (LabelId id = 0; id < h.basis()->size(); ++id) images.push_back(idbar(h, h.vec(id)));
  return GradedMap(h.basis(), h.ring(), std::move(images), true);
}

Tensor2Element reduced_coproduct(const HopfPresentation& h, const Element& x) {
  const Element one = h.unit();
  Tensor2Element t = h.coproduct(x);
  t -= tensor_of(x, one);
  t -= tensor_of(one, x);
  t += h.counit(x) * tensor_of(one, one);
  return t;
}

Tensor2ValuedMap reduced_coproduct_map(const HopfPresentation& h) {
  std::vector<Tensor2Element> images;
  for (LabelId id = 0; id < h.basis()->size(); ++id) images.push_back(reduced_coproduct(h, h.vec(id)));
  return Tensor2ValuedMap(h.basis(), h.ring(), std::move(images));
}

bool is_primitive(const HopfPresentation& h, const Element& x) {
  const Element one = h.unit();
  return h.coproduct(x) == tensor_of(x, one) + tensor_of(one, x);
}

VerificationReport verify_delta_factorization(const HopfPresentation& h, int up_to) {
  VerificationReport rep("delta-factorization");
  const auto labels = h.basis()->up_to_degree(up_to);
  const GradedMap bar = idbar_map(h);
  rep.add(check_labels("delta = (idbar|idbar) o Delta", anchor::kIdbar, labels,
                       [&](LabelId id) -> std::optional<Witness> {
                         Tensor2Element lhs = reduced_coproduct(h, h.vec(id));
                         Tensor2Element rhs = apply_tensor(bar, bar, h.coproduct(id));
                         if (lhs == rhs) return std::nullopt;
                         return Witness::of(h.basis()->label(id), lhs - rhs);
                       }));
  rep.add(check_labels("idbar(H_0) = 0", anchor::kIdbar, h.basis()->in_degree(0),
                       [&](LabelId id) -> std::optional<Witness> {
                         if (!is_connected(h)) return std::nullopt;
                         Element v = idbar(h, h.vec(id));
                         if (v.is_zero()) return std::nullopt;
                         return Witness::of(h.basis()->label(id), v);
                       }));
  return rep;
}

VerificationReport verify_delta_degree_bound(const HopfPresentation& h, int up_to) {
  VerificationReport rep("delta-degree-bound");
  const auto& b = *h.basis();
  for (int n = 1; n <= std::min(up_to, h.max_degree()); ++n) {
    auto labels = b.in_degree(n);
    rep.add(check_labels("delta(H_" + std::to_string(n) + ") in sum_{1<=i<n} H_i|H_{n-i}", anchor::kReducedDegree,
                         labels, [&](LabelId id) -> std::optional<Witness> {
                           Tensor2Element d = reduced_coproduct(h, h.vec(id));
                           for (auto [i, j] : bidegree_support(d))
                             if (i < 1 || j < 1 || i + j != n) return Witness::of(b.label(id), d);
                           return std::nullopt;
                         }));
  }
  return rep;
}

VerificationReport verify_prim_characterization(const HopfPresentation& h, int up_to, std::uint64_t seed) {
  VerificationReport rep("prim-characterization");
  up_to = std::min(up_to, h.max_degree());
  const auto vectors = test_vectors(h, up_to, seed);

  {
    CheckEntry e{"Prim = Ker delta cap Ker eps (membership)", anchor::kPrimKernel};
    std::size_t primitive_count = 0;
    for (const auto& [name, x] : vectors) {
      const bool prim = is_primitive(h, x);
      const bool in_kernels = reduced_coproduct(h, x).is_zero() && h.counit(x).is_zero();
      primitive_count += prim;
      if (prim != in_kernels) {
        e.status = Status::Fail;
        e.witness = Witness::of(name, reduced_coproduct(h, x));
        break;
      }
    }
    e.detail = std::to_string(vectors.size()) + " vectors, " + std::to_string(primitive_count) + " primitive";
    rep.add(e);
  }

  {
    CheckEntry e{"eps(Prim) = 0", anchor::kPrimCounit};
    for (const auto& [name, x] : vectors) {
      if (is_primitive(h, x) && !h.counit(x).is_zero()) {
        e.status = Status::Fail;
        e.witness = Witness::of(name, h.counit(x));
        break;
      }
    }
    rep.add(e);
  }

  {
    CheckEntry e{"1 in Ker delta", anchor::kKerDelta};
    Tensor2Element d = reduced_coproduct(h, h.unit());
    if (!d.is_zero()) {
      e.status = Status::Fail;
      e.witness = Witness::of(h.basis()->label(h.unit_label()), d);
    }
    rep.add(e);
  }

  const auto delta = reduced_coproduct_map(h);
  for (int n = 0; n <= up_to; ++n) {
    CheckEntry e{"Ker delta|H_" + std::to_string(n) + (n == 0 ? " = k 1" : " in Prim"), anchor::kKerDelta};
    if (!h.ring().is_field()) {
      e.status = Status::NotChecked;
      e.detail = "kernel computation needs a field";
      rep.add(e);
      continue;
    }
    auto domain = h.basis()->in_degree(n);
    KernelResult k = kernel_basis(delta, domain);
    e.detail = "dim " + std::to_string(k.dimension) + ", rank " + std::to_string(k.rank) + ", kernel " +
               std::to_string(k.kernel.size());
    if (n == 0) {
      // H_0 = k 1 in the connected case, and the kernel must contain it.
      if (k.kernel.size() != domain.size()) {
        e.status = Status::Fail;
        e.witness = Witness::note(h.basis()->label(h.unit_label()), "delta does not vanish on H_0");
      }
    } else {
      for (const auto& v : k.kernel) {
        if (!is_primitive(h, v)) {
          e.status = Status::Fail;
          e.witness = Witness::of("kernel vector " + v.to_string(), reduced_coproduct(h, v));
          break;
        }
      }
    }
    rep.add(e);
  }
  return rep;
}

VerificationReport suite_reduced(const HopfPresentation& h, int up_to, std::uint64_t seed) {
  VerificationReport rep("reduced");
  up_to = std::min(up_to, h.max_degree());
  rep.append(verify_delta_factorization(h, up_to));
  rep.append(verify_delta_degree_bound(h, up_to));
  rep.append(verify_prim_characterization(h, up_to, seed));

  const auto& b = *h.basis();
  const auto labels = b.up_to_degree(up_to);
  const GradedMap id = GradedMap::identity(h.basis(), h.ring());
  const GradedMap s2 = antipode_power(h, 2);
  for (const auto& [name, phi] : {std::pair<std::string, const GradedMap*>{"id", &id}, {"S^2", &s2}}) {
    rep.add(check_labels("(" + name + "|" + name + ") o delta = delta o " + name, anchor::kReducedMorphism, labels,
                         [&, phi = phi](LabelId l) -> std::optional<Witness> {
                           Tensor2Element lhs = apply_tensor(*phi, *phi, reduced_coproduct(h, h.vec(l)));
                           Tensor2Element rhs = reduced_coproduct(h, phi->apply(h.vec(l)));
                           if (lhs == rhs) return std::nullopt;
                           return Witness::of(b.label(l), lhs - rhs);
                         }));
  }

  {
    CheckEntry e{"Prim closed under + and scalars", anchor::kPrimSubmodule};
    std::vector<Element> prims;
    for (const auto& [name, x] : test_vectors(h, up_to, seed))
      if (is_primitive(h, x)) prims.push_back(x);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < prims.size() && !e.witness; ++i) {
      const Element& p = prims[i];
      const Element& q = prims[rng() % prims.size()];
      Element combo = p + small_coeff(rng, h.ring()) * q;
      if (!is_primitive(h, combo)) {
        e.status = Status::Fail;
        e.witness = Witness::of(combo.to_string(), reduced_coproduct(h, combo));
      }
    }
    e.detail = std::to_string(prims.size()) + " primitive test vectors";
    rep.add(e);
  }

  {
    std::vector<LabelId> positive;
    for (LabelId l : labels)
      if (b.degree(l) >= 1) positive.push_back(l);
    rep.add(check_labels("Delta(x) = 1|x + x|1 + w, w in sum_{1<=k<n} H_k|H_{n-k}", anchor::kGradedBasics, positive,
                         [&](LabelId l) -> std::optional<Witness> {
                           const int n = b.degree(l);
                           Tensor2Element w = h.coproduct(l) - tensor_of(h.unit(), h.vec(l)) -
                                              tensor_of(h.vec(l), h.unit());
                           for (auto [i, j] : bidegree_support(w))
                             if (i < 1 || j < 1 || i + j != n) return Witness::of(b.label(l), w);
                           return std::nullopt;
                         }));
  }
  return rep;
}

}  // namespace hopf
