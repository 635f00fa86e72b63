#include "hopfcheck/verify.hpp"

#include "hopfcheck/anchors.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/reduced.hpp"

namespace hopf {

namespace {

std::vector<LabelId> all_labels(const GradedBasis& b) { return b.up_to_degree(b.max_degree()); }

// Labels of degree in [lo, hi].
std::vector<LabelId> labels_between(const GradedBasis& b, int lo, int hi) {
  std::vector<LabelId> out;
  for (int d = std::max(lo, 0); d <= std::min(hi, b.max_degree()); ++d)
    for (LabelId id : b.in_degree(d)) out.push_back(id);
  return out;
}

std::optional<Witness> compare_maps(const GradedBasis& b, const GradedMap& lhs, const GradedMap& rhs, LabelId id) {
  if (lhs.image(id) == rhs.image(id)) return std::nullopt;
  return Witness::of(b.label(id), lhs.image(id) - rhs.image(id));
}

CheckEntry morphism_check(const PreCoalgebraInstance& inst, const GradedMap& phi, const std::string& name) {
  const auto& b = *inst.basis;
  return check_labels("(" + name + "|" + name + ") o delta = delta o " + name, anchor::kTheorem, all_labels(b),
                      [&](LabelId id) -> std::optional<Witness> {
                        Tensor2Element lhs = apply_tensor(phi, phi, inst.delta.image(id));
                        Tensor2Element rhs = inst.delta.apply(phi.image(id));
                        if (lhs == rhs) return std::nullopt;
                        return Witness::of(b.label(id), lhs - rhs);
                      });
}

}  // namespace

VerificationReport check_hypotheses(const PreCoalgebraInstance& inst) {
  VerificationReport rep("theorem1-hypotheses");
  const auto& b = *inst.basis;
  const GradedMap g = inst.g();

  {
    CheckEntry e("Ker delta in Ker(e-f)", anchor::kTheorem);
    if (!inst.ring.is_field()) {
      e.status = Status::NotChecked;
      e.detail = "kernel computation needs a field";
    } else {
      auto labels = all_labels(b);
      KernelResult k = kernel_basis(inst.delta, labels);
      e.detail = "kernel dimension " + std::to_string(k.kernel.size());
      for (const auto& v : k.kernel) {
        Element gv = g.apply(v);
        if (!gv.is_zero()) {
          e.status = Status::Fail;
          e.witness = Witness::of("kernel vector " + v.to_string(), gv);
          break;
        }
      }
    }
    rep.add(e);
  }

  rep.add(morphism_check(inst, inst.f, "f"));
  rep.add(morphism_check(inst, inst.e, "e"));

  const GradedMap fe = inst.f.compose(inst.e), ef = inst.e.compose(inst.f);
  rep.add(check_labels("f o e = e o f", anchor::kTheorem, all_labels(b),
                       [&](LabelId id) { return compare_maps(b, fe, ef, id); }));

  rep.add(check_labels("(e-f)(D_1 + ... + D_p) = 0", anchor::kTheorem, labels_between(b, 1, inst.p),
                       [&](LabelId id) -> std::optional<Witness> {
                         if (g.image(id).is_zero()) return std::nullopt;
                         return Witness::of(b.label(id), g.image(id));
                       },
                       "p = " + std::to_string(inst.p)));

  rep.add(check_labels("delta(D_n) in sum_{1<=i<n} D_i|D_{n-i} for n > p", anchor::kTheorem,
                       labels_between(b, inst.p + 1, b.max_degree()), [&](LabelId id) -> std::optional<Witness> {
                         const int n = b.degree(id);
                         const auto& d = inst.delta.image(id);
                         for (auto [i, j] : bidegree_support(d))
                           if (i < 1 || j < 1 || i + j != n) return Witness::of(b.label(id), d);
                         return std::nullopt;
                       }));
  return rep;
}

VerificationReport verify_conclusions(const PreCoalgebraInstance& inst, int max_u) {
  VerificationReport rep("theorem1-conclusions");
  const auto& b = *inst.basis;
  const GradedMap g = inst.g();
  max_u = std::min(max_u, b.max_degree());
  for (int u = inst.p + 1; u <= max_u; ++u) {
    const auto labels = b.in_degree(u);
    const std::string us = std::to_string(u);
    // Keep g^{u-p}(x) per label so the second claim costs one more application.
    std::vector<Element> lowered;
    lowered.reserve(labels.size());
    for (LabelId id : labels) {
      Element x = Element::basis_vector(inst.basis, inst.ring, id);
      for (int k = 0; k < u - inst.p; ++k) x = g.apply(x);
      lowered.push_back(std::move(x));
    }
    CheckEntry in_ker("(e-f)^{u-p}(D_u) in Ker delta, u = " + us, anchor::kTheorem);
    CheckEntry zero("(e-f)^{u-p+1}(D_u) = 0, u = " + us, anchor::kTheorem);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!in_ker.witness) {
        Tensor2Element d = inst.delta.apply(lowered[i]);
        if (!d.is_zero()) {
          in_ker.status = Status::Fail;
          in_ker.witness = Witness::of(b.label(labels[i]), d);
        }
      }
      if (!zero.witness) {
        Element z = g.apply(lowered[i]);
        if (!z.is_zero()) {
          zero.status = Status::Fail;
          zero.witness = Witness::of(b.label(labels[i]), z);
        }
      }
    }
    rep.add(in_ker);
    rep.add(zero);
  }
  return rep;
}

VerificationReport binomial_identity_check(const PreCoalgebraInstance& inst, int max_k) {
  VerificationReport rep("binomial-identity");
  const auto& b = *inst.basis;
  const GradedMap g = inst.g();

  const GradedMap fe = inst.f.compose(inst.e), ef = inst.e.compose(inst.f);
  CheckEntry pre = check_labels("precondition f o e = e o f", anchor::kBinomial, all_labels(b),
                                [&](LabelId id) { return compare_maps(b, fe, ef, id); });
  const bool commuting = pre.status == Status::Pass;
  rep.add(pre);
  if (!commuting) {
    rep.add(CheckEntry("binomial identity", anchor::kBinomial, Status::NotChecked, std::nullopt,
                       "skipped: e and f do not commute"));
    return rep;
  }

  // Graded maps preserve bidegree, and delta lands in total degree <= max_degree.
  std::vector<LabelPair> pairs;
  for (LabelId i : all_labels(b))
    for (LabelId j : labels_between(b, 0, b.max_degree() - b.degree(i))) pairs.emplace_back(i, j);
  auto pure = [&](const LabelPair& pr) { return Tensor2Element::pure(inst.basis, inst.ring, pr.first, pr.second); };
  auto apply_h = [&](const Tensor2Element& t) { return apply_tensor(inst.e, inst.e, t) - apply_tensor(inst.f, inst.f, t); };
  auto compare_on_pairs = [&](std::string claim, auto&& lhs_rhs) {
    CheckEntry e(std::move(claim), anchor::kBinomial);
    for (std::size_t n = 0; n < pairs.size(); ++n) {
      auto [lhs, rhs] = lhs_rhs(n);
      if (lhs == rhs) continue;
      e.status = Status::Fail;
      e.witness = Witness::of(b.label(pairs[n].first) + "|" + b.label(pairs[n].second), lhs - rhs);
      break;
    }
    return e;
  };

  rep.add(compare_on_pairs("h = g|f + e|g", [&](std::size_t n) {
    const Tensor2Element t = pure(pairs[n]);
    return std::pair{apply_h(t), apply_tensor(g, inst.f, t) + apply_tensor(inst.e, g, t)};
  }));
  rep.add(compare_on_pairs("(g|f)(e|g) = (e|g)(g|f)", [&](std::size_t n) {
    const Tensor2Element t = pure(pairs[n]);
    return std::pair{apply_tensor(g, inst.f, apply_tensor(inst.e, g, t)),
                     apply_tensor(inst.e, g, apply_tensor(g, inst.f, t))};
  }));

  std::vector<GradedMap> e_pow{GradedMap::identity(inst.basis, inst.ring)}, f_pow = e_pow, g_pow = e_pow;
  for (int k = 1; k <= max_k; ++k) {
    e_pow.push_back(inst.e.compose(e_pow.back()));
    f_pow.push_back(inst.f.compose(f_pow.back()));
    g_pow.push_back(g.compose(g_pow.back()));
  }

  std::vector<Tensor2Element> h_pow;
  for (const auto& pr : pairs) h_pow.push_back(pure(pr));
  for (int k = 0; k <= max_k; ++k) {
    if (k > 0)
      for (auto& t : h_pow) t = apply_h(t);
    rep.add(compare_on_pairs("h^k = sum_r C(k,r) (e^{k-r}|f^r)(g^r|g^{k-r}), k = " + std::to_string(k),
                             [&](std::size_t n) {
                               const Tensor2Element t = pure(pairs[n]);
                               Tensor2Element sum(inst.basis, inst.ring);
                               for (int r = 0; r <= k; ++r)
                                 sum.add_scaled(ring_embed_int(binomial(k, r), inst.ring),
                                                apply_tensor(e_pow[k - r], f_pow[r],
                                                             apply_tensor(g_pow[r], g_pow[k - r], t)));
                               return std::pair{h_pow[n], std::move(sum)};
                             }));
  }

  {
    CheckEntry e("g^i e^j = e^j g^i, i, j <= K", anchor::kBinomial);
    for (int i = 0; i <= max_k && !e.witness; ++i) {
      for (int j = 0; j <= max_k && !e.witness; ++j) {
        const GradedMap lhs = g_pow[i].compose(e_pow[j]), rhs = e_pow[j].compose(g_pow[i]);
        for (LabelId id : all_labels(b)) {
          if (auto w = compare_maps(b, lhs, rhs, id)) {
            e.status = Status::Fail;
            w->input = "i=" + std::to_string(i) + ", j=" + std::to_string(j) + ": " + w->input;
            e.witness = std::move(w);
            break;
          }
        }
      }
    }
    e.detail = "K = " + std::to_string(max_k);
    rep.add(e);
  }
  return rep;
}

PreCoalgebraInstance instance_from_hopf(const HopfPresentation& h, int e_power, int f_power, int p) {
  if (e_power < 0 || f_power < 0 || e_power % 2 || f_power % 2)
    throw StructuralError("instance maps must be even non-negative antipode powers");
  if (p < 1) throw StructuralError("p must be positive");
  if (!is_connected(h)) throw UnsupportedError("'" + h.name() + "' is not connected");
  auto power_name = [](int k) { return k == 0 ? std::string("id") : "S^" + std::to_string(k); };
  return PreCoalgebraInstance{h.name() + " (e=" + power_name(e_power) + ", f=" + power_name(f_power) +
                                  ", p=" + std::to_string(p) + ")",
                              h.basis(),
                              h.ring(),
                              reduced_coproduct_map(h),
                              antipode_power(h, e_power),
                              antipode_power(h, f_power),
                              p};
}

PreCoalgebraInstance with_delta_term(const PreCoalgebraInstance& inst, std::string_view label,
                                     std::string_view left, std::string_view right, long c) {
  const auto& b = *inst.basis;
  std::vector<Tensor2Element> images = inst.delta.images();
  images.at(b.at(label)).add_term(b.at(left), b.at(right), RingElement::from_int(c, inst.ring));
  PreCoalgebraInstance out = inst;
  out.name += " [mutated delta(" + std::string(label) + ")]";
  out.delta = Tensor2ValuedMap(inst.basis, inst.ring, std::move(images));
  return out;
}

PreCoalgebraInstance noncoassociative_instance(const RingSpec& ring) {
  auto basis = make_basis({{}, {"x"}, {"y"}, {"z"}});
  const LabelId x = basis->at("x"), y = basis->at("y"), z = basis->at("z");
  auto vec = [&](LabelId id) { return Element::basis_vector(basis, ring, id); };

  std::vector<Tensor2Element> delta(basis->size(), Tensor2Element(basis, ring));
  delta[y] = Tensor2Element::pure(basis, ring, x, x);
  delta[z] = Tensor2Element::pure(basis, ring, x, y);

  std::vector<Element> f{vec(x), vec(y) + vec(x), vec(z) + vec(y) + vec(x)};
  return PreCoalgebraInstance{"noncoassociative(x,y,z)",
                              basis,
                              ring,
                              Tensor2ValuedMap(basis, ring, std::move(delta)),
                              GradedMap::identity(basis, ring),
                              GradedMap(basis, ring, std::move(f), true),
                              1};
}

}  // namespace hopf
