#include "hopfcheck/suites.hpp"

#include "hopfcheck/anchors.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/reduced.hpp"
#include "hopfcheck/verify.hpp"
#include "hopfcheck/zoo.hpp"

namespace hopf {

namespace {

std::string power_name(int k) { return k == 0 ? std::string("id") : "S^" + std::to_string(k); }

// Iterates x, g(x), g^2(x), ... up to g^max_k(x); stops early at zero.
std::vector<Element> iterates(const GradedMap& g, Element x, int max_k) {
  std::vector<Element> out{x};
  for (int k = 1; k <= max_k; ++k) {
    if (out.back().is_zero()) {
      out.push_back(out.back());
      continue;
    }
    out.push_back(g.apply(out.back()));
  }
  return out;
}

struct FilteredClaims {
  const char* anchor;
  std::string map_name;  // rendering of g in claim text
  int offset = 0;
  bool with_id_plus_s = false;
};

// For u > p: g^{u-p-offset}(H_{<=u}) in Prim (and, optionally, killed by id+S);
// for u >= p: g^{u-p+1-offset'}(H_{<=u}) = 0 with offset' = offset for u > p only.
void filtered_conclusions(VerificationReport& rep, const HopfPresentation& h, const GradedMap& g, int p,
                          const FilteredClaims& opt) {
  const auto& b = *h.basis();
  const int n_max = h.max_degree();
  const GradedMap* s = opt.with_id_plus_s ? &h.antipode() : nullptr;
  auto exp_a = [&](int u) { return std::max(0, u - p - opt.offset); };
  auto exp_b = [&](int u) { return std::max(0, u - p + 1 - (u > p ? opt.offset : 0)); };
  const std::string a_exp = opt.offset ? "u-p-" + std::to_string(opt.offset) : "u-p";
  const std::string b_exp = opt.offset ? "u-p+1-" + std::to_string(opt.offset) : "u-p+1";

  std::vector<CheckEntry> prim, plus_s, zero;
  for (int u = 0; u <= n_max; ++u) {
    const std::string us = ", u = " + std::to_string(u) + ", p = " + std::to_string(p);
    prim.emplace_back("(" + opt.map_name + ")^{" + a_exp + "}(H_{<=u}) in Prim" + us, opt.anchor);
    plus_s.emplace_back("((id+S) o (" + opt.map_name + ")^{" + a_exp + "})(H_{<=u}) = 0" + us, opt.anchor);
    zero.emplace_back("(" + opt.map_name + ")^{" + b_exp + "}(H_{<=u}) = 0" + us, opt.anchor);
  }

  int top = 0;
  for (int u = p; u <= n_max; ++u) top = std::max({top, exp_a(u), exp_b(u)});
  for (LabelId id : b.up_to_degree(n_max)) {
    const int d = b.degree(id);
    const auto it = iterates(g, h.vec(id), top);
    for (int u = std::max(d, p); u <= n_max; ++u) {
      if (u > p) {
        const Element& y = it[exp_a(u)];
        if (!prim[u].witness && !is_primitive(h, y)) {
          prim[u].status = Status::Fail;
          prim[u].witness = Witness::of(b.label(id), y);
        }
        if (s && !plus_s[u].witness) {
          Element v = y + s->apply(y);
          if (!v.is_zero()) {
            plus_s[u].status = Status::Fail;
            plus_s[u].witness = Witness::of(b.label(id), v);
          }
        }
      }
      const Element& z = it[exp_b(u)];
      if (!zero[u].witness && !z.is_zero()) {
        zero[u].status = Status::Fail;
        zero[u].witness = Witness::of(b.label(id), z);
      }
    }
  }
  for (int u = p; u <= n_max; ++u) {
    if (u > p) {
      rep.add(prim[u]);
      if (s) rep.add(plus_s[u]);
    }
    rep.add(zero[u]);
  }
}

// (phi|phi) o delta = delta o phi, eps o phi = eps, phi(1) = 1.
bool coalgebra_map_fixing_one(VerificationReport& rep, const HopfPresentation& h, const GradedMap& phi,
                              const std::string& name) {
  const auto& b = *h.basis();
  const auto labels = b.up_to_degree(h.max_degree());
  bool ok = true;
  auto add = [&](CheckEntry e) {
    ok = ok && e.status != Status::Fail;
    rep.add(std::move(e));
  };
  add(check_labels("hypothesis: (" + name + "|" + name + ") o delta = delta o " + name, anchor::kReducedMorphism,
                   labels, [&](LabelId id) -> std::optional<Witness> {
                     Tensor2Element lhs = apply_tensor(phi, phi, reduced_coproduct(h, h.vec(id)));
                     Tensor2Element rhs = reduced_coproduct(h, phi.image(id));
                     if (lhs == rhs) return std::nullopt;
                     return Witness::of(b.label(id), lhs - rhs);
                   }));
  add(check_labels("hypothesis: eps o " + name + " = eps", anchor::kFiltered, labels,
                   [&](LabelId id) -> std::optional<Witness> {
                     RingElement diff = h.counit(phi.image(id)) - h.counit(id);
                     if (diff.is_zero()) return std::nullopt;
                     return Witness::of(b.label(id), diff);
                   }));
  CheckEntry unit("hypothesis: " + name + "(1) = 1", anchor::kFiltered);
  Element v = phi.image(h.unit_label()) - h.unit();
  if (!v.is_zero()) {
    unit.status = Status::Fail;
    unit.witness = Witness::of("1", v);
  }
  add(std::move(unit));
  return ok;
}

VerificationReport not_connected(const std::string& suite, const HopfPresentation& h, const char* anchor) {
  VerificationReport rep(suite);
  rep.add(CheckEntry("suite applies to connected presentations", anchor, Status::NotChecked, std::nullopt,
                     "'" + h.name() + "' has degree-0 rank " + std::to_string(h.basis()->rank(0))));
  return rep;
}

}  // namespace

VerificationReport suite_corollary_filtered(const HopfPresentation& h, int e_power, int f_power, int p,
                                            int exponent_offset) {
  VerificationReport rep("filtered");
  if (!is_connected(h)) return not_connected("filtered", h, anchor::kFiltered);
  if (p < 1) throw StructuralError("p must be positive");
  const GradedMap e = antipode_power(h, e_power), f = antipode_power(h, f_power);
  const std::string en = power_name(e_power), fn = power_name(f_power);
  const char* anchor = (p == 1 && e_power == 0) ? anchor::kFilteredP1 : anchor::kFiltered;
  const GradedMap g = e - f;
  const auto& b = *h.basis();

  bool ok = coalgebra_map_fixing_one(rep, h, e, en);
  ok = coalgebra_map_fixing_one(rep, h, f, fn) && ok;
  CheckEntry ann = check_labels("hypothesis: (e-f)(H_{<=p}) = 0", anchor, b.up_to_degree(p),
                                [&](LabelId id) -> std::optional<Witness> {
                                  if (g.image(id).is_zero()) return std::nullopt;
                                  return Witness::of(b.label(id), g.image(id));
                                },
                                "e = " + en + ", f = " + fn + ", p = " + std::to_string(p));
  ok = ok && ann.status != Status::Fail;
  rep.add(ann);
  rep.add(check_labels("eps o (e-f) = 0", anchor::kFiltered, b.up_to_degree(h.max_degree()),
                       [&](LabelId id) -> std::optional<Witness> {
                         RingElement v = h.counit(g.image(id));
                         if (v.is_zero()) return std::nullopt;
                         return Witness::of(b.label(id), v);
                       }));
  if (!ok) {
    const CheckEntry* failed = rep.first_failure();
    rep.add(CheckEntry("conclusions", anchor, Status::NotChecked, std::nullopt,
                       "skipped: hypothesis '" + failed->claim + "' failed"));
    return rep;
  }
  filtered_conclusions(rep, h, g, p, {anchor, en + "-" + fn, exponent_offset, false});
  return rep;
}

VerificationReport suite_graded_hopf(const HopfPresentation& h) {
  VerificationReport rep("graded-hopf");
  if (!is_connected(h)) return not_connected("graded-hopf", h, anchor::kGradedHopf);
  const auto& b = *h.basis();
  const GradedMap& s = h.antipode();
  const GradedMap g = GradedMap::identity(h.basis(), h.ring()) - s.power(2);
  for (int u = 1; u <= h.max_degree(); ++u) {
    const std::string us = ", u = " + std::to_string(u);
    CheckEntry prim("(id-S^2)^{u-1}(H_u) in Prim" + us, anchor::kGradedHopf);
    CheckEntry plus_s("((id+S) o (id-S^2)^{u-1})(H_u) = 0" + us, anchor::kGradedHopf);
    CheckEntry zero("(id-S^2)^u(H_u) = 0" + us, anchor::kGradedHopf);
    for (LabelId id : b.in_degree(u)) {
      const auto it = iterates(g, h.vec(id), u);
      const Element& y = it[u - 1];
      if (!prim.witness && !is_primitive(h, y)) {
        prim.status = Status::Fail;
        prim.witness = Witness::of(b.label(id), y);
      }
      if (!plus_s.witness) {
        Element v = y + s.apply(y);
        if (!v.is_zero()) {
          plus_s.status = Status::Fail;
          plus_s.witness = Witness::of(b.label(id), v);
        }
      }
      if (!zero.witness && !it[u].is_zero()) {
        zero.status = Status::Fail;
        zero.witness = Witness::of(b.label(id), it[u]);
      }
    }
    rep.add(prim);
    rep.add(plus_s);
    rep.add(zero);
  }
  return rep;
}

VerificationReport suite_lowered_exponent(const HopfPresentation& h, int p) {
  VerificationReport rep("lowered-exponent");
  if (!is_connected(h)) return not_connected("lowered-exponent", h, anchor::kLoweredExponent);
  if (p < 1) throw StructuralError("p must be positive");
  const auto& b = *h.basis();
  const GradedMap g = GradedMap::identity(h.basis(), h.ring()) - antipode_power(h, 2);

  bool premise = true;
  for (int i = 2; i <= std::min(p, h.max_degree()); ++i) {
    CheckEntry e = check_labels("premise: (id-S^2)(H_" + std::to_string(i) + ") = 0", anchor::kLoweredExponent,
                                b.in_degree(i), [&](LabelId id) -> std::optional<Witness> {
                                  if (g.image(id).is_zero()) return std::nullopt;
                                  return Witness::of(b.label(id), g.image(id));
                                });
    premise = premise && e.status != Status::Fail;
    rep.add(e);
  }

  if (p == 2 && h.max_degree() >= 2) {
    CheckEntry e("ab = ba on H_1 implies (id-S^2)(H_2) = 0", anchor::kCommutingH1);
    const auto h1 = b.in_degree(1);
    std::optional<std::pair<LabelId, LabelId>> noncommuting;
    for (LabelId x : h1)
      for (LabelId y : h1)
        if (!noncommuting && !(h.product(x, y) == h.product(y, x))) noncommuting = {x, y};
    if (noncommuting) {
      e.detail = "antecedent fails: " + b.label(noncommuting->first) + b.label(noncommuting->second) +
                 " != " + b.label(noncommuting->second) + b.label(noncommuting->first) +
                 " (the condition is only sufficient)";
    } else {
      e.detail = "H_1 is commutative";
      if (!premise) {
        e.status = Status::Fail;
        e.witness = rep.first_failure()->witness;
      }
    }
    rep.add(e);
  }

  if (!premise) {
    rep.add(CheckEntry("conclusions", anchor::kLoweredExponent, Status::NotChecked, std::nullopt,
                       "skipped: premise failed"));
    return rep;
  }
  filtered_conclusions(rep, h, g, p, {anchor::kLoweredExponent, "id-S^2", 0, true});
  return rep;
}

VerificationReport suite_antipode_props(const HopfPresentation& h) {
  VerificationReport rep("antipode-props");
  const auto& b = *h.basis();
  const auto labels = b.up_to_degree(h.max_degree());
  const GradedMap& s = h.antipode();
  const GradedMap s2 = s.power(2);

  rep.add(check_labels("Delta o S^2 = (S^2|S^2) o Delta", anchor::kAntipodeProps, labels,
                       [&](LabelId id) -> std::optional<Witness> {
                         Tensor2Element lhs = h.coproduct(s2.image(id));
                         Tensor2Element rhs = apply_tensor(s2, s2, h.coproduct(id));
                         if (lhs == rhs) return std::nullopt;
                         return Witness::of(b.label(id), lhs - rhs);
                       }));
  rep.add(check_labels("eps o S^2 = eps", anchor::kAntipodeProps, labels, [&](LabelId id) -> std::optional<Witness> {
    RingElement diff = h.counit(s2.image(id)) - h.counit(id);
    if (diff.is_zero()) return std::nullopt;
    return Witness::of(b.label(id), diff);
  }));
  {
    CheckEntry e("S(1) = 1", anchor::kAntipodeProps);
    Element v = s.image(h.unit_label()) - h.unit();
    if (!v.is_zero()) {
      e.status = Status::Fail;
      e.witness = Witness::of("1", v);
    }
    rep.add(e);
  }

  std::vector<LabelId> primitive;
  for (LabelId id : labels)
    if (is_primitive(h, h.vec(id))) primitive.push_back(id);
  const std::string prim_detail = std::to_string(primitive.size()) + " primitive labels";
  rep.add(check_labels("S(x) = -x for primitive x", anchor::kAntipodeProps, primitive,
                       [&](LabelId id) -> std::optional<Witness> {
                         Element v = s.image(id) + h.vec(id);
                         if (v.is_zero()) return std::nullopt;
                         return Witness::of(b.label(id), v);
                       },
                       prim_detail));
  rep.add(check_labels("S^2(x) = x for primitive x", anchor::kAntipodeProps, primitive,
                       [&](LabelId id) -> std::optional<Witness> {
                         Element v = s2.image(id) - h.vec(id);
                         if (v.is_zero()) return std::nullopt;
                         return Witness::of(b.label(id), v);
                       },
                       prim_detail));

  if (is_connected(h)) {
    const auto h1 = b.in_degree(1);
    rep.add(check_labels("H_1 in Prim", anchor::kGradedBasics, h1, [&](LabelId id) -> std::optional<Witness> {
      if (is_primitive(h, h.vec(id))) return std::nullopt;
      return Witness::of(b.label(id), reduced_coproduct(h, h.vec(id)));
    }));
    CheckEntry sab("S(ab) = ba for a, b in H_1", anchor::kGradedBasics);
    if (h.max_degree() >= 2) {
      for (LabelId x : h1) {
        for (LabelId y : h1) {
          if (sab.witness) break;
          Element v = s.apply(h.product(x, y)) - h.product(y, x);
          if (!v.is_zero()) {
            sab.status = Status::Fail;
            sab.witness = Witness::of(b.label(x) + "*" + b.label(y), v);
          }
        }
      }
    }
    rep.add(sab);
    std::vector<LabelId> positive;
    for (LabelId id : labels)
      if (b.degree(id) >= 1) positive.push_back(id);
    rep.add(check_labels("Delta(x) = 1|x + x|1 + w, w in sum_{1<=k<n} H_k|H_{n-k}", anchor::kGradedBasics, positive,
                         [&](LabelId id) -> std::optional<Witness> {
                           const int n = b.degree(id);
                           Tensor2Element w =
                               h.coproduct(id) - tensor_of(h.unit(), h.vec(id)) - tensor_of(h.vec(id), h.unit());
                           for (auto [i, j] : bidegree_support(w))
                             if (i < 1 || j < 1 || i + j != n) return Witness::of(b.label(id), w);
                           return std::nullopt;
                         }));
  } else {
    rep.add(CheckEntry("graded basics (H_1 in Prim, S(ab) = ba, coproduct shape)", anchor::kGradedBasics,
                       Status::NotChecked, std::nullopt, "presentation is not connected"));
  }

  {
    CheckEntry e("S^2 = id", anchor::kAntipodeProps);
    for (LabelId id : labels) {
      Element v = s2.image(id) - h.vec(id);
      if (!v.is_zero()) {
        e.status = Status::NonidentityVerified;
        e.witness = Witness::of(b.label(id), v);
        e.detail = "S^2(" + b.label(id) + ") = " + s2.image(id).to_string();
        break;
      }
    }
    rep.add(e);
  }
  return rep;
}

VerificationReport suite_taft_remark(const HopfPresentation& h, int max_k) {
  VerificationReport rep("taft-remark");
  const auto& b = *h.basis();
  const auto xs = b.find("x"), as = b.find("a");
  if (!xs || !as || h.ring().kind() != RingKind::Quotient || !h.explicit_antipode()) {
    rep.add(CheckEntry("Taft remark", anchor::kTaft, Status::NotChecked, std::nullopt,
                       "'" + h.name() + "' is not a Taft presentation"));
    return rep;
  }
  const LabelId x = *xs, a = *as;
  rep.append(verify_bialgebra(h, h.max_degree()));
  rep.append(verify_antipode_axioms(h, h.antipode(), h.max_degree()));

  {
    const auto conn = is_connected(h);
    CheckEntry e("H is not connected", anchor::kTaft);
    e.detail = "degree-0 rank " + std::to_string(conn.degree0_rank);
    if (conn.connected) {
      e.status = Status::Fail;
      e.witness = Witness::note("H_0", "rank 1");
    } else {
      e.status = Status::NonidentityVerified;
    }
    rep.add(e);
  }
  {
    CheckEntry e("H_0 is commutative", anchor::kTaft);
    const auto h0 = b.in_degree(0);
    for (LabelId u : h0)
      for (LabelId v : h0)
        if (!e.witness && !(h.product(u, v) == h.product(v, u))) {
          e.status = Status::Fail;
          e.witness = Witness::of(b.label(u) + "*" + b.label(v), h.product(u, v) - h.product(v, u));
        }
    rep.add(e);
  }

  const GradedMap s2 = antipode_power(h, 2);
  {
    CheckEntry e("S^2(a) = a", anchor::kTaft);
    Element v = s2.image(a) - h.vec(a);
    if (!v.is_zero()) {
      e.status = Status::Fail;
      e.witness = Witness::of("a", v);
    }
    rep.add(e);
  }

  const RingElement q = RingElement::generator(h.ring());
  const std::size_t n = h.basis()->rank(0);
  const RingElement q_inv = q.pow(static_cast<unsigned>(n - 1));
  const Element& s2x = s2.image(x);
  std::optional<RingElement> lambda;
  std::string which;
  if (s2x == q * h.vec(x)) {
    lambda = q;
    which = "S^2(x) = q x";
  } else if (s2x == q_inv * h.vec(x)) {
    lambda = q_inv;
    which = "S^2(x) = q^-1 x";
  }
  {
    CheckEntry e("S^2(x) in {q x, q^-1 x}", anchor::kTaft);
    if (lambda) {
      e.detail = which + " (realized choice)";
    } else {
      e.status = Status::Fail;
      e.witness = Witness::of("x", s2x);
    }
    rep.add(e);
  }
  if (!lambda) return rep;

  const GradedMap g = GradedMap::identity(h.basis(), h.ring()) - s2;
  const RingElement one = RingElement::one(h.ring());
  Element y = h.vec(x);
  RingElement coeff = one;
  for (int k = 1; k <= max_k; ++k) {
    y = g.apply(y);
    coeff = coeff * (one - *lambda);
    CheckEntry e("(id-S^2)^k(x) = (1-lambda)^k x != 0, k = " + std::to_string(k), anchor::kTaft);
    const Element expected = coeff * h.vec(x);
    if (!(y == expected)) {
      e.status = Status::Fail;
      e.witness = Witness::of("x", y - expected);
    } else if (y.is_zero()) {
      e.status = Status::Fail;
      e.witness = Witness::of("x", y);
    } else {
      e.status = Status::NonidentityVerified;
      e.detail = "coefficient " + coeff.pretty();
    }
    rep.add(e);
  }
  return rep;
}

VerificationReport suite_taft_remark(unsigned n, int max_k) { return suite_taft_remark(*taft(n), max_k); }

const std::vector<SuiteInfo>& suite_catalogue() {
  static const std::vector<SuiteInfo> catalogue{
      {"bialgebra", anchor::kBialgebra, "grading, (co)associativity, (co)unit, compatibility", false},
      {"connected", anchor::kConnected, "degree-0 rank and agreement of the two unities", false},
      {"antipode", anchor::kAntipodeAxioms, "antipode axioms; left and right recursions agree", false},
      {"antipode-props", anchor::kAntipodeProps, "S^2 coalgebra map, S on primitives, graded basics", false},
      {"reduced", "Prop. cfc.delta2; Lemma cfc.idbar", "reduced coproduct, degree bound, Prim", true},
      {"theorem1", anchor::kTheorem, "pre-coalgebra hypotheses and conclusions", true},
      {"binomial-identity", anchor::kBinomial, "binomial expansion of (e|e - f|f)^k", true},
      {"filtered", anchor::kFiltered, "(e-f)-nilpotency on H_{<=u}", true},
      {"graded-hopf", anchor::kGradedHopf, "(id-S^2)-nilpotency on H_u", true},
      {"lowered-exponent", anchor::kLoweredExponent, "exponent lowered by p", true},
      {"taft-remark", anchor::kTaft, "non-connected counterexample", false},
  };
  return catalogue;
}

const SuiteInfo* find_suite(std::string_view id) {
  for (const auto& s : suite_catalogue())
    if (s.id == id) return &s;
  return nullptr;
}

VerificationReport run_suite(std::string_view id, const HopfPresentation& h, const SuiteOptions& o) {
  const SuiteInfo* info = find_suite(id);
  if (!info) throw StructuralError("unknown suite '" + std::string(id) + "'");
  if (info->needs_connected && !is_connected(h)) return not_connected(info->id, h, info->anchor.c_str());
  const int n = h.max_degree();

  if (id == "bialgebra") return verify_bialgebra(h, n);
  if (id == "connected") {
    VerificationReport rep("connected");
    const auto c = is_connected(h);
    CheckEntry e("eps restricted to H_0 is an isomorphism onto k", anchor::kConnected);
    e.detail = "degree-0 rank " + std::to_string(c.degree0_rank);
    if (!c.connected) {
      e.status = Status::NotChecked;
      e.detail += "; presentation is not connected";
    }
    rep.add(e);
    CheckEntry u("coalgebra unity equals algebra unity", anchor::kConnected);
    if (!c.connected) {
      u.status = Status::NotChecked;
    } else if (!c.unit_agreement) {
      u.status = Status::Fail;
      u.witness = Witness::note(h.basis()->label(h.unit_label()), "eps|H_0 preimage of 1 differs from the unit");
    }
    rep.add(u);
    return rep;
  }
  if (id == "antipode") {
    VerificationReport rep("antipode");
    rep.append(verify_antipode_axioms(h, h.antipode(), n));
    const GradedMap oracle = antipode_oracle(h);
    const auto& b = *h.basis();
    rep.add(check_labels("left recursion = right recursion", anchor::kAntipodeAxioms, b.up_to_degree(n),
                         [&](LabelId l) -> std::optional<Witness> {
                           if (h.antipode().image(l) == oracle.image(l)) return std::nullopt;
                           return Witness::of(b.label(l), h.antipode().image(l) - oracle.image(l));
                         }));
    return rep;
  }
  if (id == "antipode-props") return suite_antipode_props(h);
  if (id == "reduced") return suite_reduced(h, n, o.seed);
  if (id == "theorem1") {
    const auto inst = instance_from_hopf(h, o.e_power, o.f_power, o.p);
    VerificationReport rep("theorem1");
    rep.append(check_hypotheses(inst));
    rep.append(verify_conclusions(inst, n));
    return rep;
  }
  if (id == "binomial-identity")
    return binomial_identity_check(instance_from_hopf(h, o.e_power, o.f_power, o.p), o.binomial_k);
  if (id == "filtered") return suite_corollary_filtered(h, o.e_power, o.f_power, o.p);
  if (id == "graded-hopf") return suite_graded_hopf(h);
  if (id == "lowered-exponent") return suite_lowered_exponent(h, o.p);
  return suite_taft_remark(h, o.taft_k);
}

}  // namespace hopf
