#pragma once

// The pre-coalgebra harness: a module D graded as D_0 + D_1 + ... + D_m, a
// linear map delta: D -> D (x) D, two endomorphisms e, f and an integer p >= 1.
// Hypotheses and conclusions are checked label by label.

#include <string>

#include "hopfcheck/hopf.hpp"
#include "hopfcheck/report.hpp"

namespace hopf {

struct PreCoalgebraInstance {
  std::string name;
  BasisPtr basis;
  RingSpec ring;
  Tensor2ValuedMap delta;
  GradedMap e;
  GradedMap f;
  int p = 1;

  /// g = e - f
  GradedMap g() const { return e - f; }
  /// h = e (x) e - f (x) f
  Tensor2Map h() const { return tensor_map(e, e) - tensor_map(f, f); }
};

/// Ker delta in Ker(e-f) (fields only, else not-checked), (f|f) delta = delta f,
/// (e|e) delta = delta e, fe = ef, (e-f)(D_1 + ... + D_p) = 0, and
/// delta(D_n) in sum_{1<=i<n} D_i|D_{n-i} for n > p.
VerificationReport check_hypotheses(const PreCoalgebraInstance& inst);

/// For p < u <= U: delta((e-f)^{u-p}(x)) = 0 and (e-f)^{u-p+1}(x) = 0 for every
/// label x of degree u.
VerificationReport verify_conclusions(const PreCoalgebraInstance& inst, int max_u);

/// h^k = sum_r C(k,r) (e^{k-r}|f^r)(g^r|g^{k-r}) for k <= K on every label
/// pair of total degree <= max_degree, h = g|f + e|g, (g|f)(e|g) = (e|g)(g|f), and g^i e^j = e^j g^i
/// for i, j <= K. Needs fe = ef; when that fails the rest is not-checked.
VerificationReport binomial_identity_check(const PreCoalgebraInstance& inst, int max_k);

/// D_i = H_i, delta = reduced coproduct, e = S^{e_power}, f = S^{f_power}.
/// Powers must be even and non-negative; UnsupportedError for non-connected h.
PreCoalgebraInstance instance_from_hopf(const HopfPresentation& h, int e_power, int f_power, int p);

/// Copy of `inst` with delta(label) += c * left|right.
PreCoalgebraInstance with_delta_term(const PreCoalgebraInstance& inst, std::string_view label,
                                     std::string_view left, std::string_view right, long c = 1);

/// x (deg 1), y (deg 2), z (deg 3) with delta(x) = 0, delta(y) = x|x,
/// delta(z) = x|y, e = id, f(x) = x, f(y) = y + x, f(z) = z + y + x, p = 1.
/// delta is not coassociative: (delta|id)delta(z) = 0, (id|delta)delta(z) = x|x|x.
PreCoalgebraInstance noncoassociative_instance(const RingSpec& ring);

}  // namespace hopf
