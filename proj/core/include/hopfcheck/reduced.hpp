#pragma once

// Reduced coproduct, the projection idbar and primitivity.

#include <cstdint>

#include "hopfcheck/hopf.hpp"
#include "hopfcheck/report.hpp"

namespace hopf {

/// x - eps(x) 1
Element idbar(const HopfPresentation& h, const Element& x);
GradedMap idbar_map(const HopfPresentation& h);

/// delta(x) = Delta(x) - x|1 - 1|x + eps(x) 1|1
Tensor2Element reduced_coproduct(const HopfPresentation& h, const Element& x);
/// delta as a map given by its basis images.
Tensor2ValuedMap reduced_coproduct_map(const HopfPresentation& h);

/// Literal test Delta(x) == x|1 + 1|x. Works over any ring.
bool is_primitive(const HopfPresentation& h, const Element& x);

/// delta = (idbar (x) idbar) o Delta on every label of degree <= up_to.
VerificationReport verify_delta_factorization(const HopfPresentation& h, int up_to);

/// delta(H_n) lies in bidegrees (i, n-i), 1 <= i <= n-1, for n in [1, up_to];
/// so delta vanishes on H_1.
VerificationReport verify_delta_degree_bound(const HopfPresentation& h, int up_to);

/// Prim H = Ker delta cap Ker eps, membership-wise on labels and on seeded
/// random combinations; primitive vectors have eps = 0; over a field every
/// kernel vector of delta on H_n (n >= 1) is primitive and 1 lies in Ker delta
/// (reported not-checked over non-fields).
VerificationReport verify_prim_characterization(const HopfPresentation& h, int up_to, std::uint64_t seed = 1);

/// The full reduced-coproduct layer: the three reports above plus the
/// morphism identity (phi|phi) o delta = delta o phi for phi in {id, S^2},
/// closure of Prim under sums and scalars, and the coproduct shape
/// Delta(x) = 1|x + x|1 + w with w in positive bidegrees.
VerificationReport suite_reduced(const HopfPresentation& h, int up_to, std::uint64_t seed = 1);

}  // namespace hopf
