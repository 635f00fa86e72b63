#pragma once

// Corollary suites for connected filtered and graded Hopf algebras, the
// antipode-property suite, the Taft counterexample, and the suite catalogue.

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcheck/hopf.hpp"
#include "hopfcheck/report.hpp"

namespace hopf {

/// e = S^{e_power}, f = S^{f_power}; hypotheses (coalgebra maps fixing 1,
/// (e-f)(H_{<=p}) = 0) first, then for u > p: (e-f)^{u-p}(H_{<=u}) in Prim, and
/// for u >= p: (e-f)^{u-p+1}(H_{<=u}) = 0. A positive `exponent_offset` lowers
/// both exponents for u > p, to exhibit sharpness.
VerificationReport suite_corollary_filtered(const HopfPresentation& h, int e_power, int f_power, int p,
                                            int exponent_offset = 0);

/// For every u in [1, N] and x in H_u: (id-S^2)^{u-1}(x) is primitive,
/// (id+S)(id-S^2)^{u-1}(x) = 0 and (id-S^2)^u(x) = 0.
VerificationReport suite_graded_hopf(const HopfPresentation& h);

/// Premise (id-S^2)(H_i) = 0 for i in [2, p] (and, for p = 2, the implication
/// ab = ba on H_1 => (id-S^2)(H_2) = 0); then the lowered-exponent claims
/// for u > p and u >= p. A failed premise skips the claims.
VerificationReport suite_lowered_exponent(const HopfPresentation& h, int p);

/// S^2 is a coalgebra map, S(1) = 1, S(x) = -x and S^2(x) = x on primitive
/// labels, and for connected h the graded basics: H_1 in Prim, S(ab) = ba on
/// H_1, the coproduct shape. Whether S^2 = id is reported without failing.
VerificationReport suite_antipode_props(const HopfPresentation& h);

/// Hopf axioms with the explicit antipode, non-connectedness, S^2(a) = a,
/// S^2(x) = lambda x with lambda in {q, q^-1} (the realized one is reported)
/// and (id-S^2)^k(x) = (1-lambda)^k x != 0 for k in [1, max_k].
VerificationReport suite_taft_remark(const HopfPresentation& taft_algebra, int max_k);
VerificationReport suite_taft_remark(unsigned n, int max_k);

struct SuiteInfo {
  std::string id;
  std::string anchor;
  std::string summary;
  bool needs_connected;
};

const std::vector<SuiteInfo>& suite_catalogue();
const SuiteInfo* find_suite(std::string_view id);

struct SuiteOptions {
  int p = 1;
  std::uint64_t seed = 1;
  int e_power = 0;
  int f_power = 2;
  int binomial_k = 4;
  int taft_k = 10;
};

/// Runs one catalogue suite. Suites that need a connected presentation
/// report a single not-checked entry on other input. StructuralError for
/// unknown ids.
VerificationReport run_suite(std::string_view id, const HopfPresentation& h, const SuiteOptions& options = {});

}  // namespace hopf
