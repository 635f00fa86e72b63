#pragma once

// Anchor strings attached to report entries and the suite catalogue. They name
// the statement a check instantiates, in the labelling used by the source
// note the suites were built from.

namespace hopf::anchor {

inline constexpr const char* kBialgebra = "Notations: graded bialgebra";
inline constexpr const char* kConnected = "Def. con-fil-coal (a); Prop. fil-bial.1=1";
inline constexpr const char* kAntipodeAxioms = "Remark rmk.hopf.antipode-pro";
inline constexpr const char* kAntipodeProps = "Lemma bialg.antip-props";
inline constexpr const char* kGradedBasics = "Lemma cghopf.basics";
inline constexpr const char* kIdbar = "Lemma cfc.idbar";
inline constexpr const char* kReducedDegree = "Prop. cfc.delta2 (a)";
inline constexpr const char* kReducedMorphism = "Prop. cfc.delta2 (b)";
inline constexpr const char* kPrimKernel = "Prop. cfc.delta2 (c)";
inline constexpr const char* kPrimSubmodule = "Prop. cfc.delta2 (d)";
inline constexpr const char* kKerDelta = "Prop. cfc.delta2 (e)";
inline constexpr const char* kPrimCounit = "Lemma coalg.primitive-e0";
inline constexpr const char* kTheorem = "Theorem thm.id-f.gen";
inline constexpr const char* kBinomial = "Theorem thm.id-f.gen, proof";
inline constexpr const char* kFiltered = "Cor. id-f.cfc";
inline constexpr const char* kFilteredP1 = "Cor. id-f.cfc1";
inline constexpr const char* kGradedHopf = "Cor. id-S2.gr1";
inline constexpr const char* kLoweredExponent = "Cor. id-S2.grp";
inline constexpr const char* kCommutingH1 = "Cor. id-S2.gr2";
inline constexpr const char* kTaft = "Remark (Taft algebra)";
inline constexpr const char* kExample = "Example (free algebra on a,b,c)";

}  // namespace hopf::anchor
