#pragma once

// Algebra-spec files.
//
//   hopf-spec 1
//   name abc
//   ring Z
//   maxdeg 5
//   free
//   generator a 1
//   generator c 2 = c|1 + a|b + 1|c
//
// or, with full structure constants,
//
//   table
//   complete no
//   unit 1
//   basis 0 : 1
//   basis 1 : x
//   counit 1 = 1
//   product x x = 2*xx
//   coproduct x = x|1 + 1|x
//   antipode x = -x
//
// Blank lines and lines starting with '#' are ignored. Terms are written
// `[sign] [coeff*] label` or `[sign] [coeff*] label|label`, coefficients in the
// ring's canonical text form (`3`, `-1/2`, `[1,0,-1]`). `0` is the empty sum.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hopfcheck/hopf.hpp"

namespace hopf {

Element parse_element(std::string_view text, const BasisPtr& basis, const RingSpec& ring);
Tensor2Element parse_tensor(std::string_view text, const BasisPtr& basis, const RingSpec& ring);

struct SpecOverrides {
  std::optional<RingSpec> ring;
  std::optional<int> max_degree;
};

/// SpecError (with a line number) on syntax and validation errors; only
/// generator-based specs accept overrides.
HopfPtr parse_spec(std::istream& in, const SpecOverrides& overrides = {});
HopfPtr parse_spec_text(const std::string& text, const SpecOverrides& overrides = {});
HopfPtr parse_spec_file(const std::string& path, const SpecOverrides& overrides = {});

/// Generator form when the presentation was built from generators, table
/// form otherwise.
std::string export_spec(const HopfPresentation& h);

}  // namespace hopf
