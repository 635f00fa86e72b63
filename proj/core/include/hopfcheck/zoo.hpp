#pragma once

// Built-in algebras.
//
// Word algebras label a word by concatenating its letters, or by joining them
// with '.' when some generator label is longer than one character. The empty
// word, like every unit in this library, is labelled "1".

#include <memory>
#include <string>
#include <vector>

#include "hopfcheck/hopf.hpp"

namespace hopf {

struct ZooLimits {
  int fqsym_max_degree = 6;
  int free_max_degree = 8;
  unsigned taft_max_order = 11;
};

/// Free algebra on a, b (degree 1, primitive) and c (degree 2) with
/// Delta(c) = c|1 + a|b + 1|c. Needs N >= 2.
HopfPtr free_example_abc(const RingSpec& ring, int max_degree, const ZooLimits& limits = {});

/// Free algebra on the generators with Delta extended multiplicatively.
/// Each generator coproduct must have the generator's total degree, satisfy
/// both counit axioms and be coassociative; ConstructionError names the
/// offending generator otherwise.
HopfPtr free_bialgebra(const std::vector<FreeGenerator>& generators, const RingSpec& ring, int max_degree,
                       std::string name = "free", const ZooLimits& limits = {});

/// Word basis on letters a, b, ...; concatenation product, letters primitive.
HopfPtr tensor_algebra(int rank, const RingSpec& ring, int max_degree, const ZooLimits& limits = {});
/// Word basis on letters a, b, ...; shuffle product, deconcatenation coproduct.
HopfPtr shuffle_algebra(int rank, const RingSpec& ring, int max_degree, const ZooLimits& limits = {});

/// Malvenuto-Reutenauer algebra in the F basis: F_s F_t is the sum over the
/// shuffles of s with t shifted by |s|, Delta(F_s) deconcatenates s and
/// standardizes both halves. Labels are "F" followed by the one-line
/// notation ("F21"). ResourceGuardError past limits.fqsym_max_degree.
HopfPtr fqsym(const RingSpec& ring, int max_degree, const ZooLimits& limits = {});

/// Taft algebra H_{n,q} over Z[q]/(1 + q + ... + q^{n-1}), n prime: basis
/// a^i x^j (0 <= i, j < n) of degree j, a^n = 1, x^n = 0, xa = q ax,
/// Delta(a) = a|a, Delta(x) = x|a + 1|x, with the antipode table
/// S(a) = a^{n-1}, S(x) = -x a^{n-1}, so S^2(x) = q^-1 x. Labels: "1", "a", "a2", "x", "ax", "a2x2".
HopfPtr taft(unsigned n, const ZooLimits& limits = {});
std::string taft_label(unsigned i, unsigned j);

/// Zoo entry names accepted by make_zoo: abc, tensor, shuffle, fqsym, taft.
std::vector<std::string> zoo_names();
/// `name` or `name:param` (tensor:3, taft:5). Taft ignores ring and max_degree.
HopfPtr make_zoo(const std::string& selector, const RingSpec& ring, int max_degree, const ZooLimits& limits = {});

}  // namespace hopf
