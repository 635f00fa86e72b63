#pragma once

// Exact commutative coefficient rings: Z, Q, Z/m and monic quotients R[t]/(f)
// with R in {Z, Q}. Every element is kept in canonical form, so equality of
// values is equality of representations.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopf {

using BigInt = mpz_class;
using BigRat = mpq_class;

enum class RingKind { Integers, Rationals, IntegersMod, Quotient };

class RingSpec {
 public:
  static RingSpec integers();
  static RingSpec rationals();
  /// Z/m; requires m >= 2.
  static RingSpec integers_mod(const BigInt& m);
  /// base[var]/(f) where `modulus` lists c0, c1, ..., c_d low to high and c_d = 1.
  /// `irreducible` is trusted, not tested; it only matters over Q.
  static RingSpec quotient(RingKind base, std::vector<BigRat> modulus,
                           bool irreducible = false, std::string var = "q");
  /// Z[q]/(1 + q + ... + q^(p-1)), the ring of p-th cyclotomic integers.
  static RingSpec cyclotomic(unsigned p);
  /// Parses `Z`, `Q`, `Z/<m>`, `Z[q]/(c0,...,1)` or `Q[q]/(c0,...,1)`.
  /// A trailing `!` on a Q-quotient asserts irreducibility of the modulus.
  static RingSpec parse(std::string_view text);

  RingKind kind() const;
  /// Coefficient ring of a quotient (Integers or Rationals); kind() otherwise.
  RingKind base() const;
  const BigInt& modulus() const;
  const std::vector<BigRat>& polynomial() const;
  const std::string& variable() const;
  /// deg f for quotients, 1 otherwise.
  std::size_t rank() const;
  bool is_field() const;
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  struct Data;
  explicit RingSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend class RingElement;
};

std::ostream& operator<<(std::ostream& os, const RingSpec& r);

class RingElement {
 public:
  static RingElement zero(const RingSpec& r);
  static RingElement one(const RingSpec& r);
  static RingElement from_int(const BigInt& n, const RingSpec& r);
  /// Rational values are accepted where they make sense: always in Q and
  /// Q-quotients; in Z/m when the denominator is a unit; never in Z.
  static RingElement from_rational(const BigRat& x, const RingSpec& r);
  /// Residue c0 + c1 t + ...; reduced modulo f. Quotient rings only.
  static RingElement from_coefficients(const std::vector<BigRat>& c, const RingSpec& r);
  /// The class of t in base[t]/(f).
  static RingElement generator(const RingSpec& r);
  /// Parses the canonical text form produced by to_string().
  static RingElement parse(std::string_view text, const RingSpec& r);

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement pow(unsigned k) const;
  /// Field rings only; UnsupportedRingError otherwise, std::domain_error on 0.
  RingElement inverse() const;

  /// Residue coefficients low to high, padded to ring().rank().
  std::vector<BigRat> coefficients() const;

  /// Canonical text: `5`, `-3/2`, or `[c0,c1,...]` for quotient rings.
  std::string to_string() const;
  /// Human-oriented polynomial rendering for quotient rings (`1 - q`).
  std::string pretty() const;

 private:
  using Residue = std::vector<BigRat>;
  using Value = std::variant<BigInt, BigRat, Residue>;

  RingElement(RingSpec r, Value v) : ring_(std::move(r)), v_(std::move(v)) {}
  void check_same_ring(const RingElement& o) const;
  void normalize();

  RingSpec ring_;
  Value v_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

/// Image of n under the unique ring map Z -> R.
RingElement ring_embed_int(const BigInt& n, const RingSpec& r);

bool is_field(const RingSpec& r);

/// C(k, r), zero when r > k.
BigInt binomial(unsigned long k, unsigned long r);

}  // namespace hopf
