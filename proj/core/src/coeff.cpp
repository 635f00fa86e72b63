#include "hopfcheck/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hopfcheck/errors.hpp"

namespace hopf {

struct RingSpec::Data {
  RingKind kind = RingKind::Integers;
  RingKind base = RingKind::Integers;
  BigInt modulus;
  std::vector<BigRat> poly;  // monic, low to high
  bool irreducible = false;
  std::string var = "q";
};

namespace {

using Residue = std::vector<BigRat>;

void trim(Residue& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

bool is_integral(const BigRat& x) { return x.get_den() == 1; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigRat parse_rational(std::string_view s) {
  s = strip(s);
  if (s.empty()) throw SpecError(0, "empty number");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw SpecError(0, "malformed number '" + std::string(s) + "'");
  BigRat q{BigInt(num), BigInt(den)};
  if (q.get_den() == 0) throw SpecError(0, "zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Polynomial helpers over Q for inverses in Q[t]/(f).
Residue poly_sub(const Residue& a, const Residue& b) {
  Residue r(std::max(a.size(), b.size()), BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Residue poly_mul(const Residue& a, const Residue& b) {
  if (a.empty() || b.empty()) return {};
  Residue r(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = quot * b + rem
void poly_divmod(Residue a, const Residue& b, Residue& quot, Residue& rem) {
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    BigRat c = a.back() / b.back();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(quot);
  rem = std::move(a);
}

}  // namespace

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::integers() {
  static const RingSpec z{std::make_shared<const Data>()};
  return z;
}

RingSpec RingSpec::rationals() {
  static const RingSpec q{[] {
    auto d = std::make_shared<Data>();
    d->kind = d->base = RingKind::Rationals;
    return std::shared_ptr<const Data>(d);
  }()};
  return q;
}

RingSpec RingSpec::integers_mod(const BigInt& m) {
  if (m < 2) throw StructuralError("Z/m requires m >= 2");
  auto d = std::make_shared<Data>();
  d->kind = d->base = RingKind::IntegersMod;
  d->modulus = m;
  return RingSpec(std::move(d));
}

RingSpec RingSpec::quotient(RingKind base, std::vector<BigRat> modulus, bool irreducible,
                            std::string var) {
  if (base != RingKind::Integers && base != RingKind::Rationals)
    throw StructuralError("quotient rings are built over Z or Q only");
  trim(modulus);
  if (modulus.size() < 2) throw StructuralError("quotient modulus must have degree >= 1");
  if (modulus.back() != 1) throw StructuralError("quotient modulus must be monic");
  if (base == RingKind::Integers &&
      !std::all_of(modulus.begin(), modulus.end(), is_integral))
    throw StructuralError("modulus over Z must have integer coefficients");
  auto d = std::make_shared<Data>();
  d->kind = RingKind::Quotient;
  d->base = base;
  d->poly = std::move(modulus);
  d->irreducible = irreducible && base == RingKind::Rationals;
  d->var = var.empty() ? "q" : std::move(var);
  return RingSpec(std::move(d));
}

RingSpec RingSpec::cyclotomic(unsigned p) {
  if (p < 2) throw StructuralError("cyclotomic ring needs p >= 2");
  return quotient(RingKind::Integers, std::vector<BigRat>(p, BigRat(1)));
}

RingSpec RingSpec::parse(std::string_view text) {
  std::string_view s = strip(text);
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.size() > 2 && s.substr(0, 2) == "Z/") {
    std::string m(strip(s.substr(2)));
    if (m.empty() || !std::all_of(m.begin(), m.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SpecError(0, "malformed modulus in ring '" + std::string(s) + "'");
    BigInt mod(m);
    if (mod < 2) throw SpecError(0, "ring Z/m needs m >= 2");
    return integers_mod(mod);
  }
  if (s.size() > 3 && (s[0] == 'Z' || s[0] == 'Q') && s[1] == '[') {
    RingKind base = s[0] == 'Z' ? RingKind::Integers : RingKind::Rationals;
    auto close = s.find(']');
    if (close == std::string_view::npos) throw SpecError(0, "missing ']' in ring");
    std::string var(strip(s.substr(2, close - 2)));
    if (var.empty() || !std::all_of(var.begin(), var.end(),
                                    [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }))
      throw SpecError(0, "ring variable must be alphabetic");
    std::string_view rest = strip(s.substr(close + 1));
    bool irreducible = false;
    if (!rest.empty() && rest.back() == '!') {
      irreducible = true;
      rest = strip(rest.substr(0, rest.size() - 1));
    }
    if (rest.size() < 4 || rest.substr(0, 2) != "/(" || rest.back() != ')')
      throw SpecError(0, "expected '/(c0,...,1)' after ring variable");
    std::vector<BigRat> coeffs;
    for (auto part : split_commas(rest.substr(2, rest.size() - 3))) coeffs.push_back(parse_rational(part));
    try {
      return quotient(base, std::move(coeffs), irreducible, var);
    } catch (const StructuralError& e) {
      throw SpecError(0, e.what());
    }
  }
  throw SpecError(0, "unknown ring '" + std::string(s) + "'");
}

RingKind RingSpec::kind() const { return d_->kind; }
RingKind RingSpec::base() const { return d_->base; }
const BigInt& RingSpec::modulus() const { return d_->modulus; }
const std::vector<BigRat>& RingSpec::polynomial() const { return d_->poly; }
const std::string& RingSpec::variable() const { return d_->var; }
std::size_t RingSpec::rank() const {
  return d_->kind == RingKind::Quotient ? d_->poly.size() - 1 : 1;
}

bool RingSpec::is_field() const {
  switch (d_->kind) {
    case RingKind::Integers: return false;
    case RingKind::Rationals: return true;
    case RingKind::IntegersMod: return mpz_probab_prime_p(d_->modulus.get_mpz_t(), 30) > 0;
    case RingKind::Quotient: return d_->base == RingKind::Rationals && d_->irreducible;
  }
  return false;
}

std::string RingSpec::to_string() const {
  switch (d_->kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + d_->modulus.get_str();
    case RingKind::Quotient: {
      std::string s = d_->base == RingKind::Integers ? "Z[" : "Q[";
      s += d_->var + "]/(";
      for (std::size_t i = 0; i < d_->poly.size(); ++i) {
        if (i) s += ',';
        s += d_->poly[i].get_str();
      }
      s += ')';
      if (d_->irreducible) s += '!';
      return s;
    }
  }
  return "?";
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.d_ == b.d_) return true;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  return x.kind == y.kind && x.base == y.base && x.modulus == y.modulus && x.poly == y.poly &&
         x.irreducible == y.irreducible;
}

std::ostream& operator<<(std::ostream& os, const RingSpec& r) { return os << r.to_string(); }

bool is_field(const RingSpec& r) { return r.is_field(); }

// ------------------------------------------------------------- RingElement

void RingElement::normalize() {
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      break;
    case RingKind::IntegersMod: {
      auto& v = std::get<BigInt>(v_);
      v = mod_floor(v, ring_.modulus());
      break;
    }
    case RingKind::Quotient: {
      auto& r = std::get<Residue>(v_);
      const auto& f = ring_.polynomial();
      const std::size_t d = f.size() - 1;
      for (std::size_t i = r.size(); i-- > d;) {
        if (r[i] == 0) continue;
        BigRat c = r[i];
        for (std::size_t j = 0; j < d; ++j) r[i - d + j] -= c * f[j];
        r[i] = 0;
      }
      trim(r);
      break;
    }
  }
}

RingElement RingElement::zero(const RingSpec& r) {
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return RingElement(r, BigInt(0));
    case RingKind::Rationals: return RingElement(r, BigRat(0));
    case RingKind::Quotient: return RingElement(r, Residue{});
  }
  throw StructuralError("unknown ring kind");
}

RingElement RingElement::one(const RingSpec& r) { return from_int(1, r); }

RingElement RingElement::from_int(const BigInt& n, const RingSpec& r) {
  RingElement x = zero(r);
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: x.v_ = n; break;
    case RingKind::Rationals: x.v_ = BigRat(n); break;
    case RingKind::Quotient: x.v_ = Residue{BigRat(n)}; break;
  }
  x.normalize();
  return x;
}

RingElement RingElement::from_rational(const BigRat& x, const RingSpec& r) {
  if (x.get_den() == 0) throw std::domain_error("zero denominator");
  BigRat q = x;
  q.canonicalize();
  if (q.get_den() == 1) return from_int(q.get_num(), r);
  switch (r.kind()) {
    case RingKind::Integers:
      throw StructuralError("non-integer " + q.get_str() + " in Z");
    case RingKind::Rationals: return RingElement(r, q);
    case RingKind::IntegersMod: {
      BigInt inv;
      if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), r.modulus().get_mpz_t()) == 0)
        throw StructuralError("denominator of " + q.get_str() + " is not a unit in " + r.to_string());
      return from_int(q.get_num() * inv, r);
    }
    case RingKind::Quotient:
      if (r.base() == RingKind::Integers)
        throw StructuralError("non-integer " + q.get_str() + " in " + r.to_string());
      return from_coefficients({q}, r);
  }
  throw StructuralError("unknown ring kind");
}

RingElement RingElement::from_coefficients(const std::vector<BigRat>& c, const RingSpec& r) {
  if (r.kind() != RingKind::Quotient) {
    if (c.size() > 1 && std::any_of(c.begin() + 1, c.end(), [](const BigRat& x) { return x != 0; }))
      throw StructuralError("polynomial coefficients given for " + r.to_string());
    return c.empty() ? zero(r) : from_rational(c.front(), r);
  }
  Residue v(c);
  for (auto& q : v) {
    if (q.get_den() == 0) throw std::domain_error("zero denominator");
    q.canonicalize();
  }
  if (r.base() == RingKind::Integers && !std::all_of(v.begin(), v.end(), is_integral))
    throw StructuralError("non-integer coefficient in " + r.to_string());
  RingElement x(r, std::move(v));
  x.normalize();
  return x;
}

RingElement RingElement::generator(const RingSpec& r) {
  if (r.kind() != RingKind::Quotient) throw StructuralError(r.to_string() + " has no generator");
  return from_coefficients({BigRat(0), BigRat(1)}, r);
}

RingElement RingElement::parse(std::string_view text, const RingSpec& r) {
  std::string_view s = strip(text);
  try {
    if (!s.empty() && s.front() == '[') {
      if (s.back() != ']') throw SpecError(0, "unterminated coefficient list");
      std::vector<BigRat> c;
      for (auto part : split_commas(s.substr(1, s.size() - 2))) c.push_back(parse_rational(part));
      return from_coefficients(c, r);
    }
    return from_rational(parse_rational(s), r);
  } catch (const StructuralError& e) {
    throw SpecError(0, e.what());
  }
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Residue>)
          return v.empty();
        else
          return v == 0;
      },
      v_);
}

bool RingElement::is_one() const { return *this == one(ring_); }

void RingElement::check_same_ring(const RingElement& o) const {
  if (!(ring_ == o.ring_))
    throw StructuralError("mixed-ring operands: " + ring_.to_string() + " and " + o.ring_.to_string());
}

RingElement RingElement::operator-() const {
  RingElement x = *this;
  std::visit(
      [](auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Residue>) {
          for (auto& c : v) c = -c;
        } else {
          v = -v;
        }
      },
      x.v_);
  x.normalize();
  return x;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        const auto& w = std::get<T>(o.v_);
        if constexpr (std::is_same_v<T, Residue>) {
          if (v.size() < w.size()) v.resize(w.size(), BigRat(0));
          for (std::size_t i = 0; i < w.size(); ++i) v[i] += w[i];
          trim(v);
        } else {
          v += w;
        }
      },
      v_);
  if (ring_.kind() == RingKind::IntegersMod) normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same_ring(o);
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        const auto& w = std::get<T>(o.v_);
        if constexpr (std::is_same_v<T, Residue>) {
          if (v.size() < w.size()) v.resize(w.size(), BigRat(0));
          for (std::size_t i = 0; i < w.size(); ++i) v[i] -= w[i];
          trim(v);
        } else {
          v -= w;
        }
      },
      v_);
  if (ring_.kind() == RingKind::IntegersMod) normalize();
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  check_same_ring(o);
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        const auto& w = std::get<T>(o.v_);
        if constexpr (std::is_same_v<T, Residue>) {
          v = poly_mul(v, w);
        } else {
          v *= w;
        }
      },
      v_);
  if (ring_.kind() != RingKind::Integers && ring_.kind() != RingKind::Rationals) normalize();
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && a.v_ == b.v_;
}

RingElement RingElement::pow(unsigned k) const {
  RingElement result = one(ring_);
  RingElement base = *this;
  while (k) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

RingElement RingElement::inverse() const {
  if (!ring_.is_field()) throw UnsupportedRingError("no inverses in non-field ring " + ring_.to_string());
  if (is_zero()) throw std::domain_error("inverse of zero");
  switch (ring_.kind()) {
    case RingKind::Rationals: return RingElement(ring_, BigRat(1) / std::get<BigRat>(v_));
    case RingKind::IntegersMod: {
      BigInt inv;
      mpz_invert(inv.get_mpz_t(), std::get<BigInt>(v_).get_mpz_t(), ring_.modulus().get_mpz_t());
      return RingElement(ring_, inv);
    }
    case RingKind::Quotient: {
      // Extended Euclid in Q[t]: s*a + t*f = g with g constant when f is irreducible.
      Residue r0 = ring_.polynomial(), r1 = std::get<Residue>(v_);
      Residue s0{}, s1{BigRat(1)};
      while (!r1.empty()) {
        Residue quot, rem;
        poly_divmod(r0, r1, quot, rem);
        Residue s2 = poly_sub(s0, poly_mul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      if (r0.size() != 1)
        throw UnsupportedRingError("element " + to_string() + " is not invertible; modulus is reducible");
      for (auto& c : s0) c /= r0[0];
      RingElement x(ring_, std::move(s0));
      x.normalize();
      return x;
    }
    case RingKind::Integers: break;
  }
  throw UnsupportedRingError("no inverse");
}

std::vector<BigRat> RingElement::coefficients() const {
  std::vector<BigRat> c(ring_.rank(), BigRat(0));
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Residue>) {
          std::copy(v.begin(), v.end(), c.begin());
        } else {
          c[0] = BigRat(v);
        }
      },
      v_);
  return c;
}

std::string RingElement::to_string() const {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Residue>) {
          std::string s = "[";
          std::size_t n = std::max<std::size_t>(v.size(), 1);
          for (std::size_t i = 0; i < n; ++i) {
            if (i) s += ',';
            s += i < v.size() ? v[i].get_str() : "0";
          }
          return s + "]";
        } else {
          return v.get_str();
        }
      },
      v_);
}

std::string RingElement::pretty() const {
  if (ring_.kind() != RingKind::Quotient) return to_string();
  const auto& v = std::get<Residue>(v_);
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    BigRat c = v[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? ring_.variable() : ring_.variable() + "^" + std::to_string(i));
    if (mono.empty())
      os << c.get_str();
    else if (c == 1)
      os << mono;
    else
      os << c.get_str() << "*" << mono;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement ring_embed_int(const BigInt& n, const RingSpec& r) { return RingElement::from_int(n, r); }

BigInt binomial(unsigned long k, unsigned long r) {
  if (r > k) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), k, r);
  return out;
}

}  // namespace hopf
