#include "hopfcheck/zoo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/spec_io.hpp"

namespace hopf {

namespace {

using Word = std::vector<int>;
using WordPair = std::pair<Word, Word>;
using WordTensor = std::map<WordPair, RingElement>;

constexpr std::size_t kMaxBasisSize = 200000;

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const RingElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// All interleavings of u and v, with repetition.
void shuffles(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& prefix, std::map<Word, long>& out) {
  if (i == u.size() && j == v.size()) {
    ++out[prefix];
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffles(u, i + 1, v, j, prefix, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffles(u, i, v, j + 1, prefix, out);
    prefix.pop_back();
  }
}

std::map<Word, long> shuffle_product(const Word& u, const Word& v) {
  std::map<Word, long> out;
  Word prefix;
  shuffles(u, 0, v, 0, prefix, out);
  return out;
}

// Words in generators of the given degrees, grouped by weight, each weight
// ordered lexicographically by generator index.
struct WordBasis {
  std::vector<std::string> letters;
  std::vector<int> degrees;
  bool joined = false;
  std::vector<Word> words;  // by LabelId
  std::map<Word, LabelId> index;
  BasisPtr basis;

  std::string label(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (joined && i) s += '.';
      s += letters[w[i]];
    }
    return s;
  }
  int weight(const Word& w) const {
    int d = 0;
    for (int g : w) d += degrees[g];
    return d;
  }
  LabelId id(const Word& w) const { return index.at(w); }
};

std::shared_ptr<WordBasis> make_word_basis(std::vector<std::string> letters, std::vector<int> degrees, int max_degree) {
  auto wb = std::make_shared<WordBasis>();
  wb->letters = std::move(letters);
  wb->degrees = std::move(degrees);
  wb->joined = std::any_of(wb->letters.begin(), wb->letters.end(), [](const auto& l) { return l.size() != 1; });
  std::vector<std::vector<Word>> by_weight(max_degree + 1);
  by_weight[0].push_back({});
  std::size_t total = 1;
  for (int d = 1; d <= max_degree; ++d) {
    for (std::size_t g = 0; g < wb->letters.size(); ++g) {
      const int dg = wb->degrees[g];
      if (dg > d) continue;
      for (const Word& rest : by_weight[d - dg]) {
        Word w{static_cast<int>(g)};
        w.insert(w.end(), rest.begin(), rest.end());
        by_weight[d].push_back(std::move(w));
        if (++total > kMaxBasisSize)
          throw ResourceGuardError("word basis exceeds " + std::to_string(kMaxBasisSize) + " labels");
      }
    }
  }
  std::vector<std::vector<std::string>> labels(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    for (Word& w : by_weight[d]) {
      labels[d].push_back(wb->label(w));
      wb->index.emplace(w, static_cast<LabelId>(wb->words.size()));
      wb->words.push_back(std::move(w));
    }
  }
  wb->basis = make_basis(std::move(labels));
  return wb;
}

Tensor2Element to_tensor(const WordBasis& wb, const RingSpec& ring, const WordTensor& t) {
  Tensor2Element out(wb.basis, ring);
  for (const auto& [k, c] : t) out.add_term(wb.id(k.first), wb.id(k.second), c);
  return out;
}

// ------------------------------------------------------------ free algebra

class FreeRule final : public StructureRule {
 public:
  FreeRule(std::shared_ptr<const WordBasis> wb, RingSpec ring, std::vector<WordTensor> generator_coproducts)
      : wb_(std::move(wb)), ring_(std::move(ring)), gen_(std::move(generator_coproducts)) {}

  Element product(LabelId left, LabelId right) const override {
    return Element::basis_vector(wb_->basis, ring_, wb_->id(concat(wb_->words[left], wb_->words[right])));
  }

  Tensor2Element coproduct(LabelId id) const override { return to_tensor(*wb_, ring_, word_coproduct(wb_->words[id])); }

  WordTensor word_coproduct(const Word& w) const { return word_coproduct(w, gen_, ring_); }

  static WordTensor word_coproduct(const Word& w, const std::vector<WordTensor>& gen, const RingSpec& ring) {
    WordTensor acc;
    acc.emplace(WordPair{}, RingElement::one(ring));
    for (int g : w) {
      WordTensor next;
      for (const auto& [k1, c1] : acc)
        for (const auto& [k2, c2] : gen[g])
          accumulate(next, WordPair{concat(k1.first, k2.first), concat(k1.second, k2.second)}, c1 * c2);
      acc = std::move(next);
    }
    return acc;
  }

 private:
  std::shared_ptr<const WordBasis> wb_;
  RingSpec ring_;
  std::vector<WordTensor> gen_;
};

bool valid_letter(const std::string& l) {
  if (l.empty() || l == "1") return false;
  if (!std::isalpha(static_cast<unsigned char>(l[0])) && l[0] != '_') return false;
  return std::all_of(l.begin(), l.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

// Checks degree, counit axioms and coassociativity of one generator's
// coproduct, given the already-accepted coproducts of every generator.
void validate_generator(const WordBasis& wb, const std::vector<WordTensor>& gen, int g, const RingSpec& ring) {
  const std::string& name = wb.letters[g];
  const Word self{g};
  WordTensor left_counit, right_counit;
  for (const auto& [k, c] : gen[g]) {
    if (wb.weight(k.first) + wb.weight(k.second) != wb.degrees[g])
      throw GeneratorError(name, "term " + wb.label(k.first) + "|" + wb.label(k.second) + " has total degree " +
                                     std::to_string(wb.weight(k.first) + wb.weight(k.second)) + ", expected " +
                                     std::to_string(wb.degrees[g]));
    if (k.first.empty()) accumulate(left_counit, WordPair{{}, k.second}, c);
    if (k.second.empty()) accumulate(right_counit, WordPair{k.first, {}}, c);
  }
  if (left_counit.size() != 1 || left_counit.begin()->first.second != self || !left_counit.begin()->second.is_one())
    throw GeneratorError(name, "(eps|id) o Delta differs from id (the term 1|" + name + " must appear exactly once)");
  if (right_counit.size() != 1 || right_counit.begin()->first.first != self || !right_counit.begin()->second.is_one())
    throw GeneratorError(name, "(id|eps) o Delta differs from id (the term " + name + "|1 must appear exactly once)");

  using Triple = std::tuple<Word, Word, Word>;
  std::map<Triple, RingElement> lhs, rhs;
  for (const auto& [k, c] : gen[g]) {
    for (const auto& [k1, c1] : FreeRule::word_coproduct(k.first, gen, ring))
      accumulate(lhs, Triple{k1.first, k1.second, k.second}, c * c1);
    for (const auto& [k2, c2] : FreeRule::word_coproduct(k.second, gen, ring))
      accumulate(rhs, Triple{k.first, k2.first, k2.second}, c * c2);
  }
  if (lhs != rhs) throw GeneratorError(name, "coproduct is not coassociative");
}

void check_free_degree(int max_degree, const ZooLimits& limits) {
  if (max_degree < 0) throw StructuralError("negative truncation degree");
  if (max_degree > limits.free_max_degree)
    throw ResourceGuardError("word algebras are limited to degree " + std::to_string(limits.free_max_degree));
}

std::vector<std::string> alphabet(int rank) {
  if (rank < 1 || rank > 26) throw StructuralError("alphabet rank must lie in [1, 26]");
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

// ---------------------------------------------------------- shuffle algebra

class ShuffleRule final : public StructureRule {
 public:
  ShuffleRule(std::shared_ptr<const WordBasis> wb, RingSpec ring) : wb_(std::move(wb)), ring_(std::move(ring)) {}

  Element product(LabelId left, LabelId right) const override {
    Element out(wb_->basis, ring_);
    for (const auto& [w, n] : shuffle_product(wb_->words[left], wb_->words[right]))
      out.add_term(wb_->id(w), RingElement::from_int(n, ring_));
    return out;
  }

  Tensor2Element coproduct(LabelId id) const override {
    const Word& w = wb_->words[id];
    Tensor2Element out(wb_->basis, ring_);
    for (std::size_t k = 0; k <= w.size(); ++k)
      out.add_term(wb_->id(Word(w.begin(), w.begin() + k)), wb_->id(Word(w.begin() + k, w.end())),
                   RingElement::one(ring_));
    return out;
  }

 private:
  std::shared_ptr<const WordBasis> wb_;
  RingSpec ring_;
};

// ------------------------------------------------------------------- FQSym

Word standardize(const Word& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r + 1);
  return out;
}

std::string permutation_label(const Word& p) {
  if (p.empty()) return "1";
  std::string s = "F";
  for (int v : p) s += std::to_string(v);
  return s;
}

class FqsymRule final : public StructureRule {
 public:
  FqsymRule(BasisPtr basis, RingSpec ring, std::vector<Word> perms, std::map<Word, LabelId> index)
      : basis_(std::move(basis)), ring_(std::move(ring)), perms_(std::move(perms)), index_(std::move(index)) {}

  Element product(LabelId left, LabelId right) const override {
    const Word& s = perms_[left];
    Word t = perms_[right];
    for (int& v : t) v += static_cast<int>(s.size());
    Element out(basis_, ring_);
    for (const auto& [w, n] : shuffle_product(s, t)) out.add_term(index_.at(w), RingElement::from_int(n, ring_));
    return out;
  }

  Tensor2Element coproduct(LabelId id) const override {
    const Word& s = perms_[id];
    Tensor2Element out(basis_, ring_);
    for (std::size_t k = 0; k <= s.size(); ++k)
      out.add_term(index_.at(standardize(Word(s.begin(), s.begin() + k))),
                   index_.at(standardize(Word(s.begin() + k, s.end()))), RingElement::one(ring_));
    return out;
  }

 private:
  BasisPtr basis_;
  RingSpec ring_;
  std::vector<Word> perms_;
  std::map<Word, LabelId> index_;
};

// -------------------------------------------------------------------- Taft

class TaftRule final : public StructureRule {
 public:
  TaftRule(unsigned n, BasisPtr basis, RingSpec ring) : n_(n), basis_(std::move(basis)), ring_(std::move(ring)) {
    q_ = RingElement::generator(ring_);
  }

  LabelId id(unsigned i, unsigned j) const { return static_cast<LabelId>(j * n_ + i); }

  // (a^i x^j)(a^k x^l) = q^{jk} a^{i+k} x^{j+l}, zero once j + l >= n.
  Element product(LabelId left, LabelId right) const override {
    const unsigned i = left % n_, j = left / n_, k = right % n_, l = right / n_;
    if (j + l >= n_) return Element(basis_, ring_);
    return Element::term(basis_, q_.pow((j * k) % n_), id((i + k) % n_, j + l));
  }

  Element mul(const Element& x, const Element& y) const {
    Element r(basis_, ring_);
    for (const auto& [a, c] : x.terms())
      for (const auto& [b, d] : y.terms()) r.add_scaled(c * d, product(a, b));
    return r;
  }

  Tensor2Element mul(const Tensor2Element& s, const Tensor2Element& t) const {
    Tensor2Element r(basis_, ring_);
    for (const auto& [k1, c1] : s.terms())
      for (const auto& [k2, c2] : t.terms())
        r += c1 * c2 * tensor_of(product(k1.first, k2.first), product(k1.second, k2.second));
    return r;
  }

  // Delta(a^i x^j) = (a^i|a^i)(x|a + 1|x)^j
  Tensor2Element coproduct(LabelId label) const override {
    const unsigned i = label % n_, j = label / n_;
    Tensor2Element t = Tensor2Element::pure(basis_, ring_, id(i, 0), id(i, 0));
    Tensor2Element dx = Tensor2Element::pure(basis_, ring_, id(0, 1), id(1, 0)) +
                        Tensor2Element::pure(basis_, ring_, id(0, 0), id(0, 1));
    for (unsigned s = 0; s < j; ++s) t = mul(t, dx);
    return t;
  }

  // S(a^i x^j) = S(x)^j S(a)^i with S(a) = a^{n-1}, S(x) = -x a^{n-1}.
  std::vector<Element> antipode() const {
    const Element sx = -product(id(0, 1), id(n_ - 1, 0));
    std::vector<Element> out;
    for (unsigned j = 0; j < n_; ++j) {
      for (unsigned i = 0; i < n_; ++i) {
        Element s = Element::basis_vector(basis_, ring_, id(0, 0));
        for (unsigned t = 0; t < j; ++t) s = mul(s, sx);
        out.push_back(mul(s, Element::basis_vector(basis_, ring_, id((n_ - i) % n_, 0))));
      }
    }
    return out;
  }

 private:
  unsigned n_;
  BasisPtr basis_;
  RingSpec ring_;
  RingElement q_ = RingElement::zero(RingSpec::integers());
};

}  // namespace

HopfPtr free_bialgebra(const std::vector<FreeGenerator>& generators, const RingSpec& ring, int max_degree,
                       std::string name, const ZooLimits& limits) {
  check_free_degree(max_degree, limits);
  if (generators.empty()) throw ConstructionError("free bialgebra needs at least one generator");
  std::vector<std::string> letters;
  std::vector<int> degrees;
  for (const auto& g : generators) {
    if (!valid_letter(g.label)) throw GeneratorError(g.label, "invalid generator label");
    if (std::find(letters.begin(), letters.end(), g.label) != letters.end())
      throw GeneratorError(g.label, "duplicate generator label");
    if (g.degree < 1) throw GeneratorError(g.label, "generator degree must be positive");
    if (g.degree > max_degree)
      throw GeneratorError(g.label, "generator degree exceeds the truncation degree " + std::to_string(max_degree));
    letters.push_back(g.label);
    degrees.push_back(g.degree);
  }
  auto wb = make_word_basis(letters, degrees, max_degree);

  std::vector<WordTensor> gen(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Word self{static_cast<int>(g)};
    if (generators[g].coproduct.empty()) {
      accumulate(gen[g], WordPair{self, {}}, RingElement::one(ring));
      accumulate(gen[g], WordPair{{}, self}, RingElement::one(ring));
      continue;
    }
    Tensor2Element t(wb->basis, ring);
    try {
      t = parse_tensor(generators[g].coproduct, wb->basis, ring);
    } catch (const SpecError& e) {
      throw GeneratorError(generators[g].label, e.what());
    } catch (const StructuralError& e) {
      throw GeneratorError(generators[g].label, e.what());
    }
    for (const auto& [k, c] : t.terms()) gen[g].emplace(WordPair{wb->words[k.first], wb->words[k.second]}, c);
  }
  for (std::size_t g = 0; g < generators.size(); ++g) validate_generator(*wb, gen, static_cast<int>(g), ring);

  HopfPresentation::Parts parts;
  parts.name = std::move(name);
  parts.basis = wb->basis;
  parts.ring = ring;
  parts.rule = std::make_shared<FreeRule>(wb, ring, std::move(gen));
  parts.unit = wb->id({});
  parts.counit = {RingElement::one(ring)};
  parts.generators = generators;
  return std::make_shared<HopfPresentation>(std::move(parts));
}

HopfPtr free_example_abc(const RingSpec& ring, int max_degree, const ZooLimits& limits) {
  if (max_degree < 2) throw ConstructionError("the a,b,c example needs truncation degree >= 2");
  return free_bialgebra({{"a", 1, ""}, {"b", 1, ""}, {"c", 2, "c|1 + a|b + 1|c"}}, ring, max_degree, "abc", limits);
}

HopfPtr tensor_algebra(int rank, const RingSpec& ring, int max_degree, const ZooLimits& limits) {
  std::vector<FreeGenerator> gens;
  for (auto& l : alphabet(rank)) gens.push_back({l, 1, ""});
  return free_bialgebra(gens, ring, max_degree, "tensor:" + std::to_string(rank), limits);
}

HopfPtr shuffle_algebra(int rank, const RingSpec& ring, int max_degree, const ZooLimits& limits) {
  check_free_degree(max_degree, limits);
  auto letters = alphabet(rank);
  auto wb = make_word_basis(letters, std::vector<int>(letters.size(), 1), max_degree);
  HopfPresentation::Parts parts;
  parts.name = "shuffle:" + std::to_string(rank);
  parts.basis = wb->basis;
  parts.ring = ring;
  parts.rule = std::make_shared<ShuffleRule>(wb, ring);
  parts.unit = wb->id({});
  parts.counit = {RingElement::one(ring)};
  return std::make_shared<HopfPresentation>(std::move(parts));
}

HopfPtr fqsym(const RingSpec& ring, int max_degree, const ZooLimits& limits) {
  if (max_degree < 0) throw StructuralError("negative truncation degree");
  if (max_degree > limits.fqsym_max_degree)
    throw ResourceGuardError("FQSym is limited to degree " + std::to_string(limits.fqsym_max_degree));
  std::vector<Word> perms;
  std::map<Word, LabelId> index;
  std::vector<std::vector<std::string>> labels(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) {
    Word p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      labels[n].push_back(permutation_label(p));
      index.emplace(p, static_cast<LabelId>(perms.size()));
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto basis = make_basis(std::move(labels));
  HopfPresentation::Parts parts;
  parts.name = "fqsym";
  parts.basis = basis;
  parts.ring = ring;
  parts.rule = std::make_shared<FqsymRule>(basis, ring, std::move(perms), std::move(index));
  parts.unit = 0;
  parts.counit = {RingElement::one(ring)};
  return std::make_shared<HopfPresentation>(std::move(parts));
}

std::string taft_label(unsigned i, unsigned j) {
  if (i == 0 && j == 0) return "1";
  std::string s;
  if (i) s += "a" + (i > 1 ? std::to_string(i) : std::string());
  if (j) s += "x" + (j > 1 ? std::to_string(j) : std::string());
  return s;
}

HopfPtr taft(unsigned n, const ZooLimits& limits) {
  if (n < 2 || mpz_probab_prime_p(BigInt(n).get_mpz_t(), 25) == 0)
    throw UnsupportedError("Taft algebra needs a prime order, got " + std::to_string(n));
  if (n > limits.taft_max_order)
    throw ResourceGuardError("Taft algebra is limited to order " + std::to_string(limits.taft_max_order));
  const RingSpec ring = RingSpec::cyclotomic(n);
  std::vector<std::vector<std::string>> labels(n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) labels[j].push_back(taft_label(i, j));
  auto basis = make_basis(std::move(labels));
  auto rule = std::make_shared<TaftRule>(n, basis, ring);
  HopfPresentation::Parts parts;
  parts.name = "taft:" + std::to_string(n);
  parts.basis = basis;
  parts.ring = ring;
  parts.rule = rule;
  parts.unit = 0;
  parts.counit.assign(n, RingElement::one(ring));
  parts.complete = true;
  parts.antipode = rule->antipode();
  return std::make_shared<HopfPresentation>(std::move(parts));
}

std::vector<std::string> zoo_names() { return {"abc", "tensor", "shuffle", "fqsym", "taft"}; }

HopfPtr make_zoo(const std::string& selector, const RingSpec& ring, int max_degree, const ZooLimits& limits) {
  const auto colon = selector.find(':');
  const std::string name = selector.substr(0, colon);
  std::optional<int> param;
  if (colon != std::string::npos) {
    const std::string text = selector.substr(colon + 1);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        text.size() > 6)
      throw StructuralError("bad parameter in algebra selector '" + selector + "'");
    param = std::stoi(text);
  }
  if (name == "abc" || name == "fqsym") {
    if (param) throw StructuralError("'" + name + "' takes no parameter");
    return name == "abc" ? free_example_abc(ring, max_degree, limits) : fqsym(ring, max_degree, limits);
  }
  if (name == "tensor") return tensor_algebra(param.value_or(2), ring, max_degree, limits);
  if (name == "shuffle") return shuffle_algebra(param.value_or(2), ring, max_degree, limits);
  if (name == "taft") return taft(static_cast<unsigned>(param.value_or(3)), limits);
  throw StructuralError("unknown algebra '" + name + "'");
}

}  // namespace hopf
