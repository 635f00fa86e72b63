#include "hopfcheck/spec_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/zoo.hpp"

namespace hopf {

namespace {

bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

bool valid_label(std::string_view l) {
  if (l == "1") return true;
  if (l.empty() || !(std::isalpha(static_cast<unsigned char>(l[0])) || l[0] == '_')) return false;
  for (char c : l)
    if (!label_char(c)) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Recursive-descent reader for `[sign] [coeff*] label[|label]` sums.
class TermReader {
 public:
  TermReader(std::string_view text, const BasisPtr& basis, const RingSpec& ring)
      : s_(text), basis_(basis), ring_(ring) {}

  template <class Emit>
  void read(bool tensor, Emit emit) {
    skip();
    if (trim(s_.substr(pos_)) == "0") return;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) {
        if (first) fail("empty sum");
        return;
      }
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RingElement c = RingElement::one(ring_);
      std::string head;
      if (pos_ < s_.size() && s_[pos_] == '[') {
        auto close = s_.find(']', pos_);
        if (close == std::string_view::npos) fail("missing ']'");
        head = std::string(s_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
        skip();
        if (pos_ == s_.size() || s_[pos_] != '*') fail("expected '*' after coefficient");
      } else {
        head = run([](char ch) { return label_char(ch) || ch == '/'; });
        skip();
      }
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        c = coefficient(head);
        skip();
        head = run(label_char);
      }
      if (negative) c = -c;
      LabelId left = label(head);
      if (!tensor) {
        emit(c, left, left);
        continue;
      }
      skip();
      if (pos_ == s_.size() || s_[pos_] != '|') fail("expected '|' after '" + head + "'");
      ++pos_;
      skip();
      LabelId right = label(run(label_char));
      emit(c, left, right);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError(0, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  template <class Pred>
  std::string run(Pred pred) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && pred(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  RingElement coefficient(const std::string& text) const {
    if (text.empty()) fail("missing coefficient");
    try {
      return RingElement::parse(text, ring_);
    } catch (const SpecError& e) {
      fail(std::string("bad coefficient '") + text + "': " + e.what());
    } catch (const StructuralError& e) {
      fail(std::string("bad coefficient '") + text + "': " + e.what());
    }
  }
  LabelId label(const std::string& text) const {
    if (text.empty()) fail("missing label");
    if (auto id = basis_->find(text)) return *id;
    fail("unknown label '" + text + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const BasisPtr& basis_;
  const RingSpec& ring_;
};

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;  // text after the keyword
};

// "lhs = rhs" -> {lhs, rhs}; rhs absent when there is no '='.
std::pair<std::string, std::optional<std::string>> split_eq(const Line& l) {
  auto eq = l.rest.find('=');
  if (eq == std::string::npos) return {std::string(trim(l.rest)), std::nullopt};
  return {std::string(trim(std::string_view(l.rest).substr(0, eq))),
          std::string(trim(std::string_view(l.rest).substr(eq + 1)))};
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int parse_int(const Line& l, const std::string& text) {
  if (text.empty() || text.size() > 6 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SpecError(l.number, "expected a non-negative integer, got '" + text + "'");
  return std::stoi(text);
}

template <class F>
auto at_line(std::size_t line, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError& e) {
    if (e.line() != 0) throw;
    throw SpecError(line, e.what());
  } catch (const StructuralError& e) {
    throw SpecError(line, e.what());
  }
}

HopfPtr build_free(const std::string& name, const RingSpec& ring, int max_degree, const std::vector<Line>& body) {
  std::vector<FreeGenerator> gens;
  std::map<std::string, std::size_t> line_of;
  for (const auto& l : body) {
    if (l.keyword != "generator") throw SpecError(l.number, "unexpected '" + l.keyword + "' in a generator spec");
    auto [lhs, rhs] = split_eq(l);
    auto w = words(lhs);
    if (w.size() != 2) throw SpecError(l.number, "expected 'generator <label> <degree> [= <coproduct>]'");
    if (line_of.count(w[0])) throw SpecError(l.number, "duplicate label '" + w[0] + "'");
    line_of[w[0]] = l.number;
    gens.push_back({w[0], parse_int(l, w[1]), rhs.value_or("")});
  }
  if (gens.empty()) throw SpecError(0, "generator spec lists no generators");
  try {
    return free_bialgebra(gens, ring, max_degree, name);
  } catch (const GeneratorError& e) {
    auto it = line_of.find(e.generator());
    throw SpecError(it == line_of.end() ? 0 : it->second, e.what());
  }
}

HopfPtr build_table(const std::string& name, const RingSpec& ring, int max_degree, const std::vector<Line>& body) {
  bool complete = false;
  std::optional<std::string> unit_label;
  std::size_t unit_line = 0;
  std::vector<std::vector<std::string>> labels(max_degree + 1);
  std::vector<bool> seen_degree(max_degree + 1, false);
  std::map<std::string, std::size_t> label_line;
  std::vector<const Line*> structure;

  for (const auto& l : body) {
    if (l.keyword == "complete") {
      auto w = words(l.rest);
      if (w.size() != 1 || (w[0] != "yes" && w[0] != "no")) throw SpecError(l.number, "expected 'complete yes|no'");
      complete = w[0] == "yes";
    } else if (l.keyword == "unit") {
      auto w = words(l.rest);
      if (w.size() != 1) throw SpecError(l.number, "expected 'unit <label>'");
      unit_label = w[0];
      unit_line = l.number;
    } else if (l.keyword == "basis") {
      auto colon = l.rest.find(':');
      if (colon == std::string::npos) throw SpecError(l.number, "expected 'basis <degree> : <labels>'");
      const int d = parse_int(l, std::string(trim(std::string_view(l.rest).substr(0, colon))));
      if (d > max_degree) throw SpecError(l.number, "basis degree exceeds maxdeg");
      if (seen_degree[d]) throw SpecError(l.number, "degree " + std::to_string(d) + " listed twice");
      seen_degree[d] = true;
      for (auto& lab : words(std::string_view(l.rest).substr(colon + 1))) {
        if (!valid_label(lab)) throw SpecError(l.number, "invalid label '" + lab + "'");
        if (!label_line.emplace(lab, l.number).second) throw SpecError(l.number, "duplicate label '" + lab + "'");
        labels[d].push_back(lab);
      }
    } else if (l.keyword == "counit" || l.keyword == "product" || l.keyword == "coproduct" ||
               l.keyword == "antipode") {
      structure.push_back(&l);
    } else {
      throw SpecError(l.number, "unexpected '" + l.keyword + "' in a table spec");
    }
  }

  auto basis = make_basis(std::move(labels));
  auto lookup = [&](const Line& l, const std::string& lab) {
    auto id = basis->find(lab);
    if (!id) throw SpecError(l.number, "unknown label '" + lab + "'");
    return *id;
  };
  const LabelId unit = unit_label ? lookup(Line{unit_line, "", ""}, *unit_label) : lookup(Line{0, "", ""}, "1");

  std::map<LabelId, RingElement> counit;
  std::map<LabelPair, Element> products;
  std::vector<std::optional<Tensor2Element>> coproducts(basis->size());
  std::vector<std::optional<Element>> antipode(basis->size());
  bool any_antipode = false;

  for (const Line* lp : structure) {
    const Line& l = *lp;
    auto [lhs, rhs] = split_eq(l);
    if (!rhs) throw SpecError(l.number, "expected '='");
    auto w = words(lhs);
    if (l.keyword == "product") {
      if (w.size() != 2) throw SpecError(l.number, "expected 'product <label> <label> = <sum>'");
      const LabelId a = lookup(l, w[0]), b = lookup(l, w[1]);
      const int d = basis->degree(a) + basis->degree(b);
      if (!complete && d > max_degree) throw SpecError(l.number, "product past the truncation degree");
      Element v = at_line(l.number, [&] { return parse_element(*rhs, basis, ring); });
      for (const auto& [id, c] : v.terms())
        if (basis->degree(id) != d)
          throw SpecError(l.number, "product term '" + basis->label(id) + "' has degree " +
                                        std::to_string(basis->degree(id)) + ", expected " + std::to_string(d));
      if (!products.emplace(LabelPair{a, b}, std::move(v)).second)
        throw SpecError(l.number, "product " + w[0] + " " + w[1] + " given twice");
      continue;
    }
    if (w.size() != 1) throw SpecError(l.number, "expected '" + l.keyword + " <label> = ...'");
    const LabelId id = lookup(l, w[0]);
    const int d = basis->degree(id);
    if (l.keyword == "counit") {
      if (d != 0) throw SpecError(l.number, "counit given on a label of positive degree");
      RingElement c = at_line(l.number, [&] { return RingElement::parse(*rhs, ring); });
      if (!counit.emplace(id, c).second) throw SpecError(l.number, "counit of '" + w[0] + "' given twice");
    } else if (l.keyword == "coproduct") {
      Tensor2Element t = at_line(l.number, [&] { return parse_tensor(*rhs, basis, ring); });
      for (const auto& [k, c] : t.terms()) {
        const int td = basis->degree(k.first) + basis->degree(k.second);
        if (td != d)
          throw SpecError(l.number, "coproduct of '" + w[0] + "' has a term of total degree " + std::to_string(td) +
                                        ", expected " + std::to_string(d));
      }
      if (coproducts[id]) throw SpecError(l.number, "coproduct of '" + w[0] + "' given twice");
      coproducts[id] = std::move(t);
    } else {
      Element v = at_line(l.number, [&] { return parse_element(*rhs, basis, ring); });
      if (antipode[id]) throw SpecError(l.number, "antipode of '" + w[0] + "' given twice");
      antipode[id] = std::move(v);
      any_antipode = true;
    }
  }

  HopfPresentation::Parts parts;
  parts.name = name;
  parts.basis = basis;
  parts.ring = ring;
  parts.unit = unit;
  parts.complete = complete;
  for (LabelId id : basis->in_degree(0)) {
    auto it = counit.find(id);
    if (it == counit.end()) throw SpecError(0, "counit of degree-0 label '" + basis->label(id) + "' missing");
    parts.counit.push_back(it->second);
  }
  std::vector<Tensor2Element> cop;
  for (LabelId id = 0; id < basis->size(); ++id) {
    if (!coproducts[id]) throw SpecError(0, "coproduct of '" + basis->label(id) + "' missing");
    cop.push_back(std::move(*coproducts[id]));
  }
  if (any_antipode) {
    std::vector<Element> s;
    for (LabelId id = 0; id < basis->size(); ++id) {
      if (!antipode[id]) throw SpecError(0, "antipode of '" + basis->label(id) + "' missing");
      s.push_back(std::move(*antipode[id]));
    }
    parts.antipode = std::move(s);
  }
  parts.rule = std::make_shared<TableRule>(basis, ring, std::move(products), std::move(cop));
  try {
    return std::make_shared<HopfPresentation>(std::move(parts));
  } catch (const ConstructionError& e) {
    throw SpecError(0, e.what());
  }
}

}  // namespace

Element parse_element(std::string_view text, const BasisPtr& basis, const RingSpec& ring) {
  Element out(basis, ring);
  TermReader(text, basis, ring).read(false, [&](const RingElement& c, LabelId id, LabelId) { out.add_term(id, c); });
  return out;
}

Tensor2Element parse_tensor(std::string_view text, const BasisPtr& basis, const RingSpec& ring) {
  Tensor2Element out(basis, ring);
  TermReader(text, basis, ring).read(true, [&](const RingElement& c, LabelId a, LabelId b) { out.add_term(a, b, c); });
  return out;
}

HopfPtr parse_spec(std::istream& in, const SpecOverrides& overrides) {
  std::vector<Line> lines;
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    auto sp = t.find_first_of(" \t");
    Line l{number, std::string(t.substr(0, sp)), sp == std::string_view::npos ? "" : std::string(t.substr(sp + 1))};
    lines.push_back(std::move(l));
  }
  if (lines.empty() || lines.front().keyword != "hopf-spec" || trim(lines.front().rest) != "1")
    throw SpecError(lines.empty() ? 1 : lines.front().number, "expected header 'hopf-spec 1'");

  std::string name = "spec";
  std::optional<RingSpec> ring;
  std::optional<int> max_degree;
  std::optional<std::string> kind;
  std::size_t kind_line = 0;
  std::vector<Line> body;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (kind) {
      body.push_back(l);
    } else if (l.keyword == "name") {
      name = std::string(trim(l.rest));
      if (name.empty()) throw SpecError(l.number, "empty name");
    } else if (l.keyword == "ring") {
      ring = at_line(l.number, [&] { return RingSpec::parse(l.rest); });
    } else if (l.keyword == "maxdeg") {
      max_degree = parse_int(l, std::string(trim(l.rest)));
    } else if (l.keyword == "free" || l.keyword == "table") {
      if (!trim(l.rest).empty()) throw SpecError(l.number, "unexpected text after '" + l.keyword + "'");
      kind = l.keyword;
      kind_line = l.number;
    } else {
      throw SpecError(l.number, "unexpected '" + l.keyword + "' before 'free' or 'table'");
    }
  }
  if (!kind) throw SpecError(0, "missing 'free' or 'table' section");
  if (!ring) throw SpecError(kind_line, "missing 'ring' line");
  if (!max_degree) throw SpecError(kind_line, "missing 'maxdeg' line");

  if (*kind == "free") {
    return build_free(name, overrides.ring.value_or(*ring), overrides.max_degree.value_or(*max_degree), body);
  }
  if ((overrides.ring && !(*overrides.ring == *ring)) || (overrides.max_degree && *overrides.max_degree != *max_degree))
    throw SpecError(kind_line, "ring and degree overrides apply to generator specs only");
  return build_table(name, *ring, *max_degree, body);
}

HopfPtr parse_spec_text(const std::string& text, const SpecOverrides& overrides) {
  std::istringstream in(text);
  return parse_spec(in, overrides);
}

HopfPtr parse_spec_file(const std::string& path, const SpecOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw SpecError(0, "cannot open spec file '" + path + "'");
  return parse_spec(in, overrides);
}

std::string export_spec(const HopfPresentation& h) {
  std::ostringstream os;
  const auto& b = *h.basis();
  os << "hopf-spec 1\n";
  os << "name " << h.name() << "\n";
  os << "ring " << h.ring().to_string() << "\n";
  os << "maxdeg " << h.max_degree() << "\n";
  if (h.generators()) {
    os << "free\n";
    for (const auto& g : *h.generators()) {
      os << "generator " << g.label << " " << g.degree;
      if (!g.coproduct.empty()) os << " = " << g.coproduct;
      os << "\n";
    }
    return os.str();
  }
  os << "table\n";
  os << "complete " << (h.complete() ? "yes" : "no") << "\n";
  os << "unit " << b.label(h.unit_label()) << "\n";
  for (int d = 0; d <= b.max_degree(); ++d) {
    os << "basis " << d << " :";
    for (LabelId id : b.in_degree(d)) os << " " << b.label(id);
    os << "\n";
  }
  for (LabelId id : b.in_degree(0)) os << "counit " << b.label(id) << " = " << h.counit(id).to_string() << "\n";
  for (LabelId l = 0; l < b.size(); ++l) {
    for (LabelId r = 0; r < b.size(); ++r) {
      if (!h.product_in_range(l, r)) continue;
      const Element& v = h.product(l, r);
      if (v.is_zero()) continue;
      os << "product " << b.label(l) << " " << b.label(r) << " = " << v.to_string() << "\n";
    }
  }
  for (LabelId id = 0; id < b.size(); ++id) os << "coproduct " << b.label(id) << " = " << h.coproduct(id).to_string() << "\n";
  if (const auto& s = h.explicit_antipode())
    for (LabelId id = 0; id < b.size(); ++id) os << "antipode " << b.label(id) << " = " << (*s)[id].to_string() << "\n";
  return os.str();
}

}  // namespace hopf
