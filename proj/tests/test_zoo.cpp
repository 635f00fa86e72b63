#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace hopf;
using support::parse;
using support::parse2;

TEST(Abc, DegreeTwoBasis) {
  auto h = free_example_abc(RingSpec::integers(), 3);
  std::vector<std::string> labels;
  for (LabelId id : h->basis()->in_degree(2)) labels.push_back(h->basis()->label(id));
  EXPECT_EQ(labels, (std::vector<std::string>{"aa", "ab", "ba", "bb", "c"}));
}

TEST(Abc, WordCounts) {
  auto h = free_example_abc(RingSpec::integers(), 7);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(long(h->basis()->rank(n)), oracle::count_words({1, 1, 2}, n)) << n;
}

TEST(Abc, NeedsDegreeTwo) { EXPECT_ANY_THROW(free_example_abc(RingSpec::integers(), 1)); }

TEST(Abc, GoldenAntipode) {
  auto h = free_example_abc(RingSpec::integers(), 2);
  const GradedMap& s = h->antipode();
  EXPECT_EQ(s(h->vec("c")), parse(*h, "ab - c"));
  EXPECT_EQ(h->vec("c") - s(s(h->vec("c"))), parse(*h, "ab - ba"));
}

TEST(WordAlgebras, Ranks) {
  const RingSpec z = RingSpec::integers();
  for (int r : {1, 2, 3}) {
    auto t = tensor_algebra(r, z, 4);
    auto s = shuffle_algebra(r, z, 4);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(long(t->basis()->rank(n)), oracle::count_words(std::vector<int>(r, 1), n));
      EXPECT_EQ(t->basis()->rank(n), s->basis()->rank(n));
    }
  }
}

TEST(WordAlgebras, TensorAntipodeByHand) {
  auto h = tensor_algebra(3, RingSpec::integers(), 3);
  EXPECT_EQ(h->antipode()(h->vec("ab")), h->vec("ba"));
  EXPECT_EQ(h->antipode()(h->vec("abc")), -h->vec("cba"));
}

TEST(WordAlgebras, ShuffleStructure) {
  auto h = shuffle_algebra(2, RingSpec::integers(), 4);
  EXPECT_EQ(h->product(h->vec("a"), h->vec("b")), parse(*h, "ab + ba"));
  EXPECT_EQ(h->product(h->vec("a"), h->vec("a")), parse(*h, "2*aa"));
  EXPECT_EQ(h->product(h->vec("ab"), h->vec("a")), parse(*h, "2*aab + aba"));
  EXPECT_EQ(h->coproduct(h->vec("ab")), parse2(*h, "ab|1 + a|b + 1|ab"));
  const auto& b = *h->basis();
  for (LabelId id = 1; id < b.size(); ++id) {
    const std::string w = b.label(id);
    Element expect = h->vec(std::string(w.rbegin(), w.rend()));
    if (w.size() % 2) expect = -expect;
    EXPECT_EQ(h->antipode()(h->vec(id)), expect) << w;
  }
  EXPECT_EQ(antipode_power(*h, 2), GradedMap::identity(h->basis(), h->ring()));
}

TEST(WordAlgebras, TensorSquaredAntipodeIsIdentity) {
  auto h = tensor_algebra(2, RingSpec::integers(), 5);
  EXPECT_EQ(antipode_power(*h, 2), GradedMap::identity(h->basis(), h->ring()));
}

TEST(Fqsym, RanksAreFactorials) {
  auto h = fqsym(RingSpec::integers(), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(long(h->basis()->rank(n)), oracle::factorial(n));
  EXPECT_EQ(h->basis()->rank(1), 1u);
}

TEST(Fqsym, ProductMatchesRestrictionOracle) {
  auto h = fqsym(RingSpec::integers(), 5);
  std::vector<oracle::Perm> perms;
  for (int n = 1; n <= 4; ++n) {
    oracle::Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  for (const auto& s : perms)
    for (const auto& t : perms) {
      if (s.size() + t.size() > 5) continue;
      Element expect = h->zero();
      for (const auto& [w, c] : oracle::fqsym_product(s, t)) expect.add_term(h->basis()->at(oracle::fqsym_label(w)), h->scalar(c));
      EXPECT_EQ(h->product(h->vec(oracle::fqsym_label(s)), h->vec(oracle::fqsym_label(t))), expect)
          << oracle::fqsym_label(s) << " * " << oracle::fqsym_label(t);
    }
}

TEST(Fqsym, CoproductByHand) {
  auto h = fqsym(RingSpec::integers(), 4);
  EXPECT_EQ(h->coproduct(h->vec("F21")), parse2(*h, "F21|1 + F1|F1 + 1|F21"));
  EXPECT_EQ(h->coproduct(h->vec("F231")), parse2(*h, "F231|1 + F12|F1 + F1|F21 + 1|F231"));
  EXPECT_EQ(h->coproduct(h->vec("F3142")), parse2(*h, "F3142|1 + F213|F1 + F21|F21 + F1|F132 + 1|F3142"));
}

TEST(Fqsym, ResourceGuard) {
  EXPECT_THROW(fqsym(RingSpec::integers(), 7), ResourceGuardError);
  ZooLimits tight;
  tight.fqsym_max_degree = 3;
  EXPECT_THROW(fqsym(RingSpec::integers(), 4, tight), ResourceGuardError);
}

TEST(Taft, BasisAndLabels) {
  auto h = taft(3);
  EXPECT_EQ(h->basis()->size(), 9u);
  EXPECT_EQ(h->max_degree(), 2);
  EXPECT_EQ(taft_label(0, 0), "1");
  EXPECT_EQ(taft_label(2, 0), "a2");
  EXPECT_EQ(taft_label(1, 1), "ax");
  EXPECT_EQ(taft_label(2, 2), "a2x2");
  EXPECT_TRUE(h->complete());
  EXPECT_FALSE(is_connected(*h));
}

TEST(Taft, Relations) {
  auto h = taft(3);
  const RingElement q = RingElement::generator(h->ring());
  EXPECT_EQ(h->product(h->vec("x"), h->vec("a")), q * h->vec("ax"));
  EXPECT_EQ(h->product(h->vec("a2"), h->vec("a")), h->unit());
  EXPECT_TRUE(h->product(h->vec("x2"), h->vec("x")).is_zero());
  EXPECT_EQ(h->coproduct(h->vec("x")), parse2(*h, "[1]*x|a + [1]*1|x"));
}

TEST(Taft, SquaredAntipodeScalesX) {
  auto h = taft(3);
  const RingElement q = RingElement::generator(h->ring());
  const GradedMap s2 = antipode_power(*h, 2);
  EXPECT_EQ(s2(h->vec("a")), h->vec("a"));
  EXPECT_EQ(s2(h->vec("x")), q.pow(2) * h->vec("x"));
  EXPECT_EQ(antipode_power(*h, 6), GradedMap::identity(h->basis(), h->ring()));
  EXPECT_TRUE(verify_antipode_axioms(*h, h->antipode(), h->max_degree()).ok());
}

TEST(Taft, Guards) {
  EXPECT_THROW(taft(4), UnsupportedError);
  EXPECT_THROW(taft(1), UnsupportedError);
  EXPECT_THROW(taft(13), ResourceGuardError);
  EXPECT_NO_THROW(taft(11));
}

TEST(FreeBialgebra, RejectsBadGenerators) {
  const RingSpec z = RingSpec::integers();
  const FreeGenerator a{"a", 1, ""}, b{"b", 1, ""}, c{"c", 2, "c|1 + a|b + 1|c"};
  EXPECT_NO_THROW(free_bialgebra({a, b, c}, z, 3));

  try {
    free_bialgebra({a, b, {"c", 2, "c|1 + a|b"}}, z, 3);
    FAIL() << "counit violation accepted";
  } catch (const GeneratorError& e) {
    EXPECT_EQ(e.generator(), "c");
  }
  EXPECT_THROW(free_bialgebra({a, b, {"c", 2, "c|1 + a|1 + 1|c"}}, z, 3), GeneratorError);
  // (Delta|id)(a|c) != (id|Delta)(a|c)
  EXPECT_THROW(free_bialgebra({a, b, c, {"e", 3, "e|1 + a|c + 1|e"}}, z, 3), GeneratorError);
  EXPECT_THROW(free_bialgebra({a, b, c}, z, 9), ResourceGuardError);
}

TEST(FreeBialgebra, MatchesBuiltinAbc) {
  const RingSpec z = RingSpec::integers();
  auto built = free_bialgebra({{"a", 1, ""}, {"b", 1, ""}, {"c", 2, "c|1 + a|b + 1|c"}}, z, 4, "abc");
  EXPECT_TRUE(support::same_structure(*built, *free_example_abc(z, 4)));
}

TEST(FreeBialgebra, MultiCharacterLabelsAreDotted) {
  auto h = free_bialgebra({{"u1", 1, ""}, {"u2", 1, ""}}, RingSpec::integers(), 2, "dots");
  EXPECT_TRUE(h->basis()->find("u1.u2"));
  EXPECT_EQ(h->antipode()(h->vec("u1.u2")), h->vec("u2.u1"));
}

TEST(Selector, MakeZoo) {
  const RingSpec z = RingSpec::integers();
  EXPECT_EQ(make_zoo("tensor:3", z, 2)->basis()->rank(1), 3u);
  EXPECT_EQ(make_zoo("tensor", z, 2)->basis()->rank(1), 2u);
  EXPECT_EQ(make_zoo("taft:5", z, 2)->basis()->size(), 25u);
  EXPECT_EQ(make_zoo("abc", z, 3)->name(), "abc");
  EXPECT_ANY_THROW(make_zoo("nope", z, 3));
  EXPECT_ANY_THROW(make_zoo("tensor:x", z, 3));
  EXPECT_EQ(zoo_names().size(), 5u);
}
