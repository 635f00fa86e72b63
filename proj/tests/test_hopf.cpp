#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace hopf;
using support::parse;
using support::parse2;

namespace {

HopfPtr abc(int n = 5, RingSpec r = RingSpec::integers()) { return free_example_abc(r, n); }

}  // namespace

TEST(Structure, AbcProductsAndCoproducts) {
  auto h = abc();
  EXPECT_EQ(h->product(h->vec("a"), h->vec("b")), h->vec("ab"));
  EXPECT_EQ(h->product(h->vec("c"), h->vec("a")), h->vec("ca"));
  EXPECT_EQ(h->product(h->unit(), h->vec("c")), h->vec("c"));
  EXPECT_EQ(h->coproduct(h->vec("c")), parse2(*h, "c|1 + a|b + 1|c"));
  EXPECT_EQ(h->coproduct(h->vec("a")), parse2(*h, "a|1 + 1|a"));
  EXPECT_TRUE(h->counit(h->basis()->at("a")).is_zero());
  EXPECT_TRUE(h->counit(h->basis()->at("c")).is_zero());
  EXPECT_TRUE(h->counit(h->unit()).is_one());
  // Delta(ab) = (a|1 + 1|a)(b|1 + 1|b)
  EXPECT_EQ(h->coproduct(h->vec("ab")), parse2(*h, "ab|1 + a|b + b|a + 1|ab"));
}

TEST(Structure, FqsymDegreeOneProduct) {
  auto h = fqsym(RingSpec::integers(), 3);
  EXPECT_EQ(h->product(h->vec("F1"), h->vec("F1")), parse(*h, "F12 + F21"));
}

TEST(Structure, TruncationRaises) {
  auto h = abc(3);
  EXPECT_FALSE(h->product_in_range(h->basis()->at("c"), h->basis()->at("c")));
  EXPECT_THROW(h->product(h->vec("c"), h->vec("c")), TruncationError);
  EXPECT_NO_THROW(h->product(h->vec("c"), h->vec("a")));
}

TEST(Structure, MultiplyTensor) {
  auto h = abc();
  EXPECT_EQ(multiply(*h, parse2(*h, "a|b - b|a")), parse(*h, "ab - ba"));
}

TEST(Connectivity, AbcAndTaft) {
  EXPECT_TRUE(is_connected(*abc()));
  EXPECT_TRUE(is_connected(*abc()).unit_agreement);
  const Connectivity t = is_connected(*taft(3));
  EXPECT_FALSE(t);
  EXPECT_EQ(t.degree0_rank, 3u);
}

TEST(Bialgebra, AbcPasses) { EXPECT_TRUE(verify_bialgebra(*abc(), 4).ok()); }

TEST(Bialgebra, FqsymPasses) { EXPECT_TRUE(verify_bialgebra(*fqsym(RingSpec::integers(), 4), 4).ok()); }

TEST(Bialgebra, TaftPasses) {
  for (unsigned n : {2u, 3u, 5u}) {
    auto h = taft(n);
    EXPECT_TRUE(verify_bialgebra(*h, h->max_degree()).ok()) << n;
  }
}

TEST(Bialgebra, CounitBreakingCoproductFails) {
  auto h = abc(4);
  auto broken = support::table_copy(*h, [&](support::Tables& t) {
    t.coproducts[h->basis()->at("c")] = parse2(*h, "c|1 + a|b");
  });
  const VerificationReport r = verify_bialgebra(*broken, 4);
  const CheckEntry* left = r.find("counit-left");
  ASSERT_TRUE(left);
  EXPECT_EQ(left->status, Status::Fail);
  ASSERT_TRUE(left->witness);
  EXPECT_EQ(left->witness->input, "c");
}

TEST(Bialgebra, MissingCrossTermBreaksCompatibility) {
  auto h = abc(4);
  auto broken = support::table_copy(*h, [&](support::Tables& t) {
    // Delta(c) without a|b, but Delta(ac) keeps the old a.(a|b) term.
    t.coproducts[h->basis()->at("c")] = parse2(*h, "c|1 + 1|c");
  });
  const VerificationReport r = verify_bialgebra(*broken, 4);
  EXPECT_FALSE(r.ok());
  const CheckEntry* f = r.first_failure();
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->claim == "coassociativity" || f->claim == "coproduct-multiplicative") << f->claim;
}

TEST(Antipode, AbcGoldenValues) {
  auto h = abc();
  const GradedMap& s = h->antipode();
  EXPECT_EQ(s(h->vec("a")), -h->vec("a"));
  EXPECT_EQ(s(h->vec("c")), parse(*h, "ab - c"));
  EXPECT_EQ(s(s(h->vec("c"))), parse(*h, "ba - ab + c"));
  EXPECT_EQ(s(h->vec("ab")), h->vec("ba"));
  EXPECT_EQ(s(h->unit()), h->unit());
}

TEST(Antipode, FqsymByHand) {
  auto h = fqsym(RingSpec::integers(), 3);
  EXPECT_EQ(h->antipode()(h->vec("F12")), h->vec("F21"));
  EXPECT_EQ(h->antipode()(h->vec("F1")), -h->vec("F1"));
}

TEST(Antipode, TensorWordsReverse) {
  auto h = tensor_algebra(2, RingSpec::integers(), 5);
  const auto& b = *h->basis();
  for (LabelId id = 0; id < b.size(); ++id) {
    std::string w = b.label(id);
    if (w == "1") continue;
    std::string rev(w.rbegin(), w.rend());
    Element expect = h->vec(rev);
    if (w.size() % 2) expect = -expect;
    EXPECT_EQ(h->antipode()(h->vec(id)), expect) << w;
  }
  EXPECT_EQ(h->antipode()(h->vec("abb")), -h->vec("bba"));
}

TEST(Antipode, OracleAgreesOnZoo) {
  const RingSpec z = RingSpec::integers();
  for (HopfPtr h : {abc(6), tensor_algebra(2, z, 5), shuffle_algebra(2, z, 5), fqsym(z, 4)}) {
    EXPECT_EQ(antipode(*h), antipode_oracle(*h)) << h->name();
  }
}

TEST(Antipode, TakeuchiOracleAgrees) {
  const RingSpec z = RingSpec::integers();
  for (HopfPtr h : {abc(5), shuffle_algebra(2, z, 4), fqsym(z, 4)}) {
    const auto& b = *h->basis();
    for (LabelId id = 0; id < b.size(); ++id)
      EXPECT_EQ(h->antipode().image(id), oracle::takeuchi_antipode(*h, id)) << h->name() << " " << b.label(id);
  }
}

TEST(Antipode, AxiomsHold) {
  auto h = abc();
  EXPECT_TRUE(verify_antipode_axioms(*h, antipode(*h), 5).ok());
  auto t = taft(3);
  EXPECT_TRUE(verify_antipode_axioms(*t, t->antipode(), t->max_degree()).ok());
}

TEST(Antipode, IdentityIsNotAnAntipode) {
  auto h = abc(4);
  const VerificationReport r = verify_antipode_axioms(*h, GradedMap::identity(h->basis(), h->ring()), 4);
  ASSERT_FALSE(r.ok());
  const CheckEntry* f = r.first_failure();
  ASSERT_TRUE(f && f->witness);
  EXPECT_EQ(f->witness->input, "a");
}

TEST(Antipode, NonConnectedNeedsATable) {
  auto t = taft(3);
  auto bare = support::table_copy(*t, [](support::Tables& tb) { tb.antipode.reset(); });
  EXPECT_THROW(bare->antipode(), UnsupportedError);
}

TEST(Antipode, PowersCompose) {
  auto h = abc(4);
  EXPECT_EQ(antipode_power(*h, 0), GradedMap::identity(h->basis(), h->ring()));
  EXPECT_EQ(antipode_power(*h, 4), antipode_power(*h, 2).compose(antipode_power(*h, 2)));
}

TEST(Antipode, ModularRing) {
  auto h = abc(4, RingSpec::integers_mod(5));
  EXPECT_EQ(h->antipode()(h->vec("c")), parse(*h, "ab + 4*c"));
  EXPECT_EQ(antipode(*h), antipode_oracle(*h));
}
