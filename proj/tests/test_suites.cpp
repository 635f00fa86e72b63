#include <gtest/gtest.h>

#include "support.hpp"

using namespace hopf;

namespace {

const CheckEntry& entry(const VerificationReport& r, std::string_view claim) {
  const CheckEntry* e = r.find(claim);
  if (!e) throw std::runtime_error("no entry '" + std::string(claim) + "' in\n" + r.to_text());
  return *e;
}

}  // namespace

TEST(GradedHopf, AbcAndFqsym) {
  const RingSpec z = RingSpec::integers();
  for (HopfPtr h : {free_example_abc(z, 6), fqsym(z, 5)}) {
    const VerificationReport r = suite_graded_hopf(*h);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.count(Status::Pass), 3u * h->max_degree()) << h->name();
  }
}

TEST(GradedHopf, CocommutativeCollapse) {
  auto h = tensor_algebra(2, RingSpec::integers(), 5);
  EXPECT_TRUE(suite_graded_hopf(*h).ok());
}

TEST(LoweredExponent, AbcPremiseFailsAtC) {
  auto h = free_example_abc(RingSpec::integers(), 5);
  const VerificationReport r = suite_lowered_exponent(*h, 2);
  EXPECT_FALSE(r.ok());
  const CheckEntry* f = r.first_failure();
  ASSERT_TRUE(f && f->witness);
  EXPECT_EQ(f->witness->input, "c");
  EXPECT_EQ(f->witness->rendered, "ab - ba");
  using V = std::vector<std::pair<std::string, std::string>>;
  EXPECT_EQ(f->witness->value, (V{{"ab", "1"}, {"ba", "-1"}}));
  EXPECT_EQ(r.count(Status::Fail), 1u);
}

TEST(LoweredExponent, FqsymPasses) {
  const VerificationReport r = suite_lowered_exponent(*fqsym(RingSpec::integers(), 5), 2);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.count(Status::NotChecked), 0u);
}

TEST(LoweredExponent, TensorAlgebraWithoutCommutingH1) {
  const VerificationReport r = suite_lowered_exponent(*tensor_algebra(2, RingSpec::integers(), 5), 2);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.count(Status::NotChecked), 0u);
}

TEST(LoweredExponent, PThree) {
  EXPECT_TRUE(suite_lowered_exponent(*tensor_algebra(2, RingSpec::integers(), 5), 3).ok());
  EXPECT_FALSE(suite_lowered_exponent(*free_example_abc(RingSpec::integers(), 5), 3).ok());
}

TEST(Filtered, StandardInstances) {
  auto h = free_example_abc(RingSpec::integers(), 5);
  for (auto [e, f] : {std::pair{0, 2}, std::pair{2, 4}, std::pair{0, 4}}) {
    const VerificationReport r = suite_corollary_filtered(*h, e, f, 1);
    EXPECT_TRUE(r.ok()) << e << "," << f << "\n" << r.to_text();
  }
}

TEST(Filtered, LoweredExponentIsSharp) {
  auto h = free_example_abc(RingSpec::integers(), 4);
  const VerificationReport r = suite_corollary_filtered(*h, 0, 2, 1, 1);
  const CheckEntry* f = r.find("(id-S^2)^{u-p+1-1}(H_{<=u}) = 0, u = 2, p = 1");
  ASSERT_TRUE(f);
  EXPECT_EQ(f->status, Status::Fail);
  ASSERT_TRUE(f->witness);
  EXPECT_EQ(f->witness->input, "c");
  EXPECT_EQ(f->witness->rendered, "ab - ba");
  // With the exponent lowered to zero the Prim claim already fails on the unit.
  EXPECT_EQ(r.first_failure()->witness->input, "1");
}

TEST(Filtered, FailingHypothesisSkipsConclusions) {
  auto h = free_example_abc(RingSpec::integers(), 4);
  const VerificationReport r = suite_corollary_filtered(*h, 0, 2, 2);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.count(Status::NotChecked), 0u);
}

TEST(AntipodeProps, ConnectedZoo) {
  const RingSpec z = RingSpec::integers();
  for (HopfPtr h : {free_example_abc(z, 5), shuffle_algebra(2, z, 4), fqsym(z, 4)}) {
    const VerificationReport r = suite_antipode_props(*h);
    EXPECT_TRUE(r.ok()) << r.to_text();
  }
  const VerificationReport abc = suite_antipode_props(*free_example_abc(z, 4));
  EXPECT_EQ(entry(abc, "S^2 = id").status, Status::NonidentityVerified);
  EXPECT_EQ(entry(suite_antipode_props(*shuffle_algebra(2, z, 4)), "S^2 = id").status, Status::Pass);
}

TEST(AntipodeProps, TaftReportsNonidentity) {
  const VerificationReport r = suite_antipode_props(*taft(3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(entry(r, "S^2 = id").status, Status::NonidentityVerified);
}

TEST(TaftRemark, OrderThree) {
  const VerificationReport r = suite_taft_remark(3, 10);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(entry(r, "S^2(x) in {q x, q^-1 x}").detail, "S^2(x) = q^-1 x (realized choice)");
  EXPECT_EQ(entry(r, "H is not connected").status, Status::NonidentityVerified);
  // (1 - q^2)^k modulo q^2 + q + 1
  EXPECT_EQ(entry(r, "(id-S^2)^k(x) = (1-lambda)^k x != 0, k = 1").detail, "coefficient 2 + q");
  EXPECT_EQ(entry(r, "(id-S^2)^k(x) = (1-lambda)^k x != 0, k = 2").detail, "coefficient 3 + 3*q");
  EXPECT_EQ(entry(r, "(id-S^2)^k(x) = (1-lambda)^k x != 0, k = 6").detail, "coefficient -27");
  for (int k = 1; k <= 10; ++k)
    EXPECT_EQ(entry(r, "(id-S^2)^k(x) = (1-lambda)^k x != 0, k = " + std::to_string(k)).status,
              Status::NonidentityVerified);
}

TEST(TaftRemark, OtherPrimes) {
  for (unsigned n : {2u, 5u, 7u}) EXPECT_TRUE(suite_taft_remark(n, 6).ok()) << n;
}

TEST(Catalogue, IdsAndLookup) {
  const auto& cat = suite_catalogue();
  EXPECT_EQ(cat.size(), 11u);
  for (const auto& s : cat) {
    EXPECT_EQ(find_suite(s.id), &s);
    EXPECT_FALSE(s.anchor.empty());
  }
  EXPECT_EQ(find_suite("nope"), nullptr);
  auto h = free_example_abc(RingSpec::integers(), 3);
  EXPECT_THROW(run_suite("nope", *h), StructuralError);
}

TEST(Catalogue, AllSuitesOnConnectedZoo) {
  const RingSpec z = RingSpec::integers();
  for (HopfPtr h : {free_example_abc(z, 4), tensor_algebra(2, z, 4), shuffle_algebra(2, z, 4), fqsym(z, 3)})
    for (const auto& s : suite_catalogue()) {
      const VerificationReport r = run_suite(s.id, *h);
      EXPECT_TRUE(r.ok()) << h->name() << " " << s.id << "\n" << r.to_text();
      EXPECT_FALSE(r.entries().empty());
    }
}

TEST(Catalogue, ConnectedSuitesOnTaft) {
  auto h = taft(3);
  for (const auto& s : suite_catalogue()) {
    const VerificationReport r = run_suite(s.id, *h);
    EXPECT_TRUE(r.ok()) << s.id;
    if (s.needs_connected) {
      ASSERT_EQ(r.entries().size(), 1u) << s.id;
      EXPECT_EQ(r.entries()[0].status, Status::NotChecked);
    }
  }
}

TEST(Reports, JsonIsDeterministic) {
  auto h = free_example_abc(RingSpec::integers(), 4);
  SuiteOptions o;
  o.seed = 42;
  const std::string a = run_suite("reduced", *h, o).to_json();
  const std::string b = run_suite("reduced", *free_example_abc(RingSpec::integers(), 4), o).to_json();
  EXPECT_EQ(a, b);
}

TEST(Reports, FailWithoutWitnessRejected) {
  VerificationReport r("x");
  EXPECT_THROW(r.add(CheckEntry("claim", "anchor", Status::Fail)), std::logic_error);
}
