#include <gtest/gtest.h>

#include "support.hpp"

using namespace hopf;

namespace {

PreCoalgebraInstance abc_instance(const RingSpec& r, int n, int e_power = 0, int f_power = 2, int p = 1) {
  return instance_from_hopf(*free_example_abc(r, n), e_power, f_power, p);
}

}  // namespace

TEST(Hypotheses, StandardInstancePasses) {
  const VerificationReport q = check_hypotheses(abc_instance(RingSpec::rationals(), 5));
  EXPECT_TRUE(q.ok()) << q.to_text();
  EXPECT_EQ(q.count(Status::NotChecked), 0u);

  const VerificationReport z = check_hypotheses(abc_instance(RingSpec::integers(), 5));
  EXPECT_TRUE(z.ok());
  const CheckEntry* ker = z.find("Ker delta in Ker(e-f)");
  ASSERT_TRUE(ker);
  EXPECT_EQ(ker->status, Status::NotChecked);
}

TEST(Hypotheses, HigherPowersAreInstances) {
  for (auto [e, f] : {std::pair{2, 4}, std::pair{0, 4}}) {
    const VerificationReport r = check_hypotheses(abc_instance(RingSpec::integers_mod(5), 5, e, f));
    EXPECT_TRUE(r.ok()) << e << "," << f << "\n" << r.to_text();
  }
}

TEST(Hypotheses, MutatedDeltaFailsBidegree) {
  const auto inst = with_delta_term(abc_instance(RingSpec::integers(), 4), "c", "1", "c");
  const VerificationReport r = check_hypotheses(inst);
  const CheckEntry* e = r.find("delta(D_n) in sum_{1<=i<n} D_i|D_{n-i} for n > p");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->status, Status::Fail);
  ASSERT_TRUE(e->witness);
  EXPECT_EQ(e->witness->input, "c");
}

TEST(Hypotheses, InvalidInstanceArguments) {
  auto h = free_example_abc(RingSpec::integers(), 3);
  EXPECT_THROW(instance_from_hopf(*h, 1, 2, 1), StructuralError);
  EXPECT_THROW(instance_from_hopf(*h, 0, 2, 0), StructuralError);
  EXPECT_THROW(instance_from_hopf(*taft(3), 0, 2, 1), UnsupportedError);
}

TEST(Conclusions, AbcUpToFive) {
  const VerificationReport r = verify_conclusions(abc_instance(RingSpec::integers(), 5), 5);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.entries().size(), 8u);
}

TEST(Conclusions, FqsymAtPTwo) {
  const auto inst = instance_from_hopf(*fqsym(RingSpec::integers(), 5), 0, 2, 2);
  EXPECT_TRUE(check_hypotheses(inst).ok());
  EXPECT_TRUE(verify_conclusions(inst, 5).ok());
}

TEST(Conclusions, AbcAtPTwoViolatesHypothesis) {
  const auto inst = abc_instance(RingSpec::integers(), 4, 0, 2, 2);
  const VerificationReport r = check_hypotheses(inst);
  const CheckEntry* e = r.find("(e-f)(D_1 + ... + D_p) = 0");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->status, Status::Fail);
  EXPECT_EQ(e->witness->input, "c");
}

// The pre-coalgebra hypotheses never ask for coassociativity.
TEST(Conclusions, NonCoassociativeInstance) {
  const auto inst = noncoassociative_instance(RingSpec::rationals());
  const auto& b = *inst.basis;
  EXPECT_TRUE(inst.delta.image(b.at("x")).is_zero());
  EXPECT_FALSE(inst.delta.image(b.at("y")).is_zero());
  EXPECT_TRUE(check_hypotheses(inst).ok());
  EXPECT_TRUE(verify_conclusions(inst, 3).ok());
  EXPECT_EQ(inst.g().power(2).image(b.at("z")), Element::basis_vector(inst.basis, inst.ring, b.at("x")));
}

TEST(Binomial, AbcOverZ5) {
  const VerificationReport r = binomial_identity_check(abc_instance(RingSpec::integers_mod(5), 4), 4);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.count(Status::NotChecked), 0u);
  EXPECT_TRUE(r.find("h = g|f + e|g"));
  EXPECT_TRUE(r.find("h^k = sum_r C(k,r) (e^{k-r}|f^r)(g^r|g^{k-r}), k = 3"));
  EXPECT_TRUE(r.find("g^i e^j = e^j g^i, i, j <= K"));
}

TEST(Binomial, HigherPowers) {
  const VerificationReport r = binomial_identity_check(abc_instance(RingSpec::integers(), 4, 2, 4), 3);
  EXPECT_TRUE(r.ok());
}

TEST(Binomial, NonCommutingMapsSkipTheIdentity) {
  auto inst = abc_instance(RingSpec::integers(), 3);
  const auto& b = *inst.basis;
  std::vector<Element> images;
  for (LabelId id = 0; id < b.size(); ++id) {
    std::string l = b.label(id);
    if (l == "ab") l = "ba";
    else if (l == "ba") l = "ab";
    images.push_back(Element::basis_vector(inst.basis, inst.ring, b.at(l)));
  }
  inst.e = GradedMap(inst.basis, inst.ring, images);
  const VerificationReport r = binomial_identity_check(inst, 3);
  const CheckEntry* pre = r.find("precondition f o e = e o f");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, Status::Fail);
  EXPECT_EQ(pre->witness->input, "c");
  EXPECT_EQ(r.count(Status::NotChecked), 1u);
}

TEST(Binomial, DirectTensorMapsAgree) {
  // The per-pair check against whole-map arithmetic on a small instance.
  const auto inst = abc_instance(RingSpec::integers(), 3);
  const GradedMap g = inst.g();
  const Tensor2Map h = inst.h();
  EXPECT_EQ(h, tensor_map(g, inst.f) + tensor_map(inst.e, g));
  for (int k = 0; k <= 3; ++k) {
    Tensor2Map sum = Tensor2Map::zero(inst.basis, inst.ring);
    for (int r = 0; r <= k; ++r)
      sum += ring_embed_int(binomial(k, r), inst.ring) *
             tensor_map(inst.e.power(k - r), inst.f.power(r)).compose(tensor_map(g.power(r), g.power(k - r)));
    EXPECT_EQ(h.power(k), sum) << k;
  }
}
