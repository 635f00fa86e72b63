#include <gtest/gtest.h>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/gmod.hpp"

using namespace hopf;

namespace {

struct Fixture : ::testing::Test {
  BasisPtr b = make_basis({{"1"}, {"a", "b"}, {"c", "d"}});
  RingSpec z = RingSpec::integers();
  Element v(std::string_view l) const { return Element::basis_vector(b, z, b->at(l)); }
  RingElement n(long k) const { return RingElement::from_int(k, z); }

  GradedMap swap_ab() const {
    std::vector<Element> img{v("1"), v("b"), v("a"), v("c") + v("d"), v("d")};
    return GradedMap(b, z, img);
  }
};

}  // namespace

TEST_F(Fixture, BasisIsDegreeOrdered) {
  EXPECT_EQ(b->max_degree(), 2);
  EXPECT_EQ(b->size(), 5u);
  EXPECT_EQ(b->rank(1), 2u);
  EXPECT_EQ(b->degree(b->at("c")), 2);
  EXPECT_EQ(b->end_of_degree(1), 3u);
  EXPECT_EQ(b->up_to_degree(1).size(), 3u);
  EXPECT_TRUE(b->in_degree(7).empty());
  EXPECT_FALSE(b->find("z"));
  EXPECT_THROW(b->at("z"), StructuralError);
}

TEST_F(Fixture, DuplicateLabelsRejected) { EXPECT_ANY_THROW(make_basis({{"1"}, {"a", "a"}})); }

TEST_F(Fixture, ElementArithmeticDropsZeros) {
  Element x = n(2) * v("a") - v("c");
  EXPECT_EQ(x.to_string(), "2*a - c");
  x += v("c");
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ((x - x).to_string(), "0");
  EXPECT_EQ(x.degree_support(), std::set<int>{1});
  EXPECT_EQ((-x).coeff(b->at("a")), n(-2));
}

TEST_F(Fixture, ForeignOperandsRejected) {
  BasisPtr other = make_basis({{"1"}, {"a", "b"}, {"c", "d"}});
  EXPECT_THROW(v("a") + Element::basis_vector(other, z, 1), StructuralError);
  EXPECT_THROW(v("a") + Element::basis_vector(b, RingSpec::rationals(), 1), StructuralError);
}

TEST_F(Fixture, TensorElements) {
  Tensor2Element t = tensor_of(v("a") + v("b"), v("c"));
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.to_string(), "a|c + b|c");
  EXPECT_EQ(bidegree_support(t), (std::set<std::pair<int, int>>{{1, 2}}));
  t -= Tensor2Element::pure(b, z, b->at("a"), b->at("c"));
  EXPECT_EQ(t, Tensor2Element::pure(b, z, b->at("b"), b->at("c")));
}

TEST_F(Fixture, MapCompositionAndPowers) {
  const GradedMap f = swap_ab();
  EXPECT_EQ(f.compose(f).image(b->at("a")), v("a"));
  EXPECT_EQ(f.power(2).image(b->at("c")), v("c") + n(2) * v("d"));
  EXPECT_EQ(f.power(0), GradedMap::identity(b, z));
  EXPECT_THROW(f.power(-1), StructuralError);
  EXPECT_EQ((f - f), GradedMap::zero(b, z));
  EXPECT_EQ(f(v("a") + v("c")), v("b") + v("c") + v("d"));
}

TEST_F(Fixture, FilteredAssertionChecked) {
  std::vector<Element> img{v("1"), v("c"), v("b"), v("c"), v("d")};
  EXPECT_THROW(GradedMap(b, z, img, true), StructuralError);
  std::vector<Element> down{v("1"), v("a"), v("b"), v("c") + v("a"), v("d")};
  EXPECT_NO_THROW(GradedMap(b, z, down, true));
}

// (g|f)(e|g) = (ge)|(fg) on pure tensors.
TEST_F(Fixture, TensorMapsComposeFactorwise) {
  const GradedMap f = swap_ab();
  const GradedMap e = GradedMap::identity(b, z);
  const GradedMap g = e - f;
  const Tensor2Map lhs = tensor_map(g, f).compose(tensor_map(e, g));
  const Tensor2Map rhs = tensor_map(g.compose(e), f.compose(g));
  EXPECT_FALSE(first_difference(lhs, rhs));
  EXPECT_TRUE(lhs == rhs);
  for (LabelId i = 0; i < b->size(); ++i)
    for (LabelId j = 0; j < b->size(); ++j) {
      const Tensor2Element t = Tensor2Element::pure(b, z, i, j);
      EXPECT_EQ(apply_tensor(g, f, apply_tensor(e, g, t)), lhs.image(i, j));
    }
}

TEST_F(Fixture, TensorMapPowerAndDifference) {
  const Tensor2Map t = tensor_map(swap_ab(), swap_ab());
  EXPECT_EQ(t.power(2), tensor_map(swap_ab().power(2), swap_ab().power(2)));
  const auto diff = first_difference(t, Tensor2Map::identity(b, z));
  ASSERT_TRUE(diff);
  EXPECT_EQ(b->label(diff->first) + "|" + b->label(diff->second), "1|a");
}

TEST(Kernel, OverRationalsAndModP) {
  for (const RingSpec& r : {RingSpec::rationals(), RingSpec::integers_mod(5)}) {
    BasisPtr b = make_basis({{"1"}, {"x", "y", "z"}});
    auto v = [&](std::string_view l) { return Element::basis_vector(b, r, b->at(l)); };
    // x -> x + y, y -> x + y, z -> z
    GradedMap f(b, r, {v("1"), v("x") + v("y"), v("x") + v("y"), v("z")});
    KernelResult k = kernel_basis(f, 1);
    EXPECT_EQ(k.dimension, 3u);
    EXPECT_EQ(k.rank, 2u);
    ASSERT_EQ(k.kernel.size(), 1u);
    EXPECT_TRUE(f(k.kernel[0]).is_zero());
    EXPECT_FALSE(k.kernel[0].is_zero());
  }
}

TEST(Kernel, CharacteristicMatters) {
  // x -> 5x has a kernel over Z/5 only.
  for (long m : {5L, 7L}) {
    const RingSpec r = RingSpec::integers_mod(m);
    BasisPtr b = make_basis({{"1"}, {"x"}});
    GradedMap f(b, r, {Element(b, r), Element::term(b, RingElement::from_int(5, r), 1)});
    EXPECT_EQ(kernel_basis(f, 1).kernel.size(), m == 5 ? 1u : 0u);
  }
}

TEST(Kernel, NeedsAField) {
  BasisPtr b = make_basis({{"1"}, {"x"}});
  const RingSpec z = RingSpec::integers();
  EXPECT_THROW(kernel_basis(GradedMap::identity(b, z), 1), UnsupportedRingError);
}

TEST(Kernel, TensorValuedMap) {
  const RingSpec q = RingSpec::rationals();
  BasisPtr b = make_basis({{"1"}, {"x"}, {"y", "w"}});
  const LabelId x = b->at("x"), y = b->at("y"), w = b->at("w");
  std::vector<Tensor2Element> img(b->size(), Tensor2Element(b, q));
  img[y] = Tensor2Element::pure(b, q, x, x);
  img[w] = RingElement::from_int(2, q) * Tensor2Element::pure(b, q, x, x);
  Tensor2ValuedMap d(b, q, img);
  const std::vector<LabelId> dom{y, w};
  KernelResult k = kernel_basis(d, dom);
  ASSERT_EQ(k.kernel.size(), 1u);
  EXPECT_TRUE(d.apply(k.kernel[0]).is_zero());
}
