/* Copyright 2026 The pinch Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <random>

#include "pinch/linalg.hpp"
#include "pinch/local_algebra.hpp"

namespace pinch {
namespace {

AlgebraSpec square_zero(int r) {
  std::vector<std::vector<int>> ideal;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      std::vector<int> e(r, 0);
      ++e[i];
      ++e[j];
      ideal.push_back(e);
    }
  return AlgebraSpec::monomial(r, ideal);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

AlgebraElement random_element(const LocalAlgebra& a, std::mt19937& rng) {
  FqVector m(a.dim());
  for (int i = 0; i < a.dim(); ++i) m(i) = a.field().random(rng);
  return a.element(a.field().random(rng), m);
}

TEST(LocalAlgebra, TruncatedPolynomialConstants) {
  const auto& f = GaloisField::make(2);
  const auto a = build(AlgebraSpec::truncated(4), f);
  ASSERT_EQ(a.dim(), 3);
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"t", "t^2", "t^3"}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int h = 0; h < 3; ++h)
        EXPECT_EQ(a.constant(i, j, h), (h + 1 == i + j + 2) ? f.one() : f.zero());
}

TEST(LocalAlgebra, SquareZeroMonomialQuotient) {
  const auto a = build(square_zero(2), GaloisField::make(2));
  EXPECT_EQ(a.dim(), 2);
  for (int i = 0; i < 2; ++i) EXPECT_TRUE(is_zero(a.left_mult(i)));
}

TEST(LocalAlgebra, MonomialQuotientBasisIsGraded) {
  const auto a = build(AlgebraSpec::monomial(2, {{3, 0}, {1, 1}, {0, 2}}), GaloisField::make(3));
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"x", "y", "x^2"}));
  EXPECT_TRUE(is_filtration_adapted(a));
}

TEST(LocalAlgebra, BuildErrors) {
  const auto& f = GaloisField::make(2);
  AlgebraSpec::Entry idem{1, 1, 1, {1}};
  EXPECT_EQ(code_of([&] { build(AlgebraSpec::table(1, {idem}), f); }), ErrorCode::NotLocal);
  EXPECT_EQ(code_of([&] { build(AlgebraSpec::monomial(2, {{2, 0}, {1, 1}}), f); }),
            ErrorCode::NotCofinite);
  AlgebraSpec::Entry c12{1, 2, 1, {1}};
  EXPECT_EQ(code_of([&] { build(AlgebraSpec::table(2, {c12}), f); }),
            ErrorCode::InvalidConstants);
  AlgebraSpec::Entry bad{1, 3, 1, {1}};
  EXPECT_EQ(code_of([&] { build(AlgebraSpec::table(2, {bad}), f); }),
            ErrorCode::InvalidConstants);
}

TEST(LocalAlgebra, PointIsLegal) {
  const auto a = build(AlgebraSpec::point(), GaloisField::make(5));
  EXPECT_EQ(a.dim(), 0);
  EXPECT_EQ(height(a), 0);
  EXPECT_TRUE(validate(a).ok());
}

TEST(Multiply, Examples) {
  const auto& f = GaloisField::make(2);
  const auto a = build(AlgebraSpec::truncated(4), f);
  EXPECT_EQ(multiply(a, a.basis(0), a.basis(2)), a.zero());
  AlgebraElement one_t = a.one();
  one_t.m(0) = f.one();
  AlgebraElement expect = a.one();
  expect.m(1) = f.one();
  EXPECT_EQ(multiply(a, one_t, one_t), expect);
  EXPECT_EQ(to_string(a, expect), "1 + t^2");

  const auto sz = build(square_zero(2), f);
  AlgebraElement x1 = sz.one(), y1 = sz.one();
  x1.m(0) = f.one();
  y1.m(1) = f.one();
  AlgebraElement xy = sz.one();
  xy.m(0) = f.one();
  xy.m(1) = f.one();
  EXPECT_EQ(multiply(sz, x1, y1), xy);

  const auto other = build(AlgebraSpec::truncated(3), GaloisField::make(3));
  EXPECT_THROW(multiply(a, other.one(), a.one()), Error);
}

TEST(Multiply, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(101);
  const std::vector<std::pair<AlgebraSpec, unsigned>> fixtures = {
      {AlgebraSpec::truncated(5), 2},
      {AlgebraSpec::truncated(4), 3},
      {square_zero(3), 2},
      {AlgebraSpec::monomial(2, {{3, 0}, {0, 2}}), 5},
  };
  for (const auto& [spec, p] : fixtures) {
    const auto a = build(spec, GaloisField::make(p));
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
      ASSERT_EQ(multiply(a, x, y), multiply(a, y, x));
      ASSERT_EQ(multiply(a, multiply(a, x, y), z), multiply(a, x, multiply(a, y, z)));
      ASSERT_EQ(multiply(a, a.one(), x), x);
    }
  }
}

TEST(FrobeniusPower, Examples) {
  const auto& f = GaloisField::make(2);
  const auto a = build(AlgebraSpec::truncated(4), f);
  const auto fr = frobenius_power(a, 1);
  EXPECT_EQ(fr.twist(), 1);
  FqMatrix expect = zero_matrix(f, 3, 3);
  expect(1, 0) = f.one();  // t -> t^2
  EXPECT_EQ(fr.matrix(), expect);
  EXPECT_EQ(rank(fr.matrix()), 1);
  EXPECT_TRUE(is_zero(frobenius_power(a, 2)));
  EXPECT_TRUE(is_zero(frobenius_power(build(square_zero(2), f), 1)));
}

TEST(FrobeniusPower, RankMatchesFloorCount) {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::make(p);
    for (int m = 1; m <= 20; ++m) {
      const auto a = build(AlgebraSpec::truncated(m + 1), f);
      long long pi = p;
      for (int i = 1; pi <= 4 * m; ++i, pi *= p) {
        int count = 0;
        for (int j = 1; j <= m; ++j)
          if (j * pi <= m) ++count;
        ASSERT_EQ(rank(frobenius_power(a, i).matrix()), count) << "p=" << p << " m=" << m;
      }
    }
  }
}

TEST(Height, Examples) {
  EXPECT_EQ(height(build(AlgebraSpec::truncated(4), GaloisField::make(2))), 2);
  EXPECT_EQ(height(build(AlgebraSpec::truncated(4), GaloisField::make(3))), 2);
  for (unsigned p : {2u, 3u, 7u}) EXPECT_EQ(height(build(square_zero(2), GaloisField::make(p))), 1);
}

TEST(Height, TruncatedIsCeilLog) {
  for (unsigned p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 20; ++m) {
      int h = 0;
      long long pw = 1;
      while (pw < m + 1) {
        pw *= p;
        ++h;
      }
      EXPECT_EQ(height(build(AlgebraSpec::truncated(m + 1), GaloisField::make(p))), h);
    }
  }
}

TEST(Validate, Diagnostics) {
  const auto& f = GaloisField::make(2);
  EXPECT_TRUE(validate(build(AlgebraSpec::truncated(4), f)).ok());

  std::vector<FqMatrix> mult(2, zero_matrix(f, 2, 2));
  mult[0](0, 1) = f.one();  // a1 a2 = a1 but a2 a1 = 0
  const auto d = validate(LocalAlgebra(f, {"a1", "a2"}, mult));
  EXPECT_EQ(d.kind, Diagnostics::Kind::CommutativityViolation);
  EXPECT_EQ(d.indices, (std::vector<int>{1, 2}));

  // a1 a1 = a2, a1 a2 = a2 a1 = a1: the orbit of a1 never vanishes.
  std::vector<FqMatrix> cyc(2, zero_matrix(f, 2, 2));
  cyc[0](1, 0) = f.one();
  cyc[0](0, 1) = f.one();
  cyc[1](0, 0) = f.one();
  EXPECT_EQ(validate(LocalAlgebra(f, {"a1", "a2"}, cyc)).kind, Diagnostics::Kind::NotLocal);

  // Commutative and nilpotent; (a1 a1) a2 = a2 a2 = a3 but a1 (a1 a2) = a1 a3 = 0.
  std::vector<FqMatrix> na(3, zero_matrix(f, 3, 3));
  na[0](1, 0) = f.one();  // a1 a1 = a2
  na[0](2, 1) = f.one();  // a1 a2 = a3
  na[1](2, 0) = f.one();  // a2 a1 = a3
  na[1](2, 1) = f.one();
  const auto dn = validate(LocalAlgebra(f, {"a1", "a2", "a3"}, na));
  EXPECT_EQ(dn.kind, Diagnostics::Kind::AssociativityViolation);
}

TEST(Filtration, NonAdaptedBasisIsDetectedAndFixed) {
  const auto& f = GaloisField::make(3);
  const auto a = build(AlgebraSpec::truncated(3), f);  // basis x, x^2
  FqMatrix p(2, 2);
  p << f.one(), f.one(), f.zero(), f.one();  // b1 = x, b2 = x + x^2
  const auto b = rebase(a, p);
  EXPECT_TRUE(validate(b).ok());
  EXPECT_FALSE(is_filtration_adapted(b));
  const auto c = filtration_adapted(b);
  EXPECT_TRUE(is_filtration_adapted(c));
  EXPECT_EQ(filtration_levels(c), (std::vector<int>{1, 2}));
  EXPECT_EQ(height(c), height(a));
}

TEST(Filtration, LevelsOfTruncated) {
  const auto a = build(AlgebraSpec::truncated(6), GaloisField::make(2));
  EXPECT_EQ(filtration_levels(a), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(power_filtration(a).size(), 5u);
}

}  // namespace
}  // namespace pinch
