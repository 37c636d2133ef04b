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

#include "pinch/finite_field.hpp"
#include "pinch/linalg.hpp"
#include "pinch/semilinear.hpp"

namespace pinch {
namespace {

// Test-side polynomial arithmetic over F_p, independent of the field tables.
std::vector<unsigned> poly_mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                  const std::vector<unsigned>& mod, unsigned p) {
  std::vector<unsigned> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const std::size_t n = mod.size() - 1;
  for (std::size_t d = prod.size(); d-- > n;) {
    const unsigned c = prod[d];
    if (!c) continue;
    for (std::size_t k = 0; k <= n; ++k) prod[d - n + k] = (prod[d - n + k] + p - (c * mod[k]) % p) % p;
  }
  prod.resize(n);
  return prod;
}

TEST(GaloisField, PrimeFieldOfTwo) {
  const auto& f = GaloisField::make(2, 1);
  EXPECT_EQ(f.order(), 2u);
  auto els = f.elements();
  ASSERT_EQ(els.size(), 2u);
  EXPECT_TRUE(is_zero(els[0]));
  EXPECT_EQ(els[1], f.one());
  EXPECT_EQ(f.one() + f.one(), f.zero());
}

TEST(GaloisField, F4FromExplicitModulus) {
  // Oracle: u^2+u+1 has no root in F_2.
  for (unsigned x = 0; x < 2; ++x) EXPECT_NE((x * x + x + 1) % 2, 0u);
  const auto& f = GaloisField::make(2, 2, std::vector<unsigned>{1, 1, 1});
  EXPECT_EQ(f.order(), 4u);
  EXPECT_EQ(&f, &GaloisField::make(2, 2));  // same as the built-in modulus, interned
}

TEST(GaloisField, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  EXPECT_EQ(code([] { GaloisField::make(4, 1); }), ErrorCode::NonPrime);
  EXPECT_EQ(code([] { GaloisField::make(2, 2, std::vector<unsigned>{1, 0, 1}); }),
            ErrorCode::ReducibleModulus);
  EXPECT_EQ(code([] { GaloisField::make(2, 5); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code([] { GaloisField::make(3, 2, std::vector<unsigned>{1, 1}); }),
            ErrorCode::ReducibleModulus);
}

TEST(GaloisField, ExplicitModulusBeyondTable) {
  // x^5 + x^2 + 1 is irreducible over F_2.
  const auto& f = GaloisField::make(2, 5, std::vector<unsigned>{1, 0, 1, 0, 0, 1});
  EXPECT_EQ(f.order(), 32u);
}

TEST(GaloisField, ConwayTableIrreducibleAndPrimitive) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned n = 2; n <= 4; ++n) {
      const auto mod = *conway_polynomial(p, n);
      // Oracle: trial division by every monic polynomial of degree <= n/2.
      ASSERT_TRUE(is_irreducible(p, mod)) << p << "^" << n;
      // u must have multiplicative order p^n - 1, computed with test-side arithmetic.
      std::vector<unsigned> u(n, 0), x(n, 0);
      u[1] = 1;
      x[0] = 1;
      std::uint32_t q = 1;
      for (unsigned i = 0; i < n; ++i) q *= p;
      std::uint32_t order = 0;
      do {
        x = poly_mulmod(x, u, mod, p);
        ++order;
      } while (!(x[0] == 1 && std::all_of(x.begin() + 1, x.end(), [](unsigned c) { return c == 0; })));
      EXPECT_EQ(order, q - 1) << p << "^" << n;
    }
  }
}

TEST(GaloisField, MultiplicationMatchesPolynomialOracle) {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 4u}}) {
    const auto& f = GaloisField::make(p, n);
    for (const Fq& a : f.elements())
      for (const Fq& b : f.elements()) {
        auto ca = f.coords(a.packed()), cb = f.coords(b.packed());
        auto expect = poly_mulmod(ca, cb, f.modulus(), p);
        ASSERT_EQ(f.coords((a * b).packed()), expect);
      }
  }
}

TEST(Frobenius, Examples) {
  const auto& f2 = GaloisField::make(2);
  EXPECT_EQ(frobenius(f2.one(), 1), f2.one());
  const auto& f4 = GaloisField::make(2, 2);
  const Fq u = f4.u();
  // Oracle: u^2 mod (u^2+u+1) = u+1.
  EXPECT_EQ(f4.coords(frobenius(u, 1).packed()), poly_mulmod({0, 1}, {0, 1}, {1, 1, 1}, 2));
  EXPECT_EQ(frobenius(u, 1), u + f4.one());
  // Inverse by exhaustion: the unique y with y^2 = u+1.
  Fq root;
  int found = 0;
  for (const Fq& y : f4.elements())
    if (y * y == u + f4.one()) {
      root = y;
      ++found;
    }
  ASSERT_EQ(found, 1);
  EXPECT_EQ(frobenius(u + f4.one(), -1), root);
  EXPECT_EQ(root, u);
}

TEST(Frobenius, RoundTripOnSmallFields) {
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 1u}, {3u, 2u},
                      {3u, 3u}, {3u, 4u}, {5u, 2u}, {7u, 2u}}) {
    const auto& f = GaloisField::make(p, n);
    for (int t = -3; t <= 3; ++t)
      for (const Fq& x : f.elements()) ASSERT_EQ(frobenius(frobenius(x, t), -t), x);
  }
}

TEST(Frobenius, IsFieldAutomorphism) {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}}) {
    const auto& f = GaloisField::make(p, n);
    std::vector<bool> hit(f.order(), false);
    for (const Fq& x : f.elements()) {
      const Fq y = frobenius(x, 1);
      EXPECT_EQ(y, pow(x, p));
      hit[y.packed()] = true;
      for (const Fq& z : f.elements()) {
        EXPECT_EQ(frobenius(x + z, 1), y + frobenius(z, 1));
        EXPECT_EQ(frobenius(x * z, 1), y * frobenius(z, 1));
      }
    }
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST(Fq, LiteralsAdoptField) {
  const auto& f = GaloisField::make(3);
  EXPECT_EQ(Fq(1) + f.from_int(2), f.zero());
  EXPECT_EQ(Fq(0), f.zero());
  EXPECT_EQ(Fq(4), f.one());
  const auto& g = GaloisField::make(5);
  EXPECT_THROW(f.one() + g.one(), Error);
}

TEST(LinearAlgebra, EigenProductsAndInverse) {
  const auto& f = GaloisField::make(3, 2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FqMatrix m(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = f.random(rng);
    auto inv = inverse(m);
    if (!inv) {
      EXPECT_LT(rank(m), 4);
      continue;
    }
    EXPECT_EQ(bind(f, FqMatrix(m * *inv)), identity_matrix(f, 4));
    FqVector b(4);
    for (Eigen::Index i = 0; i < 4; ++i) b(i) = f.random(rng);
    auto x = solve(m, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(bind(f, FqMatrix(m * *x)), bind(f, FqMatrix(b)));
  }
}

TEST(LinearAlgebra, KernelIsAnnihilatedAndFullDimension) {
  const auto& f = GaloisField::make(2);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    FqMatrix m(3, 5);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = f.random(rng);
    const FqMatrix k = kernel(m);
    EXPECT_EQ(rank(m) + k.cols(), 5);
    EXPECT_TRUE(is_zero(FqMatrix(m * k)));
  }
}

TEST(LinearAlgebra, AffineRepresentativeIsLexLeast) {
  const auto& f = GaloisField::make(2);
  // Solutions of b + c = 1 over (a, b, c) with a = 1: (1,1,0) and (1,0,1).
  FqVector part(3);
  part << f.one(), f.one(), f.zero();
  FqMatrix hom(3, 1);
  hom << f.zero(), f.one(), f.one();
  const FqVector least = affine_representative(part, hom, f.zero());
  FqVector expect(3);
  expect << f.one(), f.zero(), f.one();
  EXPECT_EQ(least, expect);
  const FqVector greatest = affine_representative(part, hom, f.one());
  EXPECT_EQ(greatest, part);
}

TEST(SemilinearMap, ComposeExamples) {
  const auto& f2 = GaloisField::make(2);
  FqMatrix g_m(2, 2);
  g_m << f2.one(), f2.one(), f2.zero(), f2.one();
  const SemilinearMap g(f2, g_m, 1);
  const SemilinearMap id = SemilinearMap::identity(f2, 2);
  const auto c = compose(id, g);
  EXPECT_EQ(c.matrix(), g.matrix());
  EXPECT_EQ(c.twist(), 1);

  const auto& f4 = GaloisField::make(2, 2);
  FqMatrix one(1, 1), u(1, 1);
  one << f4.one();
  u << f4.u();
  const SemilinearMap fr(f4, one, 1), ug(f4, u, 1);
  const auto h = compose(fr, ug);
  EXPECT_EQ(h.twist(), 2);
  EXPECT_EQ(h.matrix()(0, 0), f4.u() + f4.one());
  // Pointwise oracle on all four elements.
  for (const Fq& x : f4.elements()) {
    FqVector v(1);
    v << x;
    EXPECT_EQ(h(v), fr(ug(v)));
    EXPECT_EQ(fr(ug(v))(0), pow(f4.u() * pow(x, 2), 2));
  }
}

TEST(SemilinearMap, ComposeOverPrimeFieldIsPlainProduct) {
  const auto& f = GaloisField::make(2);
  std::mt19937 rng(3);
  FqMatrix m(2, 2), n(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = f.random(rng);
      n(i, j) = f.random(rng);
    }
  const auto c = compose(SemilinearMap(f, m, 1), SemilinearMap(f, n, 1));
  EXPECT_EQ(c.matrix(), bind(f, FqMatrix(m * n)));
}

TEST(SemilinearMap, ShapeMismatch) {
  const auto& f = GaloisField::make(2);
  SemilinearMap a(f, zero_matrix(f, 2, 3), 0), b(f, zero_matrix(f, 2, 2), 0);
  EXPECT_THROW(compose(a, b), Error);
}

TEST(SemilinearMap, KernelExamples) {
  const auto& f2 = GaloisField::make(2);
  auto k0 = kernel(SemilinearMap(f2, zero_matrix(f2, 2, 2), 1));
  EXPECT_EQ(k0.rank, 0);
  EXPECT_EQ(k0.basis.size(), 2u);

  FqMatrix m(2, 2);
  m << f2.one(), f2.zero(), f2.zero(), f2.zero();
  const SemilinearMap fm(f2, m, 1);
  auto k1 = kernel(fm);
  EXPECT_EQ(k1.rank, 1);
  ASSERT_EQ(k1.basis.size(), 1u);
  // Exhaust F_2^2: exactly {0, (0,1)} is killed.
  int killed = 0;
  for (const Fq& a : f2.elements())
    for (const Fq& b : f2.elements()) {
      FqVector v(2);
      v << a, b;
      if (is_zero(FqMatrix(fm(v)))) {
        ++killed;
        EXPECT_TRUE(is_zero(a));
      }
    }
  EXPECT_EQ(killed, 2);
  FqVector e2(2);
  e2 << f2.zero(), f2.one();
  EXPECT_EQ(k1.basis[0], e2);

  const auto& f4 = GaloisField::make(2, 2);
  FqMatrix u(1, 1);
  u << f4.u();
  auto k2 = kernel(SemilinearMap(f4, u, 1));
  EXPECT_EQ(k2.rank, 1);
  EXPECT_TRUE(k2.basis.empty());
}

TEST(SemilinearMap, AdditiveAndTwistedHomogeneous) {
  const auto& f = GaloisField::make(3, 2);
  std::mt19937 rng(5);
  for (int t : {-1, 1, 2}) {
    FqMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = f.random(rng);
    const SemilinearMap s(f, m, t);
    for (int trial = 0; trial < 20; ++trial) {
      FqVector v(3), w(3);
      for (int i = 0; i < 3; ++i) {
        v(i) = f.random(rng);
        w(i) = f.random(rng);
      }
      const Fq lam = f.random(rng);
      EXPECT_EQ(s(FqVector(v + w)), FqVector(s(v) + s(w)));
      EXPECT_EQ(s(FqVector(v * lam)), FqVector(s(v) * frobenius(lam, t)));
    }
  }
}

// dim ker(f o g) from the exact kernel agrees with counting zeros of f(g(v)).
TEST(SemilinearMap, KernelOfCompositeMatchesExhaustiveCount) {
  std::mt19937 rng(17);
  for (unsigned p : {2u, 3u}) {
    const auto& f = GaloisField::make(p);
    for (int trial = 0; trial < 30; ++trial) {
      const int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3),
                c = 1 + static_cast<int>(rng() % 3);
      if (a + b + c > 6) continue;
      FqMatrix mf(a, b), mg(b, c);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) mf(i, j) = f.random(rng);
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < c; ++j) mg(i, j) = f.random(rng);
      const SemilinearMap sf(f, mf, 1), sg(f, mg, -1);
      const auto k = kernel(compose(sf, sg));
      std::uint64_t zeros = 0, total = 1;
      for (int i = 0; i < c; ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        FqVector v(c);
        std::uint64_t r = idx;
        for (int i = 0; i < c; ++i) {
          v(i) = f.from_int(static_cast<long long>(r % p));
          r /= p;
        }
        if (is_zero(FqMatrix(sf(sg(v))))) ++zeros;
      }
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < k.basis.size(); ++i) expect *= p;
      EXPECT_EQ(zeros, expect);
    }
  }
}

TEST(SemilinearMap, RankStableUnderBaseExtension) {
  std::mt19937 rng(23);
  const std::vector<std::pair<const GaloisField*, const GaloisField*>> pairs = {
      {&GaloisField::make(2), &GaloisField::make(2, 2)},
      {&GaloisField::make(3), &GaloisField::make(3, 2)},
      {&GaloisField::make(2, 2), &GaloisField::make(2, 4)},
  };
  for (auto [base, ext] : pairs) {
    const FieldEmbedding e(*base, *ext);
    for (int trial = 0; trial < 20; ++trial) {
      FqMatrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rng() % 2 ? base->zero() : base->random(rng);
      const SemilinearMap s(*base, m, -1);
      EXPECT_EQ(kernel(s).rank, kernel(embed(e, s)).rank);
    }
  }
}

TEST(FieldEmbedding, IsRingHomomorphism) {
  const auto& f4 = GaloisField::make(2, 2);
  const auto& f16 = GaloisField::make(2, 4);
  const FieldEmbedding e(f4, f16);
  for (const Fq& a : f4.elements())
    for (const Fq& b : f4.elements()) {
      EXPECT_EQ(e(a + b), e(a) + e(b));
      EXPECT_EQ(e(a * b), e(a) * e(b));
    }
}

}  // namespace
}  // namespace pinch
