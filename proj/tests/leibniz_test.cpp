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

#include <functional>
#include <map>

#include "pinch/leibniz.hpp"
#include "pinch/linalg.hpp"

namespace pinch {
namespace {

NcPoly mono(const GaloisField& f, std::initializer_list<int> letters, long long c = 1) {
  Word w;
  for (int l : letters) w.push_back(static_cast<Letter>(l));
  return NcPoly::monomial(w, f.from_int(c));
}

NcPoly one(const GaloisField& f) { return NcPoly::constant(f.one()); }

bool is_p_power(unsigned p, int i) {
  int q = 1;
  while (q < i) q *= static_cast<int>(p);
  return q == i;
}

int floor_log(unsigned p, int i) {
  int k = 0;
  for (long long q = p; q <= i; q *= p) ++k;
  return k;
}

TEST(Leibniz, Presentation) {
  const auto& f = GaloisField::make(2);
  const auto z1 = leibniz_presentation(1, f);
  ASSERT_EQ(z1.size(), 1u);
  EXPECT_TRUE(z1.generators()[0].corrections.empty());
  const auto z3 = leibniz_presentation(3, f);
  TensorSquare corr;
  for (const auto& c : z3.generators()[2].corrections) corr += tensor(c.left, c.right);
  EXPECT_EQ(corr, tensor(mono(f, {0}), mono(f, {1})) + tensor(mono(f, {1}), mono(f, {0})));
  EXPECT_TRUE(check_axioms(leibniz_presentation(4, f), 4).ok);
}

TEST(Leibniz, AntipodeElements) {
  const auto& f = GaloisField::make(5);
  const auto s = antipode_elements(3, f);
  EXPECT_EQ(s[0], mono(f, {0}, -1));
  EXPECT_EQ(s[1], mono(f, {1}, -1) + mono(f, {0, 0}));
  EXPECT_EQ(s[2], mono(f, {2}, -1) + mono(f, {0, 1}) + mono(f, {1, 0}) + mono(f, {0, 0, 0}, -1));
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& g = GaloisField::make(p);
    const auto z = leibniz_presentation(6, g);
    const auto elems = antipode_elements(6, g);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(elems[n - 1], antipode(z, z.letter(static_cast<Letter>(n - 1))));
  }
}

TEST(ExtendCurve, Examples) {
  const auto& f = GaloisField::make(2);
  const auto z = leibniz_presentation(2, f);
  const Curve c1{mono(f, {0})};
  const auto sols = extend_curve(z, c1, {mono(f, {1}), mono(f, {0, 0})});
  ASSERT_FALSE(sols.empty());
  EXPECT_EQ(*sols.particular, mono(f, {1}));
  ASSERT_EQ(sols.homogeneous.size(), 1u);
  EXPECT_EQ(sols.homogeneous[0], mono(f, {0, 0}));
  for (const NcPoly& e2 : {mono(f, {1}), mono(f, {1}) + mono(f, {0, 0})})
    EXPECT_TRUE(is_curve(z, {c1[0], e2}));

  EXPECT_TRUE(extend_curve(z, c1, {mono(f, {0, 0})}).empty());

  const auto prim = extend_curve(z, {}, {mono(f, {0}), mono(f, {0, 0})});
  ASSERT_FALSE(prim.empty());
  EXPECT_TRUE(prim.particular->is_zero());
  EXPECT_EQ(prim.homogeneous.size(), 2u);
}

TEST(MinimalCurve, Examples) {
  const auto& f2 = GaloisField::make(2);
  const auto c2 = minimal_curve(2, 3, f2);
  EXPECT_EQ(c2[0], mono(f2, {0}));
  EXPECT_EQ(c2[1], mono(f2, {1}));
  // Lex-least in word order; Z1.Z2 + Z1.Z1.Z1 is the other solution.
  EXPECT_EQ(c2[2], mono(f2, {1, 0}) + mono(f2, {0, 0, 0}));

  const auto& f3 = GaloisField::make(3);
  const auto c3 = minimal_curve(3, 3, f3);
  EXPECT_EQ(c3[0], mono(f3, {0}));
  EXPECT_EQ(c3[1], mono(f3, {0, 0}, 2));
  EXPECT_THROW(minimal_curve(3, 2, f2), Error);
}

void expect_minimal_curve(unsigned p, int n, TieBreak tie) {
  const auto& f = GaloisField::make(p);
  const auto z = leibniz_presentation(n, f);
  const Curve c = minimal_curve(p, n, f, tie);
  ASSERT_EQ(static_cast<int>(c.size()), n);
  EXPECT_TRUE(is_curve(z, c));
  std::vector<NcPoly> gens;
  std::vector<int> degrees;
  for (int i = 1; i <= n; ++i) {
    for (const auto& [w, coeff] : c[i - 1].terms()) ASSERT_EQ(z.weight(w), i) << "E" << i;
    if (is_p_power(p, i)) {
      const NcPoly rest = c[i - 1] - z.letter(static_cast<Letter>(i - 1));
      for (const auto& [w, coeff] : rest.terms())
        for (Letter l : w) ASSERT_LT(l, i - 1) << "E" << i;
      gens.push_back(c[i - 1]);
      degrees.push_back(i);
    }
    // Generators of k{E_1..E_{p^||i||}}: every E_j with j <= p^||i||.
    std::vector<NcPoly> lower;
    std::vector<int> lower_degrees;
    int top = 1;
    for (int k = 0; k < floor_log(p, i); ++k) top *= static_cast<int>(p);
    for (int j = 1; j <= top; ++j) {
      lower.push_back(c[j - 1]);
      lower_degrees.push_back(j);
    }
    EXPECT_TRUE(in_generated_subalgebra(z, c[i - 1], i, lower, lower_degrees)) << "E" << i;
  }
}

TEST(MinimalCurve, DesiredPropertiesToEight) { expect_minimal_curve(2, 8, TieBreak::LexLeast); }
TEST(MinimalCurve, DesiredPropertiesToNine) { expect_minimal_curve(3, 9, TieBreak::LexLeast); }
TEST(MinimalCurve, OtherTieBreakIsAlsoMinimal) {
  expect_minimal_curve(2, 8, TieBreak::LexGreatest);
  expect_minimal_curve(3, 9, TieBreak::LexGreatest);
}

Eigen::Index span_rank(const GaloisField& f, const std::vector<NcPoly>& polys) {
  std::map<Word, Eigen::Index, WordOrder> rows;
  for (const auto& x : polys)
    for (const auto& [w, c] : x.terms()) rows.try_emplace(w, static_cast<Eigen::Index>(rows.size()));
  FqMatrix m = zero_matrix(f, static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(polys.size()));
  for (std::size_t k = 0; k < polys.size(); ++k)
    for (const auto& [w, c] : polys[k].terms()) m(rows.at(w), static_cast<Eigen::Index>(k)) = c;
  return rank(m);
}

// Z_i -> E_i' is a Hopf map, so the degree-d pieces of k{E_i} and k{E_i'},
// spanned by products of curve terms, have equal dimension.
TEST(MinimalCurve, TieBreaksGiveEqualGradedDimensions) {
  for (auto [p, n] : {std::pair{2u, 8}, std::pair{3u, 9}}) {
    const auto& f = GaloisField::make(p);
    const Curve a = minimal_curve(p, n, f, TieBreak::LexLeast);
    const Curve b = minimal_curve(p, n, f, TieBreak::LexGreatest);
    auto products = [&](const Curve& c, int d) {
      std::vector<NcPoly> out;
      std::function<void(int, const NcPoly&)> grow = [&](int rest, const NcPoly& prod) {
        if (rest == 0) {
          out.push_back(prod);
          return;
        }
        for (int j = 1; j <= rest; ++j) grow(rest - j, prod * c[j - 1]);
      };
      grow(d, one(f));
      return out;
    };
    for (int d = 1; d <= n; ++d)
      EXPECT_EQ(span_rank(f, products(a, d)), span_rank(f, products(b, d))) << "p=" << p << " d=" << d;
  }
}

TEST(Verschiebung, LeibnizGenerators) {
  for (unsigned p : {2u, 3u}) {
    const auto& f = GaloisField::make(p);
    const auto z = leibniz_presentation(8, f);
    for (int h = 1; h <= 8; ++h) {
      const NcPoly v = verschiebung(z, z.letter(static_cast<Letter>(h - 1)));
      if (h % static_cast<int>(p) == 0)
        EXPECT_EQ(v, z.letter(static_cast<Letter>(h / p - 1))) << "p=" << p << " h=" << h;
      else
        EXPECT_TRUE(v.is_zero()) << "p=" << p << " h=" << h;
    }
  }
}

TEST(Verschiebung, MinimalCurvePowers) {
  const auto& f2 = GaloisField::make(2);
  const auto z2 = leibniz_presentation(2, f2);
  const auto c = minimal_curve(2, 2, f2);
  EXPECT_EQ(verschiebung(z2, c[1]), c[0]);
  EXPECT_TRUE(verschiebung(z2, verschiebung(z2, c[1])).is_zero());

  for (auto [p, n] : {std::pair{2u, 8}, std::pair{3u, 9}}) {
    const auto& f = GaloisField::make(p);
    const auto z = leibniz_presentation(n, f);
    const Curve e = minimal_curve(p, n, f);
    int i = 0;
    for (int q = 1; q <= n && q <= 8; q *= static_cast<int>(p), ++i) {
      NcPoly x = e[q - 1];
      for (int k = 0; k < i; ++k) x = verschiebung(z, x);
      EXPECT_FALSE(x.is_zero()) << "Ver^" << i << " E" << q;
      EXPECT_TRUE(verschiebung(z, x).is_zero()) << "Ver^" << i + 1 << " E" << q;
    }
  }
}

TEST(NwPresentation, Examples) {
  const auto& f2 = GaloisField::make(2);
  const auto nw1 = nw_presentation(1, 2, f2, 1);
  ASSERT_EQ(nw1.size(), 1u);
  EXPECT_TRUE(nw1.generators()[0].corrections.empty());
  const auto ab = abelianize(nw1);
  EXPECT_EQ(coproduct(ab, ab.letter(0)), tensor(mono(f2, {0}), one(f2)) + tensor(one(f2), mono(f2, {0})));

  const auto nw2 = nw_presentation(2, 2, f2, 2);
  EXPECT_EQ(nw2.names(), (std::vector<std::string>{"E1", "E2"}));
  ASSERT_EQ(nw2.generators()[1].corrections.size(), 1u);
  EXPECT_EQ(nw2.generators()[1].corrections[0].left, mono(f2, {0}));
  EXPECT_EQ(nw2.generators()[1].corrections[0].right, mono(f2, {0}));

  const auto& f3 = GaloisField::make(3);
  const auto nw3 = nw_presentation(2, 3, f3, 3);
  EXPECT_EQ(nw3.names(), (std::vector<std::string>{"E1", "E3"}));
  TensorSquare corr;
  for (const auto& c : nw3.generators()[1].corrections) corr += tensor(c.left, c.right);
  EXPECT_EQ(corr, tensor(mono(f3, {0}), mono(f3, {0, 0}, 2)) + tensor(mono(f3, {0, 0}, 2), mono(f3, {0})));

  EXPECT_THROW(nw_presentation(3, 2, f2, 3), Error);
}

TEST(NwPresentation, GeneratorImagesFormHopfMap) {
  for (auto [p, l] : {std::pair{2u, 3}, std::pair{2u, 4}, std::pair{3u, 3}}) {
    const auto& f = GaloisField::make(p);
    const auto nw = nw_presentation(l, p, f, 64);
    const auto images = nw_generator_images(l, p, f);
    int top = 1;
    for (int a = 1; a < l; ++a) top *= static_cast<int>(p);
    const auto z = leibniz_presentation(top, f);
    auto phi = [&](const NcPoly& x) {
      NcPoly out;
      for (const auto& [w, c] : x.terms()) {
        NcPoly t = NcPoly::constant(c);
        for (Letter g : w) t = t * images[g];
        out += t;
      }
      return out;
    };
    for (std::size_t g = 0; g < nw.size(); ++g) {
      TensorSquare pushed;
      for (const auto& [k, c] : nw.generator_coproduct(static_cast<Letter>(g)).terms()) {
        TensorSquare t = tensor(phi(NcPoly::monomial(k[0], f.one())), phi(NcPoly::monomial(k[1], f.one())));
        t *= c;
        pushed += t;
      }
      EXPECT_EQ(coproduct(z, images[g]), pushed) << "p=" << p << " l=" << l << " g=" << g;
    }
  }
}

TEST(NwPresentation, AxiomSuite) {
  for (int l = 1; l <= 3; ++l) {
    const auto& f2 = GaloisField::make(2);
    const auto r2 = check_axioms(nw_presentation(l, 2, f2, 8), 6);
    EXPECT_TRUE(r2.ok) << "l=" << l << " " << r2.axiom;
    const auto& f3 = GaloisField::make(3);
    const auto r3 = check_axioms(nw_presentation(l, 3, f3, 9), 4);
    EXPECT_TRUE(r3.ok) << "l=" << l << " " << r3.axiom;
  }
  const auto& f2 = GaloisField::make(2);
  const auto fp = free_product(nw_presentation(1, 2, f2, 1), nw_presentation(2, 2, f2, 2));
  EXPECT_TRUE(check_axioms(fp, 6).ok);
}

TEST(NwPresentation, FreeProductWordCounts) {
  const auto& f = GaloisField::make(2);
  const auto fp = free_product(nw_presentation(1, 2, f, 1), nw_presentation(2, 2, f, 2));
  // Both sides are free on three letters.
  std::vector<int> counts(5, 0);
  std::vector<int> free_counts(5, 0);
  std::vector<Generator> three;
  for (int i = 0; i < 3; ++i) three.push_back({"e" + std::to_string(i + 1), 1, {}});
  const HopfPresentation tensor_alg(f, three);
  for (const Word& w : words_up_to(fp, 8))
    if (w.size() <= 4) ++counts[w.size()];
  for (const Word& w : words_up_to(tensor_alg, 4)) ++free_counts[w.size()];
  EXPECT_EQ(counts, free_counts);
}

}  // namespace
}  // namespace pinch
