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

#include "pinch/leibniz.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "pinch/linalg.hpp"

namespace pinch {

namespace {

bool is_power_of(unsigned p, int i) {
  long long q = 1;
  while (q < i) q *= p;
  return q == i;
}

TensorSquare reduced_coproduct(const HopfPresentation& h, const NcPoly& x) {
  const NcPoly one = NcPoly::constant(h.field().one());
  return coproduct(h, x) - tensor(x, one) - tensor(one, x);
}

NcPoly combination(const std::vector<NcPoly>& basis, const FqVector& coeffs) {
  NcPoly out;
  for (std::size_t s = 0; s < basis.size(); ++s) out += coeffs(static_cast<Eigen::Index>(s)) * basis[s];
  return out;
}

}  // namespace

AffineSolutions solve_reduced_coproduct(const HopfPresentation& h, const NcPoly& offset,
                                        const std::vector<NcPoly>& subspace, TensorSquare rhs) {
  rhs -= reduced_coproduct(h, offset);
  std::vector<TensorSquare> cols;
  for (const auto& s : subspace) cols.push_back(reduced_coproduct(h, s));

  std::map<TensorSquare::Key, Eigen::Index, TensorSquare::KeyOrder> rows;
  auto index_keys = [&](const TensorSquare& t) {
    for (const auto& [k, c] : t.terms()) rows.try_emplace(k, static_cast<Eigen::Index>(rows.size()));
  };
  for (const auto& c : cols) index_keys(c);
  index_keys(rhs);

  const GaloisField& f = h.field();
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto ncols = static_cast<Eigen::Index>(cols.size());
  FqMatrix a = zero_matrix(f, nrows, ncols);
  FqVector b = zero_vector(f, nrows);
  for (Eigen::Index s = 0; s < ncols; ++s)
    for (const auto& [k, c] : cols[s].terms()) a(rows.at(k), s) = c;
  for (const auto& [k, c] : rhs.terms()) b(rows.at(k)) = c;

  AffineSolutions out;
  const auto x = solve(a, b);
  if (!x) return out;
  out.particular = offset + combination(subspace, *x);
  const FqMatrix ker = kernel(a);
  for (Eigen::Index k = 0; k < ker.cols(); ++k) {
    NcPoly v = combination(subspace, ker.col(k));
    if (!v.is_zero()) out.homogeneous.push_back(std::move(v));
  }
  return out;
}

namespace {

TensorSquare middle_terms(const Curve& curve) {
  const int l = static_cast<int>(curve.size());
  TensorSquare t;
  for (int i = 1; i <= l; ++i) t += tensor(curve[i - 1], curve[l - i]);
  return t;
}

}  // namespace

NcPoly pick_solution(const GaloisField& f, const AffineSolutions& s, TieBreak tie) {
  std::map<Word, Eigen::Index, WordOrder> words;
  for (const auto& [w, c] : s.particular->terms()) words.try_emplace(w, 0);
  for (const auto& v : s.homogeneous)
    for (const auto& [w, c] : v.terms()) words.try_emplace(w, 0);
  std::vector<Word> order;
  for (auto& [w, i] : words) {
    i = static_cast<Eigen::Index>(order.size());
    order.push_back(w);
  }
  const auto n = static_cast<Eigen::Index>(order.size());
  auto coords = [&](const NcPoly& x) {
    FqVector v = zero_vector(f, n);
    for (const auto& [w, c] : x.terms()) v(words.at(w)) = c;
    return v;
  };
  FqMatrix hom = zero_matrix(f, n, static_cast<Eigen::Index>(s.homogeneous.size()));
  for (std::size_t k = 0; k < s.homogeneous.size(); ++k)
    hom.col(static_cast<Eigen::Index>(k)) = coords(s.homogeneous[k]);
  const Fq fill = tie == TieBreak::LexLeast ? f.zero() : f.element(f.order() - 1);
  const FqVector x = affine_representative(coords(*s.particular), hom, fill);
  NcPoly out;
  for (Eigen::Index i = 0; i < n; ++i) out.add(order[i], x(i));
  return out;
}

namespace {

// Words of weighted degree exactly `degree` over letters with the given weights.
std::vector<Word> words_of_degree(const std::vector<int>& weights, int degree) {
  std::vector<Word> out;
  Word w;
  std::function<void(int)> grow = [&](int rest) {
    if (rest == 0) {
      out.push_back(w);
      return;
    }
    for (std::size_t l = 0; l < weights.size(); ++l) {
      if (weights[l] > rest) continue;
      w.push_back(static_cast<Letter>(l));
      grow(rest - weights[l]);
      w.pop_back();
    }
  };
  grow(degree);
  return out;
}

NcPoly evaluate_word(const GaloisField& f, const Word& w, const std::vector<NcPoly>& images) {
  NcPoly x = NcPoly::constant(f.one());
  for (Letter l : w) x = x * images[l];
  return x;
}

// Coefficients expressing x in the span of `spanning`, or nullopt.
std::optional<FqVector> coordinates_in(const GaloisField& f, const NcPoly& x,
                                       const std::vector<NcPoly>& spanning) {
  std::map<Word, Eigen::Index, WordOrder> rows;
  for (const auto& s : spanning)
    for (const auto& [w, c] : s.terms()) rows.try_emplace(w, static_cast<Eigen::Index>(rows.size()));
  for (const auto& [w, c] : x.terms()) rows.try_emplace(w, static_cast<Eigen::Index>(rows.size()));
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  FqMatrix a = zero_matrix(f, nrows, static_cast<Eigen::Index>(spanning.size()));
  FqVector b = zero_vector(f, nrows);
  for (std::size_t s = 0; s < spanning.size(); ++s)
    for (const auto& [w, c] : spanning[s].terms()) a(rows.at(w), static_cast<Eigen::Index>(s)) = c;
  for (const auto& [w, c] : x.terms()) b(rows.at(w)) = c;
  return solve(a, b);
}

}  // namespace

HopfPresentation leibniz_presentation(int m, const GaloisField& field) {
  if (m < 1) throw Error(ErrorCode::InvalidPresentation, "Z(m) needs m >= 1");
  std::vector<Generator> gens;
  auto z = [&](int i) { return NcPoly::monomial({static_cast<Letter>(i - 1)}, field.one()); };
  for (int h = 1; h <= m; ++h) {
    Generator g{"Z" + std::to_string(h), h, {}};
    for (int i = 1; i < h; ++i) g.corrections.push_back({field.one(), z(i), z(h - i)});
    gens.push_back(std::move(g));
  }
  return HopfPresentation(field, std::move(gens));
}

std::vector<NcPoly> antipode_elements(int m, const GaloisField& field) {
  std::vector<NcPoly> s{NcPoly::constant(field.one())};
  for (int n = 1; n <= m; ++n) {
    NcPoly sn;
    for (int i = 0; i < n; ++i)
      sn -= s[i] * NcPoly::monomial({static_cast<Letter>(n - i - 1)}, field.one());
    s.push_back(std::move(sn));
  }
  s.erase(s.begin());
  return s;
}

bool is_curve(const HopfPresentation& h, const Curve& c) {
  const NcPoly one = NcPoly::constant(h.field().one());
  auto at = [&](int i) -> const NcPoly& { return i == 0 ? one : c[i - 1]; };
  for (int j = 1; j <= static_cast<int>(c.size()); ++j) {
    TensorSquare expect;
    for (int i = 0; i <= j; ++i) expect += tensor(at(i), at(j - i));
    if (coproduct(h, at(j)) != h.normalize(expect)) return false;
  }
  return true;
}

AffineSolutions extend_curve(const HopfPresentation& h, const Curve& curve,
                             const std::vector<NcPoly>& subspace) {
  return solve_reduced_coproduct(h, NcPoly{}, subspace, h.normalize(middle_terms(curve)));
}

bool in_generated_subalgebra(const HopfPresentation& h, const NcPoly& x, int degree,
                             const std::vector<NcPoly>& generators,
                             const std::vector<int>& generator_degrees) {
  std::vector<NcPoly> products;
  for (const Word& w : words_of_degree(generator_degrees, degree))
    products.push_back(h.normalize(evaluate_word(h.field(), w, generators)));
  return coordinates_in(h.field(), x, products).has_value();
}

Curve minimal_curve(unsigned p, int n, const GaloisField& field, TieBreak tie_break) {
  if (p != field.characteristic())
    throw Error(ErrorCode::FieldMismatch, "p differs from the characteristic");
  if (n < 1) throw Error(ErrorCode::InvalidPresentation, "curve length must be positive");

  using Key = std::tuple<const GaloisField*, int, TieBreak>;
  static std::mutex mutex;
  static std::map<Key, Curve> cache;
  const Key key{&field, n, tie_break};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const HopfPresentation h = leibniz_presentation(n, field);
  std::vector<int> letter_weights;
  for (int i = 1; i <= n; ++i) letter_weights.push_back(i);

  Curve curve;
  std::vector<NcPoly> p_power_terms;
  std::vector<int> p_power_degrees;
  for (int i = 1; i <= n; ++i) {
    NcPoly offset;
    std::vector<NcPoly> subspace;
    if (is_power_of(p, i)) {
      offset = h.letter(static_cast<Letter>(i - 1));
      for (const Word& w : words_of_degree(letter_weights, i))
        if (w.size() > 1) subspace.push_back(NcPoly::monomial(w, field.one()));
    } else {
      for (const Word& w : words_of_degree(p_power_degrees, i))
        subspace.push_back(evaluate_word(field, w, p_power_terms));
    }
    const AffineSolutions sols = solve_reduced_coproduct(h, offset, subspace, middle_terms(curve));
    if (sols.empty()) throw Error(ErrorCode::Unsolvable, "minimal curve at index " + std::to_string(i));
    curve.push_back(pick_solution(field, sols, tie_break));
    if (is_power_of(p, i)) {
      p_power_terms.push_back(curve.back());
      p_power_degrees.push_back(i);
    }
  }

  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(curve)).first->second;
}

std::vector<NcPoly> nw_generator_images(int l, unsigned p, const GaloisField& field) {
  if (l < 1) throw Error(ErrorCode::InvalidPresentation, "NW length must be positive");
  int top = 1;
  for (int a = 1; a < l; ++a) top *= static_cast<int>(p);
  const Curve curve = minimal_curve(p, top, field);
  std::vector<NcPoly> out;
  for (int q = 1; q <= top; q *= static_cast<int>(p)) out.push_back(curve[q - 1]);
  return out;
}

HopfPresentation nw_presentation(int l, unsigned p, const GaloisField& field, int degree_bound) {
  if (l < 1) throw Error(ErrorCode::InvalidPresentation, "NW length must be positive");
  int top = 1;
  for (int a = 1; a < l; ++a) top *= static_cast<int>(p);
  if (top > degree_bound)
    throw Error(ErrorCode::InvalidPresentation, "degree bound below the top generator");

  const Curve curve = minimal_curve(p, top, field);
  const std::vector<NcPoly> images = nw_generator_images(l, p, field);
  std::vector<int> weights;
  for (int q = 1; q <= top; q *= static_cast<int>(p)) weights.push_back(q);

  std::map<int, NcPoly> expressed;
  auto express = [&](int j) -> const NcPoly& {
    if (auto it = expressed.find(j); it != expressed.end()) return it->second;
    const std::vector<Word> words = words_of_degree(weights, j);
    std::vector<NcPoly> values;
    for (const Word& w : words) values.push_back(evaluate_word(field, w, images));
    const auto coeffs = coordinates_in(field, curve[j - 1], values);
    if (!coeffs) throw Error(ErrorCode::ExpressionFailure, "E" + std::to_string(j));
    NcPoly x;
    for (std::size_t k = 0; k < words.size(); ++k) x.add(words[k], (*coeffs)(static_cast<Eigen::Index>(k)));
    return expressed.emplace(j, std::move(x)).first->second;
  };

  std::vector<Generator> gens;
  for (int q : weights) {
    Generator g{"E" + std::to_string(q), q, {}};
    for (int i = 1; i < q; ++i) g.corrections.push_back({field.one(), express(i), express(q - i)});
    gens.push_back(std::move(g));
  }
  return HopfPresentation(field, std::move(gens));
}

}  // namespace pinch
