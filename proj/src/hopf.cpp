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

#include "pinch/hopf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace pinch {

struct HopfPresentation::AntipodeCache {
  std::shared_mutex mutex;
  std::map<Letter, NcPoly> values;
};

namespace {

void check_letters(const Word& w, std::size_t size) {
  for (Letter l : w)
    if (l >= size) throw Error(ErrorCode::UnknownGenerator, "letter " + std::to_string(l));
}

TensorSquare unit_tensor(const GaloisField& f) {
  TensorSquare t;
  t.add({Word{}, Word{}}, f.one());
  return t;
}

}  // namespace

HopfPresentation::HopfPresentation(const GaloisField& field, std::vector<Generator> generators,
                                   bool commutative)
    : field_(&field),
      generators_(std::move(generators)),
      commutative_(commutative),
      cache_(std::make_shared<AntipodeCache>()) {
  if (generators_.size() > 0xffff)
    throw Error(ErrorCode::InvalidPresentation, "too many generators");
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    auto& gen = generators_[g];
    if (gen.weight < 1)
      throw Error(ErrorCode::InvalidPresentation, gen.name + " has non-positive weight");
    for (auto& c : gen.corrections) {
      if (commutative_) {
        c.left = commutative_image(c.left);
        c.right = commutative_image(c.right);
      }
      for (const NcPoly* leg : {&c.left, &c.right}) {
        if (!is_zero(leg->coeff({})))
          throw Error(ErrorCode::InvalidPresentation,
                      "correction of " + gen.name + " has a constant term");
        for (const auto& [w, coeff] : leg->terms()) {
          check_letters(w, generators_.size());
          for (Letter l : w)
            if (generators_[l].weight >= gen.weight)
              throw Error(ErrorCode::NotWellFounded,
                          "correction of " + gen.name + " uses " + generators_[l].name);
        }
      }
    }
  }
  coproducts_.reserve(generators_.size());
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const NcPoly x = letter(static_cast<Letter>(g));
    const NcPoly one = NcPoly::constant(field_->one());
    TensorSquare d = tensor(x, one) + tensor(one, x);
    for (const auto& c : generators_[g].corrections) {
      TensorSquare t = tensor(c.left, c.right);
      t *= c.coeff;
      d += t;
    }
    coproducts_.push_back(std::move(d));
  }
}

std::vector<std::string> HopfPresentation::names() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.name);
  return out;
}

NcPoly HopfPresentation::letter(Letter g) const {
  check_letters({g}, size());
  return NcPoly::monomial({g}, field_->one());
}

int HopfPresentation::weight(const Word& w) const {
  int s = 0;
  for (Letter l : w) s += generators_.at(l).weight;
  return s;
}

NcPoly HopfPresentation::normalize(const NcPoly& x) const {
  return commutative_ ? commutative_image(x) : x;
}

TensorSquare HopfPresentation::normalize(const TensorSquare& t) const {
  return commutative_ ? commutative_image(t) : t;
}

const NcPoly& HopfPresentation::generator_antipode(Letter g) const {
  check_letters({g}, size());
  return antipode_at(g, 0);
}

const NcPoly& HopfPresentation::antipode_at(Letter g, std::size_t depth) const {
  {
    std::shared_lock lock(cache_->mutex);
    const auto it = cache_->values.find(g);
    if (it != cache_->values.end()) return it->second;
  }
  if (depth > size())
    throw Error(ErrorCode::NonTerminating, "antipode recursion at " + generators_[g].name);
  NcPoly s = -letter(g);
  for (const auto& c : generators_[g].corrections)
    s -= c.coeff * (antipode_of(c.left, depth + 1) * c.right);
  s = normalize(s);
  std::unique_lock lock(cache_->mutex);
  return cache_->values.try_emplace(g, std::move(s)).first->second;
}

NcPoly HopfPresentation::antipode_of(const NcPoly& x, std::size_t depth) const {
  NcPoly out;
  for (const auto& [w, c] : x.terms()) {
    check_letters(w, size());
    NcPoly term = NcPoly::constant(c);
    for (Letter l : w) term = antipode_at(l, depth) * term;
    out += term;
  }
  return normalize(out);
}

NcPoly mul(const HopfPresentation& h, const NcPoly& x, const NcPoly& y) {
  return h.normalize(x * y);
}

TensorSquare coproduct(const HopfPresentation& h, const Word& w) {
  check_letters(w, h.size());
  TensorSquare t = unit_tensor(h.field());
  for (Letter l : w) t = h.normalize(t * h.generator_coproduct(l));
  return t;
}

TensorSquare coproduct(const HopfPresentation& h, const NcPoly& x) {
  TensorSquare out;
  for (const auto& [w, c] : x.terms()) {
    TensorSquare t = coproduct(h, w);
    t *= c;
    out += t;
  }
  return out;
}

Fq counit(const HopfPresentation& h, const NcPoly& x) { return h.field().bind(x.coeff({})); }

NcPoly antipode(const HopfPresentation& h, const NcPoly& x) {
  return h.antipode_of(h.normalize(x), 0);
}

std::vector<Word> words_up_to(const HopfPresentation& h, int weight_bound) {
  std::vector<Word> out;
  Word w;
  std::function<void(int, Letter)> grow = [&](int budget, Letter from) {
    out.push_back(w);
    for (std::size_t l = h.is_commutative() ? from : 0; l < h.size(); ++l) {
      const int wt = h.generators()[l].weight;
      if (wt > budget) continue;
      w.push_back(static_cast<Letter>(l));
      grow(budget - wt, static_cast<Letter>(l));
      w.pop_back();
    }
  };
  grow(weight_bound, 0);
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

AxiomReport check_axioms(const HopfPresentation& h, int degree_bound) {
  const GaloisField& f = h.field();
  std::map<Word, TensorSquare, WordOrder> deltas;
  std::map<Word, NcPoly, WordOrder> antipodes;

  std::function<const TensorSquare&(const Word&)> delta_of = [&](const Word& w) -> const TensorSquare& {
    if (auto it = deltas.find(w); it != deltas.end()) return it->second;
    TensorSquare d = w.empty() ? unit_tensor(f)
                               : h.normalize(delta_of(Word(w.begin(), w.end() - 1)) *
                                             h.generator_coproduct(w.back()));
    return deltas.emplace(w, std::move(d)).first->second;
  };
  std::function<const NcPoly&(const Word&)> antipode_word = [&](const Word& w) -> const NcPoly& {
    if (auto it = antipodes.find(w); it != antipodes.end()) return it->second;
    NcPoly s = w.empty() ? NcPoly::constant(f.one())
                         : h.normalize(h.generator_antipode(w.back()) *
                                       antipode_word(Word(w.begin(), w.end() - 1)));
    return antipodes.emplace(w, std::move(s)).first->second;
  };

  AxiomReport report;
  auto fail = [&](const char* axiom, const Word& w) {
    report.ok = false;
    report.axiom = axiom;
    report.witness = w;
    return report;
  };

  for (const Word& w : words_up_to(h, degree_bound)) {
    ++report.words_checked;
    const TensorSquare& d = delta_of(w);
    const NcPoly self = NcPoly::monomial(w, f.one());
    const NcPoly unit = w.empty() ? NcPoly::constant(f.one()) : NcPoly{};

    NcPoly left_counit, right_counit, left_antipode, right_antipode;
    TensorCube lhs, rhs;
    for (const auto& [k, c] : d.terms()) {
      if (k[0].empty()) left_counit.add(k[1], c);
      if (k[1].empty()) right_counit.add(k[0], c);
      for (const auto& [k0, c0] : delta_of(k[0]).terms()) lhs.add({k0[0], k0[1], k[1]}, c * c0);
      for (const auto& [k1, c1] : delta_of(k[1]).terms()) rhs.add({k[0], k1[0], k1[1]}, c * c1);
      left_antipode += c * (antipode_word(k[0]) * NcPoly::monomial(k[1], f.one()));
      right_antipode += c * (NcPoly::monomial(k[0], f.one()) * antipode_word(k[1]));
    }
    if (left_counit != self || right_counit != self) return fail("counit", w);
    if (lhs != rhs) return fail("coassociativity", w);
    if (h.normalize(left_antipode) != unit) return fail("antipode-left", w);
    if (h.normalize(right_antipode) != unit) return fail("antipode-right", w);
    if (flip(d) != d) return fail("cocommutativity", w);
  }

  for (std::size_t g = 0; g < h.size(); ++g) {
    const Letter l = static_cast<Letter>(g);
    const TensorSquare lhs = coproduct(h, h.generator_antipode(l));
    const TensorSquare flipped = flip(h.generator_coproduct(l));
    TensorSquare rhs;
    for (const auto& [k, c] : flipped.terms()) {
      TensorSquare t = tensor(antipode_word(k[0]), antipode_word(k[1]));
      t *= c;
      rhs += t;
    }
    if (lhs != h.normalize(rhs)) return fail("antipode-antimorphism", {l});
  }
  return report;
}

std::vector<Fq> Subcoalgebra::coordinates(const NcPoly& y) const {
  const Fq zero = zero_like(basis[0].coeff({}));
  std::vector<Fq> out(basis.size(), zero);
  for (const auto& [w, c] : y.terms()) {
    const auto it = word_index.find(w);
    if (it == word_index.end())
      throw Error(ErrorCode::ShapeMismatch, "element outside the subcoalgebra");
    out[it->second] += c;
  }
  if (basis.size() > 1 && !pivot.empty()) {
    // out holds word coordinates with the pivot word at index 1; rewrite
    // pivot = (x - sum_{w != pivot} x_w w) / x_pivot.
    const NcPoly& x = basis[1];
    const Fq scale = out[1] / x.coeff(pivot);
    out[1] = scale;
    for (const auto& [w, c] : x.terms())
      if (w != pivot) out[word_index.at(w)] -= scale * c;
  }
  return out;
}

Subcoalgebra finite_subcoalgebra(const HopfPresentation& h, const NcPoly& x_in) {
  const NcPoly x = h.normalize(x_in);
  std::map<Word, TensorSquare, WordOrder> deltas;
  std::vector<Word> queue{Word{}};
  for (const auto& [w, c] : x.terms()) queue.push_back(w);
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    if (deltas.count(w)) continue;
    TensorSquare d = coproduct(h, w);
    for (const auto& [k, c] : d.terms())
      for (const Word& leg : k)
        if (!deltas.count(leg)) queue.push_back(leg);
    deltas.emplace(std::move(w), std::move(d));
  }

  Subcoalgebra out;
  const Fq one = h.field().one();
  out.basis.push_back(NcPoly::constant(one));
  out.word_index[Word{}] = 0;
  const bool scalar = x.is_zero() || x.terms().rbegin()->first.empty();
  if (!scalar) {
    out.pivot = x.terms().rbegin()->first;
    out.basis.push_back(x);
    out.word_index[out.pivot] = 1;
  }
  for (const auto& [w, d] : deltas) {
    if (w.empty() || w == out.pivot) continue;
    out.word_index[w] = static_cast<int>(out.basis.size());
    out.basis.push_back(NcPoly::monomial(w, one));
  }

  auto leg_coords = [&](const Word& w) {
    std::vector<std::pair<int, Fq>> v;
    const auto c = out.coordinates(NcPoly::monomial(w, one));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i])) v.emplace_back(static_cast<int>(i), c[i]);
    return v;
  };
  std::map<Word, std::vector<std::pair<int, Fq>>, WordOrder> legs;
  for (const auto& [w, d] : deltas) legs.emplace(w, leg_coords(w));

  out.delta.resize(out.basis.size());
  for (std::size_t k = 0; k < out.basis.size(); ++k) {
    std::map<std::pair<int, int>, Fq> acc;
    for (const auto& [w, c] : out.basis[k].terms())
      for (const auto& [key, cd] : deltas.at(w).terms())
        for (const auto& [i, ci] : legs.at(key[0]))
          for (const auto& [j, cj] : legs.at(key[1])) {
            auto [it, fresh] = acc.try_emplace({i, j}, c * cd * ci * cj);
            if (!fresh) it->second += c * cd * ci * cj;
          }
    for (const auto& [ij, c] : acc)
      if (!is_zero(c)) out.delta[k].push_back({ij.first, ij.second, c});
  }
  return out;
}

NcPoly verschiebung(const HopfPresentation& h, const NcPoly& x_in) {
  const NcPoly x = h.normalize(x_in);
  const Subcoalgebra sub = finite_subcoalgebra(h, x);
  const std::size_t n = sub.basis.size();
  const auto xc = sub.coordinates(x);
  const unsigned p = h.field().characteristic();
  const Fq zero = h.field().zero();

  struct Entry {
    int target;
    int left;
    Fq coeff;
  };
  std::vector<std::vector<Entry>> by_right(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : sub.delta[j]) by_right[t.right].push_back({static_cast<int>(j), t.left, t.coeff});

  NcPoly out;
  for (std::size_t k = 0; k < n; ++k) {
    // g = (b_k*)^m evaluated on the basis, starting from m = 1.
    std::vector<Fq> g(n, zero);
    g[k] = h.field().one();
    for (unsigned m = 1; m < p; ++m) {
      std::vector<Fq> next(n, zero);
      for (const auto& e : by_right[k]) next[e.target] += e.coeff * g[e.left];
      g = std::move(next);
    }
    Fq value = zero;
    for (std::size_t j = 0; j < n; ++j) value += xc[j] * g[j];
    if (!is_zero(value)) out += frobenius(value, -1) * sub.basis[k];
  }
  return h.normalize(out);
}

HopfPresentation abelianize(const HopfPresentation& h) {
  return HopfPresentation(h.field(), h.generators(), true);
}

HopfPresentation free_product(const HopfPresentation& a, const HopfPresentation& b) {
  if (&a.field() != &b.field())
    throw Error(ErrorCode::FieldMismatch, "free product over different fields");
  if (a.is_commutative() || b.is_commutative())
    throw Error(ErrorCode::InvalidPresentation, "free product of commutative presentations");
  const Letter shift = static_cast<Letter>(a.size());
  auto shifted = [&](const NcPoly& x) {
    NcPoly out;
    for (const auto& [w, c] : x.terms()) {
      Word s = w;
      for (Letter& l : s) l = static_cast<Letter>(l + shift);
      out.add(s, c);
    }
    return out;
  };
  std::vector<Generator> gens = a.generators();
  std::set<std::string> taken;
  for (const auto& g : gens) taken.insert(g.name);
  for (Generator g : b.generators()) {
    while (taken.count(g.name)) g.name += '\'';
    taken.insert(g.name);
    for (auto& c : g.corrections) {
      c.left = shifted(c.left);
      c.right = shifted(c.right);
    }
    gens.push_back(std::move(g));
  }
  return HopfPresentation(a.field(), std::move(gens));
}

std::string to_string(const HopfPresentation& h, const NcPoly& x) {
  return to_string(x, h.names());
}

}  // namespace pinch
