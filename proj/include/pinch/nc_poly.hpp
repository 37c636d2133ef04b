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

#ifndef PINCH_NC_POLY_HPP
#define PINCH_NC_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pinch/finite_field.hpp"

namespace pinch {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Graded order on words: shorter first, then lexicographic on letters.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);

/// Sparse element of a free algebra: word -> nonzero coefficient. The empty
/// word is the unit. Zero coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Word, Fq, WordOrder>;

  NcPoly() = default;
  static NcPoly constant(const Fq& c);
  static NcPoly monomial(Word w, const Fq& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Literal zero when absent.
  Fq coeff(const Word& w) const;
  // Longest word length; -1 for the zero polynomial.
  int degree() const;

  void add(const Word& w, const Fq& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Fq& c);
  NcPoly operator-() const;
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Fq& c) { return a *= c; }
  friend NcPoly operator*(const Fq& c, NcPoly a) { return a *= c; }
  // Free (concatenation) product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b) = default;

 private:
  Terms terms_;
};

/// Sparse element of the N-fold tensor power of a free algebra.
template <std::size_t N>
class TensorPower {
 public:
  using Key = std::array<Word, N>;
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const {
      for (std::size_t i = 0; i < N; ++i)
        if (a[i] != b[i]) return WordOrder{}(a[i], b[i]);
      return false;
    }
  };
  using Terms = std::map<Key, Fq, KeyOrder>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, const Fq& c) {
    if (pinch::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (pinch::is_zero(it->second)) terms_.erase(it);
  }

  TensorPower& operator+=(const TensorPower& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorPower& operator-=(const TensorPower& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  TensorPower& operator*=(const Fq& s) {
    if (pinch::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend TensorPower operator+(TensorPower a, const TensorPower& b) { return a += b; }
  friend TensorPower operator-(TensorPower a, const TensorPower& b) { return a -= b; }

  // Componentwise concatenation.
  friend TensorPower operator*(const TensorPower& a, const TensorPower& b) {
    TensorPower out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k;
        for (std::size_t i = 0; i < N; ++i) k[i] = concat(ka[i], kb[i]);
        out.add(k, ca * cb);
      }
    return out;
  }
  friend bool operator==(const TensorPower& a, const TensorPower& b) = default;

 private:
  Terms terms_;
};

using TensorSquare = TensorPower<2>;
using TensorCube = TensorPower<3>;

TensorSquare tensor(const NcPoly& a, const NcPoly& b);
// u (x) v -> v (x) u
TensorSquare flip(const TensorSquare& t);
// u (x) v -> uv
NcPoly multiply(const TensorSquare& t);

/// Image of a word in the polynomial ring: letters sorted ascending.
Word sorted(Word w);
/// The algebra map from the free algebra onto the polynomial ring.
NcPoly commutative_image(const NcPoly& x);
TensorSquare commutative_image(const TensorSquare& t);

/// Dot-separated letter names ("Z1.Z2"), "1" for the empty word.
std::string to_string(const Word& w, const std::vector<std::string>& names);
/// Terms in word order joined by " + "; coefficients other than 1 are
/// written "c*" in front of the word; "0" for the zero polynomial.
std::string to_string(const NcPoly& x, const std::vector<std::string>& names);

}  // namespace pinch

#endif  // PINCH_NC_POLY_HPP
