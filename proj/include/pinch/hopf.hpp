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

#ifndef PINCH_HOPF_HPP
#define PINCH_HOPF_HPP

#include <memory>
#include <string>
#include <vector>

#include "pinch/nc_poly.hpp"

namespace pinch {

/// One summand coeff * (left (x) right) of the reduced coproduct.
struct Correction {
  Fq coeff;
  NcPoly left;
  NcPoly right;
};

struct Generator {
  std::string name;
  int weight = 1;
  std::vector<Correction> corrections;
};

/// A connected graded-filtered Hopf algebra given by generators and the
/// coproduct on each generator, Delta g = g(x)1 + 1(x)g + sum of corrections.
/// The underlying algebra is free, or the polynomial ring on the generators
/// when `commutative` is set (words are then kept sorted).
///
/// Invariants enforced at construction: every correction word uses only
/// generators of strictly smaller weight, and every correction leg has zero
/// constant term. Immutable afterwards; copies share the antipode cache.
class HopfPresentation {
 public:
  // Throws UnknownGenerator, NotWellFounded or InvalidPresentation.
  HopfPresentation(const GaloisField& field, std::vector<Generator> generators,
                   bool commutative = false);

  const GaloisField& field() const { return *field_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_commutative() const { return commutative_; }
  std::vector<std::string> names() const;

  NcPoly letter(Letter g) const;
  int weight(const Word& w) const;
  // Commutative image when the presentation is commutative, else x.
  NcPoly normalize(const NcPoly& x) const;
  TensorSquare normalize(const TensorSquare& t) const;

  const TensorSquare& generator_coproduct(Letter g) const { return coproducts_.at(g); }
  // Memoized; safe to call concurrently.
  const NcPoly& generator_antipode(Letter g) const;

 private:
  struct AntipodeCache;
  const NcPoly& antipode_at(Letter g, std::size_t depth) const;
  NcPoly antipode_of(const NcPoly& x, std::size_t depth) const;
  friend NcPoly antipode(const HopfPresentation& h, const NcPoly& x);

  const GaloisField* field_;
  std::vector<Generator> generators_;
  bool commutative_;
  std::vector<TensorSquare> coproducts_;
  std::shared_ptr<AntipodeCache> cache_;
};

NcPoly mul(const HopfPresentation& h, const NcPoly& x, const NcPoly& y);
TensorSquare coproduct(const HopfPresentation& h, const Word& w);
/// Multiplicative extension of the generator coproducts. Throws
/// UnknownGenerator for letters outside the presentation.
TensorSquare coproduct(const HopfPresentation& h, const NcPoly& x);
Fq counit(const HopfPresentation& h, const NcPoly& x);
/// S(g) = -g - sum coeff S(u) v on generators, extended anti-multiplicatively.
NcPoly antipode(const HopfPresentation& h, const NcPoly& x);

/// Every word of weighted degree <= bound (sorted words only when the
/// presentation is commutative), in word order, starting with the empty word.
std::vector<Word> words_up_to(const HopfPresentation& h, int weight_bound);

struct AxiomReport {
  bool ok = true;
  std::string axiom;  // first failing identity
  Word witness;
  std::size_t words_checked = 0;
};

/// Counit laws, coassociativity, both antipode identities and
/// cocommutativity on every word of weighted degree <= degree_bound, then
/// Delta S = (S(x)S) tau Delta on the generators.
AxiomReport check_axioms(const HopfPresentation& h, int degree_bound);

/// Finite-dimensional subcoalgebra containing 1 and x. basis[0] = 1 and,
/// unless x is a scalar, basis[1] = x; the rest are words.
struct Subcoalgebra {
  struct Term {
    int left;
    int right;
    Fq coeff;
  };
  std::vector<NcPoly> basis;
  std::vector<std::vector<Term>> delta;  // Delta b_k = sum coeff b_left (x) b_right
  // Words spanning the same space; the pivot word of x maps to index 1.
  std::map<Word, int, WordOrder> word_index;
  Word pivot;

  // Coordinates in `basis` of an element of its span.
  std::vector<Fq> coordinates(const NcPoly& y) const;
};

Subcoalgebra finite_subcoalgebra(const HopfPresentation& h, const NcPoly& x);

/// Dual of the Frobenius of the dual algebra of finite_subcoalgebra(x):
/// Ver(x) = sum_k ((b_k*)^p (x))^(1/p) b_k.
NcPoly verschiebung(const HopfPresentation& h, const NcPoly& x);

/// Polynomial-ring quotient with the projected corrections.
HopfPresentation abelianize(const HopfPresentation& h);

/// Coproduct of Hopf algebras: generators of b follow those of a; clashing
/// names of b get primes appended. Throws FieldMismatch, and
/// InvalidPresentation for commutative inputs.
HopfPresentation free_product(const HopfPresentation& a, const HopfPresentation& b);

std::string to_string(const HopfPresentation& h, const NcPoly& x);

}  // namespace pinch

#endif  // PINCH_HOPF_HPP
