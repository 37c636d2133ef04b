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

#include "pinch/witt.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "pinch/leibniz.hpp"

namespace pinch {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw Error(ErrorCode::ShapeMismatch, "count overflows 64 bits");
  return a * b;
}

Fq reduce(const GaloisField& f, const BigInt& c) {
  const BigInt p = f.characteristic();
  BigInt r = c % p;
  if (r < 0) r += p;
  return f.from_int(static_cast<long long>(r));
}

}  // namespace

IntPoly IntPoly::constant(int length, const BigInt& c) {
  IntPoly out(length);
  out.add(Exponents(2 * length, 0), c);
  return out;
}

IntPoly IntPoly::x(int length, int i) {
  IntPoly out(length);
  Exponents e(2 * length, 0);
  e.at(i) = 1;
  out.add(e, 1);
  return out;
}

IntPoly IntPoly::y(int length, int i) {
  IntPoly out(length);
  Exponents e(2 * length, 0);
  e.at(length + i) = 1;
  out.add(e, 1);
  return out;
}

BigInt IntPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPoly::add(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.length_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      IntPoly::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

IntPoly pow(const IntPoly& a, unsigned e) {
  IntPoly result = IntPoly::constant(a.length(), 1);
  IntPoly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly divide_exact(const IntPoly& a, const BigInt& d) {
  IntPoly out(a.length());
  for (const auto& [e, c] : a.terms()) {
    if (c % d != 0) throw Error(ErrorCode::IntegralityFailure, "coefficient " + c.str() + " / " + d.str());
    out.add(e, c / d);
  }
  return out;
}

std::string to_string(const IntPoly& a) {
  if (a.terms().empty()) return "0";
  const int l = a.length();
  std::vector<std::pair<unsigned, const IntPoly::Exponents*>> order;
  for (const auto& [e, c] : a.terms()) {
    unsigned deg = 0;
    for (unsigned k : e) deg += k;
    order.emplace_back(deg, &e);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& u, const auto& v) {
    return u.first != v.first ? u.first < v.first : *u.second > *v.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, e] : order) {
    BigInt c = a.coeff(*e);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    std::vector<std::string> factors;
    for (int i = 0; i < 2 * l; ++i) {
      if ((*e)[i] == 0) continue;
      std::string v = (i < l ? "x" : "y") + std::to_string(i < l ? i : i - l);
      if ((*e)[i] > 1) v += "^" + std::to_string((*e)[i]);
      factors.push_back(v);
    }
    if (c != 1 || factors.empty()) factors.insert(factors.begin(), c.str());
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

IntPoly ghost_component(unsigned p, int n, int length, bool y_variables) {
  IntPoly w(length);
  BigInt pi = 1;
  for (int i = 0; i <= n; ++i, pi *= p) {
    unsigned e = 1;
    for (int k = i; k < n; ++k) e *= p;
    w += pow(y_variables ? IntPoly::y(length, i) : IntPoly::x(length, i), e) * pi;
  }
  return w;
}

const std::vector<IntPoly>& witt_addition_polys(unsigned p, int length) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p));
  if (length < 1) throw Error(ErrorCode::ShapeMismatch, "Witt length must be positive");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, int>, std::vector<IntPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, length}); it != cache.end()) return it->second;
  }
  std::vector<IntPoly> s;
  BigInt pn = 1;
  for (int n = 0; n < length; ++n, pn *= p) {
    IntPoly rest = ghost_component(p, n, length) + ghost_component(p, n, length, true);
    BigInt pi = 1;
    for (int i = 0; i < n; ++i, pi *= p) {
      unsigned e = 1;
      for (int k = i; k < n; ++k) e *= p;
      rest -= pow(s[i], e) * pi;
    }
    s.push_back(divide_exact(rest, pn));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace({p, length}, std::move(s)).first->second;
}

WittVector witt_add(const WittVector& u, const WittVector& v, const GaloisField& field) {
  return witt_add(u, v, field, witt_addition_polys(field.characteristic(), static_cast<int>(u.components.size())));
}

WittVector witt_add(const WittVector& u, const WittVector& v, const GaloisField& field,
                    const std::vector<IntPoly>& table) {
  const std::size_t l = u.components.size();
  if (u.p != v.p || u.p != field.characteristic() || v.components.size() != l || table.size() < l)
    throw Error(ErrorCode::ShapeMismatch, "Witt vectors of different shape");
  WittVector out{u.p, {}};
  for (std::size_t j = 0; j < l; ++j) {
    Fq sum = field.zero();
    const int tl = table[j].length();
    for (const auto& [e, c] : table[j].terms()) {
      Fq term = reduce(field, c);
      for (int i = 0; i < tl && !is_zero(term); ++i) {
        if (e[i]) term *= pow(field.bind(i < static_cast<int>(l) ? u.components[i] : Fq(0)), e[i]);
        if (e[tl + i]) term *= pow(field.bind(i < static_cast<int>(l) ? v.components[i] : Fq(0)), e[tl + i]);
      }
      sum += term;
    }
    out.components.push_back(sum);
  }
  return out;
}

std::uint64_t frobenius_kernel_dim(unsigned p, int h, int length) {
  if (h < 1 || length < 1) throw Error(ErrorCode::ShapeMismatch, "h and length must be positive");
  std::uint64_t per_variable = 1;
  for (int i = 0; i < h; ++i) per_variable = checked_mul(per_variable, p);
  std::uint64_t count = 1;
  for (int i = 0; i < length; ++i) count = checked_mul(count, per_variable);
  return count;
}

TensorSquare witt_coproduct(const HopfPresentation& h, const IntPoly& s,
                            const std::vector<NcPoly>& substitution) {
  const GaloisField& f = h.field();
  const int l = s.length();
  TensorSquare out;
  for (const auto& [e, c] : s.terms()) {
    NcPoly left = NcPoly::constant(reduce(f, c)), right = NcPoly::constant(f.one());
    for (int i = 0; i < l; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) left = mul(h, left, substitution.at(i));
      for (unsigned k = 0; k < e[l + i]; ++k) right = mul(h, right, substitution.at(i));
    }
    out += tensor(left, right);
  }
  return out;
}

std::optional<std::vector<NcPoly>> match_witt_generators(int length, unsigned p,
                                                         const GaloisField& field, int degree_bound) {
  return match_witt_generators(length, p, field, degree_bound, witt_addition_polys(p, length));
}

std::optional<std::vector<NcPoly>> match_witt_generators(int length, unsigned p,
                                                         const GaloisField& field, int degree_bound,
                                                         const std::vector<IntPoly>& table) {
  if (static_cast<int>(table.size()) < length)
    throw Error(ErrorCode::ShapeMismatch, "Witt table shorter than the length");
  const HopfPresentation ab = abelianize(nw_presentation(length, p, field, degree_bound));
  std::vector<NcPoly> subst;
  for (int a = 0; a < length; ++a) {
    const Word generator{static_cast<Letter>(a)};
    const int q = ab.generators()[a].weight;
    std::vector<NcPoly> monomials;
    for (const Word& w : words_up_to(ab, q))
      if (ab.weight(w) == q) monomials.push_back(NcPoly::monomial(w, field.one()));

    // S_a = x_a + y_a + (terms in lower variables); with x_a -> 0 only the
    // lower terms survive, which is the required reduced coproduct.
    std::vector<NcPoly> padded = subst;
    padded.resize(static_cast<std::size_t>(table[a].length()), NcPoly{});
    const TensorSquare rhs = witt_coproduct(ab, table[a], padded);

    AffineSolutions sols = solve_reduced_coproduct(ab, NcPoly{}, monomials, rhs);
    if (sols.empty()) return std::nullopt;
    NcPoly fa = pick_solution(field, sols, TieBreak::LexLeast);
    if (is_zero(fa.coeff(generator))) {
      const auto it = std::find_if(sols.homogeneous.begin(), sols.homogeneous.end(),
                                   [&](const NcPoly& v) { return !is_zero(v.coeff(generator)); });
      if (it == sols.homogeneous.end()) return std::nullopt;
      fa += *it;
    }
    subst.push_back(std::move(fa));
  }

  // Full check, linear terms included.
  for (int a = 0; a < length; ++a) {
    std::vector<NcPoly> padded = subst;
    padded.resize(static_cast<std::size_t>(table[a].length()), NcPoly{});
    if (coproduct(ab, subst[a]) != witt_coproduct(ab, table[a], padded)) return std::nullopt;
  }
  return subst;
}

}  // namespace pinch
