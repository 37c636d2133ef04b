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

#include "pinch/nc_poly.hpp"

#include <algorithm>
#include <sstream>

namespace pinch {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

NcPoly NcPoly::constant(const Fq& c) { return monomial({}, c); }

NcPoly NcPoly::monomial(Word w, const Fq& c) {
  NcPoly x;
  x.add(w, c);
  return x;
}

Fq NcPoly::coeff(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Fq(0) : it->second;
}

int NcPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

void NcPoly::add(const Word& w, const Fq& c) {
  if (pinch::is_zero(c)) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (pinch::is_zero(it->second)) terms_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Fq& s) {
  if (pinch::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly x = *this;
  for (auto& [w, c] : x.terms_) c = -c;
  return x;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(concat(wa, wb), ca * cb);
  return out;
}

TensorSquare tensor(const NcPoly& a, const NcPoly& b) {
  TensorSquare t;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) t.add({wa, wb}, ca * cb);
  return t;
}

TensorSquare flip(const TensorSquare& t) {
  TensorSquare out;
  for (const auto& [k, c] : t.terms()) out.add({k[1], k[0]}, c);
  return out;
}

NcPoly multiply(const TensorSquare& t) {
  NcPoly out;
  for (const auto& [k, c] : t.terms()) out.add(concat(k[0], k[1]), c);
  return out;
}

Word sorted(Word w) {
  std::sort(w.begin(), w.end());
  return w;
}

NcPoly commutative_image(const NcPoly& x) {
  NcPoly out;
  for (const auto& [w, c] : x.terms()) out.add(sorted(w), c);
  return out;
}

TensorSquare commutative_image(const TensorSquare& t) {
  TensorSquare out;
  for (const auto& [k, c] : t.terms()) out.add({sorted(k[0]), sorted(k[1])}, c);
  return out;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += w[i] < names.size() ? names[w[i]] : "?" + std::to_string(w[i]);
  }
  return s;
}

std::string to_string(const NcPoly& x, const std::vector<std::string>& names) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c == one_like(c);
    if (w.empty()) {
      os << to_string(c);
    } else if (unit) {
      os << to_string(w, names);
    } else {
      const std::string cs = to_string(c);
      const bool wrap = cs.find_first_of("+u") != std::string::npos;
      os << (wrap ? "(" + cs + ")" : cs) << '*' << to_string(w, names);
    }
  }
  return os.str();
}

}  // namespace pinch
