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

#include "pinch/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace pinch {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial g over F_p.
Poly poly_rem(Poly a, const Poly& g, unsigned p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * g[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

std::vector<unsigned> prime_factors(std::uint32_t m) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

const GaloisField* common_field(const Fq& a, const Fq& b) {
  if (a.field() == b.field()) return a.field();
  if (a.field() == nullptr) return b.field();
  if (b.field() == nullptr) return a.field();
  throw Error(ErrorCode::FieldMismatch, "elements of different fields combined");
}

}  // namespace

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  const unsigned inv_lead = [&] {
    for (unsigned x = 1; x < p; ++x)
      if ((x * f.back()) % p == 1) return x;
    return 1u;
  }();
  for (auto& c : f) c = (c * inv_lead) % p;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(r % p);
        r /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::optional<std::vector<unsigned>> conway_polynomial(unsigned p, unsigned n) {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},       {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
  };
  auto it = table.find({p, n});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const GaloisField& GaloisField::make(unsigned p, unsigned n,
                                     std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::UnsupportedField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::UnsupportedField, "field order exceeds table limit");
  }

  Poly mod;
  if (n > 1) {
    if (modulus) {
      mod = *modulus;
      for (auto& c : mod) c %= p;
      trim(mod);
      if (mod.size() != n + 1)
        throw Error(ErrorCode::ReducibleModulus, "modulus must have degree " + std::to_string(n));
      if (!is_irreducible(p, mod))
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
      unsigned inv_lead = 1;
      while ((inv_lead * mod.back()) % p != 1) ++inv_lead;
      for (auto& c : mod) c = (c * inv_lead) % p;
    } else {
      auto c = conway_polynomial(p, n);
      if (!c)
        throw Error(ErrorCode::UnsupportedField,
                    "no built-in modulus for F_" + std::to_string(p) + "^" + std::to_string(n));
      mod = *c;
    }
  } else if (modulus) {
    Poly m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (m.size() != 2) throw Error(ErrorCode::ReducibleModulus, "modulus must have degree 1");
  }

  static std::mutex mutex;
  static std::map<std::pair<unsigned, Poly>, std::unique_ptr<GaloisField>> registry;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(p, mod);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  std::unique_ptr<GaloisField> field(new GaloisField(p, n, mod));
  auto& ref = *field;
  registry.emplace(std::move(key), std::move(field));
  return ref;
}

GaloisField::GaloisField(unsigned p, unsigned n, std::vector<unsigned> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < n_; ++i) q_ *= p_;
  log_.assign(q_, 0);
  exp_.assign(q_ > 1 ? q_ - 1 : 1, 1);
  if (q_ == 2) return;
  const auto factors = prime_factors(q_ - 1);
  auto pow_slow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t c = 2; c < q_ && gen == 0; ++c) {
    bool ok = true;
    for (unsigned r : factors)
      if (pow_slow(c, (q_ - 1) / r) == 1) { ok = false; break; }
    if (ok) gen = c;
  }
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, gen);
  }
}

std::uint32_t GaloisField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
  auto ca = coords(a), cb = coords(b);
  Poly prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly r = poly_rem(prod, modulus_, p_);
  std::uint32_t out = 0, pw = 1;
  for (std::size_t i = 0; i < r.size(); ++i, pw *= p_) out += r[i] * pw;
  return out;
}

std::uint32_t GaloisField::digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const {
  std::uint32_t out = 0, pw = 1;
  for (unsigned i = 0; i < n_; ++i, pw *= p_) {
    const unsigned da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    out += (subtract ? (da + p_ - db) % p_ : (da + db) % p_) * pw;
  }
  return out;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::NotInvertible, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::frob(std::uint32_t a, int t) const {
  if (a == 0 || n_ == 1) return a;
  const int k = ((t % static_cast<int>(n_)) + static_cast<int>(n_)) % static_cast<int>(n_);
  std::uint64_t e = 1;
  for (int i = 0; i < k; ++i) e *= p_;
  return exp_[(std::uint64_t(log_[a]) * e) % (q_ - 1)];
}

Fq GaloisField::u() const {
  if (n_ == 1) throw Error(ErrorCode::UnsupportedField, "prime field has no generator u");
  return Fq(*this, p_);
}

Fq GaloisField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Fq(*this, static_cast<std::uint32_t>(r));
}

Fq GaloisField::from_coords(const std::vector<long long>& c) const {
  if (c.size() > n_) throw Error(ErrorCode::ShapeMismatch, "too many coordinates for field");
  std::uint32_t out = 0, pw = 1;
  for (std::size_t i = 0; i < c.size(); ++i, pw *= p_) out += from_int(c[i]).v_ * pw;
  return Fq(*this, out);
}

std::vector<Fq> GaloisField::elements() const {
  std::vector<Fq> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(*this, i);
  return out;
}

std::vector<unsigned> GaloisField::coords(std::uint32_t packed) const {
  std::vector<unsigned> out(n_);
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = packed % p_;
    packed /= p_;
  }
  return out;
}

Fq GaloisField::bind(const Fq& x) const {
  if (x.f_ == this) return x;
  if (x.f_ == nullptr) return from_int(x.literal());
  throw Error(ErrorCode::FieldMismatch, "element belongs to a different field");
}

std::string GaloisField::format(std::uint32_t packed) const {
  if (n_ == 1) return std::to_string(packed);
  if (packed == 0) return "0";
  auto c = coords(packed);
  std::string out;
  for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "u";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::uint32_t Fq::packed() const {
  if (!f_) throw Error(ErrorCode::FieldMismatch, "literal has no packed representation");
  return v_;
}

Fq& Fq::operator+=(const Fq& o) {
  if (f_ && f_ == o.f_) {
    v_ = f_->add(v_, o.v_);
    return *this;
  }
  const GaloisField* f = common_field(*this, o);
  if (!f) {
    v_ = static_cast<std::uint32_t>(literal() + o.literal());
    return *this;
  }
  *this = Fq(*f, f->add(f->bind(*this).v_, f->bind(o).v_));
  return *this;
}

Fq& Fq::operator-=(const Fq& o) {
  if (f_ && f_ == o.f_) {
    v_ = f_->sub(v_, o.v_);
    return *this;
  }
  const GaloisField* f = common_field(*this, o);
  if (!f) {
    v_ = static_cast<std::uint32_t>(literal() - o.literal());
    return *this;
  }
  *this = Fq(*f, f->sub(f->bind(*this).v_, f->bind(o).v_));
  return *this;
}

Fq& Fq::operator*=(const Fq& o) {
  if (f_ && f_ == o.f_) {
    v_ = f_->mul(v_, o.v_);
    return *this;
  }
  const GaloisField* f = common_field(*this, o);
  if (!f) {
    v_ = static_cast<std::uint32_t>(literal() * o.literal());
    return *this;
  }
  *this = Fq(*f, f->mul(f->bind(*this).v_, f->bind(o).v_));
  return *this;
}

Fq& Fq::operator/=(const Fq& o) { return *this *= inverse(o); }

Fq Fq::operator-() const {
  if (!f_) return Fq(-literal());
  return Fq(*f_, f_->neg(v_));
}

bool operator==(const Fq& a, const Fq& b) {
  if (a.f_ == b.f_) return a.v_ == b.v_;
  const GaloisField* f = common_field(a, b);
  return f->bind(a).v_ == f->bind(b).v_;
}

std::strong_ordering operator<=>(const Fq& a, const Fq& b) {
  if (a.f_ == b.f_) {
    if (!a.f_) return a.literal() <=> b.literal();
    return a.v_ <=> b.v_;
  }
  const GaloisField* f = common_field(a, b);
  return f->bind(a).v_ <=> f->bind(b).v_;
}

bool is_zero(const Fq& x) { return x.is_literal() ? x.literal() == 0 : x.packed() == 0; }

Fq inverse(const Fq& x) {
  if (x.is_literal()) {
    if (x.literal() == 1 || x.literal() == -1) return x;
    throw Error(ErrorCode::FieldMismatch, "cannot invert an unbound literal");
  }
  return x.field()->element(x.field()->inv(x.packed()));
}

Fq pow(const Fq& x, std::uint64_t e) {
  Fq r = x.is_literal() ? Fq(1) : x.field()->one();
  Fq b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fq frobenius(const Fq& x, int t) {
  if (x.is_literal()) return x;
  return x.field()->element(x.field()->frob(x.packed(), t));
}

std::string to_string(const Fq& x) {
  if (x.is_literal()) return std::to_string(x.literal());
  return x.field()->format(x.packed());
}

FieldEmbedding::FieldEmbedding(const GaloisField& from, const GaloisField& to)
    : from_(&from), to_(&to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw Error(ErrorCode::FieldMismatch, "no embedding between these fields");
  std::uint32_t root_packed = 0;
  if (from.degree() > 1) {
    bool found = false;
    for (const Fq& r : to.elements()) {
      Fq acc = to.zero();
      const auto& m = from.modulus();
      for (auto it = m.rbegin(); it != m.rend(); ++it) acc = acc * r + to.from_int(*it);
      if (is_zero(acc)) {
        root_packed = r.packed();
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::InternalInconsistency, "modulus has no root in extension");
  }
  const Fq root = to.element(root_packed);
  image_.resize(from.order());
  for (std::uint32_t i = 0; i < from.order(); ++i) {
    auto c = from.coords(i);
    Fq acc = to.zero();
    Fq pw = to.one();
    for (unsigned k = 0; k < c.size(); ++k) {
      acc += to.from_int(c[k]) * pw;
      pw *= root;
    }
    image_[i] = acc.packed();
  }
}

Fq FieldEmbedding::operator()(const Fq& x) const {
  if (x.is_literal()) return to_->from_int(x.literal());
  if (x.field() != from_) throw Error(ErrorCode::FieldMismatch, "embedding applied to foreign element");
  return to_->element(image_[x.packed()]);
}

FqMatrix zero_matrix(const GaloisField& f, Eigen::Index rows, Eigen::Index cols) {
  return FqMatrix::Constant(rows, cols, f.zero());
}

FqVector zero_vector(const GaloisField& f, Eigen::Index size) {
  return FqVector::Constant(size, f.zero());
}

FqMatrix identity_matrix(const GaloisField& f, Eigen::Index n) {
  FqMatrix m = zero_matrix(f, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

FqMatrix bind(const GaloisField& f, const FqMatrix& m) {
  return m.unaryExpr([&f](const Fq& x) { return f.bind(x); });
}

FqMatrix frobenius(const FqMatrix& m, int t) {
  return m.unaryExpr([t](const Fq& x) { return frobenius(x, t); });
}

FqMatrix embed(const FieldEmbedding& e, const FqMatrix& m) {
  return m.unaryExpr([&e](const Fq& x) { return e(x); });
}

bool is_zero(const FqMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

std::string to_string(const FqMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << to_string(m(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace pinch
