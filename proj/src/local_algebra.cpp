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

#include "pinch/local_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pinch/linalg.hpp"

namespace pinch {

namespace {

FqMatrix column_basis(const FqMatrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return FqMatrix(m.rows(), 0);
  const auto cols = independent_columns(m);
  FqMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(k) = m.col(cols[k]);
  return out;
}

std::string monomial_label(const std::vector<int>& e) {
  static const char* short_names[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    out += e.size() <= 3 ? std::string(short_names[v]) : "x" + std::to_string(v + 1);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

bool divides(const std::vector<int>& g, const std::vector<int>& e) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g[v] > e[v]) return false;
  return true;
}

LocalAlgebra build_truncated(int order, const GaloisField& f) {
  if (order < 1) throw Error(ErrorCode::NotCofinite, "truncation order must be >= 1");
  const int n = order - 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
  std::vector<FqMatrix> mult(n, zero_matrix(f, n, n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) mult[i - 1](i + j - 1, j - 1) = f.one();
  return LocalAlgebra(f, std::move(labels), std::move(mult));
}

LocalAlgebra build_monomial(int vars, const std::vector<std::vector<int>>& ideal,
                            const GaloisField& f) {
  if (vars < 1) throw Error(ErrorCode::NotCofinite, "monomial quotient needs at least one variable");
  for (const auto& g : ideal) {
    if (static_cast<int>(g.size()) != vars)
      throw Error(ErrorCode::NotCofinite, "ideal generator has wrong number of exponents");
    for (int e : g)
      if (e < 0) throw Error(ErrorCode::NotCofinite, "negative exponent in ideal generator");
    if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }))
      throw Error(ErrorCode::NotLocal, "ideal is the unit ideal");
  }
  std::vector<int> bound(vars, 0);
  for (int v = 0; v < vars; ++v) {
    for (const auto& g : ideal) {
      bool pure = g[v] > 0;
      for (int w = 0; w < vars && pure; ++w)
        if (w != v && g[w] != 0) pure = false;
      if (pure && (bound[v] == 0 || g[v] < bound[v])) bound[v] = g[v];
    }
    if (bound[v] == 0)
      throw Error(ErrorCode::NotCofinite,
                  "variable " + std::to_string(v + 1) + " is not nilpotent modulo the ideal");
  }
  std::vector<std::vector<int>> standard;
  std::vector<int> e(vars, 0);
  while (true) {
    const bool nonconstant = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (nonconstant && std::none_of(ideal.begin(), ideal.end(),
                                    [&](const auto& g) { return divides(g, e); }))
      standard.push_back(e);
    int v = 0;
    while (v < vars && ++e[v] >= bound[v]) e[v++] = 0;
    if (v == vars) break;
  }
  std::sort(standard.begin(), standard.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;
  });
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < standard.size(); ++k) {
    index[standard[k]] = static_cast<int>(k);
    labels.push_back(monomial_label(standard[k]));
  }
  const int n = static_cast<int>(standard.size());
  std::vector<FqMatrix> mult(n, zero_matrix(f, n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> s(vars);
      for (int v = 0; v < vars; ++v) s[v] = standard[i][v] + standard[j][v];
      auto it = index.find(s);
      if (it != index.end()) mult[i](it->second, j) = f.one();
    }
  }
  return LocalAlgebra(f, std::move(labels), std::move(mult));
}

LocalAlgebra build_table(int dim, const std::vector<AlgebraSpec::Entry>& entries,
                         const GaloisField& f) {
  if (dim < 0) throw Error(ErrorCode::InvalidConstants, "negative dimension");
  std::vector<FqMatrix> mult(dim, zero_matrix(f, dim, dim));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries) {
    if (e.i < 1 || e.j < 1 || e.h < 1 || e.i > dim || e.j > dim || e.h > dim)
      throw Error(ErrorCode::InvalidConstants, "structure constant index out of range");
    if (!seen.insert({e.i, e.j, e.h}).second)
      throw Error(ErrorCode::InvalidConstants,
                  "duplicate constant c^" + std::to_string(e.h) + "_" + std::to_string(e.i) +
                      std::to_string(e.j));
    mult[e.i - 1](e.h - 1, e.j - 1) = f.from_coords(e.coeff);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back("a" + std::to_string(i));
  return LocalAlgebra(f, std::move(labels), std::move(mult));
}

}  // namespace

AlgebraSpec AlgebraSpec::truncated(int order) {
  AlgebraSpec s;
  s.kind = AlgebraKind::TruncatedPoly;
  s.order = order;
  return s;
}

AlgebraSpec AlgebraSpec::monomial(int vars, std::vector<std::vector<int>> ideal) {
  AlgebraSpec s;
  s.kind = AlgebraKind::MonomialQuotient;
  s.vars = vars;
  s.ideal = std::move(ideal);
  return s;
}

AlgebraSpec AlgebraSpec::table(int dim, std::vector<Entry> constants) {
  AlgebraSpec s;
  s.kind = AlgebraKind::Table;
  s.dim = dim;
  s.constants = std::move(constants);
  return s;
}

LocalAlgebra::LocalAlgebra(const GaloisField& field, std::vector<std::string> labels,
                           std::vector<FqMatrix> left_mult)
    : field_(&field), labels_(std::move(labels)), left_mult_(std::move(left_mult)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (static_cast<Eigen::Index>(left_mult_.size()) != n)
    throw Error(ErrorCode::ShapeMismatch, "one multiplication matrix per basis element expected");
  for (auto& m : left_mult_) {
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorCode::ShapeMismatch, "multiplication matrix has wrong shape");
    m = bind(field, m);
  }
}

FqVector LocalAlgebra::product(const FqVector& x, const FqVector& y) const {
  FqVector out = zero_vector(*field_, dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    out += (left_mult_[i] * y) * x(i);
  }
  return out;
}

AlgebraElement LocalAlgebra::one() const { return {field_->one(), zero_vector(*field_, dim())}; }
AlgebraElement LocalAlgebra::zero() const { return {field_->zero(), zero_vector(*field_, dim())}; }

AlgebraElement LocalAlgebra::basis(int i) const {
  AlgebraElement e = zero();
  e.m(i) = field_->one();
  return e;
}

AlgebraElement LocalAlgebra::element(const Fq& scalar, const FqVector& m) const {
  if (m.size() != dim()) throw Error(ErrorCode::ShapeMismatch, "coordinate vector length");
  return {field_->bind(scalar), bind(*field_, m)};
}

LocalAlgebra build(const AlgebraSpec& spec, const GaloisField& field) {
  LocalAlgebra a = [&] {
    switch (spec.kind) {
      case AlgebraKind::Point: return LocalAlgebra(field, {}, {});
      case AlgebraKind::TruncatedPoly: return build_truncated(spec.order, field);
      case AlgebraKind::MonomialQuotient: return build_monomial(spec.vars, spec.ideal, field);
      case AlgebraKind::Table: return build_table(spec.dim, spec.constants, field);
    }
    throw Error(ErrorCode::InvalidConstants, "unknown algebra kind");
  }();
  const Diagnostics d = validate(a);
  switch (d.kind) {
    case Diagnostics::Kind::Ok: break;
    case Diagnostics::Kind::NotLocal: throw Error(ErrorCode::NotLocal, d.message);
    default: throw Error(ErrorCode::InvalidConstants, d.message);
  }
  return a;
}

AlgebraElement multiply(const LocalAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  const GaloisField& f = a.field();
  if ((x.scalar.field() && x.scalar.field() != &f) || (y.scalar.field() && y.scalar.field() != &f))
    throw Error(ErrorCode::FieldMismatch, "element is not over the algebra's field");
  AlgebraElement out;
  out.scalar = f.bind(x.scalar * y.scalar);
  out.m = y.m * x.scalar + x.m * y.scalar + a.product(x.m, y.m);
  out.m = bind(f, out.m);
  return out;
}

AlgebraElement power(const LocalAlgebra& a, const AlgebraElement& x, std::uint64_t e) {
  AlgebraElement r = a.one(), b = x;
  while (e) {
    if (e & 1) r = multiply(a, r, b);
    b = multiply(a, b, b);
    e >>= 1;
  }
  return r;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.scalar == y.scalar && x.m.size() == y.m.size() && x.m == y.m;
}

std::string to_string(const LocalAlgebra& a, const AlgebraElement& x) {
  std::string out;
  auto term = [&](const Fq& c, const std::string& label) {
    if (is_zero(c)) return;
    if (!out.empty()) out += " + ";
    const bool unit = c == a.field().one();
    if (label.empty()) {
      out += to_string(c);
    } else {
      if (!unit) out += a.field().is_prime_field() ? to_string(c) + "*" : "(" + to_string(c) + ")*";
      out += label;
    }
  };
  term(x.scalar, "");
  for (int i = 0; i < a.dim(); ++i) term(x.m(i), a.labels()[i]);
  return out.empty() ? "0" : out;
}

SemilinearMap frobenius_power(const LocalAlgebra& a, int i) {
  if (i < 1) throw Error(ErrorCode::ShapeMismatch, "Frobenius power must be >= 1");
  const GaloisField& f = a.field();
  std::uint64_t e = 1;
  for (int k = 0; k < i; ++k) e *= f.characteristic();
  FqMatrix m = zero_matrix(f, a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    // a_j^(p^i) by repeated p-th powers; stays inside m.
    AlgebraElement x = a.basis(j);
    for (int k = 0; k < i; ++k) x = power(a, x, f.characteristic());
    m.col(j) = x.m;
  }
  return SemilinearMap(f, m, i);
}

int height(const LocalAlgebra& a) {
  if (a.dim() == 0) return 0;
  const unsigned p = a.field().characteristic();
  std::vector<AlgebraElement> xs;
  for (int j = 0; j < a.dim(); ++j) xs.push_back(a.basis(j));
  for (int h = 1; h <= a.dim() + 1; ++h) {
    bool all_zero = true;
    for (auto& x : xs) {
      x = power(a, x, p);
      if (!is_zero(x.m)) all_zero = false;
    }
    if (all_zero) return h;
  }
  throw Error(ErrorCode::NotLocal, "Frobenius does not annihilate the maximal ideal");
}

Diagnostics validate(const LocalAlgebra& a) {
  const int n = a.dim();
  const GaloisField& f = a.field();
  Diagnostics d;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int h = 0; h < n; ++h)
        if (a.constant(i, j, h) != a.constant(j, i, h)) {
          d.kind = Diagnostics::Kind::CommutativityViolation;
          d.indices = {i + 1, j + 1};
          d.message = "c^" + std::to_string(h + 1) + "_" + std::to_string(i + 1) +
                      std::to_string(j + 1) + " != c^" + std::to_string(h + 1) + "_" +
                      std::to_string(j + 1) + std::to_string(i + 1);
          return d;
        }

  // Joint nilpotency: U_1 = m, U_{k+1} = sum_i L_i U_k must reach 0.
  FqMatrix u = identity_matrix(f, n);
  for (int k = 1; u.cols() > 0; ++k) {
    FqMatrix next(n, u.cols() * n);
    for (int i = 0; i < n; ++i) next.middleCols(i * u.cols(), u.cols()) = a.left_mult(i) * u;
    FqMatrix basis = column_basis(next);
    if (basis.cols() >= u.cols()) {
      d.kind = Diagnostics::Kind::NotLocal;
      d.indices = {k};
      d.message = "multiplication operators are not nilpotent (m^" + std::to_string(k) +
                  " = m^" + std::to_string(k + 1) + " != 0)";
      return d;
    }
    u = basis;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const FqVector ij = a.left_mult(i).col(j);
        const FqVector jl = a.left_mult(j).col(l);
        const FqVector left = a.product(ij, a.basis(l).m);
        const FqVector right = a.product(a.basis(i).m, jl);
        if (left != right) {
          d.kind = Diagnostics::Kind::AssociativityViolation;
          d.indices = {i + 1, j + 1, l + 1};
          d.message = "(a" + std::to_string(i + 1) + " a" + std::to_string(j + 1) + ") a" +
                      std::to_string(l + 1) + " != a" + std::to_string(i + 1) + " (a" +
                      std::to_string(j + 1) + " a" + std::to_string(l + 1) + ")";
          return d;
        }
      }
  return d;
}

std::vector<FqMatrix> power_filtration(const LocalAlgebra& a) {
  const int n = a.dim();
  std::vector<FqMatrix> out;
  FqMatrix u = identity_matrix(a.field(), n);
  while (u.cols() > 0) {
    out.push_back(u);
    FqMatrix next(n, u.cols() * n);
    for (int i = 0; i < n; ++i) next.middleCols(i * u.cols(), u.cols()) = a.left_mult(i) * u;
    FqMatrix basis = column_basis(next);
    if (basis.cols() >= u.cols()) throw Error(ErrorCode::NotLocal, "m is not nilpotent");
    u = basis;
  }
  return out;
}

std::vector<int> filtration_levels(const LocalAlgebra& a) {
  const auto powers = power_filtration(a);
  std::vector<int> levels(a.dim(), 0);
  for (int h = 0; h < a.dim(); ++h) {
    int j = 1;
    // e_h is nonzero on m^j as long as row h of its basis is nonzero.
    while (j < static_cast<int>(powers.size()) && !is_zero(FqMatrix(powers[j].row(h)))) ++j;
    levels[h] = j;
  }
  return levels;
}

bool is_filtration_adapted(const LocalAlgebra& a) {
  for (const auto& u : power_filtration(a)) {
    int support = 0;
    for (Eigen::Index h = 0; h < u.rows(); ++h)
      if (!is_zero(FqMatrix(u.row(h)))) ++support;
    if (support != u.cols()) return false;
  }
  return true;
}

LocalAlgebra filtration_adapted(const LocalAlgebra& a) {
  if (is_filtration_adapted(a)) return a;
  const auto powers = power_filtration(a);
  const int n = a.dim();
  // Extend a basis of m^(j+1) to m^j, deepest first; list shallow levels first.
  std::vector<FqMatrix> per_level(powers.size());
  FqMatrix deeper(n, 0);
  for (int j = static_cast<int>(powers.size()) - 1; j >= 0; --j) {
    FqMatrix cand(n, deeper.cols() + powers[j].cols());
    cand << deeper, powers[j];
    const auto cols = independent_columns(cand);
    std::vector<Eigen::Index> fresh;
    for (auto c : cols)
      if (c >= deeper.cols()) fresh.push_back(c);
    per_level[j] = FqMatrix(n, static_cast<Eigen::Index>(fresh.size()));
    for (std::size_t k = 0; k < fresh.size(); ++k) per_level[j].col(k) = cand.col(fresh[k]);
    FqMatrix grown(n, deeper.cols() + per_level[j].cols());
    grown << deeper, per_level[j];
    deeper = grown;
  }
  FqMatrix p(n, n);
  Eigen::Index at = 0;
  for (const auto& block : per_level) {
    p.middleCols(at, block.cols()) = block;
    at += block.cols();
  }
  return rebase(a, p);
}

LocalAlgebra rebase(const LocalAlgebra& a, const FqMatrix& p) {
  const int n = a.dim();
  const GaloisField& f = a.field();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::ShapeMismatch, "change of basis shape");
  const auto pinv = inverse(bind(f, p));
  if (!pinv) throw Error(ErrorCode::NotInvertible, "change of basis is singular");
  std::vector<FqMatrix> mult(n, zero_matrix(f, n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const FqVector prod = a.product(p.col(i), p.col(j));
      mult[i].col(j) = (*pinv) * prod;
    }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  return LocalAlgebra(f, std::move(labels), std::move(mult));
}

LocalAlgebra extend_scalars(const LocalAlgebra& a, const FieldEmbedding& e) {
  std::vector<FqMatrix> mult;
  for (int i = 0; i < a.dim(); ++i) mult.push_back(embed(e, a.left_mult(i)));
  return LocalAlgebra(e.target(), a.labels(), std::move(mult));
}

}  // namespace pinch
