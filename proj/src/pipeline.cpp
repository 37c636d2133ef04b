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

#include "pinch/pipeline.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <set>

#include "pinch/leibniz.hpp"
#include "pinch/pic_rep.hpp"

namespace pinch {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::ValidationError, where + ": " + why);
}

void require_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) invalid(where, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) invalid(where, "unknown key \"" + key + "\"");
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(where, "missing key \"" + key + "\"");
  return *it;
}

long long as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) invalid(where, "expected an integer");
  if (v.is_number_unsigned() && v.get<unsigned long long>() >
                                    static_cast<unsigned long long>(std::numeric_limits<int>::max()))
    invalid(where, "integer out of range");
  const long long x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    invalid(where, "integer out of range");
  return x;
}

std::vector<long long> as_int_list(const Json& v, const std::string& where) {
  if (!v.is_array()) invalid(where, "expected an array of integers");
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(as_int(x, where));
  return out;
}

AlgebraSpec parse_component(const Json& c, const std::string& where) {
  if (!c.is_object()) invalid(where, "expected an object");
  const Json& kind = require(c, "kind", where);
  if (!kind.is_string()) invalid(where, "\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "point") {
    require_keys(c, {"kind"}, where);
    return AlgebraSpec::point();
  }
  if (k == "truncated_poly") {
    require_keys(c, {"kind", "order"}, where);
    const long long order = as_int(require(c, "order", where), where + ".order");
    if (order < 1) invalid(where, "order must be at least 1");
    return AlgebraSpec::truncated(static_cast<int>(order));
  }
  if (k == "monomial_quotient") {
    require_keys(c, {"kind", "vars", "ideal"}, where);
    const long long vars = as_int(require(c, "vars", where), where + ".vars");
    if (vars < 1) invalid(where, "vars must be at least 1");
    const Json& ideal = require(c, "ideal", where);
    if (!ideal.is_array()) invalid(where, "ideal must be an array");
    std::vector<std::vector<int>> gens;
    for (const auto& g : ideal) {
      const auto e = as_int_list(g, where + ".ideal");
      if (static_cast<long long>(e.size()) != vars)
        invalid(where, "ideal generator length differs from vars");
      std::vector<int> exps;
      for (long long x : e) {
        if (x < 0) invalid(where, "negative exponent");
        exps.push_back(static_cast<int>(x));
      }
      gens.push_back(std::move(exps));
    }
    return AlgebraSpec::monomial(static_cast<int>(vars), std::move(gens));
  }
  if (k == "table") {
    require_keys(c, {"kind", "dim", "constants"}, where);
    const long long dim = as_int(require(c, "dim", where), where + ".dim");
    if (dim < 0) invalid(where, "dim must be non-negative");
    const Json& constants = require(c, "constants", where);
    if (!constants.is_array()) invalid(where, "constants must be an array");
    std::vector<AlgebraSpec::Entry> entries;
    for (const auto& e : constants) {
      if (!e.is_array() || e.size() != 4) invalid(where, "constants entries are [i,j,h,c]");
      AlgebraSpec::Entry entry;
      entry.i = static_cast<int>(as_int(e[0], where + ".constants"));
      entry.j = static_cast<int>(as_int(e[1], where + ".constants"));
      entry.h = static_cast<int>(as_int(e[2], where + ".constants"));
      entry.coeff = e[3].is_array() ? as_int_list(e[3], where + ".constants")
                                    : std::vector<long long>{as_int(e[3], where + ".constants")};
      entries.push_back(std::move(entry));
    }
    return AlgebraSpec::table(static_cast<int>(dim), std::move(entries));
  }
  invalid(where, "unknown kind \"" + k + "\"");
}

Json fq_to_json(const Fq& x) {
  const GaloisField& f = *x.field();
  const std::vector<unsigned> c = f.coords(x.packed());
  if (f.is_prime_field()) return c.empty() ? 0u : c[0];
  return Json(c);
}

Fq fq_from_json(const Json& j, const GaloisField& f) {
  if (j.is_array()) return f.from_coords(j.get<std::vector<long long>>());
  return f.from_int(j.get<long long>());
}

Json poly_to_json(const NcPoly& x, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (Letter l : w) word.push_back(names[l]);
    out.push_back({{"coeff", fq_to_json(c)}, {"word", word}});
  }
  return out;
}

NcPoly poly_from_json(const Json& j, const std::map<std::string, Letter>& index,
                      const GaloisField& f) {
  NcPoly out;
  for (const auto& term : j) {
    Word w;
    for (const auto& name : term.at("word")) {
      auto it = index.find(name.get<std::string>());
      if (it == index.end())
        throw Error(ErrorCode::UnknownGenerator, "generator " + name.get<std::string>());
      w.push_back(it->second);
    }
    out.add(w, fq_from_json(term.at("coeff"), f));
  }
  return out;
}

Json factors_json(const std::map<int, int>& counts) {
  Json out = Json::array();
  for (const auto& [l, c] : counts) out.push_back({{"length", l}, {"count", c}});
  return out;
}

}  // namespace

Pinching parse_pinching(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  require_keys(root, {"p", "n", "modulus", "branches"}, "top level");
  const long long p = as_int(require(root, "p", "top level"), "p");
  const long long n = root.contains("n") ? as_int(root["n"], "n") : 1;
  if (p < 2) invalid("p", "must be a prime");
  if (n < 1) invalid("n", "must be at least 1");
  std::optional<std::vector<unsigned>> modulus;
  if (root.contains("modulus")) {
    std::vector<unsigned> m;
    for (long long c : as_int_list(root["modulus"], "modulus")) {
      if (c < 0) invalid("modulus", "coefficients must be non-negative");
      m.push_back(static_cast<unsigned>(c));
    }
    modulus = std::move(m);
  }

  Pinching out;
  try {
    out.field = &GaloisField::make(static_cast<unsigned>(p), static_cast<unsigned>(n), modulus);
  } catch (const Error& e) {
    invalid("field", e.what());
  }

  const Json& branches = require(root, "branches", "top level");
  if (!branches.is_array() || branches.empty()) invalid("branches", "need a nonempty array");
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const std::string bwhere = "branch " + std::to_string(b + 1);
    const Json& branch = branches[b];
    if (!branch.is_array() || branch.empty()) invalid(bwhere, "need a nonempty array of components");
    std::vector<std::shared_ptr<const LocalAlgebra>> comps;
    for (std::size_t c = 0; c < branch.size(); ++c) {
      const std::string where = bwhere + " component " + std::to_string(c + 1);
      const AlgebraSpec spec = parse_component(branch[c], where);
      try {
        comps.push_back(std::make_shared<const LocalAlgebra>(build(spec, *out.field)));
      } catch (const Error& e) {
        invalid(where, e.what());
      }
    }
    if (comps.size() == 1 && comps.front()->dim() == 0)
      out.warnings.push_back(bwhere + " is a single reduced point; nothing is pinched there");
    out.branches.push_back(std::move(comps));
  }
  return out;
}

Pi1Expression compute_pi1(const Pinching& pinching) {
  std::vector<std::vector<std::future<ComponentReport>>> pending;
  for (const auto& branch : pinching.branches) {
    auto& row = pending.emplace_back();
    for (const auto& a : branch)
      row.push_back(std::async(std::launch::async, [a] {
        return ComponentReport{decompose_sigma(*a), filtration_dims(*a)};
      }));
  }
  Pi1Expression out;
  for (auto& row : pending) {
    out.zhat += static_cast<int>(row.size()) - 1;
    auto& reports = out.branches.emplace_back();
    for (auto& fut : row) {
      reports.push_back(fut.get());
      for (const auto& [l, c] : reports.back().decomposition.counts) out.nw[l] += c;
    }
  }
  return out;
}

std::string render_text(const Pi1Expression& e) {
  std::vector<std::string> factors;
  auto with_power = [](std::string base, int n) {
    return n > 1 ? base + "^*" + std::to_string(n) : base;
  };
  if (e.zhat > 0) factors.push_back(with_power("Zhat", e.zhat));
  for (const auto& [l, c] : e.nw) factors.push_back(with_power("NW(" + std::to_string(l) + ")", c));
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out += " * " + factors[k];
  return out;
}

Json to_json(const SigmaDecomposition& d) {
  return {{"height", d.height}, {"factors", factors_json(d.counts)}};
}

Json to_json(const Pi1Expression& e) {
  Json branches = Json::array();
  for (const auto& branch : e.branches) {
    Json comps = Json::array();
    for (const auto& r : branch)
      comps.push_back({{"height", r.decomposition.height},
                       {"factors", factors_json(r.decomposition.counts)},
                       {"filtration", r.filtration}});
    branches.push_back({{"components", comps}});
  }
  return {{"pi1", {{"zhat", e.zhat}, {"nw", factors_json(e.nw)}}}, {"branches", branches}};
}

Json presentation_to_json(const HopfPresentation& h) {
  const auto names = h.names();
  Json gens = Json::array();
  for (const auto& g : h.generators()) {
    Json corrections = Json::array();
    for (const auto& c : g.corrections)
      corrections.push_back({{"coeff", fq_to_json(c.coeff)},
                             {"left", poly_to_json(c.left, names)},
                             {"right", poly_to_json(c.right, names)}});
    gens.push_back({{"name", g.name}, {"weight", g.weight}, {"corrections", corrections}});
  }
  return {{"commutative", h.is_commutative()}, {"generators", gens}};
}

HopfPresentation presentation_from_json(const Json& j, const GaloisField& field) {
  try {
    std::map<std::string, Letter> index;
    for (const auto& g : j.at("generators"))
      index.emplace(g.at("name").get<std::string>(), static_cast<Letter>(index.size()));
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) {
      Generator gen{g.at("name").get<std::string>(), g.at("weight").get<int>(), {}};
      for (const auto& c : g.at("corrections"))
        gen.corrections.push_back({fq_from_json(c.at("coeff"), field),
                                   poly_from_json(c.at("left"), index, field),
                                   poly_from_json(c.at("right"), index, field)});
      gens.push_back(std::move(gen));
    }
    return HopfPresentation(field, std::move(gens), j.value("commutative", false));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ValidationError, std::string("presentation: ") + e.what());
  }
}

std::vector<CheckResult> self_check(const std::vector<IntPoly>* witt_table) {
  const auto& f2 = GaloisField::make(2);
  const auto& f3 = GaloisField::make(3);
  const auto& f4 = GaloisField::make(2, 2);
  const std::vector<IntPoly>& table = witt_table ? *witt_table : witt_addition_polys(2, 2);

  std::vector<std::pair<std::string, std::function<std::string()>>> checks;
  // Each check returns an empty string on success and a reason otherwise.
  checks.emplace_back("field-frobenius", [&] {
    const Fq u = f4.u();
    if (frobenius(u, 1) != u + f4.one()) return "Fr(u) != u + 1 in F4";
    if (frobenius(frobenius(u, 1), -1) != u) return "inverse Frobenius does not undo Frobenius";
    return "";
  });
  checks.emplace_back("hopf-axioms", [&] {
    const auto r = check_axioms(leibniz_presentation(4, f2), 4);
    if (!r.ok) return "leibniz Z(4) fails " + r.axiom;
    const auto s = check_axioms(h_a_presentation(build(AlgebraSpec::truncated(5), f3)), 4);
    if (!s.ok) return "H_A of F3[t]/(t^5) fails " + s.axiom;
    return std::string();
  });
  checks.emplace_back("minimal-curve", [&] {
    if (!is_curve(leibniz_presentation(4, f2), minimal_curve(2, 4, f2)))
      return "minimal curve over F2 up to 4 is not a curve";
    return "";
  });
  checks.emplace_back("verschiebung", [&] {
    const auto z = leibniz_presentation(4, f2);
    if (verschiebung(z, z.letter(1)) != z.letter(0) || verschiebung(z, z.letter(3)) != z.letter(1) ||
        !verschiebung(z, z.letter(2)).is_zero())
      return "Ver on Z(4) generators";
    const auto a = build(AlgebraSpec::truncated(6), f2);
    const auto h = h_a_presentation(a);
    const FqMatrix m = ver_dual(a).matrix();
    for (Letter k = 0; k < h.size(); ++k) {
      NcPoly expected;
      for (Letter j = 0; j < h.size(); ++j) expected.add({j}, m(j, k));
      if (verschiebung(h, h.letter(k)) != expected) return "ver_dual disagrees on H_A generators";
    }
    return "";
  });
  checks.emplace_back("height-law", [&] {
    for (unsigned p : {2u, 3u}) {
      const auto& f = GaloisField::make(p);
      for (int m = 1; m <= 12; ++m) {
        int expected = 0;
        for (long long q = 1; q < m + 1; q *= p) ++expected;
        if (height(build(AlgebraSpec::truncated(m + 1), f)) != expected)
          return "height of k[t]/(t^" + std::to_string(m + 1) + ")";
      }
    }
    return std::string();
  });
  checks.emplace_back("decomposition", [&] {
    for (int m = 0; m <= 12; ++m) {
      const auto d = decompose_sigma(build(AlgebraSpec::truncated(m + 1), f3));
      int total = 0;
      for (const auto& [l, c] : d.counts) total += l * c;
      if (total != m) return "dimension count for m = " + std::to_string(m);
    }
    return std::string();
  });
  checks.emplace_back("witt-addition", [&] {
    const WittVector one{2, {f2.one(), f2.zero()}}, two{2, {f2.zero(), f2.one()}};
    if (!(witt_add(one, one, f2, table) == two)) return "(1,0) + (1,0) != (0,1) in W2(F2)";
    std::vector<WittVector> all;
    for (const Fq& a : f2.elements())
      for (const Fq& b : f2.elements()) all.push_back({2, {a, b}});
    for (const auto& x : all)
      for (const auto& y : all) {
        if (!(witt_add(x, y, f2, table) == witt_add(y, x, f2, table))) return "not commutative";
        for (const auto& z : all)
          if (!(witt_add(witt_add(x, y, f2, table), z, f2, table) ==
                witt_add(x, witt_add(y, z, f2, table), f2, table)))
            return "not associative";
      }
    return "";
  });
  checks.emplace_back("witt-match", [&] {
    if (!match_witt_generators(2, 2, f2, 2, table)) return "no substitution for l = 2, p = 2";
    return "";
  });
  checks.emplace_back("omega-monoidal", [&] {
    const auto a = std::make_shared<const LocalAlgebra>(build(AlgebraSpec::truncated(4), f2));
    const auto h = h_a_presentation(*a);
    std::mt19937 rng(7);
    auto random_object = [&](int dim) {
      std::vector<FqMatrix> comps;
      for (int i = 0; i < a->dim(); ++i) {
        FqMatrix m = zero_matrix(f2, dim, dim);
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c) m(r, c) = f2.random(rng);
        comps.push_back(m);
      }
      return make_sa_object(a, dim, std::move(comps));
    };
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_object(2), y = random_object(3);
      const auto t = tensor_sa(x, y);
      const auto mx = omega(x), my = omega(y);
      for (Letter l = 0; l < h.size(); ++l) {
        FqMatrix acted = zero_matrix(f2, 6, 6);
        for (const auto& [key, c] : h.generator_coproduct(l).terms())
          acted += c * kronecker(mx.act(key[0]), my.act(key[1]));
        if (acted != t.components[l]) return "Delta action differs from tensor_sa";
      }
    }
    return "";
  });
  checks.emplace_back("base-change", [&] {
    const auto a = build(AlgebraSpec::monomial(2, {{4, 0}, {1, 1}, {0, 3}}), f2);
    if (filtration_dims(a) != filtration_dims(extend_scalars(a, FieldEmbedding(f2, f4))))
      return "filtration dimensions change over F4";
    return "";
  });
  checks.emplace_back("pipeline", [&] {
    const auto node = compute_pi1(
        parse_pinching(R"({"p":2,"branches":[[{"kind":"point"},{"kind":"point"}]]})"));
    if (render_text(node) != "Zhat") return "node does not render as Zhat";
    const auto t4 = compute_pi1(
        parse_pinching(R"({"p":2,"branches":[[{"kind":"truncated_poly","order":4}]]})"));
    if (render_text(t4) != "NW(1) * NW(2)") return "k[t]/(t^4) does not render as NW(1) * NW(2)";
    return "";
  });

  std::vector<CheckResult> out;
  for (const auto& [name, run] : checks) {
    CheckResult r{name, false, ""};
    try {
      r.detail = run();
      r.ok = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pinch
