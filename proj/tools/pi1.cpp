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

// pi1: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 parse or validation failure, 3 internal
// invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pinch/leibniz.hpp"
#include "pinch/pipeline.hpp"

namespace {

using namespace pinch;

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::NonPrime:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::UnsupportedField:
    case ErrorCode::NotCofinite:
    case ErrorCode::NotLocal:
    case ErrorCode::InvalidConstants:
    case ErrorCode::ShapeMismatch:
      return kInput;
    default:
      return kInternal;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Pinching load(const std::string& path) {
  Pinching p = parse_pinching(read_file(path));
  for (const auto& w : p.warnings) std::cerr << "warning: " << w << "\n";
  return p;
}

int run_compute(const std::string& path, bool json) {
  const Pi1Expression e = compute_pi1(load(path));
  std::cout << (json ? to_json(e).dump() : render_text(e)) << "\n";
  return 0;
}

int run_minimal_curve(unsigned p, int upto) {
  if (upto < 1) throw Error(ErrorCode::ValidationError, "--upto must be at least 1");
  const GaloisField& f = GaloisField::make(p);
  const HopfPresentation z = leibniz_presentation(upto, f);
  const Curve c = minimal_curve(p, upto, f);
  for (std::size_t i = 0; i < c.size(); ++i)
    std::cout << "E" << i + 1 << " = " << to_string(z, c[i]) << "\n";
  return 0;
}

std::vector<long long> parse_components(const std::string& s, int length) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ValidationError, "not an integer: \"" + item + "\"");
    }
  }
  if (static_cast<int>(out.size()) != length)
    throw Error(ErrorCode::ValidationError, "expected " + std::to_string(length) + " components");
  return out;
}

int run_witt(unsigned p, int length, const std::vector<std::string>& add) {
  if (length < 1) throw Error(ErrorCode::ValidationError, "--length must be at least 1");
  const GaloisField& f = GaloisField::make(p);
  if (add.empty()) {
    const auto& polys = witt_addition_polys(p, length);
    for (int n = 0; n < length; ++n) std::cout << "S" << n << " = " << to_string(polys[n]) << "\n";
    return 0;
  }
  WittVector u{p, {}}, v{p, {}};
  for (int side = 0; side < 2; ++side)
    for (long long c : parse_components(add[side], length)) {
      if (c < 0 || c >= static_cast<long long>(p))
        throw Error(ErrorCode::ValidationError, "components must lie in [0, p)");
      (side == 0 ? u : v).components.push_back(f.from_int(c));
    }
  const WittVector w = witt_add(u, v, f);
  std::cout << "(";
  for (std::size_t i = 0; i < w.components.size(); ++i)
    std::cout << (i ? "," : "") << to_string(w.components[i]);
  std::cout << ")\n";
  return 0;
}

int run_presentation(const std::string& path, const std::string& component, bool json) {
  int b = 0, c = 0;
  char comma = 0;
  std::istringstream in(component);
  if (!(in >> b >> comma >> c) || comma != ',' || !in.eof())
    throw Error(ErrorCode::ValidationError, "--component expects i,j");
  const Pinching p = load(path);
  if (b < 1 || b > static_cast<int>(p.branches.size()) || c < 1 ||
      c > static_cast<int>(p.branches[b - 1].size()))
    throw Error(ErrorCode::ValidationError, "no component " + component);
  const LocalAlgebra& a = *p.branches[b - 1][c - 1];
  // Generators must follow the powers of m for the weights to be well founded.
  const HopfPresentation h = h_a_presentation(filtration_adapted(a));
  if (json) {
    std::cout << presentation_to_json(h).dump() << "\n";
    return 0;
  }
  for (Letter l = 0; l < h.size(); ++l) {
    const auto& g = h.generators()[l];
    std::cout << g.name << " (weight " << g.weight << "): Delta = " << g.name << " (x) 1 + 1 (x) "
              << g.name;
    for (const auto& corr : g.corrections) {
      std::cout << " + ";
      if (corr.coeff != h.field().one()) std::cout << to_string(corr.coeff) << "*";
      std::cout << to_string(h, corr.left) << " (x) " << to_string(h, corr.right);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_check() {
  bool ok = true;
  for (const auto& r : self_check()) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.ok) std::cout << ": " << r.detail;
    std::cout << "\n";
    ok = ok && r.ok;
  }
  return ok ? 0 : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental group schemes of pinched varieties"};
  app.require_subcommand(1);

  std::string file, component;
  bool json = false;
  unsigned p = 0;
  int upto = 0, length = 0;
  std::vector<std::string> add;

  auto* compute = app.add_subcommand("compute", "Decompose pi1 of a pinching description");
  compute->add_option("file", file, "JSON pinching description")->required();
  compute->add_flag("--json", json, "Print the JSON report");

  auto* curve = app.add_subcommand("minimal-curve", "Minimal curve in the Leibniz Hopf algebra");
  curve->add_option("--p", p, "Characteristic")->required();
  curve->add_option("--upto", upto, "Last index")->required();

  auto* witt = app.add_subcommand("witt", "Witt addition polynomials or a Witt sum");
  witt->add_option("--p", p, "Prime")->required();
  witt->add_option("--length", length, "Witt vector length")->required();
  witt->add_option("--add", add, "Two vectors x0,x1,... y0,y1,...")->expected(2);

  auto* pres = app.add_subcommand("presentation", "Hopf presentation of one component");
  pres->add_option("file", file, "JSON pinching description")->required();
  pres->add_option("--component", component, "Branch and component, 1-based: i,j")->required();
  pres->add_flag("--json", json, "Print the presentation as JSON");

  auto* check = app.add_subcommand("check", "Run the built-in cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*compute) return run_compute(file, json);
    if (*curve) return run_minimal_curve(p, upto);
    if (*witt) return run_witt(p, length, add);
    if (*pres) return run_presentation(file, component, json);
    if (*check) return run_check();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
