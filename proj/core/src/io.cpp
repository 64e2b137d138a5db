#include "fockproj/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <type_traits>

#include "fockproj/error.hpp"
#include "fockproj/fock_core.hpp"

namespace fockproj::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

double finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "refusing to serialize a non-finite value");
  return v;
}

json complex_pair(Complex c) { return json::array({finite(c.real()), finite(c.imag())}); }

Complex complex_from(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2) bad("complex value must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

// A single-key object {"kind": body}; also accepts a bare string "kind".
std::pair<std::string, json> tagged(const json& j, const char* what) {
  if (j.is_string()) return {j.get<std::string>(), json::object()};
  if (!j.is_object() || j.size() != 1) bad(std::string(what) + " must be an object with exactly one key");
  return {j.begin().key(), j.begin().value()};
}

}  // namespace

std::string format_double(double v) {
  finite(v);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error(ErrorCode::InvalidArgument, "format_double: conversion failed");
  return std::string(buf, ptr);
}

json to_json(const FockOperator& op) {
  json data = json::array();
  const int d = op.dim().value();
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) data.push_back(complex_pair(op(m, n)));
  }
  return json{{"dim", d}, {"data", std::move(data)}};
}

FockOperator operator_from_json(const json& j) {
  try {
    const int d = member(j, "dim").get<int>();
    const json& data = member(j, "data");
    FockDim dim(d);
    if (!data.is_array() || data.size() != static_cast<std::size_t>(d) * d) bad("operator data must have dim^2 entries");
    Matrix m(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) m(r, c) = complex_from(data[static_cast<std::size_t>(r) * d + c]);
    }
    return FockOperator(dim, std::move(m));
  } catch (const json::exception& e) {
    bad(std::string("malformed operator: ") + e.what());
  }
}

json to_json(const PotentialSpec& spec) {
  return std::visit(overloaded{
                        [](const HarmonicPotential&) { return json{{"harmonic", json::object()}}; },
                        [](const PolynomialPotential& p) { return json{{"polynomial", p.coefficients}}; },
                        [](const TabulatedPotential& t) {
                          return json{{"tabulated", {{"grid", t.grid}, {"values", t.values}}}};
                        },
                    },
                    spec);
}

PotentialSpec potential_from_json(const json& j) {
  try {
    auto [kind, body] = tagged(j, "potential");
    if (kind == "harmonic") return HarmonicPotential{};
    if (kind == "polynomial") return PolynomialPotential{body.get<std::vector<double>>()};
    if (kind == "tabulated") {
      return TabulatedPotential{member(body, "grid").get<std::vector<double>>(),
                                member(body, "values").get<std::vector<double>>()};
    }
    bad("unknown potential kind '" + kind + "'");
  } catch (const json::exception& e) {
    bad(std::string("malformed potential: ") + e.what());
  }
}

json to_json(PhasePoint x) { return json::array({finite(x.p), finite(x.q)}); }

PhasePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("point must be [p, q]");
  return PhasePoint{j[0].get<double>(), j[1].get<double>()};
}

json to_json(const RegionSpec& region) {
  return std::visit(overloaded{
                        [](const CircleRegion& c) {
                          return json{{"circle", {{"R", finite(c.radius)}, {"center", to_json(c.center)}}}};
                        },
                        [](const EllipseRegion& e) {
                          return json{{"ellipse",
                                       {{"center", to_json(e.center)},
                                        {"squeeze", complex_pair(e.squeeze)},
                                        {"rotation", finite(e.rotation)},
                                        {"rank", e.rank}}}};
                        },
                        [](const GeneralRegion& g) {
                          return json{{"general", {{"potential", to_json(g.potential)}, {"levels", g.levels}}}};
                        },
                    },
                    region);
}

RegionSpec region_from_json(const json& j) {
  try {
    auto [kind, body] = tagged(j, "region");
    RegionSpec out;
    if (kind == "circle") {
      CircleRegion c;
      c.radius = member(body, "R").get<double>();
      if (body.contains("center")) c.center = point_from_json(body.at("center"));
      out = c;
    } else if (kind == "ellipse") {
      EllipseRegion e;
      if (body.contains("center")) e.center = point_from_json(body.at("center"));
      if (body.contains("squeeze")) e.squeeze = complex_from(body.at("squeeze"));
      if (body.contains("rotation")) e.rotation = body.at("rotation").get<double>();
      e.rank = member(body, "rank").get<int>();
      out = e;
    } else if (kind == "general") {
      GeneralRegion g;
      g.potential = potential_from_json(member(body, "potential"));
      g.levels = member(body, "levels").get<int>();
      out = g;
    } else {
      bad("unknown region kind '" + kind + "'");
    }
    validate(out);
    return out;
  } catch (const json::exception& e) {
    bad(std::string("malformed region: ") + e.what());
  }
}

void write_csv(std::ostream& os, const PhaseGrid& grid, const Metadata& meta) {
  for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
  os << "p\\q";
  for (double q : grid.q_axis) os << ',' << format_double(q);
  os << '\n';
  for (std::size_t i = 0; i < grid.p_axis.size(); ++i) {
    os << format_double(grid.p_axis[i]);
    for (std::size_t jj = 0; jj < grid.q_axis.size(); ++jj) {
      os << ',' << format_double(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(jj)));
    }
    os << '\n';
  }
}

json to_json(const PhaseGrid& grid, const Metadata& meta) {
  json values = json::array();
  for (Eigen::Index i = 0; i < grid.values.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index jj = 0; jj < grid.values.cols(); ++jj) row.push_back(finite(grid.values(i, jj)));
    values.push_back(std::move(row));
  }
  for (double v : grid.p_axis) finite(v);
  for (double v : grid.q_axis) finite(v);
  return json{{"metadata", meta}, {"p_axis", grid.p_axis}, {"q_axis", grid.q_axis}, {"values", std::move(values)}};
}

json to_json(const DecoherenceReport& report) {
  json functional = json::array();
  for (Eigen::Index b = 0; b < report.functional.rows(); ++b) {
    json row = json::array();
    for (Eigen::Index bp = 0; bp < report.functional.cols(); ++bp) row.push_back(complex_pair(report.functional(b, bp)));
    functional.push_back(std::move(row));
  }
  for (double p : report.probabilities) finite(p);
  return json{{"branches", report.branches},
              {"functional", std::move(functional)},
              {"probabilities", report.probabilities},
              {"max_offdiag", finite(report.max_offdiag)},
              {"max_diag", finite(report.max_diag)},
              {"tolerance", finite(report.tolerance)},
              {"decoherent", report.decoherent}};
}

FockOperator density_from_json(const json& j, FockDim dim) {
  try {
    auto [kind, body] = tagged(j, "initial state");
    if (kind == "coherent") {
      const FockState s = coherent_state(ComplexLabel::from_point(point_from_json(body)), dim);
      FockOperator rho = FockOperator::outer(s, s);
      return rho * Complex(1.0 / s.norm2(), 0.0);
    }
    if (kind == "number") return FockOperator::outer(number_state(body.get<int>(), dim), number_state(body.get<int>(), dim));
    if (kind == "projector_mixed") {
      const FockOperator e = build_projector(region_from_json(body), dim);
      return e * Complex(1.0 / e.trace().real(), 0.0);
    }
    if (kind == "diagonal") {
      const auto w = body.get<std::vector<double>>();
      if (w.empty() || w.size() > static_cast<std::size_t>(dim.value())) bad("diagonal state length must be in [1, dim]");
      RealVector d = RealVector::Zero(dim.index());
      double total = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] >= 0.0)) bad("diagonal state weights must be non-negative");
        d(static_cast<Eigen::Index>(i)) = w[i];
        total += w[i];
      }
      if (!(total > 0.0)) bad("diagonal state weights sum to zero");
      return FockOperator::diagonal(d / total);
    }
    if (kind == "matrix") {
      FockOperator rho = operator_from_json(body);
      if (!(rho.dim() == dim)) bad("matrix initial state dimension mismatch");
      return rho;
    }
    bad("unknown initial state kind '" + kind + "'");
  } catch (const json::exception& e) {
    bad(std::string("malformed initial state: ") + e.what());
  }
}

HistoryDocument history_from_json(const json& j) {
  try {
    const FockDim dim(member(j, "dim").get<int>());
    HistoryDocument doc{HistorySpec{density_from_json(member(j, "initial_state"), dim), {}}, 1e-9};
    if (j.contains("tolerance")) doc.tolerance = j.at("tolerance").get<double>();
    if (!(doc.tolerance >= 0.0)) bad("tolerance must be non-negative");

    const bool has_steps = j.contains("steps");
    const bool has_flow = j.contains("flow");
    if (has_steps == has_flow) bad("history needs exactly one of 'steps' or 'flow'");

    if (has_flow) {
      const json& f = j.at("flow");
      const int N = member(f, "N").get<int>();
      const PhasePoint center = point_from_json(member(f, "center"));
      const auto times = member(f, "times").get<std::vector<double>>();
      check_truncation(N, ComplexLabel::from_point(center), dim);
      if (f.contains("offset")) {
        const PhasePoint offset = point_from_json(f.at("offset"));
        // shifted centres lie within |z_c| + |z_offset| of the origin
        const double reach = std::abs(ComplexLabel::from_point(center).z) + std::abs(ComplexLabel::from_point(offset).z);
        check_truncation(N, ComplexLabel{Complex(reach, 0.0)}, dim);
        doc.spec = misaligned_history_spec(N, center, times, offset, dim, std::move(doc.spec.rho0));
      } else {
        doc.spec = classical_history_spec(N, center, times, dim, std::move(doc.spec.rho0));
      }
      return doc;
    }

    const json& steps = j.at("steps");
    if (!steps.is_array() || steps.empty()) bad("'steps' must be a non-empty array");
    for (const auto& s : steps) {
      const double t = member(s, "time").get<double>();
      const RegionSpec region = region_from_json(member(s, "region"));
      const auto fp = footprint(region);
      check_truncation(fp.top_level, fp.center, dim);
      FockOperator e = build_projector(region, dim);
      FockOperator ebar = complement(e);
      doc.spec.steps.push_back(HistoryStep{t, {{std::move(e), "in"}, {std::move(ebar), "out"}}});
    }
    return doc;
  } catch (const json::exception& e) {
    bad(std::string("malformed history spec: ") + e.what());
  }
}

}  // namespace fockproj::io
