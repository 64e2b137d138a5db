#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "fockproj/error.hpp"
#include "fockproj/io.hpp"
#include "fockproj/projector.hpp"

namespace fockproj {
namespace {

using io::json;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(FormatDouble, SeventeenDigitsAndRoundTrip) {
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_double(1.0), "1");
  EXPECT_EQ(io::format_double(-2.5e-300), "-2.5e-300");
  for (double v : {1.0 / 3.0, 6.02214076e23, -1e-17, 123456.789}) {
    EXPECT_EQ(std::stod(io::format_double(v)), v);
  }
  EXPECT_THROW(io::format_double(std::numeric_limits<double>::quiet_NaN()), Error);
  EXPECT_THROW(io::format_double(std::numeric_limits<double>::infinity()), Error);
}

TEST(OperatorJson, RoundTrip) {
  const auto e = displaced_projector(2, PhasePoint{0.3, -0.2}, FockDim(6));
  const json j = io::to_json(e);
  EXPECT_EQ(j.at("dim"), 6);
  EXPECT_EQ(j.at("data").size(), 36u);
  const auto back = io::operator_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.mat(), e.mat());
  // row-major: data[1] is <0|E|1>
  EXPECT_EQ(j.at("data")[1][0].get<double>(), e(0, 1).real());
  EXPECT_EQ(code_of([] { io::operator_from_json(json{{"dim", 2}, {"data", json::array()}}); }), ErrorCode::InvalidSpec);
}

TEST(RegionJson, ParsesAllKinds) {
  const auto circle = io::region_from_json(json::parse(R"({"circle": {"R": 3.0, "center": [0, 0]}})"));
  ASSERT_TRUE(std::holds_alternative<CircleRegion>(circle));
  EXPECT_EQ(std::get<CircleRegion>(circle).radius, 3.0);

  const auto ellipse = io::region_from_json(
      json::parse(R"({"ellipse": {"center": [1, 2], "squeeze": [0.4, 0.1], "rotation": 0.7, "rank": 5}})"));
  const auto& el = std::get<EllipseRegion>(ellipse);
  EXPECT_EQ(el.center, (PhasePoint{1.0, 2.0}));
  EXPECT_EQ(el.squeeze, Complex(0.4, 0.1));
  EXPECT_EQ(el.rank, 5);

  const auto general =
      io::region_from_json(json::parse(R"({"general": {"potential": {"polynomial": [0,0,0,0,0.25]}, "levels": 8}})"));
  const auto& g = std::get<GeneralRegion>(general);
  EXPECT_EQ(g.levels, 8);
  EXPECT_EQ(std::get<PolynomialPotential>(g.potential).coefficients.back(), 0.25);

  for (const auto& r : {circle, ellipse, general}) EXPECT_EQ(io::to_json(io::region_from_json(io::to_json(r))), io::to_json(r));
}

TEST(RegionJson, RejectsMalformed) {
  for (const char* text : {R"({"square": {}})", R"({"circle": {"R": "big"}})", R"({"circle": {"R": -1}})",
                           R"({"ellipse": {"rank": 0}})", R"([1, 2])", R"({"circle": {}, "ellipse": {}})"}) {
    EXPECT_EQ(code_of([&] { io::region_from_json(json::parse(text)); }), ErrorCode::InvalidSpec) << text;
  }
  EXPECT_EQ(code_of([] { io::region_from_json(json::parse(R"({"general": {"potential": {"polynomial": [0, 1]}, "levels": 2}})")); }),
            ErrorCode::NonConfiningPotential);
}

TEST(PotentialJson, Forms) {
  EXPECT_TRUE(std::holds_alternative<HarmonicPotential>(io::potential_from_json("harmonic")));
  EXPECT_TRUE(std::holds_alternative<HarmonicPotential>(io::potential_from_json(json{{"harmonic", json::object()}})));
  const auto tab = io::potential_from_json(json::parse(R"({"tabulated": {"grid": [-1, 0, 1], "values": [1, 0, 1]}})"));
  EXPECT_EQ(std::get<TabulatedPotential>(tab).values.size(), 3u);
}

TEST(Csv, LayoutAndMetadata) {
  PhaseGrid g{{-1.0, 1.0}, {0.0, 0.5, 1.0}, Eigen::MatrixXd(2, 3)};
  g.values << 1, 2, 3, 4, 5, 6.5;
  std::ostringstream os;
  io::write_csv(os, g, {{"command", "wigner"}, {"dim", "8"}});
  EXPECT_EQ(os.str(),
            "# command: wigner\n# dim: 8\n"
            "p\\q,0,0.5,1\n"
            "-1,1,2,3\n"
            "1,4,5,6.5\n");
}

TEST(GridJson, Layout) {
  PhaseGrid g{{0.0}, {1.0, 2.0}, Eigen::MatrixXd(1, 2)};
  g.values << 0.25, -0.5;
  const json j = io::to_json(g, {{"k", "v"}});
  EXPECT_EQ(j.at("metadata").at("k"), "v");
  EXPECT_EQ(j.at("values")[0][1].get<double>(), -0.5);
}

TEST(HistoryJson, StepsForm) {
  const json j = json::parse(R"({
    "dim": 64, "tolerance": 1e-8,
    "initial_state": {"coherent": [0.0, 1.0]},
    "steps": [{"time": 0.0, "region": {"circle": {"R": 2.5, "center": [0, 1]}}},
              {"time": 1.0, "region": {"circle": {"R": 2.5, "center": [-0.8414709848078965, 0.5403023058681398]}}}]})");
  const auto doc = io::history_from_json(j);
  EXPECT_EQ(doc.tolerance, 1e-8);
  ASSERT_EQ(doc.spec.steps.size(), 2u);
  EXPECT_EQ(doc.spec.steps[1].alternatives[1].label, "out");
  EXPECT_NEAR(doc.spec.rho0.trace().real(), 1.0, 1e-14);
}

TEST(HistoryJson, FlowForm) {
  const auto doc = io::history_from_json(json::parse(
      R"({"dim": 96, "initial_state": {"diagonal": [1, 1]}, "flow": {"N": 5, "center": [1, 1], "times": [0, 1, 2]}})"));
  EXPECT_EQ(doc.spec.steps.size(), 3u);
  EXPECT_EQ(doc.tolerance, 1e-9);
  EXPECT_NEAR(doc.spec.rho0(1, 1).real(), 0.5, 1e-15);
}

TEST(HistoryJson, Errors) {
  auto parse = [](const char* text) { return [text] { io::history_from_json(json::parse(text)); }; };
  EXPECT_EQ(code_of(parse(R"({"dim": 32, "initial_state": {"number": 0}})")), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of(parse(R"({"dim": 32, "initial_state": {"number": 0}, "steps": []})")), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of(parse(R"({"dim": 32, "initial_state": {"vacuum": 0}, "steps": []})")), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of(parse(R"({"dim": 20, "initial_state": {"number": 0},
                              "flow": {"N": 5, "center": [0, 0], "times": [0]}})")),
            ErrorCode::TruncationBound);
  EXPECT_EQ(code_of(parse(R"({"dim": 40, "initial_state": {"number": 0},
                              "steps": [{"time": 0, "region": {"circle": {"R": 2, "center": [6, 6]}}}]})")),
            ErrorCode::TruncationBound);
  EXPECT_EQ(code_of(parse(R"({"dim": 8, "initial_state": {"diagonal": [-1, 2]}, "flow": {"N": 0, "center": [0, 0], "times": [0]}})")),
            ErrorCode::InvalidSpec);
}

TEST(InitialStates, Kinds) {
  const FockDim d(40);
  EXPECT_EQ(io::density_from_json(json{{"number", 3}}, d)(3, 3), Complex(1.0));
  const auto mixed = io::density_from_json(json::parse(R"({"projector_mixed": {"circle": {"R": 2}}})"), d);
  EXPECT_NEAR(mixed.trace().real(), 1.0, 1e-14);
  const auto m = io::density_from_json(json{{"matrix", io::to_json(mixed)}}, d);
  EXPECT_EQ(m.mat(), mixed.mat());
}

TEST(ReportJson, Fields) {
  DecoherenceReport r;
  r.branches = {{"in"}, {"out"}};
  r.functional = Matrix::Identity(2, 2) * 0.5;
  r.probabilities = {0.5, 0.5};
  r.max_diag = 0.5;
  r.tolerance = 1e-9;
  r.decoherent = true;
  const json j = io::to_json(r);
  EXPECT_EQ(j.at("functional")[0][0][0].get<double>(), 0.5);
  EXPECT_EQ(j.at("functional")[0][1][1].get<double>(), 0.0);
  EXPECT_TRUE(j.at("decoherent").get<bool>());
}

}  // namespace
}  // namespace fockproj
