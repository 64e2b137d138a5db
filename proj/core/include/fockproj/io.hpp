#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "fockproj/histories.hpp"
#include "fockproj/phase_space.hpp"
#include "fockproj/projector.hpp"
#include "fockproj/types.hpp"

namespace fockproj::io {

using nlohmann::json;

/// "%.17g"-equivalent, locale independent. Throws InvalidArgument on NaN/Inf.
std::string format_double(double v);

json to_json(const FockOperator& op);  // {"dim": d, "data": [[re, im], ...]} row-major
FockOperator operator_from_json(const json& j);

json to_json(const PotentialSpec& spec);
PotentialSpec potential_from_json(const json& j);

json to_json(const RegionSpec& region);
RegionSpec region_from_json(const json& j);

json to_json(PhasePoint x);  // [p, q]
PhasePoint point_from_json(const json& j);

using Metadata = std::map<std::string, std::string>;

/// Metadata lines "# key: value", then a header row "p\q,q_0,...", then one
/// row per p value.
void write_csv(std::ostream& os, const PhaseGrid& grid, const Metadata& meta);
json to_json(const PhaseGrid& grid, const Metadata& meta);

json to_json(const DecoherenceReport& report);

/// Initial-state descriptors:
///   {"coherent": [p, q]} | {"number": n} | {"projector_mixed": <region>}
///   | {"diagonal": [w_0, w_1, ...]} | {"matrix": <operator json>}
FockOperator density_from_json(const json& j, FockDim dim);

struct HistoryDocument {
  HistorySpec spec;
  double tolerance = 1e-9;
};

/// {"dim": d, "tolerance": t?, "initial_state": {...},
///  "steps": [{"time": t, "region": <region>}, ...]}   (alternatives in/out)
/// or, in place of "steps":
///  "flow": {"N": n, "center": [p, q], "times": [...], "offset": [dp, dq]?}
HistoryDocument history_from_json(const json& j);

}  // namespace fockproj::io
