#pragma once

#include <json.hpp>

#include "minlab/citest.hpp"
#include "minlab/experiments.hpp"
#include "minlab/learner.hpp"

namespace minlab {

using Json = nlohmann::json;

// Wire formats. Dag: {"k": int, "edges": [[parent, child], ...]} with edges
// sorted; statements as {"u": [...], "v": [...], "w": [...]} in canonical
// order; JointTable: {"cards": [...], "probs": [...]} row-major with the
// last variable fastest; CptNetwork: {"dag": ..., "cards": [...],
// "cpts": [[row...] ...]}.

Json to_json(const Dag& g);
Dag dag_from_json(const Json& j);

Json to_json(const CiStatement& s);
CiStatement statement_from_json(const Json& j);

Json to_json(const StatementSet& s);
StatementSet statement_set_from_json(const Json& j);

Json to_json(const JointTable& p);
JointTable joint_from_json(const Json& j);

Json to_json(const CptNetwork& net);
CptNetwork network_from_json(const Json& j);

Json to_json(const StateClass& c);

Json to_json(const CiVerdict& v);
Json to_json(const SuperTestOutput& out);

Json to_json(const Hypothesis& h);

Json to_json(const CurvePoint& pt);
Json to_json(const ConvergenceCurve& c);
Json to_json(const BehaviorReport& r);
Json to_json(const UniformityReport& r);
Json to_json(const ReplayReport& r);
Json to_json(const QuasiReport& r);
Json to_json(const TraceReport& r);

// curves CSV: n,trials,successes,rate,lo,hi
std::string curve_csv(const ConvergenceCurve& c);
std::string curves_csv(const std::vector<std::pair<std::string, ConvergenceCurve>>& curves);

// Stable float formatting used by every report writer (shortest round-trip).
std::string dump_report(const Json& j);

}  // namespace minlab
