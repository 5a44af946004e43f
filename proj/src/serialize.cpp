#include "minlab/serialize.hpp"

#include <sstream>

namespace minlab {

Json to_json(const Dag& g) {
    Json edges = Json::array();
    for (const auto& [p, c] : g.edges()) edges.push_back(Json::array({p, c}));
    return Json{{"k", g.node_count()}, {"edges", edges}};
}

Dag dag_from_json(const Json& j) {
    std::vector<Dag::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Dag(j.at("k").get<int>(), std::move(edges));
}

Json to_json(const CiStatement& s) {
    return Json{{"u", s.u_indices()}, {"v", s.v_indices()}, {"w", s.w_indices()}};
}

CiStatement statement_from_json(const Json& j) {
    return CiStatement::of(j.at("u").get<std::vector<int>>(), j.at("v").get<std::vector<int>>(),
                           j.value("w", std::vector<int>{}));
}

Json to_json(const StatementSet& s) {
    Json out = Json::array();
    for (const auto& st : s) out.push_back(to_json(st));
    return out;
}

StatementSet statement_set_from_json(const Json& j) {
    std::vector<CiStatement> members;
    for (const auto& e : j) members.push_back(statement_from_json(e));
    return StatementSet(std::move(members));
}

Json to_json(const JointTable& p) {
    return Json{{"cards", p.vars.cards()}, {"probs", p.probs}};
}

JointTable joint_from_json(const Json& j) {
    VariableSet vars = VariableSet::with_cards(j.at("cards").get<std::vector<int>>());
    return JointTable(std::move(vars), j.at("probs").get<std::vector<double>>());
}

Json to_json(const CptNetwork& net) {
    return Json{{"dag", to_json(net.g)}, {"cards", net.vars.cards()}, {"cpts", net.cpts}};
}

CptNetwork network_from_json(const Json& j) {
    Dag g = dag_from_json(j.at("dag"));
    VariableSet vars = VariableSet::with_cards(j.at("cards").get<std::vector<int>>());
    return CptNetwork(std::move(g), std::move(vars),
                      j.at("cpts").get<std::vector<std::vector<double>>>());
}

Json to_json(const StateClass& c) {
    return Json{{"markov", c.markov},
                {"faithful", c.faithful},
                {"minimal", c.minimal},
                {"u_minimal", c.u_minimal},
                {"quasi_faithful", c.quasi_faithful}};
}

Json to_json(const CiVerdict& v) {
    return Json{{"statement", to_json(v.statement)},
                {"statistic", v.statistic},
                {"threshold", v.threshold},
                {"accepted", v.accepted},
                {"n", v.n}};
}

Json to_json(const SuperTestOutput& out) {
    Json verdicts = Json::array();
    for (const auto& v : out.verdicts) verdicts.push_back(to_json(v));
    return Json{{"accepted", to_json(out.s)}, {"verdicts", verdicts}};
}

Json to_json(const Hypothesis& h) {
    Json members = Json::array();
    for (const auto& g : h.members) members.push_back(to_json(g));
    return Json{{"class_id", h.id}, {"iset", to_json(h.iset)}, {"member_dags", members}};
}

Json to_json(const CurvePoint& pt) {
    return Json{{"n", pt.n},       {"trials", pt.trials}, {"successes", pt.successes},
                {"rate", pt.rate}, {"lo", pt.lo},         {"hi", pt.hi}};
}

Json to_json(const ConvergenceCurve& c) {
    Json points = Json::array();
    for (const auto& pt : c.points) points.push_back(to_json(pt));
    return Json{{"target_class_id", c.target_class_id}, {"points", points}};
}

Json to_json(const BehaviorReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json flips = Json::array();
        for (const auto& f : e.flips)
            flips.push_back(Json{{"preferred_class_id", f.preferred_class_id},
                                 {"preferred_terminal", f.preferred_terminal},
                                 {"true_terminal", f.true_terminal}});
        entries.push_back(Json{{"label", e.label},
                               {"classification", to_json(e.cls)},
                               {"true_class_id", e.true_class_id},
                               {"regime", e.regime},
                               {"curve", to_json(e.curve)},
                               {"flips", flips},
                               {"winning_class_id", e.winning_class_id},
                               {"winning_rate", e.winning_rate},
                               {"consistent", e.consistent}});
    }
    return Json{{"entries", entries}, {"all_consistent", r.all_consistent}};
}

Json to_json(const UniformityReport& r) {
    Json probes = Json::array();
    for (std::size_t i = 0; i < r.probe_curves.size(); ++i)
        probes.push_back(Json{{"tv", r.probe_tv[i]}, {"curve", to_json(r.probe_curves[i])}});
    Json inf = Json::array();
    for (const auto& [n, rate] : r.inf_success_per_n)
        inf.push_back(Json{{"n", n}, {"inf_success", rate}});
    return Json{{"label", r.label},
                {"epsilon", r.epsilon},
                {"effective_epsilon", r.effective_epsilon},
                {"shrunk", r.shrunk},
                {"center_u_minimal", r.center_u_minimal},
                {"center_curve", to_json(r.center_curve)},
                {"probes", probes},
                {"inf_success_per_n", inf},
                {"verdict", r.verdict}};
}

Json to_json(const ReplayReport& r) {
    return Json{{"s0_class_id", r.s0_class_id},
                {"minimal_class_id", r.minimal_class_id},
                {"perturbed", r.perturbed},
                {"n", r.n},
                {"trials", r.trials},
                {"outputs_identical", r.outputs_identical},
                {"s2_truth_rate", r.s2_truth_rate},
                {"s3_truth_rate", r.s3_truth_rate},
                {"s3_converged_rate", r.s3_converged_rate},
                {"succeeded", r.succeeded}};
}

Json to_json(const QuasiReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"label", e.label},
                               {"faithful", e.faithful},
                               {"terminal_success", e.terminal_success},
                               {"consistent", e.consistent}});
    return Json{{"entries", entries},
                {"skipped", r.skipped},
                {"all_consistent", r.all_consistent},
                {"empty_suite", r.empty_suite}};
}

Json to_json(const TraceReport& r) {
    return Json{{"n", r.n},
                {"trials", r.trials},
                {"relation_rate", r.relation_rate},
                {"exact_iset_rate", r.exact_iset_rate},
                {"output_mode_class_id", r.output_mode_class_id}};
}

namespace {
void append_csv_row(std::ostringstream& out, const std::string& label, const CurvePoint& pt,
                    bool with_label) {
    if (with_label) out << label << ',';
    out << pt.n << ',' << pt.trials << ',' << pt.successes << ',' << pt.rate << ',' << pt.lo
        << ',' << pt.hi << '\n';
}
}  // namespace

std::string curve_csv(const ConvergenceCurve& c) {
    std::ostringstream out;
    out << "n,trials,successes,rate,lo,hi\n";
    for (const auto& pt : c.points) append_csv_row(out, "", pt, false);
    return out.str();
}

std::string curves_csv(const std::vector<std::pair<std::string, ConvergenceCurve>>& curves) {
    std::ostringstream out;
    out << "label,n,trials,successes,rate,lo,hi\n";
    for (const auto& [label, curve] : curves)
        for (const auto& pt : curve.points) append_csv_row(out, label, pt, true);
    return out.str();
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace minlab
