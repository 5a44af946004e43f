#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minlab/experiments.hpp"
#include "minlab/serialize.hpp"

namespace py = pybind11;
using namespace minlab;

namespace {
template <typename T>
std::string json_repr(const T& value) {
    return to_json(value).dump();
}
}  // namespace

PYBIND11_MODULE(_minlab, m) {
    m.doc() = "exact predicates, independence testing and seeded learning experiments "
              "for small categorical causal models";

    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_ValueError);
    py::register_exception<MarkovViolationError>(m, "MarkovViolationError", PyExc_ValueError);

    py::class_<VariableSet>(m, "VariableSet")
        .def(py::init<std::vector<std::string>, std::vector<int>>(), py::arg("names"),
             py::arg("cards"))
        .def_static("binary", &VariableSet::binary, py::arg("k"))
        .def_static("with_cards", &VariableSet::with_cards, py::arg("cards"))
        .def_property_readonly("names", &VariableSet::names)
        .def_property_readonly("cards", &VariableSet::cards)
        .def("__len__", &VariableSet::size)
        .def("cell_count", &VariableSet::cell_count);

    py::class_<Dag>(m, "Dag")
        .def(py::init<int, std::vector<Dag::Edge>>(), py::arg("k"), py::arg("edges"))
        .def_static("empty", &Dag::empty, py::arg("k"))
        .def_static("chain", &Dag::chain, py::arg("k"))
        .def_static("complete", &Dag::complete, py::arg("k"))
        .def_property_readonly("k", &Dag::node_count)
        .def_property_readonly("edges", &Dag::edges)
        .def("topological_order", &Dag::topological_order)
        .def(py::self == py::self)
        .def("__repr__", [](const Dag& g) { return "Dag(" + json_repr(g) + ")"; });

    m.def("parents", &parents, py::arg("g"), py::arg("i"));
    m.def("descendants", &descendants, py::arg("g"), py::arg("i"));

    py::class_<CiStatement>(m, "CiStatement")
        .def(py::init(&CiStatement::of), py::arg("u"), py::arg("v"),
             py::arg("w") = std::vector<int>{})
        .def_property_readonly("u", &CiStatement::u_indices)
        .def_property_readonly("v", &CiStatement::v_indices)
        .def_property_readonly("w", &CiStatement::w_indices)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__",
             [](const CiStatement& s) {
                 return py::hash(py::make_tuple(s.u(), s.v(), s.w()));
             })
        .def("__repr__", [](const CiStatement& s) { return s.str(); });

    py::class_<StatementSet>(m, "StatementSet")
        .def(py::init<std::vector<CiStatement>>(), py::arg("members"))
        .def_property_readonly("members", &StatementSet::members)
        .def("__len__", &StatementSet::size)
        .def("__contains__", &StatementSet::contains)
        .def("subset_of", &StatementSet::subset_of)
        .def(py::self == py::self)
        .def("__repr__", [](const StatementSet& s) { return json_repr(s); });

    m.def("statement_universe", &statement_universe, py::arg("k"));

    m.def("enumerate_dags", &enumerate_dags, py::arg("k"), py::arg("cap") = kDefaultCap);
    m.def("d_separated", py::overload_cast<const Dag&, const CiStatement&>(&d_separated),
          py::arg("g"), py::arg("s"));
    m.def("entailment_set", &entailment_set, py::arg("g"), py::arg("cap") = kDefaultCap);
    m.def("markov_equivalent", &markov_equivalent, py::arg("g1"), py::arg("g2"),
          py::arg("cap") = kDefaultCap);

    py::class_<Hypothesis>(m, "Hypothesis")
        .def_readonly("id", &Hypothesis::id)
        .def_readonly("iset", &Hypothesis::iset)
        .def_readonly("members", &Hypothesis::members)
        .def("__repr__", [](const Hypothesis& h) {
            return "Hypothesis(id=" + std::to_string(h.id) + ", entails " +
                   std::to_string(h.iset.size()) + ")";
        });

    m.def(
        "equivalence_classes",
        [](int k, int cap) { return equivalence_classes(k, cap); }, py::arg("k"),
        py::arg("cap") = kDefaultCap, py::return_value_policy::copy);

    py::class_<JointTable>(m, "JointTable")
        .def(py::init<VariableSet, std::vector<double>>(), py::arg("vars"), py::arg("probs"))
        .def_readonly("vars", &JointTable::vars)
        .def_readonly("probs", &JointTable::probs)
        .def("__repr__", [](const JointTable& p) { return "JointTable(" + json_repr(p) + ")"; });

    py::class_<CptNetwork>(m, "CptNetwork")
        .def(py::init<Dag, VariableSet, std::vector<std::vector<double>>>(), py::arg("g"),
             py::arg("vars"), py::arg("cpts"))
        .def_readonly("g", &CptNetwork::g)
        .def_readonly("vars", &CptNetwork::vars)
        .def_readonly("cpts", &CptNetwork::cpts);

    py::class_<CausalState>(m, "CausalState")
        .def(py::init<Dag, JointTable>(), py::arg("g"), py::arg("p"))
        .def_readonly("g", &CausalState::g)
        .def_readonly("p", &CausalState::p);

    m.def("joint_of", &joint_of, py::arg("net"));
    m.def("ci_holds", &ci_holds, py::arg("p"), py::arg("s"), py::arg("tol") = kCiTolerance);
    m.def("independence_set", &independence_set, py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);
    m.def("tv_distance", &tv_distance, py::arg("p"), py::arg("q"));
    m.def("mix", &mix, py::arg("p"), py::arg("q"), py::arg("lambda_"));
    m.def("perturb", &perturb, py::arg("p"), py::arg("epsilon"), py::arg("seed"));
    m.def("random_table", &random_table, py::arg("vars"), py::arg("seed"));
    m.def("random_network", &random_network, py::arg("g"), py::arg("vars"), py::arg("seed"));
    m.def("is_markov", &is_markov, py::arg("g"), py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);

    py::class_<StateClass>(m, "StateClass")
        .def_readonly("markov", &StateClass::markov)
        .def_readonly("faithful", &StateClass::faithful)
        .def_readonly("minimal", &StateClass::minimal)
        .def_readonly("u_minimal", &StateClass::u_minimal)
        .def_readonly("quasi_faithful", &StateClass::quasi_faithful)
        .def("__repr__", [](const StateClass& c) { return json_repr(c); });

    m.def("is_faithful", &is_faithful, py::arg("g"), py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);
    m.def("is_minimal", &is_minimal, py::arg("g"), py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);
    m.def("minimality_witness", &minimality_witness, py::arg("g"), py::arg("p"),
          py::arg("tol") = kCiTolerance, py::arg("cap") = kDefaultCap);
    m.def("is_u_minimal", &is_u_minimal, py::arg("g"), py::arg("p"),
          py::arg("tol") = kCiTolerance, py::arg("cap") = kDefaultCap);
    m.def("is_quasi_faithful", &is_quasi_faithful, py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);
    m.def("minimal_class_ids", &minimal_class_ids, py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);
    m.def("classify", &classify, py::arg("g"), py::arg("p"), py::arg("tol") = kCiTolerance,
          py::arg("cap") = kDefaultCap);

    py::class_<Fixture>(m, "Fixture")
        .def_readonly("name", &Fixture::name)
        .def_readonly("description", &Fixture::description)
        .def_readonly("state", &Fixture::state)
        .def_readonly("net", &Fixture::net);
    m.def(
        "fixture_library", [] { return fixture_library(); },
        py::return_value_policy::copy);
    m.def(
        "fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));

    py::class_<Sample>(m, "Sample")
        .def_readonly("vars", &Sample::vars)
        .def_readonly("cells", &Sample::cells)
        .def("__len__", &Sample::size)
        .def("row", &Sample::row, py::arg("i"));

    m.def("draw", &draw, py::arg("p"), py::arg("n"), py::arg("seed"));
    m.def("empirical", &empirical, py::arg("sample"));
    m.def("write_csv", py::overload_cast<const Sample&, const std::string&>(&write_csv),
          py::arg("sample"), py::arg("path"));
    m.def(
        "read_csv",
        [](const std::string& path, std::optional<std::vector<int>> cards) {
            return cards ? read_csv(path, &*cards) : read_csv(path);
        },
        py::arg("path"), py::arg("cards") = std::nullopt);

    py::class_<CiVerdict>(m, "CiVerdict")
        .def_readonly("statement", &CiVerdict::statement)
        .def_readonly("accepted", &CiVerdict::accepted)
        .def_readonly("statistic", &CiVerdict::statistic)
        .def_readonly("threshold", &CiVerdict::threshold)
        .def_readonly("n", &CiVerdict::n)
        .def("__repr__", [](const CiVerdict& v) { return json_repr(v); });

    py::class_<SuperTestOutput>(m, "SuperTestOutput")
        .def_readonly("s", &SuperTestOutput::s)
        .def_readonly("verdicts", &SuperTestOutput::verdicts);

    m.def("l1_stat", &l1_stat, py::arg("p"), py::arg("s"));
    m.def("ci_threshold", &ci_threshold, py::arg("n"), py::arg("constant") = 1.0);
    m.def("ci_test", &ci_test, py::arg("sample"), py::arg("s"), py::arg("constant") = 1.0);
    m.def("super_test", &super_test, py::arg("sample"), py::arg("universe"),
          py::arg("constant") = 1.0);
    m.def(
        "lipschitz_gap",
        [](const JointTable& p, const JointTable& q, const CiStatement& s) {
            const auto r = lipschitz_gap(p, q, s);
            return std::make_pair(r.gap, r.bound);
        },
        py::arg("p"), py::arg("q"), py::arg("s"));
    m.def("hoeffding_envelope", &hoeffding_envelope, py::arg("n"), py::arg("epsilon"),
          py::arg("cells"));

    py::class_<HypothesisOrder>(m, "HypothesisOrder")
        .def_readonly("k", &HypothesisOrder::k)
        .def_readonly("sequence", &HypothesisOrder::sequence)
        .def("validate", &HypothesisOrder::validate);

    m.def("default_order", &default_order, py::arg("k"), py::arg("cap") = kDefaultCap);
    m.def("order_preferring", &order_preferring, py::arg("k"), py::arg("preferred_class_id"),
          py::arg("cap") = kDefaultCap);
    m.def("select_f", &select_f, py::arg("order"), py::arg("s"),
          py::return_value_policy::copy);

    py::class_<Learner>(m, "Learner")
        .def_readonly("order", &Learner::order)
        .def_readwrite("threshold_constant", &Learner::threshold_constant);
    m.def("make_learner", py::overload_cast<int, int>(&make_learner), py::arg("k"),
          py::arg("cap") = kDefaultCap);
    m.def("make_learner_with_order", py::overload_cast<HypothesisOrder>(&make_learner),
          py::arg("order"));
    m.def("learn", py::overload_cast<const Learner&, const Sample&>(&learn), py::arg("learner"),
          py::arg("sample"));

    py::class_<PatchedLearner>(m, "PatchedLearner")
        .def(py::init([](Learner base, Hypothesis target, StatementSet target_iset) {
                 return PatchedLearner{std::move(base), std::move(target),
                                       std::move(target_iset)};
             }),
             py::arg("base"), py::arg("target"), py::arg("target_iset"))
        .def_readonly("target", &PatchedLearner::target);
    m.def("learn_patched", py::overload_cast<const PatchedLearner&, const Sample&>(&learn),
          py::arg("learner"), py::arg("sample"));

    py::class_<TrialPlan>(m, "TrialPlan")
        .def(py::init([](std::vector<std::size_t> n_grid, int trials_per_n,
                         std::uint64_t base_seed, int jobs) {
                 return TrialPlan{std::move(n_grid), trials_per_n, base_seed, jobs};
             }),
             py::arg("n_grid"), py::arg("trials_per_n"), py::arg("base_seed"),
             py::arg("jobs") = 1)
        .def_readwrite("n_grid", &TrialPlan::n_grid)
        .def_readwrite("trials_per_n", &TrialPlan::trials_per_n)
        .def_readwrite("base_seed", &TrialPlan::base_seed)
        .def_readwrite("jobs", &TrialPlan::jobs);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("n", &CurvePoint::n)
        .def_readonly("trials", &CurvePoint::trials)
        .def_readonly("successes", &CurvePoint::successes)
        .def_readonly("rate", &CurvePoint::rate)
        .def_readonly("lo", &CurvePoint::lo)
        .def_readonly("hi", &CurvePoint::hi);

    py::class_<ConvergenceCurve>(m, "ConvergenceCurve")
        .def_readonly("target_class_id", &ConvergenceCurve::target_class_id)
        .def_readonly("points", &ConvergenceCurve::points)
        .def("terminal_rate", &ConvergenceCurve::terminal_rate)
        .def("__repr__", [](const ConvergenceCurve& c) { return json_repr(c); });

    m.def("run_convergence", &run_convergence, py::arg("state"), py::arg("learner"),
          py::arg("plan"));
    m.def("success_curve", &success_curve, py::arg("p"), py::arg("target"), py::arg("learner"),
          py::arg("plan"));
    m.def("sacrifice_replay", &sacrifice_replay, py::arg("s0"), py::arg("learner"), py::arg("n"),
          py::arg("trials"), py::arg("seed"));
    m.def("verify_classification_behavior", &verify_classification_behavior, py::arg("states"),
          py::arg("plan"), py::arg("threshold_constant") = 1.0);
    m.def("uniformity_probe", &uniformity_probe, py::arg("center"), py::arg("net"),
          py::arg("epsilon"), py::arg("probes"), py::arg("plan"),
          py::arg("threshold_constant") = 1.0);
    m.def("quasi_faithful_suite", &quasi_faithful_suite, py::arg("states"), py::arg("plan"),
          py::arg("threshold_constant") = 1.0);
    m.def("acceptance_trace", &acceptance_trace, py::arg("state"), py::arg("learner"),
          py::arg("n"), py::arg("trials"), py::arg("seed"));

    // structured reports come back as JSON strings; json.loads gives dicts
    m.def("behavior_report_json",
          [](const BehaviorReport& r) { return dump_report(to_json(r)); });
    m.def("uniformity_report_json",
          [](const UniformityReport& r) { return dump_report(to_json(r)); });
    m.def("replay_report_json", [](const ReplayReport& r) { return dump_report(to_json(r)); });
    m.def("quasi_report_json", [](const QuasiReport& r) { return dump_report(to_json(r)); });
    m.def("trace_report_json", [](const TraceReport& r) { return dump_report(to_json(r)); });
    m.def("curve_csv", &curve_csv, py::arg("curve"));

    py::class_<BehaviorReport>(m, "BehaviorReport")
        .def_readonly("all_consistent", &BehaviorReport::all_consistent);
    py::class_<UniformityReport>(m, "UniformityReport")
        .def_readonly("verdict", &UniformityReport::verdict)
        .def_readonly("epsilon", &UniformityReport::epsilon)
        .def_readonly("probe_tv", &UniformityReport::probe_tv);
    py::class_<ReplayReport>(m, "ReplayReport")
        .def_readonly("succeeded", &ReplayReport::succeeded)
        .def_readonly("outputs_identical", &ReplayReport::outputs_identical)
        .def_readonly("s2_truth_rate", &ReplayReport::s2_truth_rate)
        .def_readonly("s3_truth_rate", &ReplayReport::s3_truth_rate);
    py::class_<QuasiReport>(m, "QuasiReport")
        .def_readonly("all_consistent", &QuasiReport::all_consistent)
        .def_readonly("empty_suite", &QuasiReport::empty_suite);
    py::class_<TraceReport>(m, "TraceReport")
        .def_readonly("relation_rate", &TraceReport::relation_rate)
        .def_readonly("exact_iset_rate", &TraceReport::exact_iset_rate)
        .def_readonly("output_mode_class_id", &TraceReport::output_mode_class_id);
}
