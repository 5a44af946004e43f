// Command-line front end: enumeration, classification, independence testing,
// learning and seeded experiment runs. All computation lives in the library;
// this file only parses, dispatches and serializes.
//
// Exit codes: 0 success, 1 verdict/run failure, 2 usage or config error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "minlab/experiments.hpp"
#include "minlab/serialize.hpp"

namespace fs = std::filesystem;
using namespace minlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;

int effective_cap() {
    if (const char* env = std::getenv("MINLAB_CAP")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring malformed MINLAB_CAP='" << env << "'\n";
    }
    return kDefaultCap;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
}

// state sources: a named fixture, or a JSON file carrying either a network
// ({"dag","cards","cpts"}) or an explicit pair ({"dag","table"})
struct StateSource {
    std::string fixture_name;
    std::string network_path;

    CausalState load(std::optional<CptNetwork>* net_out = nullptr) const {
        if (!fixture_name.empty()) {
            const Fixture& f = fixture(fixture_name);
            if (net_out) *net_out = f.net;
            return f.state;
        }
        const Json j = load_json(network_path);
        if (j.contains("cpts")) {
            CptNetwork net = network_from_json(j);
            if (net_out) *net_out = net;
            return CausalState{net.g, joint_of(net)};
        }
        if (j.contains("table"))
            return CausalState{dag_from_json(j.at("dag")), joint_from_json(j.at("table"))};
        throw std::runtime_error(network_path + ": expected a network (cpts) or a dag+table pair");
    }
};

std::vector<int> parse_indices(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

// grammar: u-indices '|' v-indices ['||' w-indices], comma separated
CiStatement parse_statement(const std::string& text) {
    const auto wpos = text.find("||");
    const std::string left = wpos == std::string::npos ? text : text.substr(0, wpos);
    const std::string w = wpos == std::string::npos ? "" : text.substr(wpos + 2);
    const auto vpos = left.find('|');
    if (vpos == std::string::npos)
        throw std::runtime_error("statement must look like \"0|1\" or \"0|1||2\": " + text);
    return CiStatement::of(parse_indices(left.substr(0, vpos)),
                           parse_indices(left.substr(vpos + 1)), parse_indices(w));
}

Sample load_sample(const std::string& path, const std::vector<int>& cards) {
    if (cards.empty()) return read_csv(path);
    return read_csv(path, &cards);
}

HypothesisOrder order_from_spec(int k, const std::string& spec, int cap) {
    if (spec.empty() || spec == "default") return default_order(k, cap);
    if (spec.rfind("prefer:", 0) == 0) return order_preferring(k, std::stoi(spec.substr(7)), cap);
    throw std::runtime_error("order must be \"default\" or \"prefer:<class-id>\": " + spec);
}

int cmd_enumerate(int k, const std::string& out_path, int cap) {
    const auto& cat = dag_catalog(k, cap);
    std::cout << cat.dags.size() << (cat.dags.size() == 1 ? " DAG, " : " DAGs, ")
              << cat.classes.size() << (cat.classes.size() == 1 ? " class\n" : " classes\n");
    if (!out_path.empty()) {
        Json dags = Json::array();
        for (const auto& g : cat.dags) dags.push_back(to_json(g));
        Json classes = Json::array();
        for (const auto& h : cat.classes) classes.push_back(to_json(h));
        write_file(out_path, dump_report(Json{{"k", k}, {"dags", dags}, {"classes", classes}}));
    }
    return kExitOk;
}

int cmd_classify(const StateSource& source, const std::string& out_path) {
    const CausalState state = source.load();
    const StateClass cls = classify(state.g, state.p);
    Json j = to_json(cls);
    if (cls.markov && !cls.minimal) {
        const auto witness = minimality_witness(state.g, state.p);
        if (witness) j["minimality_witness"] = to_json(*witness);
    }
    std::cout << dump_report(j);
    if (!out_path.empty()) write_file(out_path, dump_report(j));
    return kExitOk;
}

int cmd_ci_test(const std::string& data, const std::vector<int>& cards,
                const std::vector<std::string>& statements, double constant,
                const std::string& out_path) {
    const Sample sample = load_sample(data, cards);
    std::vector<CiStatement> wanted;
    if (statements.empty()) {
        wanted = statement_universe(sample.vars.size());
    } else {
        for (const auto& text : statements) wanted.push_back(parse_statement(text));
    }
    const SuperTestOutput out = super_test(sample, wanted, constant);
    for (const auto& v : out.verdicts)
        std::cout << (v.accepted ? "accept " : "reject ") << v.statement.str()
                  << "  statistic=" << v.statistic << " threshold=" << v.threshold << "\n";
    Json verdicts = Json::array();
    for (const auto& v : out.verdicts) verdicts.push_back(to_json(v));
    if (!out_path.empty()) write_file(out_path, dump_report(verdicts));
    return kExitOk;
}

int cmd_learn(const std::string& data, const std::vector<int>& cards, std::string order_spec,
              double constant, const std::string& config_path, const std::string& out_path,
              int cap) {
    const Sample sample = load_sample(data, cards);
    if (!config_path.empty()) {
        // learner config: {"k": ..., "order": "default"|"prefer:<id>",
        // "threshold_constant": ...}; explicit flags win
        const Json cfg = load_json(config_path);
        if (cfg.contains("k") && cfg.at("k").get<int>() != sample.vars.size())
            throw std::runtime_error("learner config k does not match the sample");
        if (order_spec == "default") order_spec = cfg.value("order", order_spec);
        if (constant == 1.0) constant = cfg.value("threshold_constant", constant);
    }
    Learner l = make_learner(order_from_spec(sample.vars.size(), order_spec, cap));
    l.threshold_constant = constant;
    const Hypothesis h = learn(l, sample);
    const Json j = to_json(h);
    std::cout << "class " << h.id << " with " << h.iset.size() << " entailed statements, "
              << h.members.size() << " member DAGs\n";
    if (!out_path.empty()) write_file(out_path, dump_report(j));
    return kExitOk;
}

int cmd_sample(const StateSource& source, std::size_t n, std::uint64_t seed,
               const std::string& out_path) {
    const CausalState state = source.load();
    const Sample s = draw(state.p, n, seed);
    if (out_path.empty()) {
        write_csv(s, std::cout);
    } else {
        write_csv(s, out_path);
        std::cout << "wrote " << n << " rows to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_fixtures() {
    for (const auto& f : fixture_library()) {
        const StateClass c = classify(f.state.g, f.state.p);
        std::cout << f.name << ": " << f.description << " [markov=" << c.markov
                  << " faithful=" << c.faithful << " minimal=" << c.minimal
                  << " u_minimal=" << c.u_minimal << " quasi_faithful=" << c.quasi_faithful
                  << "]\n";
    }
    return kExitOk;
}

struct RunConfig {
    std::string type;
    std::uint64_t seed = 0;
    int jobs = 1;
    double threshold_constant = 1.0;
    std::string order = "default";
    Json raw;
};

RunConfig parse_run_config(const Json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw std::runtime_error("config schema violation: expected \"schema\": 1");
    if (!j.contains("type")) throw std::runtime_error("config schema violation: missing \"type\"");
    if (!j.contains("seed")) throw std::runtime_error("config schema violation: missing \"seed\"");
    RunConfig cfg;
    cfg.type = j.at("type").get<std::string>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.jobs = j.value("jobs", 1);
    cfg.threshold_constant = j.value("threshold_constant", 1.0);
    cfg.order = j.value("order", std::string("default"));
    cfg.raw = j;
    return cfg;
}

TrialPlan plan_from_config(const RunConfig& cfg, int jobs) {
    TrialPlan plan;
    plan.n_grid = cfg.raw.value("n_grid", std::vector<std::size_t>{100, 1000, 10000});
    plan.trials_per_n = cfg.raw.value("trials_per_n", 200);
    plan.base_seed = cfg.seed;
    plan.jobs = jobs;
    plan.validate();
    return plan;
}

StateSource source_from_config(const Json& j) {
    StateSource src;
    src.fixture_name = j.value("fixture", std::string{});
    src.network_path = j.value("network", std::string{});
    if (src.fixture_name.empty() && src.network_path.empty())
        throw std::runtime_error("config schema violation: need \"fixture\" or \"network\"");
    return src;
}

std::vector<std::pair<std::string, CausalState>> states_from_config(const Json& j) {
    std::vector<std::pair<std::string, CausalState>> out;
    if (j.contains("fixtures")) {
        for (const auto& name : j.at("fixtures").get<std::vector<std::string>>())
            out.emplace_back(name, fixture(name).state);
    } else {
        for (const auto& f : fixture_library()) out.emplace_back(f.name, f.state);
    }
    return out;
}

int cmd_run(const std::string& config_path, const std::string& out_dir, int jobs_override,
            int cap) {
    const RunConfig cfg = parse_run_config(load_json(config_path));
    const int jobs = jobs_override > 0 ? jobs_override : cfg.jobs;

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    bool pass = true;
    Json report;
    std::vector<std::pair<std::string, ConvergenceCurve>> curves;

    if (cfg.type == "convergence") {
        const CausalState state = source_from_config(cfg.raw).load();
        Learner l = make_learner(order_from_spec(state.g.node_count(), cfg.order, cap));
        l.threshold_constant = cfg.threshold_constant;
        const auto curve = run_convergence(state, l, plan_from_config(cfg, jobs));
        report = Json{{"config", cfg.raw}, {"curve", to_json(curve)}};
        curves.emplace_back("state", curve);
    } else if (cfg.type == "classification") {
        const auto behavior = verify_classification_behavior(
            states_from_config(cfg.raw), plan_from_config(cfg, jobs), cfg.threshold_constant);
        pass = behavior.all_consistent;
        report = Json{{"config", cfg.raw}, {"report", to_json(behavior)}};
        for (const auto& e : behavior.entries) curves.emplace_back(e.label, e.curve);
    } else if (cfg.type == "uniformity") {
        std::optional<CptNetwork> net;
        const CausalState state = source_from_config(cfg.raw).load(&net);
        if (!net) throw std::runtime_error("uniformity runs need a CPT network source");
        const auto probe = uniformity_probe(state, *net, cfg.raw.value("epsilon", 0.01),
                                            cfg.raw.value("probes", 20), plan_from_config(cfg, jobs),
                                            cfg.threshold_constant);
        pass = probe.verdict == "no violation found";
        report = Json{{"config", cfg.raw}, {"report", to_json(probe)}};
        curves.emplace_back("center", probe.center_curve);
        for (std::size_t i = 0; i < probe.probe_curves.size(); ++i)
            curves.emplace_back("probe_" + std::to_string(i), probe.probe_curves[i]);
    } else if (cfg.type == "sacrifice_replay") {
        const CausalState state = source_from_config(cfg.raw).load();
        Learner l = make_learner(order_from_spec(state.g.node_count(), cfg.order, cap));
        l.threshold_constant = cfg.threshold_constant;
        const auto replay = sacrifice_replay(state, l, cfg.raw.value("n", std::size_t{10000}),
                                             cfg.raw.value("trials", 200), cfg.seed);
        pass = replay.succeeded;
        report = Json{{"config", cfg.raw}, {"report", to_json(replay)}};
    } else if (cfg.type == "quasi_faithful") {
        const auto quasi = quasi_faithful_suite(states_from_config(cfg.raw),
                                                plan_from_config(cfg, jobs), cfg.threshold_constant);
        pass = quasi.all_consistent;
        report = Json{{"config", cfg.raw}, {"report", to_json(quasi)}};
    } else if (cfg.type == "acceptance_trace") {
        const CausalState state = source_from_config(cfg.raw).load();
        Learner l = make_learner(order_from_spec(state.g.node_count(), cfg.order, cap));
        l.threshold_constant = cfg.threshold_constant;
        const auto trace = acceptance_trace(state, l, cfg.raw.value("n", std::size_t{10000}),
                                            cfg.raw.value("trials", 200), cfg.seed);
        pass = trace.relation_rate == 1.0;
        report = Json{{"config", cfg.raw}, {"report", to_json(trace)}};
    } else {
        throw std::runtime_error("config schema violation: unknown type \"" + cfg.type + "\"");
    }

    write_file(dir / (cfg.type + "_report.json"), dump_report(report));
    if (!curves.empty()) write_file(dir / (cfg.type + "_curves.csv"), curves_csv(curves));
    std::cout << cfg.type << ": " << (pass ? "pass" : "FAIL") << ", report written to "
              << (dir / (cfg.type + "_report.json")).string() << "\n";
    return pass ? kExitOk : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal-structure learning laboratory"};
    app.require_subcommand(1);
    const int cap = effective_cap();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate DAGs and equivalence classes");
    int k = 3;
    std::string out_path;
    enumerate->add_option("--k", k, "variable count")->required()->check(CLI::Range(1, 31));
    enumerate->add_option("--out", out_path, "write the catalog as JSON");

    auto* classify_cmd = app.add_subcommand("classify", "classify a causal state");
    StateSource classify_src;
    std::string classify_out;
    classify_cmd->add_option("--fixture", classify_src.fixture_name, "named fixture");
    classify_cmd->add_option("--network", classify_src.network_path, "network JSON file");
    classify_cmd->add_option("--out", classify_out, "also write the result to a file");

    auto* ci = app.add_subcommand("ci-test", "test conditional-independence statements");
    std::string ci_data;
    std::vector<int> ci_cards;
    std::vector<std::string> ci_statements;
    double ci_constant = 1.0;
    std::string ci_out;
    ci->add_option("--data", ci_data, "sample CSV")->required();
    ci->add_option("--cards", ci_cards, "per-variable cardinalities (else inferred)");
    ci->add_option("--statement", ci_statements,
                   "statement like \"0|1||2\" (u|v||w); default: the whole universe");
    ci->add_option("--constant", ci_constant, "threshold constant");
    ci->add_option("--out", ci_out, "write verdicts JSON");

    auto* learn_cmd = app.add_subcommand("learn", "run the learner on a sample");
    std::string learn_data, learn_order = "default", learn_out, learn_config;
    std::vector<int> learn_cards;
    double learn_constant = 1.0;
    learn_cmd->add_option("--data", learn_data, "sample CSV")->required();
    learn_cmd->add_option("--cards", learn_cards, "per-variable cardinalities (else inferred)");
    learn_cmd->add_option("--order", learn_order, "default or prefer:<class-id>");
    learn_cmd->add_option("--constant", learn_constant, "threshold constant");
    learn_cmd->add_option("--config", learn_config, "learner config JSON (flags win)");
    learn_cmd->add_option("--out", learn_out, "write the selected hypothesis JSON");

    auto* sample_cmd = app.add_subcommand("sample", "draw an IID sample as CSV");
    StateSource sample_src;
    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::string sample_out;
    sample_cmd->add_option("--fixture", sample_src.fixture_name, "named fixture");
    sample_cmd->add_option("--network", sample_src.network_path, "network JSON file");
    sample_cmd->add_option("--n", sample_n, "number of rows")->required();
    sample_cmd->add_option("--seed", sample_seed, "RNG seed")->required();
    sample_cmd->add_option("--out", sample_out, "CSV path (default stdout)");

    auto* run = app.add_subcommand("run", "execute an experiment config");
    std::string run_config, run_out_dir = ".";
    int run_jobs = 0;
    run->add_option("--config", run_config, "experiment config JSON")->required();
    run->add_option("--out-dir", run_out_dir, "directory for report files");
    run->add_option("--jobs", run_jobs, "worker count override");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "list the named fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) {
            check_cap(k, cap);
            return cmd_enumerate(k, out_path, cap);
        }
        if (classify_cmd->parsed()) return cmd_classify(classify_src, classify_out);
        if (ci->parsed()) return cmd_ci_test(ci_data, ci_cards, ci_statements, ci_constant, ci_out);
        if (learn_cmd->parsed())
            return cmd_learn(learn_data, learn_cards, learn_order, learn_constant, learn_config,
                             learn_out, cap);
        if (sample_cmd->parsed()) return cmd_sample(sample_src, sample_n, sample_seed, sample_out);
        if (run->parsed()) return cmd_run(run_config, run_out_dir, run_jobs, cap);
        if (fixtures_cmd->parsed()) return cmd_fixtures();
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // file and schema problems are usage errors
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // violated preconditions surface as run failures
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerdictFailure;
    }
    return kExitUsage;
}
