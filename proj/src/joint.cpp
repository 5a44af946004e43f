#include "minlab/joint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minlab/rng.hpp"

namespace minlab {

namespace {

void check_mass(const std::vector<double>& probs) {
    double sum = 0.0;
    for (double x : probs) {
        if (!(x >= 0.0)) throw std::invalid_argument("probabilities must be >= 0");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kMassTolerance)
        throw std::invalid_argument("probabilities must sum to 1");
}

std::vector<std::size_t> strides(const std::vector<int>& cards) {
    std::vector<std::size_t> st(cards.size());
    std::size_t s = 1;
    for (std::size_t i = cards.size(); i-- > 0;) {
        st[i] = s;
        s *= static_cast<std::size_t>(cards[i]);
    }
    return st;
}

}  // namespace

JointTable::JointTable(VariableSet v, std::vector<double> pr)
    : vars(std::move(v)), probs(std::move(pr)) {
    if (probs.size() != vars.cell_count())
        throw std::invalid_argument("table length must equal the assignment count");
    check_mass(probs);
}

CptNetwork::CptNetwork(Dag graph, VariableSet v, std::vector<std::vector<double>> tables)
    : g(std::move(graph)), vars(std::move(v)), cpts(std::move(tables)) {
    if (g.node_count() != vars.size())
        throw std::invalid_argument("graph and variable set sizes differ");
    if (cpts.size() != static_cast<std::size_t>(vars.size()))
        throw std::invalid_argument("one CPT required per variable");
    for (int i = 0; i < vars.size(); ++i) {
        std::size_t rows = 1;
        for (int p : mask_indices(g.parent_mask(i)))
            rows *= static_cast<std::size_t>(vars.card(p));
        const auto expected = rows * static_cast<std::size_t>(vars.card(i));
        const auto& cpt = cpts[static_cast<std::size_t>(i)];
        if (cpt.size() != expected) throw std::invalid_argument("CPT shape mismatch");
        for (std::size_t r = 0; r < rows; ++r) {
            double sum = 0.0;
            for (int x = 0; x < vars.card(i); ++x) {
                const double pr = cpt[r * static_cast<std::size_t>(vars.card(i)) +
                                      static_cast<std::size_t>(x)];
                if (!(pr >= 0.0)) throw std::invalid_argument("CPT entries must be >= 0");
                sum += pr;
            }
            if (std::abs(sum - 1.0) > kMassTolerance)
                throw std::invalid_argument("every CPT row must sum to 1");
        }
    }
}

JointTable joint_of(const CptNetwork& net) {
    const auto& cards = net.vars.cards();
    const int k = net.vars.size();
    std::vector<double> probs(net.vars.cell_count());
    std::vector<int> a(static_cast<std::size_t>(k), 0);
    for (std::size_t cell = 0; cell < probs.size(); ++cell) {
        double pr = 1.0;
        for (int i = 0; i < k; ++i) {
            std::size_t row = 0;
            for (int p : mask_indices(net.g.parent_mask(i)))
                row = row * static_cast<std::size_t>(cards[static_cast<std::size_t>(p)]) +
                      static_cast<std::size_t>(a[static_cast<std::size_t>(p)]);
            pr *= net.cpts[static_cast<std::size_t>(i)]
                          [row * static_cast<std::size_t>(cards[static_cast<std::size_t>(i)]) +
                           static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
        }
        probs[cell] = pr;
        for (int i = k - 1; i >= 0; --i) {  // odometer, last variable fastest
            if (++a[static_cast<std::size_t>(i)] < cards[static_cast<std::size_t>(i)]) break;
            a[static_cast<std::size_t>(i)] = 0;
        }
    }
    return JointTable(net.vars, std::move(probs));
}

std::vector<double> marginal(const JointTable& p, VarMask onto) {
    const auto& cards = p.vars.cards();
    const auto st = strides(cards);
    const auto sel = mask_indices(onto);
    std::size_t cells = 1;
    for (int i : sel) cells *= static_cast<std::size_t>(cards[static_cast<std::size_t>(i)]);
    std::vector<double> out(cells, 0.0);
    for (std::size_t f = 0; f < p.probs.size(); ++f) {
        std::size_t sub = 0;
        for (int i : sel) {
            const auto c = static_cast<std::size_t>(cards[static_cast<std::size_t>(i)]);
            sub = sub * c + (f / st[static_cast<std::size_t>(i)]) % c;
        }
        out[sub] += p.probs[f];
    }
    return out;
}

namespace {

// Iterates assignments of a statement's scope, exposing the matching cell
// indices in the W, UW, VW and UVW marginals.
struct FactorizationScan {
    std::vector<int> sel;                 // scope variables, ascending
    std::vector<int> cards;               // their cardinalities
    std::vector<double> muvw, mw, muw, mvw;

    FactorizationScan(const JointTable& p, const CiStatement& s)
        : sel(mask_indices(s.scope())),
          muvw(marginal(p, s.scope())),
          mw(marginal(p, s.w())),
          muw(marginal(p, s.u() | s.w())),
          mvw(marginal(p, s.v() | s.w())) {
        cards.reserve(sel.size());
        for (int i : sel) cards.push_back(p.vars.card(i));
        u_ = s.u();
        v_ = s.v();
        w_ = s.w();
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::vector<int> a(sel.size(), 0);
        const std::size_t total = muvw.size();
        for (std::size_t cell = 0; cell < total; ++cell) {
            std::size_t iw = 0, iuw = 0, ivw = 0;
            for (std::size_t d = 0; d < sel.size(); ++d) {
                const int var = sel[d];
                const auto c = static_cast<std::size_t>(cards[d]);
                const auto val = static_cast<std::size_t>(a[d]);
                if (mask_contains(w_, var)) iw = iw * c + val;
                if (mask_contains(u_ | w_, var)) iuw = iuw * c + val;
                if (mask_contains(v_ | w_, var)) ivw = ivw * c + val;
            }
            fn(muvw[cell], mw[iw], muw[iuw], mvw[ivw]);
            for (std::size_t d = sel.size(); d-- > 0;) {
                if (++a[d] < cards[d]) break;
                a[d] = 0;
            }
        }
    }

private:
    VarMask u_ = 0, v_ = 0, w_ = 0;
};

}  // namespace

bool ci_holds(const JointTable& p, const CiStatement& s, double tol) {
    if ((s.scope() & ~p.vars.full_mask()) != 0)
        throw std::invalid_argument("statement is not over the table's variables");
    bool holds = true;
    FactorizationScan scan(p, s);
    scan.for_each([&](double puvw, double pw, double puw, double pvw) {
        if (pw <= 0.0) return;  // conditioning on a null event, vacuous
        if (std::abs(puvw * pw - puw * pvw) > tol) holds = false;
    });
    return holds;
}

StatementSet independence_set(const JointTable& p, double tol, int cap) {
    check_cap(p.vars.size(), cap);
    std::vector<CiStatement> held;
    for (const auto& s : statement_universe(p.vars.size()))
        if (ci_holds(p, s, tol)) held.push_back(s);
    return StatementSet(std::move(held));
}

double tv_distance(const JointTable& p, const JointTable& q) {
    if (!(p.vars == q.vars)) throw std::invalid_argument("tables must share a variable set");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) sum += std::abs(p.probs[i] - q.probs[i]);
    return 0.5 * sum;
}

JointTable mix(const JointTable& p, const JointTable& q, double lambda) {
    if (!(p.vars == q.vars)) throw std::invalid_argument("tables must share a variable set");
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("lambda must be in [0, 1]");
    std::vector<double> probs(p.probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i)
        probs[i] = (1.0 - lambda) * p.probs[i] + lambda * q.probs[i];
    return JointTable(p.vars, std::move(probs));
}

namespace {
std::vector<double> dirichlet_row(Rng& rng, std::size_t n) {
    std::vector<double> row(n);
    double sum = 0.0;
    for (auto& x : row) {
        x = -std::log1p(-rng.next_unit());  // Exp(1), so the row is Dirichlet(1,..,1)
        sum += x;
    }
    for (auto& x : row) x /= sum;
    return row;
}
}  // namespace

JointTable random_table(const VariableSet& vars, std::uint64_t seed) {
    Rng rng(seed);
    return JointTable(vars, dirichlet_row(rng, vars.cell_count()));
}

CptNetwork random_network(const Dag& g, const VariableSet& vars, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> cpts;
    cpts.reserve(static_cast<std::size_t>(vars.size()));
    for (int i = 0; i < vars.size(); ++i) {
        std::size_t rows = 1;
        for (int p : mask_indices(g.parent_mask(i)))
            rows *= static_cast<std::size_t>(vars.card(p));
        std::vector<double> cpt;
        cpt.reserve(rows * static_cast<std::size_t>(vars.card(i)));
        for (std::size_t r = 0; r < rows; ++r) {
            auto row = dirichlet_row(rng, static_cast<std::size_t>(vars.card(i)));
            cpt.insert(cpt.end(), row.begin(), row.end());
        }
        cpts.push_back(std::move(cpt));
    }
    return CptNetwork(g, vars, std::move(cpts));
}

JointTable perturb(const JointTable& p, double epsilon, std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must be in (0, 1]");
    const JointTable q = random_table(p.vars, seed);
    const double d = tv_distance(p, q);
    if (d == 0.0) return p;
    const double lambda = std::min(1.0, 0.9 * epsilon / d);
    return mix(p, q, lambda);  // tv(p, p') = lambda * d <= 0.9 epsilon < epsilon
}

bool is_markov(const Dag& g, const JointTable& p, double tol, int cap) {
    if (g.node_count() != p.vars.size())
        throw std::invalid_argument("graph and table dimensions differ");
    for (const auto& s : entailment_set(g, cap))
        if (!ci_holds(p, s, tol)) return false;
    return true;
}

}  // namespace minlab
