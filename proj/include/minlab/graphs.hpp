#pragma once

#include <stdexcept>
#include <vector>

#include "minlab/dag.hpp"
#include "minlab/statements.hpp"

namespace minlab {

// Default ceiling on the variable count. 543 DAGs at k=4 is the intended
// desk-scale limit; callers may raise the cap at their own risk.
inline constexpr int kDefaultCap = 4;

struct CapExceededError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void check_cap(int k, int cap);

// Every labeled DAG on k nodes, exactly once, ordered by edge count
// ascending then adjacency code. Deterministic.
std::vector<Dag> enumerate_dags(int k, int cap = kDefaultCap);

// Graphical criterion for entailed conditional independence: U and V are
// separated by W in the moralized ancestral graph of U | V | W.
bool d_separated(const Dag& g, VarMask u, VarMask v, VarMask w);
bool d_separated(const Dag& g, const CiStatement& s);

// All canonical statements over g's variables that g entails.
StatementSet entailment_set(const Dag& g, int cap = kDefaultCap);

bool markov_equivalent(const Dag& g1, const Dag& g2, int cap = kDefaultCap);

// A Markov equivalence class, identified by the entailment set shared by its
// member DAGs. `id` is the index of the class in the canonical class order
// (entailment count descending, then statement-set order).
struct Hypothesis {
    int id = -1;
    StatementSet iset;
    std::vector<Dag> members;
};

// Partition of enumerate_dags(k) by entailment-set equality, in canonical
// class order. Cached per k; the returned reference stays valid.
const std::vector<Hypothesis>& equivalence_classes(int k, int cap = kDefaultCap);

// Members of equivalence_classes(k) re-exposed: all DAGs with their
// entailment sets, in enumeration order. Cached alongside the partition.
struct DagCatalog {
    std::vector<Dag> dags;
    std::vector<StatementSet> isets;        // parallel to dags
    std::vector<int> class_of;              // dag index -> class id
    std::vector<Hypothesis> classes;        // canonical class order
    std::vector<CiStatement> universe;      // statement_universe(k)
};

const DagCatalog& dag_catalog(int k, int cap = kDefaultCap);

}  // namespace minlab
