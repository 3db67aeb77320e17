#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbaf/engine.hpp"
#include "qbaf/graph.hpp"

namespace qbaf {

// the twelve argumentation principles, plus the strict variants of monotony,
// reinforcement and the equal-pressure principle
enum class Principle {
    A1,   // anonymity: invariance under isomorphism
    A2,   // independence: disjoint union leaves degrees unchanged
    A3,   // directionality: degrees depend only on ancestors
    A4,   // equivalence: same weight and parent degree multisets, same degree
    A5,   // stability: parentless arguments keep their weight
    A6,   // neutrality: zero-degree parents have no impact
    A7,   // monotony: more attackers / fewer supporters never help
    A8,   // reinforcement: weaker attacker and stronger supporter never hurt
    A9,   // resilience: interior weights yield interior degrees
    A10,  // equal-degree attacker and supporter never help (Franklin)
    A11,  // weakening: dominated support pushes the degree below the weight
    A12,  // strengthening: dominated attack pushes the degree above the weight
    A7_strict,
    A8_strict,
    A10_strict,  // equal-degree attacker and supporter exactly cancel
};

const std::vector<Principle>& all_principles();
std::string to_string(Principle p);
std::string principle_description(Principle p);
// accepts "A1".."A12", "A7_strict", "A8_strict", "A10_strict"
Principle principle_from_string(const std::string& name);

struct GeneratorConfig {
    unsigned long long seed = 1;
    int trials = 200;        // random base graphs per principle check
    int max_args = 8;
    int max_edges = 16;
    double weight_grid = 0.1;  // weights are drawn from this grid, 0 and 1 included
};

// a principle check can only falsify by sampling, never prove; a verdict
// therefore reads "violated" or "no counterexample found"
struct PrincipleVerdict {
    Principle principle = Principle::A1;
    bool violated = false;
    long long trials_run = 0;  // base graphs generated
    long long instances = 0;   // premise-satisfying conclusions actually tested
    // violated verdicts carry one or two graphs plus the arguments
    // instantiating the premise, enough to replay the violation
    std::vector<Qbaf> witness_graphs;
    std::vector<ArgumentId> witness_arguments;
    std::vector<double> witness_tuple;  // used by the direct combiner scan
    std::string note;
};

// deterministic random acyclic QBAF: edges run from earlier to later
// arguments of a hidden permutation, each independently attack or support
Qbaf generate_random_acqbaf(const GeneratorConfig& cfg);

// constructs premise-satisfying instances on random graphs and tests the
// conclusion; premises involving degree equalities are engineered exactly
// (cloned leaves), never discovered by floating-point search.  aggregator
// domain errors skip the affected trial.
PrincipleVerdict check_principle(const Semantics& s, Principle p,
                                 const GeneratorConfig& cfg = {});

// per-argument premise/conclusion scan of a fixed graph; supports the
// argument-local principles A5, A9, A11 and A12
struct InstanceReport {
    ArgumentId argument;
    bool premise = false;
    bool conclusion = false;  // meaningful when the premise holds
};
std::vector<InstanceReport> scan_graph(const Semantics& s, const Qbaf& g, Principle p);

// scans the combiner directly on a value grid with interior weights; a
// violation witness is the offending (x, y, z) triple
PrincipleVerdict resilience_scan(const Semantics& s, double grid_step = 0.05);

// re-evaluates the witness carried by a violated verdict and confirms the
// conclusion still fails; true for verdicts without a counterexample
bool witness_reproduces(const Semantics& s, const PrincipleVerdict& v);

// hypothesis probes used to decide which semantics a proposition speaks
// about; all are sampled on value grids with tolerance 1e-9
bool zero_neutral(const Aggregator& agg);
bool monotone_aggregator(const Aggregator& agg, bool strict);
bool combiner_orientation_ok(const Combiner& comb, bool strict);  // falls in x, rises in y
bool stability_compatible(const Combiner& comb);                  // f(0,0,z) = z

// checks one of the five implication propositions (2..6) over a sample of
// semantics: every semantics satisfying the hypotheses must pass the implied
// principle checks; the rest are reported as skipped
struct PropositionReport {
    int proposition = 2;
    std::vector<std::string> checked;  // labels of semantics under the hypotheses
    std::vector<std::string> skipped;  // labels filtered out by the hypotheses
    bool all_hold = true;
    std::vector<PrincipleVerdict> failures;
};
PropositionReport verify_proposition(int n, const std::vector<Semantics>& sems,
                                     const GeneratorConfig& cfg = {});

std::string to_json(const PrincipleVerdict& v);
std::string to_json(const PropositionReport& r);

}  // namespace qbaf
