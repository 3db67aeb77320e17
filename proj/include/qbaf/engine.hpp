#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbaf/aggregators.hpp"
#include "qbaf/graph.hpp"

namespace qbaf {

// an aggregative semantics: one aggregator over attacker degrees, one over
// supporter degrees, and a combiner folding both with the intrinsic weight
struct Semantics {
    Aggregator attack_agg;
    Aggregator support_agg;
    Combiner combiner;
    std::string label;
};

// resolves the three names through the catalogs; the combiner name may be a
// dedicated combiner or any [0,1]-valued aggregator (adapted via final_from)
Semantics make_semantics(const std::string& attack_agg, const std::string& support_agg,
                         const std::string& combiner);

struct ArgumentScores {
    double degree = 0.0;
    double pi_r = 0.0;  // aggregated attack value fed to the combiner
    double pi_s = 0.0;  // aggregated support value fed to the combiner
};

using DegreeMap = std::map<ArgumentId, ArgumentScores>;

// evaluates every argument in topological order.  arguments without any
// attacker or supporter keep their intrinsic weight as degree (their pi
// values are the empty aggregations).  parent degrees are collected in the
// canonical sorted edge order, or by the explicit edge ranks when present;
// ranked and unranked edges onto the same argument and relation do not mix.
//
// throws std::invalid_argument when the graph fails validation or ranks are
// mixed, CycleError when it has a cycle, and std::domain_error (prefixed with
// the argument id) when an aggregator rejects its input sequence.
DegreeMap evaluate(const Qbaf& g, const Semantics& s);

// the three gradual semantics from the literature, written out directly from
// their closed forms; these double as oracles for their aggregative
// decompositions.  dfquad records pi values as products of (1 - degree),
// ebs and qe record plain degree sums.
DegreeMap evaluate_dfquad(const Qbaf& g);
DegreeMap evaluate_ebs(const Qbaf& g);
DegreeMap evaluate_qe(const Qbaf& g);

// the aggregative decomposition of "dfquad", "ebs" or "qe": the same degrees
// (and pi scales) through the generic evaluate() pipeline
Semantics as_aggregative(const std::string& name);

// CSV with one row per argument: argument,degree,pi_r,pi_s; values use the
// shortest round-trip form, rounded first when round_decimals is given
std::string scores_csv(const DegreeMap& scores,
                       std::optional<int> round_decimals = std::nullopt);

// attackers and supporters whose degree is not exactly zero; the sets the
// strictness-sensitive principle checks quantify over
struct StrongParents {
    std::vector<ArgumentId> attackers;
    std::vector<ArgumentId> supporters;
};

std::map<ArgumentId, StrongParents> strong_sets(const Qbaf& g, const DegreeMap& scores);

}  // namespace qbaf
