#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbaf/aggregators.hpp"

namespace qbaf {

// the twelve aggregation postulates checked by sampling and falsification
enum class Postulate {
    P1,   // boundary values: all zeros map to zero, all ones to one
    P2,   // monotony: raising a coordinate never lowers the result
    P3,   // continuity (probed heuristically, never provable by sampling)
    P4,   // symmetry: invariance under permutation of the inputs
    P5,   // idempotence: a constant tuple maps to its value
    P6,   // decomposability: aggregating blockwise then together agrees
    P7,   // bounded above by the minimum input
    P8,   // bounded below by the maximum input
    P9,   // neutral element: some e leaves every multiset unchanged
    P10,  // absorbing element: some e forces every multiset to e
    P11,  // adding a shared value preserves the order of two equal-size tuples
    P12,  // strict order after a shared extension reflects back to the originals
};

const std::vector<Postulate>& all_postulates();
std::string to_string(Postulate p);
std::string postulate_description(Postulate p);
// accepts the names "P1".."P12"; throws std::invalid_argument otherwise
Postulate postulate_from_string(const std::string& name);

enum class PostulateStatus {
    holds_on_sample,  // no counterexample in the sampled space
    heuristic_holds,  // probe-based check passed (continuity only)
    violated,         // witness tuples reproduce the violation
};

std::string to_string(PostulateStatus s);

struct PostulateVerdict {
    Postulate postulate;
    PostulateStatus status = PostulateStatus::holds_on_sample;
    // offending tuples; their layout depends on the postulate, see
    // witness_reproduces() for the exact reading
    std::vector<std::vector<double>> witness;
    // neutral (P9) or absorbing (P10) element when one was found
    std::optional<double> element;
    long long samples_used = 0;
};

struct PostulateConfig {
    unsigned long long seed = 1;
    double grid_step = 0.1;   // coordinate grid for exhaustive small arities
    int max_arity = 5;        // largest tuple length sampled
    int random_tuples = 10000;  // random tuples shared by the larger arities
};

// equality comparisons use an absolute tolerance of 1e-9; aggregator domain
// errors (the symmetric-sum singularity) skip the offending sample
PostulateVerdict check_postulate(const Aggregator& agg, Postulate p,
                                 const PostulateConfig& cfg = {});

std::vector<PostulateVerdict> check_all_postulates(const Aggregator& agg,
                                                   const PostulateConfig& cfg = {});

// re-evaluates a violated verdict's witness against the aggregator; true when
// every witness entry still exhibits the violation.  verdicts that are not
// violations trivially reproduce.
bool witness_reproduces(const Aggregator& agg, const PostulateVerdict& verdict);

// one CSV row per aggregator, one column per postulate; cells are
// "holds", "heuristic" or "violated", with ":e=<value>" appended when a
// neutral or absorbing element was found
std::string postulate_matrix_csv(const std::vector<Aggregator>& aggs,
                                 const PostulateConfig& cfg = {});

}  // namespace qbaf
