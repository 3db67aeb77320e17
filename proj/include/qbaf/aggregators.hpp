#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qbaf {

// closed interval; hi may be +infinity for unbounded aggregators
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool contains(double v) const { return v >= lo && v <= hi; }
};

// n-ary aggregation operator applied to the degrees of all attackers (or all
// supporters) of an argument
struct Aggregator {
    std::string name;
    std::function<double(const std::vector<double>&)> eval;
    Interval codomain{0.0, 1.0};
    double empty_value = 0.0;
    // ordered aggregators consume a ranked sequence, not a multiset; callers
    // must assert that their input order is meaningful (see aggregate())
    bool ordered = false;
};

// ternary operator turning (aggregated attack x, aggregated support y,
// intrinsic weight z) into a final acceptability degree
struct Combiner {
    std::string name;
    std::function<double(double, double, double)> eval;
};

// every named aggregator; the first ten are the classical means, t-norms and
// t-conorms returned by classical_aggregators()
const std::vector<Aggregator>& catalog();

// the ten classical operators (arithmetic/geometric mean, min, max, product
// t-norm / algebraic-sum t-conorm, Lukasiewicz pair, drastic pair); this is
// the family the postulate matrix and the semantics sweep are built from
std::vector<Aggregator> classical_aggregators();

// throws std::invalid_argument when no catalog entry has that name
const Aggregator& find_aggregator(const std::string& name);

// applies an aggregator to a list of values.  empty input yields the
// aggregator's empty_value; any value outside [0,1] raises std::domain_error;
// an ordered aggregator given more than one value raises std::domain_error
// unless the caller passes ordered_input = true, because a plain multiset has
// no rank to weight by.  symmetric_sum raises std::domain_error on the
// singular pair {0,1} where its denominator vanishes.
double aggregate(const Aggregator& agg, const std::vector<double>& values,
                 bool ordered_input = false);

// adapts a [0,1]-valued aggregator g into the combiner
// (x, y, z) -> g({1 - x, y, z}); throws std::invalid_argument when the
// codomain is not [0,1]
Combiner final_from(const Aggregator& agg);

// closed-form combiners of the three gradual semantics from the literature.
// dfquad expects x and y on the complement-product scale (products of
// 1 - degree, empty product 1); ebs and qe expect plain degree sums.
const std::vector<Combiner>& literature_combiners();

// further closed-form combiners exercised by the worked examples and the
// principle scans
const std::vector<Combiner>& example_combiners();

// resolves a combiner by name: literature and example combiners first, then
// catalog aggregator names through final_from.  throws std::invalid_argument
// when nothing matches or the aggregator cannot be adapted.
Combiner find_combiner(const std::string& name);

}  // namespace qbaf
