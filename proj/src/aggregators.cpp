#include "qbaf/aggregators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbaf/numeric.hpp"

namespace qbaf {

namespace {

// left-fold of a binary operator; genuinely binary definitions (Lukasiewicz,
// drastic, symmetric sum) extend to n arguments this way
template <typename F>
double fold(const std::vector<double>& values, F op) {
    double acc = values.front();
    for (std::size_t i = 1; i < values.size(); ++i) acc = op(acc, values[i]);
    return acc;
}

double product(const std::vector<double>& values) {
    double acc = 1.0;
    for (double v : values) acc *= v;
    return acc;
}

// rank weights fall off by a factor of ten towards the middle of the
// sequence, symmetrically from both ends, then normalise to sum one
std::vector<double> owa_weights(std::size_t n) {
    std::vector<double> alpha(n);
    for (std::size_t i = 1; i <= n; ++i)
        alpha[i - 1] = std::pow(0.1, static_cast<double>(std::min(i, n + 1 - i)));
    double total = stable_sum(alpha);
    for (double& a : alpha) a /= total;
    return alpha;
}

std::vector<Aggregator> build_catalog() {
    std::vector<Aggregator> cat;

    cat.push_back({"avg_am",
                   [](const std::vector<double>& v) {
                       return stable_sum(v) / static_cast<double>(v.size());
                   }});
    cat.push_back({"avg_gm",
                   [](const std::vector<double>& v) {
                       return std::pow(product(v), 1.0 / static_cast<double>(v.size()));
                   }});
    cat.push_back({"min",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) { return std::min(a, b); });
                   }});
    cat.push_back({"max",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) { return std::max(a, b); });
                   }});
    cat.push_back({"tnorm_product", product});
    cat.push_back({"tconorm_algebraic",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) { return a + b - a * b; });
                   }});
    cat.push_back({"tnorm_lukasiewicz",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) { return std::max(0.0, a + b - 1.0); });
                   }});
    cat.push_back({"tconorm_bounded_sum",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) { return std::min(1.0, a + b); });
                   }});
    cat.push_back({"tnorm_drastic",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) {
                           if (a == 1.0) return b;
                           if (b == 1.0) return a;
                           return 0.0;
                       });
                   }});
    cat.push_back({"tconorm_drastic",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) {
                           if (a == 0.0) return b;
                           if (b == 0.0) return a;
                           return 1.0;
                       });
                   }});

    cat.push_back({"sum", stable_sum});
    cat.back().codomain = {0.0, std::numeric_limits<double>::infinity()};

    cat.push_back({"symmetric_sum",
                   [](const std::vector<double>& v) {
                       return fold(v, [](double a, double b) {
                           double den = 1.0 - a - b + 2.0 * a * b;
                           if (den == 0.0)
                               throw std::domain_error(
                                   "symmetric_sum is undefined on the pair {" +
                                   format_double(a) + "," + format_double(b) + "}");
                           return a * b / den;
                       });
                   }});

    cat.push_back({"ordered_weighted_avg",
                   [](const std::vector<double>& v) {
                       std::vector<double> w = owa_weights(v.size());
                       std::vector<double> terms(v.size());
                       for (std::size_t i = 0; i < v.size(); ++i) terms[i] = w[i] * v[i];
                       return stable_sum(terms);
                   }});
    cat.back().ordered = true;

    return cat;
}

}  // namespace

const std::vector<Aggregator>& catalog() {
    static const std::vector<Aggregator> cat = build_catalog();
    return cat;
}

std::vector<Aggregator> classical_aggregators() {
    const auto& cat = catalog();
    return {cat.begin(), cat.begin() + 10};
}

const Aggregator& find_aggregator(const std::string& name) {
    for (const auto& agg : catalog())
        if (agg.name == name) return agg;
    throw std::invalid_argument("unknown aggregator '" + name + "'");
}

double aggregate(const Aggregator& agg, const std::vector<double>& values,
                 bool ordered_input) {
    for (double v : values)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error("value " + format_double(v) +
                                    " outside [0,1] for aggregator '" + agg.name + "'");
    if (values.empty()) return agg.empty_value;
    if (agg.ordered && !ordered_input && values.size() > 1)
        throw std::domain_error("ordered aggregator '" + agg.name +
                                "' needs an ordered sequence, not a multiset");
    return agg.eval(values);
}

Combiner final_from(const Aggregator& agg) {
    if (agg.codomain.lo != 0.0 || agg.codomain.hi != 1.0)
        throw std::invalid_argument("combiner adaptation needs a [0,1]-valued aggregator; '" +
                                    agg.name + "' has a different codomain");
    Aggregator copy = agg;
    return {agg.name, [copy](double x, double y, double z) {
                return aggregate(copy, {1.0 - x, y, z}, true);
            }};
}

const std::vector<Combiner>& literature_combiners() {
    static const std::vector<Combiner> combs = {
        // x and y arrive as products of (1 - degree); an empty relation
        // contributes the empty product 1
        {"dfquad",
         [](double x, double y, double z) {
             double lift = y - x;
             return z - z * std::max(0.0, lift) + (1.0 - z) * std::max(0.0, -lift);
         }},
        // x and y arrive as plain degree sums
        {"ebs",
         [](double x, double y, double z) {
             return 1.0 - (1.0 - z * z) / (1.0 + z * std::exp(y - x));
         }},
        {"qe",
         [](double x, double y, double z) {
             double s = y - x;
             double en = std::max(0.0, -s);
             double ep = std::max(0.0, s);
             return z * (1.0 - en * en / (1.0 + en * en)) +
                    (1.0 - z) * ep * ep / (1.0 + ep * ep);
         }},
    };
    return combs;
}

const std::vector<Combiner>& example_combiners() {
    static const std::vector<Combiner> combs = {
        {"example3",
         [](double x, double y, double z) {
             return ((1.0 - x + y) / 2.0 + z) / 2.0;
         }},
        {"fig8",
         [](double x, double y, double z) {
             return std::min(1.0, (1.0 + y) * std::max(0.0, z - x));
         }},
        // saturates support once the aggregated attack crosses one half
        {"saturation",
         [](double x, double y, double z) {
             if (x < 0.5) return std::min(1.0, y + z);
             return std::max(0.0, (-x + y + z) / 3.0);
         }},
        {"min3",
         [](double x, double y, double z) { return std::min({1.0 - x, y, z}); }},
        {"max3",
         [](double x, double y, double z) { return std::max({1.0 - x, y, z}); }},
        // jumps to the optimistic branch on weak attack and strong support,
        // to the pessimistic one in the opposite corner, averages in between
        {"hybrid_minmax",
         [](double x, double y, double z) {
             if (x < 0.2 && y > 0.8 && z > 0.8) return std::max({1.0 - x, y, z});
             if (x > 0.8 && y < 0.2 && z < 0.2) return std::min({1.0 - x, y, z});
             return (1.0 - x + y + z) / 3.0;
         }},
    };
    return combs;
}

Combiner find_combiner(const std::string& name) {
    for (const auto& c : literature_combiners())
        if (c.name == name) return c;
    for (const auto& c : example_combiners())
        if (c.name == name) return c;
    for (const auto& agg : catalog())
        if (agg.name == name) return final_from(agg);
    throw std::invalid_argument("unknown combiner '" + name + "'");
}

}  // namespace qbaf
