#include "qbaf/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qbaf/numeric.hpp"

namespace qbaf {

namespace {

void require_valid(const Qbaf& g) {
    ValidationReport report = validate(g);
    if (report.ok()) return;
    std::string msg = "invalid graph;";
    for (const auto& v : report.violations) msg += " " + v;
    throw std::invalid_argument(msg);
}

// parent degrees in evaluation order: canonical (from, to) edge order, or by
// explicit ranks when every edge onto this argument carries one
std::vector<double> parent_degrees(const std::vector<Edge>& edges, const DegreeMap& scores,
                                   const ArgumentId& target, const char* relation,
                                   bool& ranked) {
    std::size_t with_order = 0;
    for (const auto& e : edges)
        if (e.order) ++with_order;
    if (with_order != 0 && with_order != edges.size())
        throw std::invalid_argument("argument '" + target + "': " + relation +
                                    " edges mix ranked and unranked entries");
    ranked = with_order != 0 && !edges.empty();

    std::vector<const Edge*> ordered;
    ordered.reserve(edges.size());
    for (const auto& e : edges) ordered.push_back(&e);
    if (ranked)
        std::stable_sort(ordered.begin(), ordered.end(), [](const Edge* a, const Edge* b) {
            if (*a->order != *b->order) return *a->order < *b->order;
            return a->from < b->from;
        });

    std::vector<double> degs;
    degs.reserve(ordered.size());
    for (const Edge* e : ordered) degs.push_back(scores.at(e->from).degree);
    return degs;
}

double aggregate_for(const Aggregator& agg, const std::vector<double>& degs, bool ranked,
                     const ArgumentId& target) {
    try {
        return aggregate(agg, degs, ranked);
    } catch (const std::domain_error& e) {
        throw std::domain_error("argument '" + target + "': " + e.what());
    }
}

// shared walk for the three closed-form literature semantics; fold_attack and
// fold_support produce the recorded pi values, final maps (pi_r, pi_s, w)
template <typename Fold, typename Final>
DegreeMap evaluate_closed_form(const Qbaf& g, Fold fold_parents, Final final) {
    require_valid(g);
    DegreeMap scores;
    for (const ArgumentId& a : topological_order(g)) {
        const auto& att = g.attack_edges_onto(a);
        const auto& supp = g.support_edges_onto(a);
        ArgumentScores s;
        s.pi_r = fold_parents(att, scores);
        s.pi_s = fold_parents(supp, scores);
        double w = g.weight(a);
        s.degree = (att.empty() && supp.empty()) ? w : final(s.pi_r, s.pi_s, w);
        scores[a] = s;
    }
    return scores;
}

double complement_product_of(const std::vector<Edge>& edges, const DegreeMap& scores) {
    double p = 1.0;
    for (const auto& e : edges) p *= 1.0 - scores.at(e.from).degree;
    return p;
}

double degree_sum_of(const std::vector<Edge>& edges, const DegreeMap& scores) {
    std::vector<double> degs;
    degs.reserve(edges.size());
    for (const auto& e : edges) degs.push_back(scores.at(e.from).degree);
    return stable_sum(degs);
}

}  // namespace

Semantics make_semantics(const std::string& attack_agg, const std::string& support_agg,
                         const std::string& combiner) {
    Semantics s{find_aggregator(attack_agg), find_aggregator(support_agg),
                find_combiner(combiner),
                attack_agg + "/" + support_agg + "/" + combiner};
    return s;
}

DegreeMap evaluate(const Qbaf& g, const Semantics& s) {
    require_valid(g);
    DegreeMap scores;
    for (const ArgumentId& a : topological_order(g)) {
        const auto& att = g.attack_edges_onto(a);
        const auto& supp = g.support_edges_onto(a);
        bool att_ranked = false, supp_ranked = false;
        std::vector<double> att_degs = parent_degrees(att, scores, a, "attack", att_ranked);
        std::vector<double> supp_degs = parent_degrees(supp, scores, a, "support", supp_ranked);

        ArgumentScores out;
        out.pi_r = aggregate_for(s.attack_agg, att_degs, att_ranked, a);
        out.pi_s = aggregate_for(s.support_agg, supp_degs, supp_ranked, a);
        double w = g.weight(a);
        // parentless arguments keep their intrinsic weight untouched
        out.degree = (att.empty() && supp.empty()) ? w : s.combiner.eval(out.pi_r, out.pi_s, w);
        scores[a] = out;
    }
    return scores;
}

DegreeMap evaluate_dfquad(const Qbaf& g) {
    return evaluate_closed_form(g, complement_product_of, [](double x, double y, double w) {
        double s = x - y;  // residual attack minus residual support
        return w - w * std::max(0.0, -s) + (1.0 - w) * std::max(0.0, s);
    });
}

DegreeMap evaluate_ebs(const Qbaf& g) {
    return evaluate_closed_form(g, degree_sum_of, [](double x, double y, double w) {
        return 1.0 - (1.0 - w * w) / (1.0 + w * std::exp(y - x));
    });
}

DegreeMap evaluate_qe(const Qbaf& g) {
    return evaluate_closed_form(g, degree_sum_of, [](double x, double y, double w) {
        double s = y - x;
        double en = std::max(0.0, -s);
        double ep = std::max(0.0, s);
        return w * (1.0 - en * en / (1.0 + en * en)) +
               (1.0 - w) * ep * ep / (1.0 + ep * ep);
    });
}

Semantics as_aggregative(const std::string& name) {
    if (name == "dfquad") {
        Aggregator comp{"complement_product",
                        [](const std::vector<double>& v) {
                            double p = 1.0;
                            for (double x : v) p *= 1.0 - x;
                            return p;
                        }};
        comp.empty_value = 1.0;  // empty product
        return {comp, comp, find_combiner("dfquad"), "dfquad"};
    }
    if (name == "ebs")
        return {find_aggregator("sum"), find_aggregator("sum"), find_combiner("ebs"), "ebs"};
    if (name == "qe")
        return {find_aggregator("sum"), find_aggregator("sum"), find_combiner("qe"), "qe"};
    throw std::invalid_argument("no aggregative form for '" + name + "'");
}

std::string scores_csv(const DegreeMap& scores, std::optional<int> round_decimals) {
    auto show = [&](double v) {
        if (round_decimals) v = round_to(v, *round_decimals);
        return format_double(v);
    };
    std::ostringstream out;
    out << "argument,degree,pi_r,pi_s\n";
    for (const auto& [id, s] : scores)
        out << id << "," << show(s.degree) << "," << show(s.pi_r) << "," << show(s.pi_s)
            << "\n";
    return out.str();
}

std::map<ArgumentId, StrongParents> strong_sets(const Qbaf& g, const DegreeMap& scores) {
    std::map<ArgumentId, StrongParents> out;
    for (const auto& id : g.arguments()) {
        StrongParents sp;
        for (const auto& p : g.attackers(id))
            if (scores.at(p).degree != 0.0) sp.attackers.push_back(p);
        for (const auto& p : g.supporters(id))
            if (scores.at(p).degree != 0.0) sp.supporters.push_back(p);
        out[id] = std::move(sp);
    }
    return out;
}

}  // namespace qbaf
