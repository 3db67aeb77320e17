#include "qbaf/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "qbaf/numeric.hpp"

namespace qbaf {

namespace {

struct IdName {
    ReferenceGraphId id;
    const char* name;
};

constexpr IdName kIdNames[] = {
    {ReferenceGraphId::fig1, "fig1"},
    {ReferenceGraphId::fig2_commutativity, "fig2_commutativity"},
    {ReferenceGraphId::fig3_idempotence, "fig3_idempotence"},
    {ReferenceGraphId::fig4_weak_reinf, "fig4_weak_reinf"},
    {ReferenceGraphId::fig5_continuity_a, "fig5_continuity_a"},
    {ReferenceGraphId::fig5_continuity_b, "fig5_continuity_b"},
    {ReferenceGraphId::fig_composition_before, "fig_composition_before"},
    {ReferenceGraphId::fig_composition_after, "fig_composition_after"},
    {ReferenceGraphId::fig_decomposition_before, "fig_decomposition_before"},
    {ReferenceGraphId::fig_decomposition_after, "fig_decomposition_after"},
    {ReferenceGraphId::fig8_weakening_axiom, "fig8_weakening_axiom"},
    {ReferenceGraphId::fig6_final, "fig6_final"},
};

Qbaf graph_fig1() {
    return Qbaf({{"a", 0.5}, {"b", 0.9}, {"c", 0.2}, {"d", 0.8}, {"e", 0.1}},
                {{"b", "a", {}}, {"e", "a", {}}},
                {{"c", "a", {}}, {"d", "a", {}}});
}

// the four attackers carry explicit enunciation ranks so order-sensitive
// aggregators can consume them
Qbaf graph_fig2() {
    return Qbaf({{"a", 0.5}, {"b", 0.4}, {"c", 0.9}, {"d", 0.9}, {"e", 0.2}},
                {{"b", "a", 1}, {"c", "a", 2}, {"d", "a", 3}, {"e", "a", 4}},
                {});
}

Qbaf graph_fig3() {
    return Qbaf({{"a", 0.5}, {"b", 0.4}, {"c", 0.4}}, {{"b", "a", {}}, {"c", "a", {}}}, {});
}

Qbaf graph_fig4() {
    return Qbaf({{"a", 0.5}, {"b", 0.2}, {"c", 0.9}, {"d", 0.8}, {"e", 0.1}},
                {{"b", "a", {}}, {"c", "a", {}}, {"d", "a", {}}, {"e", "a", {}}},
                {});
}

Qbaf graph_fig5(double weight_e) {
    return Qbaf({{"a", 0.5}, {"b", 0.1}, {"c", 0.6}, {"d", 0.3}, {"e", weight_e}},
                {{"c", "a", {}}, {"d", "a", {}}, {"e", "a", {}}},
                {{"b", "a", {}}});
}

Qbaf graph_composition(bool with_shared_attacker) {
    std::vector<Argument> args{{"a1", 0.5}, {"a2", 0.5}, {"b1", 0.2},
                               {"c1", 0.7}, {"b2", 0.4}, {"c2", 0.3}};
    std::vector<Edge> attacks{
        {"b1", "a1", {}}, {"c1", "a1", {}}, {"b2", "a2", {}}, {"c2", "a2", {}}};
    if (with_shared_attacker) {
        args.push_back({"d", 0.7});
        attacks.push_back({"d", "a1", {}});
        attacks.push_back({"d", "a2", {}});
    }
    return Qbaf(std::move(args), std::move(attacks), {});
}

Qbaf graph_decomposition(bool with_shared_attacker) {
    std::vector<Argument> args{{"a1", 0.5}, {"a2", 0.5}, {"b1", 0.6},
                               {"c1", 0.6}, {"b2", 0.8}, {"c2", 0.2}};
    std::vector<Edge> attacks{
        {"b1", "a1", {}}, {"c1", "a1", {}}, {"b2", "a2", {}}, {"c2", "a2", {}}};
    if (with_shared_attacker) {
        args.push_back({"d", 0.6});
        attacks.push_back({"d", "a1", {}});
        attacks.push_back({"d", "a2", {}});
    }
    return Qbaf(std::move(args), std::move(attacks), {});
}

Qbaf graph_fig8() {
    return Qbaf({{"a", 0.5}, {"b", 0.6}, {"c", 0.9}, {"d", 0.5}, {"e", 0.4}, {"f", 0.3}},
                {{"c", "a", {}}, {"d", "a", {}}, {"f", "a", {}}},
                {{"b", "a", {}}, {"e", "a", {}}});
}

Qbaf graph_fig6() {
    return Qbaf(
        {{"a", 0.5},  {"b", 0.9},  {"c", 0.5},  {"d", 0.1},  {"e", 0.5},  {"f", 0.8},
         {"g", 0.5},  {"h", 0.2},  {"i", 0.5},  {"e1", 0.9}, {"e2", 0.5}, {"e3", 0.1},
         {"e4", 1.0}, {"e5", 0.5}, {"e6", 0.2}, {"e7", 0.0}, {"i1", 1.0}, {"i2", 0.5},
         {"i3", 0.2}, {"i4", 0.0}, {"i5", 0.9}, {"i6", 0.5}, {"i7", 0.1}},
        {{"b", "a", {}}, {"c", "a", {}}, {"d", "a", {}}, {"e", "a", {}}, {"e1", "e", {}},
         {"e2", "e", {}}, {"e3", "e", {}}, {"i1", "i", {}}, {"i2", "i", {}}, {"i3", "i", {}},
         {"i4", "i", {}}},
        {{"f", "a", {}}, {"g", "a", {}}, {"h", "a", {}}, {"i", "a", {}}, {"e4", "e", {}},
         {"e5", "e", {}}, {"e6", "e", {}}, {"e7", "e", {}}, {"i5", "i", {}}, {"i6", "i", {}},
         {"i7", "i", {}}});
}

// the eight sweep aggregators: the classical family minus the two drastic
// operators, in name order
std::vector<std::string> sweep_aggregator_names() {
    std::vector<std::string> names;
    for (const Aggregator& agg : classical_aggregators())
        if (agg.name.find("drastic") == std::string::npos) names.push_back(agg.name);
    std::sort(names.begin(), names.end());
    return names;
}

// dfquad with its pi values kept on the t-conorm scale (1 - product of
// complements) instead of the raw complement products: the combiner flips
// both aggregates back, so the degrees are unchanged while the reported pi
// columns match the results table
Semantics dfquad_on_conorm_scale() {
    Combiner raw = find_combiner("dfquad");
    Semantics s{find_aggregator("tconorm_algebraic"), find_aggregator("tconorm_algebraic"),
                Combiner{"dfquad",
                         [raw](double x, double y, double z) {
                             return raw.eval(1.0 - x, 1.0 - y, z);
                         }},
                "dfquad"};
    return s;
}

SweepRow evaluated_row(const Qbaf& g, const Semantics& sem, std::string phi_r,
                       std::string phi_s, std::string phi_f) {
    DegreeMap scores = evaluate(g, sem);
    SweepRow row;
    row.phi_r = std::move(phi_r);
    row.phi_s = std::move(phi_s);
    row.phi_f = std::move(phi_f);
    row.deg_i = scores.at("i").degree;
    row.deg_e = scores.at("e").degree;
    row.pi_r_a = scores.at("a").pi_r;
    row.pi_s_a = scores.at("a").pi_s;
    row.deg_a = scores.at("a").degree;
    return row;
}

struct RowSpec {
    const char* id;
    const char* phi_r;
    const char* phi_s;
    const char* phi_f;
    std::array<double, 5> expected;  // deg_i, deg_e, pi_r_a, pi_s_a, deg_a
};

constexpr std::array<RowSpec, 15> kRowSpecs{{
    {"S1", "tconorm_algebraic", "tconorm_algebraic", "dfquad", {0.48, 0.52, 0.98, 0.96, 0.49}},
    {"S2", "sum", "sum", "ebs", {0.48, 0.53, 2.03, 1.97, 0.49}},
    {"S3", "sum", "sum", "qe", {0.48, 0.52, 2.02, 1.98, 0.50}},
    {"S4", "avg_am", "avg_am", "avg_am", {0.53, 0.48, 0.49, 0.50, 0.50}},
    {"S5", "avg_am", "avg_am", "tnorm_product", {0.14, 0.11, 0.40, 0.41, 0.12}},
    {"S6", "avg_am", "avg_am", "tconorm_algebraic", {0.89, 0.86, 0.59, 0.60, 0.88}},
    {"S7", "avg_am", "max", "tnorm_product", {0.26, 0.25, 0.48, 0.80, 0.23}},
    {"S8", "tconorm_bounded_sum", "avg_am", "tnorm_product", {0.0, 0.0, 1.0, 0.38, 0.0}},
    {"S9", "avg_am", "max", "tconorm_algebraic", {0.98, 1.0, 0.63, 0.98, 0.99}},
    {"S10", "tconorm_bounded_sum", "avg_am", "tconorm_algebraic", {0.75, 0.71, 1.0, 0.57, 0.78}},
    {"S11", "min", "tconorm_algebraic", "avg_am", {0.82, 0.80, 0.10, 0.99, 0.80}},
    {"S12", "tconorm_algebraic", "min", "avg_am", {0.20, 0.18, 0.96, 0.20, 0.25}},
    {"S13", "tnorm_lukasiewicz", "tnorm_product", "avg_am", {0.52, 0.51, 0.0, 0.04, 0.51}},
    {"S14", "tnorm_lukasiewicz", "tnorm_product", "avg_gm", {0.28, 0.0, 0.0, 0.02, 0.22}},
    {"S15", "max", "tconorm_algebraic", "avg_am", {0.49, 0.53, 0.9, 0.96, 0.52}},
}};

constexpr const char* kCellColumns[5] = {"deg_i", "deg_e", "pi_r_a", "pi_s_a", "deg_a"};

Semantics row_semantics(const RowSpec& spec) {
    std::string f = spec.phi_f;
    if (f == "dfquad") return dfquad_on_conorm_scale();
    if (f == "ebs" || f == "qe") return as_aggregative(f);
    return make_semantics(spec.phi_r, spec.phi_s, f);
}

bool rounded_matches(double computed, double expected) {
    return std::abs(round_to(computed, 2) - expected) <= 0.01 + 1e-12;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// csv-quotes a field that may contain commas or quotes
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ExampleCheck make_check(std::string name, std::string detail, double computed,
                        double expected, int decimals = 2, bool flagged = false) {
    ExampleCheck c;
    c.name = std::move(name);
    c.detail = std::move(detail);
    c.computed = computed;
    c.expected = expected;
    c.decimals = decimals;
    c.matches = std::abs(round_to(computed, decimals) - expected) <= 1e-12;
    c.flagged = flagged;
    return c;
}

// the piecewise aggregators the composition/decomposition examples are built
// around: each switches branch on whether the arithmetic mean exceeds one half
Aggregator avg_above_half_else_min() {
    return {"avg_above_half_else_min", [](const std::vector<double>& v) {
                double mean = stable_sum(v) / static_cast<double>(v.size());
                if (mean > 0.5) return mean;
                return *std::min_element(v.begin(), v.end());
            }};
}

Aggregator max_above_half_else_avg() {
    return {"max_above_half_else_avg", [](const std::vector<double>& v) {
                double mean = stable_sum(v) / static_cast<double>(v.size());
                if (mean > 0.5) return *std::max_element(v.begin(), v.end());
                return mean;
            }};
}

}  // namespace

const std::vector<ReferenceGraphId>& reference_graph_ids() {
    static const std::vector<ReferenceGraphId> ids = [] {
        std::vector<ReferenceGraphId> v;
        for (const IdName& entry : kIdNames) v.push_back(entry.id);
        return v;
    }();
    return ids;
}

std::string to_string(ReferenceGraphId id) {
    for (const IdName& entry : kIdNames)
        if (entry.id == id) return entry.name;
    throw std::invalid_argument("unknown reference graph id");
}

ReferenceGraphId reference_graph_from_string(const std::string& name) {
    for (const IdName& entry : kIdNames)
        if (name == entry.name) return entry.id;
    throw std::invalid_argument("unknown reference graph '" + name + "'");
}

Qbaf reference_graph(ReferenceGraphId id) {
    switch (id) {
        case ReferenceGraphId::fig1: return graph_fig1();
        case ReferenceGraphId::fig2_commutativity: return graph_fig2();
        case ReferenceGraphId::fig3_idempotence: return graph_fig3();
        case ReferenceGraphId::fig4_weak_reinf: return graph_fig4();
        case ReferenceGraphId::fig5_continuity_a: return graph_fig5(0.59);
        case ReferenceGraphId::fig5_continuity_b: return graph_fig5(0.6);
        case ReferenceGraphId::fig_composition_before: return graph_composition(false);
        case ReferenceGraphId::fig_composition_after: return graph_composition(true);
        case ReferenceGraphId::fig_decomposition_before: return graph_decomposition(true);
        case ReferenceGraphId::fig_decomposition_after: return graph_decomposition(false);
        case ReferenceGraphId::fig8_weakening_axiom: return graph_fig8();
        case ReferenceGraphId::fig6_final: return graph_fig6();
    }
    throw std::invalid_argument("unknown reference graph id");
}

std::vector<SweepRow> sweep_fig6() {
    const Qbaf g = graph_fig6();
    std::vector<SweepRow> rows;
    rows.reserve(515);

    rows.push_back(evaluated_row(g, dfquad_on_conorm_scale(), "tconorm_algebraic",
                                 "tconorm_algebraic", "dfquad"));
    rows.push_back(evaluated_row(g, as_aggregative("ebs"), "sum", "sum", "ebs"));
    rows.push_back(evaluated_row(g, as_aggregative("qe"), "sum", "sum", "qe"));

    const std::vector<std::string> names = sweep_aggregator_names();
    for (const std::string& r : names)
        for (const std::string& s : names)
            for (const std::string& f : names)
                rows.push_back(evaluated_row(g, make_semantics(r, s, f), r, s, f));
    return rows;
}

Table4Report table4_report() {
    const Qbaf g = graph_fig6();
    Table4Report report;
    for (const RowSpec& spec : kRowSpecs) {
        SweepRow values = evaluated_row(g, row_semantics(spec), spec.phi_r, spec.phi_s,
                                        spec.phi_f);
        const double computed[5] = {values.deg_i, values.deg_e, values.pi_r_a,
                                    values.pi_s_a, values.deg_a};
        Table4Row row;
        row.id = spec.id;
        row.phi_r = spec.phi_r;
        row.phi_s = spec.phi_s;
        row.phi_f = spec.phi_f;
        row.pass = true;
        for (int c = 0; c < 5; ++c) {
            Table4Cell cell;
            cell.column = kCellColumns[c];
            cell.computed = computed[c];
            cell.rounded = round_to(computed[c], 2);
            cell.expected = spec.expected[static_cast<std::size_t>(c)];
            cell.pass = rounded_matches(computed[c], cell.expected);
            // the one expected cell that contradicts its own row: S7 prints
            // pi_r_a = 0.48, but its parent degrees give avg(0.9, 0.5, 0.1,
            // 0.25) = 0.4375 and its printed deg_a = 0.23 only follows from
            // 0.4375.  recorded as a documented discrepancy, not a failure
            cell.quarantined = row.id == "S7" && cell.column == "pi_r_a";
            if (cell.quarantined && !cell.pass)
                report.notes.push_back(
                    "S7 pi_r_a: expected 0.48 is inconsistent with the row's own "
                    "degrees (avg(0.9, 0.5, 0.1, 0.25) = 0.4375 -> 0.44; the row's "
                    "deg_a = 0.23 also requires 0.4375); quarantined as a documented "
                    "discrepancy");
            if (cell.pass)
                ++report.cells_pass;
            else if (cell.quarantined)
                ++report.cells_quarantined;
            else
                row.pass = false;
            row.cells[static_cast<std::size_t>(c)] = std::move(cell);
        }
        report.rows.push_back(std::move(row));
    }
    report.all_rows_pass = std::all_of(report.rows.begin(), report.rows.end(),
                                       [](const Table4Row& r) { return r.pass; });
    return report;
}

Histogram degree_histogram(const std::vector<SweepRow>& rows) {
    if (rows.size() != 515)
        throw std::invalid_argument("degree histogram needs the full 515-row sweep, got " +
                                    std::to_string(rows.size()) + " rows");
    Histogram h;
    h.total = static_cast<int>(rows.size());
    for (const SweepRow& row : rows) {
        // the nudge keeps values that sit mathematically on a bin edge from
        // being floored into the lower bin by representation error
        int bin = static_cast<int>(std::floor(row.deg_a * 25.0 + 1e-9));
        bin = std::clamp(bin, 0, 24);
        ++h.counts[static_cast<std::size_t>(bin)];
    }
    h.all_bins_populated = std::all_of(h.counts.begin(), h.counts.end(),
                                       [](int c) { return c > 0; });
    return h;
}

std::vector<ExampleCheck> example_checks() {
    std::vector<ExampleCheck> checks;
    const Aggregator& avg = find_aggregator("avg_am");
    const Combiner avg_final = final_from(avg);

    {  // the three literature semantics on the five-argument graph
        const Qbaf g = graph_fig1();
        checks.push_back(make_check("example2.dfquad.deg_a",
                                    "dfquad degree of a on fig1", //
                                    evaluate_dfquad(g).at("a").degree, 0.47));
        checks.push_back(make_check("example2.ebs.deg_a", "ebs degree of a on fig1",
                                    evaluate_ebs(g).at("a").degree, 0.5));
        checks.push_back(make_check("example2.qe.deg_a", "qe degree of a on fig1",
                                    evaluate_qe(g).at("a").degree, 0.5));

        // product of the attacker degrees, drastic t-conorm of the supporter
        // degrees, then a mean that flips the attack side
        DegreeMap ex3 = evaluate(
            g, make_semantics("tnorm_product", "tconorm_drastic", "example3"));
        checks.push_back(make_check("example3.pi_r_a",
                                    "product-aggregated attack on a", //
                                    ex3.at("a").pi_r, 0.09));
        checks.push_back(make_check("example3.pi_s_a",
                                    "drastic-aggregated support on a", //
                                    ex3.at("a").pi_s, 1.0));
        checks.push_back(make_check("example3.deg_a",
                                    "((1 - pi_r + pi_s) / 2 + w) / 2 on a", //
                                    ex3.at("a").degree, 0.73));
    }

    {  // order sensitivity: arithmetic mean against the rank-weighted mean
        const Qbaf g = graph_fig2();
        DegreeMap plain = evaluate(g, Semantics{avg, avg, avg_final, "avg"});
        checks.push_back(make_check("commutativity.avg.pi_r_a",
                                    "order-blind mean of the four attackers",
                                    plain.at("a").pi_r, 0.6));
        const Aggregator& owa = find_aggregator("ordered_weighted_avg");
        DegreeMap ranked = evaluate(g, Semantics{owa, avg, avg_final, "owa"});
        checks.push_back(make_check("commutativity.owa.enunciation_order",
                                    "rank-weighted mean in enunciation order b, c, d, e",
                                    ranked.at("a").pi_r, 0.35));
        checks.push_back(make_check("commutativity.owa.swapped_order",
                                    "rank-weighted mean after reordering to c, b, e, d",
                                    aggregate(owa, {0.9, 0.4, 0.2, 0.9}, true), 0.85));
    }

    {  // idempotent versus counting aggregation of two equal attackers
        const Qbaf g = graph_fig3();
        DegreeMap by_max =
            evaluate(g, Semantics{find_aggregator("max"), avg, avg_final, "max"});
        checks.push_back(make_check("idempotence.max.pi_r_a",
                                    "idempotent max of two attackers at 0.4",
                                    by_max.at("a").pi_r, 0.4));
        DegreeMap by_sum = evaluate(
            g, Semantics{find_aggregator("tconorm_bounded_sum"), avg, avg_final, "bsum"});
        checks.push_back(make_check("idempotence.bounded_sum.pi_r_a",
                                    "bounded sum of two attackers at 0.4",
                                    by_sum.at("a").pi_r, 0.8));
    }

    {  // conjunctive, disjunctive and compromise aggregation of one attacker set
        const Qbaf g = graph_fig4();
        DegreeMap lo = evaluate(g, Semantics{find_aggregator("min"), avg, avg_final, "min"});
        checks.push_back(make_check("weakening.min.pi_r_a", "min of the four attackers",
                                    lo.at("a").pi_r, 0.1));
        DegreeMap hi = evaluate(g, Semantics{find_aggregator("max"), avg, avg_final, "max"});
        checks.push_back(make_check("reinforcement.max.pi_r_a", "max of the four attackers",
                                    hi.at("a").pi_r, 0.9));
        DegreeMap mid = evaluate(g, Semantics{avg, avg, avg_final, "avg"});
        checks.push_back(make_check("compromise.avg.pi_r_a", "mean of the four attackers",
                                    mid.at("a").pi_r, 0.5));
        DegreeMap sym = evaluate(
            g, Semantics{find_aggregator("symmetric_sum"), avg, avg_final, "sym"});
        checks.push_back(make_check("symmetric_sum.chain",
                                    "associative symmetric sum of the four attackers",
                                    sym.at("a").pi_r, 0.5));
    }

    {  // order reversal created by adding one shared attacker
        Semantics pw{avg_above_half_else_min(), avg, avg_final, "composition"};
        DegreeMap before = evaluate(graph_composition(false), pw);
        checks.push_back(make_check("composition.before.pi_r_a1",
                                    "mean 0.45 <= 0.5, so min of {0.2, 0.7}",
                                    before.at("a1").pi_r, 0.2));
        checks.push_back(make_check("composition.before.pi_r_a2",
                                    "mean 0.35 <= 0.5, so min of {0.4, 0.3}",
                                    before.at("a2").pi_r, 0.3));
        DegreeMap after = evaluate(graph_composition(true), pw);
        // the source example states 0.54 here, but avg(0.2, 0.7, 0.7) = 1.6/3
        // rounds to 0.53; the computed value is reported and the mismatch is
        // flagged instead of matched
        checks.push_back(make_check("composition.after.pi_r_a1",
                                    "mean 1.6/3 > 0.5, so the mean itself; the stated "
                                    "0.54 is a documented discrepancy (1.6/3 -> 0.53)",
                                    after.at("a1").pi_r, 0.54, 2, true));
        checks.push_back(make_check("composition.after.pi_r_a2",
                                    "mean 1.4/3 <= 0.5, so min of {0.4, 0.3, 0.7}",
                                    after.at("a2").pi_r, 0.3));
    }

    {  // order reversal created by removing the shared attacker
        Semantics pw{max_above_half_else_avg(), avg, avg_final, "decomposition"};
        DegreeMap before = evaluate(graph_decomposition(true), pw);
        checks.push_back(make_check("decomposition.before.pi_r_a1",
                                    "mean 0.6 > 0.5, so max of {0.6, 0.6, 0.6}",
                                    before.at("a1").pi_r, 0.6));
        checks.push_back(make_check("decomposition.before.pi_r_a2",
                                    "mean 1.6/3 > 0.5, so max of {0.8, 0.2, 0.6}",
                                    before.at("a2").pi_r, 0.8));
        DegreeMap after = evaluate(graph_decomposition(false), pw);
        checks.push_back(make_check("decomposition.after.pi_r_a1",
                                    "mean 0.6 > 0.5, so max of {0.6, 0.6}",
                                    after.at("a1").pi_r, 0.6));
        checks.push_back(make_check("decomposition.after.pi_r_a2",
                                    "mean 0.5 <= 0.5, so the mean of {0.8, 0.2}",
                                    after.at("a2").pi_r, 0.5));
    }

    {  // saturation: a 0.01 weight change flips the combiner branch
        Semantics sat{avg, avg, find_combiner("saturation"), "saturation"};
        DegreeMap low = evaluate(graph_fig5(0.59), sat);
        checks.push_back(make_check("saturation.low.pi_r_a",
                                    "mean attack just below the 0.5 threshold",
                                    low.at("a").pi_r, 0.497, 3));
        checks.push_back(make_check("saturation.low.deg_a",
                                    "support branch: min(1, 0.1 + 0.5)",
                                    low.at("a").degree, 0.6));
        DegreeMap high = evaluate(graph_fig5(0.6), sat);
        checks.push_back(make_check("saturation.high.pi_r_a",
                                    "mean attack exactly at the 0.5 threshold",
                                    high.at("a").pi_r, 0.5));
        checks.push_back(make_check("saturation.high.deg_a",
                                    "saturated branch: max(0, (-0.5 + 0.1 + 0.5) / 3)",
                                    high.at("a").degree, 0.03));
    }

    {  // dominated supporters can still leave the attack side globally weaker
        const Qbaf g = graph_fig8();
        DegreeMap scores = evaluate(g, make_semantics("min", "min", "fig8"));
        checks.push_back(make_check("entanglement.pi_r_a", "min of the three attackers",
                                    scores.at("a").pi_r, 0.3));
        checks.push_back(make_check("entanglement.pi_s_a", "min of the two supporters",
                                    scores.at("a").pi_s, 0.4));
        checks.push_back(make_check("entanglement.deg_a",
                                    "min(1, (1 + 0.4) * max(0, 0.5 - 0.3))",
                                    scores.at("a").degree, 0.28));
    }

    return checks;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "phi_r,phi_s,phi_f,deg_i,deg_e,pi_r_a,pi_s_a,deg_a\n";
    for (const SweepRow& r : rows) {
        out += r.phi_r + "," + r.phi_s + "," + r.phi_f + "," + format_double(r.deg_i) +
               "," + format_double(r.deg_e) + "," + format_double(r.pi_r_a) + "," +
               format_double(r.pi_s_a) + "," + format_double(r.deg_a) + "\n";
    }
    return out;
}

std::string table4_csv(const Table4Report& report) {
    std::string out =
        "row,phi_r,phi_s,phi_f,column,computed,rounded,expected,pass,quarantined,note\n";
    for (const Table4Row& row : report.rows) {
        for (const Table4Cell& cell : row.cells) {
            std::string note;
            if (cell.quarantined)
                note = "documented discrepancy; see the report notes";
            out += row.id + "," + row.phi_r + "," + row.phi_s + "," + row.phi_f + "," +
                   cell.column + "," + format_double(cell.computed) + "," +
                   format_double(cell.rounded) + "," + format_double(cell.expected) + "," +
                   bool_str(cell.pass) + "," + bool_str(cell.quarantined) + "," +
                   csv_quote(note) + "\n";
        }
    }
    return out;
}

std::string histogram_csv(const Histogram& h) {
    std::string out =
        "# a value v lands in bin floor(v / 0.04); edge values go to the higher bin; "
        "v = 1 joins the last bin\n";
    out += "bin_lo,bin_hi,count\n";
    for (std::size_t k = 0; k < h.counts.size(); ++k) {
        out += format_double(static_cast<double>(k) / 25.0) + "," +
               format_double(static_cast<double>(k + 1) / 25.0) + "," +
               std::to_string(h.counts[k]) + "\n";
    }
    return out;
}

std::string histogram_svg(const Histogram& h, const std::vector<double>& markers) {
    const double width = 720.0, height = 420.0;
    const double left = 60.0, right = 700.0, top = 48.0, bottom = 372.0;
    const double span = right - left;
    int max_count = 1;
    for (int c : h.counts) max_count = std::max(max_count, c);

    auto fmt = [](double v) { return format_double(round_to(v, 2)); };
    auto x_of = [&](double unit) { return left + unit * span; };
    auto bar_top = [&](int count) {
        return bottom - (bottom - top) * static_cast<double>(count) /
                            static_cast<double>(max_count);
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
    s += "  <desc>degree distribution over " + std::to_string(h.total) +
         " semantics; a value v lands in bin floor(v / 0.04), edge values go to the "
         "higher bin, v = 1 joins the last bin</desc>\n";
    s += "  <rect width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" fill=\"white\"/>\n";
    s += "  <text x=\"" + fmt(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
         "Acceptability degree of argument a across " +
         std::to_string(h.total) + " semantics</text>\n";

    for (std::size_t k = 0; k < h.counts.size(); ++k) {
        double x0 = x_of(static_cast<double>(k) / 25.0);
        double y0 = bar_top(h.counts[k]);
        s += "  <rect x=\"" + fmt(x0 + 1.0) + "\" y=\"" + fmt(y0) + "\" width=\"" +
             fmt(span / 25.0 - 2.0) + "\" height=\"" + fmt(bottom - y0) +
             "\" fill=\"#4878a8\"/>\n";
    }

    // axes
    s += "  <line x1=\"" + fmt(left) + "\" y1=\"" + fmt(bottom) + "\" x2=\"" + fmt(right) +
         "\" y2=\"" + fmt(bottom) + "\" stroke=\"black\"/>\n";
    s += "  <line x1=\"" + fmt(left) + "\" y1=\"" + fmt(top) + "\" x2=\"" + fmt(left) +
         "\" y2=\"" + fmt(bottom) + "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 25; k += 5) {
        double x = x_of(static_cast<double>(k) / 25.0);
        s += "  <line x1=\"" + fmt(x) + "\" y1=\"" + fmt(bottom) + "\" x2=\"" + fmt(x) +
             "\" y2=\"" + fmt(bottom + 5.0) + "\" stroke=\"black\"/>\n";
        s += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(bottom + 20.0) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
             format_double(static_cast<double>(k) / 25.0) + "</text>\n";
    }
    s += "  <text x=\"" + fmt(left - 8.0) + "\" y=\"" + fmt(bottom + 4.0) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">0</text>\n";
    s += "  <text x=\"" + fmt(left - 8.0) + "\" y=\"" + fmt(top + 4.0) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
         std::to_string(max_count) + "</text>\n";

    // reference dots just above the axis (the three literature degrees when
    // the caller passes them)
    static const char* kMarkerFill[3] = {"#c8503c", "#3c8c50", "#8050a0"};
    for (std::size_t m = 0; m < markers.size(); ++m) {
        double x = x_of(std::clamp(markers[m], 0.0, 1.0));
        s += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(bottom - 6.0) +
             "\" r=\"4\" fill=\"" + kMarkerFill[m % 3] + "\"/>\n";
    }

    s += "</svg>\n";
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace qbaf
