#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "qbaf/aggregators.hpp"
#include "qbaf/engine.hpp"
#include "qbaf/principles.hpp"

using namespace qbaf;

namespace {

Semantics averaging() { return make_semantics("avg_am", "avg_am", "avg_am"); }

// an argument at one half whose attackers positionally dominate its
// supporters: sorted support degrees (0.6, 0.4) sit below sorted attack
// degrees (0.9, 0.5), with a spare nonzero attacker left over
Qbaf dominated_support_graph() {
    return Qbaf({{"a", 0.5}, {"b", 0.6}, {"c", 0.9}, {"d", 0.5}, {"e", 0.4}, {"f", 0.3}},
                {{"c", "a"}, {"d", "a"}, {"f", "a"}}, {{"b", "a"}, {"e", "a"}});
}

// reference search for the weakening/strengthening premise: tries every
// injective assignment instead of the positional one
bool any_dominating_injection(const std::vector<double>& from, const std::vector<double>& into) {
    if (from.size() > into.size()) return false;
    std::vector<char> used(into.size(), 0);
    std::function<bool(size_t, bool)> rec = [&](size_t i, bool strict) -> bool {
        if (i == from.size()) {
            if (strict) return true;
            for (size_t j = 0; j < into.size(); ++j)
                if (!used[j] && into[j] != 0.0) return true;
            return false;
        }
        for (size_t j = 0; j < into.size(); ++j) {
            if (used[j] || from[i] > into[j]) continue;
            used[j] = 1;
            const bool ok = rec(i + 1, strict || from[i] < into[j]);
            used[j] = 0;
            if (ok) return true;
        }
        return false;
    };
    return rec(0, false);
}

std::vector<double> degrees_of(const DegreeMap& d, const std::vector<ArgumentId>& ids) {
    std::vector<double> out;
    for (const auto& id : ids) out.push_back(d.at(id).degree);
    return out;
}

}  // namespace

TEST_CASE("principle names round-trip and carry descriptions") {
    CHECK(all_principles().size() == 15);
    for (Principle p : all_principles()) {
        CHECK(principle_from_string(to_string(p)) == p);
        CHECK(!principle_description(p).empty());
    }
    CHECK(to_string(Principle::A7_strict) == "A7_strict");
    CHECK_THROWS_AS(principle_from_string("A13"), std::invalid_argument);
    CHECK_THROWS_AS(principle_from_string("a1"), std::invalid_argument);
}

TEST_CASE("random graphs are deterministic, acyclic and grid-weighted") {
    GeneratorConfig cfg;
    cfg.seed = 99;
    CHECK(generate_random_acqbaf(cfg) == generate_random_acqbaf(cfg));

    bool saw_zero = false, saw_one = false, saw_edge = false;
    for (unsigned long long seed = 0; seed < 300; ++seed) {
        GeneratorConfig c;
        c.seed = seed;
        Qbaf g = generate_random_acqbaf(c);
        CHECK(validate(g).ok());
        CHECK_NOTHROW(topological_order(g));  // acyclic by construction
        CHECK(g.arguments().size() >= 1);
        CHECK(g.arguments().size() <= static_cast<size_t>(c.max_args));
        CHECK(g.attacks().size() + g.supports().size() <= static_cast<size_t>(c.max_edges));
        saw_edge = saw_edge || !g.attacks().empty() || !g.supports().empty();
        for (const auto& id : g.arguments()) {
            const double w = g.weight(id);
            CHECK(std::abs(w * 10 - std::round(w * 10)) < 1e-12);
            saw_zero = saw_zero || w == 0.0;
            saw_one = saw_one || w == 1.0;
        }
    }
    CHECK(saw_zero);
    CHECK(saw_one);
    CHECK(saw_edge);

    GeneratorConfig single;
    single.seed = 4;
    single.max_args = 1;
    Qbaf g = generate_random_acqbaf(single);
    CHECK(g.arguments().size() == 1);
    CHECK(g.attacks().empty());
    CHECK(g.supports().empty());
}

TEST_CASE("structural principles hold for the aggregative families") {
    GeneratorConfig cfg;
    cfg.seed = 3;
    cfg.trials = 120;
    const std::vector<Semantics> sems = {
        averaging(),
        make_semantics("avg_am", "avg_am", "tnorm_product"),
        make_semantics("avg_am", "avg_am", "tconorm_algebraic"),
        make_semantics("max", "max", "max"),
        make_semantics("tconorm_algebraic", "tconorm_bounded_sum", "avg_gm"),
        as_aggregative("dfquad"),
        as_aggregative("ebs"),
        as_aggregative("qe"),
    };
    for (const auto& s : sems) {
        for (Principle p :
             {Principle::A1, Principle::A2, Principle::A3, Principle::A4, Principle::A5}) {
            PrincipleVerdict v = check_principle(s, p, cfg);
            INFO(s.label, " ", to_string(p), " note=", v.note);
            CHECK(!v.violated);
            CHECK(v.trials_run == cfg.trials);
            CHECK(v.instances > 0);
        }
    }
}

TEST_CASE("a product attack aggregation breaks zero-parent neutrality") {
    GeneratorConfig cfg;
    cfg.seed = 11;
    cfg.trials = 400;
    Semantics prod = make_semantics("tnorm_product", "max", "avg_am");
    PrincipleVerdict v = check_principle(prod, Principle::A6, cfg);
    CHECK(v.violated);
    REQUIRE(v.witness_graphs.size() == 1);
    REQUIRE(v.witness_arguments.size() == 2);
    CHECK(witness_reproduces(prod, v));

    // replay by hand: the twins must genuinely disagree
    DegreeMap d = evaluate(v.witness_graphs[0], prod);
    const double da = d.at(v.witness_arguments[0]).degree;
    const double db = d.at(v.witness_arguments[1]).degree;
    CHECK(std::abs(da - db) > 1e-9);

    // zero-neutral aggregations on both slots keep the principle
    for (const auto& s : {make_semantics("max", "max", "avg_am"),
                          make_semantics("tconorm_algebraic", "tconorm_bounded_sum", "avg_am")}) {
        PrincipleVerdict clean = check_principle(s, Principle::A6, cfg);
        INFO(s.label, " note=", clean.note);
        CHECK(!clean.violated);
        CHECK(clean.instances > 0);
    }
}

TEST_CASE("monotony fails for averaging but holds for zero-neutral monotone picks") {
    GeneratorConfig cfg;
    cfg.seed = 17;
    cfg.trials = 400;

    PrincipleVerdict v = check_principle(averaging(), Principle::A7, cfg);
    CHECK(v.violated);  // a weak extra attacker drags the average down
    CHECK(witness_reproduces(averaging(), v));

    Semantics maxmin = make_semantics("max", "max", "min");
    PrincipleVerdict clean = check_principle(maxmin, Principle::A7, cfg);
    INFO(clean.note);
    CHECK(!clean.violated);
    CHECK(clean.instances > 0);
}

TEST_CASE("reinforcement holds for averaging, strictly, but not strictly for min") {
    GeneratorConfig cfg;
    cfg.seed = 23;
    cfg.trials = 400;

    for (Principle p : {Principle::A8, Principle::A8_strict}) {
        PrincipleVerdict v = check_principle(averaging(), p, cfg);
        INFO(to_string(p), " note=", v.note);
        CHECK(!v.violated);
        CHECK(v.instances > 0);
    }

    Semantics minsem = make_semantics("min", "min", "min");
    CHECK(!check_principle(minsem, Principle::A8, cfg).violated);
    PrincipleVerdict strict = check_principle(minsem, Principle::A8_strict, cfg);
    CHECK(strict.violated);  // min ignores the swapped pair once a weaker parent exists
    CHECK(witness_reproduces(minsem, strict));
}

TEST_CASE("resilience distinguishes saturating from interior semantics") {
    GeneratorConfig cfg;
    cfg.seed = 29;
    cfg.trials = 200;

    Semantics prodf = make_semantics("avg_am", "avg_am", "tnorm_product");
    PrincipleVerdict v = check_principle(prodf, Principle::A9, cfg);
    CHECK(v.violated);  // an unsupported argument collapses the product to zero
    CHECK(witness_reproduces(prodf, v));

    PrincipleVerdict clean = check_principle(as_aggregative("ebs"), Principle::A9, cfg);
    CHECK(!clean.violated);
    CHECK(clean.instances > 0);
}

TEST_CASE("the combiner grid scan pins resilience down to a triple") {
    Semantics prodf = make_semantics("avg_am", "avg_am", "tnorm_product");
    PrincipleVerdict v = resilience_scan(prodf);
    REQUIRE(v.violated);
    REQUIRE(v.witness_tuple.size() == 3);
    CHECK(v.witness_tuple[0] == 1.0);  // a fully attacked slot zeroes the product
    CHECK(witness_reproduces(prodf, v));

    CHECK(!resilience_scan(as_aggregative("ebs")).violated);
    CHECK(!resilience_scan(as_aggregative("qe")).violated);
    CHECK(!resilience_scan(averaging()).violated);

    PrincipleVerdict df = resilience_scan(as_aggregative("dfquad"));
    CHECK(df.violated);  // a full-strength supporter saturates the degree to one
    CHECK(witness_reproduces(as_aggregative("dfquad"), df));

    CHECK_THROWS_AS(resilience_scan(averaging(), 0.0), std::invalid_argument);
}

TEST_CASE("equal-degree attacker and supporter: graph and tuple views agree") {
    GeneratorConfig cfg;
    cfg.seed = 31;
    cfg.trials = 300;
    for (const auto& s : {averaging(), as_aggregative("dfquad"), as_aggregative("ebs"),
                          make_semantics("max", "max", "avg_am")}) {
        for (Principle p : {Principle::A10, Principle::A10_strict}) {
            PrincipleVerdict v = check_principle(s, p, cfg);
            INFO(s.label, " ", to_string(p), " note=", v.note);
            CHECK(v.note.find("disagree") == std::string::npos);
            CHECK(witness_reproduces(s, v));
            CHECK(v.instances + (v.violated ? 1 : 0) > 0);
        }
    }
}

TEST_CASE("dominated support scans find premises and test them strictly") {
    Qbaf g = dominated_support_graph();
    Semantics caution = make_semantics("min", "min", "fig8");

    auto reports = scan_graph(caution, g, Principle::A11);
    REQUIRE(reports.size() == g.arguments().size());
    bool found = false;
    for (const auto& r : reports) {
        if (r.argument != "a") {
            CHECK(!r.premise);  // leaves have neither attackers nor supporters
            continue;
        }
        found = true;
        CHECK(r.premise);
        CHECK(r.conclusion);
    }
    CHECK(found);
    CHECK(evaluate(g, caution).at("a").degree == doctest::Approx(0.28).epsilon(1e-12));

    // same premise, but a max combiner lifts the degree above the weight
    Semantics lax = make_semantics("min", "min", "max");
    for (const auto& r : scan_graph(lax, g, Principle::A11)) {
        if (r.argument != "a") continue;
        CHECK(r.premise);
        CHECK(!r.conclusion);  // 0.7 is not below the intrinsic 0.5
    }

    CHECK_THROWS_AS(scan_graph(caution, g, Principle::A1), std::invalid_argument);
}

TEST_CASE("a weak supporter can drag an average below the weight") {
    // the strengthening premise holds at a (injection x -> y1 plus the spare
    // supporter y2), yet averaging with the weak y2 ends below the weight
    Qbaf g({{"a", 0.5}, {"x", 0.5}, {"y1", 0.5}, {"y2", 0.1}}, {{"x", "a"}},
           {{"y1", "a"}, {"y2", "a"}});
    auto reports = scan_graph(averaging(), g, Principle::A12);
    for (const auto& r : reports) {
        if (r.argument != "a") continue;
        CHECK(r.premise);
        CHECK(!r.conclusion);
    }
    const double deg = evaluate(g, averaging()).at("a").degree;
    CHECK(deg == doctest::Approx((0.5 + 0.3 + 0.5) / 3).epsilon(1e-12));

    GeneratorConfig cfg;
    cfg.seed = 37;
    cfg.trials = 600;
    PrincipleVerdict v = check_principle(averaging(), Principle::A12, cfg);
    CHECK(v.violated);
    CHECK(witness_reproduces(averaging(), v));
}

TEST_CASE("the positional matching agrees with exhaustive injection search") {
    for (unsigned long long seed = 0; seed < 80; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = 1000 + seed;
        cfg.max_args = 7;
        Qbaf g = generate_random_acqbaf(cfg);
        for (const auto& s : {averaging(), make_semantics("min", "min", "fig8")}) {
            DegreeMap d = evaluate(g, s);
            auto weakening = scan_graph(s, g, Principle::A11);
            auto strengthening = scan_graph(s, g, Principle::A12);
            for (size_t i = 0; i < g.arguments().size(); ++i) {
                const ArgumentId& id = g.arguments()[i];
                const auto att = degrees_of(d, g.attackers(id));
                const auto supp = degrees_of(d, g.supporters(id));
                const bool w_ok = g.weight(id) > 0.0;
                INFO("seed ", seed, " arg ", id, " under ", s.label);
                CHECK(weakening[i].premise == (w_ok && any_dominating_injection(supp, att)));
                CHECK(strengthening[i].premise == (w_ok && any_dominating_injection(att, supp)));
            }
        }
    }
}

TEST_CASE("hypothesis probes sort the catalog as expected") {
    CHECK(zero_neutral(find_aggregator("max")));
    CHECK(zero_neutral(find_aggregator("tconorm_algebraic")));
    CHECK(zero_neutral(find_aggregator("sum")));
    CHECK(!zero_neutral(find_aggregator("tnorm_product")));
    CHECK(!zero_neutral(find_aggregator("avg_am")));

    CHECK(monotone_aggregator(find_aggregator("avg_am"), false));
    CHECK(monotone_aggregator(find_aggregator("avg_am"), true));
    CHECK(monotone_aggregator(find_aggregator("min"), false));
    CHECK(!monotone_aggregator(find_aggregator("min"), true));
    CHECK(monotone_aggregator(find_aggregator("tnorm_product"), false));
    CHECK(!monotone_aggregator(find_aggregator("tnorm_product"), true));

    CHECK(combiner_orientation_ok(find_combiner("avg_am"), false));
    CHECK(combiner_orientation_ok(find_combiner("avg_am"), true));
    CHECK(combiner_orientation_ok(find_combiner("min"), false));
    CHECK(!combiner_orientation_ok(find_combiner("min"), true));
    CHECK(!combiner_orientation_ok(find_combiner("dfquad"), false));  // rises in x

    CHECK(stability_compatible(find_combiner("ebs")));
    CHECK(stability_compatible(find_combiner("qe")));
    CHECK(stability_compatible(find_combiner("dfquad")));
    CHECK(!stability_compatible(find_combiner("avg_am")));
}

TEST_CASE("propositions check their hypotheses before claiming principles") {
    GeneratorConfig cfg;
    cfg.seed = 41;
    cfg.trials = 120;

    PropositionReport p2 = verify_proposition(2, {averaging(), as_aggregative("dfquad")}, cfg);
    CHECK(p2.all_hold);
    CHECK(p2.checked.size() == 2);
    CHECK(p2.skipped.empty());

    // stability needs empty aggregates at the bottom of the codomain plus a
    // weight-preserving combiner at (0, 0)
    PropositionReport p3 =
        verify_proposition(3, {as_aggregative("ebs"), averaging(), as_aggregative("dfquad")}, cfg);
    CHECK(p3.all_hold);
    CHECK(p3.checked == std::vector<std::string>{"ebs"});
    CHECK(p3.skipped.size() == 2);

    Semantics prod = make_semantics("tnorm_product", "tnorm_product", "avg_am");
    Semantics maxavg = make_semantics("max", "max", "avg_am");
    PropositionReport p4 = verify_proposition(4, {prod, maxavg}, cfg);
    CHECK(p4.all_hold);
    CHECK(p4.checked == std::vector<std::string>{maxavg.label});
    CHECK(p4.skipped == std::vector<std::string>{prod.label});

    PropositionReport p5 = verify_proposition(5, {averaging(), maxavg}, cfg);
    CHECK(p5.all_hold);
    CHECK(p5.checked.size() == 2);

    PropositionReport p6 = verify_proposition(6, {prod, maxavg}, cfg);
    CHECK(p6.all_hold);
    CHECK(p6.checked == std::vector<std::string>{maxavg.label});
    CHECK(p6.skipped == std::vector<std::string>{prod.label});

    CHECK_THROWS_AS(verify_proposition(1, {averaging()}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_proposition(7, {averaging()}, cfg), std::invalid_argument);
}

TEST_CASE("verdicts are deterministic and serialize with their witnesses") {
    GeneratorConfig cfg;
    cfg.seed = 5;
    cfg.trials = 300;
    Semantics prod = make_semantics("tnorm_product", "max", "avg_am");
    PrincipleVerdict a = check_principle(prod, Principle::A6, cfg);
    PrincipleVerdict b = check_principle(prod, Principle::A6, cfg);
    CHECK(to_json(a) == to_json(b));
    REQUIRE(a.violated);

    nlohmann::json j = nlohmann::json::parse(to_json(a));
    CHECK(j["principle"] == "A6");
    CHECK(j["status"] == "violated");
    CHECK(j["trials_run"].get<long long>() == a.trials_run);
    REQUIRE(j.contains("witness"));
    REQUIRE(j["witness"]["graphs"].size() == 1);
    Qbaf replayed = parse_qbaf(j["witness"]["graphs"][0].dump());
    CHECK(replayed == a.witness_graphs[0]);

    nlohmann::json clean =
        nlohmann::json::parse(to_json(check_principle(prod, Principle::A5, cfg)));
    CHECK(clean["status"] == "no-counterexample");
    CHECK(!clean.contains("witness"));

    nlohmann::json rep = nlohmann::json::parse(
        to_json(verify_proposition(4, {prod, make_semantics("max", "max", "avg_am")}, cfg)));
    CHECK(rep["proposition"] == 4);
    CHECK(rep["all_hold"].get<bool>());
}

TEST_CASE("a doctored witness no longer reproduces") {
    GeneratorConfig cfg;
    cfg.seed = 11;
    cfg.trials = 400;
    Semantics prod = make_semantics("tnorm_product", "max", "avg_am");
    PrincipleVerdict v = check_principle(prod, Principle::A6, cfg);
    REQUIRE(v.violated);
    CHECK(witness_reproduces(prod, v));

    PrincipleVerdict doctored = v;
    doctored.witness_arguments = {v.witness_arguments[0], v.witness_arguments[0]};
    CHECK(!witness_reproduces(prod, doctored));

    PrincipleVerdict empty = v;
    empty.witness_graphs.clear();
    CHECK(!witness_reproduces(prod, empty));
}
