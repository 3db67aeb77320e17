#include "qbaf/principles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "qbaf/aggregators.hpp"

namespace qbaf {

namespace {

constexpr double kTol = 1e-9;

struct PrincipleInfo {
    Principle p;
    const char* name;
    const char* description;
};

const PrincipleInfo kPrinciples[] = {
    {Principle::A1, "A1", "degrees are invariant under graph isomorphism"},
    {Principle::A2, "A2", "a disjoint union leaves every degree unchanged"},
    {Principle::A3, "A3", "degrees depend only on ancestors"},
    {Principle::A4, "A4",
     "equal weight and pairwise equally acceptable parents give equal degrees"},
    {Principle::A5, "A5", "a parentless argument keeps its intrinsic weight"},
    {Principle::A6, "A6", "an extra parent of degree zero has no impact"},
    {Principle::A7, "A7", "more attackers or fewer supporters never raise the degree"},
    {Principle::A8, "A8",
     "a weaker attacker and a stronger supporter never lower the degree"},
    {Principle::A9, "A9", "an interior weight yields an interior degree"},
    {Principle::A10, "A10",
     "adding an attacker and a supporter of equal degree never helps"},
    {Principle::A11, "A11",
     "degree-dominated support pulls the degree below the weight"},
    {Principle::A12, "A12",
     "degree-dominated attack lifts the degree above the weight"},
    {Principle::A7_strict, "A7_strict",
     "a strong extra attacker or lost strong supporter strictly lowers the degree"},
    {Principle::A8_strict, "A8_strict",
     "a strictly weaker attacker or strictly stronger supporter strictly helps"},
    {Principle::A10_strict, "A10_strict",
     "an attacker and a supporter of equal degree cancel exactly"},
};

const PrincipleInfo& info(Principle p) {
    for (const auto& i : kPrinciples)
        if (i.p == p) return i;
    throw std::invalid_argument("unknown principle");
}

// --- random graph generation -------------------------------------------------

// fisher-yates with explicit draws so the sequence only depends on the seed
template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

double grid_weight(std::mt19937_64& rng, const GeneratorConfig& cfg) {
    const int steps = static_cast<int>(std::lround(1.0 / cfg.weight_grid));
    return static_cast<double>(rng() % static_cast<unsigned long long>(steps + 1)) / steps;
}

Qbaf generate_with(std::mt19937_64& rng, const GeneratorConfig& cfg) {
    if (cfg.max_args < 1) throw std::invalid_argument("generator: max_args must be at least 1");
    if (!(cfg.weight_grid > 0.0) || cfg.weight_grid > 1.0)
        throw std::invalid_argument("generator: weight_grid must lie in (0, 1]");
    if (cfg.max_edges < 0) throw std::invalid_argument("generator: max_edges must be non-negative");

    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(cfg.max_args));
    std::vector<Argument> args;
    args.reserve(n);
    for (int i = 0; i < n; ++i) args.push_back({"a" + std::to_string(i), grid_weight(rng, cfg)});

    // a hidden permutation orients every edge from earlier to later position,
    // which makes the graph acyclic by construction
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    shuffle_vec(perm, rng);

    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) candidates.emplace_back(perm[i], perm[j]);
    shuffle_vec(candidates, rng);

    std::vector<Edge> attacks;
    std::vector<Edge> supports;
    int kept = 0;
    for (const auto& [src, dst] : candidates) {
        if (kept >= cfg.max_edges) break;
        if (rng() % 100 >= 45) continue;  // keep roughly half of the candidate pairs
        Edge e{args[src].id, args[dst].id, std::nullopt};
        if (rng() % 2 == 0)
            attacks.push_back(e);
        else
            supports.push_back(e);
        ++kept;
    }
    return Qbaf(std::move(args), std::move(attacks), std::move(supports));
}

// --- small helpers -----------------------------------------------------------

struct Parts {
    std::vector<Argument> args;
    std::vector<Edge> atts;
    std::vector<Edge> supps;
};

Parts parts_of(const Qbaf& g) {
    Parts p;
    for (const auto& id : g.arguments()) p.args.push_back({id, g.weight(id)});
    p.atts = g.attacks();
    p.supps = g.supports();
    return p;
}

Qbaf build(Parts p) { return Qbaf(std::move(p.args), std::move(p.atts), std::move(p.supps)); }

double degree_of(const DegreeMap& d, const ArgumentId& id) { return d.at(id).degree; }

// everything reachable from `start` along outgoing attack/support edges,
// `start` included
std::set<ArgumentId> reachable_from(const Qbaf& g, const ArgumentId& start) {
    std::map<ArgumentId, std::vector<ArgumentId>> out;
    for (const auto& e : g.attacks()) out[e.from].push_back(e.to);
    for (const auto& e : g.supports()) out[e.from].push_back(e.to);
    std::set<ArgumentId> seen{start};
    std::queue<ArgumentId> todo;
    todo.push(start);
    while (!todo.empty()) {
        ArgumentId cur = todo.front();
        todo.pop();
        auto it = out.find(cur);
        if (it == out.end()) continue;
        for (const auto& nxt : it->second)
            if (seen.insert(nxt).second) todo.push(nxt);
    }
    return seen;
}

struct RankedParent {
    double deg;
    ArgumentId id;
};

std::vector<RankedParent> ranked(const DegreeMap& d, const std::vector<ArgumentId>& ids) {
    std::vector<RankedParent> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back({degree_of(d, id), id});
    std::sort(out.begin(), out.end(), [](const RankedParent& a, const RankedParent& b) {
        return a.deg > b.deg || (a.deg == b.deg && a.id < b.id);
    });
    return out;
}

// decides whether some injective map from `from` into `into` exists with
// deg(x) <= deg(f(x)) everywhere, and additionally either a strict pair or a
// leftover target of nonzero degree.  positional matching on the two lists
// sorted by descending degree decides this exactly: a sum-exchange argument
// shows that whenever any injection certifies the premise, the positional one
// does as well.
bool dominating_injection(const std::vector<RankedParent>& from,
                          const std::vector<RankedParent>& into) {
    if (from.size() > into.size()) return false;
    bool strict = false;
    for (size_t i = 0; i < from.size(); ++i) {
        if (from[i].deg > into[i].deg) return false;
        if (from[i].deg < into[i].deg) strict = true;
    }
    bool leftover = false;
    for (size_t j = from.size(); j < into.size(); ++j)
        if (into[j].deg != 0.0) leftover = true;
    return strict || leftover;
}

// φ_f(φ_R(attacker degrees), φ_S(supporter degrees), w) recomputed from a
// parent list directly, bypassing the graph walk; used to confirm that the
// graph-level conclusion matches the tuple-level reformulation
double combine_direct(const Semantics& s, const DegreeMap& d, std::vector<ArgumentId> atts,
                      std::vector<ArgumentId> supps, double w) {
    std::sort(atts.begin(), atts.end());
    std::sort(supps.begin(), supps.end());
    std::vector<double> ad, sd;
    for (const auto& id : atts) ad.push_back(degree_of(d, id));
    for (const auto& id : supps) sd.push_back(degree_of(d, id));
    return s.combiner.eval(aggregate(s.attack_agg, ad, true), aggregate(s.support_agg, sd, true),
                           w);
}

// --- per-trial constructions -------------------------------------------------

// pools of distinct existing arguments, drawn without replacement
struct PoolDraw {
    std::vector<ArgumentId> shuffled;
    size_t next = 0;

    PoolDraw(const Qbaf& g, std::mt19937_64& rng) : shuffled(g.arguments()) {
        shuffle_vec(shuffled, rng);
    }

    std::vector<ArgumentId> take(size_t count) {
        std::vector<ArgumentId> out;
        while (out.size() < count && next < shuffled.size()) out.push_back(shuffled[next++]);
        return out;
    }
};

void set_violated(PrincipleVerdict& v, std::vector<Qbaf> graphs, std::vector<ArgumentId> args,
                  std::string note) {
    v.violated = true;
    v.witness_graphs = std::move(graphs);
    v.witness_arguments = std::move(args);
    v.note = std::move(note);
}

void trial_anonymity(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                     PrincipleVerdict& v) {
    DegreeMap d0 = evaluate(base, s);
    std::vector<ArgumentId> fresh;
    for (size_t i = 0; i < base.arguments().size(); ++i) fresh.push_back("x" + std::to_string(i));
    shuffle_vec(fresh, rng);
    std::map<ArgumentId, ArgumentId> m;
    for (size_t i = 0; i < fresh.size(); ++i) m[base.arguments()[i]] = fresh[i];
    Qbaf relab = relabel(base, m);
    DegreeMap d1 = evaluate(relab, s);
    for (const auto& id : base.arguments()) {
        ++v.instances;
        if (std::abs(degree_of(d0, id) - degree_of(d1, m.at(id))) > kTol) {
            set_violated(v, {base, relab}, {id, m.at(id)}, "degree changes under relabelling");
            return;
        }
    }
}

void trial_independence(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                        const GeneratorConfig& cfg, PrincipleVerdict& v) {
    DegreeMap d0 = evaluate(base, s);
    Qbaf other = generate_with(rng, cfg);
    std::map<ArgumentId, ArgumentId> m;
    for (const auto& id : other.arguments()) m[id] = "u_" + id;
    other = relabel(other, m);
    DegreeMap d1 = evaluate(other, s);
    Qbaf uni = disjoint_union(base, other);
    DegreeMap du = evaluate(uni, s);
    for (const auto& id : base.arguments()) {
        ++v.instances;
        if (std::abs(degree_of(d0, id) - degree_of(du, id)) > kTol) {
            set_violated(v, {base, other}, {id}, "degree changes under disjoint union");
            return;
        }
    }
    for (const auto& id : other.arguments()) {
        ++v.instances;
        if (std::abs(degree_of(d1, id) - degree_of(du, id)) > kTol) {
            set_violated(v, {base, other}, {id}, "degree changes under disjoint union");
            return;
        }
    }
}

void trial_directionality(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                          PrincipleVerdict& v) {
    const auto order = topological_order(base);
    const int n = static_cast<int>(order.size());
    if (n < 2) return;
    DegreeMap d0 = evaluate(base, s);

    for (int attempt = 0; attempt < 10; ++attempt) {
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        if (i == j) continue;
        const ArgumentId& src = order[std::min(i, j)];
        const ArgumentId& dst = order[std::max(i, j)];
        Parts p = parts_of(base);
        auto exists = [&](const std::vector<Edge>& es) {
            return std::any_of(es.begin(), es.end(),
                               [&](const Edge& e) { return e.from == src && e.to == dst; });
        };
        if (exists(p.atts) || exists(p.supps)) continue;
        (rng() % 2 == 0 ? p.atts : p.supps).push_back({src, dst, std::nullopt});
        Qbaf extended = build(std::move(p));
        DegreeMap d1 = evaluate(extended, s);
        const auto downstream = reachable_from(extended, dst);
        for (const auto& id : base.arguments()) {
            if (downstream.count(id)) continue;
            ++v.instances;
            if (std::abs(degree_of(d0, id) - degree_of(d1, id)) > kTol) {
                set_violated(v, {base, extended}, {id, dst},
                             "degree of an argument with no path from the new edge's target "
                             "changed");
                return;
            }
        }
        return;
    }
}

void trial_equivalence(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                       const GeneratorConfig& cfg, PrincipleVerdict& v) {
    DegreeMap d0 = evaluate(base, s);
    PoolDraw pool(base, rng);
    auto attackers = pool.take(rng() % 4);
    auto supporters = pool.take(rng() % 4);

    Parts p = parts_of(base);
    const double wt = grid_weight(rng, cfg);
    p.args.push_back({"x_ta", wt});
    p.args.push_back({"x_tb", wt});
    int clones = 0;
    auto wire = [&](const std::vector<ArgumentId>& parents, std::vector<Edge>& rel) {
        for (const auto& parent : parents) {
            rel.push_back({parent, "x_ta", std::nullopt});
            if (rng() % 2 == 0) {
                rel.push_back({parent, "x_tb", std::nullopt});
            } else {
                // a fresh leaf whose weight copies the parent's degree keeps
                // the degree multisets equal without any floating-point search
                ArgumentId cid = "x_c" + std::to_string(clones++);
                p.args.push_back({cid, degree_of(d0, parent)});
                rel.push_back({cid, "x_tb", std::nullopt});
            }
        }
    };
    wire(attackers, p.atts);
    wire(supporters, p.supps);

    Qbaf twin = build(std::move(p));
    DegreeMap d1 = evaluate(twin, s);
    ++v.instances;
    if (std::abs(degree_of(d1, "x_ta") - degree_of(d1, "x_tb")) > kTol)
        set_violated(v, {twin}, {"x_ta", "x_tb"},
                     "equal weight and pairwise equal parent degrees, different degrees");
}

void trial_stability(const Semantics& s, const Qbaf& base, PrincipleVerdict& v) {
    DegreeMap d0 = evaluate(base, s);
    for (const auto& id : base.arguments()) {
        if (!base.attackers(id).empty() || !base.supporters(id).empty()) continue;
        ++v.instances;
        if (degree_of(d0, id) != base.weight(id)) {
            set_violated(v, {base}, {id}, "parentless argument drifts from its weight");
            return;
        }
    }
}

void trial_neutrality(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                      const GeneratorConfig& cfg, PrincipleVerdict& v) {
    PoolDraw pool(base, rng);
    auto attackers = pool.take(rng() % 4);
    auto supporters = pool.take(rng() % 4);
    // both twins must route through the combiner, so the shared parent pool is
    // never allowed to be empty
    if (attackers.empty() && supporters.empty()) attackers = pool.take(1);
    if (attackers.empty() && supporters.empty()) return;

    Parts p = parts_of(base);
    const double wt = grid_weight(rng, cfg);
    p.args.push_back({"x_ta", wt});
    p.args.push_back({"x_tb", wt});
    for (const auto& parent : attackers) {
        p.atts.push_back({parent, "x_ta", std::nullopt});
        p.atts.push_back({parent, "x_tb", std::nullopt});
    }
    for (const auto& parent : supporters) {
        p.supps.push_back({parent, "x_ta", std::nullopt});
        p.supps.push_back({parent, "x_tb", std::nullopt});
    }
    // the extra parent is a fresh leaf of weight zero, hence degree zero
    p.args.push_back({"x_z", 0.0});
    (rng() % 2 == 0 ? p.atts : p.supps).push_back({"x_z", "x_tb", std::nullopt});

    Qbaf twin = build(std::move(p));
    DegreeMap d1 = evaluate(twin, s);
    ++v.instances;
    if (std::abs(degree_of(d1, "x_ta") - degree_of(d1, "x_tb")) > kTol)
        set_violated(v, {twin}, {"x_ta", "x_tb"},
                     "an extra parent of degree zero changed the degree");
}

void trial_monotony(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                    const GeneratorConfig& cfg, bool strict, PrincipleVerdict& v) {
    PoolDraw pool(base, rng);
    auto att_shared = pool.take(rng() % 3);
    auto att_extra = pool.take(rng() % 3);
    auto supp_shared = pool.take(rng() % 3);
    auto supp_extra = pool.take(rng() % 3);
    // a shared parent keeps both twins on the combiner path, so the leaf rule
    // never enters the comparison
    if (att_shared.empty() && supp_shared.empty()) att_shared = pool.take(1);
    if (att_shared.empty() && supp_shared.empty()) return;

    Parts p = parts_of(base);
    const double wt = grid_weight(rng, cfg);
    p.args.push_back({"x_ta", wt});
    p.args.push_back({"x_tb", wt});
    for (const auto& id : att_shared) {
        p.atts.push_back({id, "x_ta", std::nullopt});
        p.atts.push_back({id, "x_tb", std::nullopt});
    }
    for (const auto& id : att_extra) p.atts.push_back({id, "x_tb", std::nullopt});
    for (const auto& id : supp_shared) {
        p.supps.push_back({id, "x_ta", std::nullopt});
        p.supps.push_back({id, "x_tb", std::nullopt});
    }
    for (const auto& id : supp_extra) p.supps.push_back({id, "x_ta", std::nullopt});

    Qbaf twin = build(std::move(p));
    DegreeMap d1 = evaluate(twin, s);
    const double da = degree_of(d1, "x_ta");
    const double db = degree_of(d1, "x_tb");
    if (!strict) {
        ++v.instances;
        if (da < db - kTol)
            set_violated(v, {twin}, {"x_ta", "x_tb"},
                         "more attackers and fewer supporters raised the degree");
        return;
    }
    auto strong = [&](const std::vector<ArgumentId>& ids) {
        return std::any_of(ids.begin(), ids.end(),
                           [&](const ArgumentId& id) { return degree_of(d1, id) != 0.0; });
    };
    const bool premise = (da > 0.0 && strong(att_extra)) || (db < 1.0 && strong(supp_extra));
    if (!premise) return;
    ++v.instances;
    if (!(da > db))  // strict conclusions tolerate no slack
        set_violated(v, {twin}, {"x_ta", "x_tb"},
                     "a strong strict inclusion failed to strictly separate the degrees");
}

void trial_reinforcement(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                         const GeneratorConfig& cfg, bool strict, PrincipleVerdict& v) {
    PoolDraw pool(base, rng);
    auto att_pool = pool.take(rng() % 3);
    auto supp_pool = pool.take(rng() % 3);

    // the swapped pairs are fresh leaves, so their degrees equal their grid
    // weights exactly and the premise inequalities need no tolerance
    double wx = grid_weight(rng, cfg), wy = grid_weight(rng, cfg);
    if (wx > wy) std::swap(wx, wy);  // attacker of x_ta at most the attacker of x_tb
    double wxp = grid_weight(rng, cfg), wyp = grid_weight(rng, cfg);
    if (wxp < wyp) std::swap(wxp, wyp);  // supporter of x_ta at least the supporter of x_tb

    Parts p = parts_of(base);
    const double wt = grid_weight(rng, cfg);
    p.args.push_back({"x_ta", wt});
    p.args.push_back({"x_tb", wt});
    p.args.push_back({"x_ax", wx});
    p.args.push_back({"x_ay", wy});
    p.args.push_back({"x_sx", wxp});
    p.args.push_back({"x_sy", wyp});
    for (const auto& id : att_pool) {
        p.atts.push_back({id, "x_ta", std::nullopt});
        p.atts.push_back({id, "x_tb", std::nullopt});
    }
    for (const auto& id : supp_pool) {
        p.supps.push_back({id, "x_ta", std::nullopt});
        p.supps.push_back({id, "x_tb", std::nullopt});
    }
    p.atts.push_back({"x_ax", "x_ta", std::nullopt});
    p.atts.push_back({"x_ay", "x_tb", std::nullopt});
    p.supps.push_back({"x_sx", "x_ta", std::nullopt});
    p.supps.push_back({"x_sy", "x_tb", std::nullopt});

    Qbaf twin = build(std::move(p));
    DegreeMap d1 = evaluate(twin, s);
    const double da = degree_of(d1, "x_ta");
    const double db = degree_of(d1, "x_tb");
    if (!strict) {
        ++v.instances;
        if (da < db - kTol)
            set_violated(v, {twin}, {"x_ta", "x_tb"},
                         "a weaker attacker and a stronger supporter lowered the degree");
        return;
    }
    const bool premise = (da > 0.0 && wx < wy) || (db < 1.0 && wxp > wyp);
    if (!premise) return;
    ++v.instances;
    if (!(da > db))
        set_violated(v, {twin}, {"x_ta", "x_tb"},
                     "a strictly weaker attacker or strictly stronger supporter did not "
                     "strictly raise the degree");
}

void trial_resilience(const Semantics& s, const Qbaf& base, PrincipleVerdict& v) {
    DegreeMap d0 = evaluate(base, s);
    for (const auto& id : base.arguments()) {
        const double w = base.weight(id);
        if (!(w > 0.0 && w < 1.0)) continue;
        ++v.instances;
        const double deg = degree_of(d0, id);
        if (!(deg > 0.0 && deg < 1.0)) {
            set_violated(v, {base}, {id}, "interior weight reached the boundary of [0, 1]");
            return;
        }
    }
}

void trial_franklin(const Semantics& s, const Qbaf& base, std::mt19937_64& rng,
                    const GeneratorConfig& cfg, bool strict, PrincipleVerdict& v) {
    PoolDraw pool(base, rng);
    auto att_pool = pool.take(rng() % 3);
    auto supp_pool = pool.take(rng() % 3);
    // keep the sparser twin on the combiner path as well (see the neutrality
    // construction): a parentless twin would fall back to its weight
    if (att_pool.empty() && supp_pool.empty()) att_pool = pool.take(1);
    if (att_pool.empty() && supp_pool.empty()) return;
    const double weq = grid_weight(rng, cfg);

    Parts p = parts_of(base);
    const double wt = grid_weight(rng, cfg);
    p.args.push_back({"x_ta", wt});
    p.args.push_back({"x_tb", wt});
    p.args.push_back({"x_att", weq});
    p.args.push_back({"x_sup", weq});
    for (const auto& id : att_pool) {
        p.atts.push_back({id, "x_ta", std::nullopt});
        p.atts.push_back({id, "x_tb", std::nullopt});
    }
    for (const auto& id : supp_pool) {
        p.supps.push_back({id, "x_ta", std::nullopt});
        p.supps.push_back({id, "x_tb", std::nullopt});
    }
    p.atts.push_back({"x_att", "x_ta", std::nullopt});
    p.supps.push_back({"x_sup", "x_ta", std::nullopt});

    Qbaf twin = build(std::move(p));
    DegreeMap d1 = evaluate(twin, s);
    const double da = degree_of(d1, "x_ta");
    const double db = degree_of(d1, "x_tb");

    // tuple-level reformulation of the same comparison, recomputed from the
    // intended parent pools rather than the stored adjacency
    auto with = [](std::vector<ArgumentId> ids, const ArgumentId& extra) {
        ids.push_back(extra);
        return ids;
    };
    const double lhs = combine_direct(s, d1, with(att_pool, "x_att"), with(supp_pool, "x_sup"), wt);
    const double rhs = combine_direct(s, d1, att_pool, supp_pool, wt);
    if (std::abs(lhs - da) > kTol || std::abs(rhs - db) > kTol) {
        set_violated(v, {twin}, {"x_ta", "x_tb"},
                     "graph-level and tuple-level formulations disagree");
        return;
    }

    ++v.instances;
    if (!strict) {
        if (da > db + kTol)
            set_violated(v, {twin}, {"x_ta", "x_tb"},
                         "an attacker and a supporter of equal degree raised the degree");
        return;
    }
    if (std::abs(da - db) > kTol)
        set_violated(v, {twin}, {"x_ta", "x_tb"},
                     "an attacker and a supporter of equal degree failed to cancel");
}

bool weakening_premise(const Qbaf& g, const DegreeMap& d, const ArgumentId& id) {
    if (!(g.weight(id) > 0.0)) return false;
    return dominating_injection(ranked(d, g.supporters(id)), ranked(d, g.attackers(id)));
}

bool strengthening_premise(const Qbaf& g, const DegreeMap& d, const ArgumentId& id) {
    if (!(g.weight(id) > 0.0)) return false;
    return dominating_injection(ranked(d, g.attackers(id)), ranked(d, g.supporters(id)));
}

void trial_weakening(const Semantics& s, const Qbaf& base, bool strengthening,
                     PrincipleVerdict& v) {
    DegreeMap d0 = evaluate(base, s);
    for (const auto& id : base.arguments()) {
        const bool premise = strengthening ? strengthening_premise(base, d0, id)
                                           : weakening_premise(base, d0, id);
        if (!premise) continue;
        ++v.instances;
        const double deg = degree_of(d0, id);
        const double w = base.weight(id);
        const bool ok = strengthening ? deg > w : deg < w;
        if (!ok) {
            set_violated(v, {base}, {id},
                         strengthening ? "dominated attack did not lift the degree above the weight"
                                       : "dominated support did not pull the degree below the weight");
            return;
        }
    }
}

void run_trial(const Semantics& s, Principle p, const Qbaf& base, std::mt19937_64& rng,
               const GeneratorConfig& cfg, PrincipleVerdict& v) {
    switch (p) {
        case Principle::A1: trial_anonymity(s, base, rng, v); break;
        case Principle::A2: trial_independence(s, base, rng, cfg, v); break;
        case Principle::A3: trial_directionality(s, base, rng, v); break;
        case Principle::A4: trial_equivalence(s, base, rng, cfg, v); break;
        case Principle::A5: trial_stability(s, base, v); break;
        case Principle::A6: trial_neutrality(s, base, rng, cfg, v); break;
        case Principle::A7: trial_monotony(s, base, rng, cfg, false, v); break;
        case Principle::A7_strict: trial_monotony(s, base, rng, cfg, true, v); break;
        case Principle::A8: trial_reinforcement(s, base, rng, cfg, false, v); break;
        case Principle::A8_strict: trial_reinforcement(s, base, rng, cfg, true, v); break;
        case Principle::A9: trial_resilience(s, base, v); break;
        case Principle::A10: trial_franklin(s, base, rng, cfg, false, v); break;
        case Principle::A10_strict: trial_franklin(s, base, rng, cfg, true, v); break;
        case Principle::A11: trial_weakening(s, base, false, v); break;
        case Principle::A12: trial_weakening(s, base, true, v); break;
    }
}

}  // namespace

// --- public interface --------------------------------------------------------

const std::vector<Principle>& all_principles() {
    static const std::vector<Principle> all = [] {
        std::vector<Principle> v;
        for (const auto& i : kPrinciples) v.push_back(i.p);
        return v;
    }();
    return all;
}

std::string to_string(Principle p) { return info(p).name; }

std::string principle_description(Principle p) { return info(p).description; }

Principle principle_from_string(const std::string& name) {
    for (const auto& i : kPrinciples)
        if (name == i.name) return i.p;
    throw std::invalid_argument("unknown principle '" + name + "'");
}

Qbaf generate_random_acqbaf(const GeneratorConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return generate_with(rng, cfg);
}

PrincipleVerdict check_principle(const Semantics& s, Principle p, const GeneratorConfig& cfg) {
    PrincipleVerdict v;
    v.principle = p;
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.trials && !v.violated; ++t) {
        Qbaf base = generate_with(rng, cfg);
        ++v.trials_run;
        try {
            run_trial(s, p, base, rng, cfg, v);
        } catch (const std::domain_error&) {
            // partial aggregators (rank-sensitive ones, singular pairs) make
            // the trial unusable; it still counts towards trials_run
        }
    }
    return v;
}

std::vector<InstanceReport> scan_graph(const Semantics& s, const Qbaf& g, Principle p) {
    if (p != Principle::A5 && p != Principle::A9 && p != Principle::A11 && p != Principle::A12)
        throw std::invalid_argument("scan_graph supports the argument-local principles "
                                    "A5, A9, A11 and A12");
    DegreeMap d = evaluate(g, s);
    std::vector<InstanceReport> out;
    for (const auto& id : g.arguments()) {
        InstanceReport r{id, false, false};
        const double w = g.weight(id);
        const double deg = degree_of(d, id);
        switch (p) {
            case Principle::A5:
                r.premise = g.attackers(id).empty() && g.supporters(id).empty();
                r.conclusion = r.premise && deg == w;
                break;
            case Principle::A9:
                r.premise = w > 0.0 && w < 1.0;
                r.conclusion = r.premise && deg > 0.0 && deg < 1.0;
                break;
            case Principle::A11:
                r.premise = weakening_premise(g, d, id);
                r.conclusion = r.premise && deg < w;
                break;
            default:
                r.premise = strengthening_premise(g, d, id);
                r.conclusion = r.premise && deg > w;
                break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

PrincipleVerdict resilience_scan(const Semantics& s, double grid_step) {
    if (!(grid_step > 0.0) || grid_step > 0.5)
        throw std::invalid_argument("resilience_scan: grid_step must lie in (0, 0.5]");
    PrincipleVerdict v;
    v.principle = Principle::A9;
    const int steps = static_cast<int>(std::lround(1.0 / grid_step));
    // x scans downward so that saturation through a fully attacked first slot
    // is reported before the symmetric support-side failures
    for (int xi = steps; xi >= 0 && !v.violated; --xi) {
        for (int yi = 0; yi <= steps && !v.violated; ++yi) {
            for (int zi = 1; zi < steps && !v.violated; ++zi) {
                const double x = static_cast<double>(xi) / steps;
                const double y = static_cast<double>(yi) / steps;
                const double z = static_cast<double>(zi) / steps;
                ++v.instances;
                ++v.trials_run;
                const double val = s.combiner.eval(x, y, z);
                if (!(val > 0.0 && val < 1.0)) {
                    v.violated = true;
                    v.witness_tuple = {x, y, z};
                    v.note = "combiner leaves the open interval at an interior weight";
                }
            }
        }
    }
    return v;
}

bool witness_reproduces(const Semantics& s, const PrincipleVerdict& v) {
    if (!v.violated) return true;
    if (!v.witness_tuple.empty()) {
        const double val = s.combiner.eval(v.witness_tuple[0], v.witness_tuple[1],
                                           v.witness_tuple[2]);
        return !(val > 0.0 && val < 1.0);
    }
    if (v.witness_graphs.empty() || v.witness_arguments.empty()) return false;
    const Qbaf& g0 = v.witness_graphs.front();
    DegreeMap d0 = evaluate(g0, s);

    switch (v.principle) {
        case Principle::A1: {
            if (v.witness_graphs.size() != 2 || v.witness_arguments.size() != 2) return false;
            DegreeMap d1 = evaluate(v.witness_graphs[1], s);
            return std::abs(degree_of(d0, v.witness_arguments[0]) -
                            degree_of(d1, v.witness_arguments[1])) > kTol;
        }
        case Principle::A2: {
            if (v.witness_graphs.size() != 2) return false;
            const Qbaf& g1 = v.witness_graphs[1];
            DegreeMap d1 = evaluate(g1, s);
            DegreeMap du = evaluate(disjoint_union(g0, g1), s);
            const ArgumentId& id = v.witness_arguments[0];
            const DegreeMap& sep = g0.has_argument(id) ? d0 : d1;
            return std::abs(degree_of(sep, id) - degree_of(du, id)) > kTol;
        }
        case Principle::A3: {
            if (v.witness_graphs.size() != 2) return false;
            DegreeMap d1 = evaluate(v.witness_graphs[1], s);
            const ArgumentId& id = v.witness_arguments[0];
            return std::abs(degree_of(d0, id) - degree_of(d1, id)) > kTol;
        }
        case Principle::A4:
        case Principle::A6: {
            if (v.witness_arguments.size() != 2) return false;
            return std::abs(degree_of(d0, v.witness_arguments[0]) -
                            degree_of(d0, v.witness_arguments[1])) > kTol;
        }
        case Principle::A5: {
            const ArgumentId& id = v.witness_arguments[0];
            return degree_of(d0, id) != g0.weight(id);
        }
        case Principle::A7:
        case Principle::A8: {
            return degree_of(d0, v.witness_arguments[0]) <
                   degree_of(d0, v.witness_arguments[1]) - kTol;
        }
        case Principle::A7_strict:
        case Principle::A8_strict: {
            return !(degree_of(d0, v.witness_arguments[0]) >
                     degree_of(d0, v.witness_arguments[1]));
        }
        case Principle::A9: {
            const ArgumentId& id = v.witness_arguments[0];
            const double deg = degree_of(d0, id);
            const double w = g0.weight(id);
            return w > 0.0 && w < 1.0 && !(deg > 0.0 && deg < 1.0);
        }
        case Principle::A10: {
            return degree_of(d0, v.witness_arguments[0]) >
                   degree_of(d0, v.witness_arguments[1]) + kTol;
        }
        case Principle::A10_strict: {
            return std::abs(degree_of(d0, v.witness_arguments[0]) -
                            degree_of(d0, v.witness_arguments[1])) > kTol;
        }
        case Principle::A11: {
            const ArgumentId& id = v.witness_arguments[0];
            return weakening_premise(g0, d0, id) && !(degree_of(d0, id) < g0.weight(id));
        }
        case Principle::A12: {
            const ArgumentId& id = v.witness_arguments[0];
            return strengthening_premise(g0, d0, id) && !(degree_of(d0, id) > g0.weight(id));
        }
    }
    return false;
}

// --- hypothesis probes -------------------------------------------------------

namespace {

std::vector<std::vector<double>> probe_tuples(double step, int max_arity) {
    const int steps = static_cast<int>(std::lround(1.0 / step));
    std::vector<std::vector<double>> out;
    for (int arity = 1; arity <= max_arity; ++arity) {
        std::vector<int> idx(arity, 0);
        while (true) {
            std::vector<double> t(arity);
            for (int i = 0; i < arity; ++i) t[i] = static_cast<double>(idx[i]) / steps;
            out.push_back(std::move(t));
            int pos = arity - 1;
            while (pos >= 0 && ++idx[pos] > steps) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

std::optional<double> try_aggregate(const Aggregator& agg, const std::vector<double>& vals) {
    try {
        return aggregate(agg, vals, true);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

}  // namespace

bool zero_neutral(const Aggregator& agg) {
    for (const auto& t : probe_tuples(0.25, 3)) {
        auto base = try_aggregate(agg, t);
        auto extended = t;
        extended.push_back(0.0);
        auto with_zero = try_aggregate(agg, extended);
        if (!base || !with_zero) continue;
        if (std::abs(*base - *with_zero) > kTol) return false;
    }
    // the empty multiset must also absorb a zero
    auto single = try_aggregate(agg, {0.0});
    if (single && std::abs(*single - agg.empty_value) > kTol) return false;
    return true;
}

bool monotone_aggregator(const Aggregator& agg, bool strict) {
    for (const auto& t : probe_tuples(0.25, 3)) {
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] + 0.25 > 1.0) continue;
            auto raised = t;
            raised[i] += 0.25;
            auto lo = try_aggregate(agg, t);
            auto hi = try_aggregate(agg, raised);
            if (!lo || !hi) continue;
            if (strict ? !(*hi > *lo + kTol) : *hi < *lo - kTol) return false;
        }
    }
    return true;
}

bool combiner_orientation_ok(const Combiner& comb, bool strict) {
    const double h = 0.25;
    for (double x = 0.0; x <= 1.0 + 1e-12; x += h) {
        for (double y = 0.0; y <= 1.0 + 1e-12; y += h) {
            for (double z = 0.0; z <= 1.0 + 1e-12; z += h) {
                const double base = comb.eval(x, y, z);
                if (x + h <= 1.0 + 1e-12) {
                    const double up = comb.eval(x + h, y, z);
                    if (strict ? !(up < base - kTol) : up > base + kTol) return false;
                }
                if (y + h <= 1.0 + 1e-12) {
                    const double up = comb.eval(x, y + h, z);
                    if (strict ? !(up > base + kTol) : up < base - kTol) return false;
                }
            }
        }
    }
    return true;
}

bool stability_compatible(const Combiner& comb) {
    for (int i = 0; i <= 10; ++i) {
        const double z = static_cast<double>(i) / 10;
        if (std::abs(comb.eval(0.0, 0.0, z) - z) > kTol) return false;
    }
    return true;
}

PropositionReport verify_proposition(int n, const std::vector<Semantics>& sems,
                                     const GeneratorConfig& cfg) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("verify_proposition: n must lie in [2, 6]");
    PropositionReport r;
    r.proposition = n;
    for (const auto& s : sems) {
        bool applies = true;
        std::vector<Principle> targets;
        switch (n) {
            case 2:
                targets = {Principle::A1, Principle::A2, Principle::A3, Principle::A4};
                break;
            case 3:
                applies = s.attack_agg.empty_value == s.attack_agg.codomain.lo &&
                          s.support_agg.empty_value == s.support_agg.codomain.lo &&
                          stability_compatible(s.combiner);
                targets = {Principle::A5};
                break;
            case 4:
                applies = zero_neutral(s.attack_agg) && zero_neutral(s.support_agg);
                targets = {Principle::A6};
                break;
            case 5:
                applies = monotone_aggregator(s.attack_agg, false) &&
                          monotone_aggregator(s.support_agg, false) &&
                          combiner_orientation_ok(s.combiner, false);
                targets = {Principle::A8};
                if (applies && monotone_aggregator(s.attack_agg, true) &&
                    monotone_aggregator(s.support_agg, true) &&
                    combiner_orientation_ok(s.combiner, true))
                    targets.push_back(Principle::A8_strict);
                break;
            case 6:
                applies = zero_neutral(s.attack_agg) && zero_neutral(s.support_agg) &&
                          monotone_aggregator(s.attack_agg, false) &&
                          monotone_aggregator(s.support_agg, false) &&
                          combiner_orientation_ok(s.combiner, false);
                targets = {Principle::A7};
                if (applies && monotone_aggregator(s.attack_agg, true) &&
                    monotone_aggregator(s.support_agg, true) &&
                    combiner_orientation_ok(s.combiner, true))
                    targets.push_back(Principle::A7_strict);
                break;
        }
        if (!applies) {
            r.skipped.push_back(s.label);
            continue;
        }
        r.checked.push_back(s.label);
        for (Principle p : targets) {
            PrincipleVerdict v = check_principle(s, p, cfg);
            if (v.violated) {
                r.all_hold = false;
                r.failures.push_back(std::move(v));
            }
        }
    }
    return r;
}

// --- json --------------------------------------------------------------------

std::string to_json(const PrincipleVerdict& v) {
    nlohmann::json j;
    j["principle"] = to_string(v.principle);
    j["status"] = v.violated ? "violated" : "no-counterexample";
    j["trials_run"] = v.trials_run;
    j["instances"] = v.instances;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.violated) {
        nlohmann::json w;
        if (!v.witness_graphs.empty()) {
            w["graphs"] = nlohmann::json::array();
            for (const auto& g : v.witness_graphs)
                w["graphs"].push_back(nlohmann::json::parse(serialize_qbaf(g)));
        }
        if (!v.witness_arguments.empty()) w["arguments"] = v.witness_arguments;
        if (!v.witness_tuple.empty()) w["tuple"] = v.witness_tuple;
        j["witness"] = w;
    }
    return j.dump(2);
}

std::string to_json(const PropositionReport& r) {
    nlohmann::json j;
    j["proposition"] = r.proposition;
    j["checked"] = r.checked;
    j["skipped"] = r.skipped;
    j["all_hold"] = r.all_hold;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures) j["failures"].push_back(nlohmann::json::parse(to_json(f)));
    return j.dump(2);
}

}  // namespace qbaf
