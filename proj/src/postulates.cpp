#include "qbaf/postulates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qbaf/numeric.hpp"

namespace qbaf {

namespace {

constexpr double kTol = 1e-9;        // equality tolerance
constexpr double kProbeDelta = 1e-4;  // continuity probe offset
constexpr double kLipschitz = 100.0;  // slope beyond which a jump is flagged
constexpr double kProbeSlack = 1e-6;

// deterministic tuple pool shared by all postulates: exhaustive grid tuples
// for arity <= 3, seeded uniform tuples for the larger arities
struct Pool {
    std::vector<double> grid;
    std::vector<std::vector<std::vector<double>>> by_arity;  // index 0 unused

    const std::vector<std::vector<double>>& tuples(int arity) const {
        return by_arity.at(static_cast<std::size_t>(arity));
    }
};

Pool build_pool(const PostulateConfig& cfg) {
    Pool pool;
    int steps = static_cast<int>(std::lround(1.0 / cfg.grid_step));
    for (int i = 0; i <= steps; ++i)
        pool.grid.push_back(static_cast<double>(i) / static_cast<double>(steps));

    pool.by_arity.resize(static_cast<std::size_t>(cfg.max_arity) + 1);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int random_arities = std::max(0, cfg.max_arity - 3);
    int per_arity = random_arities > 0 ? cfg.random_tuples / random_arities : 0;

    for (int arity = 1; arity <= cfg.max_arity; ++arity) {
        auto& out = pool.by_arity[static_cast<std::size_t>(arity)];
        if (arity <= 3) {
            std::vector<int> idx(static_cast<std::size_t>(arity), 0);
            while (true) {
                std::vector<double> t(static_cast<std::size_t>(arity));
                for (int i = 0; i < arity; ++i)
                    t[static_cast<std::size_t>(i)] = pool.grid[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                out.push_back(std::move(t));
                int pos = arity - 1;
                while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == static_cast<int>(pool.grid.size()))
                    idx[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        } else {
            for (int n = 0; n < per_arity; ++n) {
                std::vector<double> t(static_cast<std::size_t>(arity));
                for (double& v : t) v = unit(rng);
                out.push_back(std::move(t));
            }
        }
    }
    return pool;
}

// every check evaluates through here: counts samples and skips tuples the
// aggregator is undefined on
class Eval {
public:
    explicit Eval(const Aggregator& agg) : agg_(agg) {}

    std::optional<double> operator()(const std::vector<double>& v) {
        ++used_;
        try {
            return aggregate(agg_, v, true);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }

    long long used() const { return used_; }

private:
    const Aggregator& agg_;
    long long used_ = 0;
};

std::vector<double> appended(const std::vector<double>& t, double e) {
    std::vector<double> out = t;
    out.push_back(e);
    return out;
}

std::vector<double> concat(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

PostulateVerdict check_boundary(Eval& ev, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P1, PostulateStatus::holds_on_sample, {}, {}, 0};
    for (int n = 1; n <= cfg.max_arity; ++n) {
        std::vector<double> zeros(static_cast<std::size_t>(n), 0.0);
        std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
        auto fz = ev(zeros);
        if (fz && std::abs(*fz - 0.0) > kTol) {
            v.status = PostulateStatus::violated;
            v.witness = {zeros};
            return v;
        }
        auto fo = ev(ones);
        if (fo && std::abs(*fo - 1.0) > kTol) {
            v.status = PostulateStatus::violated;
            v.witness = {ones};
            return v;
        }
    }
    return v;
}

PostulateVerdict check_monotony(Eval& ev, const Pool& pool, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P2, PostulateStatus::holds_on_sample, {}, {}, 0};
    for (int arity = 1; arity <= cfg.max_arity; ++arity) {
        for (const auto& t : pool.tuples(arity)) {
            auto base = ev(t);
            if (!base) continue;
            for (std::size_t i = 0; i < t.size(); ++i) {
                double up = t[i] + cfg.grid_step;
                if (up > 1.0) continue;
                std::vector<double> raised = t;
                raised[i] = up;
                auto fr = ev(raised);
                if (fr && *fr < *base - kTol) {
                    v.status = PostulateStatus::violated;
                    v.witness = {t, raised};
                    return v;
                }
            }
        }
    }
    return v;
}

PostulateVerdict check_continuity(Eval& ev, const Pool& pool) {
    PostulateVerdict v{Postulate::P3, PostulateStatus::heuristic_holds, {}, {}, 0};
    double threshold = kLipschitz * kProbeDelta + kProbeSlack;
    auto probe = [&](const std::vector<double>& a, const std::vector<double>& b) {
        auto fa = ev(a), fb = ev(b);
        if (fa && fb && std::abs(*fa - *fb) > threshold) {
            v.status = PostulateStatus::violated;
            v.witness = {a, b};
            return true;
        }
        return false;
    };
    // walk towards each boundary of the unit square along grid lines
    for (double t : pool.grid) {
        if (probe({0.0, t}, {kProbeDelta, t})) return v;
        if (probe({1.0, t}, {1.0 - kProbeDelta, t})) return v;
        if (probe({t, 0.0}, {t, kProbeDelta})) return v;
        if (probe({t, 1.0}, {t, 1.0 - kProbeDelta})) return v;
    }
    return v;
}

PostulateVerdict check_symmetry(Eval& ev, const Pool& pool, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P4, PostulateStatus::holds_on_sample, {}, {}, 0};
    constexpr std::size_t kMaxTuples = 2000;
    for (int arity = 2; arity <= cfg.max_arity; ++arity) {
        const auto& tuples = pool.tuples(arity);
        std::size_t count = std::min(tuples.size(), kMaxTuples);
        for (std::size_t k = 0; k < count; ++k) {
            const auto& t = tuples[k];
            auto ref = ev(t);
            if (!ref) continue;
            std::vector<double> perm = t;
            std::sort(perm.begin(), perm.end());
            do {
                auto fp = ev(perm);
                if (fp && std::abs(*fp - *ref) > kTol) {
                    v.status = PostulateStatus::violated;
                    v.witness = {t, perm};
                    return v;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return v;
}

PostulateVerdict check_idempotence(Eval& ev, const Pool& pool, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P5, PostulateStatus::holds_on_sample, {}, {}, 0};
    for (int arity = 1; arity <= cfg.max_arity; ++arity) {
        for (double x : pool.grid) {
            std::vector<double> t(static_cast<std::size_t>(arity), x);
            auto f = ev(t);
            if (f && std::abs(*f - x) > kTol) {
                v.status = PostulateStatus::violated;
                v.witness = {t};
                return v;
            }
        }
    }
    return v;
}

PostulateVerdict check_decomposability(Eval& ev, const Pool& pool, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P6, PostulateStatus::holds_on_sample, {}, {}, 0};
    // stride the arity-3 block so pair counts stay reasonable
    auto block = [&](int arity) {
        std::vector<const std::vector<double>*> out;
        const auto& tuples = pool.tuples(arity);
        std::size_t stride = arity >= 3 ? 7 : 1;
        for (std::size_t i = 0; i < tuples.size(); i += stride) out.push_back(&tuples[i]);
        return out;
    };
    int top = std::min(3, cfg.max_arity);
    for (int n = 1; n <= top; ++n) {
        auto left = block(n);
        for (int m = 1; m <= top; ++m) {
            auto right = block(m);
            for (const auto* x : left) {
                auto fx = ev(*x);
                if (!fx) continue;
                for (const auto* y : right) {
                    auto fy = ev(*y);
                    if (!fy) continue;
                    auto outer = ev({*fx, *fy});
                    auto whole = ev(concat(*x, *y));
                    if (outer && whole && std::abs(*outer - *whole) > kTol) {
                        v.status = PostulateStatus::violated;
                        v.witness = {*x, *y};
                        return v;
                    }
                }
            }
        }
    }
    return v;
}

PostulateVerdict check_min_bound(Eval& ev, const Pool& pool, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P7, PostulateStatus::holds_on_sample, {}, {}, 0};
    for (int arity = 1; arity <= cfg.max_arity; ++arity) {
        for (const auto& t : pool.tuples(arity)) {
            auto f = ev(t);
            if (f && *f > *std::min_element(t.begin(), t.end()) + kTol) {
                v.status = PostulateStatus::violated;
                v.witness = {t};
                return v;
            }
        }
    }
    return v;
}

PostulateVerdict check_max_bound(Eval& ev, const Pool& pool, const PostulateConfig& cfg) {
    PostulateVerdict v{Postulate::P8, PostulateStatus::holds_on_sample, {}, {}, 0};
    for (int arity = 1; arity <= cfg.max_arity; ++arity) {
        for (const auto& t : pool.tuples(arity)) {
            auto f = ev(t);
            if (f && *f < *std::max_element(t.begin(), t.end()) - kTol) {
                v.status = PostulateStatus::violated;
                v.witness = {t};
                return v;
            }
        }
    }
    return v;
}

// shared scan for neutral (want_neutral) and absorbing elements: a candidate
// must pass every multiset it is defined on; the violated witness records one
// failing multiset per candidate, [e, M...]
PostulateVerdict check_element(Eval& ev, const Pool& pool, const PostulateConfig& cfg,
                               bool want_neutral) {
    PostulateVerdict v{want_neutral ? Postulate::P9 : Postulate::P10,
                       PostulateStatus::holds_on_sample, {}, {}, 0};
    std::vector<std::vector<double>> failures;
    for (double e : pool.grid) {
        bool works = true;
        std::optional<std::vector<double>> failing;
        for (int arity = 1; arity <= cfg.max_arity - 1 && works; ++arity) {
            const auto& tuples = pool.tuples(arity);
            std::size_t stride = arity >= 3 ? 7 : 1;
            for (std::size_t i = 0; i < tuples.size() && works; i += stride) {
                const auto& m = tuples[i];
                auto fm = ev(m);
                auto fme = ev(appended(m, e));
                if (!fme || (want_neutral && !fm)) continue;
                double expect = want_neutral ? *fm : e;
                if (std::abs(*fme - expect) > kTol) {
                    works = false;
                    std::vector<double> entry = {e};
                    entry.insert(entry.end(), m.begin(), m.end());
                    failing = std::move(entry);
                }
            }
        }
        if (works) {
            v.element = e;
            return v;
        }
        if (failing) failures.push_back(*failing);
    }
    v.status = PostulateStatus::violated;
    v.witness = std::move(failures);
    return v;
}

// P11 and P12 run over the same pairs of equal-arity tuples with a shared
// extension value; seeded separately so pair sampling is reproducible
PostulateVerdict check_extension(Eval& ev, const Pool& pool, const PostulateConfig& cfg,
                                 bool preserving) {
    PostulateVerdict v{preserving ? Postulate::P11 : Postulate::P12,
                       PostulateStatus::holds_on_sample, {}, {}, 0};
    std::mt19937_64 rng(cfg.seed + (preserving ? 11 : 12));
    for (int arity = 1; arity <= cfg.max_arity - 1; ++arity) {
        const auto& tuples = pool.tuples(arity);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        if (tuples.size() <= 125) {
            for (std::size_t i = 0; i < tuples.size(); ++i)
                for (std::size_t j = 0; j < tuples.size(); ++j) pairs.emplace_back(i, j);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
            for (int k = 0; k < 4000; ++k) pairs.emplace_back(pick(rng), pick(rng));
        }
        for (const auto& [i, j] : pairs) {
            const auto& x = tuples[i];
            const auto& y = tuples[j];
            auto fx = ev(x), fy = ev(y);
            if (!fx || !fy) continue;
            for (double z : pool.grid) {
                auto fxz = ev(appended(x, z));
                auto fyz = ev(appended(y, z));
                if (!fxz || !fyz) continue;
                // the strict premise needs the same noise guard as the
                // conclusion, otherwise two mathematically equal extensions
                // a rounding step apart manufacture a violation
                bool bad = preserving ? (*fx <= *fy && *fxz > *fyz + kTol)
                                      : (*fxz < *fyz - kTol && *fx > *fy + kTol);
                if (bad) {
                    v.status = PostulateStatus::violated;
                    v.witness = {x, y, {z}};
                    return v;
                }
            }
        }
    }
    return v;
}

PostulateVerdict dispatch(const Aggregator& agg, Postulate p, const PostulateConfig& cfg,
                          const Pool& pool) {
    Eval ev(agg);
    PostulateVerdict v;
    switch (p) {
        case Postulate::P1: v = check_boundary(ev, cfg); break;
        case Postulate::P2: v = check_monotony(ev, pool, cfg); break;
        case Postulate::P3: v = check_continuity(ev, pool); break;
        case Postulate::P4: v = check_symmetry(ev, pool, cfg); break;
        case Postulate::P5: v = check_idempotence(ev, pool, cfg); break;
        case Postulate::P6: v = check_decomposability(ev, pool, cfg); break;
        case Postulate::P7: v = check_min_bound(ev, pool, cfg); break;
        case Postulate::P8: v = check_max_bound(ev, pool, cfg); break;
        case Postulate::P9: v = check_element(ev, pool, cfg, true); break;
        case Postulate::P10: v = check_element(ev, pool, cfg, false); break;
        case Postulate::P11: v = check_extension(ev, pool, cfg, true); break;
        case Postulate::P12: v = check_extension(ev, pool, cfg, false); break;
    }
    v.samples_used = ev.used();
    return v;
}

}  // namespace

const std::vector<Postulate>& all_postulates() {
    static const std::vector<Postulate> all = {
        Postulate::P1, Postulate::P2,  Postulate::P3,  Postulate::P4,
        Postulate::P5, Postulate::P6,  Postulate::P7,  Postulate::P8,
        Postulate::P9, Postulate::P10, Postulate::P11, Postulate::P12};
    return all;
}

std::string to_string(Postulate p) {
    return "P" + std::to_string(static_cast<int>(p) + 1);
}

std::string postulate_description(Postulate p) {
    switch (p) {
        case Postulate::P1: return "boundary values";
        case Postulate::P2: return "monotony";
        case Postulate::P3: return "continuity";
        case Postulate::P4: return "symmetry";
        case Postulate::P5: return "idempotence";
        case Postulate::P6: return "decomposability";
        case Postulate::P7: return "bounded above by the minimum";
        case Postulate::P8: return "bounded below by the maximum";
        case Postulate::P9: return "neutral element";
        case Postulate::P10: return "absorbing element";
        case Postulate::P11: return "order preservation under a shared extension";
        case Postulate::P12: return "order reflection from a shared extension";
    }
    return "";
}

Postulate postulate_from_string(const std::string& name) {
    for (Postulate p : all_postulates())
        if (to_string(p) == name) return p;
    throw std::invalid_argument("unknown postulate '" + name + "'");
}

std::string to_string(PostulateStatus s) {
    switch (s) {
        case PostulateStatus::holds_on_sample: return "holds";
        case PostulateStatus::heuristic_holds: return "heuristic";
        case PostulateStatus::violated: return "violated";
    }
    return "";
}

PostulateVerdict check_postulate(const Aggregator& agg, Postulate p,
                                 const PostulateConfig& cfg) {
    Pool pool = build_pool(cfg);
    return dispatch(agg, p, cfg, pool);
}

std::vector<PostulateVerdict> check_all_postulates(const Aggregator& agg,
                                                   const PostulateConfig& cfg) {
    Pool pool = build_pool(cfg);
    std::vector<PostulateVerdict> out;
    for (Postulate p : all_postulates()) out.push_back(dispatch(agg, p, cfg, pool));
    return out;
}

bool witness_reproduces(const Aggregator& agg, const PostulateVerdict& verdict) {
    if (verdict.status != PostulateStatus::violated) return true;
    if (verdict.witness.empty()) return false;
    auto ev = [&](const std::vector<double>& v) -> std::optional<double> {
        try {
            return aggregate(agg, v, true);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    const auto& w = verdict.witness;
    switch (verdict.postulate) {
        case Postulate::P1: {
            auto f = ev(w[0]);
            if (!f) return false;
            double target = w[0][0];  // all-zero or all-one tuple
            return std::abs(*f - target) > kTol;
        }
        case Postulate::P2: {
            if (w.size() != 2) return false;
            auto lo = ev(w[0]), hi = ev(w[1]);
            if (!lo || !hi) return false;
            for (std::size_t i = 0; i < w[0].size(); ++i)
                if (w[0][i] > w[1][i]) return false;
            return *hi < *lo - kTol;
        }
        case Postulate::P3: {
            if (w.size() != 2) return false;
            auto fa = ev(w[0]), fb = ev(w[1]);
            if (!fa || !fb) return false;
            double din = 0.0;
            for (std::size_t i = 0; i < w[0].size(); ++i)
                din = std::max(din, std::abs(w[0][i] - w[1][i]));
            return std::abs(*fa - *fb) > kLipschitz * din + kProbeSlack;
        }
        case Postulate::P4: {
            if (w.size() != 2) return false;
            auto a = w[0], b = w[1];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return false;
            auto fa = ev(w[0]), fb = ev(w[1]);
            return fa && fb && std::abs(*fa - *fb) > kTol;
        }
        case Postulate::P5: {
            auto f = ev(w[0]);
            return f && std::abs(*f - w[0][0]) > kTol;
        }
        case Postulate::P6: {
            if (w.size() != 2) return false;
            auto fx = ev(w[0]), fy = ev(w[1]);
            if (!fx || !fy) return false;
            auto outer = ev({*fx, *fy});
            auto whole = ev(concat(w[0], w[1]));
            return outer && whole && std::abs(*outer - *whole) > kTol;
        }
        case Postulate::P7: {
            auto f = ev(w[0]);
            return f && *f > *std::min_element(w[0].begin(), w[0].end()) + kTol;
        }
        case Postulate::P8: {
            auto f = ev(w[0]);
            return f && *f < *std::max_element(w[0].begin(), w[0].end()) - kTol;
        }
        case Postulate::P9:
        case Postulate::P10: {
            for (const auto& entry : w) {
                if (entry.empty()) return false;
                double e = entry.front();
                std::vector<double> m(entry.begin() + 1, entry.end());
                auto fm = ev(m);
                auto fme = ev(appended(m, e));
                if (!fme) return false;
                double expect = verdict.postulate == Postulate::P9 ? (fm ? *fm : 0.0) : e;
                if (verdict.postulate == Postulate::P9 && !fm) return false;
                if (std::abs(*fme - expect) <= kTol) return false;
            }
            return true;
        }
        case Postulate::P11: {
            if (w.size() != 3 || w[2].size() != 1) return false;
            double z = w[2][0];
            auto fx = ev(w[0]), fy = ev(w[1]);
            auto fxz = ev(appended(w[0], z)), fyz = ev(appended(w[1], z));
            if (!fx || !fy || !fxz || !fyz) return false;
            return *fx <= *fy && *fxz > *fyz + kTol;
        }
        case Postulate::P12: {
            if (w.size() != 3 || w[2].size() != 1) return false;
            double z = w[2][0];
            auto fx = ev(w[0]), fy = ev(w[1]);
            auto fxz = ev(appended(w[0], z)), fyz = ev(appended(w[1], z));
            if (!fx || !fy || !fxz || !fyz) return false;
            return *fxz < *fyz - kTol && *fx > *fy + kTol;
        }
    }
    return false;
}

std::string postulate_matrix_csv(const std::vector<Aggregator>& aggs,
                                 const PostulateConfig& cfg) {
    std::ostringstream out;
    out << "aggregator";
    for (Postulate p : all_postulates()) out << "," << to_string(p);
    out << "\n";
    for (const auto& agg : aggs) {
        out << agg.name;
        for (const auto& verdict : check_all_postulates(agg, cfg)) {
            out << "," << to_string(verdict.status);
            if (verdict.element) out << ":e=" << format_double(*verdict.element);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qbaf
