#include "qbaf/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qbaf {

namespace {

bool edge_pos_less(const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
}

bool edge_pos_equal(const Edge& a, const Edge& b) {
    return a.from == b.from && a.to == b.to;
}

// sort by (from, to) and drop repeated positions, keeping the first occurrence
std::vector<Edge> canonicalize(std::vector<Edge> edges, const char* relation,
                               std::vector<std::string>& warnings) {
    std::stable_sort(edges.begin(), edges.end(), edge_pos_less);
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!kept.empty() && edge_pos_equal(kept.back(), e)) {
            warnings.push_back("duplicate " + std::string(relation) + " edge (" + e.from + "," +
                               e.to + ") collapsed");
            continue;
        }
        kept.push_back(e);
    }
    return kept;
}

}  // namespace

CycleError::CycleError(std::vector<ArgumentId> witness)
    : std::runtime_error([&witness] {
          std::ostringstream msg;
          msg << "graph has a cycle: [";
          for (size_t i = 0; i < witness.size(); ++i) msg << (i ? "," : "") << witness[i];
          msg << "]";
          return msg.str();
      }()),
      cycle(std::move(witness)) {}

Qbaf::Qbaf(std::vector<Argument> arguments, std::vector<Edge> attacks, std::vector<Edge> supports) {
    for (const Argument& a : arguments) {
        if (a.id.empty()) throw std::invalid_argument("empty argument id");
        if (!weights_.emplace(a.id, a.weight).second)
            throw std::invalid_argument("duplicate argument id '" + a.id + "'");
    }
    ids_.reserve(weights_.size());
    for (const auto& [id, w] : weights_) ids_.push_back(id);

    attacks_ = canonicalize(std::move(attacks), "attack", warnings_);
    supports_ = canonicalize(std::move(supports), "support", warnings_);
    for (const Edge& e : attacks_) in_attacks_[e.to].push_back(e);
    for (const Edge& e : supports_) in_supports_[e.to].push_back(e);
}

bool Qbaf::has_argument(const ArgumentId& id) const { return weights_.count(id) != 0; }

void Qbaf::require_argument(const ArgumentId& id) const {
    if (!has_argument(id)) throw std::invalid_argument("unknown argument '" + id + "'");
}

double Qbaf::weight(const ArgumentId& id) const {
    require_argument(id);
    return weights_.at(id);
}

const std::vector<Edge>& Qbaf::attack_edges_onto(const ArgumentId& id) const {
    require_argument(id);
    static const std::vector<Edge> none;
    auto it = in_attacks_.find(id);
    return it == in_attacks_.end() ? none : it->second;
}

const std::vector<Edge>& Qbaf::support_edges_onto(const ArgumentId& id) const {
    require_argument(id);
    static const std::vector<Edge> none;
    auto it = in_supports_.find(id);
    return it == in_supports_.end() ? none : it->second;
}

std::vector<ArgumentId> Qbaf::attackers(const ArgumentId& id) const {
    std::vector<ArgumentId> out;
    for (const Edge& e : attack_edges_onto(id)) out.push_back(e.from);
    return out;
}

std::vector<ArgumentId> Qbaf::supporters(const ArgumentId& id) const {
    std::vector<ArgumentId> out;
    for (const Edge& e : support_edges_onto(id)) out.push_back(e.from);
    return out;
}

ValidationReport validate(const Qbaf& g) {
    ValidationReport report;
    report.warnings = g.warnings();

    auto check_endpoints = [&](const std::vector<Edge>& edges, const char* relation) {
        for (const Edge& e : edges) {
            if (!g.has_argument(e.from))
                report.violations.push_back("unknown argument '" + e.from + "' referenced by " +
                                            relation + " (" + e.from + "," + e.to + ")");
            if (!g.has_argument(e.to))
                report.violations.push_back("unknown argument '" + e.to + "' referenced by " +
                                            relation + " (" + e.from + "," + e.to + ")");
        }
    };
    check_endpoints(g.attacks(), "attack");
    check_endpoints(g.supports(), "support");

    // attack and support must be disjoint relations
    for (const Edge& e : g.attacks()) {
        for (const Edge& s : g.supports()) {
            if (e.from == s.from && e.to == s.to)
                report.violations.push_back("edge (" + e.from + "," + e.to +
                                            ") is both an attack and a support");
        }
    }

    for (const ArgumentId& id : g.arguments()) {
        double w = g.weight(id);
        if (!(w >= 0.0 && w <= 1.0)) {
            std::ostringstream msg;
            msg << "weight " << w << " of argument '" << id << "' outside [0,1]";
            report.violations.push_back(msg.str());
        }
    }
    return report;
}

Qbaf parse_qbaf(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("malformed document: top level is not an object");

    std::vector<Argument> arguments;
    if (doc.contains("arguments")) {
        if (!doc["arguments"].is_array())
            throw std::invalid_argument("malformed document: 'arguments' is not an array");
        for (const auto& entry : doc["arguments"]) {
            if (!entry.is_object() || !entry.contains("id") || !entry.contains("weight") ||
                !entry["id"].is_string() || !entry["weight"].is_number())
                throw std::invalid_argument(
                    "malformed document: argument entries need an 'id' string and a 'weight' number");
            arguments.push_back({entry["id"].get<std::string>(), entry["weight"].get<double>()});
        }
    }

    auto parse_edges = [&doc](const char* key) {
        std::vector<Edge> edges;
        if (!doc.contains(key)) return edges;
        if (!doc[key].is_array())
            throw std::invalid_argument(std::string("malformed document: '") + key +
                                        "' is not an array");
        for (const auto& entry : doc[key]) {
            bool pair_ok = entry.is_array() && (entry.size() == 2 || entry.size() == 3) &&
                           entry[0].is_string() && entry[1].is_string() &&
                           (entry.size() == 2 || entry[2].is_number_integer());
            if (!pair_ok)
                throw std::invalid_argument(std::string("malformed document: '") + key +
                                            "' entries must be [from,to] or [from,to,order] pairs");
            Edge e{entry[0].get<std::string>(), entry[1].get<std::string>(), std::nullopt};
            if (entry.size() == 3) e.order = entry[2].get<int>();
            edges.push_back(std::move(e));
        }
        return edges;
    };

    Qbaf g(std::move(arguments), parse_edges("attacks"), parse_edges("supports"));
    ValidationReport report = validate(g);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "invalid graph";
        for (const std::string& v : report.violations) msg << "; " << v;
        throw std::invalid_argument(msg.str());
    }
    return g;
}

std::string serialize_qbaf(const Qbaf& g) {
    nlohmann::json doc;
    doc["arguments"] = nlohmann::json::array();
    for (const ArgumentId& id : g.arguments())
        doc["arguments"].push_back({{"id", id}, {"weight", g.weight(id)}});

    auto dump_edges = [](const std::vector<Edge>& edges) {
        nlohmann::json out = nlohmann::json::array();
        for (const Edge& e : edges) {
            nlohmann::json entry = {e.from, e.to};
            if (e.order) entry.push_back(*e.order);
            out.push_back(std::move(entry));
        }
        return out;
    };
    doc["attacks"] = dump_edges(g.attacks());
    doc["supports"] = dump_edges(g.supports());
    return doc.dump(2) + "\n";
}

std::vector<ArgumentId> topological_order(const Qbaf& g) {
    std::map<ArgumentId, std::vector<ArgumentId>> successors;
    std::map<ArgumentId, int> in_degree;
    for (const ArgumentId& id : g.arguments()) in_degree[id] = 0;
    auto add_edges = [&](const std::vector<Edge>& edges) {
        for (const Edge& e : edges) {
            successors[e.from].push_back(e.to);
            ++in_degree[e.to];
        }
    };
    add_edges(g.attacks());
    add_edges(g.supports());

    std::set<ArgumentId> ready;
    for (const auto& [id, deg] : in_degree)
        if (deg == 0) ready.insert(id);

    std::vector<ArgumentId> order;
    order.reserve(g.arguments().size());
    while (!ready.empty()) {
        ArgumentId id = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(id);
        for (const ArgumentId& next : successors[id])
            if (--in_degree[next] == 0) ready.insert(next);
    }
    if (order.size() == g.arguments().size()) return order;

    // stuck: the leftover vertices contain a cycle; first drop the ones that
    // only lead out of the leftover set, then walk successors until one repeats
    std::set<ArgumentId> leftover;
    for (const auto& [id, deg] : in_degree)
        if (deg > 0) leftover.insert(id);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto it = leftover.begin(); it != leftover.end();) {
            bool has_inner_successor = false;
            for (const ArgumentId& next : successors[*it])
                if (leftover.count(next)) {
                    has_inner_successor = true;
                    break;
                }
            if (!has_inner_successor) {
                it = leftover.erase(it);
                shrunk = true;
            } else {
                ++it;
            }
        }
    }

    std::vector<ArgumentId> path;
    std::map<ArgumentId, size_t> position;
    ArgumentId at = *leftover.begin();
    while (position.find(at) == position.end()) {
        position[at] = path.size();
        path.push_back(at);
        for (const ArgumentId& next : successors[at])
            if (leftover.count(next)) {
                at = next;
                break;
            }
    }
    std::vector<ArgumentId> witness(path.begin() + static_cast<long>(position[at]), path.end());
    witness.push_back(at);
    throw CycleError(std::move(witness));
}

Qbaf disjoint_union(const Qbaf& g, const Qbaf& h) {
    for (const ArgumentId& id : h.arguments())
        if (g.has_argument(id))
            throw std::invalid_argument("union of overlapping graphs: argument '" + id +
                                        "' present in both");

    std::vector<Argument> arguments;
    for (const ArgumentId& id : g.arguments()) arguments.push_back({id, g.weight(id)});
    for (const ArgumentId& id : h.arguments()) arguments.push_back({id, h.weight(id)});

    std::vector<Edge> attacks = g.attacks();
    attacks.insert(attacks.end(), h.attacks().begin(), h.attacks().end());
    std::vector<Edge> supports = g.supports();
    supports.insert(supports.end(), h.supports().begin(), h.supports().end());
    return Qbaf(std::move(arguments), std::move(attacks), std::move(supports));
}

Qbaf relabel(const Qbaf& g, const std::map<ArgumentId, ArgumentId>& mapping) {
    std::set<ArgumentId> images;
    for (const ArgumentId& id : g.arguments()) {
        auto it = mapping.find(id);
        if (it == mapping.end())
            throw std::invalid_argument("relabel mapping is partial: no image for '" + id + "'");
        if (!images.insert(it->second).second)
            throw std::invalid_argument("relabel mapping is not injective at '" + it->second + "'");
    }

    auto image = [&mapping](const ArgumentId& id) {
        auto it = mapping.find(id);
        return it == mapping.end() ? id : it->second;
    };
    std::vector<Argument> arguments;
    for (const ArgumentId& id : g.arguments()) arguments.push_back({image(id), g.weight(id)});
    auto map_edges = [&image](const std::vector<Edge>& edges) {
        std::vector<Edge> out;
        for (const Edge& e : edges) out.push_back({image(e.from), image(e.to), e.order});
        return out;
    };
    return Qbaf(std::move(arguments), map_edges(g.attacks()), map_edges(g.supports()));
}

}  // namespace qbaf
