#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbaf {

using ArgumentId = std::string;

struct Argument {
    ArgumentId id;
    double weight = 0.0;
};

// directed edge from an attacker/supporter to its target; `order` is an
// optional rank consumed by order-sensitive aggregators and ignored by
// commutative ones
struct Edge {
    ArgumentId from;
    ArgumentId to;
    std::optional<int> order;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// raised when a cyclic graph is ordered or evaluated; `cycle` lists the
// vertices of one witness cycle, first and last entries equal
class CycleError : public std::runtime_error {
public:
    explicit CycleError(std::vector<ArgumentId> witness);

    std::vector<ArgumentId> cycle;
};

// weighted bipolar argumentation graph, immutable after construction.
//
// the constructor only rejects states it cannot represent (empty or duplicate
// argument ids); everything else, including weights outside [0,1], edges whose
// endpoints are unknown and edges present in both relations, is representable
// and reported by validate(). duplicate edges within one relation collapse to
// the first occurrence and leave a warning behind.
class Qbaf {
public:
    Qbaf() = default;
    Qbaf(std::vector<Argument> arguments, std::vector<Edge> attacks, std::vector<Edge> supports);

    const std::vector<ArgumentId>& arguments() const { return ids_; }
    const std::vector<Edge>& attacks() const { return attacks_; }
    const std::vector<Edge>& supports() const { return supports_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    bool has_argument(const ArgumentId& id) const;
    double weight(const ArgumentId& id) const;

    // direct parents of `id` in each relation, sorted by id; unknown targets throw
    std::vector<ArgumentId> attackers(const ArgumentId& id) const;
    std::vector<ArgumentId> supporters(const ArgumentId& id) const;

    // incoming edges of `id`, sorted by source id; used where edge order ranks matter
    const std::vector<Edge>& attack_edges_onto(const ArgumentId& id) const;
    const std::vector<Edge>& support_edges_onto(const ArgumentId& id) const;

    friend bool operator==(const Qbaf& a, const Qbaf& b) {
        return a.ids_ == b.ids_ && a.weights_ == b.weights_ && a.attacks_ == b.attacks_ &&
               a.supports_ == b.supports_;
    }

private:
    std::vector<ArgumentId> ids_;  // sorted
    std::map<ArgumentId, double> weights_;
    std::vector<Edge> attacks_;   // sorted by (from, to)
    std::vector<Edge> supports_;  // sorted by (from, to)
    std::map<ArgumentId, std::vector<Edge>> in_attacks_;
    std::map<ArgumentId, std::vector<Edge>> in_supports_;
    std::vector<std::string> warnings_;

    void require_argument(const ArgumentId& id) const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

// checks the structural invariants: edge endpoints exist, no edge sits in both
// relations, every weight lies in [0,1]; violations are data, never exceptions
ValidationReport validate(const Qbaf& g);

// json round trip; parse_qbaf rejects malformed documents and graphs whose
// validation report is non-empty
Qbaf parse_qbaf(const std::string& document);
std::string serialize_qbaf(const Qbaf& g);

// every argument once, sources before targets over attacks and supports;
// throws CycleError on cyclic graphs
std::vector<ArgumentId> topological_order(const Qbaf& g);

// componentwise union of two graphs with disjoint argument sets
Qbaf disjoint_union(const Qbaf& g, const Qbaf& h);

// isomorphic copy under a total injective id mapping
Qbaf relabel(const Qbaf& g, const std::map<ArgumentId, ArgumentId>& mapping);

}  // namespace qbaf
