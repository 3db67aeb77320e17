#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbaf/engine.hpp"
#include "qbaf/graph.hpp"

namespace qbaf {

// the worked-example graphs bundled with the library.  the string form of an
// id is the token the CLI accepts (`graphs --id fig6_final`); fig6_final is
// the 23-argument benchmark graph the sweep and the results table run on
enum class ReferenceGraphId {
    fig1,                     // one topic, two attackers, two supporters
    fig2_commutativity,       // four attackers enunciated in a fixed order
    fig3_idempotence,         // two attackers with equal weights
    fig4_weak_reinf,          // four attackers spanning weak and strong
    fig5_continuity_a,        // saturation scenario just below the threshold
    fig5_continuity_b,        // same graph with the threshold reached
    fig_composition_before,   // two targets with separate attacker pairs
    fig_composition_after,    // same plus one attacker shared by both targets
    fig_decomposition_before, // two targets plus a shared attacker
    fig_decomposition_after,  // same with the shared attacker removed
    fig8_weakening_axiom,     // dominated supporters next to a weak attacker
    fig6_final,               // benchmark graph: topic a, hubs e and i
};

const std::vector<ReferenceGraphId>& reference_graph_ids();
std::string to_string(ReferenceGraphId id);
// accepts the exact string forms of the enum values; throws
// std::invalid_argument for anything else
ReferenceGraphId reference_graph_from_string(const std::string& name);

// hard-coded construction of the graph behind an id
Qbaf reference_graph(ReferenceGraphId id);

// one semantics evaluated on fig6_final: the three function names and the
// five values the results table reports.  pi columns carry whatever scale the
// attack/support aggregator produces (sums for ebs/qe, [0,1] otherwise)
struct SweepRow {
    std::string phi_r;
    std::string phi_s;
    std::string phi_f;
    double deg_i = 0.0;
    double deg_e = 0.0;
    double pi_r_a = 0.0;
    double pi_s_a = 0.0;
    double deg_a = 0.0;
};

// evaluates the three literature semantics (dfquad, ebs, qe) followed by
// every triple over the eight classical aggregators without the two drastic
// operators, enumerated lexicographically by (phi_r, phi_s, phi_f) name with
// the phi_f slot adapted via final_from: 3 + 8^3 = 515 rows, deterministic
std::vector<SweepRow> sweep_fig6();

// one numeric cell of the results-table comparison
struct Table4Cell {
    std::string column;        // deg_i, deg_e, pi_r_a, pi_s_a or deg_a
    double computed = 0.0;     // full-precision evaluation
    double rounded = 0.0;      // two-decimal presentation rounding
    double expected = 0.0;     // the reference value the table prints
    bool pass = false;         // |rounded - expected| <= 0.01
    bool quarantined = false;  // documented discrepancy, excused from pass
};

struct Table4Row {
    std::string id;  // S1 .. S15
    std::string phi_r;
    std::string phi_s;
    std::string phi_f;
    std::array<Table4Cell, 5> cells;
    bool pass = false;  // every cell passes or is quarantined
};

struct Table4Report {
    std::vector<Table4Row> rows;  // 15
    int cells_pass = 0;
    int cells_quarantined = 0;
    bool all_rows_pass = false;
    std::vector<std::string> notes;  // one explanation per quarantined cell
};

// recomputes the fifteen reference semantics on fig6_final and compares every
// numeric cell against the expected table at +-0.01 after rounding.  the one
// expected cell that is inconsistent with its own row (S7 pi_r_a) is
// quarantined with a note instead of failing the row
Table4Report table4_report();

struct Histogram {
    double bin_width = 0.04;
    std::array<int, 25> counts{};
    int total = 0;
    bool all_bins_populated = false;
};

// 25-bin histogram of deg_a over the full sweep.  a value lands in bin
// floor(v / 0.04); values sitting exactly on an edge go to the higher bin and
// v = 1 joins the last bin.  throws std::invalid_argument unless given
// exactly 515 rows
Histogram degree_histogram(const std::vector<SweepRow>& rows);

// one recomputed value from the worked examples, compared against the value
// the example states at its printed precision
struct ExampleCheck {
    std::string name;    // stable dotted identifier, e.g. "composition.after.pi_r_a1"
    std::string detail;  // what is recomputed, in words
    double computed = 0.0;
    double expected = 0.0;
    int decimals = 2;      // precision of the expected value
    bool matches = false;  // round(computed, decimals) == expected
    bool flagged = false;  // known discrepancy: reported, not counted as failure
};

// recomputes every printed intermediate of the worked examples: the
// literature degrees and the hand-built semantics on fig1, the aggregator
// showcases on fig2-fig4, the composition/decomposition piecewise functions,
// the saturation scenarios on fig5 and the entanglement example on fig8
std::vector<ExampleCheck> example_checks();

// serialised artifacts; all output is a pure function of the inputs, so two
// runs produce byte-identical bytes
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string table4_csv(const Table4Report& report);
std::string histogram_csv(const Histogram& h);
// bar chart; markers are degrees drawn as reference dots (the CLI passes the
// three literature deg_a values)
std::string histogram_svg(const Histogram& h, const std::vector<double>& markers = {});

// writes `content` to `path`; throws std::runtime_error when the file cannot
// be opened or written
void write_file(const std::string& path, const std::string& content);

}  // namespace qbaf
