#include "qbaf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbaf/aggregators.hpp"
#include "qbaf/bench.hpp"
#include "qbaf/engine.hpp"
#include "qbaf/graph.hpp"
#include "qbaf/numeric.hpp"
#include "qbaf/postulates.hpp"
#include "qbaf/principles.hpp"

namespace qbaf {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// signals a bad flag value discovered after CLI11 parsing; mapped to exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read file '" + path + "'");
    return buffer.str();
}

std::string join_ids(const std::vector<ArgumentId>& ids, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += ids[i];
    }
    return out;
}

// the seed precedence: explicit flag, then QBAF_SEED, then 1
unsigned long long resolve_seed(bool flag_given, unsigned long long flag_value) {
    if (flag_given) return flag_value;
    const char* env = std::getenv("QBAF_SEED");
    if (!env) return 1;
    std::string text(env);
    bool numeric = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
    if (!numeric) throw UsageError("QBAF_SEED: expected an unsigned integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw UsageError("QBAF_SEED: value out of range: '" + text + "'");
    }
}

const Aggregator& aggregator_for_flag(const std::string& flag, const std::string& name) {
    try {
        return find_aggregator(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Combiner combiner_for_flag(const std::string& flag, const std::string& name) {
    try {
        return find_combiner(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

// shared by eval and principles: a semantics named by its three stages.  the
// lookups run first so a bad name is reported against its flag
Semantics semantics_from_triple(const std::string& phi_r, const std::string& phi_s,
                                const std::string& phi_f) {
    aggregator_for_flag("--phi-r", phi_r);
    aggregator_for_flag("--phi-s", phi_s);
    combiner_for_flag("--phi-f", phi_f);
    return make_semantics(phi_r, phi_s, phi_f);
}

struct EvalOptions {
    std::string path;
    std::string phi_r, phi_s, phi_f;
    std::string semantics;
    int round_digits = -1;  // negative: full precision
};

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    std::string bytes = read_file(path);
    Qbaf g;
    try {
        g = parse_qbaf(bytes);
    } catch (const std::exception& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return kFailure;
    }
    ValidationReport report = validate(g);
    for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
    out << path << ": ok (" << g.arguments().size() << " arguments, " << g.attacks().size()
        << " attacks, " << g.supports().size() << " supports)\n";
    return kOk;
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    bool triple_any = !opt.phi_r.empty() || !opt.phi_s.empty() || !opt.phi_f.empty();
    bool triple_all = !opt.phi_r.empty() && !opt.phi_s.empty() && !opt.phi_f.empty();
    if (!opt.semantics.empty() && triple_any)
        throw UsageError("--semantics cannot be combined with --phi-r/--phi-s/--phi-f");
    if (opt.semantics.empty() && !triple_all)
        throw UsageError(
            "eval needs either --semantics or all three of --phi-r, --phi-s, --phi-f");

    Semantics sem = opt.semantics.empty() ? semantics_from_triple(opt.phi_r, opt.phi_s, opt.phi_f)
                                          : as_aggregative(opt.semantics);

    std::string bytes = read_file(opt.path);
    Qbaf g;
    try {
        g = parse_qbaf(bytes);
    } catch (const std::exception& e) {
        err << "error: " << opt.path << ": " << e.what() << "\n";
        return kFailure;
    }
    std::optional<int> round;
    if (opt.round_digits >= 0) round = opt.round_digits;
    out << scores_csv(evaluate(g, sem), round);
    return kOk;
}

int cmd_postulates(const std::string& agg_name, unsigned long long seed, std::ostream& out) {
    PostulateConfig cfg;
    cfg.seed = seed;
    std::vector<Aggregator> aggs;
    if (agg_name.empty())
        aggs = classical_aggregators();
    else
        aggs.push_back(aggregator_for_flag("--agg", agg_name));
    out << postulate_matrix_csv(aggs, cfg);
    return kOk;
}

int cmd_principles(const std::string& phi_r, const std::string& phi_s, const std::string& phi_f,
                   const std::string& principle_name, int trials, unsigned long long seed,
                   std::ostream& out) {
    Semantics sem = semantics_from_triple(phi_r, phi_s, phi_f);
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    if (!principle_name.empty()) {
        Principle p;
        try {
            p = principle_from_string(principle_name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--principle: ") + e.what());
        }
        out << to_json(check_principle(sem, p, cfg)) << "\n";
        return kOk;
    }
    out << "[";
    bool first = true;
    for (Principle p : all_principles()) {
        out << (first ? "\n" : ",\n") << to_json(check_principle(sem, p, cfg));
        first = false;
    }
    out << "\n]\n";
    return kOk;
}

int cmd_sweep(const std::string& out_dir, std::ostream& out) {
    std::vector<SweepRow> rows = sweep_fig6();
    Histogram hist = degree_histogram(rows);
    std::vector<double> markers{rows[0].deg_a, rows[1].deg_a, rows[2].deg_a};

    std::string sweep_path = out_dir + "/sweep.csv";
    std::string hist_path = out_dir + "/histogram.csv";
    std::string svg_path = out_dir + "/histogram.svg";
    write_file(sweep_path, sweep_csv(rows));
    write_file(hist_path, histogram_csv(hist));
    write_file(svg_path, histogram_svg(hist, markers));

    out << "rows: " << rows.size() << "\n";
    out << "histogram total: " << hist.total << "\n";
    out << "all bins populated: " << (hist.all_bins_populated ? "true" : "false") << "\n";
    out << "deg(a) dfquad = " << format_double(rows[0].deg_a)
        << ", ebs = " << format_double(rows[1].deg_a) << ", qe = " << format_double(rows[2].deg_a)
        << "\n";
    out << "wrote " << sweep_path << ", " << hist_path << ", " << svg_path << "\n";
    return kOk;
}

int cmd_table4(const std::string& out_dir, std::ostream& out) {
    Table4Report report = table4_report();
    if (!out_dir.empty()) write_file(out_dir + "/table4_report.csv", table4_csv(report));

    int rows_pass = 0;
    for (const Table4Row& row : report.rows) {
        if (row.pass) ++rows_pass;
        out << row.id << "  " << row.phi_r << " / " << row.phi_s << " / " << row.phi_f << "\n";
        for (const Table4Cell& c : row.cells) {
            const char* status = c.pass ? "ok" : (c.quarantined ? "QUARANTINED" : "MISMATCH");
            out << "  " << std::left << std::setw(8) << c.column << " computed " << std::setw(20)
                << format_double(c.computed) << " -> " << std::setw(5) << format_double(c.rounded)
                << "  printed " << std::setw(5) << format_double(c.expected) << "  " << status
                << "\n";
        }
    }
    out << "cells: " << report.cells_pass << " match, " << report.cells_quarantined
        << " quarantined\n";
    out << "rows: " << rows_pass << "/" << report.rows.size() << " pass\n";
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    if (!out_dir.empty()) out << "wrote " << out_dir << "/table4_report.csv\n";
    return report.all_rows_pass ? kOk : kFailure;
}

int cmd_examples(std::ostream& out) {
    std::vector<ExampleCheck> checks = example_checks();
    int matched = 0, flagged = 0, unexpected = 0;
    for (const ExampleCheck& c : checks) {
        const char* status;
        if (c.matches) {
            status = "ok";
            ++matched;
        } else if (c.flagged) {
            status = "FLAGGED (documented discrepancy)";
            ++flagged;
        } else {
            status = "MISMATCH";
            ++unexpected;
        }
        out << std::left << std::setw(36) << c.name << " computed " << std::setw(12)
            << format_double(round_to(c.computed, c.decimals)) << " expected " << std::setw(8)
            << format_double(c.expected) << " " << status << "\n";
        if (!c.matches) out << "    " << c.detail << "\n";
    }
    out << "checks: " << matched << " matched, " << flagged << " documented mismatches, "
        << unexpected << " unexpected\n";
    return unexpected == 0 ? kOk : kFailure;
}

int cmd_graphs(const std::string& id_name, std::ostream& out) {
    if (id_name.empty()) {
        for (ReferenceGraphId id : reference_graph_ids()) out << to_string(id) << "\n";
        return kOk;
    }
    ReferenceGraphId id;
    try {
        id = reference_graph_from_string(id_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--id: ") + e.what());
    }
    std::string doc = serialize_qbaf(reference_graph(id));
    out << doc;
    if (doc.empty() || doc.back() != '\n') out << "\n";
    return kOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"acceptability degrees on weighted bipolar argumentation graphs"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check a graph file and report what is wrong with it");
    validate_cmd->add_option("file", validate_path, "graph file (json)")->required();

    EvalOptions eval_opt;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate a graph file and print one csv row per argument");
    eval_cmd->add_option("file", eval_opt.path, "graph file (json)")->required();
    eval_cmd->add_option("--phi-r", eval_opt.phi_r, "attack-stage aggregator name");
    eval_cmd->add_option("--phi-s", eval_opt.phi_s, "support-stage aggregator name");
    eval_cmd->add_option("--phi-f", eval_opt.phi_f,
                         "final combiner name (a dedicated combiner or any aggregator)");
    eval_cmd->add_option("--semantics", eval_opt.semantics, "one of the literature semantics")
        ->check(CLI::IsMember({"dfquad", "ebs", "qe"}));
    eval_cmd->add_option("--round", eval_opt.round_digits, "round printed values to N decimals")
        ->check(CLI::Range(0, 17));

    std::string post_agg;
    unsigned long long post_seed = 1;
    CLI::App* post_cmd = app.add_subcommand(
        "postulates", "sample the aggregation postulates and print the verdict matrix");
    post_cmd->add_option("--agg", post_agg, "restrict the matrix to one aggregator");
    CLI::Option* post_seed_opt =
        post_cmd->add_option("--seed", post_seed, "sampling seed (default QBAF_SEED, then 1)");

    std::string pri_phi_r, pri_phi_s, pri_phi_f, pri_name;
    int pri_trials = 200;
    unsigned long long pri_seed = 1;
    CLI::App* pri_cmd = app.add_subcommand(
        "principles", "sample the argumentation principles for one semantics, as json");
    pri_cmd->add_option("--phi-r", pri_phi_r, "attack-stage aggregator name")->required();
    pri_cmd->add_option("--phi-s", pri_phi_s, "support-stage aggregator name")->required();
    pri_cmd->add_option("--phi-f", pri_phi_f, "final combiner name")->required();
    pri_cmd->add_option("--principle", pri_name, "single principle (A1..A12, A7_strict, ...)");
    pri_cmd->add_option("--trials", pri_trials, "random base graphs per principle")
        ->check(CLI::Range(1, 1000000));
    CLI::Option* pri_seed_opt =
        pri_cmd->add_option("--seed", pri_seed, "sampling seed (default QBAF_SEED, then 1)");

    std::string sweep_dir = ".";
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "evaluate the 23-argument study graph under every semantics combination");
    sweep_cmd->add_option("--out", sweep_dir,
                          "directory for sweep.csv, histogram.csv and histogram.svg");

    std::string table4_dir;
    CLI::App* table4_cmd = app.add_subcommand(
        "table4", "compare the study-graph results against the published table");
    table4_cmd->add_option("--out", table4_dir, "directory for table4_report.csv");

    CLI::App* examples_cmd =
        app.add_subcommand("examples", "recompute the documented worked examples");

    std::string graphs_id;
    CLI::App* graphs_cmd =
        app.add_subcommand("graphs", "print a built-in reference graph (or list their names)");
    graphs_cmd->add_option("--id", graphs_id, "reference graph name, e.g. fig6_final");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(validate_path, out, err);
        if (eval_cmd->parsed()) return cmd_eval(eval_opt, out, err);
        if (post_cmd->parsed())
            return cmd_postulates(post_agg, resolve_seed(post_seed_opt->count() > 0, post_seed),
                                  out);
        if (pri_cmd->parsed())
            return cmd_principles(pri_phi_r, pri_phi_s, pri_phi_f, pri_name, pri_trials,
                                  resolve_seed(pri_seed_opt->count() > 0, pri_seed), out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_dir, out);
        if (table4_cmd->parsed()) return cmd_table4(table4_dir, out);
        if (examples_cmd->parsed()) return cmd_examples(out);
        if (graphs_cmd->parsed()) return cmd_graphs(graphs_id, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CycleError& e) {
        err << "error: the graph is cyclic, no evaluation order exists: "
            << join_ids(e.cycle, " -> ") << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;  // unreachable while every subcommand is dispatched above
}

}  // namespace qbaf
