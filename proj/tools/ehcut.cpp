// Command line front end: build and export topologies, emit cut certificates,
// run the exact solvers, and reproduce the connectivity table.
//
//   ehcut generate --eh 2 3 --format dot --out g.dot
//   ehcut certify --eh 2 2 --h 1
//   ehcut solve --eh 1 2 --h 1 --both
//   ehcut verify-table --max-total 5
//
// Exit codes: 0 all validations passed, 1 usage or parameter error,
// 2 incomplete verification (upper bound or unresolved rows), 3 mismatch or
// failed validation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ehcut/errors.hpp"
#include "ehcut/solver.hpp"
#include "ehcut/topology_io.hpp"
#include "ehcut/version.hpp"

using json = nlohmann::ordered_json;
using namespace ehcut;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitInvalid = 3;

struct TopologyChoice {
    std::vector<int> eh; // s t
    int qn = 0;
    int dc = 0;
    CLI::Option* qn_opt = nullptr;
    CLI::Option* dc_opt = nullptr;

    void add_flags(CLI::App* cmd, bool required) {
        auto* eh_opt = cmd->add_option("--eh", eh, "exchanged hypercube EH(s,t)")
                           ->expected(2)
                           ->type_name("S T");
        qn_opt = cmd->add_option("--qn", qn, "hypercube Q_n");
        dc_opt = cmd->add_option("--dc", dc, "dual-cube DC(n)");
        eh_opt->excludes(qn_opt)->excludes(dc_opt);
        qn_opt->excludes(dc_opt);
        if (required) {
            cmd->callback([this, cmd]() {
                if (eh.empty() && cmd->count("--qn") == 0 && cmd->count("--dc") == 0)
                    throw CLI::ValidationError("one of --eh, --qn, --dc is required");
            });
        }
    }

    Topology build() const {
        if (!eh.empty()) return build_eh({eh[0], eh[1]});
        if (qn_opt && qn_opt->count() > 0) return build_qn(qn);
        return build_dc(dc);
    }
};

struct BudgetFlags {
    SolveBudget budget;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--max-subset-size", budget.max_subset_size,
                        "largest vertex-subset size enumerated");
        cmd->add_option("--max-candidates", budget.max_candidates,
                        "candidate evaluation budget");
        cmd->add_option("--workers", budget.workers,
                        "parallel workers (0 = hardware default)");
        cmd->add_option("--time-limit", budget.time_limit_seconds, "wall clock limit, seconds");
    }
};

json budget_json(const SolveBudget& b) {
    return json{{"max_subset_size", b.max_subset_size},
                {"max_candidates", b.max_candidates},
                {"time_limit_seconds", b.time_limit_seconds},
                {"workers", b.workers}};
}

json certificate_json(const CutCertificate& cert, int bits) {
    json members = json::array();
    if (cert.kind == CutKind::VertexCut) {
        for (VertexId v : cert.vertices) members.push_back(to_bit_string(v, bits));
    } else {
        for (const Edge& e : cert.edges)
            members.push_back(to_bit_string(e.u, bits) + "-" + to_bit_string(e.v, bits));
    }
    return json{{"kind", to_string(cert.kind)},
                {"h", cert.h},
                {"instance", cert.instance},
                {"size", cert.size()},
                {"provenance", to_string(cert.provenance)},
                {"members", members}};
}

json report_json(const ConnectivityReport& r, int bits) {
    json j{{"instance", r.instance},
           {"quantity", to_string(r.quantity)},
           {"h", r.h}};
    if (r.formula_value)
        j["formula"] = *r.formula_value;
    else
        j["formula"] = nullptr;
    if (r.found_value)
        j["found"] = *r.found_value;
    else
        j["found"] = nullptr;
    j["status"] = to_string(r.status);
    j["certificate"] = certificate_json(r.certificate, bits);
    return j;
}

json run_header(const std::string& command) {
    return json{{"tool", "ehcut"}, {"version", kVersion}, {"command", command}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw Error("cannot open output file " + out_path);
    os << text;
}

int status_exit_code(SolveStatus s) {
    switch (s) {
        case SolveStatus::VerifiedEqual:
        case SolveStatus::Exact:
        case SolveStatus::NoneExists:
            return kExitOk;
        case SolveStatus::UpperBoundOnly:
        case SolveStatus::Unresolved:
            return kExitIncomplete;
        case SolveStatus::Mismatch:
            return kExitInvalid;
    }
    return kExitInvalid;
}

int run_generate(const TopologyChoice& choice, const std::string& format,
                 const std::string& out_path) {
    const Topology g = choice.build();
    if (format == "dot")
        emit(to_dot_string(g), out_path);
    else
        emit(to_edge_list_string(g), out_path);
    return kExitOk;
}

int run_certify(const TopologyChoice& choice, int h, const std::string& format,
                const std::string& out_path) {
    const Topology g = choice.build();
    if (g.kind() == TopologyKind::Qn)
        throw InvalidParams("certificates are defined for --eh and --dc instances");
    const TopologyParams p = g.params();
    if (!(0 <= h && h <= p.s && p.s <= p.t))
        throw InvalidParams("certify requires 0 <= h <= s <= t, got h=" + std::to_string(h) +
                            " s=" + std::to_string(p.s) + " t=" + std::to_string(p.t));

    const std::vector<VertexId> core = canonical_core(p, h);
    CutCertificate vertex_cut = canonical_vertex_cut(p, h);
    CutCertificate edge_cut = canonical_edge_cut(p, h);
    vertex_cut.instance = g.name();
    edge_cut.instance = g.name();
    const bool vertex_ok = is_h_vertex_cut(g, vertex_cut.vertices, h);
    const bool edge_ok = is_h_edge_cut(g, edge_cut.edges, h);
    const std::uint64_t formula = eh_cut_size_formula(p.s, h);

    if (format == "structured") {
        json doc = run_header("certify");
        doc["parameters"] = {{"instance", g.name()}, {"h", h}};
        json core_labels = json::array();
        for (VertexId v : core) core_labels.push_back(to_bit_string(v, g.bit_length()));
        doc["core"] = core_labels;
        doc["vertex_cut"] = certificate_json(vertex_cut, g.bit_length());
        doc["edge_cut"] = certificate_json(edge_cut, g.bit_length());
        doc["formula"] = formula;
        doc["vertex_cut_valid"] = vertex_ok;
        doc["edge_cut_valid"] = edge_ok;
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::ostringstream os;
        os << "instance: " << g.name() << "\n";
        os << "h: " << h << "\n";
        os << "formula 2^h(s+1-h): " << formula << "\n";
        os << "core:";
        for (VertexId v : core) os << " " << to_bit_string(v, g.bit_length());
        os << "\n\n";
        os << to_record(vertex_cut, g.bit_length());
        os << "valid: " << (vertex_ok ? "yes" : "no") << "\n\n";
        os << to_record(edge_cut, g.bit_length());
        os << "valid: " << (edge_ok ? "yes" : "no") << "\n";
        emit(os.str(), out_path);
    }
    return (vertex_ok && edge_ok && vertex_cut.size() == formula && edge_cut.size() == formula)
               ? kExitOk
               : kExitInvalid;
}

int run_solve(const TopologyChoice& choice, int h, bool kappa, bool lambda, bool both,
              const BudgetFlags& budget_flags, const std::string& format,
              const std::string& out_path, bool timings) {
    const Topology g = choice.build();
    const bool run_kappa = kappa || both || (!kappa && !lambda);
    const bool run_lambda = lambda || both || (!kappa && !lambda);

    const auto start = std::chrono::steady_clock::now();
    std::vector<ConnectivityReport> reports;
    if (run_kappa) reports.push_back(kappa_h_exact(g, h, budget_flags.budget));
    if (run_lambda) reports.push_back(lambda_h_exact(g, h, budget_flags.budget));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (format == "structured") {
        json doc = run_header("solve");
        doc["parameters"] = {{"instance", g.name()}, {"h", h}};
        doc["budget"] = budget_json(budget_flags.budget);
        doc["reports"] = json::array();
        for (const ConnectivityReport& r : reports)
            doc["reports"].push_back(report_json(r, g.bit_length()));
        if (timings) doc["timings"] = {{"solve_seconds", elapsed}};
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::ostringstream os;
        for (const ConnectivityReport& r : reports) os << to_line(r, g.bit_length()) << "\n";
        if (timings) os << "# solve_seconds=" << elapsed << "\n";
        emit(os.str(), out_path);
    }

    int code = kExitOk;
    for (const ConnectivityReport& r : reports) code = std::max(code, status_exit_code(r.status));
    return code;
}

int run_verify_table(int max_total, const BudgetFlags& budget_flags, const std::string& format,
                     const std::string& out_path, bool timings) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<TableRow> rows = verify_connectivity_table(max_total, budget_flags.budget);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (format == "structured") {
        json doc = run_header("verify-table");
        doc["parameters"] = {{"max_total", max_total}};
        doc["budget"] = budget_json(budget_flags.budget);
        doc["rows"] = json::array();
        for (const TableRow& row : rows) {
            const int bits = row.s + row.t + 1;
            doc["rows"].push_back(json{{"s", row.s},
                                       {"t", row.t},
                                       {"h", row.h},
                                       {"formula", row.formula},
                                       {"kappa", report_json(row.kappa, bits)},
                                       {"lambda", report_json(row.lambda, bits)}});
        }
        doc["all_verified"] = all_rows_verified(rows);
        if (timings) doc["timings"] = {{"table_seconds", elapsed}};
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::string text = render_table(rows);
        if (timings) text += "# table_seconds=" + std::to_string(elapsed) + "\n";
        emit(text, out_path);
    }

    if (all_rows_verified(rows)) return kExitOk;
    int code = kExitIncomplete;
    for (const TableRow& row : rows)
        if (row.kappa.status == SolveStatus::Mismatch ||
            row.lambda.status == SolveStatus::Mismatch)
            code = kExitInvalid;
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exchanged hypercube topologies, cut certificates and exact "
                 "restricted connectivity"};
    app.set_help_flag("--help", "print help"); // frees -h/--h for the cut level
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    int h = 0;
    int max_total = 5;
    bool kappa = false, lambda = false, both = false, timings = false;

    TopologyChoice gen_choice, cert_choice, solve_choice;
    BudgetFlags solve_budget, table_budget;

    CLI::App* generate = app.add_subcommand("generate", "write a topology as edgelist or dot");
    generate->set_help_flag("--help", "print help");
    gen_choice.add_flags(generate, true);
    generate->add_option("--format", format, "edgelist | dot")
        ->check(CLI::IsMember({"edgelist", "dot"}))
        ->default_str("edgelist");
    generate->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* certify = app.add_subcommand("certify", "emit and validate canonical certificates");
    certify->set_help_flag("--help", "print help");
    cert_choice.add_flags(certify, true);
    certify->add_option("--h", h, "restriction level h")->required();
    certify->add_option("--format", format, "table | structured")
        ->check(CLI::IsMember({"table", "structured"}));
    certify->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* solve = app.add_subcommand("solve", "exact restricted connectivity");
    solve->set_help_flag("--help", "print help");
    solve_choice.add_flags(solve, true);
    solve->add_option("--h", h, "restriction level h")->required();
    solve->add_flag("--kappa", kappa, "vertex version");
    solve->add_flag("--lambda", lambda, "edge version");
    solve->add_flag("--both", both, "both quantities (default)");
    solve_budget.add_flags(solve);
    solve->add_option("--format", format, "table | structured")
        ->check(CLI::IsMember({"table", "structured"}));
    solve->add_option("--out", out_path, "output path (default stdout)");
    solve->add_flag("--timings", timings, "append wall-clock timings (not byte-stable)");

    CLI::App* table = app.add_subcommand("verify-table", "solve the whole (s,t,h) family");
    table->set_help_flag("--help", "print help");
    table->add_option("--max-total", max_total, "largest s+t (default 5)");
    table_budget.add_flags(table);
    table->add_option("--format", format, "table | structured")
        ->check(CLI::IsMember({"table", "structured"}));
    table->add_option("--out", out_path, "output path (default stdout)");
    table->add_flag("--timings", timings, "append wall-clock timings (not byte-stable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            if (format == "table") format = "edgelist";
            return run_generate(gen_choice, format, out_path);
        }
        if (certify->parsed()) return run_certify(cert_choice, h, format, out_path);
        if (solve->parsed())
            return run_solve(solve_choice, h, kappa, lambda, both, solve_budget, format,
                             out_path, timings);
        if (table->parsed())
            return run_verify_table(max_total, table_budget, format, out_path, timings);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
