#include "ehcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>

#include "ehcut/errors.hpp"
#include "combinations.hpp"
#include "fragment_search.hpp"
#include "mask_graph.hpp"
#include "subset_scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ehcut {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::VerifiedEqual: return "verified-equal";
        case SolveStatus::Exact: return "exact";
        case SolveStatus::UpperBoundOnly: return "upper-bound-only";
        case SolveStatus::Unresolved: return "unresolved";
        case SolveStatus::NoneExists: return "none-exists";
        case SolveStatus::Mismatch: return "mismatch";
    }
    return "?";
}

const char* to_string(Quantity q) {
    return q == Quantity::KappaH ? "kappa" : "lambda";
}

std::string to_line(const ConnectivityReport& r, int label_bits) {
    std::string line = "instance=" + r.instance;
    line += " quantity=";
    line += to_string(r.quantity);
    line += " h=" + std::to_string(r.h);
    line += " formula=" + (r.formula_value ? std::to_string(*r.formula_value) : std::string("-"));
    line += " found=" + (r.found_value ? std::to_string(*r.found_value) : std::string("-"));
    line += " status=";
    line += to_string(r.status);
    line += " certificate_size=" + std::to_string(r.certificate.size());
    line += " certificate=";
    if (r.certificate.size() == 0) {
        line += "-";
    } else if (r.certificate.kind == CutKind::VertexCut) {
        bool first = true;
        for (VertexId v : r.certificate.vertices) {
            if (!first) line += " ";
            line += to_bit_string(v, label_bits);
            first = false;
        }
    } else {
        bool first = true;
        for (const Edge& e : r.certificate.edges) {
            if (!first) line += " ";
            line += to_bit_string(e.u, label_bits) + "-" + to_bit_string(e.v, label_bits);
            first = false;
        }
    }
    return line;
}

std::optional<std::uint64_t> predicted_value(const Topology& g, Quantity q, int h) {
    if (h < 0) return std::nullopt;
    switch (g.kind()) {
        case TopologyKind::EH: {
            const auto [s, t] = g.params();
            if (s <= t && h <= s) return eh_cut_size_formula(s, h);
            return std::nullopt;
        }
        case TopologyKind::DC: {
            const int n = g.params().s;
            if (h <= n) return eh_cut_size_formula(n, h);
            return std::nullopt;
        }
        case TopologyKind::Qn: {
            const int n = g.bit_length();
            const int max_h = (q == Quantity::KappaH) ? n - 2 : n - 1;
            if (h <= max_h)
                return (std::uint64_t{1} << h) * static_cast<std::uint64_t>(n - h);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<CutCertificate> canonical_upper_bound(const Topology& g, CutKind kind, int h) {
    std::optional<CutCertificate> cert;
    switch (g.kind()) {
        case TopologyKind::EH:
        case TopologyKind::DC: {
            const auto [s, t] = g.params();
            if (s <= t && 0 <= h && h <= s)
                cert = (kind == CutKind::VertexCut) ? canonical_vertex_cut(g.params(), h)
                                                    : canonical_edge_cut(g.params(), h);
            break;
        }
        case TopologyKind::Qn: {
            const int n = g.bit_length();
            if (kind == CutKind::VertexCut && 0 <= h && h <= n - 2)
                cert = canonical_qn_vertex_cut(n, h);
            if (kind == CutKind::EdgeCut && 0 <= h && h <= n - 1)
                cert = canonical_qn_edge_cut(n, h);
            break;
        }
    }
    if (cert) {
        cert->instance = g.name();
        if (!certificate_is_valid(g, *cert))
            throw Error("internal: canonical certificate failed its own predicate for " +
                        g.name() + " h=" + std::to_string(h));
    }
    return cert;
}

namespace {

SolveStatus exact_status(std::uint64_t found, const std::optional<std::uint64_t>& formula) {
    if (!formula) return SolveStatus::Exact;
    return found == *formula ? SolveStatus::VerifiedEqual : SolveStatus::Mismatch;
}

void check_solver_params(const Topology& g, int h) {
    if (h < 0) throw InvalidParams("h must be non-negative, got " + std::to_string(h));
    if (h >= 1 && (g.kind() == TopologyKind::EH || g.kind() == TopologyKind::DC) &&
        g.params().s > g.params().t)
        throw InvalidParams("restricted solves expect s <= t; use the isomorphic eh(" +
                            std::to_string(g.params().t) + "," + std::to_string(g.params().s) +
                            ") instead");
}

std::optional<CutCertificate> resolve_seed(const Topology& g, CutKind kind, int h,
                                           const std::optional<CutCertificate>& hint) {
    if (!hint) return canonical_upper_bound(g, kind, h);
    if (hint->kind != kind)
        throw InvalidParams("upper-bound hint has the wrong cut kind");
    CutCertificate seed = *hint;
    seed.instance = g.name();
    const bool ok = (kind == CutKind::VertexCut) ? is_h_vertex_cut(g, seed.vertices, h)
                                                 : is_h_edge_cut(g, seed.edges, h);
    if (!ok) throw InvalidParams("upper-bound hint is not a valid h-cut at h=" + std::to_string(h));
    return seed;
}

} // namespace

ConnectivityReport kappa_h_exact(const Topology& g, int h, const SolveBudget& budget,
                                 const std::optional<CutCertificate>& upper_hint) {
    check_solver_params(g, h);
    ConnectivityReport report;
    report.instance = g.name();
    report.quantity = Quantity::KappaH;
    report.h = h;
    report.formula_value = predicted_value(g, Quantity::KappaH, h);

    if (h == 0) {
        auto [value, cert] = vertex_connectivity(g);
        report.found_value = value;
        report.certificate = std::move(cert);
        report.status = exact_status(value, report.formula_value);
        return report;
    }

    const std::optional<CutCertificate> seed = resolve_seed(g, CutKind::VertexCut, h, upper_hint);
    const int n = static_cast<int>(g.vertex_count());
    const int scan_max = seed ? std::min<int>(static_cast<int>(seed->size()) - 1,
                                              budget.max_subset_size)
                              : budget.max_subset_size;

    const detail::ScanOutcome scan = detail::scan_vertex_subsets(
        g, h, scan_max, budget.max_candidates, budget.time_limit_seconds, budget.workers);

    if (scan.found_size) {
        report.found_value = *scan.found_size;
        report.certificate = CutCertificate{CutKind::VertexCut, h, g.name(), scan.witness, {},
                                            Provenance::Solver};
        report.status = exact_status(*scan.found_size, report.formula_value);
    } else if (seed && scan.complete && scan_max >= static_cast<int>(seed->size()) - 1) {
        report.found_value = seed->size();
        report.certificate = *seed;
        report.status = exact_status(seed->size(), report.formula_value);
    } else if (seed) {
        report.found_value = seed->size();
        report.certificate = *seed;
        report.status = SolveStatus::UpperBoundOnly;
    } else if (scan.complete && scan_max >= n - 2) {
        report.status = SolveStatus::NoneExists;
    } else {
        report.status = SolveStatus::Unresolved;
    }
    return report;
}

ConnectivityReport lambda_h_exact(const Topology& g, int h, const SolveBudget& budget,
                                  const std::optional<CutCertificate>& upper_hint) {
    check_solver_params(g, h);
    ConnectivityReport report;
    report.instance = g.name();
    report.quantity = Quantity::LambdaH;
    report.h = h;
    report.formula_value = predicted_value(g, Quantity::LambdaH, h);

    if (h == 0) {
        auto [value, cert] = edge_connectivity(g);
        report.found_value = value;
        report.certificate = std::move(cert);
        report.status = exact_status(value, report.formula_value);
        return report;
    }

    const std::optional<CutCertificate> seed = resolve_seed(g, CutKind::EdgeCut, h, upper_hint);
    std::optional<std::uint32_t> seed_size;
    if (seed) seed_size = static_cast<std::uint32_t>(seed->size());

    const detail::FragmentOutcome outcome = detail::fragment_min_edge_cut(
        g, h, seed_size, seed ? &seed->edges : nullptr, budget.max_candidates,
        budget.time_limit_seconds, budget.workers);

    if (outcome.complete && outcome.best_size) {
        report.found_value = *outcome.best_size;
        if (seed && outcome.best_cut == seed->edges) {
            report.certificate = *seed;
        } else {
            report.certificate = CutCertificate{CutKind::EdgeCut, h, g.name(), {},
                                                outcome.best_cut, Provenance::Solver};
        }
        report.status = exact_status(*outcome.best_size, report.formula_value);
    } else if (outcome.complete) {
        report.status = SolveStatus::NoneExists;
    } else if (seed) {
        report.found_value = seed->size();
        report.certificate = *seed;
        report.status = SolveStatus::UpperBoundOnly;
    } else {
        report.status = SolveStatus::Unresolved;
    }
    return report;
}

std::vector<TableRow> verify_connectivity_table(int max_total, const SolveBudget& budget) {
    if (max_total < 2) throw InvalidParams("max_total must be at least 2");
    std::vector<TableRow> rows;
    for (int s = 1; s <= max_total / 2; ++s) {
        for (int t = s; s + t <= max_total; ++t) {
            const Topology g = build_eh({s, t});
            for (int h = 0; h <= s; ++h) {
                TableRow row;
                row.s = s;
                row.t = t;
                row.h = h;
                row.formula = eh_cut_size_formula(s, h);
                row.kappa = kappa_h_exact(g, h, budget);
                row.lambda = lambda_h_exact(g, h, budget);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

namespace {

int status_severity(SolveStatus s) {
    switch (s) {
        case SolveStatus::Mismatch: return 5;
        case SolveStatus::Unresolved: return 4;
        case SolveStatus::NoneExists: return 3;
        case SolveStatus::UpperBoundOnly: return 2;
        case SolveStatus::Exact: return 1;
        case SolveStatus::VerifiedEqual: return 0;
    }
    return 5;
}

std::string found_or_dash(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

} // namespace

std::string render_table(std::span<const TableRow> rows) {
    std::ostringstream os;
    os << std::left << std::setw(3) << "s" << std::setw(3) << "t" << std::setw(3) << "h"
       << std::setw(9) << "formula" << std::setw(7) << "kappa" << std::setw(8) << "lambda"
       << "status\n";
    for (const TableRow& row : rows) {
        const SolveStatus worst = status_severity(row.kappa.status) >=
                                          status_severity(row.lambda.status)
                                      ? row.kappa.status
                                      : row.lambda.status;
        os << std::left << std::setw(3) << row.s << std::setw(3) << row.t << std::setw(3)
           << row.h << std::setw(9) << row.formula << std::setw(7)
           << found_or_dash(row.kappa.found_value) << std::setw(8)
           << found_or_dash(row.lambda.found_value) << to_string(worst) << "\n";
    }
    return os.str();
}

bool all_rows_verified(std::span<const TableRow> rows) {
    for (const TableRow& row : rows)
        if (row.kappa.status != SolveStatus::VerifiedEqual ||
            row.lambda.status != SolveStatus::VerifiedEqual)
            return false;
    return !rows.empty();
}

std::optional<std::uint32_t> brute_force_oracle(const Topology& g, int h, CutKind kind,
                                                int size_cap, std::uint64_t eval_budget,
                                                int workers) {
    if (h < 0 || size_cap < 0) throw InvalidParams("oracle needs h >= 0 and size_cap >= 0");
    const std::vector<Edge> edges =
        (kind == CutKind::EdgeCut) ? g.edge_list() : std::vector<Edge>{};
    const std::uint64_t universe =
        (kind == CutKind::VertexCut) ? g.vertex_count() : edges.size();

    std::uint64_t projected = 0;
    for (int k = 0; k <= size_cap; ++k) {
        projected += detail::binomial_capped(universe, static_cast<std::uint64_t>(k),
                                             eval_budget + 1);
        if (projected > eval_budget)
            throw OracleInfeasible("projected " + std::to_string(projected) +
                                   "+ candidates exceed the oracle budget of " +
                                   std::to_string(eval_budget));
    }

    const bool use_masks = g.vertex_count() <= 64;
    const std::optional<detail::MaskGraph> mg =
        use_masks ? std::optional<detail::MaskGraph>(detail::MaskGraph(g)) : std::nullopt;

#ifdef _OPENMP
    const int nworkers = workers > 0 ? workers : omp_get_max_threads();
#else
    const int nworkers = 1;
    (void)workers;
#endif
    (void)nworkers;

    // Tests one candidate set of indices into the vertex range or edge list.
    auto passes = [&](const std::vector<int>& ids, detail::MaskGraph* scratch) {
        if (kind == CutKind::VertexCut) {
            if (use_masks) {
                std::uint64_t mask = 0;
                for (int v : ids) mask |= std::uint64_t{1} << v;
                return detail::mask_vertex_cut_check(*mg, mask, h);
            }
            std::vector<VertexId> members(ids.begin(), ids.end());
            return is_h_vertex_cut(g, members, h);
        }
        std::vector<Edge> members;
        members.reserve(ids.size());
        for (int e : ids) members.push_back(edges[static_cast<std::size_t>(e)]);
        if (use_masks)
            return detail::mask_edge_cut_check(*scratch, members.data(),
                                               static_cast<int>(members.size()), h);
        return is_h_edge_cut(g, members, h);
    };

    for (int k = 0; k <= size_cap; ++k) {
        if (static_cast<std::uint64_t>(k) > universe) break;
        if (k == 0) {
            std::optional<detail::MaskGraph> scratch = mg;
            if (passes({}, scratch ? &*scratch : nullptr)) return 0;
            continue;
        }
        std::atomic<bool> found{false};
        const long long firsts = static_cast<long long>(universe) - k + 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nworkers)
#endif
        for (long long first = 0; first < firsts; ++first) {
            if (found.load(std::memory_order_relaxed)) continue;
            std::optional<detail::MaskGraph> scratch = mg;
            std::vector<int> ids(static_cast<std::size_t>(k));
            ids[0] = static_cast<int>(first);
            if (k == 1) {
                if (passes(ids, scratch ? &*scratch : nullptr)) found.store(true);
                continue;
            }
            // remaining k-1 indices range over (first, universe)
            const int m = static_cast<int>(universe - first - 1);
            std::vector<int> rest(static_cast<std::size_t>(k - 1));
            for (int i = 0; i < k - 1; ++i) rest[static_cast<std::size_t>(i)] = i;
            while (true) {
                for (int i = 0; i < k - 1; ++i)
                    ids[static_cast<std::size_t>(i + 1)] =
                        static_cast<int>(first) + 1 + rest[static_cast<std::size_t>(i)];
                if (passes(ids, scratch ? &*scratch : nullptr)) {
                    found.store(true);
                    break;
                }
                if (found.load(std::memory_order_relaxed)) break;
                if (!detail::next_combination(rest, m)) break;
            }
        }
        if (found.load()) return static_cast<std::uint32_t>(k);
    }
    return std::nullopt;
}

} // namespace ehcut
