// The operations behind the CLI subcommands, exposed as functions returning
// JSON so that they can be driven programmatically and tested directly.
#pragma once

#include "starquiver/catalog.hpp"
#include "starquiver/coxeter.hpp"
#include "starquiver/diophantine.hpp"
#include "starquiver/enumerate.hpp"
#include "starquiver/graph_canon.hpp"
#include "starquiver/io.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

namespace starquiver {

inline json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json poly_to_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(bigint_to_json(c));
    return out;
}

inline json matrix_to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(bigint_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline json verdict_to_json(const ConditionVerdict& v) {
    json conds = json::array();
    for (const auto& c : v.conditions)
        conds.push_back({{"condition", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
    return conds;
}

struct ReportOptions {
    long order_bound = 1000;
    std::size_t edge_transitivity_limit = 32;
};

/// Full report: Coxeter data, graph predicates, Diophantine membership and
/// the necessary-condition battery.
inline json cmd_report(const StarAlgebra& lam, const ReportOptions& opts = {},
                       const std::string& name = "") {
    json out;
    out["algebra"] = star_to_json(lam);
    if (!name.empty()) out["algebra"]["name"] = name;

    const BipartiteGraph b = b_lambda(lam);
    const auto deg = bidegree(b);
    json graph;
    graph["edges"] = b.edge_count();
    graph["connected"] = is_connected(b);
    graph["semi_regular"] = deg.has_value();
    graph["bidegree"] = deg ? json{deg->sigma1, deg->sigma2} : json(nullptr);
    graph["regular"] = deg.has_value() && deg->sigma1 == deg->sigma2;
    graph["reflexive"] = is_reflexive(b);
    graph["salem"] = is_salem(b);
    graph["duplicate_neighborhoods"] = has_duplicate_neighborhoods(b);
    if (b.vertex_count() <= opts.edge_transitivity_limit)
        graph["edge_transitive"] = is_edge_transitive(b, opts.edge_transitivity_limit);
    else
        graph["edge_transitive"] = nullptr;
    out["graph"] = std::move(graph);

    const CoxeterReport rep = coxeter_report(lam, opts.order_bound);
    out["cartan"] = matrix_to_json(rep.cartan);
    out["coxeter_matrix"] = matrix_to_json(rep.neg_coxeter.scaled(BigInt(-1)));
    out["coxeter_polynomial"] = poly_to_json(rep.coxeter_poly);
    out["cyclotomic"] = rep.cyclotomic;
    out["p"] = rep.p_value ? bigint_to_json(*rep.p_value) : json(nullptr);
    if (rep.degrees) {
        out["w"] = poly_to_json(rep.w);
        out["p_factor"] = poly_to_json(rep.p_factor);
        out["q_factor"] = poly_to_json(rep.q_factor);
        out["neg_phi_gamma_order"] = rep.neg_phi_order.str();
    }

    // Diophantine membership of (r, Sigma1, s, Sigma2); the (1,1) algebra with
    // its single relation is tabulated as (1,1,1,1).
    json dio;
    if (lam.r() == 1 && lam.s() == 1 && lam.relations().size() == 1) {
        dio["tuple"] = {1, 1, 1, 1};
        dio["solution"] = true;  // (p,a,k,b,l) = (2,1,1,1,1)
    } else if (rep.degrees && rep.p_value) {
        const long p = to_long(*rep.p_value);
        dio["tuple"] = {lam.r(), rep.degrees->sigma1, lam.s(), rep.degrees->sigma2};
        dio["solution"] = p >= 0 && p <= 4 &&
                          is_solution(static_cast<int>(p), static_cast<long>(lam.r()),
                                      rep.degrees->sigma1, static_cast<long>(lam.s()),
                                      rep.degrees->sigma2);
    } else {
        dio["tuple"] = nullptr;
        dio["solution"] = false;
    }
    out["diophantine"] = std::move(dio);

    const ConditionVerdict verdict = condition_battery(lam, opts.order_bound);
    out["battery"] = verdict_to_json(verdict);
    out["verdict"] = verdict.overall();
    return out;
}

struct DiophantineOptions {
    std::vector<int> p_filter;  // empty: all of 0..4
    long bound = 60;
    bool star_translation = false;
    bool run_oracle = false;
};

inline json cmd_diophantine(const DiophantineOptions& opts) {
    json out;
    out["bound"] = opts.bound;
    auto keep_p = [&](int p) {
        return opts.p_filter.empty() ||
               std::find(opts.p_filter.begin(), opts.p_filter.end(), p) != opts.p_filter.end();
    };

    if (opts.star_translation) {
        json list = json::array();
        for (int p = 1; p <= 4; ++p) {
            if (!keep_p(p)) continue;
            for (const auto& sp : solutions_for_star(p))
                list.push_back({{"p", p}, {"tuple", {sp.r, sp.sigma1, sp.s, sp.sigma2}}});
        }
        out["star_solutions"] = std::move(list);
    } else {
        json list = json::array();
        for (const auto& s : closed_form_solutions(opts.bound)) {
            if (!keep_p(s.p)) continue;
            if (s.a > opts.bound || s.k > opts.bound || s.b > opts.bound || s.l > opts.bound)
                continue;
            list.push_back({s.p, s.a, s.k, s.b, s.l});
        }
        out["solutions"] = std::move(list);
    }

    if (opts.run_oracle) {
        const auto brute = brute_force_solutions(opts.bound);
        std::set<Solution> closed;
        for (const auto& s : closed_form_solutions(opts.bound))
            if (s.a <= opts.bound && s.k <= opts.bound && s.b <= opts.bound && s.l <= opts.bound)
                closed.insert(s);
        out["oracle"] = (brute == closed) ? "MATCH" : "MISMATCH";
        out["oracle_brute_count"] = brute.size();
        out["oracle_closed_count"] = closed.size();
    }
    return out;
}

struct ClassifyConfig {
    std::string mode = "regular";  // regular | edge-transitive | enumerate
    std::vector<int> p_values = {1, 2, 3, 4};
    std::size_t max_vertices = 0;  // 0: catalog candidates only
    long order_bound = 1000;
    unsigned workers = 0;
};

namespace detail {

struct Candidate {
    std::string source;  // "catalog:<name>" or "enumerated"
    BipartiteGraph graph;
    StarAlgebra algebra;
    bool classified;
};

inline json classify_candidate(const Candidate& cand, const ClassifyConfig& cfg) {
    json out;
    out["source"] = cand.source;
    out["graph"] = graph_to_json(cand.graph);
    const auto deg = bidegree(cand.graph);
    json filters;
    filters["connected"] = is_connected(cand.graph);
    filters["regular"] = deg.has_value() && deg->sigma1 == deg->sigma2;
    filters["edge_transitive"] = cand.graph.vertex_count() <= 32
                                     ? json(is_edge_transitive(cand.graph))
                                     : json(nullptr);
    filters["distinct_neighborhoods"] = !has_duplicate_neighborhoods(cand.graph);
    out["filters"] = std::move(filters);

    const ConditionVerdict verdict = condition_battery(cand.algebra, cfg.order_bound);
    out["battery"] = verdict_to_json(verdict);
    out["classified_in_literature"] = cand.classified;

    std::string status;
    if (verdict.excluded()) {
        status = "excluded";
        for (const auto& c : verdict.conditions)
            if (c.status == ConditionStatus::Fail) {
                out["failed_condition"] = c.name;
                break;
            }
    } else if (verdict.all_pass() && cand.classified) {
        // necessary conditions all hold and the classification identifies
        // this algebra as 2-representation-finite
        status = "candidate";
    } else {
        status = "undecided";
        if (verdict.all_pass()) out["note"] = "passes all implemented filters";
    }
    out["status"] = status;
    return out;
}

}  // namespace detail

/// The classification pipeline: for each (r, Sigma1, s, Sigma2) from the
/// Diophantine solutions over the requested p-values, gather candidates from
/// the catalog (plus exhaustive enumeration within the vertex budget), apply
/// the mode's graph-class filter and the condition battery, and emit one line
/// per candidate. The battery can only exclude; "candidate" additionally
/// requires the classification's verdict, and any algebra that merely passes
/// every implemented filter stays "undecided".
inline json cmd_classify(const ClassifyConfig& cfg) {
    if (cfg.mode != "regular" && cfg.mode != "edge-transitive" && cfg.mode != "enumerate")
        throw std::invalid_argument("classify: unknown mode " + cfg.mode);
    json out;
    out["mode"] = cfg.mode;
    out["p_values"] = cfg.p_values;

    // enumerate mode without an explicit budget: large enough for the
    // exhaustively checkable tuples (C8 and Heawood parameters)
    const std::size_t max_vertices =
        (cfg.mode == "enumerate" && cfg.max_vertices == 0) ? 14 : cfg.max_vertices;
    json skipped = json::array();

    struct Task {
        int p;
        StarParameters params;
        std::vector<detail::Candidate> candidates;
    };
    std::vector<Task> tasks;
    for (int p : cfg.p_values) {
        if (p < 1 || p > 4) throw std::invalid_argument("classify: p must be in 1..4");
        for (const auto& sp : solutions_for_star(p)) {
            Task task{p, sp, {}};
            for (const auto& entry : catalog()) {
                if (!(entry.parameters == sp)) continue;
                task.candidates.push_back(
                    {"catalog:" + entry.name, b_lambda(entry.algebra), entry.algebra,
                     entry.classified});
            }
            const std::size_t nverts = static_cast<std::size_t>(sp.r + sp.s);
            if (max_vertices > 0 && nverts > max_vertices) {
                // partial results: this tuple was not searched exhaustively
                skipped.push_back({{"p", p},
                                   {"tuple", {sp.r, sp.sigma1, sp.s, sp.sigma2}},
                                   {"reason", "exceeds the enumeration vertex budget"}});
            }
            if (max_vertices > 0 && nverts <= max_vertices) {
                EnumerateOptions eopts;
                eopts.distinct_neighborhoods = true;  // sound for 2-RF candidates
                eopts.vertex_limit = max_vertices;
                eopts.workers = cfg.workers;
                for (auto& g : enumerate_biregular(sp.r, sp.sigma1, sp.s, sp.sigma2, eopts)) {
                    bool duplicate = false;
                    for (const auto& c : task.candidates)
                        if (isomorphic(c.graph, g)) {
                            duplicate = true;
                            break;
                        }
                    if (!duplicate)
                        task.candidates.push_back(
                            {"enumerated", g, detail::star_of_graph(g), false});
                }
            }
            // mode filter: restrict the graph class under classification
            std::vector<detail::Candidate> kept;
            for (auto& c : task.candidates) {
                const auto deg = bidegree(c.graph);
                const bool regular = deg.has_value() && deg->sigma1 == deg->sigma2;
                if (cfg.mode == "regular" && !regular) continue;
                if (cfg.mode == "edge-transitive" &&
                    (c.graph.vertex_count() > 32 || !is_edge_transitive(c.graph)))
                    continue;
                kept.push_back(std::move(c));
            }
            task.candidates = std::move(kept);
            if (!task.candidates.empty()) tasks.push_back(std::move(task));
        }
    }

    // flatten into (task, candidate) pairs and process in parallel with a
    // deterministic result order
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        for (std::size_t c = 0; c < tasks[t].candidates.size(); ++c) work.emplace_back(t, c);
    std::vector<json> results(work.size());
    const unsigned workers = std::min<std::size_t>(resolve_worker_count(cfg.workers), work.size());
    if (workers <= 1) {
        for (std::size_t w = 0; w < work.size(); ++w)
            results[w] = detail::classify_candidate(tasks[work[w].first].candidates[work[w].second], cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t w = next.fetch_add(1);
                    if (w >= work.size()) break;
                    results[w] =
                        detail::classify_candidate(tasks[work[w].first].candidates[work[w].second], cfg);
                }
            });
        for (auto& th : pool) th.join();
    }

    json rows = json::array();
    json survivors = json::array();
    std::size_t w = 0;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        json task_json;
        task_json["p"] = tasks[t].p;
        task_json["tuple"] = {tasks[t].params.r, tasks[t].params.sigma1, tasks[t].params.s,
                              tasks[t].params.sigma2};
        json cands = json::array();
        for (std::size_t c = 0; c < tasks[t].candidates.size(); ++c, ++w) {
            if (results[w]["status"] == "candidate") survivors.push_back(results[w]["source"]);
            cands.push_back(std::move(results[w]));
        }
        task_json["candidates"] = std::move(cands);
        rows.push_back(std::move(task_json));
    }
    out["results"] = std::move(rows);
    out["survivors"] = std::move(survivors);
    out["skipped_enumeration"] = std::move(skipped);
    return out;
}

struct EnumerateConfig {
    std::size_t r, s;
    long sigma1, sigma2;
    bool distinct_neighborhoods = false;
    std::size_t max_vertices = 20;
    unsigned workers = 0;
};

inline json cmd_enumerate(const EnumerateConfig& cfg) {
    EnumerateOptions opts;
    opts.distinct_neighborhoods = cfg.distinct_neighborhoods;
    opts.vertex_limit = cfg.max_vertices;
    opts.workers = cfg.workers;
    const auto graphs = enumerate_biregular(cfg.r, cfg.sigma1, cfg.s, cfg.sigma2, opts);
    json out;
    out["parameters"] = {cfg.r, cfg.sigma1, cfg.s, cfg.sigma2};
    out["distinct_neighborhoods"] = cfg.distinct_neighborhoods;
    out["count"] = graphs.size();
    json list = json::array();
    for (const auto& g : graphs) list.push_back(graph_to_json(g));
    out["graphs"] = std::move(list);
    return out;
}

/// Graph predicates for the `graph` subcommand.
inline json cmd_graph_predicates(const BipartiteGraph& g) {
    json out = graph_to_json(g);
    const auto deg = bidegree(g);
    out["connected"] = is_connected(g);
    out["simple"] = g.is_simple();
    out["semi_regular"] = deg.has_value();
    out["bidegree"] = deg ? json{deg->sigma1, deg->sigma2} : json(nullptr);
    out["reflexive"] = is_reflexive(g);
    out["salem"] = is_salem(g);
    out["duplicate_neighborhoods"] = g.is_simple() ? json(has_duplicate_neighborhoods(g)) : json(nullptr);
    out["edge_transitive"] =
        (g.is_simple() && g.vertex_count() <= 32) ? json(is_edge_transitive(g)) : json(nullptr);
    return out;
}

}  // namespace starquiver
