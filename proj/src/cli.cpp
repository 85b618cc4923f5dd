#include "itcraft/cli.hpp"

#include "itcraft/certify.hpp"
#include "itcraft/construct.hpp"
#include "itcraft/decompose.hpp"
#include "itcraft/dot.hpp"
#include "itcraft/error.hpp"
#include "itcraft/io.hpp"
#include "itcraft/listcover.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>

namespace itcraft::cli {

namespace {

    using nlohmann::json;

    int exit_code(ErrorCode code)
    {
        switch (code) {
        case ErrorCode::BudgetExceeded:
        case ErrorCode::BaseBudgetExceeded:
            return kBudget;
        case ErrorCode::BaseHasIT:
        case ErrorCode::StepPreconditionFailed:
        case ErrorCode::PreconditionFailed:
        case ErrorCode::NotCoverGraph:
        case ErrorCode::NotFound:
            return kNo;
        default:
            return kInvalid;
        }
    }

    void report_error(std::ostream& err, const std::string& code, const std::string& message,
        std::optional<std::size_t> step = std::nullopt)
    {
        json j{{"error", code}, {"message", message}};
        if (step)
            j["step"] = *step;
        err << j.dump() << "\n";
    }

    struct Params {
        std::size_t a = 0, b = 0, d = 0, m = 0, k = 0, n = 0, r = 0, l1 = 0, l2 = 0, l3 = 0;
        std::uint64_t seed = 0;
        std::string seed_graph;
        std::map<std::string, CLI::Option*> opts;

        std::size_t need(const std::string& name) const
        {
            auto it = opts.find(name);
            if (it == opts.end() || it->second->count() == 0)
                throw Error(ErrorCode::InvalidArgument, "missing --" + name);
            return it->second->as<std::size_t>();
        }
    };

    SearchBudget budget_of(std::uint64_t nodes, std::uint64_t ms)
    {
        SearchBudget b;
        b.max_nodes = nodes;
        if (ms > 0)
            b.time_limit = std::chrono::milliseconds(ms);
        return b;
    }

    void emit(const std::string& path, const std::string& text, std::ostream& out)
    {
        if (path.empty() || path == "-")
            out << text;
        else
            write_text_file(path, text);
    }

    void emit_json(const std::string& path, const json& j, std::ostream& out) { emit(path, j.dump() + "\n", out); }

    json summary(const PartitionedGraph& g)
    {
        const auto s = stats(g);
        return json{{"n", g.n()}, {"r", g.r()}, {"edges", g.edge_count()}, {"max_degree", s.max_degree},
            {"local_degree", s.local_degree}, {"multiplicity", s.multiplicity}, {"components", s.component_count},
            {"block_sizes", s.block_sizes}};
    }

    Certificate base_only(const PartitionedGraph& g)
    {
        Certificate c;
        c.steps.push_back(BaseStep{g});
        return c;
    }

    struct Generated {
        PartitionedGraph graph;
        Certificate certificate;
        json report = json::object();
    };

    Generated generate(const std::string& family, const Params& p)
    {
        auto plain = [](Construction c) { return Generated{std::move(c.graph), std::move(c.certificate)}; };
        auto join_power = [](JoinPowerConstruction c) {
            json rep{{"copies", c.report.copies}, {"formula_copies", c.report.formula_copies},
                {"padding", c.report.padding}, {"matches_formula", c.report.matches_formula}};
            return Generated{std::move(c.graph), std::move(c.certificate), rep};
        };
        if (family == "complete-bipartite") {
            auto g = gen_complete_bipartite(p.need("a"), p.need("b"));
            return Generated{g, base_only(g)};
        }
        if (family == "multipartite-base") {
            auto g = gen_multipartite_base(p.need("r"), p.need("m"));
            return Generated{g, base_only(g)};
        }
        if (family == "szabo-tardos")
            return plain(gen_szabo_tardos(p.need("d")));
        if (family == "yuster")
            return plain(gen_yuster(p.need("d")));
        if (family == "cycle-partition")
            return plain(gen_cycle_partition(p.need("r")));
        if (family == "three-cycles")
            return plain(gen_three_cycles(p.need("l1"), p.need("l2"), p.need("l3")));
        if (family == "locally-sparse")
            return plain(gen_locally_sparse(p.need("d"), p.need("m")));
        if (family == "list-coloring-cx")
            return plain(gen_list_coloring_cx(p.need("d")));
        if (family == "ahhs-cx")
            return plain(gen_ahhs_cx(p.need("d")));
        if (family == "star-free-cx") {
            auto c = gen_star_free_cx(p.need("k"), p.need("m"));
            json rep{{"d", c.report.d}, {"block_size", c.report.block_size}, {"bound", c.report.bound},
                {"counterexample", c.report.counterexample}};
            return Generated{std::move(c.graph), std::move(c.certificate), rep};
        }
        if (family == "join-power") {
            if (p.seed_graph.empty())
                throw Error(ErrorCode::InvalidArgument, "missing --seed-graph");
            const auto seed = graph_from_json(read_json_file(p.seed_graph));
            const auto k = p.opts.at("k")->count() ? p.need("k") : 0;
            return join_power(gen_join_power(seed, p.need("n"), k));
        }
        if (family == "general-szabo-tardos")
            return join_power(gen_general_szabo_tardos(p.need("n"), p.need("r")));
        if (family == "complete-multipartite")
            return join_power(gen_complete_multipartite(p.need("r"), p.need("m")));
        if (family == "random-kdd-joins")
            return plain(gen_random_kdd_joins(p.need("d"), p.need("k"), p.seed));
        throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
    }

    int tri_exit(Tri t) { return t == Tri::True ? kOk : t == Tri::False ? kNo : kBudget; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Independent transversal constructions, certificates and checks", "itcraft"};
    app.require_subcommand(1);

    std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
    std::uint64_t budget_ms = 0;
    std::uint64_t base_nodes = default_base_budget().max_nodes;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", budget_nodes, "search node cap");
        sub->add_option("--time-ms", budget_ms, "search wall-clock cap in milliseconds");
    };

    // gen
    Params params;
    std::string family, out_path, cert_path;
    auto* gen = app.add_subcommand("gen", "generate a construction");
    gen->add_option("family", family, "construction family")->required();
    for (auto [name, slot] : std::vector<std::pair<std::string, std::size_t*>>{{"a", &params.a}, {"b", &params.b},
             {"d", &params.d}, {"m", &params.m}, {"k", &params.k}, {"n", &params.n}, {"r", &params.r},
             {"l1", &params.l1}, {"l2", &params.l2}, {"l3", &params.l3}})
        params.opts[name] = gen->add_option("--" + name, *slot);
    gen->add_option("--seed", params.seed, "RNG seed for random-kdd-joins");
    gen->add_option("--seed-graph", params.seed_graph, "seed graph for join-power");
    gen->add_option("-o,--output", out_path, "graph output path");
    gen->add_option("--cert", cert_path, "certificate output path");

    // check
    std::string graph_path;
    auto* check = app.add_subcommand("check", "analyse a graph");
    check->require_subcommand(1);
    std::map<std::string, CLI::App*> checks;
    for (auto [name, help] : std::vector<std::pair<const char*, const char*>>{{"it", "search for an IT"},
             {"minimal", "block-minimality"}, {"stats", "structural statistics"},
             {"listcover", "list cover conditions"}, {"abc", "decomposition hypotheses"}}) {
        auto* sub = check->add_subcommand(name, help);
        sub->add_option("graph", graph_path)->required();
        add_budget(sub);
        checks[name] = sub;
    }

    // certify
    std::string cert_in, against;
    bool cross = false;
    auto* certify = app.add_subcommand("certify", "verify a certificate");
    certify->add_option("certificate", cert_in)->required();
    certify->add_option("--against", against, "graph the certificate must reproduce");
    certify->add_flag("--cross-validate", cross, "also run exhaustive search on the result");
    certify->add_option("--base-budget", base_nodes, "node cap for each payload check");
    add_budget(certify);

    // decompose
    bool use_imc = false;
    auto* decompose = app.add_subcommand("decompose", "rebuild a graph as a join certificate");
    decompose->add_option("graph", graph_path)->required();
    decompose->add_option("-o,--output", out_path);
    decompose->add_flag("--imc", use_imc, "locate components through induced matching configurations");
    add_budget(decompose);

    // conversions
    std::string in_path;
    auto* cover = app.add_subcommand("cover", "list instance to cover graph");
    cover->add_option("instance", in_path)->required();
    cover->add_option("-o,--output", out_path);
    auto* recover = app.add_subcommand("recover", "cover graph to list instance");
    recover->add_option("graph", in_path)->required();
    recover->add_option("-o,--output", out_path);
    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    dot->add_option("graph", in_path)->required();
    dot->add_option("-o,--output", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        report_error(err, "InvalidArgument", e.what());
        return kInvalid;
    }

    const auto budget = budget_of(budget_nodes, budget_ms);
    const auto base_budget = budget_of(base_nodes, 0);

    try {
        if (gen->parsed()) {
            auto made = generate(family, params);
            emit_json(out_path, graph_to_json(made.graph), out);
            if (!cert_path.empty())
                write_json_file(cert_path, certificate_to_json(made.certificate));
            if (!out_path.empty() && out_path != "-") {
                auto s = summary(made.graph);
                s["family"] = family;
                if (!made.report.empty())
                    s["report"] = made.report;
                out << s.dump() << "\n";
            }
            return kOk;
        }

        if (check->parsed()) {
            const auto g = graph_from_json(read_json_file(graph_path));
            if (checks["it"]->parsed()) {
                const auto res = find_it(g, budget);
                json j{{"nodes", res.nodes}};
                if (res.status == SearchStatus::Found) {
                    j["result"] = "found";
                    j["transversal"] = res.transversal->picks();
                }
                else
                    j["result"] = res.status == SearchStatus::None ? "none" : "budget_exceeded";
                out << j.dump() << "\n";
                return res.status == SearchStatus::Found ? kOk : res.status == SearchStatus::None ? kNo : kBudget;
            }
            if (checks["minimal"]->parsed()) {
                const auto t = is_block_minimal(g, budget);
                json j{{"block_minimal", t == Tri::BudgetExceeded ? json("budget_exceeded") : json(t == Tri::True)}};
                out << j.dump() << "\n";
                return tri_exit(t);
            }
            if (checks["stats"]->parsed()) {
                const auto s = stats(g);
                out << json{{"max_degree", s.max_degree}, {"local_degree", s.local_degree},
                    {"multiplicity", s.multiplicity}, {"component_count", s.component_count},
                    {"block_sizes", s.block_sizes}}
                           .dump()
                    << "\n";
                return kOk;
            }
            if (checks["listcover"]->parsed()) {
                const auto c = check_list_cover_conditions(g);
                out << json{{"a", c.a}, {"b", c.b}}.dump() << "\n";
                return c.a && c.b ? kOk : kNo;
            }
            const auto abc = check_abc(g, budget);
            out << json{{"a", abc.a}, {"b", abc.b}, {"c", abc.c}}.dump() << "\n";
            return abc.all() ? kOk : kNo;
        }

        if (certify->parsed()) {
            const auto cert = certificate_from_json(read_json_file(cert_in));
            const auto rep = verify_certificate(cert, base_budget);
            json j{{"verified", true}, {"n", rep.graph.n()}, {"r", rep.graph.r()}, {"steps", rep.steps.size()},
                {"payload_checks", rep.payload_checks}};
            bool ok = true;
            if (!against.empty()) {
                const auto target = graph_from_json(read_json_file(against));
                const bool match = canonical_string(rep.graph) == canonical_string(target);
                j["matches"] = match;
                ok = ok && match;
            }
            if (cross) {
                const auto res = find_it(rep.graph, budget);
                if (res.status == SearchStatus::BudgetExceeded) {
                    j["cross_validate"] = json{{"result", "budget_exceeded"}, {"nodes", res.nodes}};
                    out << j.dump() << "\n";
                    return kBudget;
                }
                json cv{{"agree", res.status == SearchStatus::None}, {"nodes", res.nodes}};
                if (res.transversal)
                    cv["counterexample"] = res.transversal->picks();
                j["cross_validate"] = cv;
                ok = ok && res.status == SearchStatus::None;
            }
            out << j.dump() << "\n";
            return ok ? kOk : kNo;
        }

        if (decompose->parsed()) {
            const auto g = graph_from_json(read_json_file(graph_path));
            const auto cert = decompose_to_certificate(g, budget, use_imc);
            emit_json(out_path, certificate_to_json(cert), out);
            return kOk;
        }

        if (cover->parsed()) {
            emit_json(out_path, graph_to_json(cover_graph(instance_from_json(read_json_file(in_path)))), out);
            return kOk;
        }
        if (recover->parsed()) {
            emit_json(out_path, instance_to_json(recover_instance(graph_from_json(read_json_file(in_path)))), out);
            return kOk;
        }
        if (dot->parsed()) {
            emit(out_path, to_dot(graph_from_json(read_json_file(in_path))), out);
            return kOk;
        }
    }
    catch (const Error& e) {
        report_error(err, std::string(to_string(e.code())), e.what(), e.step());
        return exit_code(e.code());
    }
    catch (const std::exception& e) {
        report_error(err, "Internal", e.what());
        return kInvalid;
    }
    return kInvalid;
}

} // namespace itcraft::cli
