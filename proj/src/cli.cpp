#include "bkpvc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkpvc/bounds.hpp"
#include "bkpvc/campaign.hpp"
#include "bkpvc/error.hpp"
#include "bkpvc/forest_io.hpp"
#include "bkpvc/generate.hpp"
#include "bkpvc/solver.hpp"

namespace bkpvc {

using nlohmann::json;

CoverSet parse_cover(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '@') {
        std::ifstream in(body.substr(1));
        if (!in) throw Error(Errc::parse_error, "cannot open cover file " + body.substr(1));
        std::ostringstream content;
        content << in.rdbuf();
        body = content.str();
    }
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '[') {
        try {
            return CoverSet(json::parse(body).get<std::vector<Vertex>>());
        } catch (const json::exception& e) {
            throw Error(Errc::parse_error, std::string("cover: ") + e.what());
        }
    }
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<Vertex> members;
    std::string token;
    while (in >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
            throw Error(Errc::parse_error, "cover: bad vertex id \"" + token + "\"");
        }
        members.push_back(static_cast<Vertex>(std::stoul(token)));
    }
    return CoverSet(std::move(members));
}

namespace {

json violation_json(const Violation& v) { return {{"kind", to_string(v.kind)}, {"witness", v.witness}}; }

json bound_json(const BoundValue& b) {
    return {{"kind", to_string(b.kind)},
            {"n", b.n},
            {"k", b.k},
            {"exact", std::to_string(b.numerator) + "/" + std::to_string(b.denominator)},
            {"numerator", b.numerator},
            {"denominator", b.denominator},
            {"ceiling", b.ceiling},
            {"integral", b.integral()}};
}

json trace_json(const PeelTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step{{"case", to_string(s.kind)},
                  {"removed", s.removed},
                  {"p_removed", s.p_removed},
                  {"residual_before", s.residual_before},
                  {"residual_after", s.residual_after}};
        if (s.stop) step["stop"] = to_string(*s.stop);
        if (s.kept_branching) {
            step["kept_branching"] = *s.kept_branching;
            step["fan_width"] = s.fan_width;
            step["kept_was_covered"] = s.kept_was_covered;
        }
        steps.push_back(std::move(step));
    }
    return {{"n", trace.n},
            {"k", trace.k},
            {"cover_size", trace.cover_size},
            {"bound", bound_json(trace.bound)},
            {"certified", trace.certified},
            {"steps", std::move(steps)}};
}

ForestKind parse_kind(const std::string& s) { return s == "directed" ? ForestKind::directed : ForestKind::undirected; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branching k-path vertex cover of forests"};
    app.name("bkpvc");
    app.require_subcommand(1);
    const auto kinds = CLI::IsMember({"directed", "undirected"});

    std::string forest_path;
    std::string cover_text;
    std::size_t k = 0;

    auto* verify = app.add_subcommand("verify", "Check whether a vertex set is a branching k-path vertex cover");
    bool naive = false;
    verify->add_option("--forest", forest_path, "Forest JSON file")->required();
    verify->add_option("--k", k, "Path size")->required();
    verify->add_option("--cover", cover_text, "Comma-separated ids or @file")->required();
    verify->add_flag("--naive", naive, "Use the path-enumerating checker");

    auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum cover");
    bool oracle = false;
    std::size_t cutoff = default_bruteforce_cutoff;
    solve_cmd->add_option("--forest", forest_path, "Forest JSON file")->required();
    solve_cmd->add_option("--k", k, "Path size")->required();
    solve_cmd->add_flag("--oracle", oracle, "Use exhaustive search");
    solve_cmd->add_option("--cutoff", cutoff, "Largest n accepted by --oracle")->capture_default_str();

    auto* bound = app.add_subcommand("bound", "Print a lower bound on the cover number");
    std::string kind_text;
    std::size_t n = 0;
    bound->add_option("--kind", kind_text, "directed or undirected")->required()->check(kinds);
    bound->add_option("--n", n, "Vertex count")->required();
    bound->add_option("--k", k, "Path size")->required();

    auto* certify = app.add_subcommand("certify", "Emit the peeling certificate for a directed forest and cover");
    certify->add_option("--forest", forest_path, "Directed forest JSON file")->required();
    certify->add_option("--k", k, "Path size")->required();
    certify->add_option("--cover", cover_text, "Comma-separated ids or @file")->required();

    std::string format = "json";
    auto* reduce = app.add_subcommand("reduce", "Reduce an undirected forest to a rooted directed forest");
    reduce->add_option("--forest", forest_path, "Undirected forest JSON file")->required();
    reduce->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* generate = app.add_subcommand("generate", "Generate a tight-family or random forest");
    std::string family;
    std::size_t index = 0;
    bool random = false;
    bool dot = false;
    std::uint64_t seed = 0;
    double bias = 0.1;
    auto* family_opt = generate->add_option("--family", family, "directed-extremal or undirected-extremal")
                           ->check(CLI::IsMember({"directed-extremal", "undirected-extremal"}));
    auto* random_opt = generate->add_flag("--random", random, "Random forest");
    family_opt->excludes(random_opt);
    generate->add_option("--i", index, "Family index")->needs(family_opt);
    generate->add_option("--k", k, "Path size")->needs(family_opt);
    generate->add_option("--kind", kind_text, "directed or undirected")->check(kinds)->needs(random_opt);
    generate->add_option("--n", n, "Vertex count")->needs(random_opt);
    generate->add_option("--seed", seed, "Generator seed")->needs(random_opt);
    generate->add_option("--bias", bias, "Chance of starting a new component")->needs(random_opt)->capture_default_str();
    generate->add_flag("--dot", dot, "Emit DOT instead of JSON");
    generate->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* campaign = app.add_subcommand("campaign", "Check the lower bounds on random forests");
    CampaignConfig config;
    campaign->add_option("--kind", kind_text, "directed or undirected")->required()->check(kinds);
    campaign->add_option("--n-min", config.n_min)->required();
    campaign->add_option("--n-max", config.n_max)->required();
    campaign->add_option("--k-min", config.k_min)->required();
    campaign->add_option("--k-max", config.k_max)->required();
    campaign->add_option("--trials", config.trials_per_cell, "Trials per (n, k) cell")->required();
    campaign->add_option("--seed", config.seed)->required();
    campaign->add_flag("--include-extremal", config.include_extremal, "Also evaluate the tight families");
    campaign->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*verify) {
            const auto forest = read_forest_file(forest_path);
            const auto cover = parse_cover(cover_text);
            const auto result = naive ? verify_naive(forest, k, cover) : verify_fast(forest, k, cover);
            if (result.ok()) {
                out << json{{"ok", true}}.dump() << '\n';
                return exit_ok;
            }
            out << json{{"ok", false}, {"violation", violation_json(*result.violation)}}.dump() << '\n';
            return exit_semantic_failure;
        }
        if (*solve_cmd) {
            const auto forest = read_forest_file(forest_path);
            const auto result = oracle ? solve_bruteforce(forest, k, cutoff) : solve(forest, k);
            out << json{{"value", result.value}, {"witness", result.witness.members()}}.dump() << '\n';
            return exit_ok;
        }
        if (*bound) {
            out << bound_json(lower_bound(parse_kind(kind_text), n, k)).dump() << '\n';
            return exit_ok;
        }
        if (*certify) {
            const auto forest = read_forest_file(forest_path);
            const auto* directed = std::get_if<RootedDirectedForest>(&forest);
            if (!directed) throw Error(Errc::parse_error, "certify needs a directed forest");
            const auto cover = parse_cover(cover_text);
            try {
                out << trace_json(peel_certificate(*directed, k, cover)).dump() << '\n';
            } catch (const Error& e) {
                if (e.code() != Errc::not_a_cover) throw;
                const auto verdict = verify_fast(*directed, k, cover);
                out << json{{"ok", false}, {"violation", violation_json(*verdict.violation)}}.dump() << '\n';
                err << e.what() << '\n';
                return exit_semantic_failure;
            }
            return exit_ok;
        }
        if (*reduce) {
            const auto forest = read_forest_file(forest_path);
            const auto* undirected = std::get_if<UndirectedForest>(&forest);
            if (!undirected) throw Error(Errc::parse_error, "reduce needs an undirected forest");
            const auto result = reduce_to_directed(*undirected);
            if (format == "dot") {
                out << to_dot(result.forest);
                return exit_ok;
            }
            json removed = json::array();
            for (const auto& r : result.removed_per_component) {
                removed.push_back({{"removed", r.removed},
                                   {"new_root", r.new_root ? json(*r.new_root) : json(nullptr)}});
            }
            out << json{{"forest", to_json(result.forest)},
                        {"components", result.components},
                        {"removed", std::move(removed)},
                        {"to_original", result.to_original}}
                       .dump()
                << '\n';
            return exit_ok;
        }
        if (*generate) {
            AnyForest forest;
            if (random) {
                if (kind_text.empty()) throw Error(Errc::invalid_params, "--random needs --kind");
                forest = gen_random(parse_kind(kind_text), n, seed, bias);
            } else if (family == "directed-extremal") {
                forest = gen_directed_extremal(index, k);
            } else if (family == "undirected-extremal") {
                forest = gen_undirected_extremal(index, k);
            } else {
                throw Error(Errc::invalid_params, "generate needs --family or --random");
            }
            if (dot || format == "dot") {
                out << to_dot(forest);
            } else {
                out << to_json(forest).dump() << '\n';
            }
            return exit_ok;
        }
        if (*campaign) {
            config.kind = parse_kind(kind_text);
            const bool csv = format == "csv";
            if (csv) out << csv_header() << '\n';
            const auto report = run_campaign(config, [&](const TrialRecord& r) {
                out << (csv ? to_csv(r) : to_json(r).dump()) << '\n';
            });
            (csv ? err : out) << summary_json(report).dump() << '\n';
            return report.violations == 0 ? exit_ok : exit_semantic_failure;
        }
    } catch (const CampaignError& e) {
        err << e.what() << '\n';
        return exit_semantic_failure;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == Errc::not_a_cover ? exit_semantic_failure : exit_usage;
    }
    return exit_usage;
}

}  // namespace bkpvc
