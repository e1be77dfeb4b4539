#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "rigged/cartan.hpp"
#include "rigged/crystal.hpp"
#include "rigged/graph_io.hpp"
#include "rigged/kr_tableaux.hpp"
#include "rigged/promotion.hpp"
#include "rigged/rc_ops.hpp"
#include "rigged/stembridge.hpp"
#include "rigged/type_a.hpp"

namespace {

using namespace rigged;

struct Options {
    std::string instance_path;
    std::string graph_path;     // verify --graph
    std::string family = "A";   // verify --graph --family
    std::string format = "dot"; // graph --format
    std::string output;         // graph --output ("" = stdout)
    bool vacancies = false;
    bool literal = false;
    bool both = false;
    bool trace = false;
    std::int64_t witness_limit = 20;
    std::int64_t max_vertices = 0; // 0 = default/env
};

GenerationLimits make_limits(const Options& opt) {
    GenerationLimits limits;
    if (const char* env = std::getenv("RIGGED_MAX_VERTICES")) {
        try {
            limits.max_vertices = std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("RIGGED_MAX_VERTICES is not an integer");
        }
    }
    if (opt.max_vertices > 0) {
        limits.max_vertices = opt.max_vertices;
    }
    if (limits.max_vertices < 1) {
        throw std::invalid_argument("vertex cap must be positive");
    }
    return limits;
}

Instance need_instance(const Options& opt) {
    if (opt.instance_path.empty()) {
        throw std::invalid_argument("this command needs an instance file");
    }
    return load_instance(opt.instance_path);
}

TypeATuple need_tuple(const Instance& inst) {
    if (inst.lambda) {
        return *inst.lambda;
    }
    if (inst.weight) {
        std::vector<std::int64_t> tuple =
            tuple_from_weight_or_empty(*inst.weight, inst.L.box_count());
        if (!tuple.empty()) {
            return TypeATuple(tuple);
        }
        throw std::invalid_argument("weight is not the weight of a content tuple");
    }
    throw std::invalid_argument("instance needs \"lambda\" or \"weight\"");
}

Weight need_weight(const Instance& inst) {
    if (inst.weight) {
        return *inst.weight;
    }
    if (inst.lambda) {
        return inst.lambda->to_weight();
    }
    throw std::invalid_argument("instance needs \"lambda\" or \"weight\"");
}

const RiggedConfiguration& need_rc(const Instance& inst) {
    if (!inst.rc) {
        throw std::invalid_argument("instance needs an \"rc\" entry");
    }
    return *inst.rc;
}

void write_text(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) {
        throw std::invalid_argument("cannot open output file: " + opt.output);
    }
    out << text;
}

int run_hw(const Options& opt) {
    const Instance inst = need_instance(opt);
    const std::vector<RiggedConfiguration> hw =
        highest_weight_rcs(inst.algebra, inst.L, need_weight(inst));
    std::cout << "count: " << hw.size() << "\n";
    for (const RiggedConfiguration& rc : hw) {
        std::cout << "rc: " << rc.encode() << "\n"
                  << render_rc(inst.algebra, inst.L, rc, opt.vacancies);
    }
    return 0;
}

int run_closure(const Options& opt) {
    const Instance inst = need_instance(opt);
    const RcCrystal set = generate_rc_set(inst.algebra, inst.L, make_limits(opt));
    std::cout << "|RC(L)| = " << set.graph.size() << "\n";
    std::cout << "components: " << set.graph.components().size() << "\n";
    for (const auto& [weight, ids] : set.graph.fibers()) {
        std::cout << "fiber " << weight.to_string() << ": " << ids.size() << "\n";
    }
    return 0;
}

int run_graph(const Options& opt) {
    const Instance inst = need_instance(opt);
    RcCrystal set = inst.rc
                        ? generate_component(inst.algebra, inst.L, *inst.rc, make_limits(opt))
                        : generate_rc_set(inst.algebra, inst.L, make_limits(opt));
    if (opt.format == "dot") {
        write_text(opt, graph_to_dot(set.graph));
    } else if (opt.format == "json") {
        write_text(opt, graph_to_json(set.graph).dump(2) + "\n");
    } else {
        throw std::invalid_argument("unknown graph format: " + opt.format);
    }
    return 0;
}

int run_verify(const Options& opt) {
    if (!opt.graph_path.empty()) {
        std::ifstream in(opt.graph_path);
        if (!in) {
            throw std::invalid_argument("cannot open graph file: " + opt.graph_path);
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& err) {
            throw std::invalid_argument("malformed JSON in " + opt.graph_path + ": " +
                                        err.what());
        }
        const CrystalGraph graph = graph_from_json(j);
        const AlgebraData alg(family_from_string(opt.family), graph.rank);
        const AxiomReport report = verify_regular(graph, alg);
        std::cout << report.to_string();
        std::cout << "axioms: " << (report.all_passed() ? "all pass" : "FAIL")
                  << "; components: " << graph.components().size()
                  << "; |V| = " << graph.size() << "\n";
        return report.all_passed() ? 0 : 1;
    }

    const Instance inst = need_instance(opt);
    const RcCrystal set = generate_rc_set(inst.algebra, inst.L, make_limits(opt));
    const AxiomReport report = verify_regular(set.graph, inst.algebra);
    std::cout << report.to_string();

    bool colabels = true;
    bool weights = true;
    for (int v = 0; v < set.graph.size(); ++v) {
        const RiggedConfiguration& rc = set.elements[static_cast<size_t>(v)];
        colabels = colabels && validate_rc(inst.algebra, inst.L, rc);
        weights = weights && (rc_weight(inst.algebra, inst.L, rc.shape()) ==
                              set.graph.weights[static_cast<size_t>(v)]);
    }
    bool constant_cc = true;
    for (const auto& component : set.graph.components()) {
        for (int v : component) {
            constant_cc = constant_cc &&
                          set.graph.cocharges[static_cast<size_t>(v)] ==
                              set.graph.cocharges[static_cast<size_t>(component.front())];
        }
    }
    std::cout << "colabel floor: " << (colabels ? "pass" : "FAIL") << "\n";
    std::cout << "weight decorations: " << (weights ? "pass" : "FAIL") << "\n";
    std::cout << "cocharge constancy: " << (constant_cc ? "pass" : "FAIL") << "\n";

    const bool ok = report.all_passed() && colabels && weights && constant_cc;
    std::cout << "axioms: " << (report.all_passed() ? "all pass" : "FAIL")
              << "; components: " << set.graph.components().size()
              << "; |RC(L)| = " << set.graph.size() << "\n";
    return ok ? 0 : 1;
}

int run_fermionic(const Options& opt) {
    const Instance inst = need_instance(opt);
    const TypeATuple lambda = need_tuple(inst);
    const LaurentPolynomial fermi =
        fermionic_M(inst.algebra, inst.L, lambda, opt.literal, opt.witness_limit);
    if (!opt.both) {
        std::cout << polynomial_lines(fermi);
        return 0;
    }
    const LaurentPolynomial direct = direct_M(inst.algebra, inst.L, lambda, make_limits(opt));
    std::cout << "fermionic:\n" << polynomial_lines(fermi);
    std::cout << "direct:\n" << polynomial_lines(direct);
    const bool match = fermi == direct;
    std::cout << "match: " << (match ? "yes" : "NO") << "\n";
    return match ? 0 : 1;
}

int run_direct(const Options& opt) {
    const Instance inst = need_instance(opt);
    std::cout << polynomial_lines(
        direct_M(inst.algebra, inst.L, need_tuple(inst), make_limits(opt)));
    return 0;
}

int run_extended(const Options& opt) {
    const Instance inst = need_instance(opt);
    const ExtendedCheck check =
        is_extended_rc(inst.algebra, inst.L, need_tuple(inst), need_rc(inst));
    std::cout << "member: " << (check.member ? "yes" : "no") << "\n";
    if (check.witness) {
        std::cout << "witness: " << check.witness->to_string() << "\n";
        std::cout << "rows: " << tableau_to_json(*check.witness).dump() << "\n";
    }
    return 0;
}

int run_promote(const Options& opt) {
    const Instance inst = need_instance(opt);
    const TypeATuple lambda = need_tuple(inst);
    PromotionTrace trace;
    const RiggedConfiguration result =
        promote(inst.algebra, inst.L, need_rc(inst), lambda, &trace);
    if (opt.trace && trace.after_lowering) {
        const AlgebraData ambient(Family::A, inst.algebra.rank() + 1);
        std::cout << "after lowering: " << trace.after_lowering->encode() << "\n"
                  << render_rc(ambient, inst.L, *trace.after_lowering, opt.vacancies);
        for (size_t i = 0; i < trace.after_pass.size(); ++i) {
            std::cout << "after pass " << (i + 1) << ": " << trace.after_pass[i].encode()
                      << "\n"
                      << render_rc(ambient, inst.L, trace.after_pass[i], opt.vacancies);
        }
    }
    std::cout << "pr: " << result.encode() << "\n"
              << render_rc(inst.algebra, inst.L, result, opt.vacancies);
    return 0;
}

int run_affine(const Options& opt, bool lowering) {
    const Instance inst = need_instance(opt);
    const PromotionTable table(inst.algebra, inst.L, make_limits(opt));
    const RiggedConfiguration& rc = need_rc(inst);
    const std::optional<RiggedConfiguration> result =
        lowering ? table.f0(rc) : table.e0(rc);
    const char* name = lowering ? "f0" : "e0";
    if (!result) {
        std::cout << name << ": undefined\n";
        return 0;
    }
    std::cout << name << ": " << result->encode() << "\n"
              << render_rc(inst.algebra, inst.L, *result, opt.vacancies);
    return 0;
}

// Partition shape of the irreducible component with the given dominant
// highest weight (row i = sum of the coordinates from i on).
Partition shape_of_weight(const Weight& w) {
    Partition shape;
    std::int64_t acc = 0;
    std::vector<std::int64_t> rows;
    for (int a = w.rank(); a >= 1; --a) {
        acc += w[a];
        rows.push_back(acc);
    }
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (*it > 0) {
            shape.push_back(*it);
        }
    }
    return shape;
}

int run_oracle(const Options& opt) {
    const Instance inst = need_instance(opt);
    if (!inst.algebra.is_type_a()) {
        throw std::invalid_argument("the tableaux oracle exists for type A only");
    }
    const int n = inst.algebra.rank() + 1;
    std::vector<KrShape> shapes;
    for (const auto& [key, count] : inst.L.entries()) {
        for (std::int64_t c = 0; c < count; ++c) {
            shapes.push_back({key.first, static_cast<int>(key.second)});
        }
    }
    if (shapes.empty()) {
        throw std::invalid_argument("the instance has no tensor factors");
    }
    const GenerationLimits limits = make_limits(opt);
    const PathCrystal paths = generate_path_set(shapes, n, limits);
    const RcCrystal rcs = generate_rc_set(inst.algebra, inst.L, limits);

    std::cout << "paths: " << paths.graph.size() << "\n";
    std::cout << "rcs: " << rcs.graph.size() << "\n";
    bool ok = paths.graph.size() == rcs.graph.size();

    const auto path_fibers = paths.graph.fibers();
    const auto rc_fibers = rcs.graph.fibers();
    std::map<Weight, std::pair<std::int64_t, std::int64_t>> merged;
    for (const auto& [w, ids] : path_fibers) {
        merged[w].first = static_cast<std::int64_t>(ids.size());
    }
    for (const auto& [w, ids] : rc_fibers) {
        merged[w].second = static_cast<std::int64_t>(ids.size());
    }
    for (const auto& [w, counts] : merged) {
        std::cout << "fiber " << w.to_string() << ": paths " << counts.first << ", rcs "
                  << counts.second << "\n";
        ok = ok && counts.first == counts.second;
    }

    // Pair the sources of both sides by weight and check graph isomorphism
    // and the backtracking size oracle component by component.
    std::map<Weight, std::vector<int>> path_sources;
    for (int v : paths.graph.sources()) {
        path_sources[paths.graph.weights[static_cast<size_t>(v)]].push_back(v);
    }
    std::map<Weight, std::vector<int>> rc_sources;
    for (int v : rcs.graph.sources()) {
        rc_sources[rcs.graph.weights[static_cast<size_t>(v)]].push_back(v);
    }
    std::int64_t pairs = 0;
    std::int64_t iso_pass = 0;
    std::int64_t size_pass = 0;
    bool pairing_ok = true;
    for (const auto& [w, pv] : path_sources) {
        auto it = rc_sources.find(w);
        if (it == rc_sources.end() || it->second.size() != pv.size()) {
            pairing_ok = false;
            continue;
        }
        for (size_t i = 0; i < pv.size(); ++i) {
            ++pairs;
            const PathCrystal pc = generate_path_component(
                paths.elements[static_cast<size_t>(pv[i])], n, limits);
            const RcCrystal rcc = generate_component(
                inst.algebra, inst.L, rcs.elements[static_cast<size_t>(it->second[i])],
                limits);
            if (isomorphic(pc.graph, rcc.graph)) {
                ++iso_pass;
            }
            const std::int64_t expected = ssyt_count(shape_of_weight(w), n);
            if (expected == pc.graph.size() && expected == rcc.graph.size()) {
                ++size_pass;
            }
        }
    }
    std::cout << "hw pairs: " << pairs << "\n";
    std::cout << "isomorphic: " << iso_pass << "/" << pairs << "\n";
    std::cout << "sizes match ssyt oracle: " << size_pass << "/" << pairs << "\n";
    ok = ok && pairing_ok && iso_pass == pairs && size_pass == pairs;
    std::cout << "oracle: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of unrestricted rigged configurations"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--max-vertices", opt.max_vertices,
                   "generation cap (overrides RIGGED_MAX_VERTICES)");
    app.add_flag("--vacancies", opt.vacancies, "render vacancy numbers");

    CLI::App* hw = app.add_subcommand("hw", "list the highest-weight rigged configurations");
    hw->add_option("instance", opt.instance_path, "instance JSON file")->required();

    CLI::App* closure = app.add_subcommand("closure", "generate RC(L) and print fiber sizes");
    closure->add_option("instance", opt.instance_path)->required();

    CLI::App* graph = app.add_subcommand("graph", "emit the crystal graph");
    graph->add_option("instance", opt.instance_path)->required();
    graph->add_option("--format", opt.format, "dot or json");
    graph->add_option("--output", opt.output, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the local axiom verifier");
    verify->add_option("instance", opt.instance_path, "instance JSON file");
    verify->add_option("--graph", opt.graph_path, "verify a graph JSON file instead");
    verify->add_option("--family", opt.family, "algebra family for --graph (default A)");

    CLI::App* fermionic = app.add_subcommand("fermionic", "evaluate the closed formula");
    fermionic->add_option("instance", opt.instance_path)->required();
    fermionic->add_flag("--literal", opt.literal, "sum subsets one by one");
    fermionic->add_flag("--both", opt.both, "also compute the crystal sum and compare");
    fermionic->add_option("--warn-bound", opt.witness_limit,
                          "largest witness count the subset sum accepts");

    CLI::App* direct = app.add_subcommand("direct", "crystal-side generating function");
    direct->add_option("instance", opt.instance_path)->required();

    CLI::App* extended = app.add_subcommand("extended", "lower-bound membership test");
    extended->add_option("instance", opt.instance_path)->required();

    CLI::App* promote_cmd = app.add_subcommand("promote", "apply the promotion operator");
    promote_cmd->add_option("instance", opt.instance_path)->required();
    promote_cmd->add_flag("--trace", opt.trace, "print intermediate states");

    CLI::App* f0 = app.add_subcommand("f0", "apply the affine lowering operator");
    f0->add_option("instance", opt.instance_path)->required();
    CLI::App* e0 = app.add_subcommand("e0", "apply the affine raising operator");
    e0->add_option("instance", opt.instance_path)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "compare against the tableaux crystal");
    oracle->add_option("instance", opt.instance_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (hw->parsed()) return run_hw(opt);
        if (closure->parsed()) return run_closure(opt);
        if (graph->parsed()) return run_graph(opt);
        if (verify->parsed()) return run_verify(opt);
        if (fermionic->parsed()) return run_fermionic(opt);
        if (direct->parsed()) return run_direct(opt);
        if (extended->parsed()) return run_extended(opt);
        if (promote_cmd->parsed()) return run_promote(opt);
        if (f0->parsed()) return run_affine(opt, true);
        if (e0->parsed()) return run_affine(opt, false);
        if (oracle->parsed()) return run_oracle(opt);
        std::cerr << "input error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const VertexLimitError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
