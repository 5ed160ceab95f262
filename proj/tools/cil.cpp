// Command-line front end for clique and independence ideals of graphs.

#include "cil/complex.hpp"
#include "cil/errors.hpp"
#include "cil/homology.hpp"
#include "cil/resolutions.hpp"
#include "cil/serialization.hpp"
#include "cil/shellings.hpp"
#include "cil/validation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace cil;

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kGuard = 3 };

struct Options {
    std::string graph;
    int t = 2;
    std::string kind = "clique";
    std::string method = "oracle";
    std::string field = "2";
    std::string output = "text";
    std::string suite;
    std::uint64_t seed = 1;
    int count = 50;
    int n_max = 10;
    int t_max = 4;
};

FieldSpec parse_field(const std::string& text) {
    if (text == "2") return FieldSpec{};
    if (text == "0") return FieldSpec::rationals();
    if (text.rfind("p:", 0) == 0) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(text.substr(2), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size() - 2) throw InvalidInput("malformed field '" + text + "'");
        if (p >= (1UL << 31)) throw InvalidInput("field characteristic must be a prime below 2^31");
        return FieldSpec::prime(static_cast<std::uint32_t>(p));
    }
    throw InvalidInput("field must be 2, 0 or p:<prime>, got '" + text + "'");
}

struct Selected {
    Graph graph;
    MonomialIdeal ideal;
};

Selected select_ideal(const Options& opt) {
    if (opt.t < 1) throw InvalidInput("--t must be at least 1");
    Graph g = parse_graph_spec(opt.graph);
    MonomialIdeal ideal = opt.kind == "clique" ? clique_ideal(g, opt.t) : independence_ideal(g, opt.t);
    return {std::move(g), std::move(ideal)};
}

bool json_out(const Options& opt) { return opt.output == "json"; }

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_ideal(const Options& opt) {
    const Selected s = select_ideal(opt);
    if (json_out(opt))
        print(to_json(s.ideal));
    else
        std::cout << to_string(s.ideal) << '\n';
    return kOk;
}

/// Applicable Betti methods for the selected ideal, in display order.
std::vector<std::string> applicable_methods(const Selected& s, const Options& opt) {
    std::vector<std::string> methods{"oracle", "linear-quotients"};
    if (opt.kind == "independence" && s.graph == Graph::path(s.graph.n())) methods.push_back("recursion");
    return methods;
}

BettiTable betti_by(const std::string& method, const Selected& s, const Options& opt, FieldSpec field) {
    if (method == "oracle") return hochster_betti(s.ideal, field);
    if (method == "recursion") {
        if (opt.kind != "independence" || s.graph != Graph::path(s.graph.n()))
            throw InvalidInput("the recursion method applies to --kind independence on path:N only");
        return path_betti_recursion(s.graph.n(), opt.t);
    }
    // Chordal clique complements come with a constructive order; anything else is searched.
    const Graph complement = s.graph.complement();
    if (opt.kind == "clique" && is_chordal(complement))
        return betti_from_linear_quotients(linear_quotients_from_split(chordal_vertex_split(complement, opt.t)));
    const auto order = find_linear_quotients(s.ideal);
    if (!order) throw InvalidInput("the ideal has no linear quotients, so the linear-quotients method does not apply");
    return betti_from_linear_quotients(*order);
}

void print_invariants(const BettiTable& table) {
    const RegPd ideal = reg_pd_from_table(table);
    const RegPd quotient = reg_pd_from_table(table.as_quotient());
    std::cout << "reg(I)=" << ideal.reg << " pd(I)=" << ideal.pd << '\n';
    std::cout << "reg(R/I)=" << quotient.reg << " pd(R/I)=" << quotient.pd << '\n';
}

int cmd_betti(const Options& opt) {
    const FieldSpec field = parse_field(opt.field);
    const Selected s = select_ideal(opt);
    if (s.ideal.is_zero()) throw Undefined("the ideal is zero, so its Betti table is undefined");
    if (s.ideal.is_unit()) throw Undefined("the ideal is the unit ideal");
    const std::vector<std::string> methods = opt.method == "all" ? applicable_methods(s, opt) : std::vector{opt.method};

    std::vector<std::pair<std::string, BettiTable>> tables;
    for (const std::string& m : methods) tables.emplace_back(m, betti_by(m, s, opt, field));
    bool match = true;
    for (const auto& entry : tables) match = match && entry.second == tables.front().second;

    if (json_out(opt)) {
        Json doc{{"ideal", to_json(s.ideal)}, {"field", to_string(field)}};
        Json by_method = Json::object();
        for (const auto& [m, table] : tables) by_method[m] = to_json(table);
        doc["tables"] = by_method;
        const BettiTable& first = tables.front().second;
        const RegPd ideal = reg_pd_from_table(first);
        const RegPd quotient = reg_pd_from_table(first.as_quotient());
        doc["reg_ideal"] = ideal.reg;
        doc["pd_ideal"] = ideal.pd;
        doc["reg_quotient"] = quotient.reg;
        doc["pd_quotient"] = quotient.pd;
        if (opt.method == "all") doc["verdict"] = match ? "MATCH" : "MISMATCH";
        print(doc);
    } else {
        std::cout << "ideal: " << to_string(s.ideal) << '\n';
        for (const auto& [m, table] : tables) {
            std::cout << "method: " << m << (m == "oracle" ? " over " + to_string(field) : std::string()) << '\n';
            std::cout << render_text(table);
        }
        print_invariants(tables.front().second);
        if (opt.method == "all") std::cout << "verdict: " << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match ? kOk : kPropertyFailure;
}

int cmd_complex(const Options& opt) {
    const Selected s = select_ideal(opt);
    const SimplicialComplex complex = stanley_reisner_complex(s.ideal);
    if (complex.is_void()) throw Undefined("the unit ideal has the void complex");
    const DimensionInfo info = dimension_and_purity(complex);
    if (json_out(opt)) {
        Json doc = to_json(complex);
        doc["dim"] = info.dim;
        doc["pure"] = info.pure;
        print(doc);
    } else {
        std::cout << to_string(complex) << '\n' << "dim " << info.dim << ", " << (info.pure ? "pure" : "not pure") << '\n';
    }
    return kOk;
}

int cmd_shelling(const Options& opt) {
    const Selected s = select_ideal(opt);
    const SimplicialComplex complex = stanley_reisner_complex(s.ideal);
    if (complex.is_void()) throw Undefined("the unit ideal has the void complex");
    const int n = s.graph.n();
    std::optional<ShellingOrder> order;
    std::string source = "search";
    if (opt.kind == "clique" && s.graph == Graph::path(n).complement() && n >= 2 * opt.t - 1) {
        order = path_shelling(n, opt.t);
        source = "path construction";
    } else if (opt.kind == "clique" && n >= 3 && s.graph == Graph::cycle(n).complement() && n >= 2 * opt.t) {
        order = cycle_shelling(n, opt.t);
        source = "cycle construction";
    } else {
        order = find_shelling(complex);
    }
    const bool verified = order && verify_shelling(complex, *order);
    const bool has_dual = order && !complex.is_simplex();
    if (json_out(opt)) {
        Json doc{{"complex", to_json(complex)}, {"source", source}, {"shellable", order.has_value()}, {"verified", verified}};
        if (order) doc["shelling"] = to_json(*order, n);
        if (verified && has_dual) doc["linear_quotients"] = to_json(shelling_to_linear_quotients(complex, *order));
        print(doc);
    } else {
        std::cout << "complex: " << to_string(complex) << '\n';
        if (!order) {
            std::cout << "no shelling exists\n";
            return kOk;
        }
        std::cout << "shelling (" << source << "):";
        for (VertexSet f : order->facets) std::cout << ' ' << to_string(f);
        std::cout << '\n' << "verified: " << (verified ? "yes" : "no") << '\n';
        if (verified && has_dual) {
            const LinearQuotientOrder lq = shelling_to_linear_quotients(complex, *order);
            std::cout << "dual linear quotients:";
            for (std::size_t i = 0; i < lq.order.size(); ++i)
                std::cout << ' ' << monomial_string(lq.order[i]) << ' ' << to_string(lq.sets[i]);
            std::cout << '\n';
        }
    }
    return verified || !order ? kOk : kPropertyFailure;
}

int cmd_cm(const Options& opt) {
    const FieldSpec field = parse_field(opt.field);
    const Selected s = select_ideal(opt);
    const SimplicialComplex complex = stanley_reisner_complex(s.ideal);
    if (complex.is_void()) throw Undefined("the unit ideal has the void complex");
    const bool cm = reisner_cm_check(complex, field);
    if (json_out(opt))
        print(Json{{"ideal", to_json(s.ideal)}, {"field", to_string(field)}, {"cohen_macaulay", cm}});
    else
        std::cout << "R/I Cohen-Macaulay over " << to_string(field) << ": " << (cm ? "yes" : "no") << '\n';
    return kOk;
}

int cmd_dual(const Options& opt) {
    const Selected s = select_ideal(opt);
    const MonomialIdeal dual = alexander_dual(s.ideal);
    if (json_out(opt))
        print(to_json(dual));
    else
        std::cout << to_string(dual) << '\n';
    return kOk;
}

Json report_json(const SuiteReport& report) {
    Json props = Json::array();
    for (const auto& [name, c] : report.properties)
        props.push_back({{"name", name}, {"passed", c.passed}, {"failed", c.failed}, {"reported", c.reported}});
    return Json{{"suite", report.suite}, {"cases", report.cases},     {"properties", props},
                {"failures", report.failures}, {"ok", report.ok()}};
}

int cmd_check(const Options& opt) {
    CheckBounds bounds;
    bounds.n_max = opt.n_max;
    bounds.t_max = opt.t_max;
    bounds.count = opt.count;
    bounds.seed = opt.seed;
    bounds.field = parse_field(opt.field);
    if (bounds.t_max < 2 || bounds.count < 1) throw InvalidInput("--t-max must be at least 2 and --count at least 1");
    require_oracle_size(bounds.n_max, "check");
    SuiteReport report;
    if (opt.suite == "path")
        report = check_path_suite(bounds);
    else if (opt.suite == "cycle")
        report = check_cycle_suite(bounds);
    else if (opt.suite == "chordal")
        report = check_chordal_suite(bounds);
    else if (opt.suite == "shelling")
        report = check_shelling_suite(bounds.n_max, bounds.t_max);
    else
        report = check_duality_suite(bounds);
    if (json_out(opt)) {
        print(report_json(report));
    } else {
        std::cout << "suite " << report.suite << ": " << report.cases << " cases\n";
        for (const auto& [name, c] : report.properties) {
            std::cout << "  " << name << ": " << c.passed << " passed, " << c.failed << " failed";
            if (c.reported != 0) std::cout << ", " << c.reported << " reported";
            std::cout << '\n';
        }
        for (const std::string& f : report.failures) std::cout << "  FAIL " << f << '\n';
        std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
    }
    return report.ok() ? kOk : kPropertyFailure;
}

int cmd_reproduce(const Options& opt) {
    require_oracle_size(opt.n_max, "reproduce");
    if (opt.t_max < 2) throw InvalidInput("--t-max must be at least 2");
    const std::vector<ReproductionRow> rows = reproduce_closed_forms(opt.n_max, opt.t_max, parse_field(opt.field));
    bool all = true;
    for (const auto& row : rows) all = all && row.matches();
    if (json_out(opt)) {
        Json doc = Json::array();
        for (const auto& row : rows)
            doc.push_back({{"family", to_string(row.family)},
                           {"n", row.n},
                           {"t", row.t},
                           {"quantity", row.quantity},
                           {"predicted", row.predicted},
                           {"observed", row.observed},
                           {"source", row.source},
                           {"match", row.matches()}});
        print(doc);
    } else {
        for (const auto& row : rows) std::cout << render_row(row) << (row.matches() ? "" : "  MISMATCH") << '\n';
        std::cout << rows.size() << " rows, " << (all ? "all match" : "mismatches found") << '\n';
    }
    return all ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique and independence ideals of graphs: Betti numbers, shellings and closed-form checks"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph_flags = [&opt](CLI::App* cmd, bool with_kind) {
        cmd->add_option("--graph", opt.graph, "path:N, cycle:N, complete:N, chordal:N:SEED, complement:SPEC or file:PATH")
            ->required();
        cmd->add_option("--t", opt.t, "clique / independent set size")->capture_default_str();
        if (with_kind)
            cmd->add_option("--kind", opt.kind, "clique or independence")
                ->check(CLI::IsMember({"clique", "independence"}))
                ->capture_default_str();
    };
    auto add_output = [&opt](CLI::App* cmd) {
        cmd->add_option("--output", opt.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };
    auto add_field = [&opt](CLI::App* cmd) {
        cmd->add_option("--field", opt.field, "2, p:<prime> or 0 (rationals)")->capture_default_str();
    };

    CLI::App* ideal = app.add_subcommand("ideal", "print K_t(G) or J_t(G)");
    add_graph_flags(ideal, true);
    add_output(ideal);

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of K_t(G) or J_t(G)");
    add_graph_flags(betti, true);
    betti->add_option("--method", opt.method, "oracle, linear-quotients, recursion or all")
        ->check(CLI::IsMember({"oracle", "linear-quotients", "recursion", "all"}))
        ->capture_default_str();
    add_field(betti);
    add_output(betti);

    CLI::App* complex = app.add_subcommand("complex", "Stanley-Reisner complex of the ideal");
    add_graph_flags(complex, true);
    add_output(complex);

    CLI::App* shelling = app.add_subcommand("shelling", "shelling of the Stanley-Reisner complex");
    add_graph_flags(shelling, true);
    add_output(shelling);

    CLI::App* cm = app.add_subcommand("cm", "Reisner's Cohen-Macaulay test");
    add_graph_flags(cm, true);
    add_field(cm);
    add_output(cm);

    CLI::App* dual = app.add_subcommand("dual", "Alexander dual of the ideal");
    add_graph_flags(dual, true);
    add_output(dual);

    CLI::App* check = app.add_subcommand("check", "run a cross-validation suite");
    check->add_option("--suite", opt.suite, "chordal, path, cycle, duality or shelling")
        ->check(CLI::IsMember({"chordal", "path", "cycle", "duality", "shelling"}))
        ->required();
    check->add_option("--n-max", opt.n_max, "largest vertex count")->capture_default_str();
    check->add_option("--t-max", opt.t_max, "largest t")->capture_default_str();
    check->add_option("--count", opt.count, "number of random chordal graphs")->capture_default_str();
    check->add_option("--seed", opt.seed, "first seed of the chordal corpus")->capture_default_str();
    add_field(check);
    add_output(check);

    CLI::App* reproduce = app.add_subcommand("reproduce", "closed-form predictions against the oracle");
    reproduce->add_option("--n-max", opt.n_max, "largest vertex count")->capture_default_str();
    reproduce->add_option("--t-max", opt.t_max, "largest t")->capture_default_str();
    add_field(reproduce);
    add_output(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*ideal) return cmd_ideal(opt);
        if (*betti) return cmd_betti(opt);
        if (*complex) return cmd_complex(opt);
        if (*shelling) return cmd_shelling(opt);
        if (*cm) return cmd_cm(opt);
        if (*dual) return cmd_dual(opt);
        if (*check) return cmd_check(opt);
        return cmd_reproduce(opt);
    } catch (const ResourceGuard& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Undefined& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
