// cdom: command-line driver for the Condorcet domain library.
//
// Exit codes: 0 success / predicate true, 1 predicate false or catalog
// mismatch beyond the recorded ledger, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "condorcet/catalog.hpp"
#include "condorcet/composition.hpp"
#include "condorcet/core.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/graphs.hpp"
#include "condorcet/properties.hpp"
#include "condorcet/text_format.hpp"

namespace {

using namespace condorcet;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Domain load_domain(const std::string& path) { return parse_domain_text(slurp(path)); }

const char* bool_text(bool value) { return value ? "true" : "false"; }

Axis parse_axis(const std::string& text) {
    std::istringstream in(text);
    std::vector<Alternative> sequence;
    Alternative a = 0;
    while (in >> a) sequence.push_back(a);
    if (!in.eof()) throw input_error("axis must be a space-separated list of labels");
    return Axis(std::move(sequence));
}

int run_check(const std::string& file, const std::string& property, const std::string& axis_text) {
    Domain d = load_domain(file);
    bool result = false;
    if (property == "single-peaked") {
        if (axis_text.empty()) throw input_error("--property single-peaked requires --axis");
        result = is_single_peaked_wrt(d, parse_axis(axis_text));
    } else if (!axis_text.empty()) {
        throw input_error("--axis only applies to --property single-peaked");
    } else if (property == "condorcet") {
        result = is_condorcet(d);
    } else if (property == "maximal") {
        result = is_maximal(d);
    } else if (property == "ample") {
        result = is_ample(d);
    } else if (property == "copious") {
        result = is_copious(d);
    } else if (property == "max-width") {
        result = has_maximal_width(d);
    } else if (property == "arrow-sp") {
        result = is_arrow_single_peaked(d);
    } else if (property == "single-crossing") {
        result = is_single_crossing(d);
    } else {
        throw input_error("unknown property: " + property);
    }
    std::cout << bool_text(result) << "\n";
    return result ? 0 : 1;
}

int run_compose(const std::string& file1, const std::string& file2, const std::string& out) {
    Domain composed = nl_compose(load_domain(file1), load_domain(file2));
    std::string text = render_domain_text(composed);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream sink(out, std::ios::binary);
        if (!sink) throw input_error("cannot write file: " + out);
        sink << text;
    }
    return 0;
}

int run_decompose(const std::string& file) {
    auto parts = nl_decompose(load_domain(file));
    if (parts.empty()) {
        std::cout << "none\n";
        return 0;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) std::cout << "---\n";
        std::cout << "x=" << parts[i].roles.x << " y=" << parts[i].roles.y << "\n";
        std::cout << "d1:\n" << render_domain_text(parts[i].d1);
        std::cout << "d2:\n" << render_domain_text(parts[i].d2);
    }
    return 0;
}

int run_obstruction(const std::string& file, Alternative a, Alternative b, Alternative c) {
    bool result = is_right_obstruction(load_domain(file), a, b, c);
    std::cout << bool_text(result) << "\n";
    return result ? 0 : 1;
}

int run_hypotheses(const std::string& file1, const std::string& file2) {
    HypothesisReport r = theorem_hypotheses(load_domain(file1), load_domain(file2));
    std::cout << "e_is_condorcet=" << bool_text(r.e_is_condorcet) << "\n"
              << "x_never_obstructs_in_d2=" << bool_text(r.x_never_obstructs_in_d2) << "\n"
              << "y_never_obstructs_in_d1=" << bool_text(r.y_never_obstructs_in_d1) << "\n"
              << "d1_maximal=" << bool_text(r.d1_maximal) << "\n"
              << "d2_maximal=" << bool_text(r.d2_maximal) << "\n"
              << "d1_ample=" << bool_text(r.d1_ample) << "\n"
              << "d2_ample=" << bool_text(r.d2_ample) << "\n"
              << "d1_copious=" << bool_text(r.d1_copious) << "\n"
              << "d2_copious=" << bool_text(r.d2_copious) << "\n";
    return 0;
}

std::string class_flag_text(const DomainClass& cls) {
    // Ample, copious and maximal width survive both relabeling and flipping;
    // Arrow single-peakedness only survives relabeling, so check the flip too.
    const Domain& rep = cls.representatives.front();
    std::vector<std::string> flags;
    if (cls.decomposable) flags.push_back("decomposable");
    if (is_ample(rep)) flags.push_back("ample");
    if (is_copious(rep)) flags.push_back("copious");
    if (has_maximal_width(rep)) flags.push_back("max-width");
    if (is_arrow_single_peaked(rep) || is_arrow_single_peaked(flip(rep)))
        flags.push_back("arrow-sp");
    if (flags.empty()) return "-";
    std::string joined;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (i > 0) joined += ",";
        joined += flags[i];
    }
    return joined;
}

int run_enumerate(int n, bool classes, bool labeled, bool flags, bool allow_large) {
    if (classes && labeled) throw input_error("--classes and --labeled are mutually exclusive");
    if (flags && !classes) throw input_error("--flags requires --classes");
    auto domains = enumerate_maximal(n, allow_large);
    if (!classes) {
        for (std::size_t i = 0; i < domains.size(); ++i) {
            if (i > 0) std::cout << "---\n";
            std::cout << render_domain_text(domains[i]);
        }
        return 0;
    }
    auto grouped = classify(domains);
    std::cout << "classes: " << grouped.size() << "\n";
    for (const auto& cls : grouped) {
        std::cout << cls.canonical_key;
        if (flags) std::cout << " " << class_flag_text(cls);
        std::cout << "\n";
    }
    return 0;
}

int run_classify(const std::vector<std::string>& files) {
    for (const auto& file : files) std::cout << canonical_form(load_domain(file)) << "\n";
    return 0;
}

int run_graph(const std::string& file, const std::string& dot_out, bool summary) {
    if (summary == !dot_out.empty())
        throw input_error("pass exactly one of --dot <file> or --summary");
    DomainGraph g = build_graph(load_domain(file));
    if (summary) {
        std::cout << "vertices=" << g.vertices.size() << "\n"
                  << "edges=" << g.edges.size() << "\n"
                  << "connected=" << bool_text(is_connected(g)) << "\n"
                  << "path=" << bool_text(is_path(g)) << "\n";
        return 0;
    }
    std::ofstream sink(dot_out, std::ios::binary);
    if (!sink) throw input_error("cannot write file: " + dot_out);
    sink << to_dot(g);
    return 0;
}

int run_catalog_list() {
    for (const auto& entry : catalog_entries()) {
        std::cout << entry.id;
        if (!entry.alias.empty()) std::cout << " " << entry.alias;
        std::cout << "\n";
    }
    return 0;
}

int run_catalog_show(const std::string& name) {
    const CatalogEntry& entry = catalog_get(name);
    std::cout << "id: " << entry.id << "\n";
    if (!entry.alias.empty()) std::cout << "alias: " << entry.alias << "\n";
    if (!entry.stated_flags.empty()) {
        std::cout << "flags:";
        for (const auto& flag : entry.stated_flags) std::cout << " " << flag;
        std::cout << "\n";
    }
    if (entry.stated_is_path) std::cout << "graph: path\n";
    if (entry.stated_conditions) {
        std::cout << "conditions:";
        for (const auto& c : *entry.stated_conditions) std::cout << " " << to_string(c);
        std::cout << "\n";
    }
    if (entry.stated_identity) std::cout << "identity: " << entry.stated_identity->text() << "\n";
    std::cout << "orders:\n" << render_domain_text(entry.matrix_orders);
    return 0;
}

int run_catalog_verify(bool as_json) {
    VerificationReport report = verify_catalog();
    bool clean = report_matches_ledger(report);
    if (as_json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& check : report.checks) {
            checks.push_back({{"entry", check.entry_id},
                              {"check", check.check},
                              {"match", check.match},
                              {"stated", check.stated},
                              {"computed", check.computed}});
        }
        nlohmann::json doc{{"checks", checks}, {"matches_ledger", clean}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& check : report.checks) {
            std::cout << "ENTRY " << check.entry_id << ": " << check.check << " = ";
            if (check.match) {
                std::cout << "MATCH\n";
            } else {
                std::cout << "MISMATCH(" << check.stated << " vs " << check.computed << ")\n";
            }
        }
        std::cout << (clean ? "all mismatches match the recorded ledger\n"
                            : "unexpected mismatches beyond the recorded ledger\n");
    }
    return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Condorcet domain toolkit"};
    app.require_subcommand(1);

    std::string check_file, check_property, check_axis;
    auto* check = app.add_subcommand("check", "Evaluate a domain property");
    check->add_option("file", check_file)->required();
    check->add_option("--property", check_property)->required();
    check->add_option("--axis", check_axis);

    std::string compose_file1, compose_file2, compose_out;
    auto* compose = app.add_subcommand("compose", "Never-last composition of two domains");
    compose->add_option("file1", compose_file1)->required();
    compose->add_option("file2", compose_file2)->required();
    compose->add_option("-o,--out", compose_out);

    std::string decompose_file;
    auto* decompose = app.add_subcommand("decompose", "All never-last decompositions");
    decompose->add_option("file", decompose_file)->required();

    std::string obstruction_file;
    Alternative obstruction_a = 0, obstruction_b = 0, obstruction_c = 0;
    auto* obstruction = app.add_subcommand("obstruction", "Right-obstruction predicate");
    obstruction->add_option("file", obstruction_file)->required();
    obstruction->add_option("--a", obstruction_a)->required();
    obstruction->add_option("--b", obstruction_b)->required();
    obstruction->add_option("--c", obstruction_c)->required();

    std::string hyp_file1, hyp_file2;
    auto* hypotheses = app.add_subcommand("hypotheses", "Composition theorem hypotheses");
    hypotheses->add_option("file1", hyp_file1)->required();
    hypotheses->add_option("file2", hyp_file2)->required();

    int enumerate_n = 0;
    bool enum_classes = false, enum_labeled = false, enum_flags = false, enum_large = false;
    auto* enumerate = app.add_subcommand("enumerate", "All labeled maximal Condorcet domains");
    enumerate->add_option("--n", enumerate_n)->required();
    enumerate->add_flag("--classes", enum_classes);
    enumerate->add_flag("--labeled", enum_labeled);
    enumerate->add_flag("--flags", enum_flags);
    enumerate->add_flag("--allow-large", enum_large);

    std::vector<std::string> classify_files;
    auto* classify_cmd = app.add_subcommand("classify", "Canonical class keys of domain files");
    classify_cmd->add_option("files", classify_files)->required();

    std::string graph_file, graph_dot;
    bool graph_summary = false;
    auto* graph = app.add_subcommand("graph", "Swap graph of a domain");
    graph->add_option("file", graph_file)->required();
    graph->add_option("--dot", graph_dot);
    graph->add_flag("--summary", graph_summary);

    auto* catalog = app.add_subcommand("catalog", "Published domain fixtures");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "List entry ids and aliases");
    std::string catalog_show_name;
    auto* catalog_show = catalog->add_subcommand("show", "Print one entry");
    catalog_show->add_option("id", catalog_show_name)->required();
    bool catalog_json = false;
    auto* catalog_verify = catalog->add_subcommand("verify", "Recompute every stated claim");
    catalog_verify->add_flag("--json", catalog_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(check_file, check_property, check_axis);
        if (*compose) return run_compose(compose_file1, compose_file2, compose_out);
        if (*decompose) return run_decompose(decompose_file);
        if (*obstruction)
            return run_obstruction(obstruction_file, obstruction_a, obstruction_b, obstruction_c);
        if (*hypotheses) return run_hypotheses(hyp_file1, hyp_file2);
        if (*enumerate)
            return run_enumerate(enumerate_n, enum_classes, enum_labeled, enum_flags, enum_large);
        if (*classify_cmd) return run_classify(classify_files);
        if (*graph) return run_graph(graph_file, graph_dot, graph_summary);
        if (*catalog_list) return run_catalog_list();
        if (*catalog_show) return run_catalog_show(catalog_show_name);
        if (*catalog_verify) return run_catalog_verify(catalog_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
