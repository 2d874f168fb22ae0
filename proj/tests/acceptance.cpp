// Acceptance harness: one pass/fail line per criterion, exit code = number of
// failures. Needs --cli <path to cdom> and --data <dir with the .dot goldens>.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "condorcet/catalog.hpp"
#include "condorcet/composition.hpp"
#include "condorcet/core.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/graphs.hpp"
#include "condorcet/properties.hpp"
#include "condorcet/text_format.hpp"

using namespace condorcet;
namespace fs = std::filesystem;

namespace {

// Runtime bounds for the slow checks, in seconds.
constexpr double kMaxSecondsEnumerate3 = 1.0;
constexpr double kMaxSecondsEnumerate4 = 60.0;
constexpr double kMaxSecondsTheorem = 5.0;

std::string g_cli;
fs::path g_data;
fs::path g_tmp;

struct Acc {
    std::vector<std::string> problems;
    void expect(bool condition, const std::string& what) {
        if (!condition) problems.push_back(what);
    }
    std::string joined() const {
        std::string text;
        for (std::size_t i = 0; i < problems.size(); ++i) {
            if (i > 0) text += "; ";
            text += problems[i];
        }
        return text;
    }
};

struct Outcome {
    bool ok;
    std::string detail;  // shown on the pass/fail line
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = ::pclose(pipe);
    int code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return {code, out};
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

fs::path write_fixture(const std::string& name, const Domain& domain) {
    fs::path path = g_tmp / name;
    std::ofstream out(path, std::ios::binary);
    out << render_domain_text(domain);
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Domain relabeled_base(const std::string& family, Alternative a, Alternative b, Alternative c) {
    return relabel(base_family_domain(family), {{1, a}, {2, b}, {3, c}});
}

Outcome criterion_enumerate_3() {
    Acc acc;
    auto start = std::chrono::steady_clock::now();
    std::vector<Domain> labeled = enumerate_maximal(3);
    std::vector<Domain> cross = enumerate_maximal_backtracking(3);
    std::vector<DomainClass> iso = classify_iso(labeled);
    std::vector<DomainClass> flip_iso = classify(labeled);
    double elapsed = seconds_since(start);

    acc.expect(labeled.size() == 9, "expected 9 labeled domains, got " +
                                        std::to_string(labeled.size()));
    acc.expect(labeled == cross, "the two enumeration algorithms disagree");
    for (const Domain& d : labeled) {
        acc.expect(d.size() == 4, "labeled domain of size " + std::to_string(d.size()));
    }
    acc.expect(iso.size() == 3, "expected 3 isomorphism classes, got " +
                                    std::to_string(iso.size()));
    std::set<std::string> iso_keys;
    for (const auto& cls : iso) iso_keys.insert(cls.canonical_key);
    for (const char* id : {"D3_1", "D3_2", "D3_3"}) {
        acc.expect(iso_keys.count(canonical_form_iso(catalog_get(id).matrix_orders)) == 1,
                   std::string(id) + " missing from the isomorphism classes");
    }
    acc.expect(flip_iso.size() == 2, "expected 2 flip classes, got " +
                                         std::to_string(flip_iso.size()));
    acc.expect(elapsed < kMaxSecondsEnumerate3, "took " + fmt_seconds(elapsed));

    return {acc.problems.empty(),
            acc.problems.empty() ? "9 labeled, 3 iso, 2 flip classes [" + fmt_seconds(elapsed) + "]"
                                 : acc.joined()};
}

Outcome criterion_enumerate_4() {
    Acc acc;
    auto start = std::chrono::steady_clock::now();
    std::vector<Domain> labeled = enumerate_maximal(4);
    std::vector<Domain> cross = enumerate_maximal_backtracking(4);
    std::vector<DomainClass> classes = classify(labeled);
    double elapsed = seconds_since(start);

    acc.expect(labeled == cross, "the two enumeration algorithms disagree");
    acc.expect(classes.size() == 18, "expected 18 classes, got " +
                                         std::to_string(classes.size()));
    acc.expect(elapsed < kMaxSecondsEnumerate4, "took " + fmt_seconds(elapsed));

    return {acc.problems.empty(),
            acc.problems.empty() ? std::to_string(labeled.size()) + " labeled, 18 classes [" +
                                       fmt_seconds(elapsed) + "]"
                                 : acc.joined()};
}

Outcome criterion_census() {
    Acc acc;
    std::vector<DomainClass> classes = classify(enumerate_maximal(4));
    auto [count, keys] = decomposability_census(classes);
    acc.expect(count == 9, "expected 9 decomposable classes, got " + std::to_string(count));

    std::set<std::string> catalog_keys;
    for (const CatalogEntry& entry : catalog_entries()) {
        if (entry.matrix_orders.alternatives().size() == 4) {
            catalog_keys.insert(canonical_form(entry.matrix_orders));
        }
    }
    acc.expect(catalog_keys.size() == 9, "catalog matrices fall into " +
                                             std::to_string(catalog_keys.size()) + " classes");
    acc.expect(std::set<std::string>(keys.begin(), keys.end()) == catalog_keys,
               "decomposable classes differ from the catalog classes");

    return {acc.problems.empty(),
            acc.problems.empty() ? "9 decomposable classes = the 9 catalog classes" : acc.joined()};
}

Outcome criterion_catalog_integrity() {
    Acc acc;
    for (const CatalogEntry& entry : catalog_entries()) {
        const Domain& m = entry.matrix_orders;
        acc.expect(parse_domain_text(render_domain_text(m)) == m, entry.id + " fails round-trip");
        acc.expect(is_condorcet(m), entry.id + " not Condorcet");
        if (m.alternatives().size() == 4) {
            acc.expect(is_maximal(m), entry.id + " not maximal");
            int want = (entry.id == "D4_2" || entry.id == "D4_3") ? 7 : 8;
            acc.expect(m.size() == want, entry.id + " has " + std::to_string(m.size()) +
                                             " orders, expected " + std::to_string(want));
        }
    }

    const Domain& crab = catalog_get("D4_5").matrix_orders;
    acc.expect(is_arrow_single_peaked(crab), "crab not Arrow single-peaked");
    acc.expect(!has_maximal_width(crab), "crab has maximal width");
    for (const char* id : {"D4_6", "D4_7"}) {
        const Domain& m = catalog_get(id).matrix_orders;
        acc.expect(is_copious(m), std::string(id) + " not copious");
        acc.expect(!has_maximal_width(m), std::string(id) + " has maximal width");
    }
    const Domain& snake = catalog_get("D4_2").matrix_orders;
    acc.expect(is_single_crossing(snake), "snake not single-crossing");
    DomainGraph g = build_graph(snake);
    acc.expect(g.vertices.size() == 7 && g.edges.size() == 6 && is_path(g),
               "snake graph is not a 7-vertex path");

    return {acc.problems.empty(),
            acc.problems.empty() ? "12 fixtures verified (cardinalities, flags, snake path)"
                                 : acc.joined()};
}

Outcome criterion_identities() {
    Acc acc;
    for (const char* id : {"D4_2", "D4_3", "D4_4", "D4_5", "D4_6", "D4_11", "D4_17"}) {
        const CatalogEntry& entry = catalog_get(id);
        if (!entry.stated_identity) {
            acc.expect(false, std::string(id) + " has no stated identity");
            continue;
        }
        Domain composed = nl_compose(entry.stated_identity->left.realize(),
                                     entry.stated_identity->right.realize());
        acc.expect(composed == entry.matrix_orders, std::string(id) + " identity mismatch");
    }

    VerificationReport report = verify_catalog();
    auto mismatches = report.mismatches();
    acc.expect(mismatches.size() == 3,
               "expected 3 ledgered mismatches, got " + std::to_string(mismatches.size()));
    bool d47_identity = false;
    bool d47_conditions = false;
    bool d416_identity = false;
    for (const CatalogCheck& check : mismatches) {
        if (check.entry_id == "D4_7" && check.check == "identity") {
            d47_identity = check.computed.find("D3_3(2,3,4)") != std::string::npos;
        } else if (check.entry_id == "D4_7" && check.check == "conditions") {
            d47_conditions = true;
        } else if (check.entry_id == "D4_16" && check.check == "identity") {
            d416_identity = check.computed.find("D3_2(1,2,3)") != std::string::npos;
        }
    }
    acc.expect(d47_identity, "D4_7 recomputed factor is not D3_3(2,3,4)");
    acc.expect(d47_conditions, "D4_7 conditions mismatch missing");
    acc.expect(d416_identity, "D4_16 recomputed factor is not D3_2(1,2,3)");
    acc.expect(report_matches_ledger(report), "mismatches differ from the recorded ledger");

    CliResult verify = run_cli("catalog verify");
    acc.expect(verify.exit_code == 0,
               "catalog verify exited " + std::to_string(verify.exit_code));

    return {acc.problems.empty(),
            acc.problems.empty() ? "7 identities reproduce, D4_7/D4_16 mismatches as recorded, "
                                   "verify exits 0"
                                 : acc.joined()};
}

Outcome criterion_theorem() {
    Acc acc;
    auto start = std::chrono::steady_clock::now();
    std::vector<Domain> pool1 = enumerate_maximal(3);
    std::vector<Domain> pool2;
    for (const Domain& d : pool1) pool2.push_back(relabel(d, {{1, 2}, {2, 3}, {3, 4}}));
    std::vector<TheoremCounterexample> bad = verify_composition_theorem(pool1, pool2);
    double elapsed = seconds_since(start);

    acc.expect(pool1.size() == 9 && pool2.size() == 9, "factor pools are not 9 + 9");
    for (const TheoremCounterexample& c : bad) {
        acc.expect(false, "pair (" + std::to_string(c.index1) + "," + std::to_string(c.index2) +
                              ") violates " + c.failed_conclusion);
    }
    acc.expect(elapsed < kMaxSecondsTheorem, "took " + fmt_seconds(elapsed));

    return {acc.problems.empty(),
            acc.problems.empty()
                ? "81 pairs, zero counterexamples [" + fmt_seconds(elapsed) + "]"
                : acc.joined()};
}

Outcome criterion_obstruction_prop() {
    Acc acc;
    const Alternative a = 1, b = 2, c = 3;
    const LinearOrder bca({b, c, a});
    const LinearOrder cba({c, b, a});
    const std::set<NeverCondition> allowed = {
        NeverCondition(c, std::array<Alternative, 3>{1, 2, 3}, 1),
        NeverCondition(b, std::array<Alternative, 3>{1, 2, 3}, 2)};

    std::vector<LinearOrder> all = all_linear_orders({1, 2, 3});
    int qualifying = 0;
    int agreements = 0;
    for (unsigned mask = 1; mask < 64; ++mask) {
        std::set<LinearOrder> picked;
        for (int bit = 0; bit < 6; ++bit) {
            if (mask & (1u << bit)) picked.insert(all[static_cast<std::size_t>(bit)]);
        }
        Domain s({1, 2, 3}, picked);
        if (!s.contains(bca) || s.contains(cba) || !is_condorcet(s)) continue;
        ++qualifying;
        std::set<NeverCondition> conditions = never_conditions_of(s);
        bool characterized = !conditions.empty() &&
                             std::includes(allowed.begin(), allowed.end(), conditions.begin(),
                                           conditions.end());
        if (is_right_obstruction(s, a, b, c) == characterized) ++agreements;
    }
    acc.expect(qualifying > 0, "no qualifying subsets");
    acc.expect(agreements == qualifying,
               std::to_string(qualifying - agreements) + " of " + std::to_string(qualifying) +
                   " subsets disagree");

    return {acc.problems.empty(),
            acc.problems.empty() ? "predicate agrees on all " + std::to_string(qualifying) +
                                       " qualifying subsets"
                                 : acc.joined()};
}

Outcome criterion_converse_witnesses() {
    Acc acc;

    Domain d1({1, 2, 3}, {LinearOrder({1, 2, 3}), LinearOrder({2, 1, 3}), LinearOrder({2, 3, 1})});
    Domain d2 = relabeled_base("D3_1", 2, 3, 4);
    HypothesisReport hyp = theorem_hypotheses(d1, d2);
    acc.expect(!hyp.d1_maximal, "the snake witness unexpectedly passes the maximality hypothesis");
    Domain composed = nl_compose(d1, d2);
    acc.expect(composed == catalog_get("snake").matrix_orders,
               "the witness does not compose to the snake");
    acc.expect(is_maximal(composed), "the composed snake is not maximal");

    Domain w1 = base_family_domain("D3_3");
    Domain w2 = domain_from_conditions(
        {2, 3, 4}, {NeverCondition(2, std::array<Alternative, 3>{2, 3, 4}, 1)});
    acc.expect(is_maximal(w1) && is_maximal(w2), "witness factors are not both maximal");
    acc.expect(!is_condorcet(nl_compose(w1, w2)),
               "the witness composition is unexpectedly Condorcet");

    return {acc.problems.empty(),
            acc.problems.empty() ? "maximal snake from a failing pair; non-Condorcet composition "
                                   "of maximal factors"
                                 : acc.joined()};
}

Outcome criterion_single_peaked_recursion() {
    Acc acc;
    for (int n : {4, 5}) {
        std::vector<Alternative> full, left, right;
        for (int i = 1; i <= n; ++i) full.push_back(i);
        for (int i = 1; i <= n - 1; ++i) left.push_back(i);
        for (int i = 2; i <= n; ++i) right.push_back(i);
        Domain sp = generate_single_peaked(Axis(full));
        Domain composed = nl_compose(generate_single_peaked(Axis(left)),
                                     generate_single_peaked(Axis(right)));
        acc.expect(sp == composed, "recursion fails at n=" + std::to_string(n));
        acc.expect(sp.size() == (1 << (n - 1)),
                   "n=" + std::to_string(n) + " cardinality " + std::to_string(sp.size()));
    }
    Domain sp4 = generate_single_peaked(Axis({1, 2, 3, 4}));
    acc.expect(sp4 == catalog_get("D4_4").matrix_orders, "n=4 differs from the printed matrix");
    acc.expect(sp4 == nl_compose(relabeled_base("D3_3", 1, 2, 3), relabeled_base("D3_3", 2, 3, 4)),
               "n=4 differs from its stated identity");

    return {acc.problems.empty(),
            acc.problems.empty() ? "SP(n) = SP(n-1) <> SP(2..n) at n=4,5; sizes 8, 16"
                                 : acc.joined()};
}

Outcome criterion_cli_determinism() {
    Acc acc;

    fs::path snake_txt = write_fixture("snake.txt", catalog_get("snake").matrix_orders);
    fs::path crab_txt = write_fixture("crab.txt", catalog_get("crab").matrix_orders);
    fs::path sp_txt = write_fixture("d4_4.txt", catalog_get("D4_4").matrix_orders);
    fs::path d33_txt = write_fixture("d33.txt", base_family_domain("D3_3"));
    fs::path d31_txt = write_fixture("d31.txt", base_family_domain("D3_1"));
    fs::path d31_234_txt = write_fixture("d31_234.txt", relabeled_base("D3_1", 2, 3, 4));
    fs::path d33_234_txt = write_fixture("d33_234.txt", relabeled_base("D3_3", 3, 2, 4));
    fs::path snake_left_txt = write_fixture(
        "snake_left.txt",
        Domain({1, 2, 3},
               {LinearOrder({1, 2, 3}), LinearOrder({2, 1, 3}), LinearOrder({2, 3, 1})}));

    struct Pinned {
        std::string args;
        int exit_code;
    };
    const std::vector<Pinned> commands = {
        {"check " + quoted(snake_txt) + " --property condorcet", 0},
        {"check " + quoted(crab_txt) + " --property max-width", 1},
        {"check " + quoted(sp_txt) + " --property single-peaked --axis \"1 2 3 4\"", 0},
        {"compose " + quoted(snake_left_txt) + " " + quoted(d31_234_txt), 0},
        {"decompose " + quoted(sp_txt), 0},
        {"obstruction " + quoted(d31_234_txt) + " --a 4 --b 2 --c 3", 0},
        {"hypotheses " + quoted(d33_txt) + " " + quoted(d33_234_txt), 0},
        {"enumerate --n 3 --labeled", 0},
        {"enumerate --n 4 --classes --flags", 0},
        {"classify " + quoted(d31_txt) + " " + quoted(d33_txt), 0},
        {"graph " + quoted(snake_txt) + " --summary", 0},
        {"catalog list", 0},
        {"catalog show D4_5", 0},
        {"catalog verify", 0},
        {"catalog verify --json", 0},
    };
    for (const Pinned& command : commands) {
        CliResult first = run_cli(command.args);
        CliResult second = run_cli(command.args);
        acc.expect(first.exit_code == command.exit_code,
                   command.args + " exited " + std::to_string(first.exit_code) + ", expected " +
                       std::to_string(command.exit_code));
        acc.expect(first.exit_code == second.exit_code && first.out == second.out,
                   command.args + " is not byte-deterministic");
        acc.expect(!first.out.empty(), command.args + " printed nothing");
    }

    CliResult composed = run_cli("compose " + quoted(snake_left_txt) + " " + quoted(d31_234_txt));
    acc.expect(composed.out == render_domain_text(catalog_get("snake").matrix_orders),
               "composed output differs from the snake fixture");

    for (const auto& [name, golden] :
         {std::pair<std::string, fs::path>{"snake", g_data / "snake.dot"},
          std::pair<std::string, fs::path>{"D4_4", g_data / "d4_4.dot"}}) {
        fs::path source = name == "snake" ? snake_txt : sp_txt;
        fs::path out1 = g_tmp / (name + "_1.dot");
        fs::path out2 = g_tmp / (name + "_2.dot");
        CliResult r1 = run_cli("graph " + quoted(source) + " --dot " + quoted(out1));
        CliResult r2 = run_cli("graph " + quoted(source) + " --dot " + quoted(out2));
        acc.expect(r1.exit_code == 0 && r2.exit_code == 0, name + " graph export failed");
        std::string bytes1 = read_file(out1);
        acc.expect(bytes1 == read_file(out2), name + " DOT export is not deterministic");
        acc.expect(bytes1 == read_file(golden), name + " DOT differs from the golden file");
    }

    for (const CatalogEntry& entry : catalog_entries()) {
        acc.expect(parse_domain_text(render_domain_text(entry.matrix_orders)) ==
                       entry.matrix_orders,
                   entry.id + " fails parse/render round-trip");
    }

    return {acc.problems.empty(),
            acc.problems.empty() ? std::to_string(commands.size()) +
                                       " commands byte-stable, DOT goldens match, round-trips hold"
                                 : acc.joined()};
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") g_cli = argv[i + 1];
        else if (flag == "--data") g_data = argv[i + 1];
    }
    if (g_cli.empty() || g_data.empty()) {
        std::cerr << "usage: acceptance --cli <cdom binary> --data <golden dir>\n";
        return 64;
    }
    g_tmp = fs::temp_directory_path() / "cdom_acceptance";
    fs::create_directories(g_tmp);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"enumeration n=3", criterion_enumerate_3},
        {"enumeration n=4", criterion_enumerate_4},
        {"decomposability census", criterion_census},
        {"catalog integrity", criterion_catalog_integrity},
        {"identity reproduction", criterion_identities},
        {"composition theorem, exhaustive", criterion_theorem},
        {"obstruction characterization, exhaustive", criterion_obstruction_prop},
        {"converse-failure witnesses", criterion_converse_witnesses},
        {"single-peaked recursion", criterion_single_peaked_recursion},
        {"CLI determinism and format", criterion_cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.ok) ++failures;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first
                  << ": " << outcome.detail << "\n";
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
