#include "condorcet/composition.hpp"

#include <algorithm>

#include "condorcet/properties.hpp"

namespace condorcet {

namespace {

// Singleton alternative sets cannot carry the ample/copious predicates;
// the theorem checker treats them as vacuously satisfied.
bool ample_or_vacuous(const Domain& d) {
    return d.alternatives().size() < 2 || is_ample(d);
}

bool copious_or_vacuous(const Domain& d) {
    return d.alternatives().size() < 3 || is_copious(d);
}

LinearOrder append(const LinearOrder& order, Alternative last) {
    std::vector<Alternative> ranking = order.ranking();
    ranking.push_back(last);
    return LinearOrder(std::move(ranking));
}

LinearOrder strip_last(const LinearOrder& order) {
    std::vector<Alternative> ranking = order.ranking();
    ranking.pop_back();
    return LinearOrder(std::move(ranking));
}

std::vector<std::pair<Alternative, Alternative>> unordered_pairs(const AlternativeSet& set) {
    std::vector<Alternative> seq(set.begin(), set.end());
    std::vector<std::pair<Alternative, Alternative>> pairs;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) pairs.emplace_back(seq[i], seq[j]);
    return pairs;
}

}  // namespace

CompositionRoles infer_roles(const Domain& d1, const Domain& d2) {
    AlternativeSet all = d1.alternatives();
    all.insert(d2.alternatives().begin(), d2.alternatives().end());
    std::vector<Alternative> missing1;
    std::vector<Alternative> missing2;
    for (Alternative a : all) {
        if (!d1.alternatives().count(a)) missing1.push_back(a);
        if (!d2.alternatives().count(a)) missing2.push_back(a);
    }
    if (missing1.size() != 1 || missing2.size() != 1) {
        throw input_error("each factor must miss exactly one alternative of the union");
    }
    if (missing1[0] == missing2[0]) {
        throw input_error("the two factors must miss different alternatives");
    }
    return CompositionRoles{missing1[0], missing2[0]};
}

Domain nl_compose(const Domain& d1, const Domain& d2) {
    CompositionRoles roles = infer_roles(d1, d2);
    AlternativeSet all = d1.alternatives();
    all.insert(roles.x);
    std::set<LinearOrder> orders;
    for (const LinearOrder& u : d1.orders()) orders.insert(append(u, roles.x));
    for (const LinearOrder& v : d2.orders()) orders.insert(append(v, roles.y));
    return Domain(std::move(all), std::move(orders));
}

std::vector<Decomposition> nl_decompose(const Domain& domain) {
    if (domain.alternatives().size() < 2) {
        throw input_error("decomposition needs at least 2 alternatives");
    }
    std::vector<Decomposition> result;
    for (Alternative x : domain.alternatives()) {
        for (Alternative y : domain.alternatives()) {
            if (x == y) continue;
            std::set<LinearOrder> block1;
            std::set<LinearOrder> block2;
            bool covered = true;
            for (const LinearOrder& order : domain.orders()) {
                Alternative last = order.ranking().back();
                if (last == x) {
                    block1.insert(strip_last(order));
                } else if (last == y) {
                    block2.insert(strip_last(order));
                } else {
                    covered = false;
                    break;
                }
            }
            if (!covered || block1.empty() || block2.empty()) continue;
            AlternativeSet alts1 = domain.alternatives();
            alts1.erase(x);
            AlternativeSet alts2 = domain.alternatives();
            alts2.erase(y);
            result.push_back(Decomposition{CompositionRoles{x, y},
                                           Domain(std::move(alts1), std::move(block1)),
                                           Domain(std::move(alts2), std::move(block2))});
        }
    }
    return result;
}

bool is_right_obstruction(const Domain& domain, Alternative a, Alternative b, Alternative c) {
    if (a == b || b == c || a == c) {
        throw input_error("obstruction test needs three distinct alternatives");
    }
    for (Alternative v : {a, b, c}) {
        if (!domain.alternatives().count(v)) {
            throw input_error("alternative " + std::to_string(v) + " is not in the domain");
        }
    }
    if (!is_condorcet(domain)) {
        throw input_error("obstruction test is only defined for Condorcet domains");
    }
    AlternativeSet triple{a, b, c};
    Domain restriction = restrict_domain(domain, triple);
    std::set<LinearOrder> orders = restriction.orders();
    orders.insert(LinearOrder({c, b, a}));
    return !is_condorcet(Domain(std::move(triple), std::move(orders)));
}

bool never_obstructs(const Domain& domain, Alternative a,
                     const std::vector<std::pair<Alternative, Alternative>>& pairs) {
    if (!domain.alternatives().count(a)) {
        throw input_error("alternative " + std::to_string(a) + " is not in the domain");
    }
    if (!is_condorcet(domain)) {
        throw input_error("obstruction test is only defined for Condorcet domains");
    }
    for (const auto& [i, j] : pairs) {
        if (i == j || i == a || j == a) {
            throw input_error("swap pairs must consist of two distinct alternatives other than " +
                              std::to_string(a));
        }
        for (Alternative v : {i, j}) {
            if (!domain.alternatives().count(v)) {
                throw input_error("alternative " + std::to_string(v) + " is not in the domain");
            }
        }
        AlternativeSet triple{i, j, a};
        std::set<LinearOrder> orders = restrict_domain(domain, triple).orders();
        orders.insert(LinearOrder({i, j, a}));
        orders.insert(LinearOrder({j, i, a}));
        if (!is_condorcet(Domain(std::move(triple), std::move(orders)))) return false;
    }
    return true;
}

Domain overlap_domain(const Domain& d1, const Domain& d2) {
    CompositionRoles roles = infer_roles(d1, d2);
    AlternativeSet common = d1.alternatives();
    common.insert(d2.alternatives().begin(), d2.alternatives().end());
    common.erase(roles.x);
    common.erase(roles.y);
    if (common.empty()) {
        throw input_error("the factors share no alternatives");
    }
    std::set<LinearOrder> orders = restrict_domain(d1, common).orders();
    std::set<LinearOrder> from_d2 = restrict_domain(d2, common).orders();
    orders.merge(from_d2);
    return Domain(std::move(common), std::move(orders));
}

HypothesisReport theorem_hypotheses(const Domain& d1, const Domain& d2) {
    CompositionRoles roles = infer_roles(d1, d2);
    if (!is_condorcet(d1) || !is_condorcet(d2)) {
        throw input_error("both factors must be Condorcet domains");
    }
    AlternativeSet common = d1.alternatives();
    common.insert(d2.alternatives().begin(), d2.alternatives().end());
    common.erase(roles.x);
    common.erase(roles.y);

    HypothesisReport report{};
    // With no shared alternatives there is no overlap to constrain;
    // the two-alternative composition (1) ⋄ (2) relies on this reading.
    report.e_is_condorcet = common.empty() || is_condorcet(overlap_domain(d1, d2));
    const auto pairs = unordered_pairs(common);
    report.x_never_obstructs_in_d2 = never_obstructs(d2, roles.x, pairs);
    report.y_never_obstructs_in_d1 = never_obstructs(d1, roles.y, pairs);
    report.d1_maximal = is_maximal(d1);
    report.d2_maximal = is_maximal(d2);
    report.d1_ample = ample_or_vacuous(d1);
    report.d2_ample = ample_or_vacuous(d2);
    report.d1_copious = copious_or_vacuous(d1);
    report.d2_copious = copious_or_vacuous(d2);
    return report;
}

std::vector<TheoremCounterexample> verify_composition_theorem(
    const std::vector<Domain>& factor_pool_1, const std::vector<Domain>& factor_pool_2) {
    std::vector<TheoremCounterexample> violations;
    for (std::size_t i = 0; i < factor_pool_1.size(); ++i) {
        for (std::size_t j = 0; j < factor_pool_2.size(); ++j) {
            const Domain& d1 = factor_pool_1[i];
            const Domain& d2 = factor_pool_2[j];
            HypothesisReport report = theorem_hypotheses(d1, d2);
            if (!report.e_is_condorcet || !report.x_never_obstructs_in_d2 ||
                !report.y_never_obstructs_in_d1) {
                continue;
            }
            Domain composed = nl_compose(d1, d2);
            if (!is_condorcet(composed)) {
                violations.push_back({i, j, "condorcet"});
                continue;
            }
            if (report.d1_maximal && report.d2_maximal && report.d1_ample && report.d2_ample) {
                if (!is_maximal(composed)) violations.push_back({i, j, "maximal"});
                if (!ample_or_vacuous(composed)) violations.push_back({i, j, "ample"});
            }
            if (report.d1_copious && report.d2_copious && !copious_or_vacuous(composed)) {
                violations.push_back({i, j, "copious"});
            }
        }
    }
    return violations;
}

}  // namespace condorcet
