#include "condorcet/core.hpp"

#include <algorithm>
#include <sstream>

#include "triple_utils.hpp"

namespace condorcet {

namespace {

std::string join_labels(const std::vector<Alternative>& labels, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out << sep;
        out << labels[i];
    }
    return out.str();
}

}  // namespace

LinearOrder::LinearOrder(std::vector<Alternative> ranking) : ranking_(std::move(ranking)) {
    if (ranking_.empty()) throw input_error("linear order must rank at least one alternative");
    for (Alternative a : ranking_) {
        if (a < 1) throw input_error("alternative labels must be positive integers");
    }
    auto sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw input_error("linear order repeats an alternative: " + join_labels(ranking_, " "));
    }
}

Alternative LinearOrder::at(int position) const {
    if (position < 1 || position > size()) {
        throw input_error("position " + std::to_string(position) + " out of range 1.." +
                          std::to_string(size()));
    }
    return ranking_[static_cast<std::size_t>(position - 1)];
}

int LinearOrder::position_of(Alternative a) const {
    for (int i = 0; i < size(); ++i) {
        if (ranking_[static_cast<std::size_t>(i)] == a) return i + 1;
    }
    throw input_error("alternative " + std::to_string(a) + " not ranked by this order");
}

bool LinearOrder::contains(Alternative a) const noexcept {
    return std::find(ranking_.begin(), ranking_.end(), a) != ranking_.end();
}

bool LinearOrder::prefers(Alternative a, Alternative b) const {
    return position_of(a) < position_of(b);
}

AlternativeSet LinearOrder::alternative_set() const {
    return AlternativeSet(ranking_.begin(), ranking_.end());
}

LinearOrder LinearOrder::reversed() const {
    return LinearOrder(std::vector<Alternative>(ranking_.rbegin(), ranking_.rend()));
}

LinearOrder LinearOrder::restricted_to(const AlternativeSet& subset) const {
    if (subset.empty()) throw input_error("restriction requires a non-empty alternative subset");
    std::vector<Alternative> kept;
    kept.reserve(subset.size());
    for (Alternative a : ranking_) {
        if (subset.count(a)) kept.push_back(a);
    }
    if (kept.size() != subset.size()) {
        throw input_error("restriction subset is not contained in the order's alternatives");
    }
    return LinearOrder(std::move(kept));
}

Domain::Domain(std::set<LinearOrder> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw input_error("domain must contain at least one order");
    alternatives_ = orders_.begin()->alternative_set();
    for (const LinearOrder& order : orders_) {
        if (order.alternative_set() != alternatives_) {
            throw input_error("all orders in a domain must rank the same alternatives");
        }
    }
}

Domain::Domain(AlternativeSet alternatives, std::set<LinearOrder> orders)
    : alternatives_(std::move(alternatives)), orders_(std::move(orders)) {
    if (orders_.empty()) throw input_error("domain must contain at least one order");
    for (const LinearOrder& order : orders_) {
        if (order.alternative_set() != alternatives_) {
            throw input_error("order does not rank exactly the declared alternatives");
        }
    }
}

NeverCondition::NeverCondition(Alternative x_, std::array<Alternative, 3> triple_, int position_)
    : x(x_), triple(triple_), position(position_) {
    std::sort(triple.begin(), triple.end());
    if (triple[0] < 1) throw input_error("alternative labels must be positive integers");
    if (triple[0] == triple[1] || triple[1] == triple[2]) {
        throw input_error("never-condition triple must contain three distinct alternatives");
    }
    if (x != triple[0] && x != triple[1] && x != triple[2]) {
        throw input_error("never-condition subject must belong to its triple");
    }
    if (position < 1 || position > 3) {
        throw input_error("never-condition position must be 1, 2 or 3");
    }
}

NeverCondition::NeverCondition(Alternative x_, const AlternativeSet& triple_, int position_)
    : NeverCondition(x_,
                     [&] {
                         if (triple_.size() != 3) {
                             throw input_error("never-condition triple must have exactly 3 alternatives");
                         }
                         std::array<Alternative, 3> arr{};
                         std::copy(triple_.begin(), triple_.end(), arr.begin());
                         return arr;
                     }(),
                     position_) {}

std::string to_string(const NeverCondition& condition) {
    const bool compact = condition.triple[2] <= 9;
    std::ostringstream out;
    out << condition.x << "N{";
    for (int i = 0; i < 3; ++i) {
        if (i > 0 && !compact) out << ",";
        out << condition.triple[static_cast<std::size_t>(i)];
    }
    out << "}" << condition.position;
    return out.str();
}

std::vector<LinearOrder> all_linear_orders(const AlternativeSet& alternatives) {
    if (alternatives.empty()) throw input_error("alternative set must be non-empty");
    if (alternatives.size() > 7) {
        throw size_error("refusing to enumerate orders on " +
                         std::to_string(alternatives.size()) + " alternatives (limit 7)");
    }
    std::vector<Alternative> seq(alternatives.begin(), alternatives.end());
    std::vector<LinearOrder> result;
    do {
        result.emplace_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return result;
}

LinearOrder restrict_order(const LinearOrder& order, const AlternativeSet& subset) {
    return order.restricted_to(subset);
}

Domain restrict_domain(const Domain& domain, const AlternativeSet& subset) {
    std::set<LinearOrder> restricted;
    for (const LinearOrder& order : domain.orders()) {
        restricted.insert(order.restricted_to(subset));
    }
    return Domain(subset, std::move(restricted));
}

Domain relabel(const Domain& domain, const std::map<Alternative, Alternative>& mapping) {
    std::set<Alternative> images;
    for (Alternative a : domain.alternatives()) {
        auto it = mapping.find(a);
        if (it == mapping.end()) {
            throw input_error("relabeling does not map alternative " + std::to_string(a));
        }
        if (!images.insert(it->second).second) {
            throw input_error("relabeling maps two alternatives to " + std::to_string(it->second));
        }
    }
    std::set<LinearOrder> orders;
    for (const LinearOrder& order : domain.orders()) {
        std::vector<Alternative> ranking;
        ranking.reserve(order.ranking().size());
        for (Alternative a : order.ranking()) ranking.push_back(mapping.at(a));
        orders.emplace(std::move(ranking));
    }
    return Domain(std::move(images), std::move(orders));
}

Domain flip(const Domain& domain) {
    std::set<LinearOrder> orders;
    for (const LinearOrder& order : domain.orders()) orders.insert(order.reversed());
    return Domain(domain.alternatives(), std::move(orders));
}

bool is_condorcet(const Domain& domain) {
    if (domain.alternatives().size() < 3) return true;
    for (const auto& triple : detail::all_triples(domain.alternatives())) {
        unsigned mask = 0;
        for (const LinearOrder& order : domain.orders()) {
            mask |= 1u << detail::triple_class(order, triple);
        }
        if (detail::completes_orbit(mask)) return false;
    }
    return true;
}

bool is_condorcet_via_never_conditions(const Domain& domain) {
    if (domain.alternatives().size() < 3) return true;
    for (const auto& triple : detail::all_triples(domain.alternatives())) {
        bool realized[3][3] = {};
        for (const LinearOrder& order : domain.orders()) {
            int cls = detail::triple_class(order, triple);
            for (int member = 0; member < 3; ++member) {
                realized[member][detail::pattern_position(cls, member) - 1] = true;
            }
        }
        bool satisfied = false;
        for (int member = 0; member < 3 && !satisfied; ++member) {
            for (int pos = 0; pos < 3 && !satisfied; ++pos) {
                if (!realized[member][pos]) satisfied = true;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

std::set<NeverCondition> never_conditions_of(const Domain& domain) {
    std::set<NeverCondition> conditions;
    for (const auto& triple : detail::all_triples(domain.alternatives())) {
        bool realized[3][3] = {};
        for (const LinearOrder& order : domain.orders()) {
            int cls = detail::triple_class(order, triple);
            for (int member = 0; member < 3; ++member) {
                realized[member][detail::pattern_position(cls, member) - 1] = true;
            }
        }
        for (int member = 0; member < 3; ++member) {
            for (int pos = 1; pos <= 3; ++pos) {
                if (!realized[member][pos - 1]) {
                    conditions.emplace(triple[static_cast<std::size_t>(member)], triple, pos);
                }
            }
        }
    }
    return conditions;
}

Domain domain_from_conditions(const AlternativeSet& alternatives,
                              const std::set<NeverCondition>& conditions) {
    for (const NeverCondition& c : conditions) {
        for (Alternative a : c.triple) {
            if (!alternatives.count(a)) {
                throw input_error("never-condition mentions alternative " + std::to_string(a) +
                                  " outside the alternative set");
            }
        }
    }
    std::set<LinearOrder> kept;
    for (const LinearOrder& order : all_linear_orders(alternatives)) {
        bool ok = true;
        for (const NeverCondition& c : conditions) {
            int member = c.x == c.triple[0] ? 0 : (c.x == c.triple[1] ? 1 : 2);
            if (detail::pattern_position(detail::triple_class(order, c.triple), member) ==
                c.position) {
                ok = false;
                break;
            }
        }
        if (ok) kept.insert(order);
    }
    if (kept.empty()) throw input_error("never-conditions admit no linear order");
    return Domain(alternatives, std::move(kept));
}

namespace detail {

int pattern_position(int cls, int member) {
    static constexpr int table[6][3] = {
        {1, 2, 3},  // abc
        {1, 3, 2},  // acb
        {2, 1, 3},  // bac
        {3, 1, 2},  // bca
        {2, 3, 1},  // cab
        {3, 2, 1},  // cba
    };
    return table[cls][member];
}

std::vector<std::array<Alternative, 3>> all_triples(const AlternativeSet& alternatives) {
    std::vector<Alternative> seq(alternatives.begin(), alternatives.end());
    std::vector<std::array<Alternative, 3>> triples;
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                triples.push_back({seq[i], seq[j], seq[k]});
    return triples;
}

}  // namespace detail

}  // namespace condorcet
