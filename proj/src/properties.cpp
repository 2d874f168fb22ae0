#include "condorcet/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "triple_utils.hpp"

namespace condorcet {

Axis::Axis(std::vector<Alternative> left_to_right) : sequence_(std::move(left_to_right)) {
    if (sequence_.empty()) throw input_error("axis must arrange at least one alternative");
    for (Alternative a : sequence_) {
        if (a < 1) throw input_error("alternative labels must be positive integers");
    }
    std::vector<Alternative> sorted = sequence_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw input_error("axis repeats an alternative");
    }
}

AlternativeSet Axis::alternative_set() const {
    return AlternativeSet(sequence_.begin(), sequence_.end());
}

std::vector<LinearOrder> addable_orders(const Domain& domain) {
    if (!is_condorcet(domain)) {
        throw input_error("addable orders are only defined for Condorcet domains");
    }
    const auto triples = detail::all_triples(domain.alternatives());
    std::vector<unsigned> masks(triples.size(), 0);
    for (const LinearOrder& order : domain.orders()) {
        for (std::size_t t = 0; t < triples.size(); ++t) {
            masks[t] |= 1u << detail::triple_class(order, triples[t]);
        }
    }
    std::vector<LinearOrder> addable;
    for (const LinearOrder& candidate : all_linear_orders(domain.alternatives())) {
        if (domain.contains(candidate)) continue;
        bool ok = true;
        for (std::size_t t = 0; t < triples.size(); ++t) {
            unsigned with = masks[t] | (1u << detail::triple_class(candidate, triples[t]));
            if (detail::completes_orbit(with)) {
                ok = false;
                break;
            }
        }
        if (ok) addable.push_back(candidate);
    }
    return addable;
}

bool is_maximal(const Domain& domain) {
    return addable_orders(domain).empty();
}

bool is_ample(const Domain& domain) {
    if (domain.alternatives().size() < 2) {
        throw input_error("ampleness needs at least 2 alternatives");
    }
    std::vector<Alternative> alts(domain.alternatives().begin(), domain.alternatives().end());
    for (std::size_t i = 0; i < alts.size(); ++i) {
        for (std::size_t j = i + 1; j < alts.size(); ++j) {
            bool ij = false;
            bool ji = false;
            for (const LinearOrder& order : domain.orders()) {
                (order.prefers(alts[i], alts[j]) ? ij : ji) = true;
                if (ij && ji) break;
            }
            if (!ij || !ji) return false;
        }
    }
    return true;
}

bool is_copious(const Domain& domain) {
    if (domain.alternatives().size() < 3) {
        throw input_error("copiousness needs at least 3 alternatives");
    }
    for (const auto& triple : detail::all_triples(domain.alternatives())) {
        unsigned mask = 0;
        for (const LinearOrder& order : domain.orders()) {
            mask |= 1u << detail::triple_class(order, triple);
        }
        if (__builtin_popcount(mask) != 4) return false;
    }
    return true;
}

bool has_maximal_width(const Domain& domain) {
    for (const LinearOrder& order : domain.orders()) {
        if (domain.contains(order.reversed())) return true;
    }
    return false;
}

Domain generate_single_peaked(const Axis& axis) {
    const auto& seq = axis.sequence();
    const int k = axis.size();
    std::set<LinearOrder> orders;
    std::vector<Alternative> prefix;
    prefix.reserve(static_cast<std::size_t>(k));
    // Grow downward from the peak; the ranked-so-far set stays an axis segment.
    std::function<void(int, int)> extend = [&](int lo, int hi) {
        if (static_cast<int>(prefix.size()) == k) {
            orders.emplace(prefix);
            return;
        }
        if (lo > 0) {
            prefix.push_back(seq[static_cast<std::size_t>(lo - 1)]);
            extend(lo - 1, hi);
            prefix.pop_back();
        }
        if (hi < k - 1) {
            prefix.push_back(seq[static_cast<std::size_t>(hi + 1)]);
            extend(lo, hi + 1);
            prefix.pop_back();
        }
    };
    for (int peak = 0; peak < k; ++peak) {
        prefix.push_back(seq[static_cast<std::size_t>(peak)]);
        extend(peak, peak);
        prefix.pop_back();
    }
    return Domain(axis.alternative_set(), std::move(orders));
}

bool is_single_peaked_wrt(const Domain& domain, const Axis& axis) {
    if (axis.alternative_set() != domain.alternatives()) {
        throw input_error("axis must arrange exactly the domain's alternatives");
    }
    std::map<Alternative, int> axis_pos;
    for (int i = 0; i < axis.size(); ++i) axis_pos[axis.sequence()[static_cast<std::size_t>(i)]] = i;
    for (const LinearOrder& order : domain.orders()) {
        int lo = axis.size();
        int hi = -1;
        int taken = 0;
        for (Alternative a : order.ranking()) {
            int p = axis_pos.at(a);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
            ++taken;
            if (hi - lo + 1 != taken) return false;
        }
    }
    return true;
}

bool is_arrow_single_peaked(const Domain& domain) {
    if (domain.alternatives().size() < 3) {
        throw input_error("this test needs at least 3 alternatives");
    }
    for (const auto& triple : detail::all_triples(domain.alternatives())) {
        bool bottom_realized[3] = {};
        for (const LinearOrder& order : domain.orders()) {
            int cls = detail::triple_class(order, triple);
            for (int member = 0; member < 3; ++member) {
                if (detail::pattern_position(cls, member) == 3) bottom_realized[member] = true;
            }
        }
        if (bottom_realized[0] && bottom_realized[1] && bottom_realized[2]) return false;
    }
    return true;
}

bool is_single_crossing(const Domain& domain) {
    const int n = domain.size();
    if (n > 10) {
        throw size_error("single-crossing search limited to 10 orders, got " + std::to_string(n));
    }
    if (n <= 2) return true;

    std::vector<std::pair<Alternative, Alternative>> pairs;
    std::vector<Alternative> alts(domain.alternatives().begin(), domain.alternatives().end());
    for (std::size_t i = 0; i < alts.size(); ++i)
        for (std::size_t j = i + 1; j < alts.size(); ++j) pairs.emplace_back(alts[i], alts[j]);

    std::vector<const LinearOrder*> orders;
    for (const LinearOrder& order : domain.orders()) orders.push_back(&order);
    std::vector<std::vector<bool>> prefers(static_cast<std::size_t>(n));
    for (int o = 0; o < n; ++o) {
        for (const auto& [a, b] : pairs) {
            prefers[static_cast<std::size_t>(o)].push_back(orders[static_cast<std::size_t>(o)]->prefers(a, b));
        }
    }

    std::vector<bool> current(pairs.size());
    std::vector<bool> flipped(pairs.size());
    unsigned used = 0;
    std::function<bool(int)> place = [&](int depth) {
        if (depth == n) return true;
        for (int o = 0; o < n; ++o) {
            if (used & (1u << o)) continue;
            std::vector<int> flips;
            bool ok = true;
            for (std::size_t p = 0; p < pairs.size() && ok; ++p) {
                if (prefers[static_cast<std::size_t>(o)][p] != current[p]) {
                    if (flipped[p]) {
                        ok = false;
                    } else {
                        flips.push_back(static_cast<int>(p));
                    }
                }
            }
            if (ok) {
                used |= 1u << o;
                std::vector<bool> saved = current;
                for (int p : flips) {
                    current[static_cast<std::size_t>(p)] = prefers[static_cast<std::size_t>(o)][static_cast<std::size_t>(p)];
                    flipped[static_cast<std::size_t>(p)] = true;
                }
                if (place(depth + 1)) return true;
                current = saved;
                for (int p : flips) flipped[static_cast<std::size_t>(p)] = false;
                used &= ~(1u << o);
            }
        }
        return false;
    };

    for (int first = 0; first < n; ++first) {
        used = 1u << first;
        current = prefers[static_cast<std::size_t>(first)];
        std::fill(flipped.begin(), flipped.end(), false);
        if (place(1)) return true;
    }
    return false;
}

}  // namespace condorcet
