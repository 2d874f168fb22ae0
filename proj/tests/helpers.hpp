#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "condorcet/core.hpp"
#include "condorcet/text_format.hpp"

namespace test_helpers {

inline condorcet::Domain dom(const std::string& text) {
    return condorcet::parse_domain_text(text);
}

inline condorcet::LinearOrder ord(const std::string& digits) {
    std::vector<condorcet::Alternative> ranking;
    for (char c : digits) ranking.push_back(c - '0');
    return condorcet::LinearOrder(std::move(ranking));
}

inline condorcet::NeverCondition nc(condorcet::Alternative x, condorcet::Alternative a,
                                    condorcet::Alternative b, condorcet::Alternative c,
                                    int position) {
    return condorcet::NeverCondition(x, std::array<condorcet::Alternative, 3>{a, b, c}, position);
}

/// Random non-empty subset of the orders on `alternatives`, for property tests.
inline condorcet::Domain random_domain(std::mt19937& rng,
                                       const condorcet::AlternativeSet& alternatives) {
    const auto all = condorcet::all_linear_orders(alternatives);
    std::set<condorcet::LinearOrder> picked;
    std::uniform_int_distribution<int> coin(0, 1);
    while (picked.empty()) {
        for (const auto& order : all) {
            if (coin(rng)) picked.insert(order);
        }
    }
    return condorcet::Domain(alternatives, std::move(picked));
}

inline std::map<condorcet::Alternative, condorcet::Alternative> random_bijection(
    std::mt19937& rng, const condorcet::AlternativeSet& from,
    const condorcet::AlternativeSet& to) {
    std::vector<condorcet::Alternative> images(to.begin(), to.end());
    std::shuffle(images.begin(), images.end(), rng);
    std::map<condorcet::Alternative, condorcet::Alternative> mapping;
    std::size_t i = 0;
    for (condorcet::Alternative a : from) mapping[a] = images[i++];
    return mapping;
}

}  // namespace test_helpers
