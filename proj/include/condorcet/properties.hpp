#pragma once

#include <vector>

#include "condorcet/core.hpp"

namespace condorcet {

/// A left-to-right arrangement of alternatives, for single-peakedness.
class Axis {
public:
    explicit Axis(std::vector<Alternative> left_to_right);

    const std::vector<Alternative>& sequence() const noexcept { return sequence_; }
    int size() const noexcept { return static_cast<int>(sequence_.size()); }
    AlternativeSet alternative_set() const;

private:
    std::vector<Alternative> sequence_;
};

/// Orders outside the domain whose addition keeps it Condorcet, in
/// lexicographic label-sequence order. Requires a Condorcet domain and at
/// most 7 alternatives.
std::vector<LinearOrder> addable_orders(const Domain& domain);

/// Condorcet and no single order can be added without breaking that.
bool is_maximal(const Domain& domain);

/// Every ordered pair (a,b) is realized: some order ranks a above b.
/// Requires at least 2 alternatives.
bool is_ample(const Domain& domain);

/// Every 3-element restriction has exactly 4 distinct orders, the most a
/// Condorcet domain allows. Requires at least 3 alternatives.
bool is_copious(const Domain& domain);

/// Some order and its reversal both belong to the domain.
bool has_maximal_width(const Domain& domain);

/// All orders single-peaked with respect to the axis: going down any order,
/// the alternatives seen so far always form a contiguous axis segment.
/// Contains exactly 2^(k-1) orders for k alternatives.
Domain generate_single_peaked(const Axis& axis);

/// Membership of every order in generate_single_peaked(axis). The axis must
/// arrange exactly the domain's alternatives.
bool is_single_peaked_wrt(const Domain& domain, const Axis& axis);

/// Every 3-element restriction leaves some member never at the bottom.
/// Requires at least 3 alternatives.
bool is_arrow_single_peaked(const Domain& domain);

/// Some arrangement of the orders flips each pair of alternatives at most
/// once. Guarded: throws size_error for more than 10 orders.
bool is_single_crossing(const Domain& domain);

}  // namespace condorcet
