#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace condorcet {

/// Alternatives are arbitrary positive integer labels (not necessarily 1..n).
using Alternative = int;

using AlternativeSet = std::set<Alternative>;

/// Thrown when an argument violates an operation's contract.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input exceeds a size guard (orders on more than 7
/// alternatives, single-crossing search on more than 10 orders, ...).
class size_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A complete strict ranking of an alternative set, best first.
/// Positions are 1-based: position 1 is the most preferred alternative.
class LinearOrder {
public:
    explicit LinearOrder(std::vector<Alternative> ranking);

    const std::vector<Alternative>& ranking() const noexcept { return ranking_; }
    int size() const noexcept { return static_cast<int>(ranking_.size()); }

    /// Alternative at 1-based position p.
    Alternative at(int position) const;
    /// 1-based position of alternative a; throws input_error if absent.
    int position_of(Alternative a) const;
    bool contains(Alternative a) const noexcept;
    /// True iff a is ranked strictly above b; both must be present.
    bool prefers(Alternative a, Alternative b) const;

    AlternativeSet alternative_set() const;
    LinearOrder reversed() const;
    /// Subsequence of this order over `subset`, relative order preserved.
    LinearOrder restricted_to(const AlternativeSet& subset) const;

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) noexcept {
        return a.ranking_ == b.ranking_;
    }
    friend bool operator<(const LinearOrder& a, const LinearOrder& b) noexcept {
        return a.ranking_ < b.ranking_;
    }
    friend bool operator!=(const LinearOrder& a, const LinearOrder& b) noexcept { return !(a == b); }

private:
    std::vector<Alternative> ranking_;
};

/// A non-empty set of linear orders over a common alternative set.
/// Immutable value; orders iterate in lexicographic label-sequence order.
class Domain {
public:
    /// Alternative set inferred from the orders.
    explicit Domain(std::set<LinearOrder> orders);
    Domain(AlternativeSet alternatives, std::set<LinearOrder> orders);

    const AlternativeSet& alternatives() const noexcept { return alternatives_; }
    const std::set<LinearOrder>& orders() const noexcept { return orders_; }
    int size() const noexcept { return static_cast<int>(orders_.size()); }
    bool contains(const LinearOrder& order) const { return orders_.count(order) != 0; }

    friend bool operator==(const Domain& a, const Domain& b) noexcept {
        return a.alternatives_ == b.alternatives_ && a.orders_ == b.orders_;
    }
    friend bool operator!=(const Domain& a, const Domain& b) noexcept { return !(a == b); }
    friend bool operator<(const Domain& a, const Domain& b) noexcept {
        if (a.alternatives_ != b.alternatives_) return a.alternatives_ < b.alternatives_;
        return a.orders_ < b.orders_;
    }

private:
    AlternativeSet alternatives_;
    std::set<LinearOrder> orders_;
};

/// "x never occupies position `position` in the restriction to `triple`".
/// position 1 = top, 3 = bottom of the 3-element restriction.
struct NeverCondition {
    Alternative x;
    std::array<Alternative, 3> triple;  // sorted ascending
    int position;                       // 1, 2 or 3

    NeverCondition(Alternative x, std::array<Alternative, 3> triple, int position);
    NeverCondition(Alternative x, const AlternativeSet& triple, int position);

    friend bool operator==(const NeverCondition& a, const NeverCondition& b) noexcept {
        return a.x == b.x && a.triple == b.triple && a.position == b.position;
    }
    friend bool operator<(const NeverCondition& a, const NeverCondition& b) noexcept {
        if (a.triple != b.triple) return a.triple < b.triple;
        if (a.x != b.x) return a.x < b.x;
        return a.position < b.position;
    }
};

/// "2N{123}3"; commas between labels when any label exceeds 9.
std::string to_string(const NeverCondition& condition);

/// All |A|! orders on `alternatives`, lexicographic by label sequence.
/// Guarded: throws size_error for more than 7 alternatives.
std::vector<LinearOrder> all_linear_orders(const AlternativeSet& alternatives);

/// Subsequence of `order` over `subset`.
LinearOrder restrict_order(const LinearOrder& order, const AlternativeSet& subset);

/// Restriction of every order, duplicates merged.
Domain restrict_domain(const Domain& domain, const AlternativeSet& subset);

/// Replace every alternative through a bijection.
Domain relabel(const Domain& domain, const std::map<Alternative, Alternative>& mapping);

/// Reverse every order.
Domain flip(const Domain& domain);

/// True iff no 3-element restriction contains a full cyclic triple
/// ({abc,bca,cab} or {acb,cba,bac}). Fewer than 3 alternatives: true.
bool is_condorcet(const Domain& domain);

/// Independent characterization used for cross-checking: true iff every
/// 3-element restriction satisfies at least one never-condition.
bool is_condorcet_via_never_conditions(const Domain& domain);

/// Every condition xN_Bp the domain satisfies, over all triples B.
std::set<NeverCondition> never_conditions_of(const Domain& domain);

/// All linear orders on `alternatives` whose restriction to each condition's
/// triple avoids placing x at the stated position. Throws input_error when no
/// order survives (domains are non-empty).
Domain domain_from_conditions(const AlternativeSet& alternatives,
                              const std::set<NeverCondition>& conditions);

}  // namespace condorcet
