#include "condorcet/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "condorcet/composition.hpp"
#include "condorcet/text_format.hpp"
#include "triple_utils.hpp"

namespace condorcet {

namespace {

// Subsets of up to 128 orders (5! = 120 is the largest we enumerate over).
struct OrderMask {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool test(int i) const {
        return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
    }
    void set(int i) {
        if (i < 64) {
            lo |= std::uint64_t{1} << i;
        } else {
            hi |= std::uint64_t{1} << (i - 64);
        }
    }
    void unset(int i) {
        if (i < 64) {
            lo &= ~(std::uint64_t{1} << i);
        } else {
            hi &= ~(std::uint64_t{1} << (i - 64));
        }
    }
    OrderMask operator&(const OrderMask& other) const { return {lo & other.lo, hi & other.hi}; }
    bool empty() const { return lo == 0 && hi == 0; }
    bool operator<(const OrderMask& other) const {
        return lo != other.lo ? lo < other.lo : hi < other.hi;
    }
    bool operator==(const OrderMask& other) const { return lo == other.lo && hi == other.hi; }
};

struct EnumerationSpace {
    std::vector<LinearOrder> orders;
    std::vector<std::array<Alternative, 3>> triples;
    std::vector<std::vector<int>> cls;  // cls[t][o]: restriction pattern of order o on triple t
};

EnumerationSpace build_space(int n) {
    AlternativeSet alts;
    for (int a = 1; a <= n; ++a) alts.insert(a);
    EnumerationSpace space;
    space.orders = all_linear_orders(alts);
    space.triples = detail::all_triples(alts);
    space.cls.resize(space.triples.size());
    for (std::size_t t = 0; t < space.triples.size(); ++t) {
        space.cls[t].reserve(space.orders.size());
        for (const LinearOrder& order : space.orders) {
            space.cls[t].push_back(detail::triple_class(order, space.triples[t]));
        }
    }
    return space;
}

void check_enumeration_bounds(int n, bool allow_large) {
    if (n < 2) throw input_error("enumeration needs at least 2 alternatives");
    if (n > 5) throw size_error("enumeration beyond n = 5 is not supported");
    if (n == 5 && !allow_large) {
        throw size_error("n = 5 enumeration is slow; pass the explicit override to run it");
    }
}

bool mask_is_maximal(const OrderMask& mask, const EnumerationSpace& space) {
    const std::size_t nt = space.triples.size();
    std::vector<unsigned> present(nt, 0);
    bool any = false;
    for (int o = 0; o < static_cast<int>(space.orders.size()); ++o) {
        if (!mask.test(o)) continue;
        any = true;
        for (std::size_t t = 0; t < nt; ++t) present[t] |= 1u << space.cls[t][static_cast<std::size_t>(o)];
    }
    if (!any) return false;
    for (int o = 0; o < static_cast<int>(space.orders.size()); ++o) {
        if (mask.test(o)) continue;
        bool addable = true;
        for (std::size_t t = 0; t < nt; ++t) {
            if (detail::completes_orbit(present[t] |
                                        (1u << space.cls[t][static_cast<std::size_t>(o)]))) {
                addable = false;
                break;
            }
        }
        if (addable) return false;
    }
    return true;
}

std::vector<Domain> masks_to_sorted_domains(const std::vector<OrderMask>& masks,
                                            const EnumerationSpace& space) {
    std::vector<std::pair<std::string, Domain>> keyed;
    for (const OrderMask& mask : masks) {
        std::set<LinearOrder> orders;
        for (int o = 0; o < static_cast<int>(space.orders.size()); ++o) {
            if (mask.test(o)) orders.insert(space.orders[static_cast<std::size_t>(o)]);
        }
        Domain domain(std::move(orders));
        keyed.emplace_back(render_domain_text(domain), std::move(domain));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Domain> result;
    result.reserve(keyed.size());
    for (auto& [key, domain] : keyed) result.push_back(std::move(domain));
    return result;
}

bool nl_decomposable(const Domain& domain) {
    return domain.alternatives().size() >= 2 && !nl_decompose(domain).empty();
}

std::string minimal_key(const Domain& domain, bool include_flip) {
    if (domain.alternatives().size() > 7) {
        throw size_error("canonical form limited to 7 alternatives");
    }
    std::vector<Alternative> alts(domain.alternatives().begin(), domain.alternatives().end());
    const int k = static_cast<int>(alts.size());
    std::vector<int> target(static_cast<std::size_t>(k));
    std::iota(target.begin(), target.end(), 1);

    std::string best;
    std::map<Alternative, int> position;
    for (int i = 0; i < k; ++i) position[alts[static_cast<std::size_t>(i)]] = i;

    do {
        for (int variant = 0; variant < (include_flip ? 2 : 1); ++variant) {
            std::vector<std::string> lines;
            lines.reserve(domain.orders().size());
            for (const LinearOrder& order : domain.orders()) {
                std::string line(static_cast<std::size_t>(k), '0');
                for (int i = 0; i < k; ++i) {
                    Alternative a = order.ranking()[static_cast<std::size_t>(i)];
                    char digit = static_cast<char>('0' + target[static_cast<std::size_t>(position[a])]);
                    line[static_cast<std::size_t>(variant == 0 ? i : k - 1 - i)] = digit;
                }
                lines.push_back(std::move(line));
            }
            std::sort(lines.begin(), lines.end());
            std::string key;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (i > 0) key += ',';
                key += lines[i];
            }
            if (best.empty() || key < best) best = std::move(key);
        }
    } while (std::next_permutation(target.begin(), target.end()));
    return best;
}

std::vector<DomainClass> classify_by(const std::vector<Domain>& domains,
                                     const std::function<std::string(const Domain&)>& key_of) {
    std::map<std::string, DomainClass> classes;
    for (const Domain& domain : domains) {
        std::string key = key_of(domain);
        auto [it, inserted] = classes.try_emplace(key, DomainClass{key, {}, false});
        it->second.representatives.push_back(domain);
        if (!it->second.decomposable && nl_decomposable(domain)) it->second.decomposable = true;
    }
    std::vector<DomainClass> result;
    result.reserve(classes.size());
    for (auto& [key, cls] : classes) result.push_back(std::move(cls));
    return result;
}

}  // namespace

std::vector<Domain> enumerate_maximal(int n, bool allow_large) {
    check_enumeration_bounds(n, allow_large);
    EnumerationSpace space = build_space(n);
    const std::size_t nt = space.triples.size();

    // keep[t][m*3+p-1]: orders whose triple-t restriction never has member m
    // at position p, i.e. the orders compatible with that never-condition.
    std::vector<std::array<OrderMask, 9>> keep(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        for (int o = 0; o < static_cast<int>(space.orders.size()); ++o) {
            int cls = space.cls[t][static_cast<std::size_t>(o)];
            for (int member = 0; member < 3; ++member) {
                int pos = detail::pattern_position(cls, member);
                for (int p = 1; p <= 3; ++p) {
                    if (p != pos) keep[t][static_cast<std::size_t>(member * 3 + p - 1)].set(o);
                }
            }
        }
    }

    OrderMask full;
    for (int o = 0; o < static_cast<int>(space.orders.size()); ++o) full.set(o);

    std::set<OrderMask> seen;
    std::vector<OrderMask> maximal;
    std::function<void(std::size_t, OrderMask)> assign = [&](std::size_t t, OrderMask mask) {
        if (mask.empty()) return;
        if (t == nt) {
            if (seen.insert(mask).second && mask_is_maximal(mask, space)) {
                maximal.push_back(mask);
            }
            return;
        }
        for (int c = 0; c < 9; ++c) assign(t + 1, mask & keep[t][static_cast<std::size_t>(c)]);
    };
    assign(0, full);
    return masks_to_sorted_domains(maximal, space);
}

std::vector<Domain> enumerate_maximal_backtracking(int n, bool allow_large) {
    check_enumeration_bounds(n, allow_large);
    EnumerationSpace space = build_space(n);
    const std::size_t nt = space.triples.size();
    const int total = static_cast<int>(space.orders.size());

    std::vector<unsigned> present(nt, 0);
    std::vector<OrderMask> maximal;
    OrderMask mask;
    std::function<void(int)> search = [&](int o) {
        if (o == total) {
            if (mask_is_maximal(mask, space)) maximal.push_back(mask);
            return;
        }
        bool allowed = true;
        for (std::size_t t = 0; t < nt; ++t) {
            if (detail::completes_orbit(present[t] |
                                        (1u << space.cls[t][static_cast<std::size_t>(o)]))) {
                allowed = false;
                break;
            }
        }
        if (allowed) {
            std::vector<unsigned> saved = present;
            for (std::size_t t = 0; t < nt; ++t) {
                present[t] |= 1u << space.cls[t][static_cast<std::size_t>(o)];
            }
            mask.set(o);
            search(o + 1);
            mask.unset(o);
            present = std::move(saved);
        }
        search(o + 1);
    };
    search(0);
    return masks_to_sorted_domains(maximal, space);
}

std::string canonical_form(const Domain& domain) { return minimal_key(domain, true); }

std::string canonical_form_iso(const Domain& domain) { return minimal_key(domain, false); }

std::vector<DomainClass> classify(const std::vector<Domain>& domains) {
    return classify_by(domains, canonical_form);
}

std::vector<DomainClass> classify_iso(const std::vector<Domain>& domains) {
    return classify_by(domains, canonical_form_iso);
}

std::pair<int, std::vector<std::string>> decomposability_census(
    const std::vector<DomainClass>& classes) {
    int count = 0;
    std::vector<std::string> keys;
    for (const DomainClass& cls : classes) {
        bool decomposable = cls.decomposable;
        if (!decomposable) {
            for (const Domain& domain : cls.representatives) {
                if (nl_decomposable(flip(domain))) {
                    decomposable = true;
                    break;
                }
            }
        }
        if (decomposable) {
            ++count;
            keys.push_back(cls.canonical_key);
        }
    }
    return {count, keys};
}

}  // namespace condorcet
