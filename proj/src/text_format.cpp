#include "condorcet/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace condorcet {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

Alternative parse_label(const std::string& token, int line) {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](unsigned char c) { return std::isdigit(c); })) {
        throw parse_error(line, "invalid alternative label '" + token + "'");
    }
    if (token.front() == '0') {
        throw parse_error(line, "invalid alternative label '" + token + "'");
    }
    long long value = 0;
    for (char c : token) {
        value = value * 10 + (c - '0');
        if (value > std::numeric_limits<Alternative>::max()) {
            throw parse_error(line, "alternative label '" + token + "' is too large");
        }
    }
    return static_cast<Alternative>(value);
}

bool compact_digits(const std::string& token) {
    return token.size() > 1 && std::all_of(token.begin(), token.end(), [](unsigned char c) {
               return c >= '1' && c <= '9';
           });
}

}  // namespace

Domain parse_domain_text(const std::string& text) {
    std::optional<AlternativeSet> declared;
    bool saw_order = false;
    AlternativeSet base;
    std::set<LinearOrder> orders;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string content = raw.substr(0, raw.find('#'));
        content = trim(content);
        if (content.empty()) continue;

        if (content.rfind("alts:", 0) == 0) {
            if (declared) throw parse_error(line, "duplicate alts header");
            if (saw_order) throw parse_error(line, "alts header must precede all orders");
            AlternativeSet alts;
            for (const std::string& token : split_tokens(content.substr(5))) {
                Alternative a = parse_label(token, line);
                if (!alts.insert(a).second) {
                    throw parse_error(line, "alts header repeats label " + std::to_string(a));
                }
            }
            if (alts.empty()) throw parse_error(line, "alts header declares no alternatives");
            declared = std::move(alts);
            continue;
        }

        std::vector<std::string> tokens = split_tokens(content);
        std::vector<Alternative> labels;
        const bool small_labels = !declared || *declared->rbegin() <= 9;
        if (tokens.size() == 1 && compact_digits(tokens[0]) && small_labels) {
            for (char c : tokens[0]) labels.push_back(c - '0');
        } else {
            for (const std::string& token : tokens) labels.push_back(parse_label(token, line));
        }

        AlternativeSet label_set(labels.begin(), labels.end());
        if (label_set.size() != labels.size()) {
            throw parse_error(line, "order repeats an alternative");
        }
        const AlternativeSet& expected = declared ? *declared : (saw_order ? base : label_set);
        if (label_set != expected) {
            throw parse_error(line, "order does not rank the same alternatives as the rest of the domain");
        }
        if (!saw_order && !declared) base = label_set;
        saw_order = true;
        if (!orders.emplace(std::move(labels)).second) {
            throw parse_error(line, "duplicate order");
        }
    }

    if (orders.empty()) throw parse_error(0, "domain text contains no orders");
    return Domain(declared ? *declared : base, std::move(orders));
}

std::string order_text(const LinearOrder& order) {
    const bool compact =
        std::all_of(order.ranking().begin(), order.ranking().end(), [](Alternative a) { return a <= 9; });
    std::ostringstream out;
    bool first = true;
    for (Alternative a : order.ranking()) {
        if (!first && !compact) out << ' ';
        out << a;
        first = false;
    }
    return out.str();
}

std::string render_domain_text(const Domain& domain) {
    std::ostringstream out;
    for (const LinearOrder& order : domain.orders()) out << order_text(order) << '\n';
    return out.str();
}

std::string domain_inline_text(const Domain& domain) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const LinearOrder& order : domain.orders()) {
        if (!first) out << ',';
        out << order_text(order);
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace condorcet
