#pragma once

#include <stdexcept>
#include <string>

#include "condorcet/core.hpp"

namespace condorcet {

/// Raised for malformed domain text; `line` is 1-based (0 when the problem
/// is not tied to a single line, e.g. no orders at all).
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Domain text: one order per line, `#` starts a comment, blank lines are
/// skipped. An optional `alts: 1 2 3` header may precede the orders. A line
/// is either whitespace-separated labels or, when every label is a single
/// digit, a compact digit string such as `2314`.
Domain parse_domain_text(const std::string& text);

/// Inverse of parse_domain_text: sorted orders, compact form whenever all
/// labels are single digits, one per line, trailing newline, no header.
std::string render_domain_text(const Domain& domain);

/// One order as text: `2314`, or `2 31 4` when a label exceeds 9.
std::string order_text(const LinearOrder& order);

/// Brace-wrapped single-line domain: `{1234,2134}`.
std::string domain_inline_text(const Domain& domain);

}  // namespace condorcet
