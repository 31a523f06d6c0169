#pragma once

#include <stdexcept>
#include <string>

namespace sqbetti {

// Violated precondition of a library operation (bad degree, mixed ambients,
// out-of-range parameters, ...).
class contract_error : public std::invalid_argument {
public:
    explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input.  Line/column are 1-based; 0 means "not applicable".
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    int line_;
    int column_;
};

// An operation that needs a squarefree stable ideal was handed something else.
// The message names the exchange move whose result is missing from the ideal.
class not_stable_error : public std::runtime_error {
public:
    explicit not_stable_error(const std::string& what) : std::runtime_error(what) {}
};

// A prescribed corner sequence / corner value vector admits no ideal.
// corner() is the 1-based index of the corner where the construction stops.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(const std::string& what, int corner)
        : std::runtime_error(what), corner_(corner) {}

    int corner() const noexcept { return corner_; }

private:
    int corner_;
};

} // namespace sqbetti
