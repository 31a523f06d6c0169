#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "sqbetti/construct.hpp"

namespace sqbetti {

/// Parse one monomial: "x3*x4*x7" (the '*' may be omitted), "{3,4,7}", or
/// "1".  When no ambient is given it is inferred as the largest index.
Monomial parse_monomial(std::string_view text, std::optional<int> ambient = std::nullopt);

/// Parse an ideal from the shared text format: monomials separated by commas
/// or newlines, '#' comments, and an optional "n=<count>" header.  Without a
/// header the ambient is the largest index used.  The generators are
/// minimalized.
MonomialIdeal parse_ideal(std::string_view text);

/// Inverse of parse_ideal: "n=<count>" header plus one generator per line.
std::string emit_ideal(const MonomialIdeal& ideal);

/// ASCII Betti diagram: header row of column indices, rows labelled by j-i,
/// '-' wherever beta_{i,j} = 0.  Rows between the first and last nonzero row
/// are kept even when entirely zero.
std::string render_betti(const BettiTable& table);

nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json corner_report_to_json(const CornerReport& report);
nlohmann::json feasibility_to_json(const FeasibilityReport& report);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

/// {"n": 11, "corners": [[8,3],[4,5]], "values": [7,5]}
CornerSpec corner_spec_from_json(const nlohmann::json& json);

/// CLI driver; exit status 0 = success, 1 = infeasible spec, 2 = usage or
/// input errors.  Diagnostics go to err, machine output to out.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace sqbetti
