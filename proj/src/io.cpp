#include "sqbetti/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sqbetti {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_indices(std::string_view text, int line, int column) {
    std::vector<int> indices;
    std::string_view body = trim(text);
    if (body == "1") return indices;
    std::size_t pos = 0;
    bool bracket = false;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw parse_error("unterminated '{' in monomial", line, column);
        bracket = true;
        body = trim(body.substr(1, body.size() - 2));
    }
    while (pos < body.size()) {
        while (pos < body.size() && (std::isspace(static_cast<unsigned char>(body[pos])) ||
                                     body[pos] == '*' || (bracket && body[pos] == ',')))
            ++pos;
        if (pos >= body.size()) break;
        if (!bracket) {
            if (body[pos] != 'x' && body[pos] != 'X')
                throw parse_error(std::string("expected 'x<index>', found '") + body[pos] + "'",
                                  line, column + static_cast<int>(pos));
            ++pos;
        }
        std::size_t start = pos;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
        if (start == pos)
            throw parse_error("expected a variable index", line, column + static_cast<int>(pos));
        indices.push_back(std::stoi(std::string(body.substr(start, pos - start))));
    }
    if (indices.empty())
        throw parse_error("empty monomial", line, column);
    return indices;
}

Monomial monomial_from_indices(const std::vector<int>& indices, int n, int line, int column) {
    if (indices.empty()) return Monomial::one(n);
    std::uint64_t seen = 0;
    for (int i : indices) {
        if (i < 1)
            throw parse_error("variable indices start at 1", line, column);
        if (i > n)
            throw parse_error("variable x" + std::to_string(i) + " exceeds the ambient n=" +
                                  std::to_string(n),
                              line, column);
        std::uint64_t bit = std::uint64_t{1} << (i - 1);
        if (seen & bit)
            throw parse_error("monomial is not squarefree: x" + std::to_string(i) + " repeats",
                              line, column);
        seen |= bit;
    }
    return Monomial(n, seen);
}

struct Token {
    std::string text;
    int line;
    int column;
};

// Shared tokenizer for ideal/monomial-list text: '#' comments, commas or
// newlines between monomials, optional "n=<count>" header.
struct ParsedText {
    std::optional<int> ambient;
    std::vector<Token> tokens;
};

ParsedText tokenize(std::string_view text) {
    ParsedText out;
    int line_no = 0;
    std::size_t start = 0;
    bool monomials_seen = false;
    while (start <= text.size()) {
        std::size_t eol = text.find('\n', start);
        std::string_view line = text.substr(start, eol == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : eol - start);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t cell_start = 0;
        while (cell_start <= line.size()) {
            // Cell separator: the next comma outside a {...} group.
            std::size_t comma = std::string_view::npos;
            int depth = 0;
            for (std::size_t p = cell_start; p < line.size(); ++p) {
                if (line[p] == '{') ++depth;
                if (line[p] == '}' && depth > 0) --depth;
                if (line[p] == ',' && depth == 0) {
                    comma = p;
                    break;
                }
            }
            std::string_view raw = line.substr(
                cell_start, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - cell_start);
            std::string_view cell = trim(raw);
            if (!cell.empty()) {
                int column = static_cast<int>(cell_start + (cell.data() - raw.data())) + 1;
                if (cell.size() > 2 && (cell[0] == 'n' || cell[0] == 'N') &&
                    trim(cell.substr(1)).front() == '=') {
                    std::string_view value = trim(trim(cell.substr(1)).substr(1));
                    int n = 0;
                    try {
                        n = std::stoi(std::string(value));
                    } catch (const std::exception&) {
                        throw parse_error("malformed ambient header '" + std::string(cell) + "'",
                                          line_no, column);
                    }
                    if (out.ambient)
                        throw parse_error("duplicate ambient header", line_no, column);
                    if (monomials_seen)
                        throw parse_error("ambient header must precede the monomials", line_no,
                                          column);
                    out.ambient = n;
                } else {
                    out.tokens.push_back(Token{std::string(cell), line_no, column});
                    monomials_seen = true;
                }
            }
            if (comma == std::string_view::npos) break;
            cell_start = comma + 1;
        }
        if (eol == std::string_view::npos) break;
        start = eol + 1;
    }
    return out;
}

std::vector<Monomial> parse_monomial_list(std::string_view text, std::optional<int>& ambient_out) {
    ParsedText parsed = tokenize(text);
    std::vector<std::vector<int>> index_lists;
    int max_index = 0;
    for (const Token& tok : parsed.tokens) {
        index_lists.push_back(parse_indices(tok.text, tok.line, tok.column));
        for (int i : index_lists.back()) max_index = std::max(max_index, i);
    }
    int n = parsed.ambient.value_or(std::max(max_index, 1));
    std::vector<Monomial> monomials;
    for (std::size_t t = 0; t < index_lists.size(); ++t)
        monomials.push_back(monomial_from_indices(index_lists[t], n, parsed.tokens[t].line,
                                                  parsed.tokens[t].column));
    ambient_out = n;
    return monomials;
}

} // namespace

Monomial parse_monomial(std::string_view text, std::optional<int> ambient) {
    std::vector<int> indices = parse_indices(text, 1, 1);
    int max_index = 0;
    for (int i : indices) max_index = std::max(max_index, i);
    int n = ambient.value_or(std::max(max_index, 1));
    return monomial_from_indices(indices, n, 1, 1);
}

MonomialIdeal parse_ideal(std::string_view text) {
    std::optional<int> ambient;
    std::vector<Monomial> monomials = parse_monomial_list(text, ambient);
    return minimal_generators(ambient.value_or(1), monomials);
}

std::string emit_ideal(const MonomialIdeal& ideal) {
    std::string out = "n=" + std::to_string(ideal.ambient()) + "\n";
    for (const Monomial& g : ideal.generators()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

std::string render_betti(const BettiTable& table) {
    if (table.empty()) return "";
    int pd = table.projective_dimension();
    int row_min = table.regularity();
    int row_max = -1;
    for (const auto& [ij, v] : table.entries()) {
        row_min = std::min(row_min, ij.second - ij.first);
        row_max = std::max(row_max, ij.second - ij.first);
    }
    std::size_t label_width = std::to_string(row_max).size();
    std::size_t cell_width = 1;
    for (int i = 0; i <= pd; ++i)
        cell_width = std::max(cell_width, std::to_string(i).size());
    for (const auto& [ij, v] : table.entries())
        cell_width = std::max(cell_width, v.str().size());

    std::ostringstream os;
    os << std::string(label_width + 2, ' ');
    for (int i = 0; i <= pd; ++i) {
        std::string head = std::to_string(i);
        os << ' ' << std::string(cell_width - head.size(), ' ') << head;
    }
    os << '\n';
    os << std::string(label_width + 2 + static_cast<std::size_t>(pd + 1) * (cell_width + 1), '-')
       << '\n';
    for (int row = row_min; row <= row_max; ++row) {
        std::string label = std::to_string(row);
        os << std::string(label_width - label.size(), ' ') << label << " :";
        for (int i = 0; i <= pd; ++i) {
            const BigInt& v = table.at(i, i + row);
            std::string cell = (v == 0) ? "-" : v.str();
            os << ' ' << std::string(cell_width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
    static const BigInt json_safe = BigInt(1) << 53;
    if (v <= json_safe) return v.convert_to<std::uint64_t>();
    return v.str();
}

} // namespace

nlohmann::json betti_to_json(const BettiTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, v] : table.entries())
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", big_to_json(v)}});
    return {{"projective_dimension", table.projective_dimension()},
            {"regularity", table.regularity()},
            {"entries", entries}};
}

nlohmann::json corner_report_to_json(const CornerReport& report) {
    nlohmann::json corners = nlohmann::json::array();
    nlohmann::json values = nlohmann::json::array();
    for (const Corner& c : report.corners) corners.push_back({c.k, c.ell});
    for (const BigInt& v : report.values) values.push_back(big_to_json(v));
    return {{"corners", corners}, {"values", values}};
}

nlohmann::json feasibility_to_json(const FeasibilityReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CornerBound& b : report.per_corner) {
        nlohmann::json row;
        row["n_i"] = b.upper ? big_to_json(*b.upper) : nlohmann::json();
        row["p_i"] = b.strictly_above ? big_to_json(*b.strictly_above) : nlohmann::json();
        row["admissible"] = b.admissible ? big_to_json(*b.admissible) : nlohmann::json();
        rows.push_back(row);
    }
    nlohmann::json out{{"feasible", report.feasible}, {"per_corner", rows}};
    if (report.failing_corner) out["failing_corner"] = *report.failing_corner;
    if (report.witness) out["witness"] = report.witness->str();
    if (!report.detail.empty()) out["detail"] = report.detail;
    return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(g.str());
    return {{"n", ideal.ambient()}, {"generators", gens}};
}

CornerSpec corner_spec_from_json(const nlohmann::json& json) {
    CornerSpec spec;
    try {
        spec.n = json.at("n").get<int>();
        for (const auto& pair : json.at("corners")) {
            if (!pair.is_array() || pair.size() != 2)
                throw parse_error("each corner must be a [k, l] pair");
            spec.corners.push_back(Corner{pair[0].get<int>(), pair[1].get<int>()});
        }
        for (const auto& v : json.at("values")) {
            if (v.is_number_unsigned() || v.is_number_integer())
                spec.values.push_back(BigInt(v.get<long long>()));
            else if (v.is_string())
                spec.values.push_back(BigInt(v.get<std::string>()));
            else
                throw parse_error("corner values must be integers");
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed corner spec: ") + e.what());
    }
    return spec;
}

} // namespace sqbetti
