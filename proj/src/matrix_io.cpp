#include <quasicartan/matrix_io.hpp>

#include <quasicartan/errors.hpp>

#include <cctype>
#include <limits>
#include <vector>

namespace quasicartan {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos == line.size()) break;
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        tokens.push_back({line.substr(start, pos - start), start + 1});
    }
    return tokens;
}

bool is_integer_literal(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

BigInt parse_integer(const Token& tok, std::size_t line) {
    if (!is_integer_literal(tok.text)) {
        throw ParseError(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
    }
    std::string_view digits = tok.text;
    if (digits.front() == '+') digits.remove_prefix(1);
    return BigInt(std::string(digits), 10);
}

std::vector<std::string_view> split_lines(std::string_view input) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= input.size()) {
        std::size_t end = input.find('\n', start);
        if (end == std::string_view::npos) end = input.size();
        std::string_view line = input.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::pair<std::size_t, std::size_t> line_column_of(std::string_view input, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < input.size(); ++i) {
        if (input[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

BigInt entry_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()), 10)
                                      : BigInt(std::to_string(v.get<std::int64_t>()), 10);
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (!is_integer_literal(s)) {
            throw ParseError(1, 0, "matrix entry \"" + s + "\" is not a decimal integer");
        }
        return BigInt(s.front() == '+' ? s.substr(1) : s, 10);
    }
    throw ParseError(1, 0, "matrix entry " + v.dump() +
                               " is not an integer (use a decimal string for values beyond 64 bits)");
}

}  // namespace

IntMatrix parse_matrix(std::string_view input) {
    for (char c : input) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_matrix_json(input) : parse_matrix_text(input);
    }
    throw ParseError(1, 0, "empty input");
}

IntMatrix parse_matrix_text(std::string_view input) {
    const auto lines = split_lines(input);

    const auto header = tokenize(lines.front());
    if (header.empty()) throw ParseError(1, 0, "expected the dimension n on the first line");
    if (header.size() > 1) throw ParseError(1, header[1].column, "unexpected token after dimension");
    const BigInt n_big = parse_integer(header[0], 1);
    if (n_big < 0 || n_big > 100000) {
        throw ParseError(1, header[0].column, "dimension must be between 0 and 100000");
    }
    const auto n = static_cast<std::size_t>(n_big.get_ui());

    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line_no = i + 2;
        if (line_no > lines.size() || (line_no == lines.size() && lines.back().empty())) {
            throw ParseError(line_no, 0, "expected " + std::to_string(n) + " matrix rows, found " +
                                             std::to_string(i));
        }
        const auto tokens = tokenize(lines[line_no - 1]);
        if (tokens.size() != n) {
            const std::size_t column = tokens.size() > n ? tokens[n].column : 0;
            throw ParseError(line_no, column, "row " + std::to_string(i + 1) + " has " +
                                                  std::to_string(tokens.size()) + " entries, expected " +
                                                  std::to_string(n) + " (matrix must be square)");
        }
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = parse_integer(tokens[j], line_no);
        }
    }
    for (std::size_t extra = n + 1; extra < lines.size(); ++extra) {
        const auto tokens = tokenize(lines[extra]);
        if (!tokens.empty()) {
            throw ParseError(extra + 1, tokens.front().column, "unexpected content after the last row");
        }
    }
    return a;
}

IntMatrix parse_matrix_json(std::string_view input) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column_of(input, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, column, std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(doc);
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw ParseError(1, 0, "expected an object with keys \"n\" and \"rows\"");
    }
    const auto& n_json = j.at("n");
    if (!n_json.is_number_integer() || n_json.get<std::int64_t>() < 0) {
        throw ParseError(1, 0, "\"n\" must be a non-negative integer");
    }
    const auto n = static_cast<std::size_t>(n_json.get<std::int64_t>());
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError(1, 0, "\"rows\" must be an array of " + std::to_string(n) + " rows");
    }
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw ParseError(1, 0, "row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                                       " entries (matrix must be square)");
        }
        for (std::size_t k = 0; k < n; ++k) {
            a(i, k) = entry_from_json(row[k]);
        }
    }
    return a;
}

std::string to_text(const IntMatrix& a) {
    std::string out = std::to_string(a.size()) + "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j != 0) out += ' ';
            out += a(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const IntMatrix& a) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.size(); ++j) {
            const BigInt& v = a(i, j);
            if (v.fits_slong_p()) {
                row.push_back(static_cast<std::int64_t>(v.get_si()));
            } else {
                row.push_back(v.get_str());
            }
        }
        rows.push_back(std::move(row));
    }
    return {{"n", a.size()}, {"rows", std::move(rows)}};
}

}  // namespace quasicartan
