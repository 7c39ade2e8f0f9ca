#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lincbo/context.hpp"

namespace lincbo {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Splits on '\n', dropping a trailing '\r' per line so CRLF files work.
inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.emplace_back(text.substr(pos));
            break;
        }
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        pos = nl + 1;
    }
    return lines;
}

inline int parse_count(const std::string& line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size() || value < 0)
        throw parse_error(std::string("cxt: bad ") + what + " line: '" + line + "'");
    return value;
}

}  // namespace detail

/// Reads a Burmeister CXT file:
///   B / name / |X| / |Y| / blank / object names / attribute names / rows.
/// Rows are strings over {'X', '.'} of length exactly |Y|.
inline FormalContext read_cxt(std::string_view text) {
    auto lines = detail::split_lines(text);
    std::size_t at = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (at >= lines.size()) throw parse_error(std::string("cxt: unexpected end of file, expected ") + what);
        return lines[at++];
    };
    if (need("header 'B'") != "B") throw parse_error("cxt: first line must be 'B'");
    std::string name = need("context name");
    int n_objects = detail::parse_count(need("object count"), "object count");
    int n_attributes = detail::parse_count(need("attribute count"), "attribute count");
    if (!need("separator line").empty()) throw parse_error("cxt: line 5 must be empty");

    std::vector<std::string> object_names, attribute_names;
    for (int i = 0; i < n_objects; ++i) object_names.push_back(need("object name"));
    for (int i = 0; i < n_attributes; ++i) attribute_names.push_back(need("attribute name"));

    std::vector<AttributeSet> rows;
    rows.reserve(static_cast<std::size_t>(n_objects));
    for (int x = 0; x < n_objects; ++x) {
        const std::string& line = need("incidence row");
        if (static_cast<int>(line.size()) != n_attributes)
            throw parse_error("cxt: incidence row " + std::to_string(x + 1) + " has length " +
                              std::to_string(line.size()) + ", expected " + std::to_string(n_attributes));
        AttributeSet r(n_attributes);
        for (int y = 0; y < n_attributes; ++y) {
            char c = line[static_cast<std::size_t>(y)];
            if (c == 'X')
                r.add(y);
            else if (c != '.')
                throw parse_error(std::string("cxt: invalid incidence character '") + c + "'");
        }
        rows.push_back(std::move(r));
    }
    return FormalContext(n_objects, n_attributes, std::move(rows), std::move(object_names),
                         std::move(attribute_names), std::move(name));
}

inline std::string write_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n" << ctx.name() << "\n" << ctx.n_objects() << "\n" << ctx.n_attributes() << "\n\n";
    for (int x = 0; x < ctx.n_objects(); ++x) out << ctx.object_name(x) << "\n";
    for (int y = 0; y < ctx.n_attributes(); ++y) out << ctx.attribute_name(y) << "\n";
    for (int x = 0; x < ctx.n_objects(); ++x) {
        const AttributeSet& r = ctx.row(x);
        for (int y = 0; y < ctx.n_attributes(); ++y) out << (r.contains(y) ? 'X' : '.');
        out << "\n";
    }
    return out.str();
}

/// Reads FIMI transaction data: one object per line, 1-based attribute
/// indices separated by whitespace. Lines without tokens are skipped; the
/// attribute count is the largest index seen.
inline FormalContext read_fimi(std::string_view text) {
    std::vector<std::vector<int>> items;
    int max_attr = 0;
    for (const auto& line : detail::split_lines(text)) {
        std::vector<int> row;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            int value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc{} || ptr != line.data() + j || value < 1)
                throw parse_error("fimi: bad attribute token '" + line.substr(i, j - i) + "'");
            row.push_back(value);
            if (value > max_attr) max_attr = value;
            i = j;
        }
        if (!row.empty()) items.push_back(std::move(row));
    }
    std::vector<AttributeSet> rows;
    rows.reserve(items.size());
    for (const auto& row : items) {
        AttributeSet r(max_attr);
        for (int v : row) r.add(v - 1);
        rows.push_back(std::move(r));
    }
    return FormalContext(static_cast<int>(items.size()), max_attr, std::move(rows));
}

}  // namespace lincbo
