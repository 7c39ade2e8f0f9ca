#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lincbo/context.hpp"
#include "lincbo/context_io.hpp"

namespace lincbo {

enum class ColumnKind { numeric, categorical };

struct ColumnDesc {
    std::string name;
    ColumnKind kind = ColumnKind::categorical;
};

/// Rectangular many-valued table; cells are raw strings, "?" marks a missing
/// value.
struct DataTable {
    std::vector<ColumnDesc> columns;
    std::vector<std::vector<std::string>> rows;

    static bool is_missing(const std::string& cell) { return cell == "?"; }
};

enum class ScalingMethod { nom, ord, inter };

struct ScalingSpec {
    ScalingMethod method = ScalingMethod::nom;
    int k = 2;  // bins per numeric feature, k >= 2
    bool drop_missing_rows = false;
};

/// Result of a scaling run: the binarized context, per-feature cutpoints for
/// reproducibility, and warnings (constant columns, dropped rows).
struct ScaleResult {
    FormalContext context;
    std::vector<std::pair<std::string, std::vector<double>>> cutpoints;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::optional<double> parse_numeric(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

inline std::string format_number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace detail

/// RFC-4180-style CSV reader: quoted fields may contain commas, doubled
/// quotes and newlines. Column kinds may be declared; otherwise a column is
/// numeric when every non-missing cell parses as a finite real.
inline DataTable read_csv(std::string_view text, bool header = true, std::vector<ColumnKind> kinds = {}) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    auto end_field = [&]() {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&]() {
        end_field();
        if (record.size() > 1 || !record[0].empty()) records.push_back(std::move(record));
        record.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_record();
        } else {
            field += c;
            field_started = true;
        }
    }
    if (in_quotes) throw parse_error("csv: unterminated quoted field");
    if (!field.empty() || !record.empty()) end_record();
    if (records.empty()) throw parse_error("csv: empty input");

    std::size_t width = records[0].size();
    for (std::size_t r = 0; r < records.size(); ++r)
        if (records[r].size() != width)
            throw parse_error("csv: ragged row " + std::to_string(r + 1) + " (" +
                              std::to_string(records[r].size()) + " fields, expected " + std::to_string(width) + ")");

    DataTable table;
    std::size_t first_data = 0;
    if (header) {
        for (const auto& name : records[0]) table.columns.push_back(ColumnDesc{name, ColumnKind::categorical});
        first_data = 1;
    } else {
        for (std::size_t c = 0; c < width; ++c)
            table.columns.push_back(ColumnDesc{"c" + std::to_string(c + 1), ColumnKind::categorical});
    }
    table.rows.assign(records.begin() + static_cast<std::ptrdiff_t>(first_data), records.end());

    if (!kinds.empty()) {
        if (kinds.size() != width) throw parse_error("csv: declared kinds length mismatch");
        for (std::size_t c = 0; c < width; ++c) {
            table.columns[c].kind = kinds[c];
            if (kinds[c] == ColumnKind::numeric)
                for (const auto& row : table.rows)
                    if (!DataTable::is_missing(row[c]) && !detail::parse_numeric(row[c]))
                        throw parse_error("csv: non-numeric cell '" + row[c] + "' in declared-numeric column " +
                                          table.columns[c].name);
        }
    } else {
        for (std::size_t c = 0; c < width; ++c) {
            bool numeric = !table.rows.empty();
            bool any_value = false;
            for (const auto& row : table.rows) {
                if (DataTable::is_missing(row[c])) continue;
                any_value = true;
                if (!detail::parse_numeric(row[c])) {
                    numeric = false;
                    break;
                }
            }
            table.columns[c].kind = (numeric && any_value) ? ColumnKind::numeric : ColumnKind::categorical;
        }
    }
    return table;
}

/// Binarizes a many-valued table. Numeric features get k-1 equidistant
/// cutpoints over the observed range; nominal scaling emits k interval bins
/// (last bin closed), ordinal k-1 ">=" thresholds, interordinal k-1 "<="
/// plus k-1 ">=" thresholds. Categorical features get one attribute per
/// distinct value, in first-appearance order. Missing cells contribute no
/// attribute unless rows with them are dropped entirely.
inline ScaleResult scale(const DataTable& table, const ScalingSpec& spec) {
    if (spec.k < 2) throw std::invalid_argument("scale: k must be >= 2");
    if (table.rows.empty()) throw std::invalid_argument("scale: empty table");
    ScaleResult result;

    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        bool missing = false;
        for (const auto& cell : table.rows[r]) missing = missing || DataTable::is_missing(cell);
        if (!missing || !spec.drop_missing_rows) keep.push_back(r);
    }
    if (keep.size() != table.rows.size())
        result.warnings.push_back("dropped " + std::to_string(table.rows.size() - keep.size()) +
                                  " rows containing a missing value");
    if (keep.empty()) throw std::invalid_argument("scale: all rows dropped");

    struct Attr {
        std::string name;
        std::vector<bool> hits;
    };
    std::vector<Attr> attrs;
    auto new_attr = [&](std::string name) -> std::vector<bool>& {
        attrs.push_back(Attr{std::move(name), std::vector<bool>(keep.size(), false)});
        return attrs.back().hits;
    };

    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const ColumnDesc& col = table.columns[c];
        if (col.kind == ColumnKind::numeric) {
            double lo = 0.0, hi = 0.0;
            bool seen = false;
            std::vector<std::optional<double>> values(keep.size());
            for (std::size_t r = 0; r < keep.size(); ++r) {
                const std::string& cell = table.rows[keep[r]][c];
                if (DataTable::is_missing(cell)) continue;
                values[r] = detail::parse_numeric(cell);
                if (!values[r]) throw parse_error("scale: non-numeric cell '" + cell + "' in column " + col.name);
                lo = seen ? std::min(lo, *values[r]) : *values[r];
                hi = seen ? std::max(hi, *values[r]) : *values[r];
                seen = true;
            }
            std::vector<double> cuts;
            if (seen && lo < hi)
                for (int j = 1; j < spec.k; ++j) cuts.push_back(lo + j * (hi - lo) / spec.k);
            result.cutpoints.emplace_back(col.name, cuts);
            if (cuts.empty()) {
                result.warnings.push_back("constant numeric column " + col.name +
                                          (spec.method == ScalingMethod::nom ? ": single bin" : ": no attributes"));
                if (spec.method == ScalingMethod::nom) {
                    auto& hits = new_attr(col.name + "=bin1");
                    for (std::size_t r = 0; r < keep.size(); ++r) hits[r] = values[r].has_value();
                }
                continue;
            }
            if (spec.method == ScalingMethod::nom) {
                for (int bin = 0; bin < spec.k; ++bin) {
                    auto& hits = new_attr(col.name + "=bin" + std::to_string(bin + 1));
                    double lower = bin == 0 ? lo : cuts[static_cast<std::size_t>(bin - 1)];
                    double upper = bin == spec.k - 1 ? hi : cuts[static_cast<std::size_t>(bin)];
                    for (std::size_t r = 0; r < keep.size(); ++r) {
                        if (!values[r]) continue;
                        double v = *values[r];
                        hits[r] = bin == spec.k - 1 ? (v >= lower && v <= upper) : (v >= lower && v < upper);
                    }
                }
            } else {
                if (spec.method == ScalingMethod::inter) {
                    for (double cut : cuts) {
                        auto& hits = new_attr(col.name + "<=" + detail::format_number(cut));
                        for (std::size_t r = 0; r < keep.size(); ++r) hits[r] = values[r] && *values[r] <= cut;
                    }
                }
                for (double cut : cuts) {
                    auto& hits = new_attr(col.name + ">=" + detail::format_number(cut));
                    for (std::size_t r = 0; r < keep.size(); ++r) hits[r] = values[r] && *values[r] >= cut;
                }
            }
        } else {
            std::vector<std::string> categories;
            for (std::size_t r = 0; r < keep.size(); ++r) {
                const std::string& cell = table.rows[keep[r]][c];
                if (DataTable::is_missing(cell)) continue;
                bool known = false;
                for (const auto& cat : categories) known = known || cat == cell;
                if (!known) categories.push_back(cell);
            }
            for (const auto& cat : categories) {
                auto& hits = new_attr(col.name + "=" + cat);
                for (std::size_t r = 0; r < keep.size(); ++r) hits[r] = table.rows[keep[r]][c] == cat;
            }
        }
    }

    int n_objects = static_cast<int>(keep.size());
    int n_attributes = static_cast<int>(attrs.size());
    std::vector<AttributeSet> rows(static_cast<std::size_t>(n_objects), AttributeSet(n_attributes));
    std::vector<std::string> attribute_names;
    attribute_names.reserve(attrs.size());
    for (int y = 0; y < n_attributes; ++y) {
        attribute_names.push_back(attrs[static_cast<std::size_t>(y)].name);
        for (int x = 0; x < n_objects; ++x)
            if (attrs[static_cast<std::size_t>(y)].hits[static_cast<std::size_t>(x)])
                rows[static_cast<std::size_t>(x)].add(y);
    }
    std::vector<std::string> object_names;
    object_names.reserve(keep.size());
    for (std::size_t r : keep) object_names.push_back(std::to_string(r + 1));
    result.context = FormalContext(n_objects, n_attributes, std::move(rows), std::move(object_names),
                                   std::move(attribute_names));
    return result;
}

/// Drops every attribute whose extent is the whole object set; names of the
/// remaining attributes are preserved.
inline FormalContext remove_full_columns(const FormalContext& ctx) {
    std::vector<int> keep;
    for (int y = 0; y < ctx.n_attributes(); ++y)
        if (ctx.column(y).count() != ctx.n_objects() || ctx.n_objects() == 0) keep.push_back(y);
    if (static_cast<int>(keep.size()) == ctx.n_attributes()) return ctx;

    std::vector<AttributeSet> rows(static_cast<std::size_t>(ctx.n_objects()),
                                   AttributeSet(static_cast<int>(keep.size())));
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (std::size_t new_y = 0; new_y < keep.size(); ++new_y) {
        names.push_back(ctx.attribute_name(keep[new_y]));
        ctx.column(keep[new_y]).for_each([&](int x) { rows[static_cast<std::size_t>(x)].add(static_cast<int>(new_y)); });
    }
    return FormalContext(ctx.n_objects(), static_cast<int>(keep.size()), std::move(rows), ctx.object_names(),
                         std::move(names), ctx.name());
}

}  // namespace lincbo
