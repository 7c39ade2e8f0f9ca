#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lincbo/context_io.hpp"
#include "lincbo/dgbasis.hpp"
#include "lincbo/implications.hpp"

namespace lincbo {

/// Text form of one implication: premise names, "->", conclusion names,
/// attributes in index order. With `reduced_rhs` the right side is printed
/// without the premise attributes.
inline std::string implication_to_text(const Implication& imp, const std::vector<std::string>& attribute_names,
                                       bool reduced_rhs = false) {
    std::ostringstream out;
    bool first = true;
    imp.premise.for_each([&](int a) {
        if (!first) out << ' ';
        out << attribute_names[static_cast<std::size_t>(a)];
        first = false;
    });
    if (!first) out << ' ';
    out << "->";
    AttributeSet rhs = reduced_rhs ? imp.conclusion - imp.premise : imp.conclusion;
    rhs.for_each([&](int a) { out << ' ' << attribute_names[static_cast<std::size_t>(a)]; });
    return out.str();
}

/// Parses `a1 a2 -> a3 a4` against a context's attribute names. The premise
/// may be empty (`-> a3`).
inline Implication implication_from_text(std::string_view line, const FormalContext& ctx) {
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw parse_error("implication: missing '->'");
    auto resolve = [&](std::string_view part, AttributeSet& set) {
        std::size_t i = 0;
        while (i < part.size()) {
            while (i < part.size() && (part[i] == ' ' || part[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < part.size() && part[j] != ' ' && part[j] != '\t') ++j;
            if (j > i) {
                std::string token(part.substr(i, j - i));
                int found = -1;
                for (int a = 0; a < ctx.n_attributes(); ++a)
                    if (ctx.attribute_name(a) == token) {
                        found = a;
                        break;
                    }
                if (found < 0) throw parse_error("implication: unknown attribute '" + token + "'");
                set.add(found);
            }
            i = j;
        }
    };
    AttributeSet premise(ctx.n_attributes());
    AttributeSet conclusion(ctx.n_attributes());
    resolve(line.substr(0, arrow), premise);
    resolve(line.substr(arrow + 2), conclusion);
    conclusion |= premise;
    return Implication(std::move(premise), std::move(conclusion));
}

/// JSON form uses 1-based attribute ids, matching the display convention.
inline nlohmann::json implication_to_json(const Implication& imp) {
    nlohmann::json j;
    j["premise"] = nlohmann::json::array();
    j["conclusion"] = nlohmann::json::array();
    imp.premise.for_each([&](int a) { j["premise"].push_back(a + 1); });
    imp.conclusion.for_each([&](int a) { j["conclusion"].push_back(a + 1); });
    return j;
}

inline Implication implication_from_json(const nlohmann::json& j, int n_attributes) {
    AttributeSet premise(n_attributes);
    AttributeSet conclusion(n_attributes);
    for (const auto& v : j.at("premise")) {
        int a = v.get<int>();
        if (a < 1 || a > n_attributes) throw parse_error("implication: attribute id out of range");
        premise.add(a - 1);
    }
    for (const auto& v : j.at("conclusion")) {
        int a = v.get<int>();
        if (a < 1 || a > n_attributes) throw parse_error("implication: attribute id out of range");
        conclusion.add(a - 1);
    }
    conclusion |= premise;
    return Implication(std::move(premise), std::move(conclusion));
}

inline nlohmann::json basis_result_to_json(const BasisResult& res) {
    nlohmann::json j;
    j["algorithm"] = std::string(to_string(res.algorithm));
    j["intents"] = res.intent_count;
    j["pseudo_intents"] = res.pseudo_intent_count;
    j["closure_calls"] = res.closure_calls;
    j["ms"] = res.wall_ms;
    return j;
}

/// Reads a theory from either the text form (one implication per line,
/// blank lines and '#' comments skipped) or a JSON array of implications.
inline Theory read_theory(std::string_view text, const FormalContext& ctx, bool json) {
    Theory theory(ctx.n_attributes());
    if (json) {
        auto doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw parse_error("basis: invalid JSON");
        const nlohmann::json& arr = doc.is_array() ? doc : doc.at("implications");
        for (const auto& item : arr) theory.add(implication_from_json(item, ctx.n_attributes()));
    } else {
        for (const auto& line : detail::split_lines(text)) {
            std::string_view sv = line;
            while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
            if (sv.empty() || sv.front() == '#') continue;
            theory.add(implication_from_text(sv, ctx));
        }
    }
    return theory;
}

}  // namespace lincbo
