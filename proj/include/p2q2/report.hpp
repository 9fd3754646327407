#pragma once

// Serialization of AutReports and the catalog listings.  JSON keys are kept
// in sorted order and every number is an integer, so dumps are canonical.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "p2q2/catalog.hpp"
#include "p2q2/predicted.hpp"
#include "p2q2/verify.hpp"

namespace p2q2 {

inline nlohmann::json to_json(const AutReport& r) {
    using nlohmann::json;
    json j;
    j["spec"] = r.spec.to_string();
    j["type"] = r.spec.type_id;
    j["p"] = r.spec.p;
    j["q"] = r.spec.q;
    j["n"] = r.spec.params.n_exp ? json(*r.spec.params.n_exp) : json(nullptr);
    j["group_order"] = r.group_order;
    j["predicted"] = {{"expr", r.predicted_expr.to_string()}, {"order", r.predicted_order}};
    j["brute"] = r.brute ? json{{"order", r.brute->order}, {"millis", r.brute->millis}, {"nodes", r.brute->nodes}} : json(nullptr);
    if (r.constructed) {
        const auto& c = *r.constructed;
        j["constructed"] = {{"q_order", c.q_order},
                            {"r_order", c.r_order},
                            {"qr_order", c.qr_order},
                            {"main_theorem_ok", c.main_theorem_ok},
                            {"set_equal", c.set_equal ? json(*c.set_equal) : json(nullptr)}};
    } else {
        j["constructed"] = nullptr;
    }
    if (r.fingerprints) {
        json hist = json::array();
        for (auto [o, c] : r.fingerprints->order_histogram) hist.push_back({o, c});
        j["fingerprints"] = {{"order_histogram", hist},
                             {"center_order", r.fingerprints->center_order},
                             {"abelian_invariants", r.fingerprints->abelian_invariants}};
    } else {
        j["fingerprints"] = nullptr;
    }
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    return j;
}

inline std::string reports_to_json(const std::vector<AutReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

namespace detail {
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
    else return std::to_string(*v);
}

inline std::string md_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}
} // namespace detail

inline constexpr const char* kCsvHeader =
    "spec,type,p,q,n,group_order,predicted_expr,predicted_order,brute_order,brute_millis,brute_nodes,"
    "q_order,r_order,qr_order,main_theorem_ok,set_equal,verdict,reason";

inline std::string reports_to_csv(const std::vector<AutReport>& reports) {
    using detail::csv_field;
    using detail::opt_str;
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& r : reports) {
        std::optional<std::uint64_t> bo, bm, bn, qo, ro, qro;
        std::optional<bool> mt, se;
        if (r.brute) bo = r.brute->order, bm = r.brute->millis, bn = r.brute->nodes;
        if (r.constructed) {
            qo = r.constructed->q_order, ro = r.constructed->r_order, qro = r.constructed->qr_order;
            mt = r.constructed->main_theorem_ok;
            se = r.constructed->set_equal;
        }
        out << csv_field(r.spec.to_string()) << ',' << r.spec.type_id << ',' << r.spec.p << ',' << r.spec.q << ','
            << opt_str(r.spec.params.n_exp) << ',' << r.group_order << ',' << csv_field(r.predicted_expr.to_string()) << ','
            << r.predicted_order << ',' << opt_str(bo) << ',' << opt_str(bm) << ',' << opt_str(bn) << ',' << opt_str(qo) << ','
            << opt_str(ro) << ',' << opt_str(qro) << ',' << opt_str(mt) << ',' << opt_str(se) << ',' << to_string(r.verdict)
            << ',' << csv_field(r.reason) << "\n";
    }
    return out.str();
}

inline std::string reports_to_markdown(const std::vector<AutReport>& reports) {
    using detail::md_cell;
    using detail::opt_str;
    std::ostringstream out;
    out << "| Spec | \\|G\\| | Predicted Aut(G) | Predicted | Brute | \\|Q\\| | \\|R\\| | \\|QR\\| | Verdict |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        std::optional<std::uint64_t> bo, qo, ro, qro;
        if (r.brute) bo = r.brute->order;
        if (r.constructed) qo = r.constructed->q_order, ro = r.constructed->r_order, qro = r.constructed->qr_order;
        std::string verdict = to_string(r.verdict);
        if (!r.reason.empty()) verdict += " (" + r.reason + ")";
        out << "| " << r.spec.to_string() << " | " << r.group_order << " | " << md_cell(r.predicted_expr.to_string()) << " | "
            << r.predicted_order << " | " << opt_str(bo) << " | " << opt_str(qo) << " | " << opt_str(ro) << " | " << opt_str(qro)
            << " | " << md_cell(verdict) << " |\n";
    }
    return out.str();
}

/// One row of a reproduced Aut(G) table.
struct TableRow {
    int type_id = 0;
    std::string group;
    std::string structure;            ///< with p, q substituted; empty when not admissible
    std::optional<std::uint64_t> order;
    std::string note;                 ///< "n/a (...)" when not admissible
};

/// Kind 1: the fourteen groups with pq = 6.  Kind 2: types 15-36 at the given primes.
inline std::vector<TableRow> table_rows(int kind, std::uint64_t p, std::uint64_t q) {
    if (kind != 1 && kind != 2) throw std::invalid_argument("table kind must be 1 or 2");
    std::vector<TableRow> rows;
    const int first = kind == 1 ? 1 : 15, last = kind == 1 ? 14 : kNumTypes;
    if (kind == 1) p = 3, q = 2;
    for (int t = first; t <= last; ++t) {
        TableRow row;
        row.type_id = t;
        row.group = type_info(t).description;
        const auto adm = admissible(t, p, q);
        if (!adm) {
            row.note = "n/a (" + adm.reason + ")";
        } else {
            const auto expr = predicted(make_spec(t, p, q));
            row.structure = expr.to_string();
            row.order = expr.order();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"type", r.type_id},
                       {"group", r.group},
                       {"structure", r.structure.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.structure)},
                       {"order", r.order ? nlohmann::json(*r.order) : nlohmann::json(nullptr)},
                       {"note", r.note}});
    }
    return arr;
}

inline std::string table_to_text(const std::vector<TableRow>& rows, bool markdown) {
    std::ostringstream out;
    if (markdown) {
        out << "| Type | Group | Structure of Aut(G) | Order |\n|---|---|---|---|\n";
    } else {
        out << "Type  Group  |  Structure of Aut(G)  |  Order\n";
    }
    for (const auto& r : rows) {
        const std::string structure = r.structure.empty() ? r.note : r.structure;
        const std::string order = r.order ? std::to_string(*r.order) : "n/a";
        if (markdown) {
            out << "| " << r.type_id << " | " << detail::md_cell(r.group) << " | " << detail::md_cell(structure) << " | " << order
                << " |\n";
        } else {
            out << r.type_id << "  " << r.group << "  |  " << structure << "  |  " << order << "\n";
        }
    }
    return out.str();
}

inline std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "type,group,structure,order,note\n";
    for (const auto& r : rows) {
        out << r.type_id << ',' << detail::csv_field(r.group) << ',' << detail::csv_field(r.structure) << ','
            << detail::opt_str(r.order) << ',' << detail::csv_field(r.note) << "\n";
    }
    return out.str();
}

} // namespace p2q2
