// p2q2: list the 36 group types, build groups, reproduce the Aut(G) tables
// and verify them against the brute-force oracle.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "p2q2/p2q2.hpp"

namespace {

using namespace p2q2;

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Accepts plain integers and forms like "1e8".
std::uint64_t parse_count(const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size() || v < 1 || v > 1e18) throw UsageError("expected a positive count, got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

std::pair<int, int> parse_type_range(const std::string& text) {
    const auto dash = text.find('-');
    try {
        const int lo = std::stoi(text.substr(0, dash));
        const int hi = dash == std::string::npos ? lo : std::stoi(text.substr(dash + 1));
        if (lo < 1 || hi > kNumTypes || lo > hi) throw UsageError("type range must lie within 1-36");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("malformed type range '" + text + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out_path);
    f << text;
}

std::string render_list(const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (int t = 1; t <= kNumTypes; ++t) {
            const auto& info = type_info(t);
            arr.push_back({{"type", t}, {"group", info.description}, {"condition", info.condition}, {"k_generators", info.k_generators}});
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == "csv") out << "type,group,condition\n";
    if (format == "md") out << "| Type | Group | Condition |\n|---|---|---|\n";
    for (int t = 1; t <= kNumTypes; ++t) {
        const auto& info = type_info(t);
        if (format == "csv") {
            out << t << ',' << detail::csv_field(info.description) << ',' << detail::csv_field(info.condition) << "\n";
        } else if (format == "md") {
            out << "| " << t << " | " << detail::md_cell(info.description) << " | " << detail::md_cell(info.condition) << " |\n";
        } else {
            out << t << "\t" << info.description << "\t" << info.condition << "\n";
        }
    }
    return out.str();
}

std::string render_build(const GroupSpec& spec, const std::string& format) {
    const PcGroup G = build(spec);
    const auto& P = G.presentation();
    std::vector<std::string> rels;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const Elem w = G.index_of(P.power(i));
        rels.push_back(P.generators()[i].name + "^" + std::to_string(P.relative_order(i)) + " = " + G.format(w));
    }
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            const Elem w = G.index_of(P.conjugate(i, j));
            if (w == G.generator(j)) continue;
            rels.push_back(P.generators()[j].name + "^" + P.generators()[i].name + " = " + G.format(w));
        }
    const auto inv = abelian_invariants(G);
    const auto z = center(G).order();
    if (format == "json") {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : P.generators()) gens.push_back({{"name", g.name}, {"relative_order", g.relative_order}});
        nlohmann::json j{{"spec", spec.to_string()}, {"order", G.order()},        {"generators", gens},
                         {"relations", rels},          {"center_order", z},         {"abelian_invariants", inv},
                         {"abelian", is_abelian(G)}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << spec.to_string() << "  (" << type_info(spec.type_id).description << ")\n";
    out << "order: " << G.order() << "\n";
    out << "generators:";
    for (const auto& g : P.generators()) out << " " << g.name << "(" << g.relative_order << ")";
    out << "\nrelations:\n";
    for (const auto& r : rels) out << "  " << r << "\n";
    out << "center order: " << z << "\n";
    out << "abelian invariants:";
    for (auto v : inv) out << " " << v;
    out << "\n";
    return out.str();
}

std::vector<AutReport> run_verify(const std::vector<GroupSpec>& specs, VerifyOptions opts, unsigned threads) {
    std::vector<AutReport> reports(specs.size());
    if (specs.size() <= 1 || threads <= 1) {
        opts.threads = threads;
        for (std::size_t i = 0; i < specs.size(); ++i) reports[i] = verify(specs[i], opts);
        return reports;
    }
    opts.threads = 1;
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) reports[i] = verify(specs[i], opts);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!error) error = std::current_exception();
            next.store(specs.size());
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphism groups of the groups of order p^2 q^2"};
    app.require_subcommand(1);

    std::string format = "md";
    std::string out_path;
    const std::vector<std::string> formats{"json", "csv", "md"};

    auto* list = app.add_subcommand("list", "List the 36 group types");
    list->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    list->add_option("--out", out_path, "Write to this file instead of stdout");

    std::vector<std::string> spec_texts;
    bool sweep = false;
    std::uint64_t pmax = 7, qmax = 3, max_order = 2000;
    std::string budget_text, types_text = "1-36";
    unsigned threads = 1;
    std::optional<std::uint64_t> n_override;
    bool no_oracle = false;
    std::int64_t corrupt = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Verify Aut(G) predictions against the oracle and the construction");
    verify_cmd->add_option("specs", spec_texts, "Specs of the form t<id>:p=<p>,q=<q>[,n=<k>]");
    verify_cmd->add_flag("--sweep", sweep, "Verify every admissible spec within the bounds");
    verify_cmd->add_option("--pmax", pmax, "Largest p in a sweep")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--qmax", qmax, "Largest q in a sweep")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-order", max_order, "Largest |G| in a sweep")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--types", types_text, "Type range in a sweep, e.g. 15-36");
    verify_cmd->add_option("--budget", budget_text, "Oracle node budget, e.g. 1e8 (default: P2Q2_BUDGET or 1e8)");
    verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));
    verify_cmd->add_option("--n", n_override, "Exponent n for types 27 and 28");
    verify_cmd->add_flag("--no-oracle", no_oracle, "Skip the brute-force oracle");
    verify_cmd->add_option("--corrupt-predicted", corrupt, "Test hook: add this to every predicted order")->group("");
    verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    verify_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

    int table_kind = 0;
    std::uint64_t tp = 5, tq = 2;
    auto* table = app.add_subcommand("table", "Print the Aut(G) table: 1 for pq = 6, 2 for types 15-36 at given primes");
    table->add_option("kind", table_kind, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    table->add_option("--p", tp, "p for kind 2");
    table->add_option("--q", tq, "q for kind 2");
    table->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    table->add_option("--out", out_path, "Write to this file instead of stdout");

    std::string build_spec;
    auto* build_cmd = app.add_subcommand("build", "Build one group and print its presentation");
    build_cmd->add_option("spec", build_spec, "Spec t<id>:p=<p>,q=<q>[,n=<k>]")->required();
    build_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    build_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*list) {
            emit(render_list(format), out_path);
            return 0;
        }
        if (*table) {
            const auto rows = table_rows(table_kind, tp, tq);
            if (format == "json") emit(table_to_json(rows).dump(2) + "\n", out_path);
            else if (format == "csv") emit(table_to_csv(rows), out_path);
            else emit(table_to_text(rows, true), out_path);
            return 0;
        }
        if (*build_cmd) {
            emit(render_build(parse_spec(build_spec), format), out_path);
            return 0;
        }

        std::vector<GroupSpec> specs;
        for (const auto& text : spec_texts) {
            GroupSpec s = parse_spec(text);
            if (n_override && !s.params.n_exp.has_value()) s = make_spec(s.type_id, s.p, s.q, n_override);
            specs.push_back(s);
        }
        if (sweep) {
            const auto [lo, hi] = parse_type_range(types_text);
            for (const auto& s : enumerate_admissible(pmax, qmax)) {
                if (s.type_id < lo || s.type_id > hi || s.group_order() > max_order) continue;
                const bool takes_n = s.type_id == 27 || s.type_id == 28;
                specs.push_back(takes_n && n_override ? make_spec(s.type_id, s.p, s.q, n_override) : s);
            }
        }
        if (specs.empty()) throw UsageError("verify needs at least one spec or --sweep");

        VerifyOptions opts;
        if (!budget_text.empty()) opts.budget = parse_count(budget_text);
        opts.run_oracle = !no_oracle;
        opts.predicted_order_offset = corrupt;
        const auto reports = run_verify(specs, opts, threads);

        if (format == "json") emit(reports_to_json(reports), out_path);
        else if (format == "csv") emit(reports_to_csv(reports), out_path);
        else emit(reports_to_markdown(reports), out_path);

        bool ok = true;
        for (const auto& r : reports) ok = ok && (r.verdict == Verdict::Match || r.verdict == Verdict::Skipped);
        return ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
