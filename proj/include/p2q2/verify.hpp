#pragma once

// Cross-checks the tabulated Aut(G) against the brute-force oracle and the
// explicit Q : R construction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "p2q2/automorphism.hpp"
#include "p2q2/catalog.hpp"
#include "p2q2/construction.hpp"
#include "p2q2/group_algorithms.hpp"
#include "p2q2/predicted.hpp"

namespace p2q2 {

enum class Verdict { Match, OrderMismatch, ConstructionIncomplete, Skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::OrderMismatch: return "OrderMismatch";
    case Verdict::ConstructionIncomplete: return "ConstructionIncomplete";
    case Verdict::Skipped: return "Skipped";
    }
    return "?";
}

struct VerifyOptions {
    std::uint64_t budget = default_budget();
    unsigned threads = 1;
    bool run_oracle = true;
    /// Fingerprints are computed only for Aut groups up to this order.
    std::uint64_t fingerprint_limit = 100000;
    /// Added to the predicted order; a test hook for exercising mismatch paths.
    std::int64_t predicted_order_offset = 0;
};

struct BruteSummary {
    std::uint64_t order = 0;
    std::uint64_t millis = 0;
    std::uint64_t nodes = 0;
};

struct ConstructedSummary {
    std::uint64_t q_order = 0;
    std::uint64_t r_order = 0;
    std::uint64_t qr_order = 0;
    bool main_theorem_ok = false;
    std::optional<bool> set_equal;  ///< against the brute set, when both exist
};

struct Fingerprints {
    std::map<std::uint64_t, std::uint64_t> order_histogram;
    std::uint64_t center_order = 0;
    std::vector<std::uint64_t> abelian_invariants;
};

struct AutReport {
    GroupSpec spec;
    std::uint64_t group_order = 0;
    StructureExpr predicted_expr;
    std::uint64_t predicted_order = 0;
    std::optional<BruteSummary> brute;
    std::optional<ConstructedSummary> constructed;
    std::optional<Fingerprints> fingerprints;
    Verdict verdict = Verdict::Skipped;
    std::string reason;  ///< empty for Match

    // In-memory results for callers that inspect the groups themselves.
    std::shared_ptr<const PcGroup> group;
    std::shared_ptr<const AutGroup> brute_group;
    std::shared_ptr<const QRConstruction> construction;
};

inline Fingerprints fingerprints_of(const PcGroup& G, AutGroup A) {
    const AutOps ops{G};
    ensure_generators(G, A);
    Fingerprints fp;
    fp.order_histogram = order_histogram(ops, A.elements);
    fp.center_order = centralizing(ops, A.elements, A.generators).size();
    const auto derived = derived_subgroup(ops, A.generators, [&G](const Automorphism& f) { return inverse(G, f); });
    fp.abelian_invariants = abelian_invariants(ops, A.elements, derived.elements);
    std::sort(fp.abelian_invariants.begin(), fp.abelian_invariants.end());
    return fp;
}

/**
 * Builds G, then compares the predicted order with the oracle order (when
 * the oracle finishes within budget) and with the Q : R construction (types
 * 15-36).  Failures become verdicts rather than exceptions.
 */
inline AutReport verify(const GroupSpec& spec, const VerifyOptions& opts = {}) {
    AutReport rep;
    rep.spec = spec;
    rep.group_order = spec.group_order();
    rep.predicted_expr = predicted(spec);
    rep.predicted_order = static_cast<std::uint64_t>(static_cast<std::int64_t>(rep.predicted_expr.order()) + opts.predicted_order_offset);
    if (rep.group_order > kCayleyCap) {
        rep.verdict = Verdict::Skipped;
        rep.reason = "group order " + std::to_string(rep.group_order) + " exceeds the Cayley cap " + std::to_string(kCayleyCap);
        return rep;
    }
    auto G = std::make_shared<const PcGroup>(build(spec));
    rep.group = G;

    std::string skip_reason;
    if (opts.run_oracle) {
        BruteStats stats;
        try {
            auto A = std::make_shared<AutGroup>(brute_aut(*G, opts.budget, opts.threads, &stats));
            rep.brute = BruteSummary{A->order(), stats.millis, stats.nodes};
            if (A->order() <= opts.fingerprint_limit) rep.fingerprints = fingerprints_of(*G, *A);
            rep.brute_group = std::move(A);
        } catch (const BudgetExceeded& e) {
            skip_reason = e.what();
        }
    } else {
        skip_reason = "oracle disabled";
    }

    std::string construction_error;
    if (spec.type_id >= 15) {
        try {
            auto C = std::make_shared<QRConstruction>(construct_QR(spec, *G));
            ConstructedSummary cs{C->Q.order(), C->R.order(), C->QR.order(), check_main_theorem(*G, C->Q, C->R, C->QR), std::nullopt};
            if (rep.brute_group) cs.set_equal = C->QR.elements == rep.brute_group->elements;
            rep.constructed = cs;
            rep.construction = std::move(C);
        } catch (const ConstructionError& e) {
            construction_error = e.what();
        } catch (const ConstraintUnsatisfiable& e) {
            construction_error = e.what();
        }
    }

    auto set = [&rep](Verdict v, std::string why) {
        rep.verdict = v;
        rep.reason = std::move(why);
    };
    const auto pred = std::to_string(rep.predicted_order);
    if (rep.brute && rep.brute->order != rep.predicted_order) {
        set(Verdict::OrderMismatch, "predicted order " + pred + " but the oracle found " + std::to_string(rep.brute->order));
    } else if (rep.constructed && rep.constructed->qr_order != rep.predicted_order) {
        set(Verdict::OrderMismatch, "predicted order " + pred + " but |QR| = " + std::to_string(rep.constructed->qr_order));
    } else if (!construction_error.empty()) {
        set(Verdict::ConstructionIncomplete, construction_error);
    } else if (rep.constructed && rep.constructed->set_equal == false) {
        set(Verdict::ConstructionIncomplete, "QR has the right order but differs from the oracle set");
    } else if (!rep.brute) {
        set(Verdict::Skipped, skip_reason);
    } else {
        set(Verdict::Match, "");
    }
    return rep;
}

inline AutReport verify(const std::string& spec_text, const VerifyOptions& opts = {}) {
    return verify(parse_spec(spec_text), opts);
}

} // namespace p2q2
