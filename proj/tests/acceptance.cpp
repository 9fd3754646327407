// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "p2q2/p2q2.hpp"

using namespace p2q2;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

bool report(int id, const std::string& title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    const std::string d = o.detail.str();
    if (!d.empty()) std::cout << " [" << d << "]";
    std::cout << std::endl;
    return o.pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned worker_threads() { return std::max(1U, std::min(4U, std::thread::hardware_concurrency())); }

/// Criterion 1: brute |Aut(G)| for the 14 groups of order 36.
Outcome order_36_suite() {
    const std::uint64_t listed[14] = {12, 36, 288, 96, 24, 72, 108, 144, 108, 36, 864, 144, 72, 864};
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> wrong;
    for (int t = 1; t <= 14; ++t) {
        const auto G = build(make_spec(t, 3, 2));
        const auto n = brute_aut(G, kDefaultBudget, 1).order();
        if (n != listed[t - 1]) wrong.push_back("t" + std::to_string(t) + " brute " + std::to_string(n) + " vs " + std::to_string(listed[t - 1]));
    }
    const double secs = seconds_since(t0);
    for (const auto& w : wrong) o.detail << w << "; ";
    o.detail << secs << " s single-threaded";
    o.pass = wrong.empty() && secs < 60.0;
    return o;
}

struct SweepResult {
    std::vector<AutReport> reports;
    double seconds = 0;
};

SweepResult run_sweep() {
    SweepResult out;
    std::vector<GroupSpec> specs;
    for (const auto& s : enumerate_admissible(7, 3))
        if (s.type_id >= 15 && s.group_order() <= 2000) specs.push_back(s);
    VerifyOptions opts;
    opts.threads = worker_threads();
    opts.fingerprint_limit = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& s : specs) out.reports.push_back(verify(s, opts));
    out.seconds = seconds_since(t0);
    return out;
}

/// Criterion 2: every sweep spec is a Match and the named cases are present.
Outcome semidirect_suite(const SweepResult& sweep) {
    Outcome o;
    const std::map<std::string, std::uint64_t> required{{"t19:p=5,q=2", 1000}, {"t23:p=5,q=2", 160}, {"t34:p=3,q=2", 24},
                                                        {"t30:p=5,q=3", 3600}, {"t31:p=3,q=2", 0},   {"t36:p=5,q=3", 7200}};
    std::set<int> matched_types;
    std::size_t matched = 0, skipped = 0;
    std::set<std::string> seen;
    for (const auto& r : sweep.reports) {
        seen.insert(r.spec.to_string());
        if (r.verdict == Verdict::Match) {
            ++matched;
            matched_types.insert(r.spec.type_id);
        } else if (r.verdict == Verdict::Skipped && r.brute == std::nullopt && r.reason.find("budget") != std::string::npos) {
            ++skipped;
        } else {
            o.pass = false;
            o.detail << r.spec.to_string() << " " << to_string(r.verdict) << " (" << r.reason << "); ";
        }
        const auto it = required.find(r.spec.to_string());
        if (it != required.end() && it->second != 0 && (!r.brute || r.brute->order != it->second)) {
            o.pass = false;
            o.detail << r.spec.to_string() << " expected " << it->second << "; ";
        }
    }
    for (const auto& [spec, order] : required)
        if (!seen.count(spec)) o.pass = false, o.detail << spec << " missing from sweep; ";
    if (matched_types.size() < 12) o.pass = false;
    if (sweep.seconds >= 600) o.pass = false;
    o.detail << sweep.reports.size() << " specs, " << matched << " Match, " << skipped << " Skipped, " << matched_types.size()
             << " distinct types, " << sweep.seconds << " s";
    return o;
}

/// Criterion 3: Q normal in QR, Q and R meeting trivially, |QR| = |Q| |R|.
Outcome main_theorem(const SweepResult& sweep) {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& r : sweep.reports) {
        if (r.verdict != Verdict::Match) continue;
        const auto& C = *r.construction;
        ++checked;
        if (!check_main_theorem(*r.group, C.Q, C.R, C.QR)) o.pass = false, o.detail << r.spec.to_string() << " fails; ";
    }
    o.detail << checked << " cases";
    return o;
}

/// Criterion 4: sampled automorphisms pass the matrix test; relation-breaking tuples fail it by name.
Outcome matrix_conditions(const SweepResult& sweep) {
    Outcome o;
    std::mt19937_64 rng(0x5eed);
    std::size_t accepted = 0, rejected = 0, vacuous = 0;
    for (const auto& r : sweep.reports) {
        if (r.verdict != Verdict::Match) continue;
        const PcGroup& G = *r.group;
        const SemidirectSplit S(G, type_info(r.spec.type_id).k_generators);
        const auto& A = r.brute_group->elements;
        std::uniform_int_distribution<std::size_t> pick_aut(0, A.size() - 1);
        for (int i = 0; i < 1000; ++i) {
            const auto v = verify_aut_matrix(S, matrix_of(S, A[pick_aut(rng)]));
            if (!v) {
                o.pass = false;
                o.detail << r.spec.to_string() << " automorphism rejected by " << v.violated << "; ";
                break;
            }
            ++accepted;
        }

        std::vector<std::vector<Elem>> by_order(G.num_generators());
        std::uint64_t total = 1;
        for (std::size_t g = 0; g < G.num_generators(); ++g) {
            for (Elem x = 0; x < G.order(); ++x)
                if (G.element_order(x) == G.element_order(G.generator(g))) by_order[g].push_back(x);
            total *= by_order[g].size();
        }
        // Relation-breaking tuples: all of them when the tuple space is small, else 1000 by rejection.
        std::vector<std::vector<Elem>> breaking;
        auto tuple_at = [&](std::uint64_t code) {
            std::vector<Elem> t;
            for (const auto& c : by_order) t.push_back(c[code % c.size()]), code /= c.size();
            return t;
        };
        if (total <= 2000000) {
            for (std::uint64_t code = 0; code < total; ++code) {
                auto t = tuple_at(code);
                if (!first_violated_relation(G, make_automorphism(G, t).images).empty()) breaking.push_back(std::move(t));
            }
            std::shuffle(breaking.begin(), breaking.end(), rng);
            if (breaking.size() > 1000) breaking.resize(1000);
        } else {
            std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
            for (int attempt = 0; breaking.size() < 1000 && attempt < 10000000; ++attempt) {
                auto t = tuple_at(pick(rng));
                if (!first_violated_relation(G, make_automorphism(G, t).images).empty()) breaking.push_back(std::move(t));
            }
            if (breaking.size() < 1000) o.pass = false, o.detail << r.spec.to_string() << " sampling found too few relation-breaking tuples; ";
        }
        if (breaking.empty()) ++vacuous;
        for (const auto& t : breaking) {
            const auto v = verify_aut_matrix(S, matrix_of(S, make_automorphism(G, t)));
            if (v || v.violated.empty()) {
                o.pass = false;
                o.detail << r.spec.to_string() << " accepted a relation-breaking tuple; ";
                break;
            }
            ++rejected;
        }
    }
    o.detail << accepted << " automorphisms accepted, " << rejected << " non-automorphisms rejected, " << vacuous
             << " cases where every order-preserving tuple satisfies the relations";
    return o;
}

/// Criterion 5: every brute automorphism of types 19-36 maps the Sylow p-subgroup H onto itself.
Outcome gamma_trivial(const SweepResult& sweep) {
    Outcome o;
    std::size_t maps = 0;
    for (const auto& r : sweep.reports) {
        if (r.verdict != Verdict::Match || r.spec.type_id < 19) continue;
        const PcGroup& G = *r.group;
        const SemidirectSplit S(G, type_info(r.spec.type_id).k_generators);
        if (S.h_order() != r.spec.p * r.spec.p) {
            o.pass = false;
            o.detail << r.spec.to_string() << " H is not the Sylow p-subgroup; ";
            continue;
        }
        for (const auto& f : r.brute_group->elements) {
            const auto img = full_map(G, f.images);
            ++maps;
            for (Elem h = 0; h < S.h_order(); ++h)
                if (!S.in_h(img[h])) {
                    o.pass = false;
                    o.detail << r.spec.to_string() << " moves H; ";
                    break;
                }
        }
    }
    o.detail << maps << " automorphisms checked";
    return o;
}

/// Criterion 6: binomial (M, N) sums against gf_pow and a naive power, exhaustive in s.
Outcome gf_crosscheck() {
    Outcome o;
    for (std::uint64_t p : {3, 5, 7}) {
        std::uint64_t D = 0;
        for (std::uint64_t a = 2; a < p && D == 0; ++a) {
            bool square = false;
            for (std::uint64_t x = 1; x < p; ++x) square = square || x * x % p == a;
            if (!square) D = a;
        }
        const GfParams prm = GfParams::canonical(p);
        if (prm.D != D) o.pass = false, o.detail << "p=" << p << " D mismatch; ";
        const GfElement sigma = primitive_root(prm);
        const oracle::Fp2 s0{sigma.a, sigma.b};
        for (std::uint64_t e = 1; e < p * p - 1; ++e) {
            const auto v = oracle::fp2_pow(s0, e, D, p);
            if (v.a == 1 && v.b == 0) o.pass = false, o.detail << "p=" << p << " sigma not primitive; ";
        }
        for (std::uint64_t s = 0; s <= p * p - 1; ++s) {
            const auto want = oracle::fp2_pow(s0, s, D, p);
            const auto got = mn_sums(sigma, s);
            if (!mn_sum_crosscheck(prm, sigma, s) || got.first != want.a || got.second != want.b)
                o.pass = false, o.detail << "p=" << p << " s=" << s << "; ";
        }
    }
    return o;
}

/// Criterion 7: the oracle on abelian types against phi- and GL-based closed forms.
Outcome abelian_closed_forms() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 2}, {5, 3}, {7, 2}}) {
        const std::uint64_t expect[4] = {oracle::totient(p * p) * oracle::totient(q * q), oracle::gl2_count(q) * oracle::totient(p * p),
                                         oracle::totient(q * q) * oracle::gl2_count(p), oracle::gl2_count(q) * oracle::gl2_count(p)};
        for (int t = 15; t <= 18; ++t) {
            const auto spec = make_spec(t, p, q);
            if (spec.group_order() > kCayleyCap) continue;
            const auto n = brute_aut(build(spec), kDefaultBudget, worker_threads()).order();
            ++checked;
            if (n != expect[t - 15]) o.pass = false, o.detail << spec.to_string() << " brute " << n << " vs " << expect[t - 15] << "; ";
        }
    }
    o.detail << checked << " specs";
    return o;
}

} // namespace

int main() {
    bool ok = true;
    ok &= report(1, "order-36 suite", order_36_suite());
    const SweepResult sweep = run_sweep();
    ok &= report(2, "semidirect small-prime sweep", semidirect_suite(sweep));
    ok &= report(3, "main theorem property", main_theorem(sweep));
    ok &= report(4, "matrix-condition property", matrix_conditions(sweep));
    ok &= report(5, "gamma-triviality property", gamma_trivial(sweep));
    ok &= report(6, "GF(p^2) binomial cross-check", gf_crosscheck());
    ok &= report(7, "oracle self-consistency on abelian types", abelian_closed_forms());
    return ok ? 0 : 1;
}
