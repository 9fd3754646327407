#pragma once

/**
 * @file automorphism.hpp
 * @brief Automorphisms as generator-image tuples, and the brute-force oracle.
 *
 * An automorphism of a PcGroup is stored as the images of the presentation
 * generators.  Because the presentation defines the group, a tuple extends
 * to an endomorphism exactly when it satisfies every power and conjugation
 * rule, and that endomorphism is an automorphism exactly when it is
 * injective.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "p2q2/group_algorithms.hpp"
#include "p2q2/pc_group.hpp"

namespace p2q2 {

/// Tuples are packed 16 bits per image into a 64-bit key.
inline constexpr std::size_t kMaxAutGenerators = 4;

inline constexpr std::uint64_t kDefaultBudget = 100000000ULL;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes) : std::runtime_error(what), nodes_(nodes) {}
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

struct Automorphism {
    std::array<std::uint16_t, kMaxAutGenerators> images{};

    [[nodiscard]] std::uint64_t key() const noexcept {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < kMaxAutGenerators; ++i) k |= static_cast<std::uint64_t>(images[i]) << (16 * i);
        return k;
    }

    friend bool operator==(const Automorphism& a, const Automorphism& b) noexcept { return a.images == b.images; }
    friend bool operator<(const Automorphism& a, const Automorphism& b) noexcept { return a.key() < b.key(); }
};

inline void require_aut_capacity(const PcGroup& G) {
    if (G.num_generators() > kMaxAutGenerators) {
        throw std::invalid_argument("automorphism tuples support at most " + std::to_string(kMaxAutGenerators) + " generators");
    }
}

inline Automorphism make_automorphism(const PcGroup& G, const std::vector<Elem>& images) {
    require_aut_capacity(G);
    if (images.size() != G.num_generators()) throw std::invalid_argument("one image per generator required");
    Automorphism a;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] >= G.order()) throw std::out_of_range("image index out of range");
        a.images[i] = static_cast<std::uint16_t>(images[i]);
    }
    return a;
}

inline Automorphism identity_automorphism(const PcGroup& G) {
    return make_automorphism(G, [&] {
        std::vector<Elem> v;
        for (std::size_t k = 0; k < G.num_generators(); ++k) v.push_back(G.generator(k));
        return v;
    }());
}

/// Image of the normal form `w` under the generator assignment `img`.
template <class Images>
Elem evaluate_word(const PcGroup& G, const Images& img, const Word& w) {
    Elem acc = G.identity();
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != 0) acc = G.mul(acc, G.pow(img[k], w[k]));
    }
    return acc;
}

/// f(x), evaluated along the normal form of x.
inline Elem apply(const PcGroup& G, const Automorphism& f, Elem x) {
    Elem acc = G.identity();
    const std::size_t n = G.num_generators();
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t e = G.exponent(x, k);
        if (e != 0) acc = G.mul(acc, G.pow(f.images[k], e));
    }
    return acc;
}

/// The map on all elements induced by the generator images.
template <class Images>
std::vector<Elem> full_map(const PcGroup& G, const Images& img) {
    std::vector<Elem> m(G.order(), G.identity());
    for (Elem x = 1; x < G.order(); ++x) m[x] = G.mul(m[G.parent(x)], img[G.last_generator(x)]);
    return m;
}

/// f after g.
inline Automorphism compose(const PcGroup& G, const Automorphism& f, const Automorphism& g) {
    Automorphism h;
    for (std::size_t i = 0; i < G.num_generators(); ++i) h.images[i] = static_cast<std::uint16_t>(apply(G, f, g.images[i]));
    return h;
}

inline Automorphism inverse(const PcGroup& G, const Automorphism& f) {
    const auto m = full_map(G, f.images);
    std::vector<Elem> pre(G.order(), 0);
    for (Elem x = 0; x < G.order(); ++x) pre[m[x]] = x;
    Automorphism inv;
    for (std::size_t i = 0; i < G.num_generators(); ++i) inv.images[i] = static_cast<std::uint16_t>(pre[G.generator(i)]);
    return inv;
}

/// Adapts automorphisms of a fixed PcGroup to FiniteGroupOps (product = composition).
struct AutOps {
    using value_type = Automorphism;
    const PcGroup& group;

    [[nodiscard]] Automorphism identity() const { return identity_automorphism(group); }
    [[nodiscard]] Automorphism multiply(const Automorphism& f, const Automorphism& g) const { return compose(group, f, g); }
    [[nodiscard]] std::uint64_t key(const Automorphism& f) const noexcept { return f.key(); }
};

/// One defining rule: lhs(images) must equal the image of `rhs`.
struct Relation {
    enum class Kind { Power, Conjugate } kind;
    std::size_t i;  ///< the generator raised to its relative order, or the conjugating generator
    std::size_t j;  ///< the conjugated generator (Conjugate only)
    Word rhs;
    std::size_t level;  ///< largest generator index involved
};

inline std::vector<Relation> relations_of(const PcPresentation& P) {
    std::vector<Relation> out;
    const std::size_t n = P.size();
    auto last_used = [&](const Word& w, std::size_t base) {
        std::size_t lvl = base;
        for (std::size_t k = 0; k < n; ++k)
            if (w[k] != 0) lvl = std::max(lvl, k);
        return lvl;
    };
    for (std::size_t i = 0; i < n; ++i) out.push_back({Relation::Kind::Power, i, i, P.power(i), last_used(P.power(i), i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back({Relation::Kind::Conjugate, i, j, P.conjugate(i, j), last_used(P.conjugate(i, j), j)});
    return out;
}

template <class Images>
bool relation_holds(const PcGroup& G, const Relation& rel, const Images& img) {
    const Elem rhs = evaluate_word(G, img, rel.rhs);
    if (rel.kind == Relation::Kind::Power) return G.pow(img[rel.i], G.presentation().relative_order(rel.i)) == rhs;
    return G.conj(img[rel.j], img[rel.i]) == rhs;
}

/// Name of the first violated rule, or empty when all hold.
template <class Images>
std::string first_violated_relation(const PcGroup& G, const Images& img) {
    const auto& names = G.presentation().generators();
    for (const auto& rel : relations_of(G.presentation())) {
        if (relation_holds(G, rel, img)) continue;
        if (rel.kind == Relation::Kind::Power) return "power rule of " + names[rel.i].name;
        return "conjugation rule " + names[rel.j].name + "^" + names[rel.i].name;
    }
    return {};
}

template <class Images>
bool is_bijective_image(const PcGroup& G, const Images& img) {
    const auto m = full_map(G, img);
    std::vector<std::uint8_t> hit(G.order(), 0);
    for (Elem y : m) {
        if (hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

inline bool is_automorphism(const PcGroup& G, const Automorphism& f) {
    return first_violated_relation(G, f.images).empty() && is_bijective_image(G, f.images);
}

/// A set of automorphisms kept sorted by key.
struct AutGroup {
    std::vector<Automorphism> elements;
    std::vector<Automorphism> generators;

    [[nodiscard]] std::size_t order() const noexcept { return elements.size(); }

    [[nodiscard]] bool contains(const Automorphism& f) const {
        return std::binary_search(elements.begin(), elements.end(), f);
    }

    static AutGroup from_elements(std::vector<Automorphism> elems, std::vector<Automorphism> gens = {}) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        return AutGroup{std::move(elems), std::move(gens)};
    }

    /// Closure of `gens` under composition.
    static AutGroup generated_by(const PcGroup& G, const std::vector<Automorphism>& gens) {
        auto cl = dimino(AutOps{G}, gens);
        return from_elements(std::move(cl.elements), std::move(cl.generators));
    }
};

/// Fills in an irredundant generating set if none is recorded.
inline void ensure_generators(const PcGroup& G, AutGroup& A) {
    if (!A.generators.empty() || A.order() <= 1) return;
    A.generators = dimino(AutOps{G}, A.elements).generators;
}

struct BruteStats {
    std::uint64_t nodes = 0;
    std::uint64_t millis = 0;
};

/// P2Q2_BUDGET if set and parseable (accepts forms like "1e8"), else the default.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("P2Q2_BUDGET")) {
        try {
            const double v = std::stod(env);
            if (v >= 1) return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultBudget;
}

namespace detail {

class BruteSearch {
public:
    BruteSearch(const PcGroup& G, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
        : G_(G), n_(G.num_generators()), budget_(budget), nodes_(nodes) {
        by_level_.resize(n_);
        for (const auto& rel : relations_of(G.presentation())) by_level_[rel.level].push_back(rel);
        candidates_.resize(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            const auto want = G.element_order(G.generator(k));
            for (Elem x = 0; x < G.order(); ++x)
                if (G.element_order(x) == want) candidates_[k].push_back(x);
        }
        map_.assign(G.order(), 0);
        stamp_.assign(G.order(), 0);
    }

    [[nodiscard]] const std::vector<Elem>& first_candidates() const { return candidates_[0]; }

    /// Explores every assignment whose first image is `first`.
    void run_from(Elem first, std::vector<Automorphism>& out) {
        img_[0] = first;
        if (!count_node()) return;
        if (level_ok(0)) descend(1, out);
    }

private:
    bool count_node() {
        const std::uint64_t now = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (now > budget_) throw BudgetExceeded("brute search exceeded its budget of " + std::to_string(budget_) + " nodes", now);
        return true;
    }

    bool level_ok(std::size_t k) const {
        for (const auto& rel : by_level_[k])
            if (!relation_holds(G_, rel, img_)) return false;
        return true;
    }

    void descend(std::size_t k, std::vector<Automorphism>& out) {
        if (k == n_) {
            if (injective()) {
                Automorphism a;
                for (std::size_t i = 0; i < n_; ++i) a.images[i] = static_cast<std::uint16_t>(img_[i]);
                out.push_back(a);
            }
            return;
        }
        for (Elem c : candidates_[k]) {
            img_[k] = c;
            count_node();
            if (level_ok(k)) descend(k + 1, out);
        }
    }

    bool injective() {
        ++stamp_id_;
        if (stamp_id_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            stamp_id_ = 1;
        }
        stamp_[0] = stamp_id_;
        for (Elem x = 1; x < G_.order(); ++x) {
            const Elem y = G_.mul(map_[G_.parent(x)], img_[G_.last_generator(x)]);
            if (stamp_[y] == stamp_id_) return false;
            stamp_[y] = stamp_id_;
            map_[x] = y;
        }
        return true;
    }

    const PcGroup& G_;
    std::size_t n_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& nodes_;
    std::vector<std::vector<Relation>> by_level_;
    std::vector<std::vector<Elem>> candidates_;
    std::array<Elem, kMaxAutGenerators> img_{};
    std::vector<Elem> map_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_id_ = 0;
};

} // namespace detail

/**
 * Enumerates Aut(G) by depth-first search over generator images in
 * presentation order.  Candidates for g_k are the elements of the same
 * order; each rule is tested as soon as the last generator it mentions has
 * an image.  Leaves are kept iff the induced map is injective.  The first
 * level is split across `threads` workers.
 */
inline AutGroup brute_aut(const PcGroup& G, std::uint64_t budget = default_budget(), unsigned threads = 1,
                          BruteStats* stats = nullptr) {
    require_aut_capacity(G);
    const auto start = std::chrono::steady_clock::now();
    std::atomic<std::uint64_t> nodes{0};
    std::vector<Elem> firsts = detail::BruteSearch(G, budget, nodes).first_candidates();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(firsts.size())));

    std::vector<std::vector<Automorphism>> found(threads);
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&](unsigned t) {
        try {
            detail::BruteSearch search(G, budget, nodes);
            for (std::size_t i = next.fetch_add(1); i < firsts.size(); i = next.fetch_add(1)) {
                search.run_from(firsts[i], found[t]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!error) error = std::current_exception();
            next.store(firsts.size());
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (stats) {
        stats->nodes = nodes.load();
        stats->millis = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    }
    if (error) std::rethrow_exception(error);

    std::vector<Automorphism> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    return AutGroup::from_elements(std::move(all));
}

} // namespace p2q2
