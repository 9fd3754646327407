#pragma once

/**
 * @file pc_group.hpp
 * @brief Polycyclic presentations and their collected Cayley tables.
 *
 * A presentation lists generators g_1..g_n with relative orders r_k, a power
 * rule g_k^{r_k} = w_k and conjugation rules g_i^{-1} g_j g_i = w_ij (i < j),
 * where every right-hand side is a normal form in the later generators.
 * Elements are the normal forms g_1^{e_1} ... g_n^{e_n}, indexed in mixed
 * radix with g_1 most significant, so the subgroup <g_k, ..., g_n> occupies a
 * prefix of the index range.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p2q2 {

class InconsistentPresentation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GroupTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Materialized tables are refused above this order.
inline constexpr std::size_t kCayleyCap = 20000;

/// Exhaustive associativity is checked up to this order, sampled above.
inline constexpr std::size_t kExhaustiveAssocLimit = 400;

using Elem = std::uint32_t;

/// Exponent vector of a normal form, one entry per generator.
using Word = std::vector<std::uint32_t>;

struct Generator {
    std::string name;
    std::uint32_t relative_order;
};

class PcPresentation {
public:
    explicit PcPresentation(std::vector<Generator> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) throw InconsistentPresentation("presentation needs at least one generator");
        for (const auto& g : gens_) {
            if (g.relative_order < 2) {
                throw InconsistentPresentation("generator " + g.name + " has relative order < 2");
            }
        }
        const std::size_t n = gens_.size();
        power_.assign(n, Word(n, 0));
        conj_.assign(n * n, Word(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) conj_[i * n + j][j] = 1;
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const std::vector<Generator>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::uint32_t relative_order(std::size_t k) const { return gens_.at(k).relative_order; }

    /// Index of the generator called `name`.
    [[nodiscard]] std::size_t find(const std::string& name) const {
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if (gens_[k].name == name) return k;
        }
        throw std::out_of_range("no generator named " + name);
    }

    /// Normal form from (generator, exponent) pairs with strictly increasing
    /// generators.  Exponents are reduced modulo the relative order, so
    /// negative values mean inverses when the generator's power rule is trivial.
    [[nodiscard]] Word word(std::initializer_list<std::pair<std::size_t, std::int64_t>> letters) const {
        Word w(size(), 0);
        std::size_t last = 0;
        bool first = true;
        for (auto [k, e] : letters) {
            if (k >= size() || (!first && k <= last)) {
                throw InconsistentPresentation("word letters must use increasing generator indices");
            }
            const auto r = static_cast<std::int64_t>(relative_order(k));
            std::int64_t red = e % r;
            if (red < 0) red += r;
            w[k] = static_cast<std::uint32_t>(red);
            last = k;
            first = false;
        }
        return w;
    }

    void set_power(std::size_t k, Word rhs) {
        check_rhs(rhs, k + 1, "power rule of " + gens_.at(k).name);
        power_[k] = std::move(rhs);
    }

    /// Sets g_i^{-1} g_j g_i = rhs for i < j.
    void set_conjugate(std::size_t i, std::size_t j, Word rhs) {
        if (!(i < j && j < size())) throw InconsistentPresentation("conjugation rule needs i < j < n");
        check_rhs(rhs, i + 1, "conjugation rule " + gens_[j].name + "^" + gens_[i].name);
        conj_[i * size() + j] = std::move(rhs);
    }

    [[nodiscard]] const Word& power(std::size_t k) const { return power_.at(k); }
    [[nodiscard]] const Word& conjugate(std::size_t i, std::size_t j) const { return conj_.at(i * size() + j); }

    [[nodiscard]] std::size_t declared_order() const {
        std::size_t o = 1;
        for (const auto& g : gens_) o *= g.relative_order;
        return o;
    }

private:
    void check_rhs(const Word& w, std::size_t first_allowed, const std::string& what) const {
        if (w.size() != size()) throw InconsistentPresentation(what + ": word has wrong length");
        for (std::size_t k = 0; k < size(); ++k) {
            if (w[k] >= gens_[k].relative_order) throw InconsistentPresentation(what + ": exponent out of range");
            if (k < first_allowed && w[k] != 0) {
                throw InconsistentPresentation(what + ": right-hand side must lie in the later generators");
            }
        }
    }

    std::vector<Generator> gens_;
    std::vector<Word> power_;
    std::vector<Word> conj_;
};

class PcGroup {
public:
    [[nodiscard]] const PcPresentation& presentation() const noexcept { return pres_; }
    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::size_t num_generators() const noexcept { return pres_.size(); }

    [[nodiscard]] Elem identity() const noexcept { return 0; }
    [[nodiscard]] Elem mul(Elem x, Elem y) const noexcept { return table_[static_cast<std::size_t>(x) * order_ + y]; }
    [[nodiscard]] Elem inverse(Elem x) const noexcept { return inverse_[x]; }
    [[nodiscard]] std::uint32_t element_order(Elem x) const noexcept { return elem_order_[x]; }

    /// x^e for any e >= 0.
    [[nodiscard]] Elem pow(Elem x, std::uint64_t e) const noexcept {
        const std::uint64_t o = elem_order_[x];
        e %= o;
        if (e < pow_width_) return pow_table_[static_cast<std::size_t>(x) * pow_width_ + e];
        Elem result = identity();
        Elem base = x;
        while (e > 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    /// y^{-1} x y.
    [[nodiscard]] Elem conj(Elem x, Elem y) const noexcept { return mul(mul(inverse(y), x), y); }
    /// x^{-1} y^{-1} x y.
    [[nodiscard]] Elem commutator(Elem x, Elem y) const noexcept {
        return mul(mul(inverse(x), inverse(y)), mul(x, y));
    }

    [[nodiscard]] Elem generator(std::size_t k) const { return static_cast<Elem>(stride_.at(k)); }

    [[nodiscard]] Word exponents(Elem x) const {
        Word w(num_generators(), 0);
        for (std::size_t k = 0; k < num_generators(); ++k) {
            w[k] = static_cast<std::uint32_t>((x / stride_[k]) % pres_.relative_order(k));
        }
        return w;
    }

    [[nodiscard]] std::uint32_t exponent(Elem x, std::size_t k) const {
        return static_cast<std::uint32_t>((x / stride_[k]) % pres_.relative_order(k));
    }

    [[nodiscard]] Elem index_of(const Word& w) const {
        if (w.size() != num_generators()) throw std::invalid_argument("word length does not match generator count");
        std::size_t idx = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] >= pres_.relative_order(k)) throw std::invalid_argument("exponent out of range");
            idx += w[k] * stride_[k];
        }
        return static_cast<Elem>(idx);
    }

    /// x with its last nonzero exponent lowered by one, so x = parent(x) * g_{last_generator(x)}.
    [[nodiscard]] Elem parent(Elem x) const noexcept { return parent_[x]; }
    [[nodiscard]] std::uint32_t last_generator(Elem x) const noexcept { return last_gen_[x]; }

    /// Human-readable normal form such as "a^2*b".
    [[nodiscard]] std::string format(Elem x) const {
        if (x == identity()) return "1";
        std::string out;
        const Word w = exponents(x);
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == 0) continue;
            if (!out.empty()) out += '*';
            out += pres_.generators()[k].name;
            if (w[k] != 1) out += "^" + std::to_string(w[k]);
        }
        return out;
    }

    friend PcGroup collect(const PcPresentation& pres);

private:
    explicit PcGroup(PcPresentation pres) : pres_(std::move(pres)) {}

    PcPresentation pres_;
    std::size_t order_ = 0;
    std::vector<std::size_t> stride_;
    std::vector<std::uint16_t> table_;
    std::vector<Elem> inverse_;
    std::vector<std::uint32_t> elem_order_;
    std::vector<Elem> parent_;
    std::vector<std::uint32_t> last_gen_;
    std::size_t pow_width_ = 0;
    std::vector<Elem> pow_table_;
};

namespace detail {

inline void check_latin_square(const std::vector<std::uint16_t>& t, std::size_t n) {
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    for (std::size_t x = 0; x < n; ++x) {
        ++stamp;
        for (std::size_t y = 0; y < n; ++y) {
            auto v = t[x * n + y];
            if (seen[v] == stamp) throw InconsistentPresentation("Cayley table row " + std::to_string(x) + " repeats an entry");
            seen[v] = stamp;
        }
    }
    for (std::size_t y = 0; y < n; ++y) {
        ++stamp;
        for (std::size_t x = 0; x < n; ++x) {
            auto v = t[x * n + y];
            if (seen[v] == stamp) throw InconsistentPresentation("Cayley table column " + std::to_string(y) + " repeats an entry");
            seen[v] = stamp;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (t[x] != x || t[x * n] != x) throw InconsistentPresentation("index 0 is not a two-sided identity");
    }
}

inline void check_associative(const std::vector<std::uint16_t>& t, std::size_t n) {
    auto m = [&](std::size_t x, std::size_t y) -> std::size_t { return t[x * n + y]; };
    if (n <= kExhaustiveAssocLimit) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t xy = m(x, y);
                for (std::size_t z = 0; z < n; ++z) {
                    if (m(xy, z) != m(x, m(y, z))) throw InconsistentPresentation("collected table is not associative");
                }
            }
        return;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
        const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
        if (m(m(x, y), z) != m(x, m(y, z))) throw InconsistentPresentation("collected table is not associative");
    }
}

} // namespace detail

/**
 * Builds the Cayley table of a presentation from the innermost generator
 * outward.  With G_j = <g_j, ..., g_n>, an element of G_j is a pair (e, t),
 * t in G_{j+1}, and
 *   (e, t)(f, u) = (e + f, c^f(t) u)          if e + f < r_j,
 *                 (e + f - r_j, w_j c^f(t) u)  otherwise,
 * where c is conjugation by g_j on G_{j+1}.  Each level checks that c is an
 * automorphism of G_{j+1}, that c^{r_j} is conjugation by w_j and that c
 * fixes w_j; the finished table is then checked for the group axioms.
 */
inline PcGroup collect(const PcPresentation& pres) {
    const std::size_t n = pres.size();
    const std::size_t declared = pres.declared_order();
    if (declared > kCayleyCap) {
        throw GroupTooLarge("group order " + std::to_string(declared) + " exceeds the Cayley cap " + std::to_string(kCayleyCap));
    }
    PcGroup G(pres);
    G.order_ = declared;
    G.stride_.assign(n, 1);
    for (std::size_t k = n - 1; k-- > 0;) G.stride_[k] = G.stride_[k + 1] * pres.relative_order(k + 1);

    G.parent_.assign(declared, 0);
    G.last_gen_.assign(declared, 0);
    for (std::size_t x = 1; x < declared; ++x) {
        std::size_t k = n;
        while (k-- > 0) {
            if ((x / G.stride_[k]) % pres.relative_order(k) != 0) break;
        }
        G.last_gen_[x] = static_cast<std::uint32_t>(k);
        G.parent_[x] = static_cast<Elem>(x - G.stride_[k]);
    }

    auto index_in = [&](const Word& w) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k) idx += w[k] * G.stride_[k];
        return idx;
    };

    std::vector<std::uint16_t> t{0};
    std::size_t m = 1;
    for (std::size_t j = n; j-- > 0;) {
        const std::size_t r = pres.relative_order(j);
        const std::size_t big = r * m;
        auto tm = [&](std::size_t x, std::size_t y) -> std::size_t { return t[x * m + y]; };
        const std::string where = " at generator " + pres.generators()[j].name;

        std::vector<std::uint32_t> c(m, 0);
        for (std::size_t x = 1; x < m; ++x) {
            const std::size_t g = G.last_gen_[x];
            c[x] = static_cast<std::uint32_t>(tm(c[G.parent_[x]], index_in(pres.conjugate(j, g))));
        }
        std::vector<std::uint8_t> hit(m, 0);
        for (std::size_t x = 0; x < m; ++x) {
            if (hit[c[x]]) throw InconsistentPresentation("conjugation is not bijective" + where);
            hit[c[x]] = 1;
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::size_t gk = G.stride_[k];
                if (c[tm(x, gk)] != tm(c[x], c[gk])) {
                    throw InconsistentPresentation("conjugation is not a homomorphism" + where);
                }
            }
        }

        std::vector<std::vector<std::uint32_t>> cp(r, std::vector<std::uint32_t>(m));
        for (std::size_t x = 0; x < m; ++x) cp[0][x] = static_cast<std::uint32_t>(x);
        for (std::size_t f = 1; f < r; ++f)
            for (std::size_t x = 0; x < m; ++x) cp[f][x] = c[cp[f - 1][x]];

        const std::size_t w = index_in(pres.power(j));
        std::size_t w_inv = 0;
        while (tm(w, w_inv) != 0) ++w_inv;
        for (std::size_t x = 0; x < m; ++x) {
            if (c[cp[r - 1][x]] != tm(tm(w_inv, x), w)) {
                throw InconsistentPresentation("power of the conjugation disagrees with the power rule" + where);
            }
        }
        if (c[w] != w) throw InconsistentPresentation("conjugation does not fix the power rule" + where);

        std::vector<std::uint16_t> next(big * big);
        for (std::size_t e = 0; e < r; ++e)
            for (std::size_t tt = 0; tt < m; ++tt)
                for (std::size_t f = 0; f < r; ++f) {
                    const std::size_t ct = cp[f][tt];
                    std::size_t s = e + f;
                    const bool wrap = s >= r;
                    if (wrap) s -= r;
                    std::uint16_t* row = &next[(e * m + tt) * big + f * m];
                    for (std::size_t u = 0; u < m; ++u) {
                        std::size_t z = tm(ct, u);
                        if (wrap) z = tm(w, z);
                        row[u] = static_cast<std::uint16_t>(s * m + z);
                    }
                }
        t = std::move(next);
        m = big;
    }

    detail::check_latin_square(t, declared);
    detail::check_associative(t, declared);
    G.table_ = std::move(t);

    G.inverse_.assign(declared, 0);
    for (std::size_t x = 0; x < declared; ++x) {
        const std::uint16_t* row = &G.table_[x * declared];
        for (std::size_t y = 0; y < declared; ++y) {
            if (row[y] == 0) {
                G.inverse_[x] = static_cast<Elem>(y);
                break;
            }
        }
    }
    G.elem_order_.assign(declared, 1);
    for (std::size_t x = 1; x < declared; ++x) {
        std::uint32_t d = 1;
        std::size_t y = x;
        while (y != 0) {
            y = G.table_[y * declared + x];
            ++d;
        }
        G.elem_order_[x] = d;
    }
    std::size_t width = 1;
    for (const auto& g : pres.generators()) width = std::max<std::size_t>(width, g.relative_order);
    G.pow_width_ = width;
    G.pow_table_.assign(declared * width, 0);
    for (std::size_t x = 0; x < declared; ++x) {
        std::size_t y = 0;
        for (std::size_t e = 0; e < width; ++e) {
            G.pow_table_[x * width + e] = static_cast<Elem>(y);
            y = G.table_[y * declared + x];
        }
    }
    return G;
}

} // namespace p2q2
