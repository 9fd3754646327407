#pragma once

// Closed-form Aut(G) structures for the 36 types, with p and q substituted.
// Semidirect products carry no action, so only their order is meaningful.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "p2q2/catalog.hpp"
#include "p2q2/numtheory.hpp"

namespace p2q2 {

struct StructureExpr {
    enum class Kind { Cyclic, GL2, Sym, Dihedral, Quaternion8, Units, Direct, Semidirect };

    Kind kind = Kind::Cyclic;
    std::uint64_t n = 1;  ///< atom parameter; Dihedral(n) has order 2n
    std::vector<StructureExpr> parts;

    static StructureExpr cyclic(std::uint64_t n) { return {Kind::Cyclic, n, {}}; }
    static StructureExpr gl2(std::uint64_t m) { return {Kind::GL2, m, {}}; }
    static StructureExpr sym(std::uint64_t n) { return {Kind::Sym, n, {}}; }
    static StructureExpr dihedral(std::uint64_t n) { return {Kind::Dihedral, n, {}}; }
    static StructureExpr quaternion8() { return {Kind::Quaternion8, 8, {}}; }
    static StructureExpr units(std::uint64_t n) { return {Kind::Units, n, {}}; }
    static StructureExpr direct(std::vector<StructureExpr> factors) { return {Kind::Direct, 0, std::move(factors)}; }
    static StructureExpr semidirect(StructureExpr normal, StructureExpr acting) {
        return {Kind::Semidirect, 0, {std::move(normal), std::move(acting)}};
    }

    [[nodiscard]] bool is_atom() const noexcept { return kind != Kind::Direct && kind != Kind::Semidirect; }

    [[nodiscard]] std::uint64_t order() const {
        switch (kind) {
        case Kind::Cyclic: return n;
        case Kind::GL2: return (n * n - 1) * (n * n - n);
        case Kind::Sym: {
            std::uint64_t f = 1;
            for (std::uint64_t i = 2; i <= n; ++i) f *= i;
            return f;
        }
        case Kind::Dihedral: return 2 * n;
        case Kind::Quaternion8: return 8;
        case Kind::Units: return Modulus::of(n).totient();
        case Kind::Direct:
        case Kind::Semidirect: {
            std::uint64_t o = 1;
            for (const auto& f : parts) o *= f.order();
            return o;
        }
        }
        return 0;
    }

    /// ASCII rendering: "x" for direct and ":" for semidirect products.
    [[nodiscard]] std::string to_string() const {
        switch (kind) {
        case Kind::Cyclic: return "Z" + std::to_string(n);
        case Kind::GL2: return "GL(2," + std::to_string(n) + ")";
        case Kind::Sym: return "S" + std::to_string(n);
        case Kind::Dihedral: return "D" + std::to_string(n);
        case Kind::Quaternion8: return "Q8";
        case Kind::Units: return "U" + std::to_string(n);
        case Kind::Direct:
        case Kind::Semidirect: {
            const char* sep = kind == Kind::Direct ? " x " : " : ";
            std::string out;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out += sep;
                out += parts[i].is_atom() ? parts[i].to_string() : "(" + parts[i].to_string() + ")";
            }
            return out;
        }
        }
        return {};
    }

    friend bool operator==(const StructureExpr&, const StructureExpr&) = default;
};

/// The tabulated Aut(G) for `spec`; throws UnknownType for ids outside 1-36.
inline StructureExpr predicted(const GroupSpec& spec) {
    using E = StructureExpr;
    const std::uint64_t p = spec.p, q = spec.q;
    auto Z = [](std::uint64_t n) { return E::cyclic(n); };
    auto X = [](std::vector<E> f) { return E::direct(std::move(f)); };
    auto SD = [](E a, E b) { return E::semidirect(std::move(a), std::move(b)); };
    const E Zp2 = X({Z(p), Z(p)});
    const E diag = X({Z(p - 1), Z(p - 1)});

    switch (spec.type_id) {
    case 1: return E::units(36);
    case 2: return X({Z(6), E::sym(3)});
    case 3: return X({E::sym(3), E::gl2(3)});
    case 4: return X({Z(2), E::gl2(3)});
    case 5: return X({Z(2), Z(2), E::sym(3)});
    case 6: return SD(X({E::sym(3), E::sym(3)}), Z(2));
    case 7: return X({Z(2), SD(Z(9), Z(6))});
    case 8: return X({E::sym(4), E::sym(3)});
    case 9: return X({Z(2), SD(Z(9), Z(6))});
    case 10: return X({Z(2), Z(3), E::sym(3)});
    case 11: return X({Z(2), SD(SD(SD(X({Z(3), Z(3)}), E::quaternion8()), Z(3)), Z(2))});
    case 12: return SD(X({Z(3), Z(3)}), SD(Z(8), Z(2)));
    case 13: return X({Z(3), E::sym(4)});
    case 14: return SD(X({Z(3), Z(3)}), X({E::gl2(3), Z(2)}));
    case 15: return X({Z(p * (p - 1)), Z(q * (q - 1))});
    case 16: return X({E::gl2(q), Z(p * (p - 1))});
    case 17: return X({Z(q * (q - 1)), E::gl2(p)});
    case 18: return X({E::gl2(q), E::gl2(p)});
    case 19: return SD(Z(p * p), X({Z(p * (p - 1)), Z(q)}));
    case 20: return SD(Z(p * p), Z(p * (p - 1)));
    case 21: return SD(Z(p * p), X({Z(p * (p - 1)), SD(Z(q), Z(q - 1))}));
    case 22: return SD(Zp2, X({E::gl2(p), Z(q)}));
    case 23: return SD(Z(p), X({diag, Z(2)}));
    case 24: return SD(Z(p), X({diag, Z(q)}));
    case 25: return SD(Zp2, SD(X({diag, Z(q)}), Z(2)));
    case 26: return SD(Zp2, SD(diag, Z(2)));
    case 27: return SD(Zp2, SD(diag, Z(q)));
    case 28: return SD(Zp2, diag);
    case 29: return SD(Zp2, E::gl2(p));
    case 30: return SD(Zp2, SD(X({Z(p * p - 1), Z(q)}), Z(2)));
    case 31: case 32: return SD(Zp2, SD(Z(p * p - 1), Z(2)));
    case 33: return SD(Zp2, X({E::gl2(p), SD(Z(q), Z(q - 1))}));
    case 34: return SD(Z(p), X({diag, Z(2)}));
    case 35: return SD(Zp2, X({diag, Z(2)}));
    case 36: return SD(Zp2, X({X({Z(2), Z(p * p - 1)}), SD(Z(q - 1), Z(q))}));
    default: break;
    }
    throw UnknownType("unknown group type " + std::to_string(spec.type_id));
}

} // namespace p2q2
