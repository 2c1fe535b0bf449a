#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/factor.hpp"
#include "gk/factorization.hpp"
#include "gk/natural.hpp"

namespace gk {

enum class Family {
    alternating,
    sporadic,
    lie_a,   // A_n(q)  = L_{n+1}(q)
    lie_2a,  // 2A_n(q) = U_{n+1}(q)
    lie_b,   // B_n(q)  = O_{2n+1}(q)
    lie_c,   // C_n(q)  = S_{2n}(q)
    lie_d,   // D_n(q)  = O_{2n}^+(q)
    lie_2d,  // 2D_n(q) = O_{2n}^-(q)
    g2,
    f4,
    e6,
    e7,
    e8,
    tw_e6, // 2E_6(q)
    tr_d4, // 3D_4(q)
    tw_b2, // 2B_2(q) = Sz(q)
    tw_g2, // 2G_2(q) = R(q)
    tw_f4, // 2F_4(q)
    tits,  // 2F_4(2)'
};

// Identifies a finite simple group (or an alias of one, before
// canonicalization). rank is the Lie rank, or the degree for alternating.
struct GroupId {
    Family family = Family::alternating;
    unsigned rank = 0;
    unsigned long long q = 0;
    std::string sporadic_name;

    static GroupId alternating(unsigned degree);
    static GroupId sporadic_group(const std::string& name);
    static GroupId lie(Family f, unsigned rank, unsigned long long q);
    static GroupId tits_group();

    bool operator==(const GroupId& o) const;
    bool operator<(const GroupId& o) const;
};

// Rejects parameters that do not name a simple group (A_1(2), B_2(2), ...).
// Returns false with the exclusion rule in *why.
bool is_valid_simple(const GroupId& id, std::string* why = nullptr);

// Folds exceptional isomorphisms to one representative per abstract group:
// A_1(4) = A_1(5) = Alt_5, A_1(9) = Alt_6, A_3(2) = Alt_8, A_2(2) = A_1(7),
// C_n(2^f) = B_n(2^f), C_2(q) = B_2(q), B_2(3) = 2A_3(2), D_3 = A_3,
// 2D_3 = 2A_3.
GroupId canonicalize(const GroupId& id);

// "L_10(2)", "U_4(3)", "O_8^+(2)", "A_5", "M_24", "Sz(8)", ...
std::string display_name(const GroupId& id);

// Accepts display names plus common variants: "S_10(2)" (symplectic),
// "O_7(3)", "A_1(49)", "L_3(2^2)", names without underscores. Returns
// nullopt when the text is not a recognized group name.
std::optional<GroupId> parse_group_name(const std::string& text);

// Exact factored order from the family formula (constants file for sporadic
// and exceptional-family data). Throws domain_error for excluded parameters.
Factorization order_simple(const GroupId& id, const FactorCache* cache = nullptr);

// |L_n(2)| = 2^C(n,2) * prod_{i=2..n} (2^i - 1), n >= 2.
Factorization order_Ln2(unsigned n, const FactorCache* cache = nullptr);

// 2 * |L_n(2)|, n >= 3 (L_2(2) is its own automorphism group).
Factorization order_aut_Ln2(unsigned n, const FactorCache* cache = nullptr);

// |Out(L_n(q))| with q = s^f: gcd(n, q-1) * f for n = 2 (no graph
// automorphism), gcd(n, q-1) * f * 2 for n >= 3.
Natural out_order_Lnq(unsigned n, const Natural& q);

struct OrderComponent {
    std::vector<Natural> primes; // the component's vertex set, ascending
    Natural part;                // product of those primes' full powers in |G|
};

struct OrderComponents {
    unsigned s = 0;
    std::vector<OrderComponent> components; // the one containing 2 first
};

// Connected components of GK(L_n(2)) with the order split across them.
OrderComponents s_and_components(unsigned n, const FactorCache* cache = nullptr);

// Order components of Aut(L_n(2)) for n = p or p+1 where 2^p - 1 is a
// Mersenne prime (checked); m_2 = 2^p - 1.
OrderComponents oc_aut(unsigned n, const FactorCache* cache = nullptr);

// |C_L(sigma)| for the graph automorphism sigma of L = L_n(2), n = p or p+1:
// 2^((p-1)/2)^2 * (2^2-1)(2^4-1)...(2^(p-1)-1), with the extra factor
// 2^((p+1)/2)^2-form and (2^(p+1)-1) when n = p+1.
Factorization centralizer_sigma_order(unsigned n);

struct GroupOrderEntry {
    GroupId id;
    Factorization order;
};

// Every canonical simple group whose order divides target and whose prime
// set contains required_primes, sorted by (order, name). The search is
// exhaustive: alternating degrees are capped by the smallest prime absent
// from target, and for Lie families q^N must divide the matching prime part
// of target, which bounds both q and the rank.
std::vector<GroupOrderEntry> db_enumerate_dividing(const Factorization& target,
                                                   const std::vector<Natural>& required_primes,
                                                   const FactorCache* cache = nullptr);

} // namespace gk
