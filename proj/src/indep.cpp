#include "gk/indep.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "gk/errors.hpp"

namespace gk {

BoundValue caro_wei(const DegreePattern& d) {
    if (d.primes.size() != d.degrees.size()) throw domain_error("caro_wei: malformed pattern");
    mpq_class sum = 0;
    for (unsigned deg : d.degrees) sum += mpq_class(1, deg + 1);
    sum.canonicalize();
    BoundValue b;
    b.numerator = Natural::from_mpz(sum.get_num());
    b.denominator = Natural::from_mpz(sum.get_den());
    return b;
}

namespace {

struct MaskGraph {
    std::vector<uint64_t> nbr; // neighbor mask per vertex
    std::size_t n = 0;
};

MaskGraph pack(const PrimeGraph& g) {
    if (g.vertex_count() > 64) throw domain_error("alpha_exact: more than 64 vertices");
    MaskGraph m;
    m.n = g.vertex_count();
    m.nbr.assign(m.n, 0);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            if (g.adjacent(i, j)) m.nbr[i] |= 1ull << j;
    return m;
}

// max independent set size within the candidate mask
unsigned mis_size(const MaskGraph& g, uint64_t cand) {
    if (cand == 0) return 0;
    // pick a max-degree pivot within cand
    int pivot = -1;
    int best_deg = -1;
    uint64_t rest = cand;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int deg = std::popcount(g.nbr[v] & cand);
        if (deg > best_deg) {
            best_deg = deg;
            pivot = v;
        }
    }
    if (best_deg == 0) return static_cast<unsigned>(std::popcount(cand)); // edgeless remainder
    unsigned with = 1 + mis_size(g, cand & ~g.nbr[pivot] & ~(1ull << pivot));
    unsigned without = mis_size(g, cand & ~(1ull << pivot));
    return std::max(with, without);
}

// Canonical witness: order vertices by (degree, prime) ascending and take the
// lexicographically smallest maximum independent set along that order. At
// each step the chosen vertex must still allow `target` vertices in total,
// drawn only from later positions.
std::vector<std::size_t> lex_witness(const MaskGraph& g, const std::vector<std::size_t>& order,
                                     uint64_t allowed, unsigned target) {
    std::vector<uint64_t> tail_mask(order.size() + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;)
        tail_mask[i] = tail_mask[i + 1] | (1ull << order[i]);
    std::vector<std::size_t> chosen;
    uint64_t cand = allowed;
    unsigned need = target;
    for (std::size_t i = 0; i < order.size() && need > 0; ++i) {
        std::size_t v = order[i];
        if (!(cand & (1ull << v))) continue;
        uint64_t after = cand & tail_mask[i + 1] & ~g.nbr[v];
        if (1 + mis_size(g, after) >= need) {
            chosen.push_back(v);
            cand = after;
            --need;
        }
    }
    return chosen;
}

std::vector<std::size_t> degree_prime_order(const PrimeGraph& g) {
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<unsigned> deg(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) deg[i] = g.degree(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        return g.vertex(a) < g.vertex(b);
    });
    return order;
}

IndependentSetResult finish(const PrimeGraph& g, const std::vector<std::size_t>& chosen,
                            unsigned extra_size) {
    IndependentSetResult r;
    r.size = static_cast<unsigned>(chosen.size()) + extra_size;
    for (std::size_t v : chosen) r.witness.push_back(g.vertex(v));
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

} // namespace

IndependentSetResult alpha_exact(const PrimeGraph& g) {
    MaskGraph m = pack(g);
    if (m.n == 0) return {};
    uint64_t all = m.n == 64 ? ~0ull : (1ull << m.n) - 1;
    unsigned target = mis_size(m, all);
    auto chosen = lex_witness(m, degree_prime_order(g), all, target);
    return finish(g, chosen, 0);
}

IndependentSetResult t2(const PrimeGraph& g) {
    auto idx2 = g.index_of(Natural(2));
    if (!idx2) throw domain_error("t2: vertex 2 is not in the graph");
    MaskGraph m = pack(g);
    uint64_t all = m.n == 64 ? ~0ull : (1ull << m.n) - 1;
    uint64_t rest = all & ~m.nbr[*idx2] & ~(1ull << *idx2);
    unsigned target = 1 + mis_size(m, rest);
    auto chosen = lex_witness(m, degree_prime_order(g), rest, target - 1);
    IndependentSetResult r = finish(g, chosen, 1);
    r.witness.push_back(g.vertex(*idx2));
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

bool majorized(const DegreePattern& d1, const DegreePattern& d2) {
    if (d1.degrees.size() != d2.degrees.size())
        throw domain_error("majorized: length mismatch");
    std::vector<unsigned> a = d1.degrees, b = d2.degrees;
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace gk
