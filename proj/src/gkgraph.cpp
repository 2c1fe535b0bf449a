#include "gk/gkgraph.hpp"

#include <algorithm>
#include <set>

#include "gk/errors.hpp"
#include "gk/ppd.hpp"

namespace gk {

PrimeGraph::PrimeGraph(std::vector<Natural> vertices,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (!(vertices_[i] < vertices_[i + 1]))
            throw domain_error("PrimeGraph: vertices must be strictly ascending");
    if (!vertices_.empty() && vertices_.front() < Natural(2))
        throw domain_error("PrimeGraph: vertices must be >= 2");
    adj_.assign(vertices_.size() * vertices_.size(), false);
    labels_.assign(vertices_.size(), std::nullopt);
    for (const auto& [a, b] : edges) {
        if (a >= vertices_.size() || b >= vertices_.size())
            throw domain_error("PrimeGraph: edge index out of range");
        if (a == b) throw domain_error("PrimeGraph: loops are not allowed");
        adj_[a * vertices_.size() + b] = true;
        adj_[b * vertices_.size() + a] = true;
    }
}

std::optional<std::size_t> PrimeGraph::index_of(const Natural& p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it != vertices_.end() && *it == p)
        return static_cast<std::size_t>(it - vertices_.begin());
    return std::nullopt;
}

unsigned PrimeGraph::degree(std::size_t i) const {
    unsigned d = 0;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (adj_[i * vertices_.size() + j]) ++d;
    return d;
}

std::size_t PrimeGraph::edge_count() const {
    std::size_t twice = 0;
    for (bool b : adj_) twice += b;
    return twice / 2;
}

PrimeGraph build_gk_Ln2(unsigned n, const FactorCache* cache) {
    if (n < 2) throw domain_error("build_gk_Ln2: n must be >= 2");
    if (n == 2) {
        PrimeGraph g({Natural(2), Natural(3)}, {});
        g.set_label(1, 2);
        return g;
    }
    // order label of each odd vertex = least i with p | 2^i - 1
    std::map<Natural, unsigned> order_of;
    for (unsigned i = 2; i <= n; ++i)
        for (const Natural& p : pi_of_mersenne(i, cache))
            if (!order_of.count(p)) order_of[p] = i;

    std::vector<Natural> vertices;
    vertices.push_back(Natural(2));
    for (const auto& [p, k] : order_of) vertices.push_back(p);
    std::sort(vertices.begin(), vertices.end());

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == Natural(2)) {
                unsigned k = order_of.at(vertices[j]);
                if (k <= n - 2) edges.emplace_back(i, j);
                continue;
            }
            unsigned k = order_of.at(vertices[i]);
            unsigned l = order_of.at(vertices[j]);
            if (k > l) std::swap(k, l);
            if (k + l <= n || l % k == 0) edges.emplace_back(i, j);
        }
    }
    PrimeGraph g(std::move(vertices), edges);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (g.vertex(i) != Natural(2)) g.set_label(i, order_of.at(g.vertex(i)));
    return g;
}

DegreePattern degree_pattern(const PrimeGraph& g) {
    DegreePattern d;
    d.primes = g.vertices();
    d.degrees.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) d.degrees.push_back(g.degree(i));
    return d;
}

namespace {

std::set<Natural> ppd_union(unsigned lo, unsigned hi, const FactorCache* cache) {
    std::set<Natural> u;
    for (unsigned i = lo; i <= hi; ++i)
        for (const Natural& p : ppd_set(i, cache).primes) u.insert(p);
    return u;
}

} // namespace

unsigned degree_by_formula(unsigned n, const Natural& r, const FactorCache* cache) {
    if (n < 3) throw domain_error("degree_by_formula: n must be >= 3");
    if (r == Natural(2)) {
        std::set<Natural> top = ppd_union(n - 1, n, cache);
        std::size_t pi_size = 1; // vertex 2
        for (unsigned i = 2; i <= n; ++i) pi_size += ppd_set(i, cache).primes.size();
        return static_cast<unsigned>(pi_size - top.size() - 1);
    }
    Natural ord = mult_order_of_2(r, cache);
    if (!ord.fits_ulong() || ord.to_ulong() > n)
        throw domain_error("degree_by_formula: " + r.str() + " does not divide |L_" +
                           std::to_string(n) + "(2)|");
    unsigned k = static_cast<unsigned>(ord.to_ulong());
    if (k == n || k == n - 1)
        return static_cast<unsigned>(pi_of_mersenne(k, cache).size() - 1);
    if (2 * k <= n) {
        std::set<Natural> u = ppd_union(2, n - k, cache);
        return static_cast<unsigned>(u.size() + ppd_set((n / k) * k, cache).primes.size());
    }
    std::set<Natural> u = ppd_union(2, n - k, cache);
    for (const Natural& p : pi_of_mersenne(k, cache)) u.insert(p);
    return static_cast<unsigned>(u.size());
}

std::map<unsigned, std::vector<Natural>> omega_sets(const DegreePattern& d) {
    if (d.primes.size() != d.degrees.size())
        throw domain_error("omega_sets: pattern length mismatch");
    std::map<unsigned, std::vector<Natural>> omega;
    for (std::size_t i = 0; i < d.primes.size(); ++i) omega[d.degrees[i]].push_back(d.primes[i]);
    return omega;
}

std::vector<std::vector<Natural>> connected_components(const PrimeGraph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::vector<Natural>> comps;
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> stack{start};
        std::vector<Natural> comp;
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(g.vertex(v));
            for (std::size_t u = 0; u < g.vertex_count(); ++u) {
                if (!seen[u] && g.adjacent(v, u)) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

AutConstraintReport aut_constraints(const PrimeGraph& g_S, const DegreePattern& d_aut) {
    if (d_aut.primes != g_S.vertices())
        throw domain_error("aut_constraints: vertex sets differ");
    AutConstraintReport report;
    DegreePattern d_S = degree_pattern(g_S);
    auto idx2 = g_S.index_of(Natural(2));
    for (std::size_t i = 0; i < d_aut.primes.size(); ++i) {
        const Natural& p = d_aut.primes[i];
        unsigned lo = d_S.degrees[i];
        unsigned hi;
        if (p == Natural(2)) {
            hi = static_cast<unsigned>(d_aut.primes.size() - 1);
        } else {
            bool adj2 = idx2 && g_S.adjacent(*idx2, i);
            hi = adj2 ? lo : lo + 1;
        }
        if (d_aut.degrees[i] < lo || d_aut.degrees[i] > hi)
            report.violations.push_back("deg(" + p.str() + ") = " + std::to_string(d_aut.degrees[i]) +
                                        " outside [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]");
    }
    // GK(S) degree-majorized by the candidate
    std::vector<unsigned> a = d_S.degrees, b = d_aut.degrees;
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            report.violations.push_back("sorted degree sequence not majorized at position " +
                                        std::to_string(i));
            break;
        }
    }
    report.pass = report.violations.empty();
    return report;
}

std::string to_dot(const PrimeGraph& g) {
    std::string out = "graph GK {\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i) out += "  " + g.vertex(i).str() + ";\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                out += "  " + g.vertex(i).str() + " -- " + g.vertex(j).str() + ";\n";
    out += "}\n";
    return out;
}

} // namespace gk
