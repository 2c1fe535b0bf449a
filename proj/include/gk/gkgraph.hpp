#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gk/factor.hpp"
#include "gk/natural.hpp"

namespace gk {

// Simple graph on an ascending set of primes. Irreflexive and symmetric by
// construction. For GK(L_n(2)) each odd vertex carries its multiplicative
// order of 2 as a label; vertex 2 is unlabeled.
class PrimeGraph {
public:
    PrimeGraph(std::vector<Natural> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    const Natural& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Natural>& vertices() const { return vertices_; }
    std::optional<std::size_t> index_of(const Natural& p) const;

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * vertices_.size() + j]; }
    unsigned degree(std::size_t i) const;
    std::size_t edge_count() const;

    std::optional<unsigned> label(std::size_t i) const { return labels_[i]; }
    void set_label(std::size_t i, unsigned k) { labels_[i] = k; }

private:
    std::vector<Natural> vertices_;
    std::vector<bool> adj_; // row-major
    std::vector<std::optional<unsigned>> labels_;
};

// Ordered degree tuple aligned to the ascending primes it belongs to.
struct DegreePattern {
    std::vector<Natural> primes;
    std::vector<unsigned> degrees;

    bool operator==(const DegreePattern& o) const = default;
};

// GK(L_n(2)) for n >= 3 from the ppd adjacency criterion; n = 2 gives the
// two-vertex edgeless graph. Vertices are {2} plus the primes dividing some
// 2^i - 1, i <= n; for odd r, s with orders k <= l: r ~ s iff k + l <= n or
// k | l, and 2 ~ r iff k <= n - 2.
PrimeGraph build_gk_Ln2(unsigned n, const FactorCache* cache = nullptr);

DegreePattern degree_pattern(const PrimeGraph& g);

// Closed-form degree of vertex r in GK(L_n(2)), computed from ppd sets
// rather than from edges; must agree with degree_pattern everywhere.
unsigned degree_by_formula(unsigned n, const Natural& r, const FactorCache* cache = nullptr);

// Vertices grouped by degree; keys are only the degrees that occur.
std::map<unsigned, std::vector<Natural>> omega_sets(const DegreePattern& d);

// Partition into connected components, ordered by smallest member.
std::vector<std::vector<Natural>> connected_components(const PrimeGraph& g);

struct AutConstraintReport {
    bool pass = false;
    std::vector<std::string> violations;
};

// Checks a candidate degree pattern for Aut(S) against GK(S) when
// |Aut(S):S| = 2: odd vertices keep their odd-odd edges, so
// deg_S(r) <= deg_Aut(r) <= deg_S(r) + 1 with equality forced when 2 ~ r,
// and the sorted degree sequence of S is majorized by the candidate's.
AutConstraintReport aut_constraints(const PrimeGraph& g_S, const DegreePattern& d_aut_candidate);

// Deterministic DOT text; byte-identical across runs for the same graph.
std::string to_dot(const PrimeGraph& g);

} // namespace gk
