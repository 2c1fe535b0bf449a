#include "gk/cli.hpp"

#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "gk/arith.hpp"
#include "gk/data_path.hpp"
#include "gk/errors.hpp"
#include "gk/factor.hpp"
#include "gk/gkgraph.hpp"
#include "gk/indep.hpp"
#include "gk/odpipe.hpp"
#include "gk/orders.hpp"
#include "gk/ppd.hpp"
#include "gk/tables.hpp"

namespace gk {

namespace {

struct CliConfig {
    std::string cache_path;           // --cache wins over GK_FACTOR_CACHE
    std::string output_format = "table"; // table | dot | structured
    unsigned max_n = 11;
};

class CacheHolder {
public:
    explicit CacheHolder(const std::string& flag_path) {
        std::string path = flag_path;
        if (path.empty()) {
            if (const char* env = std::getenv("GK_FACTOR_CACHE"); env && *env) path = env;
        }
        if (!path.empty()) cache_ = cache_load(path);
    }
    const FactorCache* get() const { return cache_ ? &*cache_ : nullptr; }

private:
    std::optional<FactorCache> cache_;
};

std::string degrees_str(const std::vector<unsigned>& deg) {
    std::string s = "(";
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(deg[i]);
    }
    return s + ")";
}

int cmd_order(const std::string& group, unsigned n, const FactorCache* cache, std::ostream& out) {
    if (group == "Ln2") {
        out << "|L_" << n << "(2)| = " << order_Ln2(n, cache).str() << "\n";
        return 0;
    }
    if (group == "aut-Ln2") {
        out << "|Aut(L_" << n << "(2))| = " << order_aut_Ln2(n, cache).str() << "\n";
        return 0;
    }
    if (group.rfind("simple:", 0) == 0) {
        std::string name = group.substr(7);
        auto id = parse_group_name(name);
        if (!id) throw domain_error("unrecognized group name '" + name + "'");
        out << "|" << display_name(*id) << "| = " << order_simple(*id, cache).str() << "\n";
        GroupId canon = canonicalize(*id);
        if (!(canon == *id))
            out << "canonical name: " << display_name(canon) << "\n";
        return 0;
    }
    throw domain_error("--group must be Ln2, aut-Ln2 or simple:<name>");
}

int cmd_table1(const FactorCache* cache, std::ostream& out) {
    unsigned diffs = 0;
    for (const Table1Row& row : table1_reference()) {
        Factorization computed = order_Ln2(row.n, cache);
        unsigned s = s_and_components(row.n, cache).s;
        std::string ok = "ok";
        if (computed.str() != row.order_text) {
            ok = "ORDER DIFF (reference " + row.order_text + ")";
            ++diffs;
        }
        if (s != row.s) {
            ok += " S DIFF (reference " + std::to_string(row.s) + ")";
            ++diffs;
        }
        out << "L_" << row.n << "(2) |G| = " << computed.str() << " s = " << s << " " << ok << "\n";
    }
    out << (diffs ? "diffs: " : "all rows match; diffs: ") << diffs << "\n";
    return diffs ? 1 : 0;
}

int cmd_table2(unsigned max_n, const FactorCache* cache, std::ostream& out) {
    if (max_n < 2 || max_n > 20) throw domain_error("table2: --max-n must be in [2, 20]");
    unsigned diffs = 0;
    for (const Table2Row& row : table2_reference()) {
        if (row.n > max_n) continue;
        PrimeGraph g = build_gk_Ln2(row.n, cache);
        DegreePattern d = degree_pattern(g);
        out << "L_" << row.n << "(2) D = " << degrees_str(d.degrees);
        // closed-form degrees must agree with the edge counts
        if (row.n >= 3) {
            for (std::size_t i = 0; i < d.primes.size(); ++i) {
                unsigned f = degree_by_formula(row.n, d.primes[i], cache);
                if (f != d.degrees[i]) {
                    out << "\n  SELF-CONSISTENCY DIFF at " << d.primes[i].str() << ": formula " << f
                        << ", edges " << d.degrees[i];
                    ++diffs;
                }
            }
        }
        if (d.degrees == row.degrees) {
            out << " ok\n";
        } else {
            ++diffs;
            out << " REFERENCE DIFF\n";
            for (std::size_t i = 0; i < d.degrees.size() && i < row.degrees.size(); ++i)
                if (d.degrees[i] != row.degrees[i])
                    out << "  vertex " << d.primes[i].str() << ": computed " << d.degrees[i]
                        << ", reference " << row.degrees[i] << "\n";
            if (d.degrees.size() != row.degrees.size())
                out << "  length: computed " << d.degrees.size() << ", reference "
                    << row.degrees.size() << "\n";
        }
    }
    out << (diffs ? "diffs: " : "all rows match; diffs: ") << diffs << "\n";
    return diffs ? 1 : 0;
}

int cmd_table3(const FactorCache* cache, std::ostream& out) {
    Factorization target = order_Ln2(11, cache);
    std::vector<GroupOrderEntry> entries = db_enumerate_dividing(target, {}, cache);
    out << "simple groups with order dividing |L_11(2)| = " << target.str() << ":\n";
    for (const auto& e : entries) out << "  " << display_name(e.id) << " " << e.order.str() << "\n";

    unsigned diffs = 0;
    std::set<std::size_t> matched;
    std::vector<std::string> reconciliation, missing, mismatched, extra;
    for (const Table3Row& row : table3_reference()) {
        auto id = parse_group_name(row.printed_name);
        if (!id) throw domain_error("table3.txt: unrecognized name " + row.printed_name);
        GroupId canon = canonicalize(*id);
        Factorization want = Factorization::parse(row.order_text);
        bool found = false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].id == canon) {
                found = true;
                matched.insert(i);
                if (!(entries[i].order == want)) {
                    mismatched.push_back(row.printed_name + ": computed " + entries[i].order.str() +
                                         ", reference " + row.order_text);
                }
                break;
            }
        }
        if (!found)
            missing.push_back(row.printed_name + " (reference order " + row.order_text + ")");
        if (display_name(canon) != row.printed_name)
            reconciliation.push_back(row.printed_name + " -> " + display_name(canon));
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!matched.count(i))
            extra.push_back(display_name(entries[i].id) + " order=" + entries[i].order.str());

    if (!reconciliation.empty()) {
        out << "name reconciliation:\n";
        for (const auto& r : reconciliation) out << "  " << r << "\n";
    }
    for (const auto& m : missing) {
        out << "missing: " << m << "\n";
        ++diffs;
    }
    for (const auto& m : mismatched) {
        out << "order mismatch: " << m << "\n";
        ++diffs;
    }
    for (const auto& e : extra) {
        out << "extra (not in reference table): " << e << "\n";
        ++diffs;
    }
    out << "reference rows: " << table3_reference().size() << ", computed: " << entries.size()
        << ", diffs: " << diffs << "\n";
    return diffs ? 1 : 0;
}

int cmd_graph(unsigned n, bool dot, const FactorCache* cache, std::ostream& out) {
    PrimeGraph g = build_gk_Ln2(n, cache);
    if (dot) {
        out << to_dot(g);
        return 0;
    }
    out << "vertices:";
    for (const Natural& v : g.vertices()) out << " " << v.str();
    out << "\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                out << g.vertex(i).str() << " -- " << g.vertex(j).str() << "\n";
    return 0;
}

int cmd_ppd(unsigned k, const FactorCache* cache, std::ostream& out) {
    PpdSet s = ppd_set(k, cache);
    out << "ppd(2^" << k << "-1) = {";
    for (std::size_t i = 0; i < s.primes.size(); ++i)
        out << (i ? ", " : "") << s.primes[i].str();
    out << "}";
    if (s.primes.empty()) out << " (empty)";
    out << "\n";
    return 0;
}

int cmd_factor_mersenne(unsigned k, const FactorCache* cache, std::ostream& out) {
    if (k < 2) throw domain_error("factor --mersenne needs K >= 2");
    out << "2^" << k << "-1 = " << factor(mersenne(k), cache).str() << "\n";
    return 0;
}

int cmd_mersenne_sweep(unsigned max_p, std::ostream& out) {
    out << "mersenne prime exponents p <= " << max_p << ": 2 (by table)";
    for (unsigned long p = 3; p <= max_p; p += 2)
        if (is_prime(Natural(p)) && lucas_lehmer(p)) out << " " << p;
    out << "\n";
    return 0;
}

int cmd_alpha(unsigned n, const FactorCache* cache, std::ostream& out) {
    PrimeGraph g = build_gk_Ln2(n, cache);
    IndependentSetResult a = alpha_exact(g);
    out << "alpha(GK(L_" << n << "(2))) = " << a.size << " witness {";
    for (std::size_t i = 0; i < a.witness.size(); ++i)
        out << (i ? ", " : "") << a.witness[i].str();
    out << "}\n";
    IndependentSetResult t = t2(g);
    out << "t(2, L_" << n << "(2)) = " << t.size << " witness {";
    for (std::size_t i = 0; i < t.witness.size(); ++i)
        out << (i ? ", " : "") << t.witness[i].str();
    out << "}\n";
    return 0;
}

int cmd_caro_wei(unsigned n, const FactorCache* cache, std::ostream& out) {
    DegreePattern d = degree_pattern(build_gk_Ln2(n, cache));
    out << "caro_wei(D(L_" << n << "(2))) = " << caro_wei(d).str() << "\n";
    return 0;
}

int cmd_lemma_m(unsigned n, const FactorCache* cache, std::ostream& out) {
    std::vector<unsigned> ks = mersenne_square_free_ks(n, cache);
    out << "k in [2, " << n << "] with (2^k-1)^2 not dividing |Aut(L_" << n << "(2))|:";
    for (unsigned k : ks) out << " " << k;
    out << "\n";
    return 0;
}

int cmd_od_check(unsigned n, const std::string& required_csv, const std::string& format,
                 const FactorCache* cache, std::ostream& out) {
    OdSignature sig = signature_Ln2(n, cache);
    std::vector<Natural> required;
    if (required_csv.empty()) {
        required = default_required_primes(sig.pattern);
    } else {
        std::size_t pos = 0;
        while (pos < required_csv.size()) {
            std::size_t end = required_csv.find(',', pos);
            if (end == std::string::npos) end = required_csv.size();
            required.push_back(Natural(required_csv.substr(pos, end - pos)));
            pos = end + (end < required_csv.size() ? 1 : 0);
        }
    }
    OdReport report = od_filter(sig, required, cache);
    out << "target: L_" << n << "(2)\n";
    if (format == "structured")
        out << report_json(report);
    else
        out << report_text(report);
    bool resolved = report.resolved &&
                    *report.resolved == canonicalize(GroupId::lie(Family::lie_a, n - 1, 2));
    return resolved ? 0 : 1;
}

int cmd_aut_check(unsigned p, const FactorCache* cache, std::ostream& out) {
    if (p < 3 || !is_prime(Natural(p)))
        throw domain_error("aut-check: p must be an odd prime");
    if (!lucas_lehmer(p)) throw domain_error("aut-check: 2^" + std::to_string(p) + "-1 is composite");
    out << "p = " << p << ", 2^" << p << "-1 = " << mersenne(p).str() << " (prime)\n";
    unsigned failures = 0;
    for (unsigned n : {p, p + 1}) {
        out << "n = " << n << ":\n";
        Factorization aut = order_aut_Ln2(n, cache);
        out << "  |Aut(L_" << n << "(2))| = " << aut.str() << "\n";
        OrderComponents oc = oc_aut(n, cache);
        Factorization m1;
        for (const Natural& q : oc.components[0].primes)
            m1.mul_prime(q, aut.exponent_of(q));
        out << "  OC(Aut): m_1 = " << m1.str() << ", m_2 = " << oc.components[1].part.str()
            << "\n";
        out << "  |C_L(sigma)| = " << centralizer_sigma_order(n).str() << "\n";
        PrimeGraph g = build_gk_Ln2(n, cache);
        AutConstraintReport r = aut_constraints(g, degree_pattern(g));
        out << "  degree constraints vs own pattern: " << (r.pass ? "pass" : "FAIL") << "\n";
        if (!r.pass) ++failures;
    }
    return failures ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact orders, prime graphs and degree patterns of L_n(2)"};
    app.require_subcommand(1);
    CliConfig config;
    app.add_option("--cache", config.cache_path,
                   "factor cache file (overrides GK_FACTOR_CACHE)");

    std::string order_group;
    unsigned order_n = 0;
    CLI::App* c_order = app.add_subcommand("order", "print a factored group order");
    c_order->add_option("--group", order_group, "Ln2 | aut-Ln2 | simple:<name>")->required();
    c_order->add_option("--n", order_n, "degree n for Ln2 / aut-Ln2");

    CLI::App* c_table1 = app.add_subcommand("table1", "orders and s-values, n = 2..11, vs reference");

    CLI::App* c_table2 = app.add_subcommand("table2", "degree patterns vs reference");
    c_table2->add_option("--max-n", config.max_n, "largest n (2..20)")->required();

    CLI::App* c_table3 =
        app.add_subcommand("table3", "simple groups with order dividing |L_11(2)|, vs reference");

    unsigned graph_n = 0;
    bool graph_dot = false;
    CLI::App* c_graph = app.add_subcommand("graph", "edges of GK(L_n(2))");
    c_graph->add_option("--n", graph_n, "degree n")->required();
    c_graph->add_flag("--dot", graph_dot, "emit DOT");

    unsigned ppd_k = 0;
    CLI::App* c_ppd = app.add_subcommand("ppd", "primitive prime divisors of 2^k-1");
    c_ppd->add_option("--k", ppd_k, "exponent k")->required();

    unsigned factor_k = 0;
    CLI::App* c_factor = app.add_subcommand("factor", "factor 2^k-1");
    c_factor->add_option("--mersenne", factor_k, "exponent k")->required();

    unsigned sweep_p = 0;
    CLI::App* c_mersenne = app.add_subcommand("mersenne", "Lucas-Lehmer sweep over odd primes");
    c_mersenne->add_option("--max-p", sweep_p, "largest exponent")->required();

    unsigned alpha_n = 0;
    CLI::App* c_alpha = app.add_subcommand("alpha", "independence number of GK(L_n(2))");
    c_alpha->add_option("--n", alpha_n, "degree n")->required();

    unsigned cw_n = 0;
    CLI::App* c_cw = app.add_subcommand("caro-wei", "Caro-Wei bound for GK(L_n(2))");
    c_cw->add_option("--n", cw_n, "degree n")->required();

    unsigned lm_n = 0;
    CLI::App* c_lm = app.add_subcommand("lemma-m", "k with (2^k-1)^2 not dividing |Aut(L_n(2))|");
    c_lm->add_option("--n", lm_n, "degree n")->required();

    unsigned od_n = 0;
    std::string od_required;
    std::string od_format = "table";
    CLI::App* c_od = app.add_subcommand("od-check", "candidate filter for (|L_n(2)|, D(L_n(2)))");
    c_od->add_option("--n", od_n, "degree n")->required();
    c_od->add_option("--required", od_required, "comma-separated primes the candidate must contain");
    c_od->add_option("--format", od_format, "table | structured");

    unsigned aut_p = 0;
    CLI::App* c_aut = app.add_subcommand("aut-check", "order components and constraints for Aut");
    c_aut->add_option("--p", aut_p, "odd prime with 2^p-1 prime")->required();

    std::vector<std::string> argv_vec = args;
    try {
        app.parse(std::vector<std::string>(argv_vec.rbegin(), argv_vec.rend()));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        CacheHolder cache(config.cache_path);
        if (*c_order) return cmd_order(order_group, order_n, cache.get(), out);
        if (*c_table1) return cmd_table1(cache.get(), out);
        if (*c_table2) return cmd_table2(config.max_n, cache.get(), out);
        if (*c_table3) return cmd_table3(cache.get(), out);
        if (*c_graph) return cmd_graph(graph_n, graph_dot, cache.get(), out);
        if (*c_ppd) return cmd_ppd(ppd_k, cache.get(), out);
        if (*c_factor) return cmd_factor_mersenne(factor_k, cache.get(), out);
        if (*c_mersenne) return cmd_mersenne_sweep(sweep_p, out);
        if (*c_alpha) return cmd_alpha(alpha_n, cache.get(), out);
        if (*c_cw) return cmd_caro_wei(cw_n, cache.get(), out);
        if (*c_lm) return cmd_lemma_m(lm_n, cache.get(), out);
        if (*c_od) return cmd_od_check(od_n, od_required, od_format, cache.get(), out);
        if (*c_aut) return cmd_aut_check(aut_p, cache.get(), out);
        err << "no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gk
