#include "gk/odpipe.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gk/arith.hpp"
#include "gk/errors.hpp"

#include "json.hpp"

namespace gk {

OdSignature signature_Ln2(unsigned n, const FactorCache* cache) {
    if (n < 2) throw domain_error("signature_Ln2: n must be >= 2");
    OdSignature sig;
    sig.order = order_Ln2(n, cache);
    sig.pattern = degree_pattern(build_gk_Ln2(n, cache));
    return sig;
}

std::vector<unsigned> mersenne_square_free_ks(unsigned n, const FactorCache* cache) {
    if (n < 3) throw domain_error("mersenne_square_free_ks: n must be >= 3");
    Factorization aut = order_aut_Ln2(n, cache);
    std::vector<unsigned> ks;
    for (unsigned k = 2; k <= n; ++k) {
        Factorization mk = factor(mersenne(k), cache);
        Factorization square;
        for (const auto& pp : mk.prime_powers()) square.mul_prime(pp.prime, 2 * pp.exponent);
        if (!square.divides(aut)) ks.push_back(k);
    }
    return ks;
}

bool frobenius_shape(const DegreePattern& d) {
    std::size_t n = d.degrees.size();
    if (n < 2) return false;
    unsigned zeros = 0, high = 0;
    for (unsigned deg : d.degrees) {
        if (deg == 0)
            ++zeros;
        if (deg == n - 2) ++high;
    }
    // n = 2 has n - 2 = 0, so the two counts overlap there
    if (n == 2) return zeros == 2;
    return zeros == 1 && high == n - 1;
}

bool two_frobenius_shape(const DegreePattern& d) {
    std::size_t n = d.degrees.size();
    if (n < 2) return false;
    std::map<unsigned, unsigned> count;
    for (unsigned deg : d.degrees) ++count[deg];
    for (std::size_t a = 1; a < n; ++a) {
        std::size_t b = n - a;
        std::map<unsigned, unsigned> want;
        want[static_cast<unsigned>(a - 1)] += static_cast<unsigned>(a);
        want[static_cast<unsigned>(b - 1)] += static_cast<unsigned>(b);
        if (count == want) return true;
    }
    return false;
}

bool nonsolvable_by_degrees(const DegreePattern& d) {
    std::size_t n = d.degrees.size();
    if (n < 3) throw domain_error("nonsolvable_by_degrees: pattern needs >= 3 vertices");
    bool has_zero = false, has_low = false;
    for (unsigned deg : d.degrees) {
        if (deg == 0) has_zero = true;
        if (deg >= 1 && deg + 3 <= n) has_low = true;
    }
    return has_zero && has_low;
}

std::vector<Natural> default_required_primes(const DegreePattern& pattern) {
    // the two lowest-degree odd vertices, ties broken by smaller prime
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < pattern.primes.size(); ++i)
        if (pattern.primes[i] != Natural(2)) odd.push_back(i);
    std::stable_sort(odd.begin(), odd.end(), [&](std::size_t a, std::size_t b) {
        if (pattern.degrees[a] != pattern.degrees[b]) return pattern.degrees[a] < pattern.degrees[b];
        return pattern.primes[a] < pattern.primes[b];
    });
    std::vector<Natural> req;
    for (std::size_t i = 0; i < odd.size() && i < 2; ++i) req.push_back(pattern.primes[odd[i]]);
    std::sort(req.begin(), req.end());
    return req;
}

OdReport od_filter(const OdSignature& sig, const std::vector<Natural>& required_primes,
                   const FactorCache* cache) {
    OdReport report;
    report.signature = sig;
    report.required_primes = required_primes;

    BoundValue cw = caro_wei(sig.pattern);
    // alpha >= ceil(cw); cw > 2 forces t(G) >= 3
    Natural ceil_num = (cw.numerator + cw.denominator - Natural(1)) / cw.denominator;
    bool t_ge_3 = ceil_num >= Natural(3);
    report.checks.push_back({"caro_wei_lower_bound", true, cw.str()});
    report.checks.push_back(
        {"t_ge_3", t_ge_3, "ceil(caro_wei) = " + ceil_num.str()});

    std::size_t h = sig.pattern.degrees.size();
    unsigned deg2 = 0;
    for (std::size_t i = 0; i < sig.pattern.primes.size(); ++i)
        if (sig.pattern.primes[i] == Natural(2)) deg2 = sig.pattern.degrees[i];
    bool t2_ge_2 = h >= 2 && deg2 + 2 <= h;
    report.checks.push_back({"t2_ge_2", t2_ge_2,
                             "deg(2) = " + std::to_string(deg2) + ", |pi| = " + std::to_string(h)});

    report.checks.push_back({"frobenius_shape_excluded", !frobenius_shape(sig.pattern), ""});
    report.checks.push_back({"two_frobenius_shape_excluded", !two_frobenius_shape(sig.pattern), ""});
    if (h >= 3) {
        bool ns = nonsolvable_by_degrees(sig.pattern);
        report.checks.push_back({"nonsolvable_by_degrees", ns,
                                 ns ? "" : "predicate is sufficient only; no conclusion from false"});
    }

    report.candidates = db_enumerate_dividing(sig.order, required_primes, cache);

    if (report.candidates.size() == 1 && report.candidates[0].order == sig.order) {
        report.resolved = report.candidates[0].id;
        report.verdict = "uniquely resolves to " + display_name(*report.resolved);
    } else if (report.candidates.empty()) {
        report.verdict = "no candidate";
    } else {
        report.verdict = "not uniquely resolved (" + std::to_string(report.candidates.size()) +
                         " candidates)";
    }
    return report;
}

OdReport od_filter(const OdSignature& sig, const FactorCache* cache) {
    return od_filter(sig, default_required_primes(sig.pattern), cache);
}

std::string report_text(const OdReport& r) {
    std::ostringstream out;
    out << "order: " << r.signature.order.str() << "\n";
    out << "pattern:";
    for (unsigned d : r.signature.pattern.degrees) out << " " << d;
    out << "\n";
    out << "required:";
    if (r.required_primes.empty()) out << " (none)";
    for (const Natural& p : r.required_primes) out << " " << p.str();
    out << "\n";
    for (const OdCheck& c : r.checks) {
        out << "check " << c.name << ": " << (c.pass ? "pass" : "fail");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "candidates: " << r.candidates.size() << "\n";
    for (const auto& e : r.candidates) {
        out << "candidate: " << display_name(e.id) << " order=" << e.order.str()
            << " full_order_match=" << (e.order == r.signature.order ? "yes" : "no") << "\n";
    }
    out << "verdict: " << r.verdict << "\n";
    return out.str();
}

std::string report_json(const OdReport& r) {
    nlohmann::ordered_json j;
    j["order"] = r.signature.order.str();
    j["pattern"] = r.signature.pattern.degrees;
    std::vector<std::string> req;
    for (const Natural& p : r.required_primes) req.push_back(p.str());
    j["required"] = req;
    j["checks"] = nlohmann::ordered_json::array();
    for (const OdCheck& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    j["candidates"] = nlohmann::ordered_json::array();
    for (const auto& e : r.candidates) {
        nlohmann::ordered_json je;
        je["name"] = display_name(e.id);
        je["order"] = e.order.str();
        je["full_order_match"] = (e.order == r.signature.order);
        j["candidates"].push_back(je);
    }
    j["verdict"] = r.verdict;
    return j.dump(2) + "\n";
}

} // namespace gk
