#include "gk/orders.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gk/arith.hpp"
#include "gk/data_path.hpp"
#include "gk/errors.hpp"
#include "gk/gkgraph.hpp"

namespace gk {

GroupId GroupId::alternating(unsigned degree) {
    GroupId id;
    id.family = Family::alternating;
    id.rank = degree;
    return id;
}

GroupId GroupId::sporadic_group(const std::string& name) {
    GroupId id;
    id.family = Family::sporadic;
    id.sporadic_name = name;
    return id;
}

GroupId GroupId::lie(Family f, unsigned rank, unsigned long long q) {
    GroupId id;
    id.family = f;
    id.rank = rank;
    id.q = q;
    return id;
}

GroupId GroupId::tits_group() {
    GroupId id;
    id.family = Family::tits;
    return id;
}

bool GroupId::operator==(const GroupId& o) const {
    return family == o.family && rank == o.rank && q == o.q && sporadic_name == o.sporadic_name;
}

bool GroupId::operator<(const GroupId& o) const {
    return std::tie(family, rank, q, sporadic_name) <
           std::tie(o.family, o.rank, o.q, o.sporadic_name);
}

namespace {

struct PrimePowerQ {
    unsigned long long s;
    unsigned f;
};

std::optional<PrimePowerQ> split_prime_power(unsigned long long q) {
    if (q < 2) return std::nullopt;
    Natural nq(static_cast<unsigned long>(q));
    if (is_prime(nq)) return PrimePowerQ{q, 1};
    for (unsigned f = 2; f <= 62; ++f) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), nq.mpz().get_mpz_t(), f) == 0) continue; // not exact
        Natural r = Natural::from_mpz(root);
        if (is_prime(r)) return PrimePowerQ{r.to_ulong(), f};
    }
    return std::nullopt;
}

bool is_exceptional_family(Family f) {
    switch (f) {
        case Family::g2:
        case Family::f4:
        case Family::e6:
        case Family::e7:
        case Family::e8:
        case Family::tw_e6:
        case Family::tr_d4:
        case Family::tw_b2:
        case Family::tw_g2:
        case Family::tw_f4:
            return true;
        default:
            return false;
    }
}

unsigned fixed_rank(Family f) {
    switch (f) {
        case Family::g2:
        case Family::tw_g2:
        case Family::tw_b2: return 2;
        case Family::f4:
        case Family::tw_f4:
        case Family::tr_d4: return 4;
        case Family::e6:
        case Family::tw_e6: return 6;
        case Family::e7: return 7;
        case Family::e8: return 8;
        default: return 0;
    }
}

unsigned min_rank(Family f) {
    switch (f) {
        case Family::lie_a: return 1;
        case Family::lie_2a: return 2;
        case Family::lie_b: return 2;
        case Family::lie_c: return 2; // C_2(q) canonicalizes to B_2(q)
        case Family::lie_d: return 4; // enumeration range; D_3 = A_3
        case Family::lie_2d: return 4;
        default: return fixed_rank(f);
    }
}

// exponent of q in |S| as a function of the rank
unsigned long q_exponent(Family f, unsigned rank) {
    switch (f) {
        case Family::lie_a:
        case Family::lie_2a: return static_cast<unsigned long>(rank) * (rank + 1) / 2;
        case Family::lie_b:
        case Family::lie_c: return static_cast<unsigned long>(rank) * rank;
        case Family::lie_d:
        case Family::lie_2d: return static_cast<unsigned long>(rank) * (rank - 1);
        case Family::g2: return 6;
        case Family::f4: return 24;
        case Family::e6:
        case Family::tw_e6: return 36;
        case Family::e7: return 63;
        case Family::e8: return 120;
        case Family::tr_d4: return 12;
        case Family::tw_b2: return 2;
        case Family::tw_g2: return 3;
        case Family::tw_f4: return 12;
        default: return 0;
    }
}

struct ExceptionalShape {
    std::vector<std::pair<unsigned, int>> factors; // (e, sign) for q^e + sign
    bool q8q41 = false;                            // 3D4's q^8 + q^4 + 1
    std::string divisor;                           // "1", "gcd(2,q-1)", ...
};

struct ConstantsDb {
    std::map<std::string, Factorization> sporadic;
    std::map<Family, ExceptionalShape> exceptional;
    Factorization tits_order;
};

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Family exceptional_family_by_name(const std::string& s) {
    if (s == "G2") return Family::g2;
    if (s == "F4") return Family::f4;
    if (s == "E6") return Family::e6;
    if (s == "E7") return Family::e7;
    if (s == "E8") return Family::e8;
    if (s == "2E6") return Family::tw_e6;
    if (s == "3D4") return Family::tr_d4;
    if (s == "2B2") return Family::tw_b2;
    if (s == "2G2") return Family::tw_g2;
    if (s == "2F4") return Family::tw_f4;
    throw domain_error("constants: unknown family " + s);
}

ConstantsDb load_constants(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("constants: cannot open " + path, 0);
    std::string line;
    std::size_t lineno = 0;
    std::string expected_checksum;
    std::string body;
    std::vector<std::pair<std::size_t, std::string>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (expected_checksum.empty() && line.rfind("# fnv1a64 ", 0) == 0) {
            expected_checksum = line.substr(10);
            continue;
        }
        if (expected_checksum.empty()) {
            if (line.empty() || line[0] == '#') continue;
            throw parse_error("constants: checksum header missing", lineno);
        }
        body += line;
        body += '\n';
        if (line.empty() || line[0] == '#') continue;
        rows.emplace_back(lineno, line);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
    if (expected_checksum != buf)
        throw integrity_error("constants: checksum mismatch in " + path + " (computed " + buf +
                              ", recorded " + expected_checksum + ")");

    ConstantsDb db;
    for (const auto& [ln, row] : rows) {
        std::istringstream ss(row);
        std::string kind;
        ss >> kind;
        if (kind == "sporadic") {
            std::string name, assign, order;
            ss >> name >> assign >> order;
            if (assign != ":=") throw parse_error("constants: expected ':='", ln);
            Factorization f = Factorization::parse(order);
            for (const auto& pp : f.prime_powers())
                if (!is_prime(pp.prime))
                    throw integrity_error("constants: non-prime in order of " + name);
            db.sporadic[name] = std::move(f);
        } else if (kind == "tits") {
            std::string assign, order;
            ss >> assign >> order;
            if (assign != ":=") throw parse_error("constants: expected ':='", ln);
            db.tits_order = Factorization::parse(order);
        } else if (kind == "lie") {
            std::string fam, assign, npart, fpart, dpart;
            ss >> fam >> assign >> npart >> fpart >> dpart;
            if (assign != ":=") throw parse_error("constants: expected ':='", ln);
            if (npart.rfind("N=", 0) != 0 || fpart.rfind("F=", 0) != 0 || dpart.rfind("D=", 0) != 0)
                throw parse_error("constants: expected N= F= D= fields", ln);
            Family family = exceptional_family_by_name(fam);
            ExceptionalShape shape;
            unsigned long n_declared = std::stoul(npart.substr(2));
            std::string flist = fpart.substr(2);
            std::size_t pos = 0;
            while (pos < flist.size()) {
                std::size_t end = flist.find(',', pos);
                if (end == std::string::npos) end = flist.size();
                std::string tok = flist.substr(pos, end - pos);
                if (tok == "q^8+q^4+1") {
                    shape.q8q41 = true;
                } else {
                    unsigned e = 1;
                    std::size_t at = 1;
                    if (tok.size() > 1 && tok[1] == '^') {
                        std::size_t sign_pos = tok.find_first_of("+-", 2);
                        if (tok[0] != 'q' || sign_pos == std::string::npos)
                            throw parse_error("constants: bad factor " + tok, ln);
                        e = static_cast<unsigned>(std::stoul(tok.substr(2, sign_pos - 2)));
                        at = sign_pos;
                    } else if (tok.empty() || tok[0] != 'q') {
                        throw parse_error("constants: bad factor " + tok, ln);
                    }
                    if (tok.substr(at) != "-1" && tok.substr(at) != "+1")
                        throw parse_error("constants: bad factor " + tok, ln);
                    shape.factors.emplace_back(e, tok[at] == '-' ? -1 : +1);
                }
                pos = end + (end < flist.size() ? 1 : 0);
            }
            shape.divisor = dpart.substr(2);
            if (n_declared != q_exponent(family, fixed_rank(family)))
                throw integrity_error("constants: N mismatch for " + fam);
            db.exceptional[family] = std::move(shape);
        } else {
            throw parse_error("constants: unknown kind '" + kind + "'", ln);
        }
    }
    return db;
}

const ConstantsDb& constants_db() {
    static const ConstantsDb db = load_constants(data_file("group_constants.txt"));
    return db;
}

const std::array<const char*, 26> kSporadicNames = {
    "M_11", "M_12", "M_22", "M_23", "M_24", "J_1",   "J_2",   "J_3",    "J_4",
    "Co_1", "Co_2", "Co_3", "Fi_22", "Fi_23", "Fi_24'", "HS",  "McL",   "He",
    "Ru",   "Suz",  "ON",   "Ly",   "Th",    "HN",    "B",    "M"};

} // namespace

bool is_valid_simple(const GroupId& id, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    switch (id.family) {
        case Family::alternating:
            if (id.rank < 5) return fail("Alt_m is simple only for m >= 5");
            return true;
        case Family::sporadic: {
            for (const char* n : kSporadicNames)
                if (id.sporadic_name == n) return true;
            return fail("unknown sporadic group '" + id.sporadic_name + "'");
        }
        case Family::tits:
            return true;
        default:
            break;
    }
    auto pp = split_prime_power(id.q);
    if (!pp) return fail("q = " + std::to_string(id.q) + " is not a prime power");
    unsigned long long s = pp->s;
    unsigned f = pp->f;
    switch (id.family) {
        case Family::lie_a:
            if (id.rank < 1) return fail("A_n needs n >= 1");
            if (id.rank == 1 && (id.q == 2 || id.q == 3))
                return fail("L_2(2) and L_2(3) are solvable");
            return true;
        case Family::lie_2a:
            if (id.rank < 2) return fail("2A_n needs n >= 2");
            if (id.rank == 2 && id.q == 2) return fail("U_3(2) is solvable");
            return true;
        case Family::lie_b:
            if (id.rank < 2) return fail("B_n needs n >= 2");
            if (id.rank == 2 && id.q == 2)
                return fail("B_2(2) is not simple (its derived group is Alt_6)");
            return true;
        case Family::lie_c:
            if (id.rank < 2) return fail("C_n needs n >= 2");
            if (id.rank == 2 && id.q == 2)
                return fail("C_2(2) is not simple (its derived group is Alt_6)");
            return true;
        case Family::lie_d:
            if (id.rank < 3) return fail("D_n needs n >= 3 (D_3 = A_3)");
            return true;
        case Family::lie_2d:
            if (id.rank < 3) return fail("2D_n needs n >= 3 (2D_3 = 2A_3)");
            return true;
        case Family::g2:
            if (id.q < 3) return fail("G_2(2) is not simple (its derived group is U_3(3))");
            return true;
        case Family::tw_b2:
            if (s != 2 || f % 2 == 0 || f < 3) return fail("2B_2(q) needs q = 2^(2m+1) >= 8");
            return true;
        case Family::tw_g2:
            if (s != 3 || f % 2 == 0 || f < 3)
                return fail("2G_2(q) needs q = 3^(2m+1) >= 27 (2G_2(3)' = L_2(8))");
            return true;
        case Family::tw_f4:
            if (s != 2 || f % 2 == 0) return fail("2F_4(q) needs q = 2^(2m+1)");
            if (f == 1)
                return fail("2F_4(2) is not simple (its derived group is the Tits group)");
            return true;
        case Family::f4:
        case Family::e6:
        case Family::e7:
        case Family::e8:
        case Family::tw_e6:
        case Family::tr_d4:
            return true;
        default:
            return fail("unhandled family");
    }
}

GroupId canonicalize(const GroupId& id) {
    GroupId g = id;
    for (int pass = 0; pass < 3; ++pass) {
        if (g.family == Family::lie_a && g.rank == 1 && (g.q == 4 || g.q == 5))
            g = GroupId::alternating(5);
        else if (g.family == Family::lie_a && g.rank == 1 && g.q == 9)
            g = GroupId::alternating(6);
        else if (g.family == Family::lie_a && g.rank == 3 && g.q == 2)
            g = GroupId::alternating(8);
        else if (g.family == Family::lie_a && g.rank == 2 && g.q == 2)
            g = GroupId::lie(Family::lie_a, 1, 7);
        else if (g.family == Family::lie_c && g.rank == 2)
            g = GroupId::lie(Family::lie_b, 2, g.q);
        else if (g.family == Family::lie_c && (g.q & (g.q - 1)) == 0)
            g = GroupId::lie(Family::lie_b, g.rank, g.q); // C_n(2^f) = B_n(2^f)
        else if (g.family == Family::lie_b && g.rank == 2 && g.q == 3)
            g = GroupId::lie(Family::lie_2a, 3, 2); // B_2(3) = U_4(2)
        else if (g.family == Family::lie_d && g.rank == 3)
            g = GroupId::lie(Family::lie_a, 3, g.q);
        else if (g.family == Family::lie_2d && g.rank == 3)
            g = GroupId::lie(Family::lie_2a, 3, g.q);
        else
            break;
    }
    return g;
}

std::string display_name(const GroupId& id) {
    auto qs = std::to_string(id.q);
    switch (id.family) {
        case Family::alternating: return "A_" + std::to_string(id.rank);
        case Family::sporadic: return id.sporadic_name;
        case Family::tits: return "2F_4(2)'";
        case Family::lie_a: return "L_" + std::to_string(id.rank + 1) + "(" + qs + ")";
        case Family::lie_2a: return "U_" + std::to_string(id.rank + 1) + "(" + qs + ")";
        case Family::lie_b: return "B_" + std::to_string(id.rank) + "(" + qs + ")";
        case Family::lie_c: return "C_" + std::to_string(id.rank) + "(" + qs + ")";
        case Family::lie_d: return "O_" + std::to_string(2 * id.rank) + "^+(" + qs + ")";
        case Family::lie_2d: return "O_" + std::to_string(2 * id.rank) + "^-(" + qs + ")";
        case Family::g2: return "G_2(" + qs + ")";
        case Family::f4: return "F_4(" + qs + ")";
        case Family::e6: return "E_6(" + qs + ")";
        case Family::e7: return "E_7(" + qs + ")";
        case Family::e8: return "E_8(" + qs + ")";
        case Family::tw_e6: return "2E_6(" + qs + ")";
        case Family::tr_d4: return "3D_4(" + qs + ")";
        case Family::tw_b2: return "Sz(" + qs + ")";
        case Family::tw_g2: return "R(" + qs + ")";
        case Family::tw_f4: return "2F_4(" + qs + ")";
    }
    return "?";
}

namespace {

std::optional<unsigned long long> parse_q(const std::string& text) {
    std::size_t caret = text.find('^');
    std::string base = caret == std::string::npos ? text : text.substr(0, caret);
    if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    unsigned long long b = std::stoull(base);
    if (b < 2) return std::nullopt;
    if (caret == std::string::npos) return b;
    std::string es = text.substr(caret + 1);
    if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    unsigned long e = std::stoul(es);
    unsigned long long v = 1;
    for (unsigned long i = 0; i < e; ++i) {
        if (v > (1ull << 62) / b) return std::nullopt;
        v *= b;
    }
    return v;
}

} // namespace

std::optional<GroupId> parse_group_name(const std::string& raw) {
    const std::string& text = raw;
    for (const char* n : kSporadicNames) {
        std::string name(n);
        std::string bare = name;
        bare.erase(std::remove(bare.begin(), bare.end(), '_'), bare.end());
        if (text == name || text == bare) return GroupId::sporadic_group(name);
    }
    if (text == "2F_4(2)'" || text == "2F4(2)'" || text == "T" || text == "Tits")
        return GroupId::tits_group();

    std::size_t paren = text.find('(');
    if (paren == std::string::npos) {
        std::string t = text;
        if (t.rfind("Alt", 0) == 0)
            t = t.substr(3);
        else if (!t.empty() && t[0] == 'A')
            t = t.substr(1);
        else
            return std::nullopt;
        if (!t.empty() && t[0] == '_') t = t.substr(1);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return GroupId::alternating(static_cast<unsigned>(std::stoul(t)));
    }

    if (text.back() != ')') return std::nullopt;
    std::string head = text.substr(0, paren);
    std::string qtext = text.substr(paren + 1, text.size() - paren - 2);
    auto q = parse_q(qtext);
    if (!q) return std::nullopt;

    if (head == "Sz") return GroupId::lie(Family::tw_b2, 2, *q);
    if (head == "R" || head == "Ree") return GroupId::lie(Family::tw_g2, 2, *q);

    unsigned twist = 1;
    std::size_t pos = 0;
    if (pos + 1 < head.size() && (head[pos] == '2' || head[pos] == '3') &&
        std::isalpha(static_cast<unsigned char>(head[pos + 1]))) {
        twist = head[pos] - '0';
        ++pos;
    }
    if (pos >= head.size() || !std::isalpha(static_cast<unsigned char>(head[pos])))
        return std::nullopt;
    char letter = head[pos++];
    char sign = 0;
    if (pos < head.size() && head[pos] == '_') ++pos;
    std::string sub;
    while (pos < head.size() && std::isdigit(static_cast<unsigned char>(head[pos]))) sub += head[pos++];
    if (pos + 1 < head.size() && head[pos] == '^' && (head[pos + 1] == '+' || head[pos + 1] == '-')) {
        sign = head[pos + 1];
        pos += 2;
    } else if (pos < head.size() && (head[pos] == '+' || head[pos] == '-')) {
        sign = head[pos++];
    }
    if (pos != head.size() || sub.empty()) return std::nullopt;
    unsigned n = static_cast<unsigned>(std::stoul(sub));

    auto lie = [&](Family f, unsigned rank) { return std::optional(GroupId::lie(f, rank, *q)); };
    switch (letter) {
        case 'L': return twist == 1 && n >= 2 ? lie(Family::lie_a, n - 1) : std::nullopt;
        case 'U': return twist == 1 && n >= 3 ? lie(Family::lie_2a, n - 1) : std::nullopt;
        case 'A':
            if (twist == 1) return lie(Family::lie_a, n);
            if (twist == 2) return lie(Family::lie_2a, n);
            return std::nullopt;
        case 'B':
            if (twist == 1) return lie(Family::lie_b, n);
            if (twist == 2 && n == 2) return lie(Family::tw_b2, 2);
            return std::nullopt;
        case 'C': return twist == 1 ? lie(Family::lie_c, n) : std::nullopt;
        case 'S':
            if (twist != 1 || n < 4 || n % 2) return std::nullopt;
            return lie(Family::lie_c, n / 2); // S_{2m}(q) = Sp_{2m}(q)
        case 'O':
            if (twist != 1) return std::nullopt;
            if (sign == '+') return n % 2 ? std::nullopt : lie(Family::lie_d, n / 2);
            if (sign == '-') return n % 2 ? std::nullopt : lie(Family::lie_2d, n / 2);
            return n % 2 ? lie(Family::lie_b, n / 2) : std::nullopt; // O_{2m+1}(q)
        case 'D':
            if (twist == 1) return lie(Family::lie_d, n);
            if (twist == 2) return lie(Family::lie_2d, n);
            if (twist == 3 && n == 4) return lie(Family::tr_d4, 4);
            return std::nullopt;
        case 'G':
            if (n != 2) return std::nullopt;
            if (twist == 1) return lie(Family::g2, 2);
            if (twist == 2) return lie(Family::tw_g2, 2);
            return std::nullopt;
        case 'F':
            if (n != 4) return std::nullopt;
            if (twist == 1) return lie(Family::f4, 4);
            if (twist == 2) return lie(Family::tw_f4, 4);
            return std::nullopt;
        case 'E':
            if (twist == 1 && n == 6) return lie(Family::e6, 6);
            if (twist == 1 && n == 7) return lie(Family::e7, 7);
            if (twist == 1 && n == 8) return lie(Family::e8, 8);
            if (twist == 2 && n == 6) return lie(Family::tw_e6, 6);
            return std::nullopt;
        default: return std::nullopt;
    }
}

namespace {

// (1/d) * q^N * prod (q^{e_i} +- 1): each cyclotomic-style term is factored
// on its own so the factoring jobs stay small, then d's exponents are
// subtracted from the merged product.
Factorization lie_order(unsigned long long qv, unsigned long npow,
                        const std::vector<std::pair<unsigned, int>>& terms,
                        const Natural& divisor, const std::vector<Natural>& extra_terms,
                        const FactorCache* cache) {
    auto pq = split_prime_power(qv);
    Natural q(static_cast<unsigned long>(qv));
    Factorization result;
    result.mul_prime(Natural(static_cast<unsigned long>(pq->s)),
                     static_cast<unsigned>(pq->f * npow));
    for (const auto& [e, sign] : terms) {
        Natural t = pow(q, e);
        t = sign < 0 ? t - Natural(1) : t + Natural(1);
        result = result.times(factor(t, cache));
    }
    for (const Natural& t : extra_terms) result = result.times(factor(t, cache));
    Factorization dv = factor(divisor, cache);
    Factorization reduced;
    for (const auto& pp : result.prime_powers()) {
        unsigned sub = dv.exponent_of(pp.prime);
        if (sub > pp.exponent)
            throw domain_error("lie_order: divisor does not divide the order product");
        if (pp.exponent - sub) reduced.mul_prime(pp.prime, pp.exponent - sub);
    }
    for (const auto& pp : dv.prime_powers())
        if (pp.exponent > result.exponent_of(pp.prime))
            throw domain_error("lie_order: divisor does not divide the order product");
    return reduced;
}

} // namespace

Factorization order_simple(const GroupId& id, const FactorCache* cache) {
    std::string why;
    if (!is_valid_simple(id, &why)) throw domain_error("order_simple: " + why);

    if (id.family == Family::alternating) {
        // m!/2 via Legendre's formula
        Factorization f;
        for (unsigned long p : small_primes()) {
            if (p > id.rank) break;
            unsigned long v = 0;
            for (unsigned long pk = p; pk <= id.rank; pk *= p) {
                v += id.rank / pk;
                if (pk > id.rank / p) break;
            }
            if (p == 2) --v;
            if (v) f.mul_prime(Natural(p), static_cast<unsigned>(v));
        }
        return f;
    }
    if (id.family == Family::sporadic) return constants_db().sporadic.at(id.sporadic_name);
    if (id.family == Family::tits) return constants_db().tits_order;

    Natural q(static_cast<unsigned long>(id.q));
    unsigned n = id.rank;
    unsigned long npow = q_exponent(id.family, n);
    std::vector<std::pair<unsigned, int>> terms;
    Natural divisor(1);
    std::vector<Natural> extra;

    switch (id.family) {
        case Family::lie_a:
            for (unsigned i = 2; i <= n + 1; ++i) terms.emplace_back(i, -1);
            divisor = gcd(Natural(n + 1), q - Natural(1));
            break;
        case Family::lie_2a:
            // q^i - (-1)^i: minus for even i, plus for odd i
            for (unsigned i = 2; i <= n + 1; ++i) terms.emplace_back(i, i % 2 ? +1 : -1);
            divisor = gcd(Natural(n + 1), q + Natural(1));
            break;
        case Family::lie_b:
        case Family::lie_c:
            for (unsigned i = 1; i <= n; ++i) terms.emplace_back(2 * i, -1);
            divisor = gcd(Natural(2), q - Natural(1));
            break;
        case Family::lie_d:
            for (unsigned i = 1; i + 1 <= n; ++i) terms.emplace_back(2 * i, -1);
            terms.emplace_back(n, -1);
            divisor = gcd(Natural(4), pow(q, n) - Natural(1));
            break;
        case Family::lie_2d:
            for (unsigned i = 1; i + 1 <= n; ++i) terms.emplace_back(2 * i, -1);
            terms.emplace_back(n, +1);
            divisor = gcd(Natural(4), pow(q, n) + Natural(1));
            break;
        default: {
            const ExceptionalShape& shape = constants_db().exceptional.at(id.family);
            terms = shape.factors;
            if (shape.q8q41) extra.push_back(pow(q, 8) + pow(q, 4) + Natural(1));
            if (shape.divisor == "1")
                divisor = Natural(1);
            else if (shape.divisor == "gcd(2,q-1)")
                divisor = gcd(Natural(2), q - Natural(1));
            else if (shape.divisor == "gcd(3,q-1)")
                divisor = gcd(Natural(3), q - Natural(1));
            else if (shape.divisor == "gcd(3,q+1)")
                divisor = gcd(Natural(3), q + Natural(1));
            else
                throw domain_error("order_simple: unknown divisor " + shape.divisor);
            break;
        }
    }
    return lie_order(id.q, npow, terms, divisor, extra, cache);
}

Factorization order_Ln2(unsigned n, const FactorCache* cache) {
    if (n < 2) throw domain_error("order_Ln2: n must be >= 2");
    Factorization f;
    f.mul_prime(Natural(2), n * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i) f = f.times(factor(mersenne(i), cache));
    return f;
}

Factorization order_aut_Ln2(unsigned n, const FactorCache* cache) {
    if (n < 3) throw domain_error("order_aut_Ln2: needs n >= 3 (Aut(L_2(2)) = L_2(2))");
    Factorization f = order_Ln2(n, cache);
    f.mul_prime(Natural(2), 1);
    return f;
}

Natural out_order_Lnq(unsigned n, const Natural& q) {
    if (n < 2) throw domain_error("out_order_Lnq: n must be >= 2");
    if (!q.fits_ulong()) throw domain_error("out_order_Lnq: q out of range");
    auto pp = split_prime_power(q.to_ulong());
    if (!pp) throw domain_error("out_order_Lnq: q is not a prime power");
    GroupId id = GroupId::lie(Family::lie_a, n - 1, q.to_ulong());
    std::string why;
    if (!is_valid_simple(id, &why)) throw domain_error("out_order_Lnq: " + why);
    Natural base = gcd(Natural(n), q - Natural(1)) * Natural(pp->f);
    return n == 2 ? base : base * Natural(2); // A_1 has no graph automorphism
}

OrderComponents s_and_components(unsigned n, const FactorCache* cache) {
    if (n < 2) throw domain_error("s_and_components: n must be >= 2");
    PrimeGraph g = build_gk_Ln2(n, cache);
    Factorization order = order_Ln2(n, cache);
    std::vector<std::vector<Natural>> comps = connected_components(g);
    OrderComponents oc;
    oc.s = static_cast<unsigned>(comps.size());
    for (const auto& comp : comps) {
        OrderComponent c;
        c.primes = comp;
        c.part = Natural(1);
        for (const Natural& p : comp) c.part *= pow(p, order.exponent_of(p));
        oc.components.push_back(std::move(c));
    }
    return oc;
}

namespace {

unsigned odd_prime_for(unsigned n, const char* who) {
    if (n >= 3 && n % 2 == 1 && is_prime(Natural(n))) return n;
    if (n >= 4 && is_prime(Natural(n - 1))) return n - 1;
    throw domain_error(std::string(who) + ": n must be p or p+1 for an odd prime p");
}

} // namespace

OrderComponents oc_aut(unsigned n, const FactorCache* cache) {
    unsigned p = odd_prime_for(n, "oc_aut");
    if (!lucas_lehmer(p))
        throw domain_error("oc_aut: 2^" + std::to_string(p) + " - 1 is composite");
    Factorization m1;
    m1.mul_prime(Natural(2), n * (n - 1) / 2 + 1);
    for (unsigned i = 2; i + 1 <= p; ++i) m1 = m1.times(factor(mersenne(i), cache));
    if (n == p + 1) m1 = m1.times(factor(mersenne(p + 1), cache));
    Natural m2 = mersenne(p);
    OrderComponents oc;
    oc.s = 2;
    oc.components.push_back({m1.primes(), m1.value()});
    oc.components.push_back({{m2}, m2});
    return oc;
}

Factorization centralizer_sigma_order(unsigned n) {
    unsigned p = odd_prime_for(n, "centralizer_sigma_order");
    Factorization f;
    unsigned half = (n == p) ? (p - 1) / 2 : (p + 1) / 2;
    f.mul_prime(Natural(2), half * half);
    for (unsigned i = 2; i + 1 <= p; i += 2) f = f.times(factor(mersenne(i)));
    if (n == p + 1) f = f.times(factor(mersenne(p + 1)));
    return f;
}

std::vector<GroupOrderEntry> db_enumerate_dividing(const Factorization& target,
                                                   const std::vector<Natural>& required_primes,
                                                   const FactorCache* cache) {
    if (target.value() < Natural(60))
        throw domain_error("db_enumerate_dividing: target must be >= 60");

    std::set<GroupId> seen;
    std::vector<GroupOrderEntry> out;
    auto consider = [&](const GroupId& raw) {
        GroupId id = canonicalize(raw);
        if (!is_valid_simple(id)) return;
        if (seen.count(id)) return;
        Factorization order = order_simple(id, cache);
        if (!order.divides(target)) return;
        for (const Natural& p : required_primes)
            if (!order.contains(p)) return;
        seen.insert(id);
        out.push_back({id, std::move(order)});
    };

    // Alternating: Alt_m brings in every prime <= m, so the degree is capped
    // by the smallest prime absent from the target.
    unsigned long alt_cap = 0;
    bool cap_found = false;
    for (unsigned long p : small_primes()) {
        if (!target.contains(Natural(p))) {
            alt_cap = p - 1;
            cap_found = true;
            break;
        }
    }
    if (!cap_found)
        throw domain_error("db_enumerate_dividing: every prime below 10^6 divides the target");
    for (unsigned long m = 5; m <= alt_cap; ++m)
        consider(GroupId::alternating(static_cast<unsigned>(m)));

    for (const char* name : kSporadicNames) consider(GroupId::sporadic_group(name));
    consider(GroupId::tits_group());

    // Lie families: the defining prime s contributes q^N = s^(f*N) to the
    // order, so s must divide the target, f*N(min rank) <= v_s(target)
    // bounds f, and f*N(rank) <= v_s(target) bounds the rank. Every loop
    // below is finite and the checks afterwards are the full divisibility.
    const Family families[] = {Family::lie_a, Family::lie_2a, Family::lie_b, Family::lie_c,
                               Family::lie_d, Family::lie_2d, Family::g2,    Family::f4,
                               Family::e6,    Family::e7,     Family::e8,    Family::tw_e6,
                               Family::tr_d4, Family::tw_b2,  Family::tw_g2, Family::tw_f4};
    for (const auto& pp : target.prime_powers()) {
        if (!pp.prime.fits_ulong()) continue; // q^N with q >= 2^64 cannot divide any sane target
        unsigned long long s = pp.prime.to_ulong();
        unsigned long vs = pp.exponent;
        for (Family fam : families) {
            unsigned long minN = q_exponent(fam, min_rank(fam));
            unsigned long long q = 1;
            for (unsigned long f = 1; f * minN <= vs; ++f) {
                if (q > (1ull << 62) / s) break;
                q *= s;
                if (is_exceptional_family(fam)) {
                    consider(GroupId::lie(fam, fixed_rank(fam), q));
                } else {
                    for (unsigned rank = min_rank(fam); f * q_exponent(fam, rank) <= vs; ++rank)
                        consider(GroupId::lie(fam, rank, q));
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const GroupOrderEntry& a, const GroupOrderEntry& b) {
        Natural va = a.order.value(), vb = b.order.value();
        if (va != vb) return va < vb;
        return display_name(a.id) < display_name(b.id);
    });
    return out;
}

} // namespace gk
