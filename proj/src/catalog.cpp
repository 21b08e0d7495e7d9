#include "hurwitz/catalog.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

// Isomorphism class counts for orders 1..128 (the classification of small
// groups); index 0 unused.
constexpr int kGroupCounts[129] = {
    0,  1,  1,  1,  2,  1,  2,  1,  5,    2,  2,  // 1..10
    1,  5,  1,  2,  1,  14, 1,  5,  1,    5,      // 11..20
    2,  2,  1,  15, 2,  2,  5,  4,  1,    4,      // 21..30
    1,  51, 1,  2,  1,  14, 1,  2,  2,    14,     // 31..40
    1,  6,  1,  4,  2,  2,  1,  52, 2,    5,      // 41..50
    1,  5,  1,  15, 2,  13, 2,  2,  1,    13,     // 51..60
    1,  2,  4,  267, 1, 4,  1,  5,  1,    4,      // 61..70
    1,  50, 1,  2,  3,  4,  1,  6,  1,    52,     // 71..80
    15, 2,  1,  15, 1,  2,  1,  12, 1,    10,     // 81..90
    1,  4,  2,  2,  1,  231, 1, 5,  2,    16,     // 91..100
    1,  4,  1,  14, 2,  2,  1,  45, 1,    6,      // 101..110
    2,  43, 1,  6,  1,  5,  4,  2,  1,    47,     // 111..120
    2,  2,  1,  4,  5,  16, 1,  2328,             // 121..128
};

struct Tokenizer {
    std::ifstream in;
    std::string path;
    int lineno = 0;

    explicit Tokenizer(const std::string& p) : in(p), path(p) {}

    // next non-empty line with comments stripped, or false at EOF
    bool next_line(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            out = line.substr(a, b - a + 1);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(path + ":" + std::to_string(lineno) + ": " + msg);
    }
};

} // namespace

const std::vector<CatalogEntry>& Catalog::groups_of_order(int d) const {
    auto it = by_order.find(d);
    if (it == by_order.end())
        throw missing_order("no catalog entry for order " + std::to_string(d));
    return it->second;
}

std::vector<CatalogEntry> load_order_file(const std::string& path, int expect_order) {
    Tokenizer tok(path);
    if (!tok.in) throw missing_order("cannot open " + path);
    std::string line;
    if (!tok.next_line(line)) tok.fail("missing header line");
    int order = 0, count = -1;
    {
        std::istringstream ss(line);
        std::string w1, w3;
        if (!(ss >> w1 >> order >> w3 >> count) || w1 != "order" || w3 != "count")
            tok.fail("expected 'order <d> count <k>', got '" + line + "'");
    }
    if (order != expect_order)
        tok.fail("file declares order " + std::to_string(order) + ", expected " +
                 std::to_string(expect_order));
    std::vector<CatalogEntry> entries;
    while (tok.next_line(line)) {
        std::istringstream ss(line);
        std::string w1, w2, w4;
        CatalogEntry e;
        e.order = order;
        if (!(ss >> w1 >> e.index >> w2 >> e.label >> w4 >> e.degree) || w1 != "group" ||
            w2 != "label" || w4 != "degree")
            tok.fail("expected 'group <i> label <name> degree <n>', got '" + line + "'");
        if (e.index != static_cast<int>(entries.size()))
            tok.fail("group indices must be consecutive from 0");
        if (e.degree < 1) tok.fail("degree must be positive");
        bool closed = false;
        while (tok.next_line(line)) {
            if (line == "end") { closed = true; break; }
            try {
                e.generators.push_back(parse_cycles(line, e.degree));
            } catch (const invalid_permutation& ex) {
                tok.fail(ex.what());
            }
        }
        if (!closed) tok.fail("missing 'end' for group " + std::to_string(e.index));
        try {
            e.group = from_permutation_generators(e.degree, e.generators, order);
        } catch (const closure_cap_exceeded&) {
            throw order_mismatch(path + ": group " + std::to_string(e.index) +
                                 " generates more than " + std::to_string(order) + " elements");
        }
        if (e.group.n != order)
            throw order_mismatch(path + ": group " + std::to_string(e.index) + " has order " +
                                 std::to_string(e.group.n) + ", expected " + std::to_string(order));
        entries.push_back(std::move(e));
    }
    if (count != static_cast<int>(entries.size()))
        throw count_mismatch(path + ": header announces " + std::to_string(count) +
                             " groups, file contains " + std::to_string(entries.size()));
    return entries;
}

Catalog load_catalog(const std::string& dir, int min_order, int max_order) {
    Catalog cat;
    for (int d = min_order; d <= max_order; ++d) {
        std::string path = dir + "/order_" + std::to_string(d) + ".groups";
        cat.by_order[d] = load_order_file(path, d);
    }
    return cat;
}

void write_order_file(const std::string& path, int order,
                      const std::vector<CatalogEntry>& entries) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << "order " << order << " count " << entries.size() << "\n";
    for (const CatalogEntry& e : entries) {
        out << "group " << e.index << " label " << e.label << " degree " << e.degree << "\n";
        for (const Perm& p : e.generators) out << format_cycles(p) << "\n";
        out << "end\n";
    }
}

int known_group_count(int order) {
    if (order < 1 || order > 128) return -1;
    return kGroupCounts[order];
}

std::string group_fingerprint(const FiniteGroup& g) {
    ConjugacyData cd = conjugacy_data(g);
    std::ostringstream out;
    out << g.n << "|";
    std::multiset<int> orders(g.elem_order.begin(), g.elem_order.end());
    for (int o : orders) out << o << ",";
    out << "|";
    // per class: order, size, order of the square's class, and the profile
    // of the class representative (power class sizes, centralizer shape)
    std::vector<std::array<int, 7>> prof = element_profiles(g);
    std::multiset<std::string> cls;
    for (int c = 0; c < cd.k; ++c) {
        std::ostringstream cs;
        cs << cd.class_order[c] << ":" << cd.class_size[c] << ":"
           << cd.class_order[cd.power_class(c, 2)];
        for (int v : prof[cd.reps[c]]) cs << ":" << v;
        cls.insert(cs.str());
    }
    for (const std::string& s : cls) out << s << ",";
    out << "|";
    for (int f : abelian_invariants(g)) out << f << ",";
    out << "|";
    // shapes of the center and of the derived subgroup
    {
        std::vector<int> zc = center(g), dc = derived_subgroup(g);
        FiniteGroup sz = subgroup_as_group(g, zc), sd = subgroup_as_group(g, dc);
        for (int f : abelian_invariants(sz)) out << f << ",";
        out << "|" << dc.size() << ":";
        if (sd.is_abelian()) {
            out << "a";
            for (int f : abelian_invariants(sd)) out << f << ",";
        } else {
            std::multiset<int> od(sd.elem_order.begin(), sd.elem_order.end());
            out << "n";
            for (int o : od) out << o << ",";
        }
    }
    out << "|" << wl_coloring(g).certificate;
    return out.str();
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    return !find_isomorphism(a, b).empty();
}

CatalogReport verify_catalog(const std::string& dir, int max_order) {
    CatalogReport report;
    for (int d = 1; d <= max_order; ++d) {
        std::string path = dir + "/order_" + std::to_string(d) + ".groups";
        std::vector<CatalogEntry> entries = load_order_file(path, d);
        int expect = known_group_count(d);
        if (expect >= 0 && static_cast<int>(entries.size()) != expect)
            throw count_mismatch(path + ": classification has " + std::to_string(expect) +
                                 " groups of order " + std::to_string(d) + ", file has " +
                                 std::to_string(entries.size()));
        // cheap invariants, then explicit isomorphism search on collisions
        std::vector<std::string> prints;
        prints.reserve(entries.size());
        for (const CatalogEntry& e : entries) prints.push_back(group_fingerprint(e.group));
        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j) {
                if (prints[i] != prints[j]) continue;
                bool iso = isomorphic(entries[i].group, entries[j].group);
                if (iso)
                    throw error(path + ": groups " + std::to_string(i) + " and " +
                                std::to_string(j) + " are isomorphic duplicates");
                report.warnings.push_back(
                    "DuplicateSuspect: order " + std::to_string(d) + " groups " +
                    std::to_string(i) + " (" + entries[i].label + ") and " + std::to_string(j) +
                    " (" + entries[j].label + ") share all cheap invariants; explicit " +
                    "isomorphism search separates them");
            }
        ++report.orders_checked;
        report.groups_checked += static_cast<int>(entries.size());
    }
    return report;
}

FiniteGroup trivial_group() { return from_mul_table(1, {0}); }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw error("cyclic_group: order must be positive");
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i * n + j] = static_cast<uint16_t>((i + j) % n);
    return from_mul_table(n, std::move(table));
}

FiniteGroup abelian_group(const std::vector<int>& invariant_factors) {
    FiniteGroup g = trivial_group();
    for (int f : invariant_factors) g = direct_product(g, cyclic_group(f));
    return g;
}

FiniteGroup elementary_abelian_group(int p, int rank) {
    return abelian_group(std::vector<int>(rank, p));
}

FiniteGroup dihedral_group(int m) {
    if (m < 1) throw error("dihedral_group: parameter must be positive");
    int n = 2 * m;
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    auto idx = [m](int rot, int flip) { return flip * m + rot; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < 2; ++l) {
                    int rot = j == 0 ? (i + k) % m : ((i - k) % m + m) % m;
                    table[idx(i, j) * n + idx(k, l)] = static_cast<uint16_t>(idx(rot, (j + l) % 2));
                }
    return from_mul_table(n, std::move(table));
}

FiniteGroup dicyclic_group(int m) {
    if (m < 1) throw error("dicyclic_group: parameter must be positive");
    int half = 2 * m, n = 4 * m;
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    auto idx = [half](int a, int b) { return b * half + a; };
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < half; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (a^i b^j)(a^k b^l) with b a^k = a^-k b and b^2 = a^m
                    int rot = j == 0 ? i + k : i - k;
                    int flips = j + l;
                    if (flips == 2) rot += m;
                    rot = (rot % half + half) % half;
                    table[idx(i, j) * n + idx(k, l)] =
                        static_cast<uint16_t>(idx(rot, flips % 2));
                }
    return from_mul_table(n, std::move(table));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 6) throw error("symmetric_group: supported range is 1..6");
    if (n == 1) return trivial_group();
    std::vector<Perm> gens;
    Perm cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.push_back(cyc);
    if (n > 2) {
        Perm t = perm_identity(n);
        t[0] = 1;
        t[1] = 0;
        gens.push_back(t);
    }
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return from_permutation_generators(n, gens, fact);
}

FiniteGroup alternating_group(int n) {
    if (n < 3 || n > 6) throw error("alternating_group: supported range is 3..6");
    std::vector<Perm> gens{parse_cycles("(1 2 3)", n)};
    if (n > 3) {
        Perm c(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) c[i] = (i + 1) % n; // full n-cycle, even
        } else {
            c = perm_identity(n);
            for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1; // (2 3 ... n)
        }
        gens.push_back(c);
    }
    int half = 1;
    for (int i = 2; i <= n; ++i) half *= i;
    half /= 2;
    return from_permutation_generators(n, gens, half);
}

} // namespace hurwitz
