// Generates the small-groups catalog by induction on the order: every
// solvable group is a cyclic extension of a normal subgroup of prime index,
// so candidates of order n = p*m arise from triples (N, alpha, z) with N of
// order m, alpha in Aut(N), z in N, alpha(z) = z and alpha^p = conjugation
// by z.  The one insolvable group in range, A5 at order 60, is added by
// hand.  Candidates are reduced modulo isomorphism and the resulting counts
// are certified against the classification before anything is written.

#include "hurwitz/catalog.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/perm.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace hurwitz;

namespace {

// Aut(N) is only listed explicitly when it is small enough; the sole group
// below order 72 over the cap is (C2)^5 with |GL(5,2)| ~ 10^7.
constexpr long long kAutListCap = 1'000'000;

struct Classified {
    FiniteGroup g;
    std::multiset<int> order_multiset;
    std::string fingerprint;
};

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// (a, x) * (b, y) = (a+b, alpha^-b(x) y), with t^p = z folded in on wrap.
FiniteGroup build_extension(const FiniteGroup& nsub, const std::vector<int>& alpha, int p,
                            int z) {
    int m = nsub.n, n = p * m;
    // alpha^-b for b = 0..p-1
    std::vector<std::vector<int>> ainv(p);
    ainv[0].resize(m);
    for (int x = 0; x < m; ++x) ainv[0][x] = x;
    std::vector<int> inv_alpha(m);
    for (int x = 0; x < m; ++x) inv_alpha[alpha[x]] = x;
    for (int b = 1; b < p; ++b) {
        ainv[b].resize(m);
        for (int x = 0; x < m; ++x) ainv[b][x] = inv_alpha[ainv[b - 1][x]];
    }
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < p; ++a)
        for (int x = 0; x < m; ++x) {
            int row = a * m + x;
            for (int b = 0; b < p; ++b) {
                const std::vector<int>& shift = ainv[b];
                for (int y = 0; y < m; ++y) {
                    int c = a + b;
                    int w = nsub.mul(shift[x], y);
                    if (c >= p) {
                        c -= p;
                        w = nsub.mul(z, w);
                    }
                    table[static_cast<size_t>(row) * n + (b * m + y)] =
                        static_cast<uint16_t>(c * m + w);
                }
            }
        }
    return from_mul_table_unchecked(n, std::move(table));
}

bool is_elementary_abelian(const FiniteGroup& g, int& q, int& rank) {
    if (g.n == 1) return false;
    q = g.elem_order[1];
    for (int x = 1; x < g.n; ++x)
        if (g.elem_order[x] != q) return false;
    if (!g.is_abelian()) return false;
    rank = 0;
    for (int t = g.n; t > 1; t /= q) ++rank;
    return true;
}

long long gl_order(int q, int k) {
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    long long out = 1, qi = 1;
    for (int i = 0; i < k; ++i) {
        out *= qk - qi;
        if (out > 100LL * kAutListCap) return out; // avoid overflow, cap reached
        qi *= q;
    }
    return out;
}

// Involution (or identity) representatives of GL(5,2) up to conjugacy:
// I + a Jordan blocks J2, a = 0,1,2, acting on the 32 bit-vector elements.
// Requires the group elements to multiply by xor, which holds for the
// catalog's (C2)^5 built as an iterated direct product.
std::vector<std::vector<int>> gl52_involution_reps(const FiniteGroup& n32) {
    for (int x = 0; x < 32; ++x)
        for (int y = 0; y < 32; ++y)
            if (n32.mul(x, y) != (x ^ y))
                throw error("gengroups: (C2)^5 is not in xor form");
    std::vector<std::vector<int>> reps;
    for (int a = 0; a <= 2; ++a) {
        std::vector<int> alpha(32);
        for (int x = 0; x < 32; ++x) {
            int y = x;
            for (int blk = 0; blk < a; ++blk)
                if (x & (1 << (2 * blk + 1))) y ^= 1 << (2 * blk);
            alpha[x] = y;
        }
        reps.push_back(std::move(alpha));
    }
    return reps;
}

struct Generator {
    std::vector<std::vector<Classified>> by_order;

    void consider(std::vector<Classified>& classes, FiniteGroup cand) {
        std::multiset<int> om(cand.elem_order.begin(), cand.elem_order.end());
        std::string fp; // computed at most once
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            Classified& cl = classes[ci];
            if (cl.order_multiset != om) continue;
            if (fp.empty()) fp = group_fingerprint(cand);
            if (cl.fingerprint != fp) continue;
            try {
                if (!find_isomorphism(cl.g, cand).empty()) return; // duplicate
            } catch (const aut_cap_exceeded&) {
                std::cerr << "iso search budget: order " << cand.n << " candidate vs rep " << ci
                          << "\n";
                throw;
            }
        }
        if (fp.empty()) fp = group_fingerprint(cand);
        classes.push_back({std::move(cand), std::move(om), std::move(fp)});
    }

    std::vector<Classified> classify_order(int n) {
        std::vector<Classified> classes;
        if (n == 1) {
            consider(classes, trivial_group());
            return classes;
        }
        for (int p : prime_divisors(n)) {
            int m = n / p;
            for (const Classified& sub : by_order[m]) {
                const FiniteGroup& nsub = sub.g;
                int q = 0, rank = 0;
                bool big = is_elementary_abelian(nsub, q, rank) &&
                           gl_order(q, rank) > kAutListCap;
                if (big) {
                    if (q != 2 || rank != 5 || p != 2)
                        throw error("gengroups: unhandled large automorphism group");
                    for (const std::vector<int>& alpha : gl52_involution_reps(nsub))
                        for (int z = 0; z < nsub.n; ++z)
                            if (alpha[z] == z)
                                consider(classes, build_extension(nsub, alpha, p, z));
                    continue;
                }
                ConjugacyData cd = conjugacy_data(nsub);
                AutomorphismGroup aut;
                try {
                    aut = automorphism_group(nsub, cd, 500'000'000);
                } catch (const aut_cap_exceeded&) {
                    std::cerr << "aut listing budget: order " << n << " via subgroup of order "
                              << m << "\n";
                    throw;
                }
                bool abelian = nsub.is_abelian();
                for (const std::vector<int>& alpha : aut.maps) {
                    // alpha^p, needed for the compatibility condition
                    std::vector<int> ap(nsub.n);
                    for (int x = 0; x < nsub.n; ++x) ap[x] = x;
                    for (int i = 0; i < p; ++i) {
                        std::vector<int> nx(nsub.n);
                        for (int x = 0; x < nsub.n; ++x) nx[x] = alpha[ap[x]];
                        ap = std::move(nx);
                    }
                    if (abelian) {
                        bool ident = true;
                        for (int x = 0; x < nsub.n && ident; ++x)
                            if (ap[x] != x) ident = false;
                        if (!ident) continue;
                        for (int z = 0; z < nsub.n; ++z)
                            if (alpha[z] == z) consider(classes, build_extension(nsub, alpha, p, z));
                    } else {
                        for (int z = 0; z < nsub.n; ++z) {
                            if (alpha[z] != z) continue;
                            bool ok = true;
                            int zi = nsub.inverse(z);
                            for (int x = 0; x < nsub.n && ok; ++x)
                                if (ap[x] != nsub.mul(nsub.mul(z, x), zi)) ok = false;
                            if (ok) consider(classes, build_extension(nsub, alpha, p, z));
                        }
                    }
                }
            }
        }
        if (n == 60)
            consider(classes, from_permutation_generators(
                                  5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)},
                                  60));
        return classes;
    }
};

std::string label_for(const FiniteGroup& g, int order, int index) {
    if (g.is_abelian()) {
        std::vector<int> inv = abelian_invariants(g);
        if (inv.empty()) return "C1";
        std::string out;
        for (size_t i = 0; i < inv.size(); ++i) {
            if (i) out += "x";
            out += "C" + std::to_string(inv[i]);
        }
        return out;
    }
    if (order == 6) return "S3";
    if (order == 12 && isomorphic(g, alternating_group(4))) return "A4";
    if (order == 24 && isomorphic(g, symmetric_group(4))) return "S4";
    if (order == 60 && isomorphic(g, alternating_group(5))) return "A5";
    if (order % 2 == 0 && order >= 8 && isomorphic(g, dihedral_group(order / 2)))
        return "D" + std::to_string(order / 2);
    if (order % 4 == 0 && isomorphic(g, dicyclic_group(order / 4))) {
        if ((order & (order - 1)) == 0) return "Q" + std::to_string(order);
        return "Dic" + std::to_string(order / 4);
    }
    return "G" + std::to_string(order) + "." + std::to_string(index);
}

// Right-regular permutation representation of the greedy generators; the
// catalog stores groups as abstract isomorphism types, so element numbering
// inside the file need not match the generator's internal numbering.
CatalogEntry make_entry(const FiniteGroup& g, int order, int index) {
    CatalogEntry e;
    e.order = order;
    e.index = index;
    e.degree = order;
    for (int gen : greedy_generators(g)) {
        Perm p(order);
        for (int x = 0; x < order; ++x) p[x] = g.mul(x, gen);
        e.generators.push_back(std::move(p));
    }
    e.group = from_permutation_generators(e.degree, e.generators, order);
    if (e.group.n != order) throw error("gengroups: regular representation has wrong order");
    return e;
}

} // namespace

int main(int argc, char** argv) {
    std::string outdir;
    int maxn = 72;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--max" && i + 1 < argc)
            maxn = std::stoi(argv[++i]);
        else if (outdir.empty())
            outdir = arg;
        else {
            std::cerr << "usage: gengroups <outdir> [--max N]\n";
            return 2;
        }
    }
    if (outdir.empty()) {
        std::cerr << "usage: gengroups <outdir> [--max N]\n";
        return 2;
    }
    std::filesystem::create_directories(outdir);

    Generator gen;
    gen.by_order.resize(maxn + 1);
    for (int n = 1; n <= maxn; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Classified> classes = gen.classify_order(n);
        int expect = known_group_count(n);
        if (expect >= 0 && static_cast<int>(classes.size()) != expect) {
            std::cerr << "order " << n << ": found " << classes.size() << " classes, expected "
                      << expect << "\n";
            return 1;
        }
        // deterministic order: abelian first, then by invariants
        std::stable_sort(classes.begin(), classes.end(), [](const Classified& a, const Classified& b) {
            bool aa = a.g.is_abelian(), bb = b.g.is_abelian();
            if (aa != bb) return aa;
            return a.fingerprint < b.fingerprint;
        });
        gen.by_order[n] = std::move(classes);
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        std::printf("order %2d: %3zu groups (%lld ms)\n", n, gen.by_order[n].size(), ms);
        std::fflush(stdout);
    }

    for (int n = 1; n <= maxn; ++n) {
        std::vector<CatalogEntry> entries;
        for (size_t i = 0; i < gen.by_order[n].size(); ++i) {
            CatalogEntry e = make_entry(gen.by_order[n][i].g, n, static_cast<int>(i));
            e.label = label_for(gen.by_order[n][i].g, n, static_cast<int>(i));
            entries.push_back(std::move(e));
        }
        // relabel any duplicate names (distinct groups can share a family name
        // only through the generic Gn.i scheme, which embeds the index)
        std::set<std::string> seen;
        for (CatalogEntry& e : entries) {
            if (!seen.insert(e.label).second)
                e.label = "G" + std::to_string(n) + "." + std::to_string(e.index);
            seen.insert(e.label);
        }
        write_order_file(outdir + "/order_" + std::to_string(n) + ".groups", n, entries);
    }
    std::printf("catalog written to %s\n", outdir.c_str());
    return 0;
}
