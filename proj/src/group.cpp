#include "hurwitz/group.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

// Fills inv and elem_order for a table already known to be a group.
void finalize_table(FiniteGroup& g) {
    g.inv.assign(g.n, 0);
    g.elem_order.assign(g.n, 0);
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b)
            if (g.mul(a, b) == 0) { g.inv[a] = static_cast<uint16_t>(b); break; }
        int x = a, ord = 1;
        while (x != 0) { x = g.mul(x, a); ++ord; }
        g.elem_order[a] = ord;
    }
}

} // namespace

int FiniteGroup::power(int a, long long k) const {
    int m = elem_order[a];
    int t = static_cast<int>(((k % m) + m) % m);
    int r = 0;
    for (int i = 0; i < t; ++i) r = mul(r, a);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int a = 0; a < n; ++a)
        if (elem_order[a] == n) return true;
    return n == 1;
}

bool FiniteGroup::is_elementary_abelian_2() const {
    for (int a = 1; a < n; ++a)
        if (elem_order[a] != 2) return false;
    return is_abelian();
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int a = 0; a < n; ++a) e = std::lcm(e, static_cast<long long>(elem_order[a]));
    return static_cast<int>(e);
}

FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                        int max_order) {
    if (degree < 1) throw invalid_permutation("degree must be positive");
    for (const Perm& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw invalid_permutation("generator degree mismatch");
        if (!is_permutation(p)) throw invalid_permutation("generator is not a bijection");
    }

    std::vector<Perm> elems{perm_identity(degree)};
    std::map<Perm, int> index{{elems[0], 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& gen : gens) {
            Perm next = perm_compose(elems[head], gen);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > max_order)
                    throw closure_cap_exceeded("closure exceeds cap of " +
                                               std::to_string(max_order) + " elements");
            }
        }
    }

    FiniteGroup g;
    g.n = static_cast<int>(elems.size());
    g.mul_table.assign(static_cast<size_t>(g.n) * g.n, 0);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            g.mul_table[a * g.n + b] =
                static_cast<uint16_t>(index.at(perm_compose(elems[a], elems[b])));
    finalize_table(g);
    for (const Perm& gen : gens) g.generators.push_back(index.at(gen));
    return g;
}

FiniteGroup from_mul_table(int n, std::vector<uint16_t> table) {
    if (n < 1 || n > 65535) throw error("from_mul_table: bad order");
    if (table.size() != static_cast<size_t>(n) * n)
        throw error("from_mul_table: table size mismatch");
    FiniteGroup g;
    g.n = n;
    g.mul_table = std::move(table);
    for (int b = 0; b < n; ++b)
        if (g.mul(0, b) != b || g.mul(b, 0) != b)
            throw error("from_mul_table: element 0 is not the identity");
    for (int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) { has_inv = true; break; }
        if (!has_inv) throw error("from_mul_table: missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw error("from_mul_table: not associative");
    finalize_table(g);
    return g;
}

FiniteGroup from_mul_table_unchecked(int n, std::vector<uint16_t> table) {
    FiniteGroup g;
    g.n = n;
    g.mul_table = std::move(table);
    finalize_table(g);
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.n = a.n * b.n;
    if (g.n > 65535) throw error("direct_product: order too large");
    g.mul_table.assign(static_cast<size_t>(g.n) * g.n, 0);
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    g.mul_table[(x1 * b.n + y1) * g.n + (x2 * b.n + y2)] =
                        static_cast<uint16_t>(a.mul(x1, x2) * b.n + b.mul(y1, y2));
    finalize_table(g);
    return g;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<char> in(g.n, 0);
    std::vector<int> list{0};
    in[0] = 1;
    for (int e : elems)
        if (!in[e]) { in[e] = 1; list.push_back(e); }
    for (size_t head = 0; head < list.size(); ++head) {
        for (int e : elems) {
            int next = g.mul(list[head], e);
            if (!in[next]) { in[next] = 1; list.push_back(next); }
        }
    }
    std::sort(list.begin(), list.end());
    return list;
}

bool generates(const FiniteGroup& g, const std::vector<int>& elems) {
    return static_cast<int>(subgroup_closure(g, elems).size()) == g.n;
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
    ConjugacyData cd;
    cd.class_of.assign(g.n, -1);
    for (int x = 0; x < g.n; ++x) {
        if (cd.class_of[x] != -1) continue;
        int c = cd.k++;
        std::vector<int> members;
        for (int y = 0; y < g.n; ++y) {
            int z = g.conj(x, y);
            if (cd.class_of[z] == -1) {
                cd.class_of[z] = c;
                members.push_back(z);
            }
        }
        std::sort(members.begin(), members.end());
        cd.reps.push_back(members.front());
        cd.class_size.push_back(static_cast<int>(members.size()));
        cd.class_order.push_back(g.order_of(members.front()));
        cd.members.push_back(std::move(members));
    }
    cd.power_cl.resize(cd.k);
    for (int c = 0; c < cd.k; ++c) {
        int m = cd.class_order[c];
        cd.power_cl[c].resize(m);
        int x = 0;
        for (int t = 0; t < m; ++t) {
            cd.power_cl[c][t] = cd.class_of[x];
            x = g.mul(x, cd.reps[c]);
        }
    }
    return cd;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elems) {
    int m = static_cast<int>(elems.size());
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    FiniteGroup out;
    out.n = m;
    out.mul_table.assign(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = pos[g.mul(elems[i], elems[j])];
            if (p < 0) throw error("subgroup_as_group: element list is not closed");
            out.mul_table[static_cast<size_t>(i) * m + j] = static_cast<uint16_t>(p);
        }
    finalize_table(out);
    return out;
}

int commutator(const FiniteGroup& g, int a, int b) {
    return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
}

std::vector<int> derived_subgroup(const FiniteGroup& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> comms;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            int c = commutator(g, a, b);
            if (!seen[c]) { seen[c] = 1; comms.push_back(c); }
        }
    return subgroup_closure(g, comms);
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.n; ++a) {
        bool central = true;
        for (int b = 0; b < g.n && central; ++b)
            if (g.mul(a, b) != g.mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

namespace {

// Quotient of g by a normal subgroup given as a sorted element list.  Coset
// representatives are the smallest members, numbered ascending, so the
// identity coset comes first.
FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal) {
    std::vector<int> coset_of(g.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.n; ++x) {
        if (coset_of[x] != -1) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : normal) coset_of[g.mul(h, x)] = c;
    }
    int q = static_cast<int>(reps.size());
    FiniteGroup out;
    out.n = q;
    out.mul_table.assign(static_cast<size_t>(q) * q, 0);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            out.mul_table[i * q + j] =
                static_cast<uint16_t>(coset_of[g.mul(reps[i], reps[j])]);
    finalize_table(out);
    return out;
}

} // namespace

std::vector<int> abelian_invariants(const FiniteGroup& g) {
    FiniteGroup a = quotient(g, derived_subgroup(g));
    std::vector<int> factors;
    while (a.n > 1) {
        int x = 0;
        for (int e = 1; e < a.n; ++e)
            if (a.order_of(e) > a.order_of(x)) x = e;
        factors.push_back(a.order_of(x));
        a = quotient(a, subgroup_closure(a, {x}));
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> sub{0};
    while (static_cast<int>(sub.size()) < g.n) {
        int x = 0;
        std::vector<char> in(g.n, 0);
        for (int e : sub) in[e] = 1;
        while (in[x]) ++x;
        gens.push_back(x);
        sub = subgroup_closure(g, gens);
    }
    return gens;
}

std::vector<std::array<int, 7>> element_profiles(const FiniteGroup& g) {
    int n = g.n;
    std::vector<std::vector<int>> cent(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g.mul(x, y) == g.mul(y, x)) cent[x].push_back(y);
    std::vector<int> sq(n, 0), cb(n, 0);
    for (int y = 0; y < n; ++y) {
        int y2 = g.mul(y, y);
        ++sq[y2];
        ++cb[g.mul(y2, y)];
    }
    std::vector<std::array<int, 7>> out(n);
    for (int x = 0; x < n; ++x) {
        int x2 = g.mul(x, x), x3 = g.mul(x2, x);
        bool ab = true;
        const std::vector<int>& c = cent[x];
        for (size_t i = 0; i < c.size() && ab; ++i)
            for (size_t j = i + 1; j < c.size() && ab; ++j)
                if (g.mul(c[i], c[j]) != g.mul(c[j], c[i])) ab = false;
        out[x] = {g.elem_order[x],
                  n / static_cast<int>(cent[x].size()),
                  n / static_cast<int>(cent[x2].size()),
                  n / static_cast<int>(cent[x3].size()),
                  ab ? 1 : 0,
                  sq[x],
                  cb[x]};
    }
    return out;
}

WlColoring wl_coloring(const FiniteGroup& g) {
    int n = g.n;
    std::vector<std::array<int, 7>> prof = element_profiles(g);

    // canonical initial labels: index of the profile in sorted order
    std::vector<std::array<int, 7>> uniq(prof.begin(), prof.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> color(n);
    for (int x = 0; x < n; ++x)
        color[x] = static_cast<int>(
            std::lower_bound(uniq.begin(), uniq.end(), prof[x]) - uniq.begin());
    int classes = static_cast<int>(uniq.size());

    std::vector<std::vector<int>> roots2(n), roots3(n);
    for (int y = 0; y < n; ++y) {
        int y2 = g.mul(y, y);
        roots2[y2].push_back(y);
        roots3[g.mul(y2, y)].push_back(y);
    }

    // signature of x: own colour, the sorted pair multiset over all rows,
    // and the colours of the square and cube roots of x
    using Sig = std::vector<int>;
    std::vector<Sig> sigs(n);
    std::vector<int> rounds_log{classes};
    for (;;) {
        for (int x = 0; x < n; ++x) {
            Sig& s = sigs[x];
            s.clear();
            s.push_back(color[x]);
            std::vector<std::pair<int, int>> pairs(n);
            for (int y = 0; y < n; ++y) pairs[y] = {color[y], color[g.mul(x, y)]};
            std::sort(pairs.begin(), pairs.end());
            for (const auto& [a, b] : pairs) {
                s.push_back(a);
                s.push_back(b);
            }
            for (const std::vector<int>* roots : {&roots2[x], &roots3[x]}) {
                std::vector<int> rc;
                for (int y : *roots) rc.push_back(color[y]);
                std::sort(rc.begin(), rc.end());
                s.push_back(-1 - static_cast<int>(rc.size())); // separator
                s.insert(s.end(), rc.begin(), rc.end());
            }
        }
        std::vector<Sig> su(sigs.begin(), sigs.end());
        std::sort(su.begin(), su.end());
        su.erase(std::unique(su.begin(), su.end()), su.end());
        for (int x = 0; x < n; ++x)
            color[x] = static_cast<int>(
                std::lower_bound(su.begin(), su.end(), sigs[x]) - su.begin());
        int next = static_cast<int>(su.size());
        rounds_log.push_back(next);
        if (next == classes) break;
        classes = next;
    }

    // digest: per-round class counts, then one FNV-1a hash of each colour
    // class (count, member profile, final signature), in label order
    std::vector<int> count(classes, 0), witness(classes, -1);
    for (int x = 0; x < n; ++x) {
        ++count[color[x]];
        if (witness[color[x]] < 0) witness[color[x]] = x;
    }
    std::ostringstream cert;
    for (int c : rounds_log) cert << c << ",";
    for (int c = 0; c < classes; ++c) {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint64_t>(count[c]));
        for (int v : prof[witness[c]]) mix(static_cast<uint64_t>(v));
        for (int v : sigs[witness[c]]) mix(static_cast<uint64_t>(v));
        cert << std::hex << h << std::dec << ";";
    }
    return {std::move(color), cert.str()};
}

namespace {

// BFS trace over <gens[0..count)>: each non-identity element is reached as
// parent * gens[genidx], discovered exactly once in a reproducible order.
struct ClosureTrace {
    std::vector<int> elems; // discovery order, elems[0] == 0
    std::vector<int> parent;
    std::vector<int> genidx;
};

ClosureTrace trace_closure(const FiniteGroup& g, const std::vector<int>& gens, int count) {
    ClosureTrace t;
    std::vector<char> in(g.n, 0);
    t.elems.push_back(0);
    t.parent.push_back(-1);
    t.genidx.push_back(-1);
    in[0] = 1;
    for (size_t head = 0; head < t.elems.size(); ++head) {
        for (int j = 0; j < count; ++j) {
            int next = g.mul(t.elems[head], gens[j]);
            if (!in[next]) {
                in[next] = 1;
                t.elems.push_back(next);
                t.parent.push_back(static_cast<int>(head));
                t.genidx.push_back(j);
            }
        }
    }
    return t;
}

// Backtracking search for homomorphisms src -> dst determined by images of a
// minimal generating set, pruned level by level to injective homomorphisms of
// the partial subgroups.  Enumerates all solutions or stops at the first.
struct MapSearch {
    const FiniteGroup& src;
    const FiniteGroup& dst;
    std::vector<int> gens;
    std::vector<ClosureTrace> traces; // per level i: trace of <gens[0..i]>
    std::vector<std::vector<int>> candidates; // per level: profile-matched images
    long long budget;
    bool stop_at_first;
    std::vector<int> images;
    std::vector<std::vector<int>> out;
    WlColoring col_src, col_dst;

    // Extends the partial map determined by generator images over the level's
    // subgroup and verifies it is an injective homomorphism there that also
    // respects the stable colouring.
    bool consistent(int level, std::vector<int>& phi) {
        const ClosureTrace& t = traces[level];
        size_t m = t.elems.size();
        budget -= static_cast<long long>(m);
        if (budget < 0)
            throw aut_cap_exceeded("isomorphism search exceeded its node budget");
        std::vector<int> val(m);
        val[0] = 0;
        phi.assign(src.n, -1);
        phi[0] = 0;
        std::vector<char> hit(dst.n, 0);
        hit[0] = 1;
        for (size_t i = 1; i < m; ++i) {
            int v = dst.mul(val[t.parent[i]], images[t.genidx[i]]);
            if (hit[v]) return false; // not injective
            if (col_src.color[t.elems[i]] != col_dst.color[v]) return false;
            hit[v] = 1;
            val[i] = v;
            phi[t.elems[i]] = v;
        }
        // Generator consistency across the whole subgroup; by induction on
        // word length this makes phi a homomorphism on it.
        for (size_t i = 0; i < m; ++i) {
            int a = t.elems[i];
            for (int j = 0; j <= level; ++j)
                if (phi[src.mul(a, gens[j])] != dst.mul(phi[a], images[j])) return false;
        }
        return true;
    }

    bool rec(int level) {
        std::vector<int> phi;
        for (int y : candidates[level]) {
            images[level] = y;
            if (!consistent(level, phi)) continue;
            if (level + 1 == static_cast<int>(gens.size())) {
                out.push_back(phi);
                if (stop_at_first) return true;
            } else if (rec(level + 1)) {
                return true;
            }
        }
        return false;
    }

    // Candidate images must match the generator's stable colour, which
    // prunes the search far below plain order matching; unequal certificates
    // refute the isomorphism outright.  The generating sequence itself is
    // chosen to keep early subgroups rigid: each next generator has the
    // rarest colour among elements still outside, favouring high orders.
    bool prepare() {
        col_src = wl_coloring(src);
        col_dst = &src == &dst ? col_src : wl_coloring(dst);
        if (col_src.certificate != col_dst.certificate) return false;
        std::vector<int> freq(src.n, 0);
        for (int c : col_src.color) ++freq[c];
        std::vector<int> sub{0};
        std::vector<char> in(src.n, 0);
        in[0] = 1;
        while (static_cast<int>(sub.size()) < src.n) {
            int best = -1;
            for (int x = 0; x < src.n; ++x) {
                if (in[x]) continue;
                if (best < 0 || freq[col_src.color[x]] < freq[col_src.color[best]] ||
                    (freq[col_src.color[x]] == freq[col_src.color[best]] &&
                     src.elem_order[x] > src.elem_order[best]))
                    best = x;
            }
            gens.push_back(best);
            sub = subgroup_closure(src, gens);
            for (int e : sub) in[e] = 1;
        }
        for (size_t i = 0; i < gens.size(); ++i) {
            traces.push_back(trace_closure(src, gens, static_cast<int>(i) + 1));
            std::vector<int> cand;
            for (int y = 0; y < dst.n; ++y)
                if (col_dst.color[y] == col_src.color[gens[i]]) cand.push_back(y);
            candidates.push_back(std::move(cand));
        }
        images.assign(gens.size(), 0);
        return true;
    }
};

} // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& g, const ConjugacyData& cd,
                                     long long max_nodes) {
    AutomorphismGroup aut;
    if (g.n == 1) {
        aut.maps.push_back({0});
        aut.class_action.push_back({0});
        return aut;
    }
    MapSearch s{g, g, {}, {}, {}, max_nodes, false, {}, {}, {}, {}};
    if (!s.prepare()) throw error("automorphism search: invariant mismatch against itself");
    s.rec(0);
    aut.maps = std::move(s.out);
    for (const std::vector<int>& phi : aut.maps) {
        std::vector<int> act(cd.k);
        for (int c = 0; c < cd.k; ++c) act[c] = cd.class_of[phi[cd.reps[c]]];
        aut.class_action.push_back(std::move(act));
    }
    return aut;
}

std::vector<int> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                  long long max_nodes) {
    if (a.n != b.n) return {};
    std::multiset<int> oa(a.elem_order.begin(), a.elem_order.end());
    std::multiset<int> ob(b.elem_order.begin(), b.elem_order.end());
    if (oa != ob) return {};
    if (a.n == 1) return {0};
    MapSearch s{a, b, {}, {}, {}, max_nodes, true, {}, {}, {}, {}};
    if (!s.prepare()) return {};
    s.rec(0);
    if (s.out.empty()) return {};
    return s.out.front();
}

} // namespace hurwitz
