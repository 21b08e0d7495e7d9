#include "hurwitz/search.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hurwitz {

long long genus_of(long long d, const Signature& sig) {
    // 2(g-1) = d(-2 + sum(1 - 1/m_i)); all terms are handled exactly
    Rational acc(-2);
    for (int m : sig) {
        if (m < 2) return -1;
        Rational term(m - 1, m);
        term.canonicalize();
        acc += term;
    }
    Rational two_g_minus_2 = acc * Rational(static_cast<long>(d));
    Rational g = two_g_minus_2 / 2 + 1;
    g.canonicalize();
    if (g.get_den() != 1 || g.get_num() < 0) return -1;
    return g.get_num().get_si();
}

std::vector<Signature> signatures(int genus, int d) {
    std::vector<Signature> out;
    if (genus < 2 || d < 2 || d > 12 * (genus - 1)) return out;
    std::vector<int> divs;
    for (int m = 2; m < d; ++m)
        if (d % m == 0) divs.push_back(m);
    if (divs.empty()) return out;
    int qmin = d / divs.back(); // smallest per-point contribution d/m
    int rmax = 4 * (genus - 1) / d + 4;
    Signature cur;
    for (int r = 4; r <= rmax; ++r) {
        // Riemann-Hurwitz in integers: sum of d/m_i over the signature
        long long target = static_cast<long long>(d) * (r - 2) - 2 * (genus - 1);
        auto dfs = [&](auto&& self, size_t from, int slots, long long left) -> void {
            if (slots == 0) {
                if (left == 0) out.push_back(cur);
                return;
            }
            for (size_t i = from; i < divs.size(); ++i) {
                long long q = d / divs[i];
                // remaining choices are >= this m, so each contributes <= q,
                // and later divisors contribute even less
                if (left > static_cast<long long>(slots) * q) break;
                if (left - q < static_cast<long long>(slots - 1) * qmin) continue;
                cur.push_back(divs[i]);
                self(self, i, slots - 1, left - q);
                cur.pop_back();
            }
        };
        dfs(dfs, 0, r, target);
    }
    return out;
}

const char* rejection_name(Rejection r) {
    switch (r) {
    case Rejection::accepted: return "accepted";
    case Rejection::abelian_with_four_points: return "abelian_with_four_points";
    case Rejection::cyclic: return "cyclic";
    case Rejection::missing_order: return "missing_order";
    case Rejection::element_order_bound: return "element_order_bound";
    case Rejection::four_even_invariants: return "four_even_invariants";
    case Rejection::too_few_generators: return "too_few_generators";
    case Rejection::lcm_quotient: return "lcm_quotient";
    case Rejection::elementary_2_skipped: return "elementary_2_skipped";
    }
    return "unknown";
}

Rejection admissible(const FiniteGroup& g, const ConjugacyData& cd, int genus,
                     const Signature& sig, const SearchOptions& opt) {
    int r = static_cast<int>(sig.size());
    if (r == 4 && g.is_abelian()) return Rejection::abelian_with_four_points;
    if (r > 4 && g.is_cyclic()) return Rejection::cyclic;
    std::set<int> orders(g.elem_order.begin(), g.elem_order.end());
    for (int m : sig)
        if (!orders.count(m)) return Rejection::missing_order;
    if (opt.skip_elementary_2 && genus >= 4 && g.is_elementary_abelian_2())
        return Rejection::elementary_2_skipped;
    if (opt.use_bounds_pruning) {
        if (genus > 2 && *orders.rbegin() > 4 * (genus - 1))
            return Rejection::element_order_bound;
        std::vector<int> inv = abelian_invariants(g);
        int even = 0;
        for (int f : inv)
            if (f % 2 == 0) ++even;
        if (even >= 4) return Rejection::four_even_invariants;
        int p = static_cast<int>(inv.size());
        if (p >= r) return Rejection::too_few_generators;
        if (!inv.empty()) {
            // the r-1 generators left after dropping any one branch element
            // must still have orders whose lcm is divisible by the exponent
            // k_p of the abelianisation
            long long kp = inv.back();
            std::vector<long long> pre(r + 1, 1), suf(r + 1, 1);
            for (int i = 0; i < r; ++i) pre[i + 1] = std::lcm(pre[i], static_cast<long long>(sig[i]));
            for (int i = r - 1; i >= 0; --i) suf[i] = std::lcm(suf[i + 1], static_cast<long long>(sig[i]));
            for (int j = 0; j < r; ++j)
                if (std::lcm(pre[j], suf[j + 1]) % kp != 0) return Rejection::lcm_quotient;
        }
    }
    (void)cd;
    return Rejection::accepted;
}

GroupContext make_group_context(const FiniteGroup& g) {
    GroupContext ctx;
    ctx.group = &g;
    ctx.classes = conjugacy_data(g);
    ctx.table = character_table(g, ctx.classes);
    AutomorphismGroup aut = automorphism_group(g, ctx.classes);
    std::set<std::vector<int>> perms(aut.class_action.begin(), aut.class_action.end());
    ctx.aut_class_perms.assign(perms.begin(), perms.end());

    int k = ctx.classes.k;
    ctx.cw_term.assign(k, std::vector<Rational>(k));
    for (int t = 0; t < k; ++t)
        for (int c = 0; c < k; ++c) {
            int m = ctx.classes.class_order[c];
            std::vector<long long> mult = eigenvalue_multiplicities(ctx.table, ctx.classes, t, c);
            Rational acc(0);
            for (int alpha = 1; alpha < m; ++alpha)
                if (mult[alpha] != 0) {
                    Rational term(static_cast<long>(mult[alpha] * alpha), m);
                    term.canonicalize();
                    acc += term;
                }
            ctx.cw_term[t][c] = acc;
        }

    ctx.fs_indicator.resize(k);
    for (int t = 0; t < k; ++t) {
        Cyclotomic s = Cyclotomic::from_rational(*ctx.table.field, Rational(0));
        for (int c = 0; c < k; ++c) {
            Cyclotomic v = ctx.table.value(t, ctx.classes.power_class(c, 2));
            v *= Rational(ctx.classes.class_size[c]);
            s += v;
        }
        if (!s.is_rational())
            throw error("Frobenius-Schur indicator is not rational");
        Rational ind = s.rational_value() / Rational(g.n);
        ind.canonicalize();
        if (ind.get_den() != 1 || ind < -1 || ind > 1)
            throw error("Frobenius-Schur indicator out of range");
        ctx.fs_indicator[t] = static_cast<int>(ind.get_num().get_si());
    }

    ctx.conj_character.assign(k, -1);
    for (int t = 0; t < k; ++t) {
        for (int u = 0; u < k; ++u) {
            bool match = true;
            for (int c = 0; c < k && match; ++c)
                if (ctx.table.value(u, c) != ctx.table.value(t, ctx.classes.inverse_class(c)))
                    match = false;
            if (match) {
                ctx.conj_character[t] = u;
                break;
            }
        }
        if (ctx.conj_character[t] < 0) throw error("missing conjugate character");
    }
    return ctx;
}

std::vector<Rational> chevalley_weil(const GroupContext& ctx, const std::vector<int>& passport) {
    int k = ctx.classes.k;
    std::vector<Rational> mu(k);
    for (int t = 0; t < k; ++t) {
        Rational acc(-ctx.table.degrees[t]);
        for (int c : passport) acc += ctx.cw_term[t][c];
        if (t == ctx.table.trivial_index) acc += 1;
        acc.canonicalize();
        mu[t] = acc;
    }
    return mu;
}

Rational dimension_N(const GroupContext& ctx, const std::vector<int>& passport) {
    std::vector<Rational> mu = chevalley_weil(ctx, passport);
    Rational n(0);
    for (int t = 0; t < ctx.classes.k; ++t)
        n += mu[t] * (Rational(ctx.fs_indicator[t]) + mu[ctx.conj_character[t]]);
    n /= 2;
    n.canonicalize();
    return n;
}

bool find_spherical_system(const GroupContext& ctx, const std::vector<int>& passport,
                           std::vector<int>& witness) {
    const FiniteGroup& g = *ctx.group;
    const ConjugacyData& cd = ctx.classes;
    int r = static_cast<int>(passport.size());
    if (r == 0) return false;
    // iterate over all classes but the largest one; the last element is
    // forced as the inverse of the product and only needs a class check
    std::vector<int> order(passport);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cd.class_size[a] != cd.class_size[b]) return cd.class_size[a] < cd.class_size[b];
        return a < b;
    });
    int checked = order.back();
    order.pop_back();
    int s = static_cast<int>(order.size());
    std::vector<const std::vector<int>*> members(s);
    for (int i = 0; i < s; ++i) members[i] = &cd.members[order[i]];
    std::vector<int> idx(s, 0);
    std::vector<int> tuple(s + 1);
    std::vector<int> prefix(s + 1, 0); // prefix[i] = product of tuple[0..i)
    int dirty = 0;
    for (;;) {
        for (int i = dirty; i < s; ++i) {
            tuple[i] = (*members[i])[idx[i]];
            prefix[i + 1] = g.mul(prefix[i], tuple[i]);
        }
        int last = g.inverse(prefix[s]);
        if (cd.class_of[last] == checked) {
            tuple[s] = last;
            std::vector<int> head(tuple.begin(), tuple.begin() + s);
            if (generates(g, head)) {
                witness = tuple;
                return true;
            }
        }
        int i = s - 1;
        while (i >= 0 && idx[i] + 1 == static_cast<int>(members[i]->size())) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) return false;
        ++idx[i];
        dirty = i;
    }
}

bool is_counterexample(const GroupContext& ctx, const std::vector<int>& passport,
                       std::vector<int>& witness) {
    int r = static_cast<int>(passport.size());
    std::map<int, int> mult;
    for (int c : passport) ++mult[c];
    std::vector<std::pair<int, int>> pairs(mult.begin(), mult.end());
    if (frobenius_class_sum(ctx.table, ctx.classes, pairs) == 0) return false;
    Rational n = dimension_N(ctx, passport);
    if (n.get_den() != 1)
        throw non_integer_dimension("N is not an integer on a passport that passed Frobenius");
    if (n != Rational(r - 3)) return false;
    return find_spherical_system(ctx, passport, witness);
}

std::vector<int> canonical_passport(const GroupContext& ctx, const std::vector<int>& passport) {
    std::vector<int> best(passport);
    std::sort(best.begin(), best.end());
    std::vector<int> image(passport.size());
    for (const std::vector<int>& perm : ctx.aut_class_perms) {
        for (size_t i = 0; i < passport.size(); ++i) image[i] = perm[passport[i]];
        std::sort(image.begin(), image.end());
        if (image < best) best = image;
    }
    return best;
}

namespace {

struct Level {
    std::vector<int> classes; // ascending class ids
    int n = 0;                // how many remain to be chosen from them
};

// Recursive orbit iteration: handles one multiset level at a time, walking
// subset chains A > B_1 > B_2 > ... with the stabilizer of each subset acting
// on the deeper levels.
struct OrbitWalk {
    const GroupContext& ctx;
    long long subset_cap;
    const std::function<void(const std::vector<int>&)>& visit;

    void rec(std::vector<Level> levels, std::vector<int>& chosen, const std::vector<int>& h) {
        if (levels.empty()) {
            std::vector<int> sorted(chosen);
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
            return;
        }
        Level top = std::move(levels.back());
        levels.pop_back();
        if (top.n == 0) {
            rec(std::move(levels), chosen, h);
            return;
        }
        if (top.classes.size() == 1) {
            for (int i = 0; i < top.n; ++i) chosen.push_back(top.classes[0]);
            rec(std::move(levels), chosen, h);
            chosen.resize(chosen.size() - top.n);
            return;
        }
        subsets(levels, chosen, h, top);
    }

    void subsets(const std::vector<Level>& levels, std::vector<int>& chosen,
                 const std::vector<int>& h, const Level& top) {
        int a = static_cast<int>(top.classes.size());
        if (a > 64) throw error("passport level spans more than 64 classes");
        // the acting permutations restricted to this level's classes
        std::vector<int> pos(ctx.classes.k, -1);
        for (int i = 0; i < a; ++i) pos[top.classes[i]] = i;
        std::vector<std::vector<uint8_t>> local(h.size(), std::vector<uint8_t>(a));
        for (size_t j = 0; j < h.size(); ++j)
            for (int i = 0; i < a; ++i) {
                int img = pos[ctx.aut_class_perms[h[j]][top.classes[i]]];
                if (img < 0) throw error("automorphism does not preserve a passport level");
                local[j][i] = static_cast<uint8_t>(img);
            }
        for (int take = 1; take <= top.n; ++take) {
            if (take > a) break;
            // all subsets of this size, as bit masks over the level
            long long count = 1;
            for (int i = 0; i < take; ++i) {
                count = count * (a - i) / (i + 1);
                if (count > subset_cap)
                    throw subset_memory_cap("level would materialise too many subsets");
            }
            std::vector<uint64_t> masks;
            masks.reserve(static_cast<size_t>(count));
            std::vector<int> comb(take);
            for (int i = 0; i < take; ++i) comb[i] = i;
            for (;;) {
                uint64_t m = 0;
                for (int i : comb) m |= uint64_t(1) << i;
                masks.push_back(m);
                int i = take - 1;
                while (i >= 0 && comb[i] == a - take + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
            }
            std::sort(masks.begin(), masks.end());
            std::vector<char> visited(masks.size(), 0);
            auto rank = [&](uint64_t m) {
                return static_cast<size_t>(
                    std::lower_bound(masks.begin(), masks.end(), m) - masks.begin());
            };
            for (size_t mi = 0; mi < masks.size(); ++mi) {
                if (visited[mi]) continue;
                uint64_t rep = masks[mi];
                std::vector<int> stab;
                for (size_t j = 0; j < h.size(); ++j) {
                    uint64_t img = 0;
                    uint64_t rest = rep;
                    while (rest) {
                        int bit = __builtin_ctzll(rest);
                        rest &= rest - 1;
                        img |= uint64_t(1) << local[j][bit];
                    }
                    if (img == rep)
                        stab.push_back(h[j]);
                    else
                        visited[rank(img)] = 1;
                }
                visited[mi] = 1;
                std::vector<int> bcls;
                for (int i = 0; i < a; ++i)
                    if (rep & (uint64_t(1) << i)) bcls.push_back(top.classes[i]);
                size_t mark = chosen.size();
                for (int c : bcls) chosen.push_back(c);
                std::vector<Level> deeper(levels);
                deeper.push_back({std::move(bcls), top.n - take});
                rec(std::move(deeper), chosen, stab);
                chosen.resize(mark);
            }
        }
    }
};

std::vector<Level> signature_levels(const GroupContext& ctx, const Signature& sig) {
    std::map<int, int> counts;
    for (int m : sig) ++counts[m];
    std::vector<Level> levels;
    for (auto [m, n] : counts) {
        Level l;
        l.n = n;
        for (int c = 0; c < ctx.classes.k; ++c)
            if (ctx.classes.class_order[c] == m) l.classes.push_back(c);
        if (l.classes.empty()) throw error("no conjugacy class of order " + std::to_string(m));
        levels.push_back(std::move(l));
    }
    return levels; // ascending by order; the recursion starts from the back
}

} // namespace

void enumerate_passport_orbits(const GroupContext& ctx, const Signature& sig,
                               long long subset_cap,
                               const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<Level> levels = signature_levels(ctx, sig);
    std::vector<int> all(ctx.aut_class_perms.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> chosen;
    OrbitWalk walk{ctx, subset_cap, visit};
    walk.rec(std::move(levels), chosen, all);
}

void enumerate_all_passports(const GroupContext& ctx, const Signature& sig,
                             const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<Level> levels = signature_levels(ctx, sig);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t li, size_t ci, int left) -> void {
        if (li == levels.size()) {
            std::vector<int> sorted(chosen);
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
            return;
        }
        const Level& l = levels[li];
        if (left == 0) {
            self(self, li + 1, 0, li + 1 < levels.size() ? levels[li + 1].n : 0);
            return;
        }
        for (size_t i = ci; i < l.classes.size(); ++i) {
            chosen.push_back(l.classes[i]);
            self(self, li, i, left - 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0, levels.empty() ? 0 : levels[0].n);
}

TaskResult search_signature(const GroupContext& ctx, int genus, const Signature& sig,
                            const SearchOptions& opt) {
    (void)genus;
    TaskResult result;
    const FiniteGroup& g = *ctx.group;
    int r = static_cast<int>(sig.size());

    if (g.is_abelian() && !opt.force_generic) {
        // short sequences: drop one branch point whose order is carried by
        // the largest number of elements, and force its entry as the inverse
        // of the product of the others
        std::map<int, int> count;
        for (int x = 0; x < g.n; ++x) ++count[g.elem_order[x]];
        int drop = sig[0];
        for (int m : sig)
            if (count[m] > count[drop] || (count[m] == count[drop] && m > drop)) drop = m;
        Signature reduced(sig);
        reduced.erase(std::find(reduced.begin(), reduced.end(), drop));

        std::set<std::vector<int>> seen;
        auto complete = [&](const std::vector<int>& shortlist) {
            int prod = 0;
            for (int c : shortlist) prod = g.mul(prod, ctx.classes.reps[c]);
            int forced = g.inverse(prod);
            if (g.elem_order[forced] != drop) return;
            std::vector<int> full(shortlist);
            full.push_back(ctx.classes.class_of[forced]);
            std::sort(full.begin(), full.end());
            ++result.passports_tested;
            ++result.frobenius_pass; // a product-one tuple exists by construction
            Rational n = dimension_N(ctx, full);
            if (n.get_den() != 1)
                throw non_integer_dimension("N is not an integer on a completed tuple");
            if (n != Rational(r - 3)) return;
            ++result.condition_pass;
            std::vector<int> elems;
            for (int c : shortlist) elems.push_back(ctx.classes.reps[c]);
            if (!generates(g, elems)) return;
            std::vector<int> canon = canonical_passport(ctx, full);
            if (!seen.insert(canon).second) return;
            CounterExampleRecord rec;
            rec.signature = sig;
            std::map<int, int> mult;
            for (int c : full) ++mult[c];
            rec.passport.assign(mult.begin(), mult.end());
            rec.dimension = r - 3;
            rec.witness = elems;
            rec.witness.push_back(forced);
            result.records.push_back(std::move(rec));
        };
        try {
            enumerate_passport_orbits(ctx, reduced, opt.subset_cap, complete);
        } catch (const subset_memory_cap&) {
            result = TaskResult{};
            result.used_fallback = true;
            seen.clear();
            enumerate_all_passports(ctx, reduced, complete);
        }
        // order by the emitted passport for reproducible output
        std::sort(result.records.begin(), result.records.end(),
                  [](const CounterExampleRecord& a, const CounterExampleRecord& b) {
                      return a.passport < b.passport;
                  });
        return result;
    }

    std::set<std::vector<int>> seen;
    bool dedup = false;
    auto test = [&](const std::vector<int>& passport) {
        ++result.passports_tested;
        std::map<int, int> mult;
        for (int c : passport) ++mult[c];
        std::vector<std::pair<int, int>> pairs(mult.begin(), mult.end());
        if (frobenius_class_sum(ctx.table, ctx.classes, pairs) == 0) return;
        ++result.frobenius_pass;
        Rational n = dimension_N(ctx, passport);
        if (n.get_den() != 1)
            throw non_integer_dimension("N is not an integer on a passport that passed Frobenius");
        if (n != Rational(r - 3)) return;
        ++result.condition_pass;
        std::vector<int> witness;
        if (!find_spherical_system(ctx, passport, witness)) return;
        if (dedup && !seen.insert(canonical_passport(ctx, passport)).second) return;
        CounterExampleRecord rec;
        rec.signature = sig;
        rec.passport.assign(pairs.begin(), pairs.end());
        rec.dimension = r - 3;
        rec.witness = std::move(witness);
        result.records.push_back(std::move(rec));
    };
    try {
        enumerate_passport_orbits(ctx, sig, opt.subset_cap, test);
    } catch (const subset_memory_cap&) {
        result = TaskResult{};
        result.used_fallback = true;
        dedup = true;
        enumerate_all_passports(ctx, sig, test);
    }
    std::sort(result.records.begin(), result.records.end(),
              [](const CounterExampleRecord& a, const CounterExampleRecord& b) {
                  return a.passport < b.passport;
              });
    return result;
}

} // namespace hurwitz
