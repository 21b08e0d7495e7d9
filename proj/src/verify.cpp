#include "hurwitz/verify.hpp"

#include "hurwitz/catalog.hpp"
#include "hurwitz/character.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

struct Failure {
    std::string detail;
};

std::string passport_text(const std::vector<int>& passport) {
    std::string s = "[";
    for (size_t i = 0; i < passport.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(passport[i]);
    }
    return s + "]";
}

// All multisets of the given size over values [0, k); calls visit on each.
void multisets(int k, int size, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            visit(cur);
            return;
        }
        for (int c = from; c < k; ++c) {
            cur.push_back(c);
            self(self, c, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
}

long long brute_product_one_count(const FiniteGroup& g, const ConjugacyData& cd,
                                  const std::vector<int>& passport) {
    int r = static_cast<int>(passport.size());
    std::vector<char> in_last(g.n, 0);
    for (int x : cd.members[passport[r - 1]]) in_last[x] = 1;
    long long count = 0;
    auto rec = [&](auto&& self, int i, int prod) -> void {
        if (i == r - 1) {
            count += in_last[g.inverse(prod)];
            return;
        }
        for (int x : cd.members[passport[i]]) self(self, i + 1, g.mul(prod, x));
    };
    rec(rec, 0, 0);
    return count;
}

bool orders_present(const ConjugacyData& cd, const Signature& sig) {
    for (int m : sig) {
        bool found = false;
        for (int c = 0; c < cd.k; ++c)
            if (cd.class_order[c] == m) found = true;
        if (!found) return false;
    }
    return true;
}

using Suite = std::function<void(const Catalog&, int, SuiteResult&)>;

void suite_orthogonality(const Catalog& catalog, int max_order, SuiteResult& res) {
    for (const auto& [d, entries] : catalog.by_order) {
        if (d > max_order) continue;
        for (const CatalogEntry& entry : entries) {
            ConjugacyData cd = conjugacy_data(entry.group);
            CharacterTable t = character_table(entry.group, cd);
            long long degsq = 0;
            for (int deg : t.degrees) degsq += static_cast<long long>(deg) * deg;
            ++res.checks;
            if (degsq != entry.group.n)
                throw Failure{entry.label + ": degree squares sum to " + std::to_string(degsq)};
            for (int i = 0; i < t.k; ++i)
                for (int j = 0; j < t.k; ++j) {
                    Cyclotomic acc = Cyclotomic::from_rational(*t.field, Rational(0));
                    for (int c = 0; c < t.k; ++c) {
                        Cyclotomic term = t.value(i, c);
                        term *= t.value(j, cd.inverse_class(c));
                        term *= Rational(cd.class_size[c]);
                        acc += term;
                    }
                    ++res.checks;
                    Rational want(i == j ? entry.group.n : 0);
                    if (!acc.is_rational() || acc.rational_value() != want)
                        throw Failure{entry.label + ": rows " + std::to_string(i) + "," +
                                      std::to_string(j) + " not orthonormal"};
                }
        }
    }
}

void suite_frobenius(const Catalog& catalog, int max_order, SuiteResult& res) {
    for (const auto& [d, entries] : catalog.by_order) {
        if (d > max_order) continue;
        for (const CatalogEntry& entry : entries) {
            const FiniteGroup& g = entry.group;
            ConjugacyData cd = conjugacy_data(g);
            CharacterTable t = character_table(g, cd);
            // class 0 is the identity; passports draw from the others
            std::vector<int> nontrivial;
            for (int c = 1; c < cd.k; ++c) nontrivial.push_back(c);
            for (int r = 2; r <= 5; ++r)
                multisets(static_cast<int>(nontrivial.size()), r, [&](const std::vector<int>& ms) {
                    std::vector<int> passport;
                    for (int i : ms) passport.push_back(nontrivial[i]);
                    std::map<int, int> mult;
                    for (int c : passport) ++mult[c];
                    Rational formula = frobenius_class_sum(
                        t, cd, std::vector<std::pair<int, int>>(mult.begin(), mult.end()));
                    long long brute = brute_product_one_count(g, cd, passport);
                    ++res.checks;
                    if (formula != Rational(static_cast<long>(brute)))
                        throw Failure{entry.label + " passport " + passport_text(passport) +
                                      ": formula " + formula.get_str() + ", brute force " +
                                      std::to_string(brute)};
                });
        }
    }
}

void suite_chevalley_weil(const Catalog& catalog, int max_order, SuiteResult& res) {
    for (const auto& [d, entries] : catalog.by_order) {
        if (d > max_order) continue;
        for (const CatalogEntry& entry : entries) {
            GroupContext ctx = make_group_context(entry.group);
            for (int t = 0; t < ctx.classes.k; ++t) {
                for (int c = 0; c < ctx.classes.k; ++c) {
                    std::vector<long long> mult =
                        eigenvalue_multiplicities(ctx.table, ctx.classes, t, c);
                    long long total = 0;
                    for (long long m : mult) {
                        if (m < 0)
                            throw Failure{entry.label + ": negative eigenvalue multiplicity"};
                        total += m;
                    }
                    ++res.checks;
                    if (total != ctx.table.degrees[t])
                        throw Failure{entry.label + ": eigenvalue multiplicities of character " +
                                      std::to_string(t) + " at class " + std::to_string(c) +
                                      " sum to " + std::to_string(total)};
                }
            }
            for (int genus = 2; genus <= 5; ++genus)
                for (const Signature& sig : signatures(genus, entry.group.n)) {
                    if (!orders_present(ctx.classes, sig)) continue;
                    enumerate_all_passports(ctx, sig, [&](const std::vector<int>& p) {
                        std::vector<int> witness;
                        if (!find_spherical_system(ctx, p, witness)) return;
                        std::vector<Rational> mu = chevalley_weil(ctx, p);
                        Rational total(0);
                        for (int t = 0; t < ctx.classes.k; ++t) {
                            if (mu[t].get_den() != 1)
                                throw Failure{entry.label + " passport " + passport_text(p) +
                                              ": non-integral multiplicity"};
                            total += mu[t] * Rational(ctx.table.degrees[t]);
                        }
                        ++res.checks;
                        if (total != Rational(genus))
                            throw Failure{entry.label + " passport " + passport_text(p) +
                                          ": multiplicities sum to " + total.get_str() +
                                          ", genus is " + std::to_string(genus)};
                    });
                }
        }
    }
}

void suite_orbits(const Catalog& catalog, int max_order, SuiteResult& res) {
    for (const auto& [d, entries] : catalog.by_order) {
        if (d > max_order) continue;
        for (const CatalogEntry& entry : entries) {
            GroupContext ctx = make_group_context(entry.group);
            for (int genus = 2; genus <= 4; ++genus)
                for (const Signature& sig : signatures(genus, entry.group.n)) {
                    if (!orders_present(ctx.classes, sig)) continue;
                    std::set<std::vector<int>> canon_reps;
                    size_t reps = 0;
                    enumerate_passport_orbits(ctx, sig, 10'000'000,
                                              [&](const std::vector<int>& p) {
                                                  ++reps;
                                                  canon_reps.insert(canonical_passport(ctx, p));
                                              });
                    std::set<std::vector<int>> canon_all;
                    enumerate_all_passports(ctx, sig, [&](const std::vector<int>& p) {
                        canon_all.insert(canonical_passport(ctx, p));
                    });
                    ++res.checks;
                    if (canon_reps.size() != reps)
                        throw Failure{entry.label + " signature " +
                                      passport_text(std::vector<int>(sig.begin(), sig.end())) +
                                      ": orbit representatives overlap"};
                    if (canon_all != canon_reps)
                        throw Failure{entry.label + " signature " +
                                      passport_text(std::vector<int>(sig.begin(), sig.end())) +
                                      ": orbit representatives miss passports"};
                }
        }
    }
}

void suite_bound(const Catalog& catalog, int max_order, SuiteResult& res) {
    for (const auto& [d, entries] : catalog.by_order) {
        if (d > max_order) continue;
        for (const CatalogEntry& entry : entries) {
            GroupContext ctx = make_group_context(entry.group);
            for (int genus = 2; genus <= 5; ++genus)
                for (const Signature& sig : signatures(genus, entry.group.n)) {
                    if (!orders_present(ctx.classes, sig)) continue;
                    int r = static_cast<int>(sig.size());
                    enumerate_all_passports(ctx, sig, [&](const std::vector<int>& p) {
                        std::vector<int> witness;
                        if (!find_spherical_system(ctx, p, witness)) return;
                        ++res.checks;
                        if (dimension_N(ctx, p) < Rational(r - 3))
                            throw Failure{entry.label + " passport " + passport_text(p) +
                                          ": N below r - 3"};
                    });
                }
        }
    }
}

void suite_abelian(const Catalog& catalog, int max_order, SuiteResult& res) {
    for (const auto& [d, entries] : catalog.by_order) {
        if (d > max_order) continue;
        for (const CatalogEntry& entry : entries) {
            if (!entry.group.is_abelian()) continue;
            GroupContext ctx = make_group_context(entry.group);
            ConjugacyData cd = conjugacy_data(entry.group);
            for (int genus = 2; genus <= 4; ++genus)
                for (const Signature& sig : signatures(genus, entry.group.n)) {
                    SearchOptions opt;
                    if (admissible(entry.group, cd, genus, sig, opt) != Rejection::accepted)
                        continue;
                    TaskResult fast = search_signature(ctx, genus, sig, opt);
                    SearchOptions generic;
                    generic.force_generic = true;
                    TaskResult slow = search_signature(ctx, genus, sig, generic);
                    auto canon = [&](const TaskResult& r) {
                        std::set<std::vector<int>> s;
                        for (const CounterExampleRecord& rec : r.records) {
                            std::vector<int> flat;
                            for (auto [c, n] : rec.passport)
                                for (int i = 0; i < n; ++i) flat.push_back(c);
                            s.insert(canonical_passport(ctx, flat));
                        }
                        return s;
                    };
                    ++res.checks;
                    if (canon(fast) != canon(slow))
                        throw Failure{entry.label + " signature " +
                                      passport_text(std::vector<int>(sig.begin(), sig.end())) +
                                      ": abelian and generic paths disagree"};
                }
        }
    }
}

} // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opt, std::ostream& log) {
    std::vector<std::pair<std::string, Suite>> all{
        {"catalog",
         [&](const Catalog&, int max_order, SuiteResult& res) {
             CatalogReport report = verify_catalog(opt.catalog_dir, max_order);
             res.checks = report.groups_checked;
             for (const std::string& w : report.warnings) log << "  note: " << w << "\n";
         }},
        {"orthogonality", suite_orthogonality},
        {"frobenius", suite_frobenius},
        {"chevalley-weil", suite_chevalley_weil},
        {"orbits", suite_orbits},
        {"bound", suite_bound},
        {"abelian", suite_abelian},
    };

    std::vector<SuiteResult> results;
    Catalog catalog;
    bool loaded = false;
    for (const auto& [name, suite] : all) {
        if (!opt.suites.empty() &&
            std::find(opt.suites.begin(), opt.suites.end(), name) == opt.suites.end())
            continue;
        if (name != "catalog" && !loaded) {
            catalog = load_catalog(opt.catalog_dir, 1, opt.max_order);
            loaded = true;
        }
        SuiteResult res;
        res.suite = name;
        try {
            suite(catalog, opt.max_order, res);
        } catch (const Failure& f) {
            res.passed = false;
            res.detail = f.detail;
        }
        log << res.suite << ": " << (res.passed ? "pass" : "FAIL") << " (" << res.checks
            << " checks)";
        if (!res.passed) log << " " << res.detail;
        log << "\n";
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace hurwitz
