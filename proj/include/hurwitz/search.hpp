#pragma once

#include "hurwitz/character.hpp"
#include "hurwitz/group.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

// Branching orders m_1 <= ... <= m_r of a family of Galois covers of the line.
using Signature = std::vector<int>;

// Genus of a degree-d Galois cover of the line branched with the given
// signature, from 2(g-1) = d(-2 + sum(1 - 1/m_i)); -1 if the relation has no
// integer solution.
long long genus_of(long long d, const Signature& sig);

// All signatures a degree-d cover of genus g with r >= 4 branch points can
// have: nondecreasing proper divisors of d greater than 1, with
// r <= 4(g-1)/d + 4.  Empty unless 2 <= d <= 12(g-1).  Sorted by length,
// then lexicographically.
std::vector<Signature> signatures(int genus, int d);

struct SearchOptions {
    // The element-order bound, the (Z/2)^4-quotient test and the two
    // abelianisation tests; scope rules and order feasibility stay on.
    bool use_bounds_pruning = true;
    // Skip elementary abelian 2-groups entirely when genus >= 4 (they are
    // known to carry no counter-examples there).  Off by default so the
    // search covers them explicitly.
    bool skip_elementary_2 = false;
    // Abort the orbit iteration when one level would materialise more than
    // this many subsets; the caller can fall back to plain enumeration.
    long long subset_cap = 10'000'000;
    // Ignore the abelian short-sequence path and run the generic one.
    bool force_generic = false;
};

// Why a (group, signature) pair was discarded before the passport search.
enum class Rejection {
    accepted,
    abelian_with_four_points, // r = 4 and G abelian: no positive-dimensional family
    cyclic,                   // r > 4 and G cyclic
    missing_order,            // some m_i is not an element order of G
    element_order_bound,      // g > 2 and G has an element of order > 4(g-1)
    four_even_invariants,     // G surjects onto (Z/2)^4
    too_few_generators,       // abelianisation needs more than r-1 generators
    lcm_quotient,             // some m_j can be dropped without covering k_p
    elementary_2_skipped,     // optional (Z/2)^k skip for genus >= 4
};

const char* rejection_name(Rejection r);

// Applies the rejection tests in a fixed order and reports the first that
// fires, or `accepted`.
Rejection admissible(const FiniteGroup& g, const ConjugacyData& cd, int genus,
                     const Signature& sig, const SearchOptions& opt);

// Per-group data shared by every signature searched on that group.
struct GroupContext {
    const FiniteGroup* group = nullptr; // not owned
    ConjugacyData classes;
    CharacterTable table;
    std::vector<std::vector<int>> aut_class_perms; // Aut(G) on classes, deduplicated
    // cw_term[t][c] = sum_alpha N_alpha * alpha / m for character t at class c,
    // where N_alpha is the multiplicity of the eigenvalue zeta_m^alpha
    std::vector<std::vector<Rational>> cw_term;
    std::vector<int> fs_indicator;  // Frobenius-Schur indicator per character
    std::vector<int> conj_character; // index of the complex conjugate character
};

GroupContext make_group_context(const FiniteGroup& g);

// Multiplicity vector (mu_chi) of the canonical representation attached to a
// refined passport, via Chevalley-Weil.  `passport` lists one class id per
// branch point, repetitions included, in any order.
std::vector<Rational> chevalley_weil(const GroupContext& ctx,
                                     const std::vector<int>& passport);

// N = dim of the invariants of the symmetric square, as an exact rational:
// N = 1/2 sum_t mu_t (nu_2(chi_t) + mu_conj(t)).  Integral whenever the
// passport carries a product-one tuple.
Rational dimension_N(const GroupContext& ctx, const std::vector<int>& passport);

// True iff some (g_1,...,g_r) with g_i in the listed classes multiplies to
// the identity and generates the group; fills `witness` with the first such
// tuple found (its order may differ from `passport`'s, the product is the
// identity in the order listed in `witness`).
bool find_spherical_system(const GroupContext& ctx, const std::vector<int>& passport,
                           std::vector<int>& witness);

// Full counter-example test for one refined passport: Frobenius' count is
// nonzero, N equals r-3, and a spherical system of generators exists.
bool is_counterexample(const GroupContext& ctx, const std::vector<int>& passport,
                       std::vector<int>& witness);

// Smallest image of the sorted passport under Aut(G), for de-duplication.
std::vector<int> canonical_passport(const GroupContext& ctx,
                                    const std::vector<int>& passport);

// Calls `visit` with one refined passport (sorted class ids, one per branch
// point) for each Aut(G)-orbit of passports with the given signature.  Throws
// subset_memory_cap if a level exceeds opt.subset_cap subsets.
void enumerate_passport_orbits(const GroupContext& ctx, const Signature& sig,
                               long long subset_cap,
                               const std::function<void(const std::vector<int>&)>& visit);

// Every refined passport with the given signature, unreduced (for tests and
// for the fallback path).
void enumerate_all_passports(const GroupContext& ctx, const Signature& sig,
                             const std::function<void(const std::vector<int>&)>& visit);

struct CounterExampleRecord {
    int genus = 0;
    int order = 0;
    int group_index = -1;
    std::string group_label;
    Signature signature;
    std::vector<std::pair<int, int>> passport; // (class id, multiplicity), ascending
    long long dimension = 0;                   // N = r - 3
    std::vector<int> witness;                  // spherical generating system
};

struct TaskResult {
    std::vector<CounterExampleRecord> records; // group fields left to the caller
    bool used_fallback = false;                // orbit iteration hit the subset cap
    long long passports_tested = 0;
    long long frobenius_pass = 0;
    long long condition_pass = 0; // passed Frobenius and N = r-3
};

// Counter-examples for one admissible (group, signature) pair, one per
// Aut(G)-orbit.  Uses the short-sequence path on abelian groups unless
// opt.force_generic is set; falls back to plain enumeration with canonical
// de-duplication if the orbit iteration exceeds opt.subset_cap.
TaskResult search_signature(const GroupContext& ctx, int genus, const Signature& sig,
                            const SearchOptions& opt);

} // namespace hurwitz
