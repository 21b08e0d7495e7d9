#pragma once

#include "hurwitz/perm.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

// A finite group given by its full multiplication table.  Element 0 is the
// identity; the numbering is the breadth-first discovery order from the
// generators, so it is reproducible for a fixed generator list.
struct FiniteGroup {
    int n = 1;                       // order
    std::vector<uint16_t> mul_table; // n*n, row-major: mul_table[a*n+b] = a*b
    std::vector<uint16_t> inv;       // inverses
    std::vector<int> elem_order;     // element orders
    std::vector<int> generators;     // indices of the defining generators

    int mul(int a, int b) const { return mul_table[a * n + b]; }
    int inverse(int a) const { return inv[a]; }
    int order_of(int a) const { return elem_order[a]; }

    // a^k for any integer k (negative allowed).
    int power(int a, long long k) const;

    bool is_abelian() const;
    bool is_cyclic() const;
    // true iff every non-identity element has order p for the single prime p=2
    bool is_elementary_abelian_2() const;
    int exponent() const; // lcm of element orders

    // Conjugate b^-1 * a * b.
    int conj(int a, int b) const { return mul(mul(inverse(b), a), b); }
};

// Builds the group generated by permutations of {0..degree-1} via closure,
// elements numbered in BFS order (identity first, then products with the
// generators in the given order).  Throws invalid_permutation for bad input
// and closure_cap_exceeded if the closure grows past max_order.
FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                        int max_order = 4096);

// Builds a group directly from a multiplication table (for constructed
// groups).  Validates associativity, identity at 0 and inverses; throws
// error on violation.
FiniteGroup from_mul_table(int n, std::vector<uint16_t> table);

// Same without the cubic associativity check, for callers whose tables are
// groups by construction (the catalog generator's extension tables).
FiniteGroup from_mul_table_unchecked(int n, std::vector<uint16_t> table);

// Direct product A x B, elements numbered a*|B|+b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// True iff the listed elements generate the whole group.
bool generates(const FiniteGroup& g, const std::vector<int>& elems);

// The subgroup generated by elems, as a sorted list of element indices.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& elems);

// A subgroup, given as a sorted closed element list, repackaged as a group of
// its own (elements renumbered by position in the list).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elems);

// Conjugacy classes.  Classes are numbered by ascending smallest member, so
// class 0 is the identity class and the representative of each class is its
// smallest element.
struct ConjugacyData {
    int k = 0;                              // number of classes
    std::vector<int> class_of;              // element -> class
    std::vector<int> reps;                  // class -> representative element
    std::vector<int> class_size;            // class -> size
    std::vector<int> class_order;           // class -> element order
    std::vector<std::vector<int>> members;  // class -> sorted member list
    std::vector<std::vector<int>> power_cl; // power_cl[c][t] = class of rep^t, 0 <= t < order

    int power_class(int c, long long t) const {
        int m = class_order[c];
        return power_cl[c][static_cast<int>(((t % m) + m) % m)];
    }
    int inverse_class(int c) const { return power_class(c, -1); }
};

ConjugacyData conjugacy_data(const FiniteGroup& g);

// Invariant factors k_1 | k_2 | ... | k_p of the abelianisation G/[G,G]
// (empty for perfect groups, and for the trivial group).
std::vector<int> abelian_invariants(const FiniteGroup& g);

// The derived subgroup [G,G] as a sorted element list.
std::vector<int> derived_subgroup(const FiniteGroup& g);

// The full automorphism group, listed explicitly.  Each automorphism is the
// image vector on elements; class_action[i] is the induced permutation of
// conjugacy classes of the i-th automorphism.  The search walks order-matched
// candidate images of a minimal generating set and counts extension steps;
// past max_nodes it throws aut_cap_exceeded.
struct AutomorphismGroup {
    std::vector<std::vector<int>> maps;         // element image vectors
    std::vector<std::vector<int>> class_action; // induced class permutations
    size_t size() const { return maps.size(); }
};

AutomorphismGroup automorphism_group(const FiniteGroup& g, const ConjugacyData& cd,
                                     long long max_nodes = 50'000'000);

// A distinguished minimal generating sequence: repeatedly adjoin the smallest
// element outside the subgroup generated so far.
std::vector<int> greedy_generators(const FiniteGroup& g);

// Isomorphism-invariant per-element data used to prune image candidates and
// to refine group fingerprints: order, class size, class sizes of the square
// and the cube, whether the centralizer is abelian, and the number of square
// and cube roots (which separates, say, a square involution from the others
// in an abelian 2-group, where all the preceding data agrees).
std::vector<std::array<int, 7>> element_profiles(const FiniteGroup& g);

// Stable colouring of the elements by iterated refinement: starting from the
// element profiles, each round recolours x by the multiset of colour pairs
// (y, x*y) over all y, with labels assigned in sorted signature order so that
// isomorphic groups receive identical labellings.  The certificate is a
// canonical digest of the stable colouring; unequal certificates prove the
// groups non-isomorphic, which settles most such pairs without any search.
struct WlColoring {
    std::vector<int> color;
    std::string certificate;
};

WlColoring wl_coloring(const FiniteGroup& g);

// Searches for an isomorphism a -> b by the same backtracking; returns the
// element image vector, or an empty vector if the groups are not isomorphic.
std::vector<int> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                  long long max_nodes = 500'000'000);

// Center and commutator helpers used by the catalog tooling.
std::vector<int> center(const FiniteGroup& g);
int commutator(const FiniteGroup& g, int a, int b);

} // namespace hurwitz
