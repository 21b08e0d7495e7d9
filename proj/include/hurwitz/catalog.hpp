#pragma once

#include "hurwitz/group.hpp"

#include <map>
#include <string>
#include <vector>

namespace hurwitz {

// One group of the catalog: generators as permutations plus the closed group.
struct CatalogEntry {
    int order = 1;
    int index = 0; // position within its order, 0-based
    std::string label;
    int degree = 1;
    std::vector<Perm> generators;
    FiniteGroup group;
};

struct Catalog {
    std::map<int, std::vector<CatalogEntry>> by_order;

    bool has_order(int d) const { return by_order.count(d) != 0; }
    // throws missing_order if the order was not loaded
    const std::vector<CatalogEntry>& groups_of_order(int d) const;
};

// Reads one catalog file.  Format, '#' starts a comment anywhere:
//   order <d> count <k>
//   group <index> label <name> degree <n>
//   <one generator per line, disjoint cycles, 1-based points>
//   end
// Structural problems raise parse_error with the file and line; generators
// closing to the wrong order raise order_mismatch; a count line that does not
// match the number of blocks raises count_mismatch.
std::vector<CatalogEntry> load_order_file(const std::string& path, int expect_order);

// Loads order_<d>.groups for every d in [min_order, max_order] from dir.
// Missing files raise missing_order.
Catalog load_catalog(const std::string& dir, int min_order, int max_order);

void write_order_file(const std::string& path, int order,
                      const std::vector<CatalogEntry>& entries);

// Number of isomorphism classes of groups of the given order, 1..128;
// returns -1 outside the table.
int known_group_count(int order);

struct CatalogReport {
    int orders_checked = 0;
    int groups_checked = 0;
    std::vector<std::string> warnings;
};

// Certifies a catalog directory: every order present, counts matching the
// classification, generators closing to the right order, and no two entries
// isomorphic.  Entries sharing all cheap invariants are reported as duplicate
// suspects (warning) together with the outcome of the explicit isomorphism
// search that separates them.
CatalogReport verify_catalog(const std::string& dir, int max_order);

// Cheap isomorphism invariants, comparable as strings.
std::string group_fingerprint(const FiniteGroup& g);

// True iff the groups are isomorphic (backtracking generator-image search).
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Builders independent of the data files.
FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup abelian_group(const std::vector<int>& invariant_factors);
FiniteGroup elementary_abelian_group(int p, int rank);
FiniteGroup dihedral_group(int m);  // order 2m
FiniteGroup dicyclic_group(int m);  // order 4m; m = 2 gives Q8
FiniteGroup symmetric_group(int n); // n <= 6
FiniteGroup alternating_group(int n); // 3 <= n <= 6

} // namespace hurwitz
