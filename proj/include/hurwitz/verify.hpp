#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz {

struct VerifyOptions {
    std::string catalog_dir = "data/smallgroups";
    int max_order = 16;
    std::vector<std::string> suites; // empty = all suites
};

struct SuiteResult {
    std::string suite;
    long long checks = 0;
    bool passed = true;
    std::string detail; // the first failing instance, when failed
};

// Independent oracle suites over the catalog groups up to max_order:
//   catalog        counts, closure orders, pairwise non-isomorphism
//   orthogonality  character row orthogonality and sum of squared degrees
//   frobenius      class-sum count against brute-force tuple enumeration
//   chevalley-weil eigenvalue multiplicities and genus consistency
//   orbits         orbit enumeration is a transversal of all passports
//   bound          N >= r-3 on every passport carrying a generating system
//   abelian        short-sequence path agrees with the generic path
// Each suite stops at its first failure and reports the instance.
std::vector<SuiteResult> run_verification(const VerifyOptions& opt, std::ostream& log);

} // namespace hurwitz
