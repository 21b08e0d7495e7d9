#pragma once

#include "hurwitz/cyclotomic.hpp"
#include "hurwitz/group.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace hurwitz {

// Exact table of irreducible complex characters.  Characters are sorted by
// (degree, lexicographic value vector), so the layout is reproducible and
// independent of the modular arithmetic used to compute it.
struct CharacterTable {
    int k = 0; // number of characters = number of classes
    int e = 1; // conductor = group exponent
    std::shared_ptr<const CycField> field;
    std::vector<int> degrees;
    std::vector<std::vector<Cyclotomic>> values; // [character][class]
    int trivial_index = 0;

    const Cyclotomic& value(int chi, int cls) const { return values[chi][cls]; }
};

// Dixon-Schneider: split the class algebra over a prime p = 1 (mod e) with
// p > 2|G|, lift eigenvalue data to Q(zeta_e) through a fixed primitive e-th
// root of unity in F_p, and verify the orthogonality relations exactly.
// Throws lift_failure or orthogonality_failure on internal inconsistency.
CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cd);

// Multiplicity of zeta_m^alpha (m = order of class c, alpha = 0..m-1) as an
// eigenvalue of rho(x), x in c, for a representation rho affording chi.
// Computed from character values of the powers of c by the inverse DFT.
std::vector<long long> eigenvalue_multiplicities(const CharacterTable& t,
                                                 const ConjugacyData& cd, int chi, int c);

// Number of tuples, one entry per listed class repeated with multiplicity,
// whose ordered product is the identity:
//   (|C_1|...|C_r|/|G|) * sum_chi chi(C_1)...chi(C_r)/chi(1)^(r-2).
// The passport is a list of (class, multiplicity) pairs, r = total count.
// Always a nonnegative integer; throws non_integer_count otherwise.
Rational frobenius_class_sum(const CharacterTable& t, const ConjugacyData& cd,
                             const std::vector<std::pair<int, int>>& passport);

} // namespace hurwitz
