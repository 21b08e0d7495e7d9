#include "hurwitz/character.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/perm.hpp"

#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace hurwitz;

namespace {

FiniteGroup sym3() {
    return from_permutation_generators(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
}

FiniteGroup quaternion8() {
    return from_permutation_generators(
        8, {parse_cycles("(1 3 2 4)(5 8 6 7)", 8), parse_cycles("(1 5 2 6)(3 7 4 8)", 8)});
}

FiniteGroup sym4() {
    return from_permutation_generators(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
}

FiniteGroup alt5() {
    return from_permutation_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
}

Rational rat(const Cyclotomic& v) { return v.rational_value(); }

// brute-force count of tuples with prescribed classes and product 1
long long brute_count(const FiniteGroup& g, const ConjugacyData& cd,
                      const std::vector<std::pair<int, int>>& passport) {
    std::vector<int> slots;
    for (auto [c, m] : passport)
        for (int i = 0; i < m; ++i) slots.push_back(c);
    long long count = 0;
    std::vector<int> stack{0};
    std::function<void(size_t, int)> rec = [&](size_t pos, int prod) {
        if (pos == slots.size()) {
            if (prod == 0) ++count;
            return;
        }
        for (int x : cd.members[slots[pos]]) rec(pos + 1, g.mul(prod, x));
    };
    rec(0, 0);
    return count;
}

} // namespace

TEST_CASE("character table of S3") {
    FiniteGroup g = sym3();
    ConjugacyData cd = conjugacy_data(g);
    CharacterTable t = character_table(g, cd);
    CHECK(t.k == 3);
    CHECK(t.e == 6);
    CHECK(t.degrees == std::vector<int>{1, 1, 2});
    // classes: id, transpositions, 3-cycles; characters sorted by
    // (degree, values): sign then trivial then the 2-dimensional one
    CHECK(rat(t.value(0, 0)) == 1);
    CHECK(rat(t.value(0, 1)) == -1);
    CHECK(rat(t.value(0, 2)) == 1);
    CHECK(t.trivial_index == 1);
    CHECK(rat(t.value(2, 0)) == 2);
    CHECK(rat(t.value(2, 1)) == 0);
    CHECK(rat(t.value(2, 2)) == -1);
}

TEST_CASE("character table of a cyclic group") {
    FiniteGroup c4 = from_permutation_generators(4, {parse_cycles("(1 2 3 4)", 4)});
    ConjugacyData cd = conjugacy_data(c4);
    CharacterTable t = character_table(c4, cd);
    CHECK(t.k == 4);
    CHECK(t.e == 4);
    CHECK(t.degrees == std::vector<int>{1, 1, 1, 1});
    // element 1 is the chosen generator; its value column is all primitive
    // and non-primitive fourth roots of unity, each exactly once
    const CycField& f = *t.field;
    std::multiset<std::vector<Rational>> col;
    for (int chi = 0; chi < 4; ++chi) col.insert(t.value(chi, 1).c);
    std::multiset<std::vector<Rational>> want;
    for (int k = 0; k < 4; ++k) want.insert(Cyclotomic::root_power(f, k).c);
    CHECK(col == want);
}

TEST_CASE("character tables of Q8 and S4") {
    FiniteGroup q8 = quaternion8();
    ConjugacyData cdq = conjugacy_data(q8);
    CharacterTable tq = character_table(q8, cdq);
    CHECK(tq.degrees == std::vector<int>{1, 1, 1, 1, 2});
    // the 2-dim character: 2 at 1, -2 at -1, 0 elsewhere
    int minus1 = -1;
    for (int c = 0; c < cdq.k; ++c)
        if (cdq.class_order[c] == 2) minus1 = c;
    CHECK(rat(tq.value(4, minus1)) == -2);
    for (int c = 0; c < cdq.k; ++c)
        if (cdq.class_order[c] == 4) CHECK(tq.value(4, c).is_zero());

    FiniteGroup s4 = sym4();
    ConjugacyData cds = conjugacy_data(s4);
    CharacterTable ts = character_table(s4, cds);
    CHECK(ts.degrees == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("character table of A5 has the golden ratio pair") {
    FiniteGroup a5 = alt5();
    ConjugacyData cd = conjugacy_data(a5);
    CharacterTable t = character_table(a5, cd);
    CHECK(t.degrees == std::vector<int>{1, 3, 3, 4, 5});
    // the two 3-dimensional characters take (1 +- sqrt5)/2 on 5-cycles and
    // are swapped on the two 5-cycle classes
    std::vector<int> five;
    for (int c = 0; c < cd.k; ++c)
        if (cd.class_order[c] == 5) five.push_back(c);
    REQUIRE(five.size() == 2);
    for (int chi : {1, 2}) {
        Cyclotomic s = t.value(chi, five[0]) + t.value(chi, five[1]);
        CHECK(s.rational_value() == 1);
        Cyclotomic pr = t.value(chi, five[0]) * t.value(chi, five[1]);
        CHECK(pr.rational_value() == -1);
    }
    CHECK(t.value(1, five[0]) == t.value(2, five[1]));
}

TEST_CASE("eigenvalue multiplicities for S3") {
    FiniteGroup g = sym3();
    ConjugacyData cd = conjugacy_data(g);
    CharacterTable t = character_table(g, cd);
    // sign character on a transposition: eigenvalue -1 once
    CHECK(eigenvalue_multiplicities(t, cd, 0, 1) == std::vector<long long>{0, 1});
    // trivial character: always eigenvalue 1
    CHECK(eigenvalue_multiplicities(t, cd, 1, 1) == std::vector<long long>{1, 0});
    CHECK(eigenvalue_multiplicities(t, cd, 1, 2) == std::vector<long long>{1, 0, 0});
    // standard character on a 3-cycle: zeta3 and zeta3^2; on a transposition: +1, -1
    CHECK(eigenvalue_multiplicities(t, cd, 2, 2) == std::vector<long long>{0, 1, 1});
    CHECK(eigenvalue_multiplicities(t, cd, 2, 1) == std::vector<long long>{1, 1});
    // at the identity, the multiplicity is the degree
    CHECK(eigenvalue_multiplicities(t, cd, 2, 0) == std::vector<long long>{2});
}

TEST_CASE("eigenvalue multiplicities sum to the degree") {
    for (FiniteGroup g : {sym4(), quaternion8()}) {
        ConjugacyData cd = conjugacy_data(g);
        CharacterTable t = character_table(g, cd);
        for (int chi = 0; chi < t.k; ++chi)
            for (int c = 0; c < cd.k; ++c) {
                auto mults = eigenvalue_multiplicities(t, cd, chi, c);
                long long sum = 0;
                for (long long m : mults) sum += m;
                CHECK(sum == t.degrees[chi]);
            }
    }
}

TEST_CASE("frobenius count matches brute force on S3") {
    FiniteGroup g = sym3();
    ConjugacyData cd = conjugacy_data(g);
    CharacterTable t = character_table(g, cd);
    // two transpositions and a 3-cycle multiplying to 1: 6 ways
    std::vector<std::pair<int, int>> pp{{1, 2}, {2, 1}};
    CHECK(frobenius_class_sum(t, cd, pp) == 6);
    CHECK(brute_count(g, cd, pp) == 6);
    // one transposition and one 3-cycle never multiply to 1
    std::vector<std::pair<int, int>> zero{{1, 1}, {2, 1}};
    CHECK(frobenius_class_sum(t, cd, zero) == 0);
    CHECK(brute_count(g, cd, zero) == 0);
}

TEST_CASE("frobenius count matches brute force on small groups") {
    for (FiniteGroup g :
         {sym3(), quaternion8(),
          from_permutation_generators(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)}),
          from_permutation_generators(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)})}) {
        ConjugacyData cd = conjugacy_data(g);
        CharacterTable t = character_table(g, cd);
        // all passports with up to three class slots (classes may repeat)
        for (int a = 0; a < cd.k; ++a)
            for (int b = a; b < cd.k; ++b) {
                CHECK(frobenius_class_sum(t, cd, {{a, 1}, {b, 1}}) == Rational(static_cast<long>(brute_count(g, cd, {{a, 1}, {b, 1}}))));
                for (int c = b; c < cd.k; ++c) {
                    std::map<int, int> m;
                    ++m[a];
                    ++m[b];
                    ++m[c];
                    std::vector<std::pair<int, int>> pp(m.begin(), m.end());
                    CHECK(frobenius_class_sum(t, cd, pp) == Rational(static_cast<long>(brute_count(g, cd, pp))));
                }
            }
    }
}

TEST_CASE("tables verify for every group used so far") {
    // character_table throws on any orthogonality defect, so construction
    // itself is the check; spot the degree sums anyway
    for (FiniteGroup g : {sym3(), sym4(), alt5(), quaternion8()}) {
        ConjugacyData cd = conjugacy_data(g);
        CharacterTable t = character_table(g, cd);
        long long sq = 0;
        for (int d : t.degrees) sq += static_cast<long long>(d) * d;
        CHECK(sq == g.n);
        CHECK(t.degrees[t.trivial_index] == 1);
    }
}

TEST_CASE("trivial group table") {
    FiniteGroup g = from_permutation_generators(1, {});
    ConjugacyData cd = conjugacy_data(g);
    CharacterTable t = character_table(g, cd);
    CHECK(t.k == 1);
    CHECK(t.degrees == std::vector<int>{1});
    CHECK(rat(t.value(0, 0)) == 1);
    CHECK(eigenvalue_multiplicities(t, cd, 0, 0) == std::vector<long long>{1});
}
