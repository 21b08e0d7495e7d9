#include "hurwitz/perm.hpp"

#include "hurwitz/errors.hpp"

#include "doctest.h"

using namespace hurwitz;

TEST_CASE("cycle parsing and formatting") {
    Perm p = parse_cycles("(1 2)(3 4)", 5);
    CHECK(p == Perm{1, 0, 3, 2, 4});
    CHECK(format_cycles(p) == "(1 2)(3 4)");

    CHECK(parse_cycles("()", 3) == perm_identity(3));
    CHECK(parse_cycles("", 3) == perm_identity(3));
    CHECK(format_cycles(perm_identity(3)) == "()");

    // commas and stray whitespace are tolerated
    CHECK(parse_cycles(" (1, 2, 3) ", 3) == parse_cycles("(1 2 3)", 3));

    // (1 2 3) maps 1->2, 2->3, 3->1
    Perm q = parse_cycles("(1 2 3)", 3);
    CHECK(q == Perm{1, 2, 0});
}

TEST_CASE("cycle parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(0 1)", 3), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("1 2 3", 3), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 x)", 3), invalid_permutation);
}

TEST_CASE("composition is left-then-right") {
    Perm a = parse_cycles("(1 2)", 3);
    Perm b = parse_cycles("(1 2 3)", 3);
    // apply (1 2) then (1 2 3): 1->2->3, 2->1->2, 3->3->1, i.e. (1 3)
    CHECK(perm_compose(a, b) == parse_cycles("(1 3)", 3));
    CHECK(perm_compose(b, a) == parse_cycles("(2 3)", 3));
    CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
}

TEST_CASE("is_permutation") {
    CHECK(is_permutation({2, 0, 1}));
    CHECK_FALSE(is_permutation({0, 0, 1}));
    CHECK_FALSE(is_permutation({0, 3, 1}));
}
