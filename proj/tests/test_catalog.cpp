#include "hurwitz/catalog.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/perm.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

using namespace hurwitz;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("catalog_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("builders produce the expected groups") {
    CHECK(trivial_group().n == 1);
    CHECK(cyclic_group(12).is_cyclic());
    CHECK(cyclic_group(12).exponent() == 12);
    CHECK(abelian_group({2, 4}).n == 8);
    CHECK(abelian_invariants(abelian_group({2, 4})) == std::vector<int>{2, 4});
    // C2 x C2 x C3 = C2 x C6 in canonical divisor-chain form
    CHECK(abelian_invariants(abelian_group({2, 2, 3})) == std::vector<int>{2, 6});
    CHECK(elementary_abelian_group(2, 4).n == 16);
    CHECK(elementary_abelian_group(2, 4).is_elementary_abelian_2());
    CHECK(elementary_abelian_group(3, 2).exponent() == 3);

    FiniteGroup d6 = dihedral_group(6);
    CHECK(d6.n == 12);
    CHECK_FALSE(d6.is_abelian());
    CHECK(d6.exponent() == 6);

    FiniteGroup q8 = dicyclic_group(2);
    CHECK(q8.n == 8);
    FiniteGroup q8perm = from_permutation_generators(
        8, {parse_cycles("(1 3 2 4)(5 8 6 7)", 8), parse_cycles("(1 5 2 6)(3 7 4 8)", 8)});
    CHECK(isomorphic(q8, q8perm));
    CHECK_FALSE(isomorphic(q8, dihedral_group(4)));
    CHECK_FALSE(isomorphic(q8, abelian_group({2, 4})));

    CHECK(symmetric_group(4).n == 24);
    CHECK(alternating_group(4).n == 12);
    CHECK(alternating_group(5).n == 60);
    CHECK(isomorphic(symmetric_group(3), dihedral_group(3)));
    CHECK(isomorphic(dicyclic_group(1), cyclic_group(4)));
}

TEST_CASE("catalog file round trip") {
    TempDir tmp;
    std::vector<CatalogEntry> entries;
    CatalogEntry a;
    a.order = 6;
    a.index = 0;
    a.label = "C6";
    a.degree = 6;
    a.generators = {parse_cycles("(1 2 3 4 5 6)", 6)};
    entries.push_back(a);
    CatalogEntry b;
    b.order = 6;
    b.index = 1;
    b.label = "S3";
    b.degree = 3;
    b.generators = {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
    entries.push_back(b);
    std::string path = (tmp.path / "order_6.groups").string();
    write_order_file(path, 6, entries);

    std::vector<CatalogEntry> back = load_order_file(path, 6);
    REQUIRE(back.size() == 2);
    CHECK(back[0].label == "C6");
    CHECK(back[0].group.is_cyclic());
    CHECK(back[1].label == "S3");
    CHECK_FALSE(back[1].group.is_abelian());
    CHECK(back[1].group.n == 6);
}

TEST_CASE("catalog parser tolerates comments and whitespace") {
    TempDir tmp;
    std::string path = (tmp.path / "order_4.groups").string();
    write_file(path,
               "# leading comment\n"
               "order 4 count 2   # trailing comment\n"
               "\n"
               "group 0 label C4 degree 4\n"
               "  (1 2 3 4)  \n"
               "end\n"
               "group 1 label C2xC2 degree 4\n"
               "(1 2)\n"
               "(3 4)\n"
               "end\n");
    std::vector<CatalogEntry> got = load_order_file(path, 4);
    REQUIRE(got.size() == 2);
    CHECK(got[0].group.is_cyclic());
    CHECK(got[1].group.is_elementary_abelian_2());
}

TEST_CASE("catalog parser reports structural errors with line numbers") {
    TempDir tmp;
    std::string p1 = (tmp.path / "a.groups").string();
    write_file(p1, "order 4 count 1\ngroup 0 label X degree 4\n(1 2 3 4)\n");
    CHECK_THROWS_AS(load_order_file(p1, 4), parse_error);

    std::string p2 = (tmp.path / "b.groups").string();
    write_file(p2, "order 4 count 2\ngroup 0 label C4 degree 4\n(1 2 3 4)\nend\n");
    CHECK_THROWS_AS(load_order_file(p2, 4), count_mismatch);

    std::string p3 = (tmp.path / "c.groups").string();
    write_file(p3, "order 8 count 1\ngroup 0 label X degree 4\n(1 2 3 4)\nend\n");
    CHECK_THROWS_AS(load_order_file(p3, 8), order_mismatch);

    std::string p4 = (tmp.path / "d.groups").string();
    write_file(p4, "order 2 count 1\ngroup 0 label X degree 4\n(1 2 3 4)\nend\n");
    CHECK_THROWS_AS(load_order_file(p4, 2), order_mismatch);

    std::string p5 = (tmp.path / "e.groups").string();
    write_file(p5, "order 4 count 1\ngroup 0 label X degree 4\n(1 2 9)\nend\n");
    CHECK_THROWS_AS(load_order_file(p5, 4), parse_error);

    CHECK_THROWS_AS(load_order_file((tmp.path / "absent.groups").string(), 4), missing_order);

    std::string p6 = (tmp.path / "f.groups").string();
    write_file(p6, "order 4 count 1\ngroup 5 label X degree 4\n(1 2 3 4)\nend\n");
    CHECK_THROWS_AS(load_order_file(p6, 4), parse_error);
}

TEST_CASE("verify_catalog certifies a small complete directory") {
    TempDir tmp;
    write_file(tmp.path / "order_1.groups",
               "order 1 count 1\ngroup 0 label C1 degree 1\nend\n");
    write_file(tmp.path / "order_2.groups",
               "order 2 count 1\ngroup 0 label C2 degree 2\n(1 2)\nend\n");
    write_file(tmp.path / "order_3.groups",
               "order 3 count 1\ngroup 0 label C3 degree 3\n(1 2 3)\nend\n");
    write_file(tmp.path / "order_4.groups",
               "order 4 count 2\n"
               "group 0 label C4 degree 4\n(1 2 3 4)\nend\n"
               "group 1 label C2xC2 degree 4\n(1 2)\n(3 4)\nend\n");
    CatalogReport rep = verify_catalog(tmp.path.string(), 4);
    CHECK(rep.orders_checked == 4);
    CHECK(rep.groups_checked == 5);
    CHECK(rep.warnings.empty());

    // a directory whose order-4 file lists the same group twice fails
    write_file(tmp.path / "order_4.groups",
               "order 4 count 2\n"
               "group 0 label C4 degree 4\n(1 2 3 4)\nend\n"
               "group 1 label C4again degree 4\n(1 4 3 2)\nend\n");
    CHECK_THROWS(verify_catalog(tmp.path.string(), 4));

    // wrong count against the classification
    write_file(tmp.path / "order_4.groups",
               "order 4 count 1\ngroup 0 label C4 degree 4\n(1 2 3 4)\nend\n");
    CHECK_THROWS_AS(verify_catalog(tmp.path.string(), 4), count_mismatch);
}

TEST_CASE("known group counts") {
    CHECK(known_group_count(1) == 1);
    CHECK(known_group_count(16) == 14);
    CHECK(known_group_count(32) == 51);
    CHECK(known_group_count(48) == 52);
    CHECK(known_group_count(60) == 13);
    CHECK(known_group_count(64) == 267);
    CHECK(known_group_count(72) == 50);
    CHECK(known_group_count(128) == 2328);
    CHECK(known_group_count(129) == -1);
    CHECK(known_group_count(0) == -1);
}

TEST_CASE("fingerprints separate easy nonisomorphic pairs") {
    CHECK(group_fingerprint(dihedral_group(4)) != group_fingerprint(dicyclic_group(2)));
    CHECK(group_fingerprint(cyclic_group(8)) != group_fingerprint(abelian_group({2, 4})));
    CHECK(group_fingerprint(symmetric_group(3)) == group_fingerprint(dihedral_group(3)));
}
