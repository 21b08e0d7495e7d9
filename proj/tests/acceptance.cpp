// Acceptance gate for the cover-search artifact.  Runs the real CLI binary
// and the library-level verification suites and prints one line per numbered
// criterion; exits nonzero if any of them fails.
//
//   usage: acceptance [search-binary] [catalog-dir]
//
// Criteria 2 and 3 run against restricted copies of the catalog written to a
// scratch directory (only elementary abelian 2-groups, respectively only
// orders <= 16), so the CLI path is exercised end to end in both cases.

#include "hurwitz/catalog.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << (ok ? "pass" : "FAIL") << " criterion " << id << ": " << what;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    std::cout.flush();
    if (!ok) ++failures;
}

std::string search_bin;
std::string catalog_dir;
fs::path scratch;

// Runs the search binary with the given arguments; returns its exit status.
int run_cli(const std::string& args) {
    std::string cmd = search_bin + " " + args + " > " + (scratch / "cli.log").string() +
                      " 2> " + (scratch / "cli.err").string();
    int rc = std::system(cmd.c_str());
    return rc;
}

std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

// Writes a copy of the catalog keeping only the entries `keep` accepts;
// every order 2..72 gets a file so any genus range stays loadable.
void write_restricted_catalog(const fs::path& dir,
                              const std::function<bool(const hurwitz::CatalogEntry&)>& keep) {
    fs::create_directories(dir);
    hurwitz::Catalog cat = hurwitz::load_catalog(catalog_dir, 1, 72);
    for (int d = 1; d <= 72; ++d) {
        std::vector<hurwitz::CatalogEntry> kept;
        for (const auto& e : cat.groups_of_order(d))
            if (keep(e)) {
                hurwitz::CatalogEntry copy = e;
                copy.index = static_cast<int>(kept.size());
                kept.push_back(std::move(copy));
            }
        std::ostringstream name;
        name << "order_" << d << ".groups";
        hurwitz::write_order_file((dir / name.str()).string(), d, kept);
    }
}

// ---- criterion 1: the genus 3 run must contain the (Z/2)^2, r = 6, N = 3 family.

void criterion_1() {
    const std::string what = "genus 3 run reports the order-4 Klein family with r = 6 and N = 3";
    fs::path out = scratch / "g3.jsonl";
    int rc = run_cli("--genus 3 --catalog " + catalog_dir + " --out " + out.string());
    if (rc != 0) return report(1, false, what, "search binary exited nonzero");

    hurwitz::Catalog cat = hurwitz::load_catalog(catalog_dir, 4, 4);
    for (const auto& line : read_lines(out)) {
        json rec = json::parse(line);
        if (rec["genus"] != 3 || rec["order"] != 4 || rec["r"] != 6 || rec["N"] != 3) continue;
        const auto& entry = cat.groups_of_order(4).at(rec["group_index"].get<int>());
        if (!entry.group.is_elementary_abelian_2())
            return report(1, false, what, "matched record is not elementary abelian");
        if (rec["signature"] != json::array({2, 2, 2, 2, 2, 2}))
            return report(1, false, what, "matched record has the wrong signature");
        return report(1, true, what);
    }
    report(1, false, what, "no record with order 4, r = 6, N = 3 in " + out.string());
}

// ---- criterion 2: elementary abelian 2-groups alone yield nothing for genus 4..7.

void criterion_2() {
    const std::string what = "elementary abelian 2-groups yield no genus 4..7 records";
    fs::path dir = scratch / "cat_elem2";
    write_restricted_catalog(dir, [](const hurwitz::CatalogEntry& e) {
        return e.group.is_elementary_abelian_2();
    });
    for (const std::string extra : {std::string(""), std::string(" --no-prune")}) {
        fs::path out = scratch / "elem2.jsonl";
        fs::remove(out);
        int rc = run_cli("--genus 4..7 --catalog " + dir.string() + " --out " + out.string() + extra);
        if (rc != 0) return report(2, false, what, "search binary exited nonzero");
        auto lines = read_lines(out);
        if (!lines.empty())
            return report(2, false, what,
                          "unexpected record" + std::string(extra.empty() ? "" : " (no-prune)") +
                              ": " + lines.front());
    }
    report(2, true, what);
}

// ---- criterion 3: bounds pruning does not change the genus 2..4 record set.

void criterion_3() {
    const std::string what = "pruned and unpruned genus 2..4 runs agree on orders <= 16";
    fs::path dir = scratch / "cat_le16";
    write_restricted_catalog(dir, [](const hurwitz::CatalogEntry& e) { return e.order <= 16; });
    fs::path a = scratch / "le16_pruned.jsonl";
    fs::path b = scratch / "le16_noprune.jsonl";
    std::string base = "--genus 2..4 --catalog " + dir.string() + " --seed-report --out ";
    if (run_cli(base + a.string()) != 0 || run_cli(base + b.string() + " --no-prune") != 0)
        return report(3, false, what, "search binary exited nonzero");
    auto la = read_lines(a), lb = read_lines(b);
    if (la != lb) {
        std::ostringstream os;
        os << la.size() << " vs " << lb.size() << " records";
        return report(3, false, what, os.str());
    }
    if (la.empty()) return report(3, false, what, "both runs empty; expected genus 2..4 records");
    report(3, true, what);
}

// ---- criteria 4..8: library verification suites.

void criterion_suite(int id, const std::string& suite, int max_order, const std::string& what) {
    hurwitz::VerifyOptions opt;
    opt.catalog_dir = catalog_dir;
    opt.max_order = max_order;
    opt.suites = {suite};
    std::ostringstream log;
    auto results = hurwitz::run_verification(opt, log);
    if (results.size() != 1) return report(id, false, what, "suite did not run");
    const auto& r = results.front();
    report(id, r.passed && r.checks > 0, what, r.detail);
}

// ---- criterion 9: full sweep, stable across job counts, witnesses verified.

// Re-verifies one emitted record against the group itself: the witness must
// be a product-one generating tuple in the stated classes, and the stated
// genus, signature and dimension must all be recomputable from it.
bool verify_record(const json& rec, const hurwitz::CatalogEntry& entry,
                   std::map<std::pair<int, int>, std::shared_ptr<hurwitz::GroupContext>>& ctxs,
                   std::string& why) {
    const hurwitz::FiniteGroup& g = entry.group;
    auto key = std::make_pair(entry.order, entry.index);
    auto it = ctxs.find(key);
    if (it == ctxs.end())
        it = ctxs.emplace(key, std::make_shared<hurwitz::GroupContext>(
                                   hurwitz::make_group_context(g)))
                 .first;
    const hurwitz::GroupContext& ctx = *it->second;

    hurwitz::Signature sig = rec["signature"].get<hurwitz::Signature>();
    std::vector<int> witness = rec["witness"].get<std::vector<int>>();
    int r = rec["r"].get<int>();
    if (static_cast<int>(sig.size()) != r || static_cast<int>(witness.size()) != r) {
        why = "r does not match signature or witness length";
        return false;
    }
    if (hurwitz::genus_of(g.n, sig) != rec["genus"].get<long long>()) {
        why = "genus does not match the signature";
        return false;
    }

    std::vector<int> classes, orders, passport;
    int prod = 0;
    for (int e : witness) {
        if (e <= 0 || e >= g.n) {
            why = "witness element out of range";
            return false;
        }
        classes.push_back(ctx.classes.class_of[e]);
        orders.push_back(g.order_of(e));
        prod = g.mul(prod, e);
    }
    if (prod != 0) {
        why = "witness product is not the identity";
        return false;
    }
    if (!hurwitz::generates(g, witness)) {
        why = "witness does not generate the group";
        return false;
    }
    std::sort(orders.begin(), orders.end());
    if (orders != sig) {
        why = "witness element orders do not match the signature";
        return false;
    }
    for (const auto& part : rec["passport"]) {
        int c = part["class"].get<int>();
        if (c < 0 || c >= ctx.classes.k || part["order"].get<int>() != ctx.classes.class_order[c]) {
            why = "passport class order mismatch";
            return false;
        }
        for (int i = 0; i < part["mult"].get<int>(); ++i) passport.push_back(c);
    }
    std::sort(classes.begin(), classes.end());
    std::sort(passport.begin(), passport.end());
    if (classes != passport) {
        why = "witness classes do not match the passport";
        return false;
    }
    hurwitz::Rational n = hurwitz::dimension_N(ctx, passport);
    if (n != hurwitz::Rational(static_cast<long>(r - 3)) ||
        rec["N"].get<long long>() != r - 3) {
        why = "recomputed N differs from r-3";
        return false;
    }
    return true;
}

void criterion_9() {
    const std::string what =
        "full genus 2..7 sweep terminates, is stable across --jobs, and every witness checks out";
    fs::path a = scratch / "sweep_j1.jsonl";
    fs::path b = scratch / "sweep_j4.jsonl";
    std::string base = "--genus 2..7 --catalog " + catalog_dir + " --seed-report --out ";
    if (run_cli(base + a.string() + " --jobs 1") != 0 ||
        run_cli(base + b.string() + " --jobs 4") != 0)
        return report(9, false, what, "search binary exited nonzero");
    auto la = read_lines(a), lb = read_lines(b);
    if (la != lb) {
        std::ostringstream os;
        os << "job counts disagree: " << la.size() << " vs " << lb.size() << " records";
        return report(9, false, what, os.str());
    }
    if (la.empty()) return report(9, false, what, "sweep produced no records");

    hurwitz::Catalog cat = hurwitz::load_catalog(catalog_dir, 1, 72);
    std::map<std::pair<int, int>, std::shared_ptr<hurwitz::GroupContext>> ctxs;
    for (const auto& line : la) {
        json rec = json::parse(line);
        int order = rec["order"].get<int>();
        int index = rec["group_index"].get<int>();
        const auto& entries = cat.groups_of_order(order);
        if (index < 0 || index >= static_cast<int>(entries.size()))
            return report(9, false, what, "record points outside the catalog: " + line);
        if (entries[index].label != rec["group"].get<std::string>())
            return report(9, false, what, "group label mismatch: " + line);
        std::string why;
        if (!verify_record(rec, entries[index], ctxs, why))
            return report(9, false, what, why + ": " + line);
    }
    report(9, true, what);
}

} // namespace

int main(int argc, char** argv) {
    search_bin = argc > 1 ? argv[1] : "./build/hurwitz_search";
    catalog_dir = argc > 2 ? argv[2] : "data/smallgroups";

    scratch = fs::temp_directory_path() / ("hurwitz_accept_" + std::to_string(::getpid()));
    fs::create_directories(scratch);

    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_suite(4, "frobenius", 16,
                        "Frobenius class-sum count matches brute force on orders <= 16, r <= 5");
        criterion_suite(5, "orthogonality", 48,
                        "character tables satisfy orthogonality and degree sums on orders <= 48");
        criterion_suite(6, "chevalley-weil", 16,
                        "eigenvalue multiplicities and genus consistency hold on orders <= 16");
        criterion_suite(7, "orbits", 16,
                        "orbit enumeration is a transversal of refined passports on orders <= 16");
        criterion_suite(8, "bound", 16,
                        "N >= r-3 for every generating passport on orders <= 16");
        criterion_9();
    } catch (const std::exception& e) {
        std::cout << "FAIL: unhandled error -- " << e.what() << "\n";
        ++failures;
    }

    fs::remove_all(scratch);
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
