#pragma once

#include "hurwitz/catalog.hpp"
#include "hurwitz/search.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hurwitz {

// One unit of work: a group and a signature at a fixed genus.  Keys are
// totally ordered so journal replay and reports are deterministic.
struct TaskKey {
    int genus = 0;
    int order = 0;
    Signature signature;
    int group_index = 0;

    std::string signature_text() const; // "2,2,3,3"
    auto operator<=>(const TaskKey&) const = default;
};

struct RunOptions {
    int genus_lo = 2;
    int genus_hi = 2;
    int only_order = 0; // 0 = every order
    std::string catalog_dir = "data/smallgroups";
    int jobs = 1;
    SearchOptions search;
    std::string journal_path; // empty = keep no journal
    bool resume = false;      // skip tasks already in the journal
    std::string out_path;     // empty = stdout
    std::string format = "jsonl"; // or "csv"
    bool seed_report = false;     // rewrite the report sorted once done
};

struct RunSummary {
    long long tasks_total = 0;
    long long tasks_run = 0;
    long long tasks_skipped = 0;  // found complete in the journal
    long long tasks_exceeded = 0; // hit a budget; journaled, not fatal
    long long fallback_tasks = 0; // orbit reduction fell back to full lists
    long long passports_tested = 0;
    long long frobenius_pass = 0;
    long long condition_pass = 0;
    long long records_emitted = 0;
    std::map<std::string, long long> pruned; // rejection rule -> discard count
};

// Enumerates tasks for the genus range, prunes inadmissible (group, signature)
// pairs, runs the remaining tasks on a worker pool, and streams one record
// line per counter-example plus a journal line per finished task.  Progress
// and the final summary go to log.  Throws on catalog problems and on
// internal consistency guards; budget-exceeded tasks are only counted.
RunSummary run_search(const RunOptions& opt, std::ostream& log);

// Formats one record line in the given format ("jsonl" or "csv");
// class_orders maps a class id to the order of its elements.
std::string format_record(const CounterExampleRecord& rec,
                          const std::vector<int>& class_orders, const std::string& format);

// The csv column header matching format_record("csv").
std::string csv_header();

} // namespace hurwitz
