#include "hurwitz/errors.hpp"
#include "hurwitz/runner.hpp"
#include "hurwitz/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

// "3" or "2..7"
void parse_genus_range(const std::string& text, int& lo, int& hi) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw hurwitz::error("cannot parse genus range '" + text + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"search for special families of Galois covers of the line"};
    app.require_subcommand(0, 1);

    std::string genus_text = "2";
    hurwitz::RunOptions run;
    app.add_option("--genus", genus_text, "genus or genus range A..B");
    app.add_option("--only-order", run.only_order, "restrict to one group order");
    app.add_option("--catalog", run.catalog_dir, "group catalog directory");
    app.add_option("--jobs", run.jobs, "worker threads");
    app.add_flag("--resume", run.resume, "skip tasks already in the journal");
    app.add_option("--journal", run.journal_path, "task journal file");
    app.add_option("--out", run.out_path, "report file (default: stdout)");
    app.add_option("--format", run.format, "record format")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    bool no_prune = false;
    app.add_flag("--no-prune", no_prune, "disable the lemma-based signature prunes");
    app.add_flag("--prune-z2k", run.search.skip_elementary_2,
                 "also skip elementary abelian 2-groups at genus 4 and above");
    app.add_option("--subset-cap", run.search.subset_cap,
                   "largest subset family the orbit walk may materialise");
    app.add_flag("--seed-report", run.seed_report, "rewrite the report sorted at the end");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle suites");
    hurwitz::VerifyOptions vopt;
    verify->add_option("--catalog", vopt.catalog_dir, "group catalog directory");
    verify->add_option("--max-order", vopt.max_order, "largest group order to verify");
    verify->add_option("--suite", vopt.suites, "suites to run (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            std::vector<hurwitz::SuiteResult> results =
                hurwitz::run_verification(vopt, std::cout);
            for (const hurwitz::SuiteResult& res : results)
                if (!res.passed) return 1;
            return 0;
        }
        parse_genus_range(genus_text, run.genus_lo, run.genus_hi);
        run.search.use_bounds_pruning = !no_prune;
        hurwitz::run_search(run, std::cout);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
