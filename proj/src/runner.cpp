#include "hurwitz/runner.hpp"

#include "hurwitz/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace hurwitz {

std::string TaskKey::signature_text() const {
    std::string s;
    for (size_t i = 0; i < signature.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(signature[i]);
    }
    return s;
}

std::string format_record(const CounterExampleRecord& rec,
                          const std::vector<int>& class_orders, const std::string& format) {
    if (format == "jsonl") {
        nlohmann::ordered_json j;
        j["genus"] = rec.genus;
        j["order"] = rec.order;
        j["group"] = rec.group_label;
        j["group_index"] = rec.group_index;
        j["r"] = static_cast<int>(rec.signature.size());
        j["signature"] = rec.signature;
        nlohmann::ordered_json passport = nlohmann::ordered_json::array();
        for (auto [c, n] : rec.passport) {
            nlohmann::ordered_json p;
            p["class"] = c;
            p["order"] = class_orders[c];
            p["mult"] = n;
            passport.push_back(std::move(p));
        }
        j["passport"] = std::move(passport);
        j["N"] = rec.dimension;
        j["witness"] = rec.witness;
        return j.dump();
    }
    if (format == "csv") {
        std::ostringstream out;
        auto join = [](const std::vector<std::string>& parts) {
            std::string s;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ";";
                s += parts[i];
            }
            return s;
        };
        std::vector<std::string> sig, pass, wit;
        for (int m : rec.signature) sig.push_back(std::to_string(m));
        for (auto [c, n] : rec.passport)
            pass.push_back(std::to_string(c) + ":" + std::to_string(class_orders[c]) + ":" +
                           std::to_string(n));
        for (int e : rec.witness) wit.push_back(std::to_string(e));
        out << rec.genus << "," << rec.order << "," << rec.group_label << ","
            << rec.group_index << "," << rec.signature.size() << "," << join(sig) << ","
            << join(pass) << "," << rec.dimension << "," << join(wit);
        return out.str();
    }
    throw error("unknown record format: " + format);
}

std::string csv_header() {
    return "genus,order,group,group_index,r,signature,passport,N,witness";
}

namespace {

struct JournalEntry {
    TaskKey key;
    bool exceeded = false;
};

std::vector<JournalEntry> read_journal(const std::string& path) {
    std::vector<JournalEntry> entries;
    std::ifstream in(path);
    if (!in) return entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string status, sigtext;
        JournalEntry e;
        long long records = 0;
        if (!(ls >> status >> e.key.genus >> e.key.order >> sigtext >> e.key.group_index >>
              records))
            throw parse_error(path + ":" + std::to_string(lineno) + ": malformed journal line");
        if (status == "exceeded")
            e.exceeded = true;
        else if (status != "done")
            throw parse_error(path + ":" + std::to_string(lineno) + ": unknown journal status '" +
                              status + "'");
        std::istringstream ss(sigtext);
        std::string tok;
        while (std::getline(ss, tok, ',')) e.key.signature.push_back(std::stoi(tok));
        entries.push_back(std::move(e));
    }
    return entries;
}

} // namespace

RunSummary run_search(const RunOptions& opt, std::ostream& log) {
    auto t0 = std::chrono::steady_clock::now();
    RunSummary summary;
    if (opt.genus_lo < 2 || opt.genus_hi < opt.genus_lo)
        throw error("genus range must satisfy 2 <= A <= B");
    if (opt.format != "jsonl" && opt.format != "csv")
        throw error("unknown record format: " + opt.format);

    // orders that can carry any signature in the range
    std::vector<std::map<int, std::vector<Signature>>> per_genus;
    std::set<int> needed;
    for (int g = opt.genus_lo; g <= opt.genus_hi; ++g) {
        std::map<int, std::vector<Signature>> m;
        for (int d = 2; d <= 12 * (g - 1); ++d) {
            if (opt.only_order && d != opt.only_order) continue;
            std::vector<Signature> s = signatures(g, d);
            if (s.empty()) continue;
            needed.insert(d);
            m[d] = std::move(s);
        }
        per_genus.push_back(std::move(m));
    }

    Catalog catalog;
    for (int d : needed) {
        std::string path = opt.catalog_dir + "/order_" + std::to_string(d) + ".groups";
        catalog.by_order[d] = load_order_file(path, d);
    }

    // admissibility pruning and task construction
    struct Task {
        TaskKey key;
        const CatalogEntry* entry = nullptr;
    };
    std::vector<Task> tasks;
    for (int g = opt.genus_lo; g <= opt.genus_hi; ++g) {
        const std::map<int, std::vector<Signature>>& m = per_genus[g - opt.genus_lo];
        for (const auto& [d, sigs] : m) {
            for (const CatalogEntry& entry : catalog.groups_of_order(d)) {
                ConjugacyData cd = conjugacy_data(entry.group);
                for (const Signature& sig : sigs) {
                    Rejection rej = admissible(entry.group, cd, g, sig, opt.search);
                    if (rej != Rejection::accepted) {
                        ++summary.pruned[rejection_name(rej)];
                        continue;
                    }
                    tasks.push_back({TaskKey{g, d, sig, entry.index}, &entry});
                }
            }
        }
    }
    summary.tasks_total = static_cast<long long>(tasks.size());

    // big groups and long signatures first so stragglers start early
    std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
        long long ca = static_cast<long long>(a.key.order) * a.key.signature.size();
        long long cb = static_cast<long long>(b.key.order) * b.key.signature.size();
        if (ca != cb) return ca > cb;
        return a.key < b.key;
    });

    std::set<TaskKey> completed;
    if (opt.resume && !opt.journal_path.empty())
        for (const JournalEntry& e : read_journal(opt.journal_path)) completed.insert(e.key);

    // report sink: existing lines are kept when resuming so the final report
    // stays complete across interrupts
    std::vector<std::string> lines;
    bool fresh_out = true;
    if (opt.resume && !opt.out_path.empty()) {
        std::ifstream existing(opt.out_path);
        std::string line;
        while (std::getline(existing, line)) {
            if (line.empty()) continue;
            if (opt.format == "csv" && line == csv_header()) continue;
            lines.push_back(line);
            fresh_out = false;
        }
    }
    std::ofstream out_file;
    std::ostream* out = nullptr;
    if (!opt.out_path.empty()) {
        out_file.open(opt.out_path, fresh_out ? std::ios::trunc : std::ios::app);
        if (!out_file) throw error("cannot open report file " + opt.out_path);
        out = &out_file;
        if (fresh_out && opt.format == "csv") *out << csv_header() << "\n";
    }
    std::ofstream journal;
    if (!opt.journal_path.empty()) {
        journal.open(opt.journal_path, opt.resume ? std::ios::app : std::ios::trunc);
        if (!journal) throw error("cannot open journal file " + opt.journal_path);
    }

    // shared per-group contexts, built once each behind a future
    std::mutex ctx_mutex;
    std::map<std::pair<int, int>, std::shared_future<std::shared_ptr<GroupContext>>> contexts;
    auto context_for = [&](const Task& t) {
        std::promise<std::shared_ptr<GroupContext>> promise;
        std::shared_future<std::shared_ptr<GroupContext>> future;
        bool builder = false;
        {
            std::lock_guard<std::mutex> lock(ctx_mutex);
            auto key = std::make_pair(t.key.order, t.key.group_index);
            auto it = contexts.find(key);
            if (it == contexts.end()) {
                future = promise.get_future().share();
                contexts.emplace(key, future);
                builder = true;
            } else {
                future = it->second;
            }
        }
        if (builder) {
            try {
                promise.set_value(
                    std::make_shared<GroupContext>(make_group_context(t.entry->group)));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return future.get(); // rethrows build failures for every waiter
    };

    std::mutex sink_mutex; // report lines, journal lines, summary counters
    std::atomic<size_t> next{0};
    std::exception_ptr fatal;
    std::mutex fatal_mutex;
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        for (;;) {
            if (stop.load()) return;
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            if (completed.count(t.key)) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                ++summary.tasks_skipped;
                continue;
            }
            try {
                std::shared_ptr<GroupContext> ctx;
                TaskResult result;
                bool exceeded = false;
                try {
                    ctx = context_for(t);
                    result = search_signature(*ctx, t.key.genus, t.key.signature, opt.search);
                } catch (const aut_cap_exceeded&) {
                    exceeded = true;
                }
                std::lock_guard<std::mutex> lock(sink_mutex);
                if (exceeded) {
                    ++summary.tasks_exceeded;
                    if (journal.is_open()) {
                        journal << "exceeded " << t.key.genus << " " << t.key.order << " "
                                << t.key.signature_text() << " " << t.key.group_index << " 0\n";
                        journal.flush();
                    }
                    continue;
                }
                ++summary.tasks_run;
                if (result.used_fallback) ++summary.fallback_tasks;
                summary.passports_tested += result.passports_tested;
                summary.frobenius_pass += result.frobenius_pass;
                summary.condition_pass += result.condition_pass;
                for (CounterExampleRecord rec : result.records) {
                    rec.genus = t.key.genus;
                    rec.order = t.key.order;
                    rec.group_index = t.key.group_index;
                    rec.group_label = t.entry->label;
                    std::string line =
                        format_record(rec, ctx->classes.class_order, opt.format);
                    lines.push_back(line);
                    ++summary.records_emitted;
                    if (out)
                        *out << line << "\n";
                    else if (!opt.seed_report)
                        log << line << "\n";
                }
                if (out) out->flush();
                if (journal.is_open()) {
                    journal << "done " << t.key.genus << " " << t.key.order << " "
                            << t.key.signature_text() << " " << t.key.group_index << " "
                            << result.records.size() << "\n";
                    journal.flush();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(fatal_mutex);
                if (!fatal) fatal = std::current_exception();
                stop.store(true);
                return;
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();
    if (fatal) std::rethrow_exception(fatal);

    if (opt.seed_report) {
        std::sort(lines.begin(), lines.end());
        if (!opt.out_path.empty()) {
            std::ofstream sorted(opt.out_path, std::ios::trunc);
            if (opt.format == "csv") sorted << csv_header() << "\n";
            for (const std::string& line : lines) sorted << line << "\n";
        } else {
            log << "sorted report:\n";
            for (const std::string& line : lines) log << line << "\n";
        }
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    log << "tasks: " << summary.tasks_total << " total, " << summary.tasks_run << " run, "
        << summary.tasks_skipped << " resumed, " << summary.tasks_exceeded << " budget-exceeded, "
        << summary.fallback_tasks << " via fallback\n";
    log << "passports: " << summary.passports_tested << " tested, " << summary.frobenius_pass
        << " past Frobenius, " << summary.condition_pass << " at N = r-3\n";
    log << "records: " << summary.records_emitted << "\n";
    if (!summary.pruned.empty()) {
        log << "pruned (group, signature) pairs:\n";
        for (const auto& [rule, count] : summary.pruned)
            log << "  " << rule << ": " << count << "\n";
    }
    log << "elapsed: " << ms << " ms\n";
    return summary;
}

} // namespace hurwitz
