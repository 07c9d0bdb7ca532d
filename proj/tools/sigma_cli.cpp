// Command-line front end: build groups from construction specs, run
// σ-embedding checks, sweep the corpus, emit newline-delimited JSON reports.
//
// Exit codes: 0 = all checks passed, 2 = an equivalence or expectation was
// violated, 1 = usage or build error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "sigma/sigma.hpp"

namespace {

using namespace sigma;
using nlohmann::json;

struct RunConfig {
    std::string group_spec;
    std::vector<std::string> sigma_specs;
    std::string manifest_path;
    std::vector<std::string> checks{"thm13", "thm14", "thm17", "thm19",
                                    "corollaries", "lemmas", "degeneration"};
    int max_order = kDefaultDenseBound;
    int lattice_bound = kDefaultLatticeBound;
    int sweep_order_bound = 120;
    std::string json_path;
    bool verbose = false;
    int jobs = 1;
};

const std::vector<std::string> kKnownChecks = {
    "thm13", "thm14", "thm17", "thm19", "corollaries", "lemmas",
    "degeneration"};

std::vector<std::string> parse_checks(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const std::string& chunk : raw) {
        std::string cur;
        for (char c : chunk + ",") {
            if (c == ',') {
                if (cur == "all") {
                    out = kKnownChecks;
                } else if (!cur.empty()) {
                    if (std::find(kKnownChecks.begin(), kKnownChecks.end(),
                                  cur) == kKnownChecks.end())
                        throw parse_error("unknown check: " + cur);
                    out.push_back(cur);
                }
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    return out;
}

class Emitter {
public:
    explicit Emitter(const std::string& path) {
        if (!path.empty()) file_.open(path);
    }
    void line(const json& j) {
        std::string s = j.dump();
        std::cout << s << "\n";
        if (file_.is_open()) file_ << s << "\n";
    }

private:
    std::ofstream file_;
};

/// One (group, sigma, check) evaluation; returns whether a violation was
/// found and appends report lines.
bool run_check(const GroupTable& g, const std::string& group_spec,
               const PrimePartition& sigma, const std::string& check,
               bool verbose, std::vector<json>& lines) {
    bool violated = false;
    auto emit_report = [&](TheoremReport rep) {
        rep.group_spec = group_spec;
        if (rep.status == "ok" && !rep.equivalent) violated = true;
        lines.push_back(to_json(rep));
    };
    if (check == "thm13") {
        emit_report(check_theorem_1_3(g, sigma, verbose));
    } else if (check == "thm14") {
        emit_report(check_theorem_1_4(g, sigma));
    } else if (check == "thm17") {
        emit_report(check_theorem_1_7(g, sigma, verbose));
    } else if (check == "thm19") {
        emit_report(check_theorem_1_9(g, sigma, verbose));
    } else if (check == "corollaries") {
        for (TheoremReport& rep : check_corollaries(g, {sigma}))
            emit_report(std::move(rep));
    } else if (check == "lemmas") {
        SuiteReport rep = lemma_suite(g, sigma);
        if (!rep.ok()) violated = true;
        lines.push_back(suite_json(group_spec, sigma.render(), "lemmas", rep));
    } else if (check == "degeneration") {
        SuiteReport rep = degeneration_suite(g);
        if (!rep.ok()) violated = true;
        lines.push_back(
            suite_json(group_spec, "finest", "degeneration", rep));
    }
    return violated;
}

int cmd_analyze(const RunConfig& cfg) {
    BuildConfig bc{cfg.max_order, cfg.lattice_bound};
    GroupTable g = parse_group_spec(cfg.group_spec, bc);
    Emitter out(cfg.json_path);
    bool violated = false;
    for (const std::string& ss : cfg.sigma_specs) {
        PrimePartition sigma = parse_partition(ss);
        for (const std::string& check : cfg.checks) {
            std::vector<json> lines;
            violated |= run_check(g, cfg.group_spec, sigma, check, cfg.verbose,
                                  lines);
            for (const json& l : lines) out.line(l);
        }
    }
    return violated ? 2 : 0;
}

int cmd_describe(const RunConfig& cfg) {
    BuildConfig bc{cfg.max_order, cfg.lattice_bound};
    GroupTable g = parse_group_spec(cfg.group_spec, bc);
    PrimePartition sigma = cfg.sigma_specs.empty()
                               ? finest_partition()
                               : parse_partition(cfg.sigma_specs.front());
    json j;
    j["group"] = cfg.group_spec;
    j["order"] = g.n;
    j["pi"] = primes_of(g.n);
    j["sigma"] = sigma.render();
    json blocks = json::array();
    for (BlockId b : sigma_of_group(sigma, g))
        blocks.push_back(sigma.render_block(b));
    j["sigma_of_g"] = blocks;
    j["sigma_primary"] = is_sigma_primary(sigma, g);
    j["sigma_full"] = is_sigma_full(sigma, g);
    j["sigma_nilpotent"] = is_sigma_nilpotent(sigma, g);
    j["nilpotent"] = is_nilpotent(g);
    j["residual_sigma_order"] = sigma_nilpotent_residual(sigma, g).order;
    j["residual_nilpotent_order"] = nilpotent_residual(g).order;
    if (g.n <= g.lattice_bound) {
        j["subgroup_count"] = all_subgroups(g).size();
        j["dedekind"] = is_dedekind(g);
        json halls = json::object();
        for (BlockId b : sigma_of_group(sigma, g))
            halls[sigma.render_block(b)] =
                hall_block_subgroups(sigma, g, b).size();
        j["hall_counts"] = halls;
    }
    Emitter out(cfg.json_path);
    out.line(j);
    return 0;
}

struct SweepTask {
    size_t entry_idx;
    std::string kind; // expectations | check
    std::string sigma_spec;
    std::string check;
};

int cmd_sweep(const RunConfig& cfg) {
    BuildConfig bc{cfg.max_order, cfg.lattice_bound};
    std::vector<CorpusEntry> entries;
    if (cfg.manifest_path.empty()) {
        entries = corpus_manifest(bc);
    } else {
        std::ifstream in(cfg.manifest_path);
        if (!in) throw parse_error("cannot open manifest " + cfg.manifest_path);
        json j;
        in >> j;
        entries = manifest_from_json(j);
    }

    // build every entry once, up front; failures are reported but do not
    // abort the sweep
    std::vector<std::optional<BuiltEntry>> built(entries.size());
    std::vector<json> build_errors;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].arithmetic_only) continue;
        try {
            built[i] = build_entry(entries[i].name, entries[i].spec, bc);
        } catch (const std::exception& e) {
            build_errors.push_back(json{{"entry", entries[i].name},
                                        {"error", e.what()}});
        }
    }

    std::vector<SweepTask> tasks;
    for (size_t i = 0; i < entries.size(); ++i) {
        const CorpusEntry& e = entries[i];
        if (!e.expected.empty())
            tasks.push_back({i, "expectations", "", ""});
        if (e.arithmetic_only || !built[i]) continue;
        if (built[i]->table->n > cfg.sweep_order_bound) continue;
        bool degeneration_done = false;
        for (const std::string& ss : e.sigma_specs)
            for (const std::string& check : cfg.checks) {
                if (check == "degeneration") {
                    if (degeneration_done) continue;
                    degeneration_done = true;
                    tasks.push_back({i, "check", "finest", check});
                } else {
                    tasks.push_back({i, "check", ss, check});
                }
            }
    }

    struct TaskResult {
        std::vector<json> lines;
        bool violated = false;
        std::string error;
    };
    std::vector<TaskResult> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const SweepTask& task = tasks[t];
            const CorpusEntry& e = entries[task.entry_idx];
            TaskResult& res = results[t];
            try {
                if (task.kind == "expectations") {
                    const BuiltEntry* b = built[task.entry_idx]
                                              ? &*built[task.entry_idx]
                                              : nullptr;
                    json violations = json::array();
                    for (const Expectation& x : e.expected) {
                        json v = evaluate_expectation(e, b, x);
                        if (!v.is_null()) violations.push_back(v);
                    }
                    res.violated = !violations.empty();
                    res.lines.push_back(json{{"entry", e.name},
                                             {"check", "expected"},
                                             {"violations", violations},
                                             {"ok", violations.empty()}});
                } else {
                    PrimePartition sigma = parse_partition(task.sigma_spec);
                    const GroupTable& g = *built[task.entry_idx]->table;
                    try {
                        res.violated = run_check(g, e.spec, sigma, task.check,
                                                 cfg.verbose, res.lines);
                    } catch (const not_sigma_full&) {
                        // these checks presuppose a complete Hall σ-set
                        res.lines.push_back(
                            json{{"group", e.spec},
                                 {"sigma", sigma.render()},
                                 {"theorem", task.check},
                                 {"status", "skipped-not-sigma-full"},
                                 {"conditions", json::array()},
                                 {"equivalent", true}});
                    }
                }
            } catch (const std::exception& ex) {
                res.error = ex.what();
            }
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    Emitter out(cfg.json_path);
    for (const json& e : build_errors) out.line(e);
    bool violated = false;
    bool errored = !build_errors.empty();
    for (size_t t = 0; t < tasks.size(); ++t) {
        if (!results[t].error.empty()) {
            errored = true;
            out.line(json{{"entry", entries[tasks[t].entry_idx].name},
                          {"check", tasks[t].check},
                          {"error", results[t].error}});
            continue;
        }
        violated |= results[t].violated;
        for (const json& l : results[t].lines) out.line(l);
    }
    if (violated) return 2;
    return errored ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group sigma-embedding analyzer"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("SIGMA_LATTICE_BOUND"))
        cfg.lattice_bound = std::atoi(env);

    std::vector<std::string> raw_checks;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-order", cfg.max_order,
                        "dense table bound (default 1500)");
        sub->add_option("--lattice-bound", cfg.lattice_bound,
                        "subgroup lattice bound (default 1500)");
        sub->add_option("--json", cfg.json_path, "also write NDJSON here");
        sub->add_flag("--verbose", cfg.verbose, "verbose reports");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "check one (group, sigma)");
    analyze->add_option("--group", cfg.group_spec, "group construction spec")
        ->required();
    analyze->add_option("--sigma", cfg.sigma_specs, "prime partition spec(s)")
        ->required();
    analyze->add_option("--check", raw_checks, "comma-separated checks");
    add_common(analyze);

    CLI::App* sweep = app.add_subcommand("sweep", "run checks over a corpus");
    sweep->add_option("--manifest", cfg.manifest_path,
                      "manifest JSON (default: built-in corpus)");
    sweep->add_option("--check", raw_checks, "comma-separated checks");
    sweep->add_option("--jobs", cfg.jobs, "worker count");
    sweep->add_option("--sweep-order-bound", cfg.sweep_order_bound,
                      "skip lattice checks above this order (default 120)");
    add_common(sweep);

    CLI::App* describe = app.add_subcommand("describe", "structural summary");
    describe->add_option("--group", cfg.group_spec, "group construction spec")
        ->required();
    describe->add_option("--sigma", cfg.sigma_specs, "prime partition spec");
    add_common(describe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (!raw_checks.empty()) {
            cfg.checks = parse_checks(raw_checks);
            if (cfg.checks.empty())
                throw parse_error("--check must name at least one check");
        }
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (describe->parsed()) return cmd_describe(cfg);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
