/*
 * Copyright (c) 2026 The uiwalk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "uiwalk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "uiwalk/archive.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/explorer.hpp"
#include "uiwalk/metrics.hpp"
#include "uiwalk/sim.hpp"
#include "uiwalk/taskgen.hpp"
#include "uiwalk/webdriver.hpp"

namespace uiwalk {

namespace fs = std::filesystem;
using nlohmann::json;

std::string summary_line(const AppGraph& graph) {
    GraphStats s = graph.stats();
    char avg[32];
    std::snprintf(avg, sizeof avg, "%.3f", s.avg_trace_len);
    return "app=" + graph.app_name() + " nodes=" + std::to_string(s.node_count) +
           " edges=" + std::to_string(s.edge_count) + " actions=" + std::to_string(s.action_count) +
           " click=" + std::to_string(s.per_kind[0]) + " input=" + std::to_string(s.per_kind[1]) +
           " scroll=" + std::to_string(s.per_kind[2]) + " self_loops=" + std::to_string(s.self_loops) +
           " external=" + std::to_string(s.external_edges) + " quarantined=" + std::to_string(s.quarantined) +
           " avg_trace_len=" + avg;
}

std::vector<std::string> read_keywords(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, "cannot read keyword file " + path);
    }
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    if (out.size() != kKeywordCount) {
        throw Error(ErrorCode::InvalidConfig,
                    path + ": expected 10 keywords, found " + std::to_string(out.size()));
    }
    return out;
}

namespace {

struct ExploreOptions {
    std::string backend = "sim";
    std::vector<std::string> specs;
    std::string endpoint;
    std::string app;
    std::string package;
    std::string activity;
    std::string out;
    std::uint64_t seed = 0;
    std::size_t max_nodes = 200000;
    std::size_t max_depth = 8;
    std::string keywords;
    std::string blocklist;
    unsigned jobs = 1;
};

struct AppResult {
    std::string summary;
    std::string error;
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
    }
}

std::set<std::string> read_blocklist(const std::string& path) {
    std::set<std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, "cannot read blocklist " + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.insert(line);
    }
    return out;
}

std::string describe_failure(const DriverFailure& f) {
    std::string msg = f.what();
    msg += " (trace:";
    for (const auto& step : f.trace().steps) msg += " " + to_string(step.action) + ";";
    msg += ")";
    return msg;
}

AppResult explore_one(const ExploreOptions& opt, Driver& driver, const std::string& app,
                      std::vector<std::string> spec_keywords) {
    ExplorationConfig config;
    config.max_nodes = opt.max_nodes;
    config.max_depth = opt.max_depth;
    config.rng_seed = opt.seed;
    config.keywords = opt.keywords.empty() ? std::move(spec_keywords) : read_keywords(opt.keywords);
    config.blocklist = read_blocklist(opt.blocklist);
    std::string log;
    AppGraph graph = explore_app(driver, app, config, [&](const ProgressEvent& e) {
        log += format_progress(e);
        log += '\n';
    });
    fs::path dir = save_graph(graph, opt.out);
    write_text(dir / "progress.jsonl", log);
    return {summary_line(graph), {}};
}

AppResult run_spec(const ExploreOptions& opt, const std::string& spec_path) {
    try {
        SimulatedAppSpec spec = SimulatedAppSpec::load(spec_path);
        std::string app = spec.app;
        auto keywords = spec.keywords;
        SimulatedDriver driver(std::move(spec));
        return explore_one(opt, driver, app, std::move(keywords));
    } catch (const DriverFailure& f) {
        return {{}, spec_path + ": " + describe_failure(f)};
    } catch (const Error& e) {
        return {{}, spec_path + ": " + e.what()};
    }
}

int cmd_explore(const ExploreOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<AppResult> results;
    if (opt.backend == "webdriver") {
        if (opt.endpoint.empty() || opt.app.empty() || opt.package.empty()) {
            err << "error: webdriver backend needs --endpoint, --app and --package\n";
            return 2;
        }
        try {
            HttplibTransport transport(opt.endpoint);
            WebDriverDriver driver(transport, WebDriverCapabilities{"Android", "UiAutomator2", "emulator-5554",
                                                                   opt.package, opt.activity});
            results.push_back(explore_one(opt, driver, opt.app, {}));
            driver.quit();
        } catch (const DriverFailure& f) {
            results.push_back({{}, opt.endpoint + ": " + describe_failure(f)});
        } catch (const Error& e) {
            results.push_back({{}, opt.endpoint + ": " + e.what()});
        }
    } else {
        if (opt.specs.empty()) {
            err << "error: sim backend needs at least one --spec\n";
            return 2;
        }
        results.resize(opt.specs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < opt.specs.size(); i = next++) {
                results[i] = run_spec(opt, opt.specs[i]);
            }
        };
        unsigned jobs = std::clamp<unsigned>(opt.jobs, 1, static_cast<unsigned>(opt.specs.size()));
        std::vector<std::thread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }
    int code = 0;
    for (const auto& r : results) {
        if (!r.error.empty()) {
            err << "error: " << r.error << "\n";
            code = 1;
        } else {
            out << r.summary << "\n";
        }
    }
    return code;
}

// App directories under an archive root, or the root itself when it is one.
std::vector<fs::path> app_dirs(const std::string& archive) {
    fs::path root(archive);
    if (!fs::is_directory(root)) {
        throw Error(ErrorCode::MissingArchive, "no archive at " + archive);
    }
    if (fs::exists(root / "manifest.json")) return {root};
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory() && fs::exists(entry.path() / "manifest.json")) dirs.push_back(entry.path());
    }
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

int cmd_gen(const std::string& archive, const std::string& out_dir, std::uint64_t seed, std::ostream& out) {
    TaskCorpus corpus;
    for (const auto& dir : app_dirs(archive)) {
        merge_corpus(corpus, generate_tasks(load_graph(dir), seed));
    }
    write_corpus(corpus, out_dir);
    for (TaskKind k : kTaskKinds) {
        out << to_string(k) << "=" << corpus[k].size() << (k == TaskKind::Navigation ? "\n" : " ");
    }
    return 0;
}

std::vector<TaskRecord> read_gold(const std::vector<std::string>& paths) {
    std::vector<TaskRecord> gold;
    for (const auto& p : paths) {
        std::vector<fs::path> files;
        if (fs::is_directory(p)) {
            for (TaskKind k : kTaskKinds) {
                fs::path f = fs::path(p) / (std::string(to_string(k)) + ".jsonl");
                if (fs::exists(f)) files.push_back(f);
            }
        } else {
            files.push_back(p);
        }
        for (const auto& f : files) {
            auto records = read_records(f);
            gold.insert(gold.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
        }
    }
    return gold;
}

int cmd_eval(const std::string& predictions, const std::vector<std::string>& gold_paths, const std::string& report,
             std::ostream& out) {
    auto preds = read_predictions(predictions);
    auto gold = read_gold(gold_paths);
    std::string text = evaluate(preds, gold).dump(2) + "\n";
    if (report.empty()) {
        out << text;
    } else {
        write_text(report, text);
    }
    return 0;
}

int cmd_stats(const std::string& archive, std::ostream& out) {
    for (const auto& dir : app_dirs(archive)) {
        out << summary_line(load_graph(dir)) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Offline GUI explorer and task generator", "uiwalk"};
    app.require_subcommand(1);

    ExploreOptions ex;
    auto* explore = app.add_subcommand("explore", "Explore apps and write graph archives");
    explore->add_option("--backend", ex.backend)->check(CLI::IsMember({"sim", "webdriver"}));
    explore->add_option("--spec", ex.specs, "Simulated app spec (repeatable)");
    explore->add_option("--endpoint", ex.endpoint, "WebDriver server URL");
    explore->add_option("--app", ex.app, "App root name for the webdriver backend");
    explore->add_option("--package", ex.package, "Android package for the webdriver backend");
    explore->add_option("--activity", ex.activity, "Launch activity for the webdriver backend");
    explore->add_option("--out", ex.out, "Archive root")->required();
    explore->add_option("--seed", ex.seed);
    explore->add_option("--max-nodes", ex.max_nodes);
    explore->add_option("--max-depth", ex.max_depth);
    explore->add_option("--keywords", ex.keywords, "File with ten input keywords");
    explore->add_option("--blocklist", ex.blocklist, "File with element names never acted on");
    explore->add_option("--jobs", ex.jobs);

    std::string archive, out_dir, predictions, report;
    std::vector<std::string> gold;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen-tasks", "Generate task datasets from archives");
    gen->add_option("--archive", archive, "Archive root or app directory")->required();
    gen->add_option("--out", out_dir)->required();
    gen->add_option("--seed", seed);

    auto* eval = app.add_subcommand("eval", "Score predictions against gold records");
    eval->add_option("--predictions", predictions)->required();
    eval->add_option("--gold", gold, "Gold JSONL file or gen-tasks directory (repeatable)")->required();
    eval->add_option("--out", report, "Report path; stdout when omitted");

    std::string stats_archive;
    auto* stats = app.add_subcommand("stats", "Summarize archived graphs");
    stats->add_option("--archive", stats_archive)->required();

    std::string skeleton_out;
    auto* simulate = app.add_subcommand("simulate", "Print a simulated app spec skeleton");
    simulate->add_option("--out", skeleton_out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*explore) return cmd_explore(ex, out, err);
        if (*gen) return cmd_gen(archive, out_dir, seed, out);
        if (*eval) return cmd_eval(predictions, gold, report, out);
        if (*stats) return cmd_stats(stats_archive, out);
        if (*simulate) {
            std::string text = simulated_spec_skeleton().dump(2) + "\n";
            if (skeleton_out.empty()) {
                out << text;
            } else {
                write_text(skeleton_out, text);
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace uiwalk
