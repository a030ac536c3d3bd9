// o1t — build, analyze and cross-check optimal 1-embedded toroidal graphs.
//
// Subcommands:
//   generate qprq   --p --r --q [--out FILE] [--format rot|o1t]
//   generate corpus --seed --moves --count --out-dir DIR [--max-vertices N]
//   analyze FILE [--out FILE] [--max-subset N]
//   verify SUITE DIR [--threads N] [--max-cut-n N]
//   convert IN OUT  (rot v1 <-> o1t v1, keyed on output extension)
//
// Exit codes: 0 all theorems agree; 1 theorem violation; 2 input error;
// 3 budget exceeded (partial results emitted).

#include <filesystem>
#include <iostream>
#include <mutex>

#include <CLI11.hpp>

#include "o1t/analysis.hpp"
#include "o1t/corpus.hpp"

namespace fs = std::filesystem;
using o1t::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        o1t::write_file(out_path, text);
}

int cmd_generate_qprq(int p, int r, int q, const std::string& out, const std::string& format) {
    auto qd = o1t::build_qprq(p, r, q);
    if (format == "rot") {
        emit(o1t::write_rot(qd.map), out);
    } else {
        auto g = o1t::build_o1t(std::move(qd));
        emit(o1t::to_o1t_json(g).dump(2) + "\n", out);
    }
    return kExitOk;
}

int cmd_generate_corpus(std::uint64_t seed, int moves, int count, const std::string& out_dir,
                        int max_vertices) {
    o1t::CorpusParams params;
    params.seed = seed;
    params.max_moves = moves;
    params.count = count;
    params.max_vertices = max_vertices;
    const auto corpus = o1t::generate_corpus(params);
    fs::create_directories(out_dir);
    for (size_t i = 0; i < corpus.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "instance_%04zu.o1t.json", i);
        o1t::write_file((fs::path(out_dir) / name).string(),
                        o1t::to_o1t_json(corpus[i]).dump(2) + "\n");
    }
    std::cout << "wrote " << corpus.size() << " instances to " << out_dir << "\n";
    return kExitOk;
}

int cmd_analyze(const std::string& file, const std::string& out, int max_subset) {
    const auto g = o1t::load_instance(file);
    const Json rep = o1t::analyze_instance(g, fs::path(file).filename().string(), max_subset);
    emit(rep.dump(2) + "\n", out);
    return rep.value("theorem_violation", false) ? kExitViolation : kExitOk;
}

std::vector<fs::path> corpus_files(const std::string& dir) {
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) throw o1t::ParseError("not a directory: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto name = entry.path().filename().string();
        if (name.ends_with(".rot") || name.ends_with(".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw o1t::EmptyCorpus("no .rot or .json instances in " + dir);
    return files;
}

int cmd_verify(const std::string& suite, const std::string& dir, int threads, int max_cut_n,
               int max_subset) {
    if (suite != "connectivity" && suite != "extendability" && suite != "lemmas" &&
        suite != "all")
        throw o1t::ParseError("unknown suite '" + suite + "'");
    const auto files = corpus_files(dir);
    const int count = static_cast<int>(files.size());

    struct Row {
        std::string id;
        bool pass = true;
        bool budget_hit = false;
        std::vector<std::string> notes;
    };
    std::vector<Row> rows(count);

    o1t::parallel_for_index(count, o1t::worker_count(threads), [&](int i) {
        Row& row = rows[i];
        row.id = files[i].filename().string();
        try {
            const auto g = o1t::load_instance(files[i].string());
            if (suite == "connectivity" || suite == "all") {
                try {
                    const auto v = o1t::classify_connectivity(g);
                    row.notes.push_back("kappa " + std::to_string(v.kappa_computed) + "/" +
                                        std::to_string(v.kappa_predicted));
                } catch (const o1t::TheoremViolation& e) {
                    row.pass = false;
                    row.notes.push_back(e.what());
                }
            }
            if (suite == "extendability" || suite == "all") {
                if (g.order() % 2) {
                    row.notes.push_back("extendability skipped (odd order)");
                } else {
                    try {
                        std::string summary = "ext";
                        for (const auto& v : o1t::classify_extendability(g, max_subset))
                            summary += std::string(" ") + std::to_string(v.m) +
                                       (v.predicted_known
                                            ? (v.extendable_computed ? ":yes" : ":no")
                                            : ":n/a");
                        row.notes.push_back(summary);
                    } catch (const o1t::TheoremViolation& e) {
                        row.pass = false;
                        row.notes.push_back(e.what());
                    }
                }
            }
            if (suite == "lemmas" || suite == "all") {
                if (g.order() <= max_cut_n) {
                    const auto cuts = o1t::check_cut_lemmas(g, 7, row.id);
                    const auto blockers = o1t::check_blocker_lemmas(g, row.id);
                    row.notes.push_back("lemma checks over " +
                                        std::to_string(cuts.cuts_checked) + " cuts");
                    for (const auto& f : cuts.failures) {
                        row.pass = false;
                        row.notes.push_back(f);
                    }
                    for (const auto& f : blockers.failures) {
                        row.pass = false;
                        row.notes.push_back(f);
                    }
                } else {
                    row.notes.push_back("lemmas skipped (n > " + std::to_string(max_cut_n) + ")");
                }
            }
        } catch (const o1t::BudgetExceeded& e) {
            row.budget_hit = true;
            row.notes.push_back(e.what());
        } catch (const o1t::Error& e) {
            row.pass = false;
            row.notes.push_back(e.what());
        }
    });

    int failures = 0, budget_hits = 0;
    for (const auto& row : rows) {
        if (!row.pass) ++failures;
        if (row.budget_hit) ++budget_hits;
        std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.id;
        for (const auto& n : row.notes) std::cout << "  [" << n << "]";
        std::cout << "\n";
    }
    std::cout << "suite " << suite << ": " << (count - failures) << "/" << count << " pass";
    if (budget_hits) std::cout << " (" << budget_hits << " budget-limited)";
    std::cout << "\n";
    if (failures) return kExitViolation;
    if (budget_hits) return kExitBudget;
    return kExitOk;
}

int cmd_convert(const std::string& in, const std::string& out) {
    const auto g = o1t::load_instance(in);
    if (out.ends_with(".rot"))
        o1t::write_file(out, o1t::write_rot(g.quad_map()));
    else
        o1t::write_file(out, o1t::to_o1t_json(g).dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal 1-embedded toroidal graph toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct instances");
    gen->require_subcommand(1);
    int p = 4, r = 0, q = 3;
    std::string out_file, format = "o1t";
    auto* qprq = gen->add_subcommand("qprq", "one Q(p,r,q)-based instance");
    qprq->add_option("--p", p)->required();
    qprq->add_option("--r", r)->required();
    qprq->add_option("--q", q)->required();
    qprq->add_option("--out", out_file);
    qprq->add_option("--format", format)->check(CLI::IsMember({"rot", "o1t"}));

    std::uint64_t seed = 0;
    int moves = 6, count = 50, max_vertices = 30;
    std::string out_dir = "corpus";
    auto* corpus = gen->add_subcommand("corpus", "randomized corpus");
    corpus->add_option("--seed", seed)->required();
    corpus->add_option("--moves", moves);
    corpus->add_option("--count", count);
    corpus->add_option("--out-dir", out_dir);
    corpus->add_option("--max-vertices", max_vertices);

    // analyze
    std::string analyze_file, analyze_out;
    int max_subset = 20;
    auto* analyze = app.add_subcommand("analyze", "full report for one instance");
    analyze->add_option("file", analyze_file)->required();
    analyze->add_option("--out", analyze_out);
    analyze->add_option("--max-subset", max_subset);

    // verify
    std::string suite, verify_dir;
    int threads = 0, max_cut_n = 16;
    auto* verify = app.add_subcommand("verify", "cross-check a corpus directory");
    verify->add_option("suite", suite)->required();
    verify->add_option("dir", verify_dir)->required();
    verify->add_option("--threads", threads);
    verify->add_option("--max-cut-n", max_cut_n);
    verify->add_option("--max-subset", max_subset);

    // convert
    std::string conv_in, conv_out;
    auto* convert = app.add_subcommand("convert", "translate between rot v1 and o1t v1");
    convert->add_option("in", conv_in)->required();
    convert->add_option("out", conv_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (qprq->parsed()) return cmd_generate_qprq(p, r, q, out_file, format);
        if (corpus->parsed()) return cmd_generate_corpus(seed, moves, count, out_dir, max_vertices);
        if (analyze->parsed()) return cmd_analyze(analyze_file, analyze_out, max_subset);
        if (verify->parsed()) return cmd_verify(suite, verify_dir, threads, max_cut_n, max_subset);
        if (convert->parsed()) return cmd_convert(conv_in, conv_out);
    } catch (const o1t::TheoremViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const o1t::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const o1t::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
