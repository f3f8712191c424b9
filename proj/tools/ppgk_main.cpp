// ppgk command line tool. Talks to the library only through the C API.
//
// Exit codes: 0 ok, 1 usage or other failure, 2 unparsable input, 3 unwritable
// output, 4 missing or mismatched sketch/store artifact, 5 no private owners.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppgk/ppgk.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kBadInput = 2, kBadOutput = 3, kNoArtifact = 4, kNoOwners = 5 };

struct GraphDeleter {
    void operator()(ppgk_graph *g) const { ppgk_graph_free(g); }
};
struct SketchDeleter {
    void operator()(ppgk_sketches *s) const { ppgk_sketches_free(s); }
};
struct StoreDeleter {
    void operator()(ppgk_ppr_store *s) const { ppgk_ppr_store_free(s); }
};
using GraphPtr = std::unique_ptr<ppgk_graph, GraphDeleter>;
using SketchPtr = std::unique_ptr<ppgk_sketches, SketchDeleter>;
using StorePtr = std::unique_ptr<ppgk_ppr_store, StoreDeleter>;

// Carries an exit code out of nested helpers.
struct Abort {
    int code;
};

void report(const char *what, ppgk_status s) {
    std::fprintf(stderr, "ppgk: %s: %s (%s)\n", what, ppgk_last_error(), ppgk_status_name(s));
}

[[noreturn]] void abort_with(int code, const char *what, ppgk_status s) {
    report(what, s);
    throw Abort{code};
}

int artifact_exit(ppgk_status s) {
    switch (s) {
    case PPGK_MISSING_ARTIFACT:
    case PPGK_CHECKSUM_MISMATCH:
    case PPGK_PARAMETER_MISMATCH:
    case PPGK_PARSE:
        return kNoArtifact;
    default:
        return kFailure;
    }
}

std::string print_string(char *s) {
    std::string out = s ? s : "";
    ppgk_string_free(s);
    return out;
}

unsigned default_threads() {
    if (const char *env = std::getenv("PPGK_THREADS")) {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024)
            return unsigned(v);
        std::fprintf(stderr, "ppgk: ignoring invalid PPGK_THREADS=%s\n", env);
    }
    return 1;
}

GraphPtr load_graph(const std::string &dir) {
    ppgk_graph *g = nullptr;
    if (ppgk_status s = ppgk_graph_load(dir.c_str(), &g); s != PPGK_OK)
        abort_with(kBadInput, "cannot load graph", s);
    return GraphPtr(g);
}

std::string join(const std::string &dir, const char *file) {
    return dir.empty() || dir.back() == '/' ? dir + file : dir + "/" + file;
}

// generate

struct GenerateArgs {
    std::string input, fixture, cutoff, out;
};

int run_generate(const GenerateArgs &a) {
    const bool xml = !a.input.empty();
    ppgk_graph *raw = nullptr;
    ppgk_status s = ppgk_graph_generate(xml ? a.input.c_str() : a.fixture.c_str(),
                                        xml ? PPGK_INPUT_DBLP_XML : PPGK_INPUT_FIXTURE,
                                        a.cutoff.c_str(), &raw);
    if (s == PPGK_INVALID_ARGUMENT)
        abort_with(kFailure, "generate", s);
    if (s != PPGK_OK)
        abort_with(kBadInput, "cannot read input", s);
    GraphPtr g(raw);
    if (s = ppgk_graph_save(g.get(), a.out.c_str()); s != PPGK_OK)
        abort_with(kBadOutput, "cannot write graph", s);
    char *tsv = nullptr;
    if (s = ppgk_graph_stats_tsv(g.get(), &tsv); s != PPGK_OK)
        abort_with(kFailure, "stats", s);
    std::fputs(print_string(tsv).c_str(), stdout);
    return kOk;
}

// query

struct QueryArgs {
    std::string graph, task = "sp", engine, sketches, store;
    std::int64_t viewer = -1;
    std::uint32_t source = 0;
    std::vector<std::uint32_t> targets;
    bool build = false;
    double factor = 0.25;
    std::uint64_t seed = 1;
    double alpha = 0.15, eps = 1e-4, tol = 1e-10;
    std::size_t top_k = 0;
    unsigned threads = 1;
};

SketchPtr obtain_sketches(const ppgk_graph *g, const QueryArgs &a) {
    const std::string path = a.sketches.empty() ? join(a.graph, "sketches.bin") : a.sketches;
    ppgk_sketches *sk = nullptr;
    if (a.build) {
        if (ppgk_status s = ppgk_sketches_build(g, a.factor, a.seed, a.threads, &sk); s != PPGK_OK)
            abort_with(kFailure, "cannot build sketches", s);
        SketchPtr out(sk);
        if (ppgk_status s = ppgk_sketches_save(sk, g, path.c_str()); s != PPGK_OK)
            abort_with(kBadOutput, "cannot write sketches", s);
        return out;
    }
    if (ppgk_status s = ppgk_sketches_load(path.c_str(), g, a.factor, a.seed, &sk); s != PPGK_OK) {
        report("sketches unavailable (rerun with --build)", s);
        throw Abort{artifact_exit(s)};
    }
    return SketchPtr(sk);
}

StorePtr obtain_store(const ppgk_graph *g, const QueryArgs &a) {
    const std::string path = a.store.empty() ? join(a.graph, "ppr-store.bin") : a.store;
    ppgk_ppr_store *st = nullptr;
    if (a.build) {
        if (ppgk_status s = ppgk_ppr_store_build(g, a.alpha, a.eps, a.threads, &st); s != PPGK_OK)
            abort_with(kFailure, "cannot build store", s);
        StorePtr out(st);
        if (ppgk_status s = ppgk_ppr_store_save(st, g, path.c_str()); s != PPGK_OK)
            abort_with(kBadOutput, "cannot write store", s);
        return out;
    }
    if (ppgk_status s = ppgk_ppr_store_load(path.c_str(), g, a.alpha, a.eps, &st); s != PPGK_OK) {
        report("store unavailable (rerun with --build)", s);
        throw Abort{artifact_exit(s)};
    }
    return StorePtr(st);
}

std::string distance_text(std::int64_t d, const char *missing) {
    return d < 0 ? missing : std::to_string(d);
}

int run_sp(const ppgk_graph *g, const QueryArgs &a) {
    const std::string engine = a.engine.empty() ? "exact" : a.engine;
    if (engine != "exact" && engine != "sketch" && engine != "both")
        throw CLI::ValidationError("--engine", "sp engines are exact, sketch, both");
    if (a.targets.empty())
        throw CLI::ValidationError("--target", "sp queries need at least one --target");
    const std::uint32_t viewer = a.viewer < 0 ? a.source : std::uint32_t(a.viewer);
    SketchPtr sk;
    if (engine != "exact")
        sk = obtain_sketches(g, a);
    for (std::uint32_t t : a.targets) {
        std::string line = std::to_string(a.source) + '\t' + std::to_string(t);
        std::int64_t d = 0;
        if (engine != "sketch") {
            if (ppgk_status s = ppgk_sp_exact(g, viewer, a.source, t, &d); s != PPGK_OK)
                abort_with(kFailure, "query", s);
            line += '\t' + distance_text(d, "unreachable");
        }
        if (engine != "exact") {
            if (ppgk_status s = ppgk_sp_sketch(sk.get(), g, viewer, a.source, t, &d); s != PPGK_OK)
                abort_with(kFailure, "query", s);
            line += '\t' + distance_text(d, "none");
        }
        std::puts(line.c_str());
    }
    return kOk;
}

int run_ppr(const ppgk_graph *g, const QueryArgs &a) {
    const std::string engine = a.engine.empty() ? "power" : a.engine;
    ppgk_ppr_method method;
    double param;
    if (engine == "power") {
        method = PPGK_PPR_POWER;
        param = a.tol;
    } else if (engine == "push") {
        method = PPGK_PPR_PUSH;
        param = a.eps;
    } else if (engine == "heuristic") {
        method = PPGK_PPR_HEURISTIC;
        param = 0;
    } else {
        throw CLI::ValidationError("--engine", "ppr engines are power, push, heuristic");
    }
    if (a.viewer >= 0 && std::uint32_t(a.viewer) != a.source)
        std::fprintf(stderr, "ppgk: ppr ranks in the source's own view; --viewer ignored\n");
    StorePtr store;
    if (method == PPGK_PPR_HEURISTIC)
        store = obtain_store(g, a);
    const std::size_t n = ppgk_graph_vertex_count(g);
    std::vector<ppgk_score> out(a.top_k ? std::min(a.top_k, n) : n);
    std::size_t count = 0;
    if (ppgk_status s = ppgk_ppr_query(g, store.get(), method, a.source, a.alpha, param,
                                       out.data(), out.size(), &count);
        s != PPGK_OK)
        abort_with(kFailure, "query", s);
    for (std::size_t i = 0; i < count; ++i)
        std::printf("%" PRIu32 "\t%.12g\n", out[i].vertex, out[i].score);
    return kOk;
}

int run_query(const QueryArgs &a) {
    GraphPtr g = load_graph(a.graph);
    return a.task == "sp" ? run_sp(g.get(), a) : run_ppr(g.get(), a);
}

// bench

struct BenchArgs {
    std::string graph, task = "sp";
    ppgk_bench_options opt{};
    std::vector<double> factors;
    bool no_timing = false;
};

int run_bench(BenchArgs &a) {
    GraphPtr g = load_graph(a.graph);
    a.opt.task = a.task == "sp" ? PPGK_BENCH_SP : PPGK_BENCH_PPR;
    a.opt.factors = a.factors.empty() ? nullptr : a.factors.data();
    a.opt.factor_count = a.factors.size();
    a.opt.timing = a.no_timing ? 0 : 1;
    char *csv = nullptr;
    if (ppgk_status s = ppgk_bench(g.get(), &a.opt, &csv); s != PPGK_OK)
        abort_with(s == PPGK_NO_PRIVATE_OWNERS ? kNoOwners : kFailure, "bench", s);
    std::fputs(print_string(csv).c_str(), stdout);
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Public-private collaboration graphs: build, query, benchmark"};
    app.require_subcommand(1);
    const unsigned threads = default_threads();

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Build a graph from DBLP XML or a fixture");
    auto *in_opt = generate->add_option("--input", gen.input, "DBLP XML, optionally gzip");
    auto *fx_opt = generate->add_option("--fixture", gen.fixture, "Tab-separated fixture file");
    in_opt->excludes(fx_opt);
    generate->add_option("--cutoff", gen.cutoff, "YYYY-MM-DD; earlier papers are public")
        ->required();
    generate->add_option("--out", gen.out, "Output directory")->required();

    QueryArgs q;
    q.threads = threads;
    auto *query = app.add_subcommand("query", "Shortest path or personalized PageRank queries");
    query->add_option("--graph", q.graph, "Graph directory")->required();
    query->add_option("--task", q.task)->check(CLI::IsMember({"sp", "ppr"}));
    query->add_option("--viewer", q.viewer, "Whose view to query (sp; defaults to source)");
    query->add_option("--source", q.source)->required();
    query->add_option("--target", q.targets, "Repeatable (sp)");
    query->add_option("--engine", q.engine, "sp: exact|sketch|both, ppr: power|push|heuristic");
    query->add_option("--sketches", q.sketches, "Sketch file (default <graph>/sketches.bin)");
    query->add_option("--store", q.store, "PPR store file (default <graph>/ppr-store.bin)");
    query->add_flag("--build", q.build, "Build and save the sketch or store first");
    query->add_option("--m", q.factor, "Multiplicative factor in (0, 1]")->capture_default_str();
    query->add_option("--seed", q.seed, "Sketch seed")->capture_default_str();
    query->add_option("--alpha", q.alpha, "Teleport probability")->capture_default_str();
    query->add_option("--eps", q.eps, "Push threshold (push engine and store)")->capture_default_str();
    query->add_option("--tol", q.tol, "Power iteration L1 tolerance")->capture_default_str();
    query->add_option("--top-k", q.top_k, "Ranking length, 0 for all")->capture_default_str();
    query->add_option("--threads", q.threads, "Worker threads for --build")->capture_default_str();

    BenchArgs b;
    ppgk_bench_options_init(&b.opt);
    b.opt.threads = threads;
    auto *bench = app.add_subcommand("bench", "Seeded accuracy and latency benchmark (CSV)");
    bench->add_option("--graph", b.graph, "Graph directory")->required();
    bench->add_option("--task", b.task)->check(CLI::IsMember({"sp", "ppr"}));
    bench->add_option("--queries", b.opt.queries, "Sampled private owners")->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", b.opt.seed, "")->capture_default_str();
    bench->add_option("--factors", b.factors, "sp sweep (default 1 0.5 0.25)");
    bench->add_option("--alpha", b.opt.alpha, "")->capture_default_str();
    bench->add_option("--eps", b.opt.eps, "Push threshold on the view")->capture_default_str();
    bench->add_option("--store-eps", b.opt.store_eps, "Push threshold of the public store")->capture_default_str();
    bench->add_option("--tol", b.opt.tol, "Ground-truth power iteration tolerance")->capture_default_str();
    bench->add_option("--top-k", b.opt.top_k, "")->capture_default_str();
    bench->add_option("--reps", b.opt.repetitions, "Timed calls per query")->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--threads", b.opt.threads, "")->capture_default_str();
    bench->add_flag("--no-timing", b.no_timing, "Write NA for runtimes (byte-stable output)");

    try {
        app.parse(argc, argv);
        if (generate->parsed() && gen.input.empty() && gen.fixture.empty())
            throw CLI::RequiredError("--input or --fixture");
        if (generate->parsed())
            return run_generate(gen);
        if (query->parsed())
            return run_query(q);
        return run_bench(b);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kFailure;
    } catch (const Abort &a) {
        return a.code;
    }
}
