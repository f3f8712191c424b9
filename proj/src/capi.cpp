#include "ppgk/ppgk.h"

#include <cstring>
#include <new>
#include <string>

#include "ppgk/bench.hpp"
#include "ppgk/builder.hpp"
#include "ppgk/error.hpp"
#include "ppgk/io.hpp"
#include "ppgk/metrics.hpp"
#include "ppgk/pagerank.hpp"
#include "ppgk/shortest_path.hpp"

struct ppgk_graph {
    ppgk::PPGraph g;
    std::uint32_t checksum;
};

struct ppgk_sketches {
    ppgk::DistanceSketchSet sk;
};

struct ppgk_ppr_store {
    ppgk::PublicPPRStore store;
};

namespace {

thread_local std::string last_error;

ppgk_status to_status(ppgk::Errc c) {
    switch (c) {
    case ppgk::Errc::invalid_argument: return PPGK_INVALID_ARGUMENT;
    case ppgk::Errc::invalid_vertex: return PPGK_INVALID_VERTEX;
    case ppgk::Errc::parse: return PPGK_PARSE;
    case ppgk::Errc::io: return PPGK_IO;
    case ppgk::Errc::undefined_owner: return PPGK_UNDEFINED_OWNER;
    case ppgk::Errc::dimension_mismatch: return PPGK_DIMENSION_MISMATCH;
    case ppgk::Errc::zero_vector: return PPGK_ZERO_VECTOR;
    case ppgk::Errc::checksum_mismatch: return PPGK_CHECKSUM_MISMATCH;
    case ppgk::Errc::parameter_mismatch: return PPGK_PARAMETER_MISMATCH;
    case ppgk::Errc::missing_artifact: return PPGK_MISSING_ARTIFACT;
    case ppgk::Errc::no_private_owners: return PPGK_NO_PRIVATE_OWNERS;
    }
    return PPGK_INTERNAL;
}

ppgk_status fail(ppgk_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F> ppgk_status guarded(F &&f) {
    try {
        f();
        last_error.clear();
        return PPGK_OK;
    } catch (const ppgk::Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(PPGK_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(PPGK_INTERNAL, e.what());
    }
}

char *dup_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define PPGK_REQUIRE(cond)                                                                         \
    do {                                                                                           \
        if (!(cond))                                                                               \
            return fail(PPGK_INVALID_ARGUMENT, "null argument: " #cond);                           \
    } while (0)

} // namespace

extern "C" {

const char *ppgk_last_error(void) { return last_error.c_str(); }

const char *ppgk_status_name(ppgk_status status) {
    switch (status) {
    case PPGK_OK: return "ok";
    case PPGK_INVALID_ARGUMENT: return "invalid_argument";
    case PPGK_INVALID_VERTEX: return "invalid_vertex";
    case PPGK_PARSE: return "parse";
    case PPGK_IO: return "io";
    case PPGK_UNDEFINED_OWNER: return "undefined_owner";
    case PPGK_DIMENSION_MISMATCH: return "dimension_mismatch";
    case PPGK_ZERO_VECTOR: return "zero_vector";
    case PPGK_CHECKSUM_MISMATCH: return "checksum_mismatch";
    case PPGK_PARAMETER_MISMATCH: return "parameter_mismatch";
    case PPGK_MISSING_ARTIFACT: return "missing_artifact";
    case PPGK_NO_PRIVATE_OWNERS: return "no_private_owners";
    case PPGK_INTERNAL: return "internal";
    }
    return "unknown";
}

void ppgk_string_free(char *s) { delete[] s; }

ppgk_status ppgk_graph_generate(const char *input_path, ppgk_input_format format,
                                const char *cutoff, ppgk_graph **out) {
    PPGK_REQUIRE(input_path && cutoff && out);
    *out = nullptr;
    auto date = ppgk::Date::parse(cutoff);
    if (!date)
        return fail(PPGK_INVALID_ARGUMENT, std::string("bad cutoff date: ") + cutoff);
    return guarded([&] {
        std::vector<ppgk::PaperRecord> records;
        ppgk::read_records(input_path,
                           format == PPGK_INPUT_FIXTURE ? ppgk::InputFormat::fixture
                                                        : ppgk::InputFormat::dblp_xml,
                           records);
        ppgk::PPGraph g = ppgk::build_pp_graph(std::move(records), *date);
        const auto sum = ppgk::graph_checksum(g);
        *out = new ppgk_graph{std::move(g), sum};
    });
}

ppgk_status ppgk_graph_load(const char *dir, ppgk_graph **out) {
    PPGK_REQUIRE(dir && out);
    *out = nullptr;
    return guarded([&] {
        ppgk::PPGraph g = ppgk::load_graph(dir);
        const auto sum = ppgk::graph_checksum(g);
        *out = new ppgk_graph{std::move(g), sum};
    });
}

ppgk_status ppgk_graph_save(const ppgk_graph *g, const char *dir) {
    PPGK_REQUIRE(g && dir);
    return guarded([&] { ppgk::save_graph(g->g, dir); });
}

void ppgk_graph_free(ppgk_graph *g) { delete g; }

size_t ppgk_graph_vertex_count(const ppgk_graph *g) { return g ? g->g.vertex_count() : 0; }

uint32_t ppgk_graph_checksum(const ppgk_graph *g) { return g ? g->checksum : 0; }

ppgk_status ppgk_graph_find(const ppgk_graph *g, const char *name, uint32_t *out) {
    PPGK_REQUIRE(g && name && out);
    auto names = g->g.names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) {
            *out = std::uint32_t(i);
            last_error.clear();
            return PPGK_OK;
        }
    return fail(PPGK_INVALID_VERTEX, std::string("unknown author: ") + name);
}

ppgk_status ppgk_graph_stats(const ppgk_graph *g, ppgk_stats *out) {
    PPGK_REQUIRE(g && out);
    return guarded([&] {
        auto s = ppgk::network_stats(g->g);
        *out = ppgk_stats{s.n_vertices,        s.n_public_edges, s.n_private_vertices,
                          s.n_private_edges,   s.delta_g ? 1 : 0, s.delta_g.value_or(0.0)};
    });
}

ppgk_status ppgk_graph_stats_tsv(const ppgk_graph *g, char **out) {
    PPGK_REQUIRE(g && out);
    *out = nullptr;
    return guarded([&] { *out = dup_string(ppgk::format_stats_tsv(ppgk::network_stats(g->g))); });
}

ppgk_status ppgk_sp_exact(const ppgk_graph *g, uint32_t viewer, uint32_t source, uint32_t target,
                          int64_t *out) {
    PPGK_REQUIRE(g && out);
    return guarded([&] {
        g->g.check_vertex(viewer);
        auto d = ppgk::exact_distance(ppgk::view(g->g, viewer), source, target);
        *out = d ? std::int64_t(*d) : -1;
    });
}

ppgk_status ppgk_sketches_build(const ppgk_graph *g, double factor, uint64_t seed,
                                unsigned threads, ppgk_sketches **out) {
    PPGK_REQUIRE(g && out);
    *out = nullptr;
    return guarded([&] {
        *out = new ppgk_sketches{ppgk::build_sketches(g->g.public_graph(), factor, seed, threads)};
    });
}

ppgk_status ppgk_sketches_save(const ppgk_sketches *sk, const ppgk_graph *g, const char *path) {
    PPGK_REQUIRE(sk && g && path);
    return guarded([&] { ppgk::save_sketches(sk->sk, g->checksum, path); });
}

ppgk_status ppgk_sketches_load(const char *path, const ppgk_graph *g, double factor,
                               uint64_t seed, ppgk_sketches **out) {
    PPGK_REQUIRE(path && g && out);
    *out = nullptr;
    return guarded([&] {
        auto sk = ppgk::load_sketches(path, g->checksum);
        if (sk.factor() != factor || sk.rng_seed() != seed)
            throw ppgk::Error(ppgk::Errc::parameter_mismatch,
                              "sketch file was built with factor " + std::to_string(sk.factor()) +
                                  " and seed " + std::to_string(sk.rng_seed()));
        *out = new ppgk_sketches{std::move(sk)};
    });
}

void ppgk_sketches_free(ppgk_sketches *sk) { delete sk; }

size_t ppgk_sketches_entry_count(const ppgk_sketches *sk) {
    return sk ? sk->sk.total_entries() : 0;
}

ppgk_status ppgk_sp_sketch(const ppgk_sketches *sk, const ppgk_graph *g, uint32_t viewer,
                           uint32_t source, uint32_t target, int64_t *out) {
    PPGK_REQUIRE(sk && g && out);
    return guarded([&] {
        g->g.check_vertex(viewer);
        auto d = ppgk::private_sketch_distance(sk->sk, ppgk::view(g->g, viewer), source, target);
        *out = d ? std::int64_t(*d) : -1;
    });
}

ppgk_status ppgk_ppr_store_build(const ppgk_graph *g, double alpha, double eps, unsigned threads,
                                 ppgk_ppr_store **out) {
    PPGK_REQUIRE(g && out);
    *out = nullptr;
    return guarded([&] {
        *out = new ppgk_ppr_store{
            ppgk::precompute_public_ppr(g->g.public_graph(), alpha, eps, threads)};
    });
}

ppgk_status ppgk_ppr_store_save(const ppgk_ppr_store *store, const ppgk_graph *g,
                                const char *path) {
    PPGK_REQUIRE(store && g && path);
    return guarded([&] { ppgk::save_ppr_store(store->store, g->checksum, path); });
}

ppgk_status ppgk_ppr_store_load(const char *path, const ppgk_graph *g, double alpha, double eps,
                                ppgk_ppr_store **out) {
    PPGK_REQUIRE(path && g && out);
    *out = nullptr;
    return guarded([&] {
        auto store = ppgk::load_ppr_store(path, g->checksum);
        if (store.alpha() != alpha || store.eps() != eps)
            throw ppgk::Error(ppgk::Errc::parameter_mismatch,
                              "store file was built with alpha " + std::to_string(store.alpha()) +
                                  " and eps " + std::to_string(store.eps()));
        *out = new ppgk_ppr_store{std::move(store)};
    });
}

void ppgk_ppr_store_free(ppgk_ppr_store *store) { delete store; }

ppgk_status ppgk_ppr_query(const ppgk_graph *g, const ppgk_ppr_store *store,
                           ppgk_ppr_method method, uint32_t source, double alpha, double param,
                           ppgk_score *out, size_t capacity, size_t *count) {
    PPGK_REQUIRE(g && count && (out || capacity == 0));
    if (method == PPGK_PPR_HEURISTIC && !store)
        return fail(PPGK_MISSING_ARTIFACT, "heuristic queries need a public store");
    *count = 0;
    return guarded([&] {
        g->g.check_vertex(source);
        ppgk::UserView v = ppgk::view(g->g, source);
        ppgk::PPRVector r;
        switch (method) {
        case PPGK_PPR_POWER: r = ppgk::ppr_power(v, source, alpha, param); break;
        case PPGK_PPR_PUSH: r = ppgk::ppr_push(v, source, alpha, param); break;
        case PPGK_PPR_HEURISTIC: r = ppgk::ppr_heuristic(store->store, v, source, alpha); break;
        default: throw ppgk::Error(ppgk::Errc::invalid_argument, "unknown method");
        }
        auto top = r.top(capacity);
        for (std::size_t i = 0; i < top.size(); ++i)
            out[i] = ppgk_score{top[i].vertex, top[i].score};
        *count = top.size();
    });
}

void ppgk_bench_options_init(ppgk_bench_options *opt) {
    if (!opt)
        return;
    const ppgk::BenchOptions d;
    *opt = ppgk_bench_options{PPGK_BENCH_SP, d.queries,   d.seed,  nullptr,       0,
                              d.alpha,       d.eps,       d.store_eps, d.tol,     d.top_k,
                              d.repetitions, d.threads,   d.timing ? 1 : 0};
}

ppgk_status ppgk_bench(const ppgk_graph *g, const ppgk_bench_options *opt, char **out) {
    PPGK_REQUIRE(g && opt && out && (opt->factors || opt->factor_count == 0));
    *out = nullptr;
    return guarded([&] {
        ppgk::BenchOptions o;
        o.task = opt->task == PPGK_BENCH_PPR ? ppgk::BenchTask::pagerank
                                             : ppgk::BenchTask::shortest_path;
        o.queries = opt->queries;
        o.seed = opt->seed;
        if (opt->factors)
            o.factors.assign(opt->factors, opt->factors + opt->factor_count);
        o.alpha = opt->alpha;
        o.eps = opt->eps;
        o.store_eps = opt->store_eps;
        o.tol = opt->tol;
        o.top_k = opt->top_k;
        o.repetitions = opt->repetitions;
        o.threads = opt->threads;
        o.timing = opt->timing != 0;
        *out = dup_string(ppgk::run_bench(g->g, o));
    });
}

} // extern "C"
