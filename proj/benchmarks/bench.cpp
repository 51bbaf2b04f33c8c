#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pgcodes/cyclo.hpp"
#include "pgcodes/formats.hpp"
#include "pgcodes/pgeom.hpp"
#include "pgcodes/presets.hpp"
#include "pgcodes/spreads.hpp"
#include "pgcodes/steiner.hpp"

using namespace pgcodes;

// shared inputs built once; the benchmarks time fresh calls only
static const FieldCtx& f35() {
    static FieldCtx c = field_from_spec("f3_5");
    return c;
}
static const FieldCtx& f13() {
    static FieldCtx c = field_from_spec("f2_13");
    return c;
}
static const GroupTable& groups13() {
    static GroupTable gt = build_group_table(f13(), build_coset_table(f13()));
    return gt;
}
static const VertexSet& vertices13() {
    static VertexSet vs = enumerate_vertices(f13(), groups13());
    return vs;
}
static const DisjointnessGraph& graph13() {
    static DisjointnessGraph g = build_graph(vertices13());
    return g;
}
static const SpreadSeed& seed35() {
    static SpreadSeed s = read_seed(f35(), kBundledSeedPg53);
    return s;
}

static void FieldAdd(benchmark::State& state) {
    const FieldCtx& ctx = f35();
    std::mt19937_64 rng(1);
    std::vector<FieldElement> xs(4096);
    for (auto& x : xs) x = FieldElement::from_exp(static_cast<int32_t>(rng() % 242));
    size_t i = 0;
    for (auto _ : state) {
        FieldElement r = ctx.add(xs[i & 4095], xs[(i + 1) & 4095]);
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(FieldAdd);

static void CosetAndGroupTables(benchmark::State& state) {
    const FieldCtx& ctx = f13();
    for (auto _ : state) {
        GroupTable gt = build_group_table(ctx, build_coset_table(ctx));
        benchmark::DoNotOptimize(gt.group_count);
    }
}
BENCHMARK(CosetAndGroupTables);

static void AllLinesPg53(benchmark::State& state) {
    const FieldCtx& ctx = f35();
    for (auto _ : state) {
        std::vector<GeomLine> lines = all_lines(ctx);
        benchmark::DoNotOptimize(lines.size());
    }
}
BENCHMARK(AllLinesPg53);

static void ExpandAndVerifySpread(benchmark::State& state) {
    const FieldCtx& ctx = f35();
    const SpreadSeed& seed = seed35();
    for (auto _ : state) {
        Spread sp = expand_seed(ctx, seed);
        SpreadCheck chk = verify_spread(ctx, sp);
        benchmark::DoNotOptimize(chk.ok);
    }
}
BENCHMARK(ExpandAndVerifySpread);

static void BuildParallelism(benchmark::State& state) {
    const FieldCtx& ctx = f35();
    const SpreadSeed& seed = seed35();
    for (auto _ : state) {
        std::vector<Spread> par = build_parallelism(ctx, seed);
        benchmark::DoNotOptimize(par.size());
    }
}
BENCHMARK(BuildParallelism);

static void SeedSearchPg53(benchmark::State& state) {
    const FieldCtx& ctx = f35();
    for (auto _ : state) {
        SeedSearchResult r = search_seed(ctx, 120.0);
        benchmark::DoNotOptimize(r.nodes);
    }
}
BENCHMARK(SeedSearchPg53)->Unit(benchmark::kMillisecond)->Iterations(1);

static void EnumerateVerticesN13(benchmark::State& state) {
    for (auto _ : state) {
        VertexSet vs = enumerate_vertices(f13(), groups13());
        benchmark::DoNotOptimize(vs.size());
    }
}
BENCHMARK(EnumerateVerticesN13)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BuildGraphN13(benchmark::State& state) {
    const VertexSet& vs = vertices13();
    for (auto _ : state) {
        DisjointnessGraph g = build_graph(vs);
        benchmark::DoNotOptimize(g.edge_count);
    }
}
BENCHMARK(BuildGraphN13)->Unit(benchmark::kMillisecond)->Iterations(1);

static void Clique12N13(benchmark::State& state) {
    const DisjointnessGraph& g = graph13();
    for (auto _ : state) {
        CliqueResult r = find_clique(g, 12, 600.0);
        benchmark::DoNotOptimize(r.best_size);
    }
}
BENCHMARK(Clique12N13)->Unit(benchmark::kMillisecond)->Iterations(1);

static void VerifyCode12N13(benchmark::State& state) {
    CliqueResult r = find_clique(graph13(), 12, 600.0);
    SubspaceCode code = expand_code(f13(), r.vertices, vertices13());
    for (auto _ : state) {
        CodeReport rep = verify_code(f13(), code);
        benchmark::DoNotOptimize(rep.covered);
    }
}
BENCHMARK(VerifyCode12N13)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
