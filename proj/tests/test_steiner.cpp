#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgcodes/presets.hpp"
#include "pgcodes/steiner.hpp"

using namespace pgcodes;

template <typename E, typename F>
static std::string thrown_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return {};
}

TEST_CASE("span3 closes independent triples") {
    FieldCtx ctx = field_from_spec("f2_7");
    auto x = span3(ctx, 0, 1, 3);
    REQUIRE(x.has_value());
    CHECK(is_subspace3(ctx, *x));
    CHECK(std::is_sorted(x->exps.begin(), x->exps.end()));
    for (int32_t e : {0, 1, 3})
        CHECK(std::binary_search(x->exps.begin(), x->exps.end(), e));

    // sum closure, checked against field addition directly
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j) {
            FieldElement s = ctx.add(FieldElement::from_exp(x->exps[i]),
                                     FieldElement::from_exp(x->exps[j]));
            REQUIRE_FALSE(s.is_zero());
            REQUIRE(std::binary_search(x->exps.begin(), x->exps.end(), s.exp));
        }

    // alpha^7 = 1 + alpha, so {1, alpha, alpha^7} is dependent
    CHECK_FALSE(span3(ctx, 0, 1, 7).has_value());
    CHECK_FALSE(span3(ctx, 0, 0, 1).has_value());

    Subspace3 notsub{{0, 1, 2, 3, 4, 5, 6}};
    CHECK_FALSE(is_subspace3(ctx, notsub));
}

TEST_CASE("canonical representative is orbit-invariant") {
    FieldCtx ctx = field_from_spec("f2_7");
    Subspace3 x = *span3(ctx, 0, 2, 9);
    Subspace3 rep = canonical_rep(ctx, x);
    CHECK(rep.exps[0] == 0);
    CHECK(canonical_rep(ctx, rep) == rep);

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int64_t> dj(0, 126);
    std::uniform_int_distribution<int> dl(0, 6);
    for (int it = 0; it < 50; ++it) {
        Subspace3 img = shift_subspace(ctx, dj(rng), frobenius_subspace(ctx, dl(rng), x));
        REQUIRE(canonical_rep(ctx, img) == rep);
    }

    CHECK(shift_subspace(ctx, 127, x) == x);
    CHECK(frobenius_subspace(ctx, 7, x) == x);
    CHECK(shift_subspace(ctx, -5, shift_subspace(ctx, 5, x)) == x);
}

// every 3-subspace of F_2^7 through alpha^0, by direct closure
static std::vector<Subspace3> all_through_one(const FieldCtx& ctx) {
    std::vector<Subspace3> out;
    int32_t M = static_cast<int32_t>(ctx.q_minus_1());
    for (int32_t b = 1; b < M; ++b)
        for (int32_t c = b + 1; c < M; ++c) {
            auto x = span3(ctx, 0, b, c);
            if (x) out.push_back(*x);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TEST_CASE("n=7 orbit census") {
    FieldCtx ctx = field_from_spec("f2_7");
    std::vector<Subspace3> through1 = all_through_one(ctx);
    CHECK(through1.size() == 651);

    // shift classes: anchor each subspace at zero in all seven ways
    std::set<Subspace3> shift_classes;
    for (const Subspace3& x : through1) {
        Subspace3 best = x;
        for (int32_t e : x.exps) best = std::min(best, shift_subspace(ctx, -e, x));
        shift_classes.insert(best);
    }
    CHECK(shift_classes.size() == 93);

    std::set<Subspace3> reps;
    for (const Subspace3& x : through1) reps.insert(canonical_rep(ctx, x));
    REQUIRE(reps.size() == 15);

    // expanding every orbit reaches each of the 11811 subspaces exactly once
    size_t full = 0, stabilized = 0;
    std::set<Subspace3> all;
    for (const Subspace3& r : reps) {
        std::set<Subspace3> orbit;
        for (int l = 0; l < 7; ++l) {
            Subspace3 f = frobenius_subspace(ctx, l, r);
            for (int64_t j = 0; j < 127; ++j) orbit.insert(shift_subspace(ctx, j, f));
        }
        if (orbit.size() == 889) ++full;
        if (orbit.size() == 127) ++stabilized;
        all.insert(orbit.begin(), orbit.end());
    }
    CHECK(full == 13);
    CHECK(stabilized == 2);
    CHECK(all.size() == 11811);
}

TEST_CASE("difference sets and completeness") {
    FieldCtx ctx = field_from_spec("f2_7");
    // stabilized under a shift-Frobenius combination, yet all 42 diffs distinct
    Subspace3 stab{{0, 1, 3, 7, 15, 31, 63}};
    REQUIRE(is_subspace3(ctx, stab));
    CHECK(diff_set(ctx, stab).diffs.size() == 42);
    CHECK(is_complete(ctx, stab));

    // 0,1 and 1,2 both contribute difference 1
    Subspace3 flat = *span3(ctx, 0, 1, 2);
    CHECK(diff_set(ctx, flat).diffs.size() < 42);
    CHECK_FALSE(is_complete(ctx, flat));

    // only 18 nonzero cosets exist, so 42 distinct coset reps are impossible
    for (const Subspace3& x : all_through_one(ctx)) REQUIRE_FALSE(is_coset_complete(ctx, x));
}

TEST_CASE("n=7 complete vertex enumeration") {
    FieldCtx ctx = field_from_spec("f2_7");
    VertexSet vs = enumerate_complete_vertices(ctx);
    REQUIRE(vs.size() == 72);
    CHECK(vs.mode == VertexMode::CompleteDelta);
    CHECK(vs.mask_bits == 127);
    CHECK(vs.words == 2);
    CHECK(vs.subsets.empty());

    std::set<Subspace3> seen;
    for (size_t v = 0; v < vs.size(); ++v) {
        REQUIRE(vs.multiplicity[v] == 1);
        const Subspace3& r = vs.reps[v];
        REQUIRE(is_subspace3(ctx, r));
        REQUIRE(is_complete(ctx, r));
        REQUIRE(r.exps[0] == 0);
        seen.insert(r);

        // the mask is exactly the 42-element difference set
        DiffSet d = diff_set(ctx, r);
        REQUIRE(d.diffs.size() == 42);
        size_t bits = 0;
        for (int32_t diff : d.diffs)
            bits += (vs.mask(v)[static_cast<size_t>(diff) >> 6] >> (diff & 63)) & 1;
        REQUIRE(bits == 42);
    }
    CHECK(seen.size() == 72);

    // the grouped mode has nothing to offer at n=7: no 7 distinct groups exist
    CosetTable ct = build_coset_table(ctx);
    GroupTable gt = build_group_table(ctx, ct);
    CHECK(enumerate_vertices(ctx, gt).size() == 0);
}

TEST_CASE("disjointness graph edges mirror mask intersections") {
    FieldCtx ctx = field_from_spec("f2_7");
    VertexSet vs = enumerate_complete_vertices(ctx);
    DisjointnessGraph g = build_graph(vs);
    CHECK(g.vertex_count == 72);
    CHECK(g.edge_count == 36);

    for (int64_t i = 0; i < g.vertex_count; ++i) {
        REQUIRE_FALSE(g.edge(i, i));
        for (int64_t j = 0; j < g.vertex_count; ++j) {
            if (i == j) continue;
            bool overlap = false;
            for (size_t w = 0; w < vs.words; ++w)
                overlap |= (vs.mask(static_cast<size_t>(i))[w] & vs.mask(static_cast<size_t>(j))[w]) != 0;
            REQUIRE(g.edge(i, j) == !overlap);
            REQUIRE(g.edge(i, j) == g.edge(j, i));
        }
    }

    DisjointnessGraph g3 = build_graph(vs, 3);
    CHECK(g3.adj == g.adj);
    CHECK(g3.edge_count == g.edge_count);
}

TEST_CASE("no 3-clique among n=7 complete classes") {
    FieldCtx ctx = field_from_spec("f2_7");
    DisjointnessGraph g = build_graph(enumerate_complete_vertices(ctx));

    CliqueResult r = find_clique(g, 3, 60.0);
    CHECK(r.status == SearchStatus::Exhausted);
    CHECK(r.best_size == 2);
    REQUIRE(r.vertices.size() == 2);
    CHECK(g.edge(r.vertices[0], r.vertices[1]));

    CliqueResult hit = find_clique(g, 2, 60.0);
    CHECK(hit.status == SearchStatus::Found);
    CHECK(hit.best_size >= 2);
}

static DisjointnessGraph make_graph(int64_t V, const std::vector<std::pair<int, int>>& edges) {
    DisjointnessGraph g;
    g.vertex_count = V;
    g.words = static_cast<size_t>((V + 63) / 64);
    g.adj.assign(static_cast<size_t>(V) * g.words, 0);
    for (auto [i, j] : edges) {
        g.adj[static_cast<size_t>(i) * g.words + (static_cast<size_t>(j) >> 6)] |= uint64_t{1} << (j & 63);
        g.adj[static_cast<size_t>(j) * g.words + (static_cast<size_t>(i) >> 6)] |= uint64_t{1} << (i & 63);
        ++g.edge_count;
    }
    return g;
}

TEST_CASE("clique search on synthetic graphs") {
    std::vector<std::pair<int, int>> k6;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) k6.emplace_back(i, j);
    DisjointnessGraph g6 = make_graph(6, k6);
    CliqueResult r = find_clique(g6, 6, 10.0);
    CHECK(r.status == SearchStatus::Found);
    CHECK(r.best_size == 6);
    CHECK(r.vertices == std::vector<int32_t>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(r.rng_seed.has_value());

    DisjointnessGraph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CliqueResult rc = find_clique(c5, 0, 10.0);  // target 0: prove the maximum
    CHECK(rc.status == SearchStatus::Exhausted);
    CHECK(rc.best_size == 2);

    DisjointnessGraph empty = make_graph(0, {});
    CHECK(find_clique(empty, 1, 1.0).status == SearchStatus::Exhausted);

    DisjointnessGraph lone = make_graph(1, {});
    CliqueResult rl = find_clique(lone, 0, 1.0);
    CHECK(rl.status == SearchStatus::Exhausted);
    CHECK(rl.best_size == 1);
}

static DisjointnessGraph dense_random_graph(int V, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (rng() & 1) edges.emplace_back(i, j);
    return make_graph(V, edges);
}

TEST_CASE("clique search respects its budget") {
    DisjointnessGraph g = dense_random_graph(1000, 77);

    // the target is unreachable and the graph is far too big to exhaust
    CliqueResult r = find_clique(g, 1000, 0.05);
    CHECK(r.status == SearchStatus::TimedOut);
    CHECK(r.best_size > 2);

    CliqueResult rr = find_clique(g, 1000, 0.05, 5);
    CHECK(rr.status == SearchStatus::TimedOut);
    REQUIRE(rr.rng_seed.has_value());
    CHECK(*rr.rng_seed == 5);

    // randomized mode never claims exhaustion, even on tiny graphs
    DisjointnessGraph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CliqueResult rt = find_clique(c5, 3, 0.05, 1);
    CHECK(rt.status == SearchStatus::TimedOut);
    CHECK(rt.best_size == 2);
}

TEST_CASE("expand_code grows full orbits") {
    FieldCtx ctx = field_from_spec("f2_7");
    VertexSet vs = enumerate_complete_vertices(ctx);

    SubspaceCode code = expand_code(ctx, {0}, vs);
    REQUIRE(code.members.size() == 889);  // 7 x 127, no stabilizer
    CHECK(std::is_sorted(code.members.begin(), code.members.end()));
    CHECK(std::adjacent_find(code.members.begin(), code.members.end()) == code.members.end());
    CHECK(code.source_clique == std::vector<int32_t>{0});
    for (const Subspace3& x : code.members) REQUIRE(is_subspace3(ctx, x));

    CodeReport rep = verify_code(ctx, code);
    CHECK(rep.members == 889);
    CHECK(rep.two_subspaces == 6223);
    CHECK(rep.two_total == 2667);
    CHECK(rep.closed_ok);
    CHECK(rep.covered == rep.two_subspaces_distinct);
    CHECK(rep.covered <= 2667);
    CHECK(rep.uncovered == rep.two_total - rep.covered);
    CHECK_FALSE(rep.steiner_complete);

    CHECK_THROWS_AS(expand_code(ctx, {0, 0}, vs), Error);
    CHECK_THROWS_AS(expand_code(ctx, {-1}, vs), Error);
    CHECK_THROWS_AS(expand_code(ctx, {100000}, vs), Error);

    // any non-edge pair overlaps in differences and must be rejected
    DisjointnessGraph g = build_graph(vs);
    for (int64_t j = 1; j < g.vertex_count; ++j) {
        if (g.edge(0, j)) continue;
        std::string what = thrown_message<Error>([&] {
            expand_code(ctx, {0, static_cast<int32_t>(j)}, vs);
        });
        CHECK(what.find("disjoint") != std::string::npos);
        break;
    }
}

TEST_CASE("stabilized representative is rejected") {
    FieldCtx ctx = field_from_spec("f2_7");
    // a shift-Frobenius combination fixes this subspace, so its orbit is 127
    VertexSet vs;
    vs.mode = VertexMode::CompleteDelta;
    vs.mask_bits = 127;
    vs.words = 2;
    vs.masks.assign(2, 0);
    vs.reps.push_back(Subspace3{{0, 1, 3, 7, 15, 31, 63}});
    vs.multiplicity.push_back(1);
    REQUIRE(is_subspace3(ctx, vs.reps[0]));

    std::string what = thrown_message<UnexpectedStabilizerError>([&] { expand_code(ctx, {0}, vs); });
    CHECK(what.find("orbit") != std::string::npos);

    // both stabilized classes are complete, so they really occur as vertices
    VertexSet real = enumerate_complete_vertices(ctx);
    auto it = std::find(real.reps.begin(), real.reps.end(), vs.reps[0]);
    REQUIRE(it != real.reps.end());
    int32_t v = static_cast<int32_t>(it - real.reps.begin());
    CHECK_THROWS_AS(expand_code(ctx, {v}, real), UnexpectedStabilizerError);
}

TEST_CASE("verify_code rejects malformed codes") {
    FieldCtx ctx = field_from_spec("f2_7");
    Subspace3 a = *span3(ctx, 0, 1, 3);
    Subspace3 b = *span3(ctx, 0, 2, 9);

    SubspaceCode dup;
    dup.members = {std::min(a, b), std::max(a, b), std::max(a, b)};
    std::string what = thrown_message<Error>([&] { verify_code(ctx, dup); });
    CHECK(what.find("repeat") != std::string::npos);

    SubspaceCode bad;
    bad.members = {Subspace3{{0, 1, 2, 3, 4, 5, 6}}};
    what = thrown_message<Error>([&] { verify_code(ctx, bad); });
    CHECK(what.find("not a 3-subspace") != std::string::npos);
}

TEST_CASE("n=13 single orbit code") {
    FieldCtx ctx = field_from_spec("f2_13");
    CosetTable ct = build_coset_table(ctx);
    GroupTable gt = build_group_table(ctx, ct);
    VertexSet vs = enumerate_vertices(ctx, gt);
    REQUIRE(vs.size() == 25572);
    CHECK(vs.mode == VertexMode::CosetGroups);
    CHECK(vs.mask_bits == 105);
    CHECK(vs.subsets.size() == vs.size());
    for (size_t v = 0; v < vs.size(); ++v) {
        REQUIRE(vs.multiplicity[v] == 1);
        REQUIRE(std::is_sorted(vs.subsets[v].begin(), vs.subsets[v].end()));
        REQUIRE(vs.subsets[v][0] >= 0);
        REQUIRE(vs.subsets[v][6] < 105);
    }

    SubspaceCode code = expand_code(ctx, {0}, vs);
    REQUIRE(code.members.size() == 106483);  // 13 x 8191

    CodeReport rep = verify_code(ctx, code, 2);
    CHECK(rep.members == 106483);
    CHECK(rep.two_subspaces == 745381);
    CHECK(rep.two_subspaces_distinct == 745381);
    CHECK(rep.min_distance_ok);
    CHECK(rep.closed_ok);
    CHECK(rep.two_total == 11180715);
    CHECK(rep.covered == 745381);
    CHECK(rep.uncovered == 11180715 - 745381);
    CHECK_FALSE(rep.steiner_complete);
}
