#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgcodes/formats.hpp"
#include "pgcodes/presets.hpp"

using namespace pgcodes;

TEST_CASE("line text round trip") {
    FieldCtx ctx = field_from_spec("f3_5");
    CHECK(line_to_text(ctx, type1_line(ctx)) == "P0:0 P1:zero P1:0 P1:121");

    for (const GeomLine& ln : {type1_line(ctx),
                               line_through(ctx, ProjPoint::p0(ctx, 3), ProjPoint::p0(ctx, 40)),
                               line_through(ctx, ProjPoint::p0(ctx, 9),
                                            ProjPoint::p1(FieldElement::from_exp(200)))}) {
        REQUIRE(line_from_text(ctx, line_to_text(ctx, ln)) == ln);
    }
}

TEST_CASE("line tokens are validated") {
    FieldCtx ctx = field_from_spec("f3_5");
    CHECK_THROWS_AS(line_from_text(ctx, "P0:121 P1:0 P1:1 P1:2"), FormatError);  // index >= m
    CHECK_THROWS_AS(line_from_text(ctx, "P0:0 P1:242 P1:1 P1:2"), FormatError);  // exponent >= q-1
    CHECK_THROWS_AS(line_from_text(ctx, "P0:0 P1:-1 P1:1 P1:2"), FormatError);
    CHECK_THROWS_AS(line_from_text(ctx, "P2:0 P1:0 P1:1 P1:2"), FormatError);
    CHECK_THROWS_AS(line_from_text(ctx, "P0:x P1:0 P1:1 P1:2"), FormatError);
    CHECK_THROWS_AS(line_from_text(ctx, "P0:0 P1:0 P1:1"), FormatError);        // p+1 points needed
    CHECK_THROWS_AS(line_from_text(ctx, "P0:0 P0:0 P1:0 P1:1"), FormatError);   // repeated point
    // shape-valid text parses even when the points are not collinear
    GeomLine skew = line_from_text(ctx, "P0:0 P0:1 P0:2 P0:3");
    CHECK_FALSE(is_line(ctx, skew));
}

TEST_CASE("line lists round trip") {
    FieldCtx ctx = field_from_spec("f3_5");
    std::vector<GeomLine> lines = all_lines(ctx);
    std::string text = write_lines(ctx, lines);
    CHECK(read_lines(ctx, text) == lines);
    CHECK(write_lines(ctx, read_lines(ctx, text)) == text);
    CHECK(read_lines(ctx, "# comment\n\n" + text) == lines);
}

TEST_CASE("seed files round trip byte for byte") {
    FieldCtx ctx = field_from_spec("f3_5");
    SpreadSeed seed = read_seed(ctx, kBundledSeedPg53);
    CHECK(write_seed(ctx, seed) == kBundledSeedPg53);

    SpreadSeed again = read_seed(ctx, write_seed(ctx, seed));
    CHECK(again.base_lines == seed.base_lines);
    CHECK(again.shift_table == seed.shift_table);
    CHECK(again.generators == seed.generators);
}

TEST_CASE("bundled fixture file matches the embedded seed") {
    FieldCtx ctx = field_from_spec("f3_5");
    std::string text = read_text_file(std::string(PGCODES_FIXTURE_DIR) + "/paper_pg53.seed");
    SpreadSeed seed = read_seed(ctx, text);  // comments and blank lines skipped
    CHECK(write_seed(ctx, seed) == kBundledSeedPg53);
}

TEST_CASE("seed reader rejects structural junk") {
    FieldCtx ctx = field_from_spec("f3_5");
    CHECK_THROWS_AS(read_seed(ctx, "[junk]\nP0:0 P1:0 P1:1 P1:2\n"), FormatError);
    CHECK_THROWS_AS(read_seed(ctx, "P0:0 P1:zero P1:0 P1:121\n[base]\n"), FormatError);
    CHECK_THROWS_AS(read_seed(ctx, ""), FormatError);
    CHECK_THROWS_AS(read_seed(ctx, "[base]\n[shifts]\n[generators]\n"), FormatError);
}

TEST_CASE("parallelism files round trip") {
    FieldCtx ctx = field_from_spec("f3_5");
    std::vector<Spread> par = build_parallelism(ctx, read_seed(ctx, kBundledSeedPg53));
    std::string text = write_parallelism(ctx, par);
    std::vector<Spread> back = read_parallelism(ctx, text);
    CHECK(back == par);
    CHECK(write_parallelism(ctx, back) == text);

    CHECK_THROWS_AS(read_parallelism(ctx, ""), FormatError);
    CHECK_THROWS_AS(read_parallelism(ctx, "P0:0 P1:zero P1:0 P1:121\n"), FormatError);
    CHECK_THROWS_AS(read_parallelism(ctx, "[spread 1]\nP0:0 P1:zero P1:0 P1:121\n"), FormatError);
}

TEST_CASE("dimacs round trip") {
    FieldCtx ctx = field_from_spec("f2_7");
    DisjointnessGraph g = build_graph(enumerate_complete_vertices(ctx));
    std::string text = write_dimacs(g);
    DisjointnessGraph back = read_dimacs(text);
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(back.words == g.words);
    CHECK(back.edge_count == g.edge_count);
    CHECK(back.adj == g.adj);
    CHECK(write_dimacs(back) == text);

    CHECK(read_dimacs("c nothing here\np edge 3 0\n").vertex_count == 3);
}

TEST_CASE("dimacs reader rejects malformed input") {
    CHECK_THROWS_AS(read_dimacs("e 1 2\np edge 3 1\n"), FormatError);        // edge before header
    CHECK_THROWS_AS(read_dimacs("p edge 3 1\np edge 3 1\ne 1 2\n"), FormatError);
    CHECK_THROWS_AS(read_dimacs("p edge 3 1\ne 1 4\n"), FormatError);        // endpoint range
    CHECK_THROWS_AS(read_dimacs("p edge 3 1\ne 1 1\n"), FormatError);        // self loop
    CHECK_THROWS_AS(read_dimacs("p edge 3 2\ne 1 2\n"), FormatError);        // count mismatch
    CHECK_THROWS_AS(read_dimacs("p edge 3 0\nq what\n"), FormatError);
    CHECK_THROWS_AS(read_dimacs(""), FormatError);
}

TEST_CASE("sidecar round trip in both modes") {
    FieldCtx f7 = field_from_spec("f2_7");
    VertexSet vs = enumerate_complete_vertices(f7);
    std::string text = write_sidecar(vs);
    VertexSet back = read_sidecar(f7, text);
    CHECK(back.mode == vs.mode);
    CHECK(back.mask_bits == vs.mask_bits);
    CHECK(back.words == vs.words);
    CHECK(back.masks == vs.masks);
    CHECK(back.reps == vs.reps);
    CHECK(back.multiplicity == vs.multiplicity);
    CHECK(write_sidecar(back) == text);

    // grouped mode, hand-assembled
    VertexSet cg;
    cg.mode = VertexMode::CosetGroups;
    cg.mask_bits = 10;
    cg.words = 1;
    cg.subsets = {{0, 1, 2, 3, 4, 5, 6}, {3, 4, 5, 6, 7, 8, 9}};
    for (const auto& sub : cg.subsets) {
        uint64_t m = 0;
        for (int32_t gid : sub) m |= uint64_t{1} << gid;
        cg.masks.push_back(m);
    }
    cg.reps = {Subspace3{{0, 1, 2, 3, 4, 5, 6}}, Subspace3{{0, 2, 4, 6, 8, 10, 12}}};
    cg.multiplicity = {1, 2};
    std::string cgtext = write_sidecar(cg);
    VertexSet cgback = read_sidecar(f7, cgtext);
    CHECK(cgback.mode == VertexMode::CosetGroups);
    CHECK(cgback.mask_bits == 10);
    CHECK(cgback.masks == cg.masks);
    CHECK(cgback.subsets == cg.subsets);
    CHECK(cgback.reps == cg.reps);
    CHECK(cgback.multiplicity == cg.multiplicity);
    CHECK(write_sidecar(cgback) == cgtext);
}

TEST_CASE("sidecar reader rejects malformed input") {
    FieldCtx ctx = field_from_spec("f2_7");
    CHECK_THROWS_AS(read_sidecar(ctx, ""), FormatError);
    CHECK_THROWS_AS(read_sidecar(ctx, "mode: whatever\nmask-bits: 10\n"), FormatError);
    CHECK_THROWS_AS(read_sidecar(ctx, "mode: complete-delta\nmask-bits: 100\n"), FormatError);
    std::string head = "mode: coset-groups\nmask-bits: 10\n";
    CHECK_THROWS_AS(read_sidecar(ctx, head + "0: 1 2 3\n"), FormatError);
    CHECK_THROWS_AS(
        read_sidecar(ctx, head + "1: 0 1 2 3 4 5 6 / rep: 0 1 2 3 4 5 6 / mult: 1\n"),
        FormatError);  // ids must start at 0
    CHECK_THROWS_AS(
        read_sidecar(ctx, head + "0: 0 1 2 3 4 5 12 / rep: 0 1 2 3 4 5 6 / mult: 1\n"),
        FormatError);  // group id beyond mask width
    CHECK_THROWS_AS(
        read_sidecar(ctx, head + "0: 0 1 2 3 4 5 6 / rep: 0 1 2 3 4 5 6 / mult: 0\n"),
        FormatError);
    CHECK_THROWS_AS(
        read_sidecar(ctx, head + "0: 0 1 2 3 4 5 6 / rep: 0 1 2 3 4 5 200 / mult: 1\n"),
        FormatError);  // rep exponent beyond q-1
}

TEST_CASE("clique files round trip") {
    std::vector<int32_t> ids{2, 5, 9, 44};
    CHECK(read_clique(write_clique(ids)) == ids);
    CHECK_THROWS_AS(read_clique("3 -1 5\n"), FormatError);
    CHECK_THROWS_AS(read_clique("3 x\n"), FormatError);
}

TEST_CASE("code files round trip") {
    FieldCtx ctx = field_from_spec("f2_7");
    SubspaceCode code = expand_code(ctx, {0}, enumerate_complete_vertices(ctx));
    code.source_clique = {0};
    std::string text = write_code(code);
    SubspaceCode back = read_code(text);
    CHECK(back.members == code.members);
    CHECK(back.source_clique == code.source_clique);
    CHECK(write_code(back) == text);

    SubspaceCode bare;
    bare.members = code.members;
    CHECK(read_code(write_code(bare)).source_clique.empty());

    CHECK_THROWS_AS(read_code("0 1 2 3 4 5\n"), FormatError);           // six exponents
    CHECK_THROWS_AS(read_code("0 1 2 3 4 5 5\n"), FormatError);         // not ascending
    CHECK_THROWS_AS(read_code("0 2 3 4 5 6 7\n0 1 2 3 4 5 6\n"), FormatError);  // rows unsorted
}

TEST_CASE("text files round trip through the filesystem") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pgcodes-tests";
    fs::create_directories(dir);
    std::string path = (dir / "roundtrip.txt").string();
    write_text_file(path, "alpha\nbeta\n");
    CHECK(read_text_file(path) == "alpha\nbeta\n");
    CHECK_THROWS_AS(read_text_file((dir / "missing.txt").string()), FormatError);
}
