// pgcodes command-line front end: field/cosets/spread/parallelism/steiner
// subcommands over the core library. Reports go to stdout as key-sorted
// "key = value" text; artifacts (seeds, line lists, DIMACS graphs, cliques,
// codes) are written to --out paths. Exit 0 on verified success, 1 on a
// verification failure, 2 on usage errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgcodes/cyclo.hpp"
#include "pgcodes/formats.hpp"
#include "pgcodes/gfield.hpp"
#include "pgcodes/pgeom.hpp"
#include "pgcodes/presets.hpp"
#include "pgcodes/report.hpp"
#include "pgcodes/spreads.hpp"
#include "pgcodes/steiner.hpp"

namespace {

using namespace pgcodes;

struct Options {
    std::string field;
    std::string out;
    std::string report_path;
    std::string seed_file;
    std::string mode = "coset-groups";
    std::string clique_file;
    std::string code_file;
    std::string in_file;
    double budget_seconds = 0;
    int workers = 1;
    int target = 0;
    std::optional<uint64_t> rng_seed;
};

int finish(RunReport& report, const Options& opt, bool pass) {
    std::string text = report.render();
    std::cout << text;
    if (!opt.report_path.empty()) write_text_file(opt.report_path, text);
    return pass ? 0 : 1;
}

std::string poly_text(const FieldParams& params) {
    std::string s;
    for (size_t k = 0; k < params.poly.size(); ++k) {
        if (params.poly[k] == 0) continue;
        if (!s.empty()) s += '+';
        if (params.poly[k] != 1 || k == 0) s += std::to_string(params.poly[k]);
        if (k >= 1) s += 'x';
        if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
}

void describe_field(RunReport& report, const FieldCtx& ctx) {
    report.set("field.p", ctx.p());
    report.set("field.n", ctx.n());
    report.set("field.q_minus_1", ctx.q_minus_1());
    report.set("field.m", ctx.m());
    report.set("field.poly", poly_text(ctx.params()));
}

SpreadSeed load_seed(const FieldCtx& ctx, const Options& opt) {
    if (!opt.seed_file.empty()) return read_seed(ctx, read_text_file(opt.seed_file));
    if (opt.field == "f3_5") return read_seed(ctx, kBundledSeedPg53);
    throw FormatError("no --seed file given and no bundled seed for field '" + opt.field + "'");
}

int cmd_field(const Options& opt) {
    RunReport report("field");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    report.set("point_count", point_count(ctx));
    return finish(report, opt, true);
}

int cmd_cosets(const Options& opt) {
    RunReport report("cosets");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    CosetTable ct;
    {
        PhaseTimer t(report, "cosets");
        ct = build_coset_table(ctx);
    }
    report.set("counts.cosets", static_cast<int64_t>(ct.cosets.size()));
    report.set("counts.size_n_cosets", ct.size_n_count);
    try {
        GroupTable gt = build_group_table(ctx, ct);
        report.set("counts.groups", gt.group_count);
    } catch (const GroupingInconsistentError& e) {
        report.set("grouping", std::string("undefined: ") + e.what());
    }
    return finish(report, opt, true);
}

int cmd_spread_build(const Options& opt) {
    RunReport report("spread build");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    SpreadSeed seed = load_seed(ctx, opt);
    Spread spread;
    try {
        PhaseTimer t(report, "expand");
        spread = expand_seed(ctx, seed);
    } catch (const Error& e) {
        report.verdict("spread", false);
        report.set("first_violation", e.what());
        return finish(report, opt, false);
    }
    SpreadCheck chk;
    {
        PhaseTimer t(report, "verify");
        chk = verify_spread(ctx, spread);
    }
    report.set("counts.lines", chk.line_count);
    report.verdict("spread", chk.ok);
    if (!chk.ok) report.set("first_violation", chk.first_violation);
    if (!opt.out.empty()) write_text_file(opt.out, write_lines(ctx, spread));
    return finish(report, opt, chk.ok);
}

void parallelism_report(RunReport& report, const ParallelismCheck& chk) {
    report.set("spread_count", chk.spread_count);
    report.set("line_count", chk.line_count);
    report.set("coverage_ok", chk.coverage_ok ? "true" : "false");
    report.set("first_violation", chk.first_violation.empty() ? "none" : chk.first_violation);
    report.verdict("parallelism", chk.ok);
}

int cmd_parallelism_build(const Options& opt) {
    RunReport report("parallelism build");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    SpreadSeed seed = load_seed(ctx, opt);
    std::vector<Spread> par;
    try {
        PhaseTimer t(report, "build");
        par = build_parallelism(ctx, seed);
    } catch (const Error& e) {
        report.verdict("parallelism", false);
        report.set("first_violation", e.what());
        return finish(report, opt, false);
    }
    ParallelismCheck chk;
    {
        PhaseTimer t(report, "verify");
        chk = verify_parallelism(ctx, par);
    }
    report.set("counts.spreads", chk.spread_count);
    report.set("counts.lines", chk.line_count);
    parallelism_report(report, chk);
    if (!opt.out.empty()) write_text_file(opt.out, write_parallelism(ctx, par));
    return finish(report, opt, chk.ok);
}

int cmd_parallelism_verify(const Options& opt) {
    RunReport report("parallelism verify");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    if (opt.in_file.empty()) throw CLI::ValidationError("--in", "parallelism verify needs --in <file>");
    std::vector<Spread> par = read_parallelism(ctx, read_text_file(opt.in_file));
    ParallelismCheck chk;
    {
        PhaseTimer t(report, "verify");
        chk = verify_parallelism(ctx, par);
    }
    parallelism_report(report, chk);
    return finish(report, opt, chk.ok);
}

int cmd_parallelism_search(const Options& opt) {
    RunReport report("parallelism search");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    SeedSearchResult res;
    {
        PhaseTimer t(report, "search");
        res = search_seed(ctx, opt.budget_seconds);
    }
    report.set("status", to_string(res.status));
    report.set("nodes", res.nodes);
    report.set("best_depth", res.best_depth);
    bool pass = res.status == SearchStatus::Found;
    if (pass) {
        std::vector<Spread> par = build_parallelism(ctx, res.seed);
        ParallelismCheck chk = verify_parallelism(ctx, par);
        report.set("counts.spreads", chk.spread_count);
        report.set("counts.lines", chk.line_count);
        parallelism_report(report, chk);
        pass = chk.ok;
        if (!opt.out.empty()) write_text_file(opt.out, write_seed(ctx, res.seed));
    }
    return finish(report, opt, pass);
}

VertexSet make_vertices(RunReport& report, const FieldCtx& ctx, const Options& opt) {
    PhaseTimer t(report, "vertices");
    if (opt.mode == "complete") return enumerate_complete_vertices(ctx);
    if (opt.mode != "coset-groups")
        throw CLI::ValidationError("--mode", "expected coset-groups or complete");
    GroupTable gt = build_group_table(ctx, build_coset_table(ctx));
    return enumerate_vertices(ctx, gt);
}

void vertex_report(RunReport& report, const VertexSet& vs) {
    int64_t realizations = 0;
    for (int32_t c : vs.multiplicity) realizations += c;
    report.set("mode", vs.mode == VertexMode::CosetGroups ? "coset-groups" : "complete");
    report.set("counts.vertices", static_cast<int64_t>(vs.size()));
    report.set("counts.realizations", realizations);
}

int cmd_steiner_vertices(const Options& opt) {
    RunReport report("steiner vertices");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    VertexSet vs = make_vertices(report, ctx, opt);
    vertex_report(report, vs);
    if (!opt.out.empty()) write_text_file(opt.out, write_sidecar(vs));
    return finish(report, opt, true);
}

int cmd_steiner_graph(const Options& opt) {
    RunReport report("steiner graph");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    VertexSet vs = make_vertices(report, ctx, opt);
    vertex_report(report, vs);
    DisjointnessGraph g;
    {
        PhaseTimer t(report, "graph");
        g = build_graph(vs, opt.workers);
    }
    report.set("counts.edges", g.edge_count);
    if (!opt.out.empty()) {
        write_text_file(opt.out, write_dimacs(g));
        write_text_file(opt.out + ".map", write_sidecar(vs));
    }
    return finish(report, opt, true);
}

int cmd_steiner_clique(const Options& opt) {
    RunReport report("steiner clique");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    VertexSet vs = make_vertices(report, ctx, opt);
    vertex_report(report, vs);
    DisjointnessGraph g;
    {
        PhaseTimer t(report, "graph");
        g = build_graph(vs, opt.workers);
    }
    report.set("counts.edges", g.edge_count);
    CliqueResult res;
    {
        PhaseTimer t(report, "clique");
        res = find_clique(g, opt.target, opt.budget_seconds, opt.rng_seed);
    }
    report.set("status", to_string(res.status));
    report.set("counts.clique", res.best_size);
    report.set("nodes", res.nodes);
    if (res.rng_seed) report.set("rng_seed", *res.rng_seed);
    std::string ids;
    for (int32_t v : res.vertices) ids += (ids.empty() ? "" : " ") + std::to_string(v);
    report.set("clique.vertices", ids);
    bool pass = opt.target > 0 && res.best_size >= opt.target;
    report.verdict("target_met", pass);
    if (!opt.out.empty()) write_text_file(opt.out, write_clique(res.vertices));
    return finish(report, opt, pass);
}

int cmd_steiner_expand(const Options& opt) {
    RunReport report("steiner expand");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    if (opt.clique_file.empty()) throw CLI::ValidationError("--clique", "steiner expand needs --clique <file>");
    std::vector<int32_t> clique = read_clique(read_text_file(opt.clique_file));
    VertexSet vs = make_vertices(report, ctx, opt);
    vertex_report(report, vs);
    SubspaceCode code;
    try {
        PhaseTimer t(report, "expand");
        code = expand_code(ctx, clique, vs);
    } catch (const Error& e) {
        report.verdict("expand", false);
        report.set("first_violation", e.what());
        return finish(report, opt, false);
    }
    report.verdict("expand", true);
    report.set("counts.members", static_cast<int64_t>(code.members.size()));
    if (!opt.out.empty()) write_text_file(opt.out, write_code(code));
    return finish(report, opt, true);
}

int cmd_steiner_verify(const Options& opt) {
    RunReport report("steiner verify");
    FieldCtx ctx = field_from_spec(opt.field);
    describe_field(report, ctx);
    if (opt.code_file.empty()) throw CLI::ValidationError("--code", "steiner verify needs --code <file>");
    SubspaceCode code = read_code(read_text_file(opt.code_file));
    CodeReport rep;
    try {
        PhaseTimer t(report, "verify");
        rep = verify_code(ctx, code, opt.workers);
    } catch (const Error& e) {
        report.verdict("code", false);
        report.set("first_violation", e.what());
        return finish(report, opt, false);
    }
    report.set("counts.members", rep.members);
    report.set("counts.two_subspaces", rep.two_subspaces);
    report.set("counts.two_subspaces_distinct", rep.two_subspaces_distinct);
    report.set("counts.two_total", rep.two_total);
    report.set("counts.covered", rep.covered);
    report.set("counts.uncovered", rep.uncovered);
    report.set("steiner_complete", rep.steiner_complete ? "true" : "false");
    report.verdict("min_distance_ok", rep.min_distance_ok);
    report.verdict("closed_ok", rep.closed_ok);
    return finish(report, opt, rep.min_distance_ok && rep.closed_ok);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"parallelisms of PG(n,p) lines and q-analog Steiner structure search"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", opt.field, "field preset (f3_5, f2_7, f2_13) or p=..,n=..,poly=..");
    app.add_option("--out", opt.out, "artifact output path");
    app.add_option("--report", opt.report_path, "also write the report to this file");
    app.add_option("--budget-seconds", opt.budget_seconds, "search budget; 0 = unlimited");
    app.add_option("--workers", opt.workers, "worker thread cap")->check(CLI::PositiveNumber);

    auto* field_cmd = app.add_subcommand("field", "build a field and report its parameters");
    auto* cosets_cmd = app.add_subcommand("cosets", "cyclotomic cosets and their six-coset groups");

    auto* spread_cmd = app.add_subcommand("spread", "single-spread operations");
    auto* spread_build = spread_cmd->add_subcommand("build", "expand a seed into a verified spread");
    spread_build->add_option("--seed", opt.seed_file, "seed file (bundled PG(5,3) seed when omitted)");

    auto* par_cmd = app.add_subcommand("parallelism", "full parallelism operations");
    auto* par_build = par_cmd->add_subcommand("build", "build and verify a parallelism from a seed");
    par_build->add_option("--seed", opt.seed_file, "seed file (bundled PG(5,3) seed when omitted)");
    auto* par_verify = par_cmd->add_subcommand("verify", "verify a parallelism file");
    par_verify->add_option("--in", opt.in_file, "parallelism file to verify");
    auto* par_search = par_cmd->add_subcommand("search", "backtracking seed search");

    auto* st_cmd = app.add_subcommand("steiner", "subspace-code pipeline");
    auto* st_vertices = st_cmd->add_subcommand("vertices", "enumerate disjointness-graph vertices");
    auto* st_graph = st_cmd->add_subcommand("graph", "build the disjointness graph (DIMACS + .map)");
    auto* st_clique = st_cmd->add_subcommand("clique", "search for a clique of --target size");
    auto* st_expand = st_cmd->add_subcommand("expand", "expand a clique into a subspace code");
    auto* st_verify = st_cmd->add_subcommand("verify", "verify a subspace code file");
    for (CLI::App* sc : {st_vertices, st_graph, st_clique, st_expand})
        sc->add_option("--mode", opt.mode, "coset-groups (default) or complete");
    st_clique->add_option("--target", opt.target, "clique size to reach");
    st_clique->add_option("--seed", opt.rng_seed, "RNG seed: use seeded random-restart greedy search");
    st_expand->add_option("--clique", opt.clique_file, "clique file from steiner clique");
    st_verify->add_option("--code", opt.code_file, "code file from steiner expand");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(field_cmd)) return cmd_field(opt);
        if (app.got_subcommand(cosets_cmd)) return cmd_cosets(opt);
        if (app.got_subcommand(spread_cmd)) {
            if (spread_cmd->got_subcommand(spread_build)) return cmd_spread_build(opt);
            std::cerr << "spread needs a subcommand (build)\n";
            return 2;
        }
        if (app.got_subcommand(par_cmd)) {
            if (par_cmd->got_subcommand(par_build)) return cmd_parallelism_build(opt);
            if (par_cmd->got_subcommand(par_verify)) return cmd_parallelism_verify(opt);
            if (par_cmd->got_subcommand(par_search)) return cmd_parallelism_search(opt);
            std::cerr << "parallelism needs a subcommand (build, verify, search)\n";
            return 2;
        }
        if (app.got_subcommand(st_cmd)) {
            if (st_cmd->got_subcommand(st_vertices)) return cmd_steiner_vertices(opt);
            if (st_cmd->got_subcommand(st_graph)) return cmd_steiner_graph(opt);
            if (st_cmd->got_subcommand(st_clique)) return cmd_steiner_clique(opt);
            if (st_cmd->got_subcommand(st_expand)) return cmd_steiner_expand(opt);
            if (st_cmd->got_subcommand(st_verify)) return cmd_steiner_verify(opt);
            std::cerr << "steiner needs a subcommand (vertices, graph, clique, expand, verify)\n";
            return 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const pgcodes::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
