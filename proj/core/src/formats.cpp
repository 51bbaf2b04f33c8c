#include "pgcodes/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pgcodes {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int64_t parse_int(const std::string& s) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw FormatError("bad integer '" + s + "'");
    return v;
}

// content lines with blanks and # comments stripped
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::string point_token(const FieldCtx& ctx, int32_t key) {
    if (key < ctx.m()) return "P0:" + std::to_string(key);
    if (key == ctx.m()) return "P1:zero";
    return "P1:" + std::to_string(key - ctx.m() - 1);
}

ProjPoint token_point(const FieldCtx& ctx, const std::string& tok) {
    if (tok.rfind("P0:", 0) == 0) {
        int64_t i = parse_int(tok.substr(3));
        if (i < 0 || i >= ctx.m()) throw FormatError("P0 index out of range in '" + tok + "'");
        return ProjPoint::p0(ctx, i);
    }
    if (tok == "P1:zero") return ProjPoint::p1(FieldElement::zero());
    if (tok.rfind("P1:", 0) == 0) {
        int64_t e = parse_int(tok.substr(3));
        if (e < 0 || e >= ctx.q_minus_1())
            throw FormatError("P1 exponent out of range in '" + tok + "'");
        return ProjPoint::p1(FieldElement::from_exp(static_cast<int32_t>(e)));
    }
    throw FormatError("bad point token '" + tok + "'");
}

}  // namespace

std::string line_to_text(const FieldCtx& ctx, const GeomLine& ln) {
    std::string out;
    for (int i = 0; i < ln.npts; ++i) {
        if (i) out += ' ';
        out += point_token(ctx, ln.keys[static_cast<size_t>(i)]);
    }
    return out;
}

GeomLine line_from_text(const FieldCtx& ctx, const std::string& text) {
    std::vector<ProjPoint> pts;
    for (const std::string& tok : split_ws(text)) pts.push_back(token_point(ctx, tok));
    try {
        return make_line(ctx, pts);
    } catch (const Error& e) {
        throw FormatError("'" + text + "': " + e.what());
    }
}

std::string write_lines(const FieldCtx& ctx, const std::vector<GeomLine>& lines) {
    std::string out;
    for (const GeomLine& ln : lines) {
        out += line_to_text(ctx, ln);
        out += '\n';
    }
    return out;
}

std::vector<GeomLine> read_lines(const FieldCtx& ctx, const std::string& text) {
    std::vector<GeomLine> out;
    for (const std::string& line : content_lines(text)) out.push_back(line_from_text(ctx, line));
    return out;
}

std::string write_seed(const FieldCtx& ctx, const SpreadSeed& seed) {
    std::string out = "[base]\n";
    for (const GeomLine& ln : seed.base_lines) out += line_to_text(ctx, ln) + "\n";
    out += "[shifts]\n";
    for (const auto& row : seed.shift_table) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    out += "[generators]\n";
    for (const GeomLine& ln : seed.generators) out += line_to_text(ctx, ln) + "\n";
    return out;
}

SpreadSeed read_seed(const FieldCtx& ctx, const std::string& text) {
    SpreadSeed seed;
    int section = -1;  // 0 base, 1 shifts, 2 generators
    for (const std::string& line : content_lines(text)) {
        if (line == "[base]") {
            section = 0;
            continue;
        }
        if (line == "[shifts]") {
            section = 1;
            continue;
        }
        if (line == "[generators]") {
            section = 2;
            continue;
        }
        if (line[0] == '[') throw FormatError("unknown section " + line);
        switch (section) {
            case 0:
                seed.base_lines.push_back(line_from_text(ctx, line));
                break;
            case 1: {
                std::vector<int64_t> row;
                for (const std::string& tok : split_ws(line)) row.push_back(parse_int(tok));
                seed.shift_table.push_back(std::move(row));
                break;
            }
            case 2:
                seed.generators.push_back(line_from_text(ctx, line));
                break;
            default:
                throw FormatError("content before any section: " + line);
        }
    }
    if (seed.base_lines.empty() || seed.generators.empty() || seed.shift_table.empty())
        throw FormatError("seed needs [base], [shifts] and [generators] content");
    return seed;
}

std::string write_parallelism(const FieldCtx& ctx, const std::vector<Spread>& spreads) {
    std::string out;
    for (size_t s = 0; s < spreads.size(); ++s) {
        out += "[spread " + std::to_string(s) + "]\n";
        out += write_lines(ctx, spreads[s]);
    }
    return out;
}

std::vector<Spread> read_parallelism(const FieldCtx& ctx, const std::string& text) {
    std::vector<Spread> out;
    for (const std::string& line : content_lines(text)) {
        if (line[0] == '[') {
            std::string want = "[spread " + std::to_string(out.size()) + "]";
            if (line != want) throw FormatError("expected " + want + ", got " + line);
            out.emplace_back();
            continue;
        }
        if (out.empty()) throw FormatError("line before any [spread k] header");
        out.back().push_back(line_from_text(ctx, line));
    }
    if (out.empty()) throw FormatError("no spreads");
    return out;
}

std::string write_dimacs(const DisjointnessGraph& g) {
    std::string out =
        "p edge " + std::to_string(g.vertex_count) + " " + std::to_string(g.edge_count) + "\n";
    for (int64_t i = 0; i < g.vertex_count; ++i) {
        for (int64_t j = i + 1; j < g.vertex_count; ++j) {
            if (g.edge(i, j))
                out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
        }
    }
    return out;
}

DisjointnessGraph read_dimacs(const std::string& text) {
    DisjointnessGraph g;
    int64_t claimed_edges = -1;
    for (const std::string& line : content_lines(text)) {
        std::vector<std::string> toks = split_ws(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (toks.size() != 4 || toks[1] != "edge" || claimed_edges >= 0)
                throw FormatError("bad problem line: " + line);
            g.vertex_count = parse_int(toks[2]);
            claimed_edges = parse_int(toks[3]);
            if (g.vertex_count < 0 || claimed_edges < 0)
                throw FormatError("bad problem line: " + line);
            g.words = static_cast<size_t>((g.vertex_count + 63) / 64);
            g.adj.assign(static_cast<size_t>(g.vertex_count) * g.words, 0);
            continue;
        }
        if (toks[0] == "e") {
            if (claimed_edges < 0) throw FormatError("edge before problem line");
            if (toks.size() != 3) throw FormatError("bad edge line: " + line);
            int64_t i = parse_int(toks[1]) - 1, j = parse_int(toks[2]) - 1;
            if (i < 0 || j < 0 || i >= g.vertex_count || j >= g.vertex_count || i == j)
                throw FormatError("edge endpoints out of range: " + line);
            if (!g.edge(i, j)) ++g.edge_count;
            g.adj[static_cast<size_t>(i) * g.words + (static_cast<size_t>(j) >> 6)] |=
                uint64_t{1} << (j & 63);
            g.adj[static_cast<size_t>(j) * g.words + (static_cast<size_t>(i) >> 6)] |=
                uint64_t{1} << (i & 63);
            continue;
        }
        throw FormatError("bad dimacs line: " + line);
    }
    if (claimed_edges < 0) throw FormatError("missing problem line");
    if (g.edge_count != claimed_edges)
        throw FormatError("edge count mismatch: header says " + std::to_string(claimed_edges) +
                          ", found " + std::to_string(g.edge_count));
    return g;
}

std::string write_sidecar(const VertexSet& vs) {
    std::string out = "mode: ";
    out += vs.mode == VertexMode::CosetGroups ? "coset-groups" : "complete-delta";
    out += "\nmask-bits: " + std::to_string(vs.mask_bits) + "\n";
    for (size_t v = 0; v < vs.size(); ++v) {
        out += std::to_string(v) + ":";
        if (vs.mode == VertexMode::CosetGroups) {
            for (int32_t gr : vs.subsets[v]) out += ' ' + std::to_string(gr);
        } else {
            for (int32_t e : vs.reps[v].exps) out += ' ' + std::to_string(e);
        }
        out += " / rep:";
        for (int32_t e : vs.reps[v].exps) out += ' ' + std::to_string(e);
        out += " / mult: " + std::to_string(vs.multiplicity[v]) + "\n";
    }
    return out;
}

VertexSet read_sidecar(const FieldCtx& ctx, const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.size() < 2) throw FormatError("sidecar needs mode and mask-bits headers");
    VertexSet vs;
    if (lines[0] == "mode: coset-groups")
        vs.mode = VertexMode::CosetGroups;
    else if (lines[0] == "mode: complete-delta")
        vs.mode = VertexMode::CompleteDelta;
    else
        throw FormatError("bad mode header: " + lines[0]);
    if (lines[1].rfind("mask-bits: ", 0) != 0) throw FormatError("bad mask-bits header: " + lines[1]);
    vs.mask_bits = parse_int(lines[1].substr(11));
    if (vs.mask_bits <= 0) throw FormatError("bad mask width");
    if (vs.mode == VertexMode::CompleteDelta && vs.mask_bits != ctx.q_minus_1())
        throw FormatError("difference masks sized for a different field");
    vs.words = static_cast<size_t>((vs.mask_bits + 63) / 64);
    for (size_t k = 2; k < lines.size(); ++k) {
        std::vector<std::string> toks = split_ws(lines[k]);
        // id: g1 .. g7 / rep: i1 .. i7 / mult: c
        if (toks.size() != 20 || toks[8] != "/" || toks[9] != "rep:" || toks[17] != "/" ||
            toks[18] != "mult:")
            throw FormatError("bad vertex line: " + lines[k]);
        std::string id = toks[0];
        if (id.empty() || id.back() != ':') throw FormatError("bad vertex id: " + lines[k]);
        if (parse_int(id.substr(0, id.size() - 1)) != static_cast<int64_t>(k - 2))
            throw FormatError("vertex ids must be sequential: " + lines[k]);
        Subspace3 rep;
        for (int i = 0; i < 7; ++i) {
            int64_t e = parse_int(toks[static_cast<size_t>(10 + i)]);
            if (e < 0 || e >= ctx.q_minus_1()) throw FormatError("rep exponent out of range: " + lines[k]);
            rep.exps[static_cast<size_t>(i)] = static_cast<int32_t>(e);
        }
        vs.reps.push_back(rep);
        int64_t mult = parse_int(toks[19]);
        if (mult <= 0) throw FormatError("bad multiplicity: " + lines[k]);
        vs.multiplicity.push_back(static_cast<int32_t>(mult));
        size_t row = vs.reps.size() - 1;
        vs.masks.resize(vs.reps.size() * vs.words, 0);
        if (vs.mode == VertexMode::CosetGroups) {
            std::array<int32_t, 7> subset;
            for (int i = 0; i < 7; ++i) {
                int64_t gid = parse_int(toks[static_cast<size_t>(1 + i)]);
                if (gid < 0 || gid >= vs.mask_bits)
                    throw FormatError("group id out of range: " + lines[k]);
                subset[static_cast<size_t>(i)] = static_cast<int32_t>(gid);
                vs.masks[row * vs.words + (static_cast<size_t>(gid) >> 6)] |= uint64_t{1}
                                                                              << (gid & 63);
            }
            vs.subsets.push_back(subset);
        } else {
            for (int32_t d : diff_set(ctx, rep).diffs)
                vs.masks[row * vs.words + (static_cast<size_t>(d) >> 6)] |= uint64_t{1} << (d & 63);
        }
    }
    return vs;
}

std::string write_clique(const std::vector<int32_t>& ids) {
    std::string out;
    for (int32_t v : ids) out += std::to_string(v) + "\n";
    return out;
}

std::vector<int32_t> read_clique(const std::string& text) {
    std::vector<int32_t> out;
    for (const std::string& line : content_lines(text)) {
        int64_t v = parse_int(line);
        if (v < 0) throw FormatError("negative vertex id: " + line);
        out.push_back(static_cast<int32_t>(v));
    }
    return out;
}

std::string write_code(const SubspaceCode& code) {
    std::string out;
    if (!code.source_clique.empty()) {
        out = "clique:";
        for (int32_t v : code.source_clique) out += ' ' + std::to_string(v);
        out += '\n';
    }
    for (const Subspace3& x : code.members) {
        for (int i = 0; i < 7; ++i) {
            if (i) out += ' ';
            out += std::to_string(x.exps[static_cast<size_t>(i)]);
        }
        out += '\n';
    }
    return out;
}

SubspaceCode read_code(const std::string& text) {
    SubspaceCode code;
    bool first = true;
    for (const std::string& line : content_lines(text)) {
        if (first && line.rfind("clique:", 0) == 0) {
            for (const std::string& tok : split_ws(line.substr(7)))
                code.source_clique.push_back(static_cast<int32_t>(parse_int(tok)));
            first = false;
            continue;
        }
        first = false;
        std::vector<std::string> toks = split_ws(line);
        if (toks.size() != 7) throw FormatError("code member needs 7 exponents: " + line);
        Subspace3 x;
        for (int i = 0; i < 7; ++i) {
            x.exps[static_cast<size_t>(i)] = static_cast<int32_t>(parse_int(toks[static_cast<size_t>(i)]));
            if (i > 0 && x.exps[static_cast<size_t>(i)] <= x.exps[static_cast<size_t>(i - 1)])
                throw FormatError("member exponents must ascend: " + line);
        }
        if (!code.members.empty() && !(code.members.back() < x))
            throw FormatError("members must be sorted: " + line);
        code.members.push_back(x);
    }
    return code;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw FormatError("read failed on " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot create " + path);
    out << content;
    out.flush();
    if (!out.good()) throw FormatError("write failed on " + path);
}

}  // namespace pgcodes
