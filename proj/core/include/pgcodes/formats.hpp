#pragma once

#include <string>
#include <vector>

#include "pgcodes/pgeom.hpp"
#include "pgcodes/spreads.hpp"
#include "pgcodes/steiner.hpp"

namespace pgcodes {

// All formats are line-oriented text. Writers emit canonical form (sorted,
// single spaces, trailing newline); readers accept blank lines and #
// comments and throw FormatError on anything else they cannot use.

std::string line_to_text(const FieldCtx& ctx, const GeomLine& ln);
GeomLine line_from_text(const FieldCtx& ctx, const std::string& text);

std::string write_lines(const FieldCtx& ctx, const std::vector<GeomLine>& lines);
std::vector<GeomLine> read_lines(const FieldCtx& ctx, const std::string& text);

std::string write_seed(const FieldCtx& ctx, const SpreadSeed& seed);
SpreadSeed read_seed(const FieldCtx& ctx, const std::string& text);

std::string write_parallelism(const FieldCtx& ctx, const std::vector<Spread>& spreads);
std::vector<Spread> read_parallelism(const FieldCtx& ctx, const std::string& text);

std::string write_dimacs(const DisjointnessGraph& g);
DisjointnessGraph read_dimacs(const std::string& text);

// vertex map: `id: g1 .. g7 / rep: i1 .. i7 / mult: k`; complete mode labels
// with the rep exponents and the reader rebuilds the difference masks
std::string write_sidecar(const VertexSet& vs);
VertexSet read_sidecar(const FieldCtx& ctx, const std::string& text);

std::string write_clique(const std::vector<int32_t>& ids);
std::vector<int32_t> read_clique(const std::string& text);

std::string write_code(const SubspaceCode& code);
SubspaceCode read_code(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pgcodes
