#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgcodes/errors.hpp"
#include "pgcodes/gfield.hpp"
#include "pgcodes/pgeom.hpp"

namespace pgcodes {

// the three Lemma conditions for the spread construction
struct ConditionReport {
    bool n_odd = false;
    bool divisibility = false;   // n | (p^(n-1) - 1)/(p^2 - 1)
    bool shift_coprime = false;  // gcd(p - 1, m) = 1
    bool ok() const { return n_odd && divisibility && shift_coprime; }
};

ConditionReport check_conditions(int p, int n);

// Seed data for one spread. The seed lines themselves are not members of
// the spread; only their shifted/Frobenius images are.
struct SpreadSeed {
    std::vector<GeomLine> base_lines;                // type-2 lines, one P0 point each
    std::vector<std::vector<int64_t>> shift_table;   // row k: p-1 shifts, entry r in residue r+1 mod p-1
    std::vector<GeomLine> generators;                // type-3 lines, wholly inside P0
};

using Spread = std::vector<GeomLine>;

struct SpreadCheck {
    bool ok = false;
    int64_t line_count = 0;
    std::string first_violation;
};

struct ParallelismCheck {
    bool ok = false;
    int64_t spread_count = 0;
    int64_t line_count = 0;
    bool coverage_ok = false;
    std::string first_violation;
};

int64_t spread_size(const FieldCtx& ctx);       // p^(n-1) + p^(n-3) + ... + p^2 + 1
int64_t line_count_total(const FieldCtx& ctx);  // Gaussian binomial [n+1, 2]_p

// {type1} + base lines under their p-1 shifts and all Frobenius powers +
// generators under all Frobenius powers; verified from scratch before return
Spread expand_seed(const FieldCtx& ctx, const SpreadSeed& seed);

// pointwise Phi_{p-1} image, re-verified
Spread next_spread(const FieldCtx& ctx, const Spread& spread);

// expand_seed followed by m - 1 propagation steps; verifies the line partition
std::vector<Spread> build_parallelism(const FieldCtx& ctx, const SpreadSeed& seed);

// verification always recomputes; never trusts construction bookkeeping
SpreadCheck verify_spread(const FieldCtx& ctx, const Spread& lines);
ParallelismCheck verify_parallelism(const FieldCtx& ctx, const std::vector<Spread>& spreads);

struct SeedSearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    SpreadSeed seed;     // populated when status == Found
    int best_depth = 0;  // deepest completed slot count (base lines, then generators)
    uint64_t nodes = 0;
};

// Backtracking over base lines (ascending P0 point, then lexicographic P1
// points), shift amounts ascending within residue class, then generators.
// A partial assignment is pruned on any orbit or point collision inside the
// first spread; a full assignment is accepted only if build_parallelism
// succeeds.
SeedSearchResult search_seed(const FieldCtx& ctx, double budget_seconds);

}  // namespace pgcodes
