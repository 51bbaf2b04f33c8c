#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgcodes/cyclo.hpp"
#include "pgcodes/errors.hpp"
#include "pgcodes/gfield.hpp"

namespace pgcodes {

// A 3-dimensional subspace of F_2^n as the sorted exponents of its seven
// nonzero elements. Exponent 0 means alpha^0 = 1, not the zero vector.
struct Subspace3 {
    std::array<int32_t, 7> exps{};

    friend bool operator==(const Subspace3&, const Subspace3&) = default;
    friend auto operator<=>(const Subspace3& a, const Subspace3& b) { return a.exps <=> b.exps; }
};

// closes {alpha^e1, alpha^e2, alpha^e3} under addition; nullopt when the
// triple is dependent (dimension < 3)
std::optional<Subspace3> span3(const FieldCtx& ctx, int32_t e1, int32_t e2, int32_t e3);

bool is_subspace3(const FieldCtx& ctx, const Subspace3& x);

Subspace3 shift_subspace(const FieldCtx& ctx, int64_t j, const Subspace3& x);
Subspace3 frobenius_subspace(const FieldCtx& ctx, int l, const Subspace3& x);

// lexicographically smallest exponent tuple over all shift/Frobenius images,
// each image anchored so that some element has exponent 0
Subspace3 canonical_rep(const FieldCtx& ctx, const Subspace3& x);

struct DiffSet {
    std::vector<int32_t> diffs;       // sorted, at most 42
    std::vector<int32_t> coset_reps;  // sorted representatives C(d), at most 42
};

DiffSet diff_set(const FieldCtx& ctx, const Subspace3& x);
bool is_complete(const FieldCtx& ctx, const Subspace3& x);
bool is_coset_complete(const FieldCtx& ctx, const Subspace3& x);

enum class VertexMode { CosetGroups, CompleteDelta };

// Vertices of the disjointness graph. In CosetGroups mode a vertex is a
// 7-subset of group indices realized by some coset-complete subspace; in
// CompleteDelta mode it is a distinct 42-element difference set of a
// complete subspace. masks holds one conflict bitset per vertex.
struct VertexSet {
    VertexMode mode = VertexMode::CosetGroups;
    int64_t mask_bits = 0;  // group count, or q - 1 difference slots
    size_t words = 0;
    std::vector<uint64_t> masks;                  // size() * words
    std::vector<std::array<int32_t, 7>> subsets;  // CosetGroups mode only
    std::vector<Subspace3> reps;
    std::vector<int32_t> multiplicity;  // distinct realizations per vertex

    size_t size() const { return reps.size(); }
    const uint64_t* mask(size_t v) const { return masks.data() + v * words; }
};

// Orbit-canonical enumeration of coset-complete subspaces, one vertex per
// realized 7-subset of group indices.
VertexSet enumerate_vertices(const FieldCtx& ctx, const GroupTable& groups);

// Shift-class enumeration of complete subspaces, one vertex per distinct
// difference set. Kept to small fields: the masks span q - 1 bits.
VertexSet enumerate_complete_vertices(const FieldCtx& ctx);

struct DisjointnessGraph {
    int64_t vertex_count = 0;
    size_t words = 0;  // adjacency row width
    std::vector<uint64_t> adj;
    int64_t edge_count = 0;

    bool edge(int64_t i, int64_t j) const {
        return (adj[static_cast<size_t>(i) * words + (static_cast<size_t>(j) >> 6)] >>
                (static_cast<size_t>(j) & 63)) & 1;
    }
};

DisjointnessGraph build_graph(const VertexSet& vs, int workers = 1);

struct CliqueResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<int32_t> vertices;  // sorted vertex ids of the best clique
    int best_size = 0;
    uint64_t nodes = 0;
    std::optional<uint64_t> rng_seed;  // set when the randomized mode ran
};

// Deterministic branch and bound (degeneracy order, greedy-coloring bound,
// bitset candidate sets) preceded by a greedy warm start. Stops at the first
// clique reaching target_size; with rng_seed set, runs seeded random-restart
// greedy instead and never proves exhaustion.
CliqueResult find_clique(const DisjointnessGraph& g, int target_size, double budget_seconds,
                         std::optional<uint64_t> rng_seed = std::nullopt);

struct SubspaceCode {
    std::vector<Subspace3> members;  // sorted
    std::vector<int32_t> source_clique;
};

// full shift/Frobenius orbit of every clique vertex representative; each
// orbit must reach n * (q - 1) distinct members
SubspaceCode expand_code(const FieldCtx& ctx, const std::vector<int32_t>& clique, const VertexSet& vs);

struct CodeReport {
    int64_t members = 0;
    int64_t two_subspaces = 0;           // 7 * members, with repetitions
    int64_t two_subspaces_distinct = 0;
    bool min_distance_ok = false;        // no 2-subspace repeats
    int64_t two_total = 0;               // Gaussian [n, 2]_2
    int64_t covered = 0;
    int64_t uncovered = 0;
    bool closed_ok = false;              // members closed under shift and Frobenius
    bool steiner_complete = false;       // covered == two_total with multiplicity one
};

CodeReport verify_code(const FieldCtx& ctx, const SubspaceCode& code, int workers = 1);

}  // namespace pgcodes
