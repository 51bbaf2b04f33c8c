#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pgcodes/gfield.hpp"

namespace pgcodes {

struct CosetTable {
    std::vector<int32_t> rep_of;               // e -> C(e), dense over Z_{q-1}
    std::vector<std::vector<int32_t>> cosets;  // sorted members, ascending reps
    int64_t size_n_count = 0;                  // = (p^n - p)/n
};

// orbit of s under multiplication by p mod q-1, sorted
std::vector<int32_t> coset(const FieldCtx& ctx, int64_t s);
int32_t coset_rep(const FieldCtx& ctx, int64_t s);
CosetTable build_coset_table(const FieldCtx& ctx);

// Partition of the size-n cosets into groups of six: the group of d holds the
// representatives of {d, -d, z(d), -z(d), z(d)-d, d-z(d)}, i.e. the coset
// differences contributed by one 2-dimensional subspace. Only defined for
// p = 2 and prime n = 1 (mod 6); anything else degenerates and is an error.
struct GroupTable {
    std::vector<std::array<int32_t, 6>> groups;  // sorted reps, ascending by smallest member
    std::vector<int32_t> group_of;               // e -> group id, dense; -1 for e = 0
    int64_t group_count = 0;
};

GroupTable build_group_table(const FieldCtx& ctx, const CosetTable& ct);

}  // namespace pgcodes
