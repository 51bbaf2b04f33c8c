#include "pgcodes/cyclo.hpp"

#include <algorithm>
#include <string>

namespace pgcodes {

std::vector<int32_t> coset(const FieldCtx& ctx, int64_t s) {
    const int64_t M = ctx.q_minus_1();
    int32_t s0 = ctx.reduce(s);
    std::vector<int32_t> orb;
    int64_t t = s0;
    do {
        orb.push_back(static_cast<int32_t>(t));
        t = (t * ctx.p()) % M;
    } while (t != s0);
    std::sort(orb.begin(), orb.end());
    return orb;
}

int32_t coset_rep(const FieldCtx& ctx, int64_t s) { return coset(ctx, s).front(); }

CosetTable build_coset_table(const FieldCtx& ctx) {
    const int64_t M = ctx.q_minus_1();
    CosetTable ct;
    ct.rep_of.assign(static_cast<size_t>(M), -1);
    for (int64_t s = 0; s < M; ++s) {
        if (ct.rep_of[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int32_t> orb;
        int64_t t = s;
        do {
            orb.push_back(static_cast<int32_t>(t));
            ct.rep_of[static_cast<size_t>(t)] = static_cast<int32_t>(s);  // s is minimal: scanned ascending
            t = (t * ctx.p()) % M;
        } while (t != s);
        std::sort(orb.begin(), orb.end());
        if (orb.size() == static_cast<size_t>(ctx.n())) ++ct.size_n_count;
        ct.cosets.push_back(std::move(orb));
    }
    return ct;
}

GroupTable build_group_table(const FieldCtx& ctx, const CosetTable& ct) {
    const int64_t M = ctx.q_minus_1();
    if (ctx.p() != 2 || ctx.n() % 6 != 1)
        throw GroupingInconsistentError(
            "coset grouping needs p = 2 and prime n = 1 (mod 6); got p = " + std::to_string(ctx.p()) +
            ", n = " + std::to_string(ctx.n()));

    GroupTable gt;
    gt.group_of.assign(static_cast<size_t>(M), -1);

    auto walk = [&](int32_t d) {
        int64_t zd = ctx.zech(d);  // d != 0, so never the sentinel
        std::array<int32_t, 6> w = {
            ct.rep_of[static_cast<size_t>(d)],
            ct.rep_of[static_cast<size_t>(ctx.reduce(-d))],
            ct.rep_of[static_cast<size_t>(zd)],
            ct.rep_of[static_cast<size_t>(ctx.reduce(-zd))],
            ct.rep_of[static_cast<size_t>(ctx.reduce(zd - d))],
            ct.rep_of[static_cast<size_t>(ctx.reduce(d - zd))]};
        std::sort(w.begin(), w.end());
        return w;
    };

    for (const auto& cs : ct.cosets) {
        if (cs.size() != static_cast<size_t>(ctx.n())) continue;
        int32_t d = cs.front();
        if (gt.group_of[static_cast<size_t>(d)] >= 0) continue;
        std::array<int32_t, 6> grp = walk(d);
        if (std::adjacent_find(grp.begin(), grp.end()) != grp.end())
            throw GroupingInconsistentError("six difference cosets of d = " + std::to_string(d) + " are not distinct");
        int32_t gid = static_cast<int32_t>(gt.groups.size());
        for (int32_t r : grp) {
            if (gt.group_of[static_cast<size_t>(r)] >= 0)
                throw GroupingInconsistentError("coset " + std::to_string(r) + " claimed by two groups");
        }
        for (int32_t r : grp)
            for (int32_t e : coset(ctx, r)) gt.group_of[static_cast<size_t>(e)] = gid;
        gt.groups.push_back(grp);
    }
    gt.group_count = static_cast<int64_t>(gt.groups.size());

    if (gt.group_count * 6 != ct.size_n_count)
        throw GroupingInconsistentError("groups do not partition the size-n cosets");
    // walks started from any member must reproduce the same six reps
    for (size_t gid = 0; gid < gt.groups.size(); ++gid)
        for (int32_t r : gt.groups[gid])
            if (walk(r) != gt.groups[gid])
                throw GroupingInconsistentError("walk from " + std::to_string(r) + " disagrees with its group");
    return gt;
}

}  // namespace pgcodes
