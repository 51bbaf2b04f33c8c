#include "pgcodes/spreads.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iterator>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace pgcodes {

namespace {

bool prime(int v) {
    if (v < 2) return false;
    for (int d = 2; static_cast<int64_t>(d) * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

int64_t ipow_checked(int64_t base, int exp) {
    int64_t acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > (int64_t{1} << 60) / base) throw Error("parameters too large");
        acc *= base;
    }
    return acc;
}

}  // namespace

ConditionReport check_conditions(int p, int n) {
    if (!prime(p) || !prime(n)) throw NotPrimeError("check_conditions: p and n must be prime");
    ConditionReport rep;
    rep.n_odd = (n % 2 == 1);
    int64_t num = ipow_checked(p, n - 1) - 1;
    int64_t den = static_cast<int64_t>(p) * p - 1;
    rep.divisibility = (num % den == 0) && ((num / den) % n == 0);
    int64_t m = (ipow_checked(p, n) - 1) / (p - 1);
    rep.shift_coprime = std::gcd(static_cast<int64_t>(p) - 1, m) == 1;
    return rep;
}

int64_t spread_size(const FieldCtx& ctx) {
    int64_t pts = point_count(ctx);
    if (pts % (ctx.p() + 1) != 0) throw Error("p + 1 does not divide the point count; no spreads exist");
    return pts / (ctx.p() + 1);
}

int64_t line_count_total(const FieldCtx& ctx) {
    // N * m / (p + 1) with N = points; exact because it is the Gaussian [n+1, 2]_p
    return point_count(ctx) * ctx.m() / (ctx.p() + 1);
}

Spread expand_seed(const FieldCtx& ctx, const SpreadSeed& seed) {
    int p = ctx.p();
    int n = ctx.n();
    int64_t pn1 = ipow_checked(p, n - 1);
    int64_t den2 = static_cast<int64_t>(p - 1) * n;
    int64_t den3 = (static_cast<int64_t>(p) * p - 1) * n;
    if ((pn1 - 1) % den2 != 0 || (pn1 - 1) % den3 != 0)
        throw NotASpreadError("seed cardinalities are not integral for these parameters");
    int64_t nb = (pn1 - 1) / den2;
    int64_t ng = (pn1 - 1) / den3;
    if (std::ssize(seed.base_lines) != nb)
        throw NotASpreadError("seed carries " + std::to_string(seed.base_lines.size()) +
                              " base lines, construction needs " + std::to_string(nb));
    if (std::ssize(seed.generators) != ng)
        throw NotASpreadError("seed carries " + std::to_string(seed.generators.size()) +
                              " generators, construction needs " + std::to_string(ng));
    if (std::ssize(seed.shift_table) != nb) throw NotASpreadError("shift table needs one row per base line");

    Spread out;
    out.reserve(static_cast<size_t>(spread_size(ctx)));
    out.push_back(type1_line(ctx));
    for (int64_t k = 0; k < nb; ++k) {
        const GeomLine& base = seed.base_lines[static_cast<size_t>(k)];
        try {
            if (classify_line(ctx, base) != LineType::Type2)
                throw NotASpreadError("base line " + std::to_string(k) + " is not type 2");
        } catch (const NotALineError&) {
            throw NotASpreadError("base line " + std::to_string(k) + " fails the line check");
        }
        const auto& row = seed.shift_table[static_cast<size_t>(k)];
        if (std::ssize(row) != p - 1)
            throw NotASpreadError("shift table row " + std::to_string(k) + " needs p - 1 entries");
        for (int r = 0; r < p - 1; ++r) {
            int64_t s = row[static_cast<size_t>(r)];
            int64_t res = ((s % (p - 1)) + (p - 1)) % (p - 1);
            if (res != (r + 1) % (p - 1))
                throw NotASpreadError("shift " + std::to_string(s) + " in row " + std::to_string(k) +
                                      " lands outside residue class " + std::to_string((r + 1) % (p - 1)));
            GeomLine shifted = map_line(ctx, MapKind::Shift, s, base);
            for (int l = 0; l < n; ++l) out.push_back(map_line(ctx, MapKind::Frobenius, l, shifted));
        }
    }
    for (int64_t g = 0; g < ng; ++g) {
        const GeomLine& gen = seed.generators[static_cast<size_t>(g)];
        try {
            if (classify_line(ctx, gen) != LineType::Type3)
                throw NotASpreadError("generator " + std::to_string(g) + " is not type 3");
        } catch (const NotALineError&) {
            throw NotASpreadError("generator " + std::to_string(g) + " fails the line check");
        }
        for (int l = 0; l < n; ++l) out.push_back(map_line(ctx, MapKind::Frobenius, l, gen));
    }
    // construction cardinalities: 1 type-1 line, p^(n-1) - 1 type-2, (p^(n-1) - 1)/(p^2 - 1) type-3
    if (std::ssize(out) != 1 + (pn1 - 1) + (pn1 - 1) / (static_cast<int64_t>(p) * p - 1))
        throw NotASpreadError("expansion cardinalities are inconsistent");
    SpreadCheck chk = verify_spread(ctx, out);
    if (!chk.ok) throw NotASpreadError(chk.first_violation);
    return out;
}

Spread next_spread(const FieldCtx& ctx, const Spread& spread) {
    Spread out;
    out.reserve(spread.size());
    for (const GeomLine& ln : spread) out.push_back(map_line(ctx, MapKind::Shift, ctx.p() - 1, ln));
    SpreadCheck chk = verify_spread(ctx, out);
    if (!chk.ok) throw NotASpreadError(chk.first_violation);
    return out;
}

std::vector<Spread> build_parallelism(const FieldCtx& ctx, const SpreadSeed& seed) {
    ConditionReport cond = check_conditions(ctx.p(), ctx.n());
    if (!cond.ok()) {
        std::string which = !cond.n_odd          ? "n must be odd"
                            : !cond.divisibility ? "n must divide (p^(n-1) - 1)/(p^2 - 1)"
                                                 : "p - 1 must be coprime to (p^n - 1)/(p - 1)";
        throw NotAParallelismError("construction conditions fail: " + which);
    }
    std::vector<Spread> spreads;
    spreads.reserve(static_cast<size_t>(ctx.m()));
    spreads.push_back(expand_seed(ctx, seed));
    for (int64_t i = 1; i < ctx.m(); ++i) spreads.push_back(next_spread(ctx, spreads.back()));
    ParallelismCheck chk = verify_parallelism(ctx, spreads);
    if (!chk.ok) throw NotAParallelismError(chk.first_violation);
    return spreads;
}

SpreadCheck verify_spread(const FieldCtx& ctx, const Spread& lines) {
    SpreadCheck rep;
    rep.line_count = std::ssize(lines);
    for (size_t i = 0; i < lines.size(); ++i) {
        if (!is_line(ctx, lines[i])) {
            rep.first_violation = "line " + std::to_string(i) + " fails the closure check";
            return rep;
        }
    }
    int64_t expect = spread_size(ctx);
    if (rep.line_count != expect) {
        rep.first_violation =
            "expected " + std::to_string(expect) + " lines, found " + std::to_string(rep.line_count);
        return rep;
    }
    std::vector<std::pair<uint64_t, int32_t>> enc;
    enc.reserve(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) enc.emplace_back(lines[i].encode(), static_cast<int32_t>(i));
    std::sort(enc.begin(), enc.end());
    for (size_t i = 1; i < enc.size(); ++i) {
        if (enc[i].first == enc[i - 1].first) {
            rep.first_violation = "lines " + std::to_string(enc[i - 1].second) + " and " +
                                  std::to_string(enc[i].second) + " are identical";
            return rep;
        }
    }
    std::vector<int32_t> owner(static_cast<size_t>(point_count(ctx)), -1);
    for (size_t i = 0; i < lines.size(); ++i) {
        for (int32_t key : lines[i]) {
            int32_t& o = owner[static_cast<size_t>(key)];
            if (o >= 0) {
                rep.first_violation = "lines " + std::to_string(o) + " and " + std::to_string(i) +
                                      " collide at point " + std::to_string(key);
                return rep;
            }
            o = static_cast<int32_t>(i);
        }
    }
    for (size_t k = 0; k < owner.size(); ++k) {
        if (owner[k] < 0) {
            rep.first_violation = "coverage gap at point " + std::to_string(k);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

ParallelismCheck verify_parallelism(const FieldCtx& ctx, const std::vector<Spread>& spreads) {
    ParallelismCheck rep;
    rep.spread_count = std::ssize(spreads);
    for (const Spread& s : spreads) rep.line_count += std::ssize(s);
    if (rep.spread_count != ctx.m()) {
        rep.first_violation = "expected " + std::to_string(ctx.m()) + " spreads, found " +
                              std::to_string(rep.spread_count);
        return rep;
    }
    for (size_t s = 0; s < spreads.size(); ++s) {
        SpreadCheck sc = verify_spread(ctx, spreads[s]);
        if (!sc.ok) {
            rep.first_violation = "spread " + std::to_string(s) + ": " + sc.first_violation;
            return rep;
        }
    }
    std::vector<std::pair<uint64_t, int32_t>> enc;
    enc.reserve(static_cast<size_t>(rep.line_count));
    for (size_t s = 0; s < spreads.size(); ++s) {
        for (const GeomLine& ln : spreads[s]) enc.emplace_back(ln.encode(), static_cast<int32_t>(s));
    }
    std::sort(enc.begin(), enc.end());
    for (size_t i = 1; i < enc.size(); ++i) {
        if (enc[i].first == enc[i - 1].first) {
            rep.first_violation = "line repeated in spreads " + std::to_string(enc[i - 1].second) +
                                  " and " + std::to_string(enc[i].second);
            return rep;
        }
    }
    if (rep.line_count != line_count_total(ctx)) {
        rep.first_violation = "line total " + std::to_string(rep.line_count) + " differs from " +
                              std::to_string(line_count_total(ctx));
        return rep;
    }
    if (point_count(ctx) <= 4096) {
        // small geometry: compare against a fresh full enumeration
        std::vector<GeomLine> all = all_lines(ctx);
        std::vector<uint64_t> want;
        want.reserve(all.size());
        for (const GeomLine& ln : all) want.push_back(ln.encode());
        std::sort(want.begin(), want.end());
        std::vector<uint64_t> got;
        got.reserve(enc.size());
        for (const auto& e : enc) got.push_back(e.first);
        if (got != want) {
            rep.first_violation = "line set differs from the fresh enumeration";
            return rep;
        }
    }
    rep.coverage_ok = true;
    rep.ok = true;
    return rep;
}

namespace {

using Mask = std::vector<uint64_t>;

bool intersects(const Mask& a, const Mask& b) {
    for (size_t w = 0; w < a.size(); ++w) {
        if (a[w] & b[w]) return true;
    }
    return false;
}

void or_into(Mask& a, const Mask& b) {
    for (size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
}

struct SeedSearch {
    const FieldCtx& ctx;
    int p;
    int n;
    size_t words;
    int64_t nb = 0;
    int64_t ng = 0;

    std::vector<GeomLine> type2, type3;
    std::vector<Mask> cmask2, cmask3;  // union of all Frobenius images' points
    std::vector<char> ok2, ok3;        // cohort mask has the full n*(p+1) points
    std::vector<int32_t> orbit2, orbit3;
    std::vector<int32_t> rep2;  // first candidate index of each type-2 orbit
    std::unordered_map<uint64_t, int32_t> id2;

    std::vector<GeomLine> chosen_base;
    std::vector<std::vector<int64_t>> chosen_shifts;
    std::vector<GeomLine> chosen_gens;
    SpreadSeed found;

    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    bool timed_out = false;
    uint64_t nodes = 0;
    int best_depth = 0;

    explicit SeedSearch(const FieldCtx& c) : ctx(c), p(c.p()), n(c.n()) {
        words = static_cast<size_t>((point_count(ctx) + 63) / 64);
    }

    bool tick() {
        ++nodes;
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            timed_out = true;
        return !timed_out;
    }

    Mask cohort_mask(const GeomLine& ln) const {
        Mask msk(words, 0);
        for (int l = 0; l < n; ++l) {
            GeomLine img = map_line(ctx, MapKind::Frobenius, l, ln);
            for (int32_t key : img) msk[static_cast<size_t>(key) >> 6] |= uint64_t{1} << (key & 63);
        }
        return msk;
    }

    static std::vector<int32_t> orbits_of(const FieldCtx& ctx, const std::vector<GeomLine>& lines,
                                          int32_t* count) {
        std::unordered_map<uint64_t, int32_t> id;
        id.reserve(lines.size() * 2);
        for (size_t i = 0; i < lines.size(); ++i) id.emplace(lines[i].encode(), static_cast<int32_t>(i));
        std::vector<int32_t> orb(lines.size(), -1);
        int32_t next = 0;
        std::vector<int32_t> stack;
        for (size_t i = 0; i < lines.size(); ++i) {
            if (orb[i] >= 0) continue;
            orb[i] = next;
            stack.assign(1, static_cast<int32_t>(i));
            while (!stack.empty()) {
                int32_t v = stack.back();
                stack.pop_back();
                const GeomLine& ln = lines[static_cast<size_t>(v)];
                for (const GeomLine& img : {map_line(ctx, MapKind::Shift, 1, ln),
                                            map_line(ctx, MapKind::Frobenius, 1, ln)}) {
                    auto it = id.find(img.encode());
                    if (it == id.end()) throw Error("orbit walk left the candidate class");
                    if (orb[static_cast<size_t>(it->second)] < 0) {
                        orb[static_cast<size_t>(it->second)] = next;
                        stack.push_back(it->second);
                    }
                }
            }
            ++next;
        }
        *count = next;
        return orb;
    }

    bool leaf() {
        SpreadSeed seed{chosen_base, chosen_shifts, chosen_gens};
        try {
            build_parallelism(ctx, seed);
        } catch (const Error&) {
            return false;
        }
        found = std::move(seed);
        return true;
    }

    // generator slots are interchangeable, so slot k draws from orbit k only;
    // unlike bases, every orbit member is a distinct candidate (no shift
    // freedom absorbs it)
    bool dfs_gen(int64_t slot, const Mask& acc) {
        if (slot == ng) return leaf();
        for (int32_t g = 0; g < std::ssize(type3); ++g) {
            if (!tick()) return false;
            if (orbit3[static_cast<size_t>(g)] != slot) continue;
            if (!ok3[static_cast<size_t>(g)]) continue;
            if (intersects(cmask3[static_cast<size_t>(g)], acc)) continue;
            Mask next_acc = acc;
            or_into(next_acc, cmask3[static_cast<size_t>(g)]);
            chosen_gens.push_back(type3[static_cast<size_t>(g)]);
            best_depth = std::max(best_depth, static_cast<int>(nb + slot + 1));
            if (dfs_gen(slot + 1, next_acc)) return true;
            chosen_gens.pop_back();
            if (timed_out) return false;
        }
        return false;
    }

    // choose the r-th shift of the base candidate at orbit o, then recurse
    // over residues; a full row advances to the next slot and orbit
    bool assign_shift(int64_t slot, int32_t o, int r, const Mask& acc, std::vector<int64_t>& row) {
        int32_t b = rep2[static_cast<size_t>(o)];
        if (r == p - 1) {
            chosen_base.push_back(type2[static_cast<size_t>(b)]);
            chosen_shifts.push_back(row);
            best_depth = std::max(best_depth, static_cast<int>(slot + 1));
            bool hit = dfs_base(slot + 1, o + 1, acc);
            chosen_shifts.pop_back();
            chosen_base.pop_back();
            return hit;
        }
        int64_t q1 = ctx.q_minus_1();
        for (int64_t s = (r + 1) % (p - 1); s < q1; s += p - 1) {
            if (!tick()) return false;
            GeomLine img = map_line(ctx, MapKind::Shift, s, type2[static_cast<size_t>(b)]);
            int32_t iid = id2.at(img.encode());
            if (!ok2[static_cast<size_t>(iid)]) continue;
            if (intersects(cmask2[static_cast<size_t>(iid)], acc)) continue;
            Mask next_acc = acc;
            or_into(next_acc, cmask2[static_cast<size_t>(iid)]);
            row[static_cast<size_t>(r)] = s;
            if (assign_shift(slot, o, r + 1, next_acc, row)) return true;
            if (timed_out) return false;
        }
        return false;
    }

    // Base slots are interchangeable and must use pairwise distinct orbits,
    // so slots take orbits in ascending order. One representative stands in
    // for the whole orbit: cohort(Phi_j Ups_l b, s) = cohort(b, (s + j) p^-l),
    // so the shift freedom absorbs the rest of the orbit without losing any
    // seed (a slot's shifts relabel across residue classes together).
    bool dfs_base(int64_t slot, int32_t orbit_start, const Mask& acc) {
        if (slot == nb) return dfs_gen(0, acc);
        for (int32_t o = orbit_start; o <= std::ssize(rep2) - (nb - slot); ++o) {
            if (timed_out) return false;
            std::vector<int64_t> row(static_cast<size_t>(p - 1), 0);
            if (assign_shift(slot, o, 0, acc, row)) return true;
        }
        return false;
    }

    SeedSearchResult run(double budget_seconds) {
        SeedSearchResult res;
        int64_t pn1 = ipow_checked(p, n - 1);
        nb = (pn1 - 1) / (static_cast<int64_t>(p - 1) * n);
        ng = (pn1 - 1) / ((static_cast<int64_t>(p) * p - 1) * n);
        if (budget_seconds > 0) {
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::microseconds(static_cast<int64_t>(budget_seconds * 1e6));
            has_deadline = true;
        }
        for (const GeomLine& ln : all_lines(ctx)) {
            switch (classify_line(ctx, ln)) {
                case LineType::Type2: type2.push_back(ln); break;
                case LineType::Type3: type3.push_back(ln); break;
                default: break;
            }
        }
        id2.reserve(type2.size() * 2);
        for (size_t i = 0; i < type2.size(); ++i) id2.emplace(type2[i].encode(), static_cast<int32_t>(i));
        int32_t norb2 = 0, norb3 = 0;
        orbit2 = orbits_of(ctx, type2, &norb2);
        orbit3 = orbits_of(ctx, type3, &norb3);
        if (norb2 < nb || norb3 < ng) return res;  // Exhausted: not enough orbits
        rep2.assign(static_cast<size_t>(norb2), -1);
        for (size_t i = 0; i < type2.size(); ++i) {
            if (rep2[static_cast<size_t>(orbit2[i])] < 0)
                rep2[static_cast<size_t>(orbit2[i])] = static_cast<int32_t>(i);
        }
        // a usable cohort tiles n*(p+1) distinct points; fewer means two
        // Frobenius images of the line overlap and the spread can't close
        int64_t full = static_cast<int64_t>(n) * (p + 1);
        auto bits = [](const Mask& msk) {
            int64_t c = 0;
            for (uint64_t w : msk) c += std::popcount(w);
            return c;
        };
        cmask2.reserve(type2.size());
        for (const GeomLine& ln : type2) cmask2.push_back(cohort_mask(ln));
        cmask3.reserve(type3.size());
        for (const GeomLine& ln : type3) cmask3.push_back(cohort_mask(ln));
        ok2.resize(type2.size());
        for (size_t i = 0; i < type2.size(); ++i) ok2[i] = bits(cmask2[i]) == full;
        ok3.resize(type3.size());
        for (size_t i = 0; i < type3.size(); ++i) ok3[i] = bits(cmask3[i]) == full;

        Mask acc(words, 0);
        for (int32_t key : type1_line(ctx)) acc[static_cast<size_t>(key) >> 6] |= uint64_t{1} << (key & 63);
        bool hit = dfs_base(0, 0, acc);
        res.nodes = nodes;
        res.best_depth = best_depth;
        if (hit) {
            res.status = SearchStatus::Found;
            res.seed = std::move(found);
        } else if (timed_out) {
            res.status = SearchStatus::TimedOut;
        } else {
            res.status = SearchStatus::Exhausted;
        }
        return res;
    }
};

}  // namespace

SeedSearchResult search_seed(const FieldCtx& ctx, double budget_seconds) {
    ConditionReport cond = check_conditions(ctx.p(), ctx.n());
    if (!cond.ok()) return SeedSearchResult{};  // refuses to start: Exhausted at depth 0
    SeedSearch st(ctx);
    return st.run(budget_seconds);
}

}  // namespace pgcodes
