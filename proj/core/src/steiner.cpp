#include "pgcodes/steiner.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <utility>

#include "pgcodes/worker_pool.hpp"

namespace pgcodes {

namespace {

void require_char2(const FieldCtx& ctx, const char* what) {
    if (ctx.p() != 2) throw Error(std::string(what) + " needs characteristic 2");
}

void sort7(std::array<int32_t, 7>& a) {
    for (int i = 1; i < 7; ++i) {
        int32_t v = a[i];
        int j = i - 1;
        while (j >= 0 && a[j] > v) {
            a[j + 1] = a[j];
            --j;
        }
        a[j + 1] = v;
    }
}

}  // namespace

std::optional<Subspace3> span3(const FieldCtx& ctx, int32_t e1, int32_t e2, int32_t e3) {
    require_char2(ctx, "span3");
    std::array<FieldElement, 3> gen{FieldElement::from_exp(ctx.reduce(e1)),
                                    FieldElement::from_exp(ctx.reduce(e2)),
                                    FieldElement::from_exp(ctx.reduce(e3))};
    if (gen[0] == gen[1] || gen[0] == gen[2] || gen[1] == gen[2]) return std::nullopt;
    FieldElement s12 = ctx.add(gen[0], gen[1]);
    if (s12 == gen[2]) return std::nullopt;  // dependent triple
    FieldElement s13 = ctx.add(gen[0], gen[2]);
    FieldElement s23 = ctx.add(gen[1], gen[2]);
    FieldElement s123 = ctx.add(s12, gen[2]);
    Subspace3 out{{gen[0].exp, gen[1].exp, gen[2].exp, s12.exp, s13.exp, s23.exp, s123.exp}};
    sort7(out.exps);
    for (int i = 1; i < 7; ++i) {
        if (out.exps[i] == out.exps[i - 1]) throw Error("span3 closure produced a collision");
    }
    return out;
}

bool is_subspace3(const FieldCtx& ctx, const Subspace3& x) {
    if (ctx.p() != 2) return false;
    for (int i = 0; i < 7; ++i) {
        if (x.exps[i] < 0 || x.exps[i] >= ctx.q_minus_1()) return false;
        if (i > 0 && x.exps[i] <= x.exps[i - 1]) return false;
    }
    for (int r = 0; r < 7; ++r) {
        for (int s = r + 1; s < 7; ++s) {
            FieldElement sum =
                ctx.add(FieldElement::from_exp(x.exps[r]), FieldElement::from_exp(x.exps[s]));
            if (sum.is_zero()) return false;
            if (!std::binary_search(x.exps.begin(), x.exps.end(), sum.exp)) return false;
        }
    }
    return true;
}

Subspace3 shift_subspace(const FieldCtx& ctx, int64_t j, const Subspace3& x) {
    Subspace3 out;
    for (int i = 0; i < 7; ++i) out.exps[i] = ctx.reduce(x.exps[i] + j);
    sort7(out.exps);
    return out;
}

Subspace3 frobenius_subspace(const FieldCtx& ctx, int l, const Subspace3& x) {
    l %= ctx.n();
    if (l < 0) l += ctx.n();
    int64_t pl = ctx.frobenius(l, FieldElement::from_exp(1)).exp;  // p^l mod (q-1)
    Subspace3 out;
    for (int i = 0; i < 7; ++i) out.exps[i] = ctx.reduce(static_cast<int64_t>(x.exps[i]) * pl);
    sort7(out.exps);
    return out;
}

Subspace3 canonical_rep(const FieldCtx& ctx, const Subspace3& x) {
    int64_t M = ctx.q_minus_1();
    Subspace3 best;
    bool have = false;
    Subspace3 f = x;
    for (int l = 0; l < ctx.n(); ++l) {
        if (l > 0) f = frobenius_subspace(ctx, 1, f);
        for (int k = 0; k < 7; ++k) {
            Subspace3 cand;
            int32_t anchor = f.exps[k];
            for (int i = 0; i < 7; ++i) {
                int64_t d = f.exps[i] - anchor;
                cand.exps[i] = static_cast<int32_t>(d < 0 ? d + M : d);
            }
            sort7(cand.exps);
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
        }
    }
    return best;
}

DiffSet diff_set(const FieldCtx& ctx, const Subspace3& x) {
    int64_t M = ctx.q_minus_1();
    DiffSet out;
    out.diffs.reserve(42);
    for (int r = 0; r < 7; ++r) {
        for (int s = 0; s < 7; ++s) {
            if (r == s) continue;
            int64_t d = x.exps[r] - x.exps[s];
            out.diffs.push_back(static_cast<int32_t>(d < 0 ? d + M : d));
        }
    }
    std::sort(out.diffs.begin(), out.diffs.end());
    out.diffs.erase(std::unique(out.diffs.begin(), out.diffs.end()), out.diffs.end());
    out.coset_reps.reserve(out.diffs.size());
    for (int32_t d : out.diffs) {
        int64_t rep = d, t = d;
        for (int k = 1; k < ctx.n(); ++k) {
            t = t * ctx.p() % M;
            rep = std::min(rep, t);
        }
        out.coset_reps.push_back(static_cast<int32_t>(rep));
    }
    std::sort(out.coset_reps.begin(), out.coset_reps.end());
    out.coset_reps.erase(std::unique(out.coset_reps.begin(), out.coset_reps.end()),
                         out.coset_reps.end());
    return out;
}

bool is_complete(const FieldCtx& ctx, const Subspace3& x) {
    return diff_set(ctx, x).diffs.size() == 42;
}

bool is_coset_complete(const FieldCtx& ctx, const Subspace3& x) {
    return diff_set(ctx, x).coset_reps.size() == 42;
}

namespace {

// Every 3-subspace containing alpha^0, exactly once. The pair (b, c) is
// accepted when b is the smaller half of its Zech pair and c is minimal
// among the four exponents not determined by b; sentinel -1 values reject
// rows organically through the comparisons.
template <typename Fn>
void for_each_containing_one(const FieldCtx& ctx, Fn&& fn) {
    const int32_t M = static_cast<int32_t>(ctx.q_minus_1());
    for (int32_t b = 1; b < M; ++b) {
        int32_t zb = ctx.zech(b);
        if (zb < b) continue;
        for (int32_t c = b + 1; c < M; ++c) {
            if (c == zb) continue;
            int32_t zc = ctx.zech(c);
            int32_t bc = ctx.reduce(b + ctx.zech(c - b));
            int32_t abc = ctx.zech(bc);
            if (c > zc || c > bc || c > abc) continue;
            Subspace3 row{{0, b, c, zb, zc, bc, abc}};
            sort7(row.exps);
            fn(row);
        }
    }
}

// x (anchored at exponent 0, sorted) is the lex-min among its 7 shift
// normalizations
bool shift_canonical(const FieldCtx& ctx, const Subspace3& x) {
    const int32_t M = static_cast<int32_t>(ctx.q_minus_1());
    for (int k = 1; k < 7; ++k) {
        Subspace3 cand;
        int32_t anchor = x.exps[k];
        for (int i = 0; i < 7; ++i) {
            int32_t d = x.exps[i] - anchor;
            cand.exps[i] = d < 0 ? d + M : d;
        }
        sort7(cand.exps);
        if (cand < x) return false;
    }
    return true;
}

// lex-min over the remaining n-1 Frobenius images as well
bool orbit_canonical(const FieldCtx& ctx, const Subspace3& x) {
    const int32_t M = static_cast<int32_t>(ctx.q_minus_1());
    Subspace3 f = x;
    for (int l = 1; l < ctx.n(); ++l) {
        for (int i = 0; i < 7; ++i) f.exps[i] = static_cast<int32_t>(2 * static_cast<int64_t>(f.exps[i]) % M);
        for (int k = 0; k < 7; ++k) {
            Subspace3 cand;
            int32_t anchor = f.exps[k];
            for (int i = 0; i < 7; ++i) {
                int32_t d = f.exps[i] - anchor;
                cand.exps[i] = d < 0 ? d + M : d;
            }
            sort7(cand.exps);
            if (cand < x) return false;
        }
    }
    return true;
}

void set_mask_bit(std::vector<uint64_t>& masks, size_t row, size_t words, int64_t bit) {
    masks[row * words + (static_cast<size_t>(bit) >> 6)] |= uint64_t{1} << (bit & 63);
}

}  // namespace

VertexSet enumerate_vertices(const FieldCtx& ctx, const GroupTable& gt) {
    require_char2(ctx, "enumerate_vertices");
    const int32_t M = static_cast<int32_t>(ctx.q_minus_1());
    struct Cand {
        std::array<int32_t, 7> subset;
        Subspace3 rep;
    };
    std::vector<Cand> cands;
    for_each_containing_one(ctx, [&](const Subspace3& x) {
        if (!shift_canonical(ctx, x)) return;
        if (!orbit_canonical(ctx, x)) return;
        // the 21 pair differences fall in 7 blocks of 3 equal group ids,
        // one block per 2-subspace; coset complete <=> 7 distinct groups
        std::array<int32_t, 21> gs;
        int idx = 0;
        for (int r = 0; r < 7; ++r) {
            for (int s = r + 1; s < 7; ++s) {
                int32_t d = x.exps[s] - x.exps[r];
                if (d < 0) d += M;
                gs[static_cast<size_t>(idx++)] = gt.group_of[static_cast<size_t>(d)];
            }
        }
        std::sort(gs.begin(), gs.end());
        Cand cand;
        cand.rep = x;
        for (int t = 0; t < 7; ++t) {
            if (gs[3 * t] != gs[3 * t + 2]) return;            // not three-of-a-kind blocks
            if (t > 0 && gs[3 * t] == gs[3 * t - 1]) return;   // fewer than 7 distinct groups
            cand.subset[static_cast<size_t>(t)] = gs[3 * t];
        }
        cands.push_back(cand);
    });
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.subset != b.subset) return a.subset < b.subset;
        return a.rep < b.rep;
    });
    VertexSet vs;
    vs.mode = VertexMode::CosetGroups;
    vs.mask_bits = gt.group_count;
    vs.words = static_cast<size_t>((gt.group_count + 63) / 64);
    for (size_t i = 0; i < cands.size(); ++i) {
        if (i > 0 && cands[i].subset == cands[i - 1].subset) {
            ++vs.multiplicity.back();
            continue;
        }
        vs.subsets.push_back(cands[i].subset);
        vs.reps.push_back(cands[i].rep);
        vs.multiplicity.push_back(1);
    }
    vs.masks.assign(vs.size() * vs.words, 0);
    for (size_t v = 0; v < vs.size(); ++v) {
        for (int32_t g : vs.subsets[v]) set_mask_bit(vs.masks, v, vs.words, g);
    }
    return vs;
}

VertexSet enumerate_complete_vertices(const FieldCtx& ctx) {
    require_char2(ctx, "enumerate_complete_vertices");
    const int64_t M = ctx.q_minus_1();
    if (M > 4096) throw Error("complete mode handles small fields only; difference masks span q - 1 bits");
    size_t words = static_cast<size_t>((M + 63) / 64);
    struct Cand {
        std::vector<uint64_t> mask;
        Subspace3 rep;
    };
    std::vector<Cand> cands;
    for_each_containing_one(ctx, [&](const Subspace3& x) {
        if (!shift_canonical(ctx, x)) return;  // difference sets are shift-invariant
        DiffSet ds = diff_set(ctx, x);
        if (ds.diffs.size() != 42) return;
        Cand cand;
        cand.mask.assign(words, 0);
        cand.rep = x;
        for (int32_t d : ds.diffs) cand.mask[static_cast<size_t>(d) >> 6] |= uint64_t{1} << (d & 63);
        cands.push_back(std::move(cand));
    });
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.mask != b.mask) return a.mask < b.mask;
        return a.rep < b.rep;
    });
    VertexSet vs;
    vs.mode = VertexMode::CompleteDelta;
    vs.mask_bits = M;
    vs.words = words;
    for (size_t i = 0; i < cands.size(); ++i) {
        if (i > 0 && cands[i].mask == cands[i - 1].mask) {
            ++vs.multiplicity.back();
            continue;
        }
        vs.reps.push_back(cands[i].rep);
        vs.multiplicity.push_back(1);
        vs.masks.insert(vs.masks.end(), cands[i].mask.begin(), cands[i].mask.end());
    }
    return vs;
}

DisjointnessGraph build_graph(const VertexSet& vs, int workers) {
    const int64_t V = static_cast<int64_t>(vs.size());
    DisjointnessGraph g;
    g.vertex_count = V;
    g.words = static_cast<size_t>((V + 63) / 64);
    if (V == 0) return g;
    g.adj.assign(static_cast<size_t>(V) * g.words, 0);
    const size_t mw = vs.words;
    parallel_blocks(V, workers, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) {
            const uint64_t* mi = vs.mask(static_cast<size_t>(i));
            uint64_t* row = g.adj.data() + static_cast<size_t>(i) * g.words;
            for (int64_t j = 0; j < V; ++j) {
                if (j == i) continue;
                const uint64_t* mj = vs.mask(static_cast<size_t>(j));
                uint64_t hitv = 0;
                for (size_t w = 0; w < mw; ++w) hitv |= mi[w] & mj[w];
                if (hitv == 0) row[static_cast<size_t>(j) >> 6] |= uint64_t{1} << (j & 63);
            }
        }
    });
    int64_t bits = 0;
    for (uint64_t w : g.adj) bits += std::popcount(w);
    g.edge_count = bits / 2;
    return g;
}

namespace {

// Matula-Beck core decomposition; returns vertices in removal order
// (lowest remaining degree first)
std::vector<int32_t> degeneracy_order(const DisjointnessGraph& g) {
    const int64_t V = g.vertex_count;
    const size_t W = g.words;
    std::vector<int32_t> deg(static_cast<size_t>(V), 0);
    int32_t maxdeg = 0;
    for (int64_t v = 0; v < V; ++v) {
        int32_t d = 0;
        const uint64_t* row = g.adj.data() + static_cast<size_t>(v) * W;
        for (size_t w = 0; w < W; ++w) d += std::popcount(row[w]);
        deg[static_cast<size_t>(v)] = d;
        maxdeg = std::max(maxdeg, d);
    }
    std::vector<int32_t> bin(static_cast<size_t>(maxdeg) + 2, 0);
    for (int64_t v = 0; v < V; ++v) ++bin[static_cast<size_t>(deg[static_cast<size_t>(v)])];
    int32_t start = 0;
    for (size_t d = 0; d < bin.size(); ++d) {
        int32_t cnt = bin[d];
        bin[d] = start;
        start += cnt;
    }
    std::vector<int32_t> vert(static_cast<size_t>(V)), pos(static_cast<size_t>(V));
    for (int64_t v = 0; v < V; ++v) {
        int32_t d = deg[static_cast<size_t>(v)];
        pos[static_cast<size_t>(v)] = bin[static_cast<size_t>(d)];
        vert[static_cast<size_t>(pos[static_cast<size_t>(v)])] = static_cast<int32_t>(v);
        ++bin[static_cast<size_t>(d)];
    }
    for (size_t d = bin.size() - 1; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;
    for (int64_t i = 0; i < V; ++i) {
        int32_t v = vert[static_cast<size_t>(i)];
        const uint64_t* row = g.adj.data() + static_cast<size_t>(v) * W;
        for (size_t w = 0; w < W; ++w) {
            uint64_t bitsw = row[w];
            while (bitsw) {
                int32_t u = static_cast<int32_t>((w << 6) + static_cast<size_t>(std::countr_zero(bitsw)));
                bitsw &= bitsw - 1;
                if (pos[static_cast<size_t>(u)] <= i) continue;  // already removed
                int32_t du = deg[static_cast<size_t>(u)];
                int32_t pw = bin[static_cast<size_t>(du)];
                int32_t x = vert[static_cast<size_t>(pw)];
                if (u != x && pos[static_cast<size_t>(x)] > i) {
                    std::swap(vert[static_cast<size_t>(pos[static_cast<size_t>(u)])],
                              vert[static_cast<size_t>(pw)]);
                    std::swap(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(x)]);
                }
                ++bin[static_cast<size_t>(du)];
                --deg[static_cast<size_t>(u)];
            }
        }
    }
    return vert;
}

struct CliqueSearch {
    const size_t W;
    const int64_t V;
    std::vector<uint64_t> radj;  // adjacency over renumbered ids
    int target;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    bool done = false;
    uint64_t nodes = 0;
    std::vector<int32_t> cur, best;

    CliqueSearch(int64_t v, size_t w) : W(w), V(v) {}

    const uint64_t* row(int32_t v) const { return radj.data() + static_cast<size_t>(v) * W; }

    bool tick() {
        ++nodes;
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            timed_out = true;
        return !timed_out;
    }

    void note_best() {
        if (cur.size() > best.size()) {
            best = cur;
            if (target > 0 && static_cast<int>(best.size()) >= target) done = true;
        }
    }

    void expand(std::vector<uint64_t>& P, int64_t pcount) {
        if (done || timed_out || pcount == 0) return;
        std::vector<int32_t> ord(static_cast<size_t>(pcount));
        std::vector<int32_t> col(static_cast<size_t>(pcount));
        // greedy color classes are independent sets: a clique takes at most
        // one vertex per class, so col[] bounds any extension
        {
            std::vector<uint64_t> U = P;
            size_t idx = 0;
            int color = 0;
            std::vector<uint64_t> Q(W);
            while (idx < static_cast<size_t>(pcount)) {
                ++color;
                Q = U;
                while (true) {
                    int32_t v = -1;
                    for (size_t w = 0; w < W; ++w) {
                        if (Q[w]) {
                            v = static_cast<int32_t>((w << 6) +
                                                     static_cast<size_t>(std::countr_zero(Q[w])));
                            break;
                        }
                    }
                    if (v < 0) break;
                    Q[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
                    U[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
                    const uint64_t* rv = row(v);
                    for (size_t w = 0; w < W; ++w) Q[w] &= ~rv[w];
                    ord[idx] = v;
                    col[idx] = color;
                    ++idx;
                }
            }
        }
        for (int64_t i = pcount - 1; i >= 0; --i) {
            if (!tick() || done) return;
            if (static_cast<int>(cur.size()) + col[static_cast<size_t>(i)] <=
                static_cast<int>(best.size()))
                return;  // colors ascend, so everything below prunes too
            int32_t v = ord[static_cast<size_t>(i)];
            std::vector<uint64_t> P2(W);
            const uint64_t* rv = row(v);
            int64_t c2 = 0;
            for (size_t w = 0; w < W; ++w) {
                P2[w] = P[w] & rv[w];
                c2 += std::popcount(P2[w]);
            }
            cur.push_back(v);
            note_best();
            expand(P2, c2);
            cur.pop_back();
            if (done || timed_out) return;
            P[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
        }
    }
};

}  // namespace

CliqueResult find_clique(const DisjointnessGraph& g, int target_size, double budget_seconds,
                         std::optional<uint64_t> rng_seed) {
    CliqueResult res;
    res.rng_seed = rng_seed;
    const int64_t V = g.vertex_count;
    if (V == 0) {
        res.status = SearchStatus::Exhausted;
        return res;
    }
    // renumber so the dense core comes first
    std::vector<int32_t> removal = degeneracy_order(g);
    std::vector<int32_t> to_old(static_cast<size_t>(V)), to_new(static_cast<size_t>(V));
    for (int64_t i = 0; i < V; ++i) {
        int32_t oldv = removal[static_cast<size_t>(V - 1 - i)];
        to_old[static_cast<size_t>(i)] = oldv;
        to_new[static_cast<size_t>(oldv)] = static_cast<int32_t>(i);
    }
    CliqueSearch st(V, g.words);
    st.target = target_size;
    if (budget_seconds > 0) {
        st.deadline = std::chrono::steady_clock::now() +
                      std::chrono::microseconds(static_cast<int64_t>(budget_seconds * 1e6));
        st.has_deadline = true;
    }
    st.radj.assign(static_cast<size_t>(V) * g.words, 0);
    for (int64_t i = 0; i < V; ++i) {
        const uint64_t* src = g.adj.data() + static_cast<size_t>(to_old[static_cast<size_t>(i)]) * g.words;
        uint64_t* dst = st.radj.data() + static_cast<size_t>(i) * g.words;
        for (int64_t j = 0; j < V; ++j) {
            if ((src[static_cast<size_t>(to_old[static_cast<size_t>(j)]) >> 6] >>
                 (to_old[static_cast<size_t>(j)] & 63)) & 1)
                dst[static_cast<size_t>(j) >> 6] |= uint64_t{1} << (j & 63);
        }
    }

    auto greedy_in = [&](const std::vector<int32_t>& order) {
        std::vector<uint64_t> compat(g.words, ~uint64_t{0});
        std::vector<int32_t> cl;
        for (int32_t v : order) {
            if ((compat[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1) {
                cl.push_back(v);
                const uint64_t* rv = st.row(v);
                for (size_t w = 0; w < g.words; ++w) compat[w] &= rv[w];
            }
        }
        return cl;
    };

    std::vector<int32_t> asc(static_cast<size_t>(V));
    for (int64_t i = 0; i < V; ++i) asc[static_cast<size_t>(i)] = static_cast<int32_t>(i);
    st.best = greedy_in(asc);
    if (target_size > 0 && static_cast<int>(st.best.size()) >= target_size) st.done = true;

    if (rng_seed) {
        // randomized restart mode: shuffled greedy until target or budget
        std::mt19937_64 rng(*rng_seed);
        while (!st.done) {
            if (st.has_deadline && std::chrono::steady_clock::now() > st.deadline) {
                st.timed_out = true;
                break;
            }
            ++st.nodes;
            std::shuffle(asc.begin(), asc.end(), rng);
            std::vector<int32_t> cl = greedy_in(asc);
            if (cl.size() > st.best.size()) {
                st.best = cl;
                if (target_size > 0 && static_cast<int>(st.best.size()) >= target_size)
                    st.done = true;
            }
        }
        res.status = st.done ? SearchStatus::Found : SearchStatus::TimedOut;
    } else if (!st.done) {
        std::vector<uint64_t> P(g.words, 0);
        for (int64_t v = 0; v < V; ++v) P[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
        st.expand(P, V);
        res.status = st.done        ? SearchStatus::Found
                     : st.timed_out ? SearchStatus::TimedOut
                                    : SearchStatus::Exhausted;
    } else {
        res.status = SearchStatus::Found;
    }
    res.best_size = static_cast<int>(st.best.size());
    res.nodes = st.nodes;
    res.vertices.reserve(st.best.size());
    for (int32_t v : st.best) res.vertices.push_back(to_old[static_cast<size_t>(v)]);
    std::sort(res.vertices.begin(), res.vertices.end());
    return res;
}

SubspaceCode expand_code(const FieldCtx& ctx, const std::vector<int32_t>& clique,
                         const VertexSet& vs) {
    require_char2(ctx, "expand_code");
    const int64_t M = ctx.q_minus_1();
    const int n = ctx.n();
    const int64_t orbit_expected = n * M;
    for (size_t a = 0; a < clique.size(); ++a) {
        if (clique[a] < 0 || static_cast<size_t>(clique[a]) >= vs.size())
            throw Error("clique vertex id out of range");
        for (size_t b = a + 1; b < clique.size(); ++b) {
            const uint64_t* ma = vs.mask(static_cast<size_t>(clique[a]));
            const uint64_t* mb = vs.mask(static_cast<size_t>(clique[b]));
            uint64_t hitv = 0;
            for (size_t w = 0; w < vs.words; ++w) hitv |= ma[w] & mb[w];
            if (hitv) throw Error("clique vertices are not pairwise disjoint");
        }
    }
    SubspaceCode code;
    code.source_clique = clique;
    std::vector<Subspace3> all;
    all.reserve(clique.size() * static_cast<size_t>(orbit_expected));
    for (int32_t vid : clique) {
        size_t start = all.size();
        Subspace3 f = vs.reps[static_cast<size_t>(vid)];
        for (int l = 0; l < n; ++l) {
            if (l > 0) f = frobenius_subspace(ctx, 1, f);
            for (int64_t j = 0; j < M; ++j) all.push_back(shift_subspace(ctx, j, f));
        }
        std::sort(all.begin() + static_cast<int64_t>(start), all.end());
        if (std::adjacent_find(all.begin() + static_cast<int64_t>(start), all.end()) != all.end())
            throw UnexpectedStabilizerError("vertex " + std::to_string(vid) + " orbit is smaller than n(q-1)");
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw Error("orbits overlap across clique vertices");
    code.members = std::move(all);
    return code;
}

CodeReport verify_code(const FieldCtx& ctx, const SubspaceCode& code, int workers) {
    require_char2(ctx, "verify_code");
    const int64_t M = ctx.q_minus_1();
    CodeReport rep;
    rep.members = static_cast<int64_t>(code.members.size());
    rep.two_subspaces = 7 * rep.members;
    rep.two_total = M * ((M - 1) / 2) / 3;  // Gaussian count of 2-subspaces of F_2^n

    std::vector<Subspace3> sorted_members = code.members;
    std::sort(sorted_members.begin(), sorted_members.end());
    if (std::adjacent_find(sorted_members.begin(), sorted_members.end()) != sorted_members.end())
        throw Error("code members repeat");

    const int64_t count = rep.members;
    std::vector<uint64_t> keys(static_cast<size_t>(7 * count));
    std::vector<uint8_t> closed_block((count + 1), 1);
    std::vector<uint8_t> valid_block((count + 1), 1);
    parallel_blocks(count, workers, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) {
            const Subspace3& x = sorted_members[static_cast<size_t>(i)];
            if (!is_subspace3(ctx, x)) {
                valid_block[static_cast<size_t>(i)] = 0;
                continue;
            }
            // the 21 pairs close into 7 distinct 2-subspaces {a, b, a+b}
            std::array<uint64_t, 21> tk;
            int idx = 0;
            for (int r = 0; r < 7; ++r) {
                for (int s = r + 1; s < 7; ++s) {
                    int32_t a = x.exps[r], b = x.exps[s];
                    int32_t c = ctx.reduce(a + ctx.zech(ctx.reduce(b - a)));
                    std::array<int32_t, 3> t{a, b, c};
                    std::sort(t.begin(), t.end());
                    tk[static_cast<size_t>(idx++)] = static_cast<uint64_t>(t[0]) |
                                                     (static_cast<uint64_t>(t[1]) << 21) |
                                                     (static_cast<uint64_t>(t[2]) << 42);
                }
            }
            std::sort(tk.begin(), tk.end());
            int distinct = 1;
            for (int k = 1; k < 21; ++k) distinct += tk[static_cast<size_t>(k)] != tk[static_cast<size_t>(k - 1)];
            if (distinct != 7) {
                valid_block[static_cast<size_t>(i)] = 0;
                continue;
            }
            size_t out = static_cast<size_t>(7 * i);
            keys[out] = tk[0];
            for (int k = 1, w = 1; k < 21; ++k) {
                if (tk[static_cast<size_t>(k)] != tk[static_cast<size_t>(k - 1)])
                    keys[out + static_cast<size_t>(w++)] = tk[static_cast<size_t>(k)];
            }
            // closure under the two generators of the mapping group
            if (!std::binary_search(sorted_members.begin(), sorted_members.end(),
                                    shift_subspace(ctx, 1, x)) ||
                !std::binary_search(sorted_members.begin(), sorted_members.end(),
                                    frobenius_subspace(ctx, 1, x)))
                closed_block[static_cast<size_t>(i)] = 0;
        }
    });
    for (int64_t i = 0; i < count; ++i) {
        if (!valid_block[static_cast<size_t>(i)]) throw Error("member " + std::to_string(i) + " is not a 3-subspace");
    }
    rep.closed_ok = true;
    for (int64_t i = 0; i < count; ++i) rep.closed_ok = rep.closed_ok && closed_block[static_cast<size_t>(i)];

    std::sort(keys.begin(), keys.end());
    int64_t distinct = keys.empty() ? 0 : 1;
    bool repeat = false;
    for (size_t k = 1; k < keys.size(); ++k) {
        if (keys[k] != keys[k - 1])
            ++distinct;
        else
            repeat = true;
    }
    rep.two_subspaces_distinct = distinct;
    rep.min_distance_ok = !repeat && count > 0;
    rep.covered = distinct;
    rep.uncovered = rep.two_total - distinct;
    rep.steiner_complete = rep.min_distance_ok && rep.uncovered == 0;
    return rep;
}

}  // namespace pgcodes
