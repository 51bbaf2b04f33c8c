#include "pgcodes/pgeom.hpp"

#include <algorithm>

#include "pgcodes/errors.hpp"

namespace pgcodes {

namespace {

// pair coordinates (u, c) in F_{p^n} x F_p, scalars mod F_p^*
struct PairCoord {
    FieldElement u;
    int c;
};

PairCoord to_pair(const ProjPoint& pt) {
    if (pt.kind == ProjPoint::Kind::P0) return {FieldElement::from_exp(pt.i), 0};
    return {pt.x, 1};
}

FieldElement smul(const FieldCtx& ctx, FieldElement v, int s) {
    if (s == 0 || v.is_zero()) return FieldElement::zero();
    return FieldElement::from_exp(ctx.reduce(v.exp + ctx.scalar_exp(s)));
}

ProjPoint from_pair(const FieldCtx& ctx, const PairCoord& pr) {
    if (pr.c == 0) return ProjPoint::p0(ctx, pr.u.exp);
    int inv = 1;
    for (int s = 1; s < ctx.p(); ++s) {
        if (s * pr.c % ctx.p() == 1) {
            inv = s;
            break;
        }
    }
    return ProjPoint::p1(smul(ctx, pr.u, inv));
}

}  // namespace

int32_t point_key(const FieldCtx& ctx, const ProjPoint& pt) {
    if (pt.kind == ProjPoint::Kind::P0) return pt.i;
    if (pt.x.is_zero()) return static_cast<int32_t>(ctx.m());
    return static_cast<int32_t>(ctx.m() + 1 + pt.x.exp);
}

ProjPoint key_point(const FieldCtx& ctx, int32_t key) {
    int64_t m = ctx.m();
    if (key < 0 || key >= point_count(ctx)) throw Error("point key out of range");
    if (key < m) return ProjPoint::p0(ctx, key);
    if (key == m) return ProjPoint::p1(FieldElement::zero());
    return ProjPoint::p1(FieldElement::from_exp(static_cast<int32_t>(key - m - 1)));
}

GeomLine make_line(const FieldCtx& ctx, std::vector<ProjPoint> pts) {
    if (pts.size() != static_cast<size_t>(ctx.p()) + 1) throw NotALineError("a line carries p + 1 points");
    GeomLine ln;
    ln.npts = static_cast<uint8_t>(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) ln.keys[k] = point_key(ctx, pts[k]);
    std::sort(ln.keys.begin(), ln.keys.begin() + ln.npts);
    for (size_t k = 1; k < ln.npts; ++k) {
        if (ln.keys[k] == ln.keys[k - 1]) throw NotALineError("repeated point");
    }
    return ln;
}

ProjPoint frobenius_pt(const FieldCtx& ctx, int l, const ProjPoint& pt) {
    l %= ctx.n();
    if (l < 0) l += ctx.n();
    if (pt.kind == ProjPoint::Kind::P1) return ProjPoint::p1(ctx.frobenius(l, pt.x));
    // p^l mod (q-1) reduces further to p^l mod m because m divides q-1
    int64_t pl = ctx.frobenius(l, FieldElement::from_exp(1)).exp;
    return ProjPoint::p0(ctx, static_cast<int64_t>(pt.i) * pl);
}

ProjPoint shift_pt(const FieldCtx& ctx, int64_t j, const ProjPoint& pt) {
    if (pt.kind == ProjPoint::Kind::P1) return ProjPoint::p1(ctx.cyclic_shift(j, pt.x));
    return ProjPoint::p0(ctx, pt.i + j);
}

GeomLine line_through(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b) {
    if (a == b) throw SamePointError("line_through needs two distinct points");
    PairCoord pa = to_pair(a);
    PairCoord pb = to_pair(b);
    int p = ctx.p();
    std::vector<ProjPoint> pts;
    pts.reserve(static_cast<size_t>(p) + 1);
    pts.push_back(from_pair(ctx, pb));  // (lambda, mu) = (0, 1)
    for (int mu = 0; mu < p; ++mu) {    // (lambda, mu) = (1, mu)
        PairCoord c{ctx.add(pa.u, smul(ctx, pb.u, mu)), (pa.c + mu * pb.c) % p};
        if (c.c == 0 && c.u.is_zero()) throw SamePointError("line_through: proportional points");
        pts.push_back(from_pair(ctx, c));
    }
    return make_line(ctx, std::move(pts));
}

bool is_line(const FieldCtx& ctx, const GeomLine& line) {
    if (line.npts != ctx.p() + 1) return false;
    int64_t N = point_count(ctx);
    for (size_t k = 0; k < line.npts; ++k) {
        if (line.keys[k] < 0 || line.keys[k] >= N) return false;
        if (k > 0 && line.keys[k] <= line.keys[k - 1]) return false;
    }
    GeomLine regen = line_through(ctx, key_point(ctx, line.keys[0]), key_point(ctx, line.keys[1]));
    return regen == line;
}

GeomLine map_line(const FieldCtx& ctx, MapKind kind, int64_t param, const GeomLine& line) {
    std::vector<ProjPoint> pts;
    pts.reserve(line.npts);
    for (int32_t key : line) {
        ProjPoint pt = key_point(ctx, key);
        pts.push_back(kind == MapKind::Frobenius ? frobenius_pt(ctx, static_cast<int>(param), pt)
                                                 : shift_pt(ctx, param, pt));
    }
    GeomLine img = make_line(ctx, std::move(pts));
    if (!is_line(ctx, img)) throw NotALineError("mapped image fails the line check");
    return img;
}

std::vector<GeomLine> all_lines(const FieldCtx& ctx) {
    int64_t N = point_count(ctx);
    if (N > 4096) throw Error("all_lines: geometry too large to enumerate pairwise");
    std::vector<GeomLine> out;
    for (int32_t k1 = 0; k1 < N; ++k1) {
        ProjPoint a = key_point(ctx, k1);
        for (int32_t k2 = k1 + 1; k2 < N; ++k2) {
            GeomLine ln = line_through(ctx, a, key_point(ctx, k2));
            // keep the line only for its two smallest points
            if (ln.keys[0] == k1 && ln.keys[1] == k2) out.push_back(ln);
        }
    }
    return out;
}

GeomLine type1_line(const FieldCtx& ctx) {
    return line_through(ctx, ProjPoint::p0(ctx, 0), ProjPoint::p1(FieldElement::zero()));
}

LineType classify_line(const FieldCtx& ctx, const GeomLine& line) {
    if (!is_line(ctx, line)) throw NotALineError("classify_line: not a line");
    int64_t m = ctx.m();
    bool all_p0 = true;
    bool has_zero_pt = false;
    for (int32_t key : line) {
        if (key >= m) all_p0 = false;
        if (key == m) has_zero_pt = true;
    }
    // the P0 cycle is a hyperplane, so a line is all-P0 or meets it once;
    // the one-P0 lines split on whether they pass through P1(Zero)
    if (has_zero_pt) return LineType::Type1;
    if (all_p0) return LineType::Type3;
    return LineType::Type2;
}

}  // namespace pgcodes
