#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pgcodes/gfield.hpp"

namespace pgcodes {

// Points of PG(n,p) split into two cycles: P0(i) = (alpha^i, 0) with i mod m,
// and P1(x) = (x, 1) with x any field element including Zero.
// Canonical integer keys order every point: P0(i) -> i, P1(Zero) -> m,
// P1(alpha^e) -> m + 1 + e.
struct ProjPoint {
    enum class Kind : uint8_t { P0, P1 };
    Kind kind = Kind::P0;
    int32_t i = 0;       // P0 cycle position, reduced mod m
    FieldElement x{};    // P1 payload

    static ProjPoint p0(const FieldCtx& ctx, int64_t i) {
        int64_t m = ctx.m();
        i %= m;
        if (i < 0) i += m;
        return ProjPoint{Kind::P0, static_cast<int32_t>(i), FieldElement::zero()};
    }
    static ProjPoint p1(FieldElement x) { return ProjPoint{Kind::P1, 0, x}; }
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

int32_t point_key(const FieldCtx& ctx, const ProjPoint& pt);
ProjPoint key_point(const FieldCtx& ctx, int32_t key);
inline int64_t point_count(const FieldCtx& ctx) { return ctx.m() + ctx.q_minus_1() + 1; }

enum class LineType : uint8_t { Unclassified = 0, Type1 = 1, Type2 = 2, Type3 = 3 };

// A line as its p+1 canonically sorted point keys. p <= 3 here, so a fixed
// array of four slots suffices; unused slots stay -1.
struct GeomLine {
    std::array<int32_t, 4> keys{-1, -1, -1, -1};
    uint8_t npts = 0;

    int32_t operator[](size_t k) const { return keys[k]; }
    const int32_t* begin() const { return keys.data(); }
    const int32_t* end() const { return keys.data() + npts; }
    friend bool operator==(const GeomLine&, const GeomLine&) = default;
    friend auto operator<=>(const GeomLine& a, const GeomLine& b) { return a.keys <=> b.keys; }

    // point keys stay under 2^16 for every supported field
    uint64_t encode() const {
        uint64_t v = 0;
        for (int k = 3; k >= 0; --k) v = (v << 16) | static_cast<uint16_t>(keys[static_cast<size_t>(k)]);
        return v;
    }
};

GeomLine make_line(const FieldCtx& ctx, std::vector<ProjPoint> pts);

ProjPoint frobenius_pt(const FieldCtx& ctx, int l, const ProjPoint& pt);
ProjPoint shift_pt(const FieldCtx& ctx, int64_t j, const ProjPoint& pt);

// The p+1 points { lambda*a + mu*b } / F_p^* in (F_{p^n} x F_p) pair
// coordinates. Scalars live in the prime field; a pair with c != 0
// normalizes to c = 1 (a P1 point), c = 0 reduces the exponent mod m.
GeomLine line_through(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b);

bool is_line(const FieldCtx& ctx, const GeomLine& line);

enum class MapKind { Frobenius, Shift };
// pointwise image; throws NotALine if the image fails the closure check
GeomLine map_line(const FieldCtx& ctx, MapKind kind, int64_t param, const GeomLine& line);

// every line exactly once, canonically sorted; count is the Gaussian [n+1, 2]_p
std::vector<GeomLine> all_lines(const FieldCtx& ctx);

// the single line of Section-3 type 1: { P0(0), P1(Zero) } + the F_p^* orbit of P1(1)
GeomLine type1_line(const FieldCtx& ctx);

LineType classify_line(const FieldCtx& ctx, const GeomLine& line);

}  // namespace pgcodes
