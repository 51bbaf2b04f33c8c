#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "pgcodes/pgeom.hpp"
#include "pgcodes/presets.hpp"

using namespace pgcodes;

TEST_CASE("point keys are a bijection") {
    FieldCtx ctx = field_from_spec("p=2,n=3,poly=1+x+x^3");
    CHECK(point_count(ctx) == 15);
    CHECK(point_key(ctx, ProjPoint::p0(ctx, 5)) == 5);
    CHECK(point_key(ctx, ProjPoint::p1(FieldElement::zero())) == 7);
    CHECK(point_key(ctx, ProjPoint::p1(FieldElement::from_exp(0))) == 8);
    CHECK(point_key(ctx, ProjPoint::p1(FieldElement::from_exp(6))) == 14);
    for (int32_t k = 0; k < 15; ++k) REQUIRE(point_key(ctx, key_point(ctx, k)) == k);
    // the P0 index wraps mod m
    CHECK(ProjPoint::p0(ctx, -1).i == 6);
    CHECK(ProjPoint::p0(ctx, 7).i == 0);
}

TEST_CASE("line through two points") {
    FieldCtx ctx = field_from_spec("f3_5");
    ProjPoint a = ProjPoint::p0(ctx, 3);
    ProjPoint b = ProjPoint::p1(FieldElement::from_exp(10));
    GeomLine ln = line_through(ctx, a, b);
    CHECK(ln.npts == 4);
    CHECK(is_line(ctx, ln));
    CHECK(std::find(ln.begin(), ln.end(), point_key(ctx, a)) != ln.end());
    CHECK(std::find(ln.begin(), ln.end(), point_key(ctx, b)) != ln.end());
    CHECK(line_through(ctx, b, a) == ln);
    // any two of its points regenerate it
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            REQUIRE(line_through(ctx, key_point(ctx, ln[i]), key_point(ctx, ln[j])) == ln);

    CHECK_THROWS_AS(line_through(ctx, a, a), SamePointError);
    CHECK_THROWS_AS(line_through(ctx, a, ProjPoint::p0(ctx, 3 + 121)), SamePointError);
}

TEST_CASE("make_line validates shape only") {
    FieldCtx ctx = field_from_spec("p=2,n=3,poly=1+x+x^3");
    std::vector<ProjPoint> two{ProjPoint::p0(ctx, 0), ProjPoint::p0(ctx, 1)};
    CHECK_THROWS_AS(make_line(ctx, two), NotALineError);
    std::vector<ProjPoint> dup{ProjPoint::p0(ctx, 0), ProjPoint::p0(ctx, 1), ProjPoint::p0(ctx, 1)};
    CHECK_THROWS_AS(make_line(ctx, dup), NotALineError);
    // shape-valid but non-collinear triples pass make_line and fail is_line
    std::vector<ProjPoint> skew{ProjPoint::p0(ctx, 0), ProjPoint::p0(ctx, 1), ProjPoint::p0(ctx, 2)};
    GeomLine ln = make_line(ctx, skew);
    CHECK_FALSE(is_line(ctx, ln));
}

TEST_CASE("PG(3,2) line census") {
    FieldCtx ctx = field_from_spec("p=2,n=3,poly=1+x+x^3");
    std::vector<GeomLine> lines = all_lines(ctx);
    REQUIRE(lines.size() == 35);
    std::map<LineType, int> byType;
    for (const GeomLine& ln : lines) {
        REQUIRE(is_line(ctx, ln));
        ++byType[classify_line(ctx, ln)];
    }
    CHECK(byType[LineType::Type1] == 7);
    CHECK(byType[LineType::Type2] == 21);
    CHECK(byType[LineType::Type3] == 7);
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    CHECK(std::adjacent_find(lines.begin(), lines.end()) == lines.end());
}

TEST_CASE("PG(5,3) line census") {
    FieldCtx ctx = field_from_spec("f3_5");
    CHECK(point_count(ctx) == 364);
    std::vector<GeomLine> lines = all_lines(ctx);
    REQUIRE(lines.size() == 11011);
    int64_t t1 = 0, t2 = 0, t3 = 0;
    for (const GeomLine& ln : lines) {
        switch (classify_line(ctx, ln)) {
            case LineType::Type1: ++t1; break;
            case LineType::Type2: ++t2; break;
            case LineType::Type3: ++t3; break;
            default: FAIL("unclassified line");
        }
    }
    CHECK(t1 == 121);
    CHECK(t2 == 9680);
    CHECK(t3 == 1210);
}

TEST_CASE("all_lines refuses oversized geometries") {
    FieldCtx ctx = field_from_spec("f2_13");
    CHECK(point_count(ctx) == 16383);
    CHECK_THROWS_AS(all_lines(ctx), Error);
}

TEST_CASE("line types by structure") {
    FieldCtx ctx = field_from_spec("f3_5");
    GeomLine t1 = type1_line(ctx);
    CHECK(classify_line(ctx, t1) == LineType::Type1);
    // { P0(0), P1(Zero), P1(1), P1(-1) }
    CHECK(t1.keys == std::array<int32_t, 4>{0, 121, 122, 243});

    GeomLine t3 = line_through(ctx, ProjPoint::p0(ctx, 0), ProjPoint::p0(ctx, 1));
    CHECK(classify_line(ctx, t3) == LineType::Type3);
    for (int32_t k : t3) REQUIRE(k < ctx.m());
}

TEST_CASE("mapped lines compose") {
    FieldCtx ctx = field_from_spec("f3_5");
    GeomLine ln = line_through(ctx, ProjPoint::p0(ctx, 17), ProjPoint::p1(FieldElement::from_exp(88)));

    CHECK(map_line(ctx, MapKind::Shift, 0, ln) == ln);
    CHECK(map_line(ctx, MapKind::Frobenius, 0, ln) == ln);
    CHECK(map_line(ctx, MapKind::Shift, ctx.q_minus_1(), ln) == ln);

    GeomLine a = map_line(ctx, MapKind::Shift, 7, map_line(ctx, MapKind::Shift, 30, ln));
    CHECK(a == map_line(ctx, MapKind::Shift, 37, ln));

    GeomLine f = map_line(ctx, MapKind::Frobenius, 2, map_line(ctx, MapKind::Frobenius, 4, ln));
    CHECK(f == map_line(ctx, MapKind::Frobenius, 6 % 5, ln));

    // shifting by m fixes all-P0 lines pointwise
    GeomLine t3 = line_through(ctx, ProjPoint::p0(ctx, 4), ProjPoint::p0(ctx, 29));
    CHECK(map_line(ctx, MapKind::Shift, ctx.m(), t3) == t3);
}

TEST_CASE("line encoding is injective") {
    FieldCtx ctx = field_from_spec("p=2,n=3,poly=1+x+x^3");
    std::vector<GeomLine> lines = all_lines(ctx);
    std::set<uint64_t> codes;
    for (const GeomLine& ln : lines) codes.insert(ln.encode());
    CHECK(codes.size() == lines.size());
}
