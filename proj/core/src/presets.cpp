#include "pgcodes/presets.hpp"

#include <charconv>
#include <vector>

#include "pgcodes/errors.hpp"

namespace pgcodes {

namespace {

int64_t parse_num(const std::string& s, size_t lo, size_t hi) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + lo, s.data() + hi, v);
    if (ec != std::errc{} || ptr != s.data() + hi)
        throw FormatError("bad number in field spec: '" + s.substr(lo, hi - lo) + "'");
    return v;
}

// "1+0x+0x^2+0x^3+2x^4+x^5", ascending powers; a bare x^k means coefficient 1
std::vector<int> parse_poly(const std::string& s) {
    std::vector<int> poly;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        if (plus == std::string::npos) plus = s.size();
        if (plus == pos) throw FormatError("empty term in polynomial '" + s + "'");
        size_t xat = s.find('x', pos);
        int64_t coeff, power;
        if (xat == std::string::npos || xat >= plus) {
            coeff = parse_num(s, pos, plus);
            power = 0;
        } else {
            coeff = xat == pos ? 1 : parse_num(s, pos, xat);
            if (xat + 1 == plus)
                power = 1;
            else if (s[xat + 1] == '^')
                power = parse_num(s, xat + 2, plus);
            else
                throw FormatError("bad term in polynomial '" + s + "'");
        }
        if (coeff < 0 || power < 0 || power > 64)
            throw FormatError("bad term in polynomial '" + s + "'");
        if (static_cast<size_t>(power) >= poly.size()) poly.resize(static_cast<size_t>(power) + 1, 0);
        poly[static_cast<size_t>(power)] = static_cast<int>(coeff);
        if (plus == s.size()) break;
        pos = plus + 1;
    }
    return poly;
}

}  // namespace

FieldCtx field_from_spec(const std::string& spec) {
    // the f3_5 generator is a root of 1 + 2x + x^5; the bundled PG(5,3)
    // seed's exponents are written against it
    if (spec == "f3_5") return build_field(3, 5, {1, 2, 0, 0, 0, 1});
    if (spec == "f2_7") return build_field(2, 7, {1, 1, 0, 0, 0, 0, 0, 1});
    if (spec == "f2_13") return build_field(2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});

    int p = 0, n = 0;
    std::vector<int> poly;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string part = spec.substr(pos, comma - pos);
        if (part.rfind("p=", 0) == 0)
            p = static_cast<int>(parse_num(part, 2, part.size()));
        else if (part.rfind("n=", 0) == 0)
            n = static_cast<int>(parse_num(part, 2, part.size()));
        else if (part.rfind("poly=", 0) == 0)
            poly = parse_poly(part.substr(5));
        else
            throw FormatError("bad field spec part '" + part + "'; expected p=, n=, poly= or a preset name");
        pos = comma + 1;
    }
    if (p == 0 || n == 0 || poly.empty())
        throw FormatError("field spec needs p=, n= and poly=; got '" + spec + "'");
    return build_field(p, n, poly);
}

const char* const kBundledSeedPg53 =
    "[base]\n"
    "P0:5 P1:0 P1:1 P1:190\n"
    "P0:74 P1:0 P1:2 P1:167\n"
    "P0:120 P1:0 P1:4 P1:68\n"
    "P0:69 P1:0 P1:5 P1:122\n"
    "P0:67 P1:0 P1:8 P1:220\n"
    "P0:27 P1:0 P1:14 P1:169\n"
    "P0:37 P1:0 P1:20 P1:147\n"
    "P0:97 P1:0 P1:31 P1:177\n"
    "[shifts]\n"
    "1 218\n"
    "5 8\n"
    "29 12\n"
    "111 230\n"
    "61 150\n"
    "187 132\n"
    "129 202\n"
    "125 40\n"
    "[generators]\n"
    "P0:8 P0:9 P0:13 P0:77\n"
    "P0:26 P0:73 P0:75 P0:119\n";

}  // namespace pgcodes
