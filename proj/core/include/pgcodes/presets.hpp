#pragma once

#include <string>

#include "pgcodes/gfield.hpp"

namespace pgcodes {

// Accepts a preset name (f3_5, f2_7, f2_13) or a spec string like
// "p=3,n=5,poly=1+2x+x^5" with coefficients ascending.
FieldCtx field_from_spec(const std::string& spec);

// text of the bundled PG(5,3) seed; exponents written against the f3_5
// generator
extern const char* const kBundledSeedPg53;

}  // namespace pgcodes
