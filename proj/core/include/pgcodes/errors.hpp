#pragma once

#include <stdexcept>
#include <string>

namespace pgcodes {

// Contract violations are exceptions. Search outcomes (timeout, exhaustion)
// are ordinary return values -- see SearchStatus.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error { using Error::Error; };
struct BadPolynomialError : Error { using Error::Error; };
struct NotPrimitiveError : Error { using Error::Error; };
struct GroupingInconsistentError : Error { using Error::Error; };
struct SamePointError : Error { using Error::Error; };
struct NotALineError : Error { using Error::Error; };
struct NotASpreadError : Error { using Error::Error; };
struct NotAParallelismError : Error { using Error::Error; };
struct UnexpectedStabilizerError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

enum class SearchStatus { Found, Exhausted, TimedOut };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::TimedOut: return "timed_out";
    }
    return "?";
}

}  // namespace pgcodes
