#ifndef CTP_RATIONAL_HPP
#define CTP_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ctp/error.hpp"

namespace ctp {

/// Exact rational arithmetic. All distances, costs and ratios in the library
/// are exact; floating point appears only in the Lambert-W numerics.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "3/2", "-1/3", "7", "0". Whitespace is not accepted; the denominator
/// must be positive after canonicalization.
inline Rat parseRat(const std::string& text) {
    if (text.empty()) fail(ErrorCode::IoError, "empty rational literal");
    for (char c : text) {
        if (!(c == '/' || c == '-' || (c >= '0' && c <= '9')))
            fail(ErrorCode::IoError, "bad rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        fail(ErrorCode::IoError, "bad rational literal: " + text);
    if (q.get_den() == 0) fail(ErrorCode::IoError, "zero denominator: " + text);
    q.canonicalize();
    return q;
}

/// Canonical "p/q" (or "p" when q == 1). gmpxx expression templates must be
/// materialized before formatting; taking the argument by value does that.
inline std::string ratStr(Rat q) {
    q.canonicalize();
    return q.get_str();
}

inline double ratToDouble(const Rat& q) { return q.get_d(); }

inline Rat ratOfLong(long n) { return Rat(n); }

}  // namespace ctp

#endif  // CTP_RATIONAL_HPP
