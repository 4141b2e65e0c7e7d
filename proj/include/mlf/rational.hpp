#pragma once

#include <gmpxx.h>

#include <string>

#include "mlf/errors.hpp"

namespace mlf {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) through all arithmetic.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw validation_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "12", "-3", "7/2", "-7/2".
inline Rat parse_rat(const std::string& tok) {
    if (tok.empty()) throw validation_error("empty rational token");
    std::size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(mpz_class(tok));
            return r;
        }
        std::string num = tok.substr(0, slash);
        std::string den = tok.substr(slash + 1);
        if (num.empty() || den.empty())
            throw validation_error("malformed rational '" + tok + "'");
        Rat r(mpz_class(num), mpz_class(den));
        if (r.get_den() == 0)
            throw validation_error("zero denominator in '" + tok + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed rational '" + tok + "'");
    }
}

inline std::string format_rat(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rat& r) { return sgn(r); }

inline double to_double(const Rat& r) { return r.get_d(); }

} // namespace mlf
