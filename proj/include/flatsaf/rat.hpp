#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace flatsaf {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }

// Grammar: RAT := '-'? digits ('/' digits)?
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

} // namespace flatsaf
