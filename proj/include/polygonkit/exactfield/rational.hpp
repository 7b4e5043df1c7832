#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polygonkit {

/// Exact arithmetic on Q, shaped like Field so the templated linear algebra applies.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t x) const { return mpq_class(mpz_class(std::to_string(x))); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    std::string str(const Elem& a) const { return a.get_str(); }
};

}  // namespace polygonkit
