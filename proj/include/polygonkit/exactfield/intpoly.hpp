#pragma once

#include "polygonkit/exactfield/field.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polygonkit {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
class IntPoly {
public:
    explicit IntPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static IntPoly constant(std::size_t nvars, const mpz_class& c);
    static IntPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const mpz_class& c);
    mpz_class coefficient(const Exponents& e) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& c) const;
    IntPoly pow(unsigned e) const;

    /// Substitutes variable `index` := 0.
    IntPoly without_variable(std::size_t index) const;
    /// Substitutes variable `index` := replacement.
    IntPoly substitute(std::size_t index, const IntPoly& replacement) const;

    std::string str() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

private:
    std::size_t nvars_;
    std::map<Exponents, mpz_class> terms_;
};

/// Polynomial over F_p with coefficients in [0, p).
class ModPoly {
public:
    ModPoly(std::uint64_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    std::uint64_t prime() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }
    void add_term(const Exponents& e, std::uint64_t c);

    /// Evaluates at field elements; the field must have characteristic p.
    Fe evaluate(const Field& field, const std::vector<Fe>& values) const;

    std::string str() const;
    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::uint64_t p_;
    std::size_t nvars_;
    std::map<Exponents, std::uint64_t> terms_;
};

/// (poly / p) mod p, coefficientwise. Throws std::domain_error naming the first
/// coefficient not divisible by p.
ModPoly reduce_poly_mod_p_after_division(const IntPoly& poly, std::uint64_t p);

/// Reduction mod p without division.
ModPoly reduce_poly_mod_p(const IntPoly& poly, std::uint64_t p);

/// The power sum p_m = sum t_i^m of `nvars` variables written in the elementary
/// symmetric polynomials e_1..e_r, r = min(m, nvars); variable j of the result is e_{j+1}.
IntPoly power_sum_in_elementary(unsigned m, unsigned nvars);

}  // namespace polygonkit
