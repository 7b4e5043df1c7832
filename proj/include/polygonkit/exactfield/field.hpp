#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polygonkit {

/// Characteristic and extension degree of a working field.
/// characteristic == 0 names the rationals; extension_degree is then 1.
struct FieldSpec {
    std::uint64_t characteristic = 0;
    unsigned extension_degree = 1;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Validates (characteristic, degree) and returns the spec.
/// Throws std::invalid_argument for a non-prime characteristic or k > 1 over Q.
FieldSpec make_field(std::int64_t characteristic, std::int64_t extension_degree);

/// Default extension degree for sampling generic points in characteristic p:
/// the field then has at least 2^20 elements (2^32 for p = 2).
unsigned default_extension_degree(std::uint64_t characteristic);

std::string to_string(const FieldSpec& spec);

/// Raised when a computation hits a non-generic parameter point
/// (a determinant that must be nonzero vanished).
class DegeneratePoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of a finite field, stored as a packed machine word:
/// residue for prime fields, bit vector over F_2, base-p digit vector otherwise.
struct Fe {
    std::uint64_t v = 0;
    friend bool operator==(Fe, Fe) = default;
};

/// Lexicographically smallest monic irreducible of degree k over F_p
/// (coefficients c_0..c_{k-1}; the leading 1 is implicit).
std::vector<std::uint32_t> irreducible_polynomial(std::uint64_t p, unsigned k);
bool is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& lower_coeffs);

/// Arithmetic context of a finite field F_{p^k}.
///
/// Characteristic-0 specs are evaluated in F_P with P = 2^61 - 1: the field
/// reports characteristic 0 through spec() while computing modulo P.
class Field {
public:
    using Elem = Fe;

    static constexpr std::uint64_t kSurrogatePrime = (std::uint64_t{1} << 61) - 1;

    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    /// Characteristic of the arithmetic actually performed (P for the surrogate).
    std::uint64_t modulus() const { return p_; }
    unsigned degree() const { return k_; }
    bool is_surrogate() const { return spec_.characteristic == 0; }
    /// log2 of the field size.
    double log2_size() const;

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe from_int(std::int64_t x) const;

    bool is_zero(Fe a) const { return a.v == 0; }
    bool is_one(Fe a) const { return a.v == 1; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    /// Throws std::domain_error for a == 0.
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::uint64_t e) const;

    Fe random(std::mt19937_64& rng) const;
    Fe random_nonzero(std::mt19937_64& rng) const;

    std::string str(Fe a) const;

private:
    enum class Kind { kMersenne, kPrime, kBinary, kExtension };

    Fe ext_mul(Fe a, Fe b) const;
    Fe ext_add(Fe a, Fe b, bool subtract) const;
    Fe bin_mul(Fe a, Fe b) const;

    FieldSpec spec_;
    Kind kind_;
    std::uint64_t p_ = 0;
    unsigned k_ = 1;
    unsigned digit_bits_ = 0;
    std::uint64_t digit_mask_ = 0;
    std::uint64_t bin_poly_ = 0;             // x^k + bin_poly_ for p = 2
    std::vector<std::uint32_t> ext_poly_;    // lower coefficients for odd p
    unsigned __int128 order_ = 0;            // p^k
};

}  // namespace polygonkit
