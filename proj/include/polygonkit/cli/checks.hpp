#pragma once

#include "polygonkit/exactfield/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polygonkit {

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CocycleCheckReport {
    std::string cocycle;
    FieldSpec field;
    int n = 0;
    std::uint64_t seed = 0;
    unsigned resamples = 0;
    std::vector<NamedCheck> checks;
    bool pass() const;
};

/// Checks a cocycle on the P-simplex at one generic point.
///   bilinear            vanishing on g-vector and random permitted pairs, kernel dimension one,
///                       proportionality of the kernel to the closed-form coefficients
///   h2, h3, general:p:k coboundary zero and nontrivial (bipolynomial flavor of degree p^k)
///   hepta5              (n = 3) consistency with three-term dependences, alternating sum over the
///                       seven 5-simplices, distinct witness values, extension to permitted spaces,
///                       nontriviality in the symmetric-bilinear and quadratic flavors
/// Throws std::invalid_argument for an unknown name or an incompatible (field, n).
CocycleCheckReport cocycle_check(const std::string& cocycle, const FieldSpec& spec, int n, std::uint64_t seed);

}  // namespace polygonkit
