#pragma once

#include "polygonkit/exactfield/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polygonkit {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_identifier(const std::string& id);

/// Random values for named indeterminates.
///
/// Every identifier's value is a pure function of (spec, seed, attempt, identifier),
/// so values for identifiers introduced later (fresh vertices) are reproducible
/// and independent of query order. In characteristic 0 values are integers drawn
/// from [-2^31, 2^31); their residues modulo the surrogate prime are the field
/// elements.
class GenericPoint {
public:
    GenericPoint(FieldSpec spec, std::uint64_t seed, unsigned attempt = 0);

    const FieldSpec& spec() const { return field_.spec(); }
    const Field& field() const { return field_; }
    std::uint64_t seed() const { return seed_; }
    unsigned attempt() const { return attempt_; }

    /// Value of an identifier; assigned on first request.
    Fe value(const std::string& id) const;
    /// Integer lift of value(id); only meaningful in characteristic 0.
    std::int64_t integer_value(const std::string& id) const;

    const std::map<std::string, Fe>& assignments() const { return assignments_; }

    /// Same seed, next attempt: used to resample after a degenerate draw.
    GenericPoint resampled() const { return GenericPoint(field_.spec(), seed_, attempt_ + 1); }

    /// Non-empty when the field is small enough that generic rank is not reliable.
    std::optional<std::string> warning() const;

private:
    std::uint64_t stream(const std::string& id) const;

    Field field_;
    std::uint64_t seed_;
    unsigned attempt_;
    mutable std::map<std::string, Fe> assignments_;
};

/// Assigns every identifier in `indeterminates`. Throws std::invalid_argument if the list is empty.
GenericPoint sample_generic_point(const FieldSpec& spec, const std::vector<std::string>& indeterminates,
                                  std::uint64_t seed);

/// Runs `body(point)` with fresh attempts until it stops throwing DegeneratePoint.
/// Gives up after `max_attempts` draws by rethrowing; `resamples` receives the number of retries.
template <class Body>
auto with_resampling(const FieldSpec& spec, std::uint64_t seed, Body&& body, unsigned* resamples = nullptr,
                     unsigned max_attempts = 32) {
    for (unsigned attempt = 0;; ++attempt) {
        try {
            GenericPoint point(spec, seed, attempt);
            auto result = body(point);
            if (resamples) *resamples += attempt;
            return result;
        } catch (const DegeneratePoint&) {
            if (attempt + 1 >= max_attempts) throw;
        }
    }
}

}  // namespace polygonkit
