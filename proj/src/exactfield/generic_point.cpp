#include "polygonkit/exactfield/generic_point.hpp"

#include <random>

namespace polygonkit {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_identifier(const std::string& id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

GenericPoint::GenericPoint(FieldSpec spec, std::uint64_t seed, unsigned attempt)
    : field_(spec), seed_(seed), attempt_(attempt) {}

std::uint64_t GenericPoint::stream(const std::string& id) const {
    return splitmix64(splitmix64(seed_) ^ hash_identifier(id) ^ splitmix64(0x5eed0000ULL + attempt_));
}

std::int64_t GenericPoint::integer_value(const std::string& id) const {
    const std::uint64_t s = stream(id);
    return static_cast<std::int64_t>(static_cast<std::int32_t>(static_cast<std::uint32_t>(s >> 32)));
}

Fe GenericPoint::value(const std::string& id) const {
    if (auto it = assignments_.find(id); it != assignments_.end()) return it->second;
    Fe v;
    if (field_.is_surrogate()) {
        v = field_.from_int(integer_value(id));
    } else {
        std::mt19937_64 rng(stream(id));
        v = field_.random(rng);
    }
    assignments_.emplace(id, v);
    return v;
}

std::optional<std::string> GenericPoint::warning() const {
    if (!field_.is_surrogate() && field_.log2_size() < 16.0)
        return "field " + to_string(field_.spec()) + " has fewer than 2^16 elements; generic ranks may be underestimated";
    return std::nullopt;
}

GenericPoint sample_generic_point(const FieldSpec& spec, const std::vector<std::string>& indeterminates,
                                  std::uint64_t seed) {
    if (indeterminates.empty()) throw std::invalid_argument("no indeterminates to sample");
    GenericPoint point(spec, seed);
    for (const auto& id : indeterminates) point.value(id);
    return point;
}

}  // namespace polygonkit
