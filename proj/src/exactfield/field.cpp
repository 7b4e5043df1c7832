#include "polygonkit/exactfield/field.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace polygonkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Dense polynomials over F_p, lowest coefficient first, used only for the
// irreducibility search.
using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = powmod(f.back(), p - 2, p);
    while (a.size() > df) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly a, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    a = poly_mod(std::move(a), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, f, p);
        a = poly_mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

u128 clmul64(u64 a, u64 b) {
    u128 r = 0;
    for (unsigned i = 0; i < 64 && b; ++i, b >>= 1)
        if (b & 1) r ^= static_cast<u128>(a) << i;
    return r;
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse4.1"))) u128 clmul64_hw(u64 a, u64 b) {
    const __m128i x = _mm_set_epi64x(0, static_cast<long long>(a));
    const __m128i y = _mm_set_epi64x(0, static_cast<long long>(b));
    const __m128i z = _mm_clmulepi64_si128(x, y, 0x00);
    const u64 lo = static_cast<u64>(_mm_extract_epi64(z, 0));
    const u64 hi = static_cast<u64>(_mm_extract_epi64(z, 1));
    return (static_cast<u128>(hi) << 64) | lo;
}

const bool kHasPclmul = __builtin_cpu_supports("pclmul");
#endif

inline u128 carryless(u64 a, u64 b) {
#if defined(__x86_64__)
    if (kHasPclmul) return clmul64_hw(a, b);
#endif
    return clmul64(a, b);
}

// Recorded moduli for the default sampling fields; the test suite re-derives
// each entry with the search below.
const std::map<std::pair<u64, unsigned>, std::vector<std::uint32_t>>& recorded_moduli() {
    static const std::map<std::pair<u64, unsigned>, std::vector<std::uint32_t>> table = {
#include "irreducibles.inc"
    };
    return table;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec make_field(std::int64_t characteristic, std::int64_t extension_degree) {
    if (characteristic < 0) throw std::invalid_argument("negative characteristic");
    if (extension_degree < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (characteristic == 0) {
        if (extension_degree != 1)
            throw std::invalid_argument("characteristic 0 admits no extension degree > 1");
        return FieldSpec{0, 1};
    }
    const auto p = static_cast<u64>(characteristic);
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= (u64{1} << 62)) throw std::invalid_argument("characteristic too large");
    if (extension_degree > 1) {
        const unsigned bits = static_cast<unsigned>(std::bit_width(p - 1));
        if (p == 2 && extension_degree > 63) throw std::invalid_argument("F_{2^k} supports k <= 63");
        if (p > 2 && (p >= (1u << 16) || bits * extension_degree > 64))
            throw std::invalid_argument("extension field too large for a packed word");
    }
    return FieldSpec{p, static_cast<unsigned>(extension_degree)};
}

unsigned default_extension_degree(std::uint64_t characteristic) {
    if (characteristic == 0) return 1;
    if (characteristic == 2) return 32;
    unsigned k = 1;
    u128 q = characteristic;
    while (q < (u128{1} << 20)) {
        q *= characteristic;
        ++k;
    }
    return k;
}

std::string to_string(const FieldSpec& spec) {
    if (spec.characteristic == 0) return "Q";
    std::ostringstream os;
    os << "F_" << spec.characteristic;
    if (spec.extension_degree > 1) os << "^" << spec.extension_degree;
    return os.str();
}

bool is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& lower) {
    const unsigned k = static_cast<unsigned>(lower.size());
    if (k == 0) return false;
    Poly f(lower.begin(), lower.end());
    f.push_back(1);
    if (k == 1) return true;
    if (f[0] == 0) return false;
    // Ben-Or: f is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= k/2.
    Poly xp{0, 1};
    for (unsigned i = 1; i <= k / 2; ++i) {
        xp = poly_powmod(xp, p, f, p);
        Poly g = xp;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        if (g.empty()) return false;
        if (poly_gcd(f, g, p).size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> irreducible_polynomial(std::uint64_t p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, std::vector<std::uint32_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
    std::vector<std::uint32_t> c(k, 0);
    // Enumerate lower coefficients as base-p numbers c_0 + c_1 p + ... in increasing order.
    for (;;) {
        if (is_irreducible(p, c)) break;
        unsigned i = 0;
        while (i < k && c[i] == p - 1) c[i++] = 0;
        if (i == k) throw std::logic_error("no irreducible polynomial found");
        ++c[i];
    }
    cache[{p, k}] = c;
    return c;
}

Field::Field(FieldSpec spec) : spec_(spec) {
    spec_ = make_field(static_cast<std::int64_t>(spec.characteristic), spec.extension_degree);
    if (spec_.characteristic == 0) {
        kind_ = Kind::kMersenne;
        p_ = kSurrogatePrime;
        k_ = 1;
        order_ = p_;
        return;
    }
    p_ = spec_.characteristic;
    k_ = spec_.extension_degree;
    order_ = 1;
    for (unsigned i = 0; i < k_; ++i) order_ *= p_;
    if (k_ == 1) {
        kind_ = Kind::kPrime;
        return;
    }
    const auto& rec = recorded_moduli();
    auto it = rec.find({p_, k_});
    const std::vector<std::uint32_t> lower = it != rec.end() ? it->second : irreducible_polynomial(p_, k_);
    if (p_ == 2) {
        kind_ = Kind::kBinary;
        bin_poly_ = 0;
        for (unsigned i = 0; i < k_; ++i)
            if (lower[i]) bin_poly_ |= u64{1} << i;
        digit_mask_ = k_ == 64 ? ~u64{0} : ((u64{1} << k_) - 1);
        return;
    }
    kind_ = Kind::kExtension;
    ext_poly_ = lower;
    digit_bits_ = static_cast<unsigned>(std::bit_width(p_ - 1));
    digit_mask_ = (u64{1} << digit_bits_) - 1;
}

double Field::log2_size() const {
    double r = 0;
    for (unsigned i = 0; i < k_; ++i) r += std::log2(static_cast<double>(p_));
    return r;
}

Fe Field::from_int(std::int64_t x) const {
    const u64 p = p_;
    u64 r;
    if (x >= 0) {
        r = static_cast<u64>(x) % p;
    } else {
        const u64 m = static_cast<u64>(-(x + 1)) % p;  // avoids overflow at INT64_MIN
        r = (p - 1 - m) % p;
    }
    return Fe{r};
}

Fe Field::add(Fe a, Fe b) const {
    switch (kind_) {
        case Kind::kMersenne:
        case Kind::kPrime: {
            u64 s = a.v + b.v;
            if (s >= p_ || s < a.v) s -= p_;
            return Fe{s};
        }
        case Kind::kBinary:
            return Fe{a.v ^ b.v};
        case Kind::kExtension:
            return ext_add(a, b, false);
    }
    return Fe{};
}

Fe Field::sub(Fe a, Fe b) const {
    switch (kind_) {
        case Kind::kMersenne:
        case Kind::kPrime:
            return Fe{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
        case Kind::kBinary:
            return Fe{a.v ^ b.v};
        case Kind::kExtension:
            return ext_add(a, b, true);
    }
    return Fe{};
}

Fe Field::neg(Fe a) const { return sub(zero(), a); }

Fe Field::mul(Fe a, Fe b) const {
    switch (kind_) {
        case Kind::kMersenne: {
            const u128 prod = static_cast<u128>(a.v) * b.v;
            u64 s = (static_cast<u64>(prod) & kSurrogatePrime) + static_cast<u64>(prod >> 61);
            s = (s & kSurrogatePrime) + (s >> 61);
            if (s >= kSurrogatePrime) s -= kSurrogatePrime;
            return Fe{s};
        }
        case Kind::kPrime:
            return Fe{mulmod(a.v, b.v, p_)};
        case Kind::kBinary:
            return bin_mul(a, b);
        case Kind::kExtension:
            return ext_mul(a, b);
    }
    return Fe{};
}

Fe Field::bin_mul(Fe a, Fe b) const {
    u128 r = carryless(a.v, b.v);
    // Fold the bits above degree k back using x^k = bin_poly_.
    while (r >> k_) {
        const u128 hi = r >> k_;
        r &= digit_mask_;
        const u64 hlo = static_cast<u64>(hi);
        const u64 hhi = static_cast<u64>(hi >> 64);
        r ^= carryless(hlo, bin_poly_);
        if (hhi) r ^= carryless(hhi, bin_poly_) << 64;
    }
    return Fe{static_cast<u64>(r)};
}

Fe Field::ext_add(Fe a, Fe b, bool subtract) const {
    u64 out = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const unsigned sh = i * digit_bits_;
        const u64 x = (a.v >> sh) & digit_mask_;
        const u64 y = (b.v >> sh) & digit_mask_;
        u64 s = subtract ? (x + p_ - y) : (x + y);
        if (s >= p_) s -= p_;
        out |= s << sh;
    }
    return Fe{out};
}

Fe Field::ext_mul(Fe a, Fe b) const {
    u64 x[64], y[64], prod[128] = {};
    for (unsigned i = 0; i < k_; ++i) {
        x[i] = (a.v >> (i * digit_bits_)) & digit_mask_;
        y[i] = (b.v >> (i * digit_bits_)) & digit_mask_;
    }
    for (unsigned i = 0; i < k_; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] += x[i] * y[j];
    }
    for (unsigned t = 2 * k_ - 2; t >= k_; --t) {
        const u64 c = prod[t] % p_;
        if (c) {
            for (unsigned j = 0; j < k_; ++j) prod[t - k_ + j] += c * (p_ - ext_poly_[j]);
        }
    }
    u64 out = 0;
    for (unsigned i = 0; i < k_; ++i) out |= (prod[i] % p_) << (i * digit_bits_);
    return Fe{out};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    Fe r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fe Field::inv(Fe a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    if (kind_ == Kind::kMersenne || kind_ == Kind::kPrime) return Fe{powmod(a.v, p_ - 2, p_)};
    // a^(q-2), q = p^k; q - 2 may exceed 64 bits only for huge fields we reject.
    const u128 e = order_ - 2;
    Fe r = one();
    Fe base = a;
    u128 ee = e;
    while (ee) {
        if (ee & 1) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

Fe Field::random(std::mt19937_64& rng) const {
    switch (kind_) {
        case Kind::kMersenne:
        case Kind::kPrime:
            return Fe{std::uniform_int_distribution<u64>(0, p_ - 1)(rng)};
        case Kind::kBinary:
            return Fe{rng() & digit_mask_};
        case Kind::kExtension: {
            std::uniform_int_distribution<u64> d(0, p_ - 1);
            u64 out = 0;
            for (unsigned i = 0; i < k_; ++i) out |= d(rng) << (i * digit_bits_);
            return Fe{out};
        }
    }
    return Fe{};
}

Fe Field::random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        Fe a = random(rng);
        if (!is_zero(a)) return a;
    }
}

std::string Field::str(Fe a) const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::kMersenne:
        case Kind::kPrime:
            os << a.v;
            break;
        case Kind::kBinary:
            os << "0x" << std::hex << a.v;
            break;
        case Kind::kExtension: {
            os << "[";
            for (unsigned i = 0; i < k_; ++i) os << (i ? "," : "") << ((a.v >> (i * digit_bits_)) & digit_mask_);
            os << "]";
            break;
        }
    }
    return os.str();
}

}  // namespace polygonkit
