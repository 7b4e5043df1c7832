#include "polygonkit/exactfield/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polygonkit {

IntPoly IntPoly::constant(std::size_t nvars, const mpz_class& c) {
    IntPoly r(nvars);
    r.add_term(Exponents(nvars, 0), c);
    return r;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index");
    IntPoly r(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    r.add_term(e, 1);
    return r;
}

void IntPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class IntPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    IntPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

IntPoly IntPoly::operator*(const mpz_class& c) const {
    IntPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = constant(nvars_, 1);
    IntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

IntPoly IntPoly::without_variable(std::size_t index) const {
    IntPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[index] == 0) r.terms_.emplace(e, c);
    return r;
}

IntPoly IntPoly::substitute(std::size_t index, const IntPoly& replacement) const {
    IntPoly r(nvars_);
    std::map<unsigned, IntPoly> powers;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const unsigned d = rest[index];
        rest[index] = 0;
        IntPoly term(nvars_);
        term.add_term(rest, c);
        if (d > 0) {
            auto it = powers.find(d);
            if (it == powers.end()) it = powers.emplace(d, replacement.pow(d)).first;
            term = term * it->second;
        }
        r = r + term;
    }
    return r;
}

namespace {

std::string monomial_str(const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!first) os << "*";
        os << "v" << i;
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    return first ? "1" : os.str();
}

}  // namespace

std::string IntPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*" << monomial_str(e);
        first = false;
    }
    return os.str();
}

void ModPoly::add_term(const Exponents& e, std::uint64_t c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0) terms_.erase(it);
    }
}

Fe ModPoly::evaluate(const Field& field, const std::vector<Fe>& values) const {
    if (field.spec().characteristic != p_) throw std::invalid_argument("field characteristic mismatch");
    if (values.size() != nvars_) throw std::invalid_argument("value count mismatch");
    Fe acc = field.zero();
    for (const auto& [e, c] : terms_) {
        Fe t = field.from_int(static_cast<std::int64_t>(c));
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = field.mul(t, field.pow(values[i], e[i]));
        acc = field.add(acc, t);
    }
    return acc;
}

std::string ModPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c << "*" << monomial_str(e);
        first = false;
    }
    return os.str();
}

ModPoly reduce_poly_mod_p_after_division(const IntPoly& poly, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    const mpz_class mp(std::to_string(p));
    ModPoly out(p, poly.nvars());
    for (const auto& [e, c] : poly.terms()) {
        if (mpz_divisible_p(c.get_mpz_t(), mp.get_mpz_t()) == 0)
            throw std::domain_error("coefficient " + c.get_str() + " of " + monomial_str(e) + " is not divisible by " +
                                    std::to_string(p));
        mpz_class q = c / mp;
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), mp.get_mpz_t());
        out.add_term(e, std::stoull(r.get_str()));
    }
    return out;
}

ModPoly reduce_poly_mod_p(const IntPoly& poly, std::uint64_t p) {
    const mpz_class mp(std::to_string(p));
    ModPoly out(p, poly.nvars());
    for (const auto& [e, c] : poly.terms()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mp.get_mpz_t());
        out.add_term(e, std::stoull(r.get_str()));
    }
    return out;
}

IntPoly power_sum_in_elementary(unsigned m, unsigned nvars) {
    if (m == 0) throw std::invalid_argument("power sum degree must be positive");
    const unsigned r = std::min(m, nvars);
    // Newton: p_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j, with e_i = 0 for i > r.
    std::vector<IntPoly> ps(m + 1, IntPoly(r));
    auto e = [&](unsigned i) { return i <= r ? IntPoly::variable(r, i - 1) : IntPoly(r); };
    for (unsigned j = 1; j <= m; ++j) {
        IntPoly acc(r);
        for (unsigned i = 1; i < j && i <= r; ++i) {
            const IntPoly term = e(i) * ps[j - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        if (j <= r) {
            const IntPoly term = e(j) * mpz_class(j);
            acc = (j % 2 == 1) ? acc + term : acc - term;
        }
        ps[j] = std::move(acc);
    }
    return ps[m];
}

}  // namespace polygonkit
