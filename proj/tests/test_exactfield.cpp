#include "doctest.h"

#include "polygonkit/exactfield/field.hpp"
#include "polygonkit/exactfield/generic_point.hpp"
#include "polygonkit/exactfield/intpoly.hpp"
#include "polygonkit/exactfield/linalg.hpp"
#include "polygonkit/exactfield/monomial.hpp"
#include "polygonkit/exactfield/rational.hpp"

#include <random>

using namespace polygonkit;

namespace {

// Schoolbook F_2[x] product reduced bit by bit; independent of the library's folding.
std::uint64_t gf2_mul_oracle(std::uint64_t a, std::uint64_t b, unsigned k, const std::vector<std::uint32_t>& low) {
    std::uint64_t modulus_low = 0;
    for (unsigned i = 0; i < k; ++i)
        if (low[i]) modulus_low |= std::uint64_t{1} << i;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
        if ((b >> i) & 1) r ^= a;
        const bool carry = (a >> (k - 1)) & 1;
        a = (a << 1) & ((k == 64) ? ~0ULL : ((std::uint64_t{1} << k) - 1));
        if (carry) a ^= modulus_low;
    }
    return r;
}

// Odd-characteristic extension multiply via explicit digit vectors.
std::vector<std::uint64_t> ext_mul_oracle(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                          std::uint64_t p, const std::vector<std::uint32_t>& low) {
    const unsigned k = static_cast<unsigned>(low.size());
    std::vector<std::uint64_t> r(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) r[j] = (r[j] + a[j] * b[i]) % p;
        // a := a * x mod f
        const std::uint64_t top = a[k - 1];
        for (unsigned j = k - 1; j > 0; --j) a[j] = a[j - 1];
        a[0] = 0;
        for (unsigned j = 0; j < k; ++j) a[j] = (a[j] + top * (p - low[j])) % p;
    }
    return r;
}

std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, unsigned k) {
    const unsigned bits = static_cast<unsigned>(std::bit_width(p - 1));
    std::vector<std::uint64_t> d(k);
    for (unsigned i = 0; i < k; ++i) d[i] = (v >> (i * bits)) & ((std::uint64_t{1} << bits) - 1);
    return d;
}

void check_axioms(const Field& f, unsigned trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const Fe a = f.random(rng), b = f.random(rng), c = f.random(rng);
        REQUIRE(f.add(a, f.neg(a)) == f.zero());
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.sub(f.add(a, b), b) == a);
        if (!f.is_zero(a)) REQUIRE(f.mul(a, f.inv(a)) == f.one());
    }
}

}  // namespace

TEST_CASE("make_field validates its arguments") {
    CHECK(make_field(0, 1) == FieldSpec{0, 1});
    CHECK(make_field(2, 16) == FieldSpec{2, 16});
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(-5, 1), std::invalid_argument);
}

TEST_CASE("field axioms hold on random triples") {
    for (const FieldSpec spec : {FieldSpec{0, 1}, FieldSpec{2, 16}, FieldSpec{2, 32}, FieldSpec{2, 63}, FieldSpec{3, 13},
                                 FieldSpec{5, 9}, FieldSpec{7, 1}, FieldSpec{1000003, 1}, FieldSpec{13, 6}}) {
        CAPTURE(to_string(spec));
        check_axioms(Field(spec), 10000, 17);
    }
}

TEST_CASE("binary field multiplication matches a bitwise oracle") {
    for (unsigned k : {2u, 8u, 16u, 32u, 45u, 63u}) {
        Field f(FieldSpec{2, k});
        const auto low = irreducible_polynomial(2, k);
        std::mt19937_64 rng(k);
        for (int t = 0; t < 2000; ++t) {
            const Fe a = f.random(rng), b = f.random(rng);
            REQUIRE(f.mul(a, b).v == gf2_mul_oracle(a.v, b.v, k, low));
        }
    }
}

TEST_CASE("odd extension multiplication matches a digit-vector oracle") {
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 13}, {5, 9}, {7, 8}, {11, 6}, {3, 2}}) {
        Field f(FieldSpec{p, k});
        const auto low = irreducible_polynomial(p, k);
        std::mt19937_64 rng(p * 100 + k);
        for (int t = 0; t < 2000; ++t) {
            const Fe a = f.random(rng), b = f.random(rng);
            REQUIRE(digits(f.mul(a, b).v, p, k) == ext_mul_oracle(digits(a.v, p, k), digits(b.v, p, k), p, low));
        }
    }
}

TEST_CASE("multiplicative group order is p^k - 1") {
    std::mt19937_64 rng(3);
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 5}, {2, 10}, {5, 3}, {7, 2}}) {
        Field f(FieldSpec{p, k});
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= p;
        for (int t = 0; t < 20; ++t) CHECK(f.pow(f.random_nonzero(rng), q - 1) == f.one());
    }
}

TEST_CASE("recorded moduli agree with the irreducibility search") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        const unsigned k = default_extension_degree(p);
        CAPTURE(p);
        const auto low = irreducible_polynomial(p, k);
        CHECK(is_irreducible(p, low));
        Field f(FieldSpec{p, k});
        CHECK(f.log2_size() >= 20.0);
    }
}

TEST_CASE("irreducibility test agrees with root and factor counting for small degrees") {
    // Degree 2 and 3: irreducible iff no root.
    for (std::uint64_t p : {2, 3, 5}) {
        for (unsigned k : {2u, 3u}) {
            std::vector<std::uint32_t> c(k, 0);
            for (;;) {
                bool has_root = false;
                for (std::uint64_t x = 0; x < p; ++x) {
                    std::uint64_t v = 1;
                    for (unsigned i = k; i-- > 0;) v = (v * x + c[i]) % p;
                    if (v == 0) has_root = true;
                }
                CHECK(is_irreducible(p, c) == !has_root);
                unsigned i = 0;
                while (i < k && c[i] == p - 1) c[i++] = 0;
                if (i == k) break;
                ++c[i];
            }
        }
    }
}

TEST_CASE("rank and nullspace on small matrices") {
    Field f(FieldSpec{0, 1});
    CHECK(matrix_rank(f, identity(f, 2)) == 2);
    CHECK(matrix_rank(f, zeros(f, 3, 5)) == 0);
    CHECK(matrix_rank(f, MatrixOf<Field>()) == 0);
    CHECK(solve_nullspace(f, identity(f, 4)).rows() == 0);
    MatrixOf<Field> a;
    a.append_row({f.one(), f.neg(f.one())});
    const auto ns = solve_nullspace(f, a);
    REQUIRE(ns.rows() == 1);
    CHECK(ns(0, 0) == f.one());
    CHECK(ns(0, 1) == f.one());
}

TEST_CASE("rank is invariant under permutations and invertible multiplication") {
    for (const FieldSpec spec : {FieldSpec{2, 16}, FieldSpec{3, 10}, FieldSpec{0, 1}}) {
        Field f(spec);
        std::mt19937_64 rng(11);
        for (int t = 0; t < 30; ++t) {
            const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = rng() % 5;
            // Rank-k matrix as a product of r x k and k x c.
            auto u = zeros(f, r, k), v = zeros(f, k, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < k; ++j) u(i, j) = f.random(rng);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < c; ++j) v(i, j) = f.random(rng);
            const auto m = k ? multiply(f, u, v) : zeros(f, r, c);
            const auto rank = matrix_rank(f, m);
            CHECK(rank <= std::min({r, c, k}));
            auto p = zeros(f, r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) p(i, j) = f.random(rng);
            if (f.is_zero(determinant(f, p))) continue;
            CHECK(matrix_rank(f, multiply(f, p, m)) == rank);
            auto permuted = m;
            if (r > 1) permuted.swap_rows(0, r - 1);
            CHECK(matrix_rank(f, transpose(f, permuted)) == rank);
            const auto ns = solve_nullspace(f, m);
            CHECK(ns.rows() == c - rank);
            if (ns.rows()) CHECK(is_zero_matrix(f, multiply(f, m, transpose(f, ns))));
        }
    }
}

TEST_CASE("inverse and determinant over the rationals") {
    RationalField q;
    MatrixOf<RationalField> a(3, 3, 0);
    int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
    CHECK(determinant(q, a) == 18);
    CHECK(multiply(q, a, inverse(q, a)) == identity(q, 3));
}

TEST_CASE("generic points are deterministic and order independent") {
    const auto spec = make_field(2, 16);
    std::vector<std::string> ids;
    for (const char* letter : {"alpha", "beta", "gamma"})
        for (int q = 1; q <= 7; ++q) ids.push_back(std::string(letter) + std::to_string(q));
    const auto a = sample_generic_point(spec, ids, 1);
    CHECK(a.assignments().size() == 21);
    std::vector<std::string> reversed(ids.rbegin(), ids.rend());
    const auto b = sample_generic_point(spec, reversed, 1);
    CHECK(a.assignments() == b.assignments());
    const auto c = sample_generic_point(spec, ids, 2);
    CHECK(a.assignments() != c.assignments());
    const auto q = sample_generic_point(make_field(0, 1), {"mu_1_1"}, 7);
    CHECK(q.assignments().size() == 1);
    const auto lift = q.integer_value("mu_1_1");
    CHECK(lift >= -(std::int64_t{1} << 31));
    CHECK(lift < (std::int64_t{1} << 31));
    CHECK(q.value("mu_1_1") == q.field().from_int(lift));
    CHECK_THROWS_AS(sample_generic_point(spec, {}, 1), std::invalid_argument);
    CHECK(GenericPoint(make_field(2, 8), 1).warning().has_value());
    CHECK_FALSE(GenericPoint(make_field(2, 16), 1).warning().has_value());
}

TEST_CASE("reduce_poly_mod_p_after_division") {
    IntPoly f(2);  // variables x, y
    f.add_term({2, 2}, 2);
    f.add_term({1, 1}, 2);
    const auto r = reduce_poly_mod_p_after_division(f, 2);
    ModPoly expected(2, 2);
    expected.add_term({2, 2}, 1);
    expected.add_term({1, 1}, 1);
    CHECK(r == expected);

    IntPoly g(1);
    g.add_term({3}, 3);
    ModPoly g_expected(3, 1);
    g_expected.add_term({3}, 1);
    CHECK(reduce_poly_mod_p_after_division(g, 3) == g_expected);

    IntPoly h(1);
    h.add_term({1}, 1);
    h.add_term({0}, 2);
    CHECK_THROWS_AS(reduce_poly_mod_p_after_division(h, 2), std::domain_error);
}

TEST_CASE("reduction of p*q recovers q mod p for random integer polynomials") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int t = 0; t < 50; ++t) {
            IntPoly q(3);
            for (int term = 0; term < 6; ++term)
                q.add_term({static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4),
                            static_cast<unsigned>(rng() % 4)},
                           mpz_class(static_cast<long>(rng() % 2001) - 1000));
            CHECK(reduce_poly_mod_p_after_division(q * mpz_class(static_cast<unsigned long>(p)), p) ==
                  reduce_poly_mod_p(q, p));
        }
    }
}

TEST_CASE("Newton identities reproduce power sums numerically") {
    std::mt19937_64 rng(9);
    for (unsigned nv : {2u, 3u, 6u}) {
        for (unsigned m : {1u, 2u, 3u, 4u, 5u, 8u, 9u}) {
            std::vector<long> t(nv);
            for (auto& x : t) x = static_cast<long>(rng() % 21) - 10;
            // Elementary symmetric polynomials by the product expansion.
            std::vector<mpz_class> e(nv + 1, 0);
            e[0] = 1;
            for (long x : t)
                for (unsigned j = nv; j >= 1; --j) e[j] += e[j - 1] * x;
            mpz_class direct = 0;
            for (long x : t) {
                mpz_class pw = 1;
                for (unsigned j = 0; j < m; ++j) pw *= x;
                direct += pw;
            }
            const IntPoly pm = power_sum_in_elementary(m, nv);
            mpz_class via = 0;
            for (const auto& [ex, c] : pm.terms()) {
                mpz_class term = c;
                for (std::size_t j = 0; j < ex.size(); ++j)
                    for (unsigned r = 0; r < ex[j]; ++r) term *= e[j + 1];
                via += term;
            }
            CHECK(via == direct);
        }
    }
}

TEST_CASE("monomial bases and symmetric powers") {
    CHECK(MonomialBasis(3, 2).size() == 6);
    CHECK(MonomialBasis(6, 2).size() == 21);
    CHECK(MonomialBasis::count(6, 5) == 252);
    CHECK(MonomialBasis(6, 5).size() == 252);

    Field f(FieldSpec{0, 1});
    std::mt19937_64 rng(2);
    auto r = zeros(f, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = f.random(rng);
    const unsigned d = 3;
    const auto s = symmetric_power(f, r, d);
    const MonomialBasis small(2, d), big(3, d);
    std::vector<Fe> coeffs(small.size());
    for (auto& c : coeffs) c = f.random(rng);
    const auto pulled = row_times(f, coeffs, s);
    // Evaluate both forms at a random point.
    std::vector<Fe> z(3);
    for (auto& v : z) v = f.random(rng);
    std::vector<Fe> zs(2, f.zero());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) zs[i] = f.add(zs[i], f.mul(r(i, j), z[j]));
    auto eval = [&](const MonomialBasis& b, const std::vector<Fe>& c, const std::vector<Fe>& pt) {
        Fe acc = f.zero();
        for (std::size_t m = 0; m < b.size(); ++m) {
            Fe t = c[m];
            for (unsigned v : b.monomial(m)) t = f.mul(t, pt[v]);
            acc = f.add(acc, t);
        }
        return acc;
    };
    CHECK(eval(small, coeffs, zs) == eval(big, pulled, z));
}
