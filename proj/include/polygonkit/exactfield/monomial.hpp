#pragma once

#include "polygonkit/exactfield/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace polygonkit {

/// Homogeneous monomials of a fixed degree in `nvars` variables.
///
/// A monomial is a non-decreasing list of variable indices; monomials are
/// ordered lexicographically by that list, which is degree-lex order within a
/// fixed degree.
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, unsigned degree);

    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<unsigned>& monomial(std::size_t index) const { return monomials_[index]; }
    std::size_t index_of(const std::vector<unsigned>& sorted_vars) const;

    /// Number of degree-d monomials in m variables: binomial(m + d - 1, d).
    static std::size_t count(std::size_t nvars, unsigned degree);

private:
    std::size_t nvars_;
    unsigned degree_;
    std::vector<std::vector<unsigned>> monomials_;
    std::map<std::vector<unsigned>, std::size_t> index_;
};

/// Substitution matrix of a linear change of variables on degree-d forms.
///
/// `r` maps big coordinates to small ones (small = r * big, r is small x big).
/// Returns S with rows indexed by small-variable monomials and columns by
/// big-variable monomials such that the form with coefficient row c (small
/// variables) pulls back to the form with coefficient row c * S.
template <class F>
MatrixOf<F> symmetric_power(const F& f, const MatrixOf<F>& r, unsigned degree) {
    using E = typename F::Elem;
    const MonomialBasis small(r.rows(), degree), big(r.cols(), degree);
    auto out = zeros(f, small.size(), big.size());
    // Products of linear forms are memoized by their non-decreasing prefix.
    std::map<std::vector<unsigned>, std::map<std::vector<unsigned>, E>> cache;
    cache[{}] = {{std::vector<unsigned>{}, f.one()}};
    auto expand = [&](auto&& self, const std::vector<unsigned>& prefix) -> const std::map<std::vector<unsigned>, E>& {
        auto it = cache.find(prefix);
        if (it != cache.end()) return it->second;
        std::vector<unsigned> shorter(prefix.begin(), prefix.end() - 1);
        const auto& base = self(self, shorter);
        std::map<std::vector<unsigned>, E> result;
        const unsigned var = prefix.back();
        for (const auto& [mono, coef] : base) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                const E& rj = r(var, j);
                if (f.is_zero(rj)) continue;
                std::vector<unsigned> m = mono;
                m.insert(std::upper_bound(m.begin(), m.end(), static_cast<unsigned>(j)), static_cast<unsigned>(j));
                auto [pos, inserted] = result.emplace(m, f.mul(coef, rj));
                if (!inserted) pos->second = f.add(pos->second, f.mul(coef, rj));
            }
        }
        return cache.emplace(prefix, std::move(result)).first->second;
    };
    for (std::size_t s = 0; s < small.size(); ++s) {
        const auto& poly = expand(expand, small.monomial(s));
        for (const auto& [mono, coef] : poly)
            if (!f.is_zero(coef)) out(s, big.index_of(mono)) = coef;
    }
    return out;
}

/// Kronecker product a (x) b.
template <class F>
MatrixOf<F> kronecker(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
    auto out = zeros(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (f.is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
        }
    return out;
}

}  // namespace polygonkit
