#include "polygonkit/exactfield/monomial.hpp"

#include <stdexcept>

namespace polygonkit {

namespace {

void enumerate(std::size_t nvars, unsigned degree, unsigned start, std::vector<unsigned>& current,
               std::vector<std::vector<unsigned>>& out) {
    if (current.size() == degree) {
        out.push_back(current);
        return;
    }
    for (unsigned v = start; v < nvars; ++v) {
        current.push_back(v);
        enumerate(nvars, degree, v, current, out);
        current.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
    std::vector<unsigned> current;
    enumerate(nvars, degree, 0, current, monomials_);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const std::vector<unsigned>& sorted_vars) const {
    auto it = index_.find(sorted_vars);
    if (it == index_.end()) throw std::out_of_range("monomial not in basis");
    return it->second;
}

std::size_t MonomialBasis::count(std::size_t nvars, unsigned degree) {
    if (nvars == 0) return degree == 0 ? 1 : 0;
    std::size_t c = 1;
    for (unsigned i = 1; i <= degree; ++i) c = c * (nvars - 1 + i) / i;
    return c;
}

}  // namespace polygonkit
