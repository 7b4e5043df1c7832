#pragma once

#include "polygonkit/cohomology/cochain.hpp"
#include "polygonkit/exactfield/intpoly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace polygonkit {

/// Incidence symbol between the d-simplex q and its face iq of the P-simplex (+1/-1).
int epsilon_symbol(int i, int q);
/// Companion sign entering the coefficients c_iq.
int eta_symbol(int i, int q);

Fe field_sign(const Field& f, int sign);

/// Coefficients c_v of the bilinear (2n-2)-cochain (x_v, y_v) -> c_v x_v y_v, per face v.
struct BilinearCocycle {
    int n = 0;
    std::map<Simplex, Fe> coefficients;
    Fe at(const Simplex& face) const;
};

/// eta_i^(q) / prod_{j != i,q} d_{jiq}. Throws DegeneratePoint on a vanishing denominator.
Fe cip_coefficient(const PrimalParameters& params, int i, int q);

/// c_iq on the faces of the P-simplex.
/// Throws DegeneratePoint on a vanishing denominator.
BilinearCocycle bilinear_2n2_cocycle(const PrimalParameters& params);

/// c_v = sigma_v / prod_{j in v} p_{v minus j} on every (2n-2)-face of `complex`.
/// In characteristic 2 every sigma_v is 1; otherwise sigma is read off the one-dimensional kernel of
/// delta on bilinear (2n-2)-cochains (normalized to sigma = 1 on the first face) and a kernel of any
/// other dimension is an error (std::runtime_error).
BilinearCocycle dual_bilinear_cocycle(const DualParameters& params, const PermittedSpaces& spaces);

/// Basis of the bilinear (2n-2)-cocycles of the complex, one row per cocycle over
/// spaces.simplices(2n-1).
MatrixOf<Field> bilinear_cocycle_kernel(const PermittedSpaces& spaces);

/// <x, y>_{2n-2}^(q) = sum_{i != q} eps_i^(q) c_iq x_iq y_iq; colors listed over the faces of the
/// d-simplex q in lexicographic order.
Fe scalar_product_2n2(const Field& f, const BilinearCocycle& c, int q, const std::vector<Fe>& x,
                      const std::vector<Fe>& y);

/// Per d-simplex data entering the lifted cocycles: faces in lexicographic order, their incidence
/// signs eps_v = -o_w (-1)^j (j the 0-based position of the vertex omitted from w), and c_v.
struct LocalCocycleData {
    Simplex w;
    std::vector<Simplex> faces;
    std::vector<int> epsilon;
    std::vector<Fe> c;
};

LocalCocycleData local_data(const BilinearCocycle& c, const Simplex& w, int orientation = 1);

/// sum over multisets alpha of face indices of coef_alpha * prod_{v in alpha} x_v y_v.
using FaceBipolynomial = std::map<std::vector<unsigned>, Fe>;

Fe evaluate(const Field& f, const FaceBipolynomial& poly, const std::vector<Fe>& x, const std::vector<Fe>& y);

/// Closed form for (p, k) = (2, 1).
FaceBipolynomial h2_cocycle(const Field& f, const LocalCocycleData& d);
/// Closed form for (p, k) = (3, 1).
FaceBipolynomial h3_cocycle(const Field& f, const LocalCocycleData& d);

/// The (2n-1)-cocycle obtained from c_v x_v y_v by raising to m = p^k, taking delta, dividing by p
/// and reducing mod p, written through Newton's identities in t_v = eps_v c_v x_v y_v.
class LiftedCocycle {
public:
    /// `faces` is the number of faces of a d-simplex (2n). Throws std::domain_error if some
    /// coefficient is not divisible by p.
    LiftedCocycle(std::uint64_t p, unsigned k, std::size_t faces);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned m() const { return m_; }
    /// (p_m(t) with e_1 = 0) / p mod p, as a polynomial in t_1..t_faces.
    const ModPoly& symmetric_part() const { return g_; }

    /// Value on one d-simplex; for p = 2 includes sum eps~_v t_v^m. The field must have characteristic p.
    FaceBipolynomial on(const Field& f, const LocalCocycleData& d) const;
    /// The same as a polynomial in t (p = 2 needs the incidence signs).
    ModPoly in_t(const std::vector<int>& epsilon) const;

    std::string name() const;

private:
    std::uint64_t p_;
    unsigned k_;
    unsigned m_;
    std::size_t faces_;
    ModPoly g_;
};

/// sum_v eps_v^{m+1} t_v^m with t_last = -(t_1 + ... + t_{N-1}) expanded over Z, divided by p and
/// reduced: the lifted cocycle on the hyperplane sum t = 0 in the first N-1 variables.
ModPoly lifted_by_substitution(std::uint64_t p, unsigned k, const std::vector<int>& epsilon);

/// Coordinates of a per-simplex cochain in a cochain space on the P-simplex complex: `value(w)` is
/// pulled back along each simplex's permitted basis. Bipolynomial spaces need degree m; polynomial
/// spaces of degree 2m take the restriction y = x.
std::vector<Fe> cochain_vector(const PermittedSpaces& spaces, const CochainSpace& space,
                               const std::function<FaceBipolynomial(const Simplex&)>& value);

enum class Triviality { kTrivial, kNontrivial };
std::string to_string(Triviality t);

/// z * delta_out == 0.
bool is_cocycle(const PermittedSpaces& spaces, const CochainSpace& space, const std::vector<Fe>& z);

/// Whether z lies in the image of delta from the previous degree. Throws std::invalid_argument
/// if z is not a cocycle.
Triviality triviality_test(const PermittedSpaces& spaces, const CochainSpace& space, const std::vector<Fe>& z);

}  // namespace polygonkit
