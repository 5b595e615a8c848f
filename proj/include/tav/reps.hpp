#ifndef TAV_REPS_HPP
#define TAV_REPS_HPP

#include <memory>

#include "tav/fingroup.hpp"
#include "tav/polymat.hpp"

namespace tav {

// Representation over a cyclotomic field, stored per group element.  Column
// convention throughout: matrices act on column vectors from the left, and
// permutation representations send e_x to e_{gx} (left multiplication), so
// rho(gh) = rho(g) rho(h).
class Representation {
public:
    enum class Kind { permutation, matrix };

    std::shared_ptr<const FiniteGroup> group;
    Kind kind = Kind::matrix;
    int dim = 0;
    std::uint64_t level = 1;
    std::vector<std::vector<int>> perms;        // permutation kind: image[x] per element
    std::vector<KMat<CyclotomicNum>> mats;      // matrix kind: matrix per element
    std::string label;

    const FiniteGroup& g() const { return *group; }
    KMat<CyclotomicNum> matrix_of(int x) const;
    bool is_identity_at(int x) const;

    // homomorphism property: full pair check for |G| <= 128, sampled above
    void verify() const;
};

Representation regular_rep(const FiniteGroup& g);
Representation trivial_rep(const FiniteGroup& g);
std::vector<Representation> one_dim_reps(const FiniteGroup& g);

// all irreducibles of D_n (order 2n): one-dimensional ones plus the 2-dim
// rho_k with rotation -> diag(zeta^k, zeta^-k), reflection -> antidiag(1,1)
std::vector<Representation> dihedral_irreps(int n);

// complete irreducible list for a metabelian Schmidt group with cyclic derived
// subgroup of prime-power order; throws naming the violated hypothesis
std::vector<Representation> schmidt_irreps(const FiniteGroup& h);

// the standard 2-dim irrep plus 1-dims for S_3 (used by the regular-rep
// factorization checks)
std::vector<Representation> s3_irreps();

std::vector<CyclotomicNum> character(const Representation& r); // per element
CyclotomicNum char_inner(const Representation& a, const Representation& b);
bool is_irreducible(const Representation& r);
bool is_faithful(const Representation& r);

// dimension and basis of {v : rho(n)v = v for all n in N}; N must be normal
std::pair<int, std::vector<std::vector<CyclotomicNum>>> fixed_subspace(const Representation& r,
                                                                       const Subgroup& n);

// exact multiset of orders of the eigenvalues of rho(g)
std::vector<int> eigenvalue_orders(const Representation& r, int g);

Representation tensor_with_char(const Representation& r, const Representation& eta);
Representation direct_sum(const std::vector<Representation>& rs);

} // namespace tav

#endif
