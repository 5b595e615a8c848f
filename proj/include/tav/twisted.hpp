#ifndef TAV_TWISTED_HPP
#define TAV_TWISTED_HPP

#include "tav/homsearch.hpp"
#include "tav/reps.hpp"

namespace tav {

// rho o f twisting data for a marked presentation
struct TwistSetup {
    Presentation pres;
    Representation rep;
    std::vector<int> images;    // f on generators
    std::vector<long> phi;      // abelianization, meridian-normalized
    int meridian_gen = -1;      // generator column eligible for removal
};

TwistSetup make_twist(const Presentation& p, const Representation& rep,
                      const std::vector<int>& images);

// Fox matrix with blocks Phi(dr_i/dx_j), Phi(g) = rho(f(g)) t^{phi(g)}.
PolyMatQ twist_matrix_q(const TwistSetup& ts);  // permutation representations
PolyMatC twist_matrix_c(const TwistSetup& ts);  // matrix representations

// Derivation d: values d(x_j) in V (x) Z[t^{+-1}], column vectors over the
// cyclotomic field.  d(uv) = d(u) + Phi(u) d(v).
struct DerivationCertificate {
    std::vector<std::vector<LaurentC>> vectors; // per generator, dim entries
    bool meridian_zero = false;
};

// symbolic re-verification: relators map to zero, the meridian to zero, and
// the derivation is nonzero
bool verify_certificate(const TwistSetup& ts, const DerivationCertificate& cert);

// Wada data for a deficiency-one presentation.
struct TwistedResult {
    LaurentQ numerator_q, denominator_q;       // permutation path
    LaurentC numerator_c, denominator_c;       // matrix path
    bool cyclotomic = false;
    int column_removed = -1;
    bool vanished = false;
    std::optional<DerivationCertificate> certificate;
    LaurentQ h0_q, h1_q;                       // twisted H0 order and H1 order
    LaurentC h0_c, h1_c;
};

struct WadaOptions {
    bool want_h1 = true;
    bool kernel_certificate = true;      // derive a certificate when vanished and small
    std::size_t kernel_cols_cap = 48;    // fraction-field kernel size budget
    const DerivationCertificate* hint = nullptr; // pre-verified vanishing certificate
    int threads = 0;
};

// Wada invariant: numerator = det with the meridian column block removed,
// denominator = det(Phi(x_j) - I).  Requires deficiency one.
TwistedResult wada_invariant(const TwistSetup& ts, const WadaOptions& opt = {});

// Vanishing decision on arbitrary presentations (deficiency <= 1 not needed):
// a full-column-rank probe of the meridian-deleted Fox matrix is a sound
// nonvanishing witness; vanishing is certified by an exact derivation.
struct VanishVerdict {
    enum class State { nonvanishing, vanishing, undecided } state = State::undecided;
    RankWitness witness;                          // nonvanishing case
    std::optional<DerivationCertificate> certificate; // vanishing case
};

VanishVerdict vanishing_probe(const TwistSetup& ts, const WadaOptions& opt = {});

// twisted H0 order: det(t rho(g1) - I) on the coinvariant space of
// f(ker phi), with g1 the image of a meridian
LaurentQ h0_order_q(const TwistSetup& ts);
LaurentC h0_order_c(const TwistSetup& ts);

// Classical Alexander polynomial (trivial representation H1 order).
LaurentQ alexander_polynomial(const Presentation& p);

// Prop 4.2 / 4.3 dichotomy for a satellite with lk(K, alpha) = 0.
//   factored:   vanishes iff the base invariant vanishes or Phi_d | Delta_J
//   unfactored: always vanishes
bool satellite_vanishing(const TwistSetup& base, const Presentation& companion, int d,
                         bool factored, int lk);

// Remark 4.4 variant for lk != 0: vanishes iff either side vanishes.
bool satellite_vanishing_linked(bool link_side_vanished, bool companion_side_vanished);

// Lemma 5.3 constructive pair: satellite of a braid-closure base with J = T(p,q),
// f_J meridians -> g, certificate built from the cyclotomic lift.
struct VanishingPair {
    SatelliteBuild build;
    TwistSetup twist;         // glued presentation with the glued hom
    DerivationCertificate certificate;
};

VanishingPair construct_vanishing_pair_cyclic(const FiniteGroup& g, const Representation& rep,
                                              int elem, const BraidWord& base,
                                              const std::vector<int>& f0_images);

// Lemma 5.4 constructive pair: companion (P_J, f_J) supplied by the caller with
// f_J(meridian) = h, f_J(longitude) = e; derivation d(u) = (rho(f(u)) - I) v0.
VanishingPair construct_vanishing_pair_weight(const FiniteGroup& g, const Representation& rep,
                                              const Subgroup& h_sub, int h_elem,
                                              const BraidWord& base,
                                              const std::vector<int>& f0_images,
                                              const Presentation& j_pres,
                                              const std::vector<int>& fj_images);

// Divisibility under braid powers: Delta_{closure(b)} divides
// Delta_{closure(b^k)} for the transported hom (regular representation).
bool braid_power_divisibility_check(const BraidWord& b, int k, const FiniteGroup& g,
                                    const Hom& hom);

// TAV order search on a satellite-built knot.
struct OrderSearchRow {
    std::uint64_t order = 0;
    std::string group;
    int epimorphisms = 0;
    int nonvanishing_witnessed = 0;
    bool vanishing_found = false;
    std::string stratum; // completeness annotation
};

struct OrderSearchReport {
    std::vector<OrderSearchRow> rows;
    std::uint64_t tav_order = 0;     // 0 = none found up to max_order
    std::string witness_group;
    bool complete = true;            // no unverified stratum below the answer
};

OrderSearchReport tav_order_search(const SatelliteBuild& sb, std::uint64_t max_order);

} // namespace tav

#endif
