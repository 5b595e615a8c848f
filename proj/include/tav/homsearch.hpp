#ifndef TAV_HOMSEARCH_HPP
#define TAV_HOMSEARCH_HPP

#include <optional>

#include "tav/knots.hpp"

namespace tav {

struct Hom {
    std::vector<int> images; // one group element per generator
    bool valid = false;
    bool surjective = false;
};

struct HomConstraints {
    std::optional<int> meridian_image;   // force image of the meridian mark
    std::optional<std::vector<int>> within; // restrict images to this subgroup
    bool surjective_only = false;
    long node_cap = 20000000;            // DFS node budget
    bool conjugacy_seed = false;         // seed first branch at class reps, expand orbits
};

// Complete, deterministic enumeration of homomorphisms P -> G satisfying the
// constraints.  Unit propagation on relators with a single unassigned
// generator occurrence, then DFS in element-index order.
std::vector<Hom> wirtinger_homs(const Presentation& p, const FiniteGroup& g,
                                const HomConstraints& c = {});

// Hurwitz action of sigma_i^{+-1} on tuples over G.
std::vector<int> hurwitz_act(const FiniteGroup& g, int letter, std::vector<int> tuple);
std::vector<int> hurwitz_act_word(const FiniteGroup& g, const BraidWord& b,
                                  std::vector<int> tuple);

// All tuples fixed by the braid's Hurwitz action; |G|^strands must stay under
// the cap.
std::vector<std::vector<int>> hurwitz_fixed_tuples(const BraidWord& b, const FiniteGroup& g,
                                                   std::uint64_t cap = 100000000);

// Edge/arc values of a braid-closure diagram propagated from top-strand
// values; empty if the closure constraint fails.
std::vector<int> braid_arc_values(const BraidWord& b, const PDCode& pd, const WirtingerData& w,
                                  const FiniteGroup& g, const std::vector<int>& top_values);

// Transport a hom on closure(b) to closure(b^k) along the quotient map
// G(K_k) ->> G(K): the strand-top tuple is reused.
Hom transport_hom(const BraidWord& b, int k, const FiniteGroup& g, const PDCode& pd_b,
                  const WirtingerData& w_b, const Hom& hom, const PDCode& pd_bk,
                  const WirtingerData& w_bk);

} // namespace tav

#endif
