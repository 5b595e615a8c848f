#ifndef TAV_KNOTS_HPP
#define TAV_KNOTS_HPP

#include <map>

#include "tav/fpgroup.hpp"

namespace tav {

// Braid word on `strands` strands; letter +i / -i is sigma_i^{+-1}, 1 <= i < strands.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;
};

BraidWord braid_power(const BraidWord& b, int k);
std::vector<int> braid_permutation(const BraidWord& b); // position at top -> position at bottom

// Planar diagram over edge labels 0..nedges-1.  Each edge appears exactly once
// as an incoming slot and once as an outgoing slot; orientation is explicit in
// the slot names, sign is stored per crossing.
struct PDCrossing {
    int under_in = -1, under_out = -1, over_in = -1, over_out = -1;
    int sign = +1;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    int nedges = 0;
    int free_loops = 0;                 // crossingless unknot components
    std::map<int, int> updown;          // +1 up / -1 down, synthetic diagrams only
    std::vector<int> closure_edges;     // braid closures: per strand position
    std::vector<int> top_edges;         // braid closures: top edge per position

    void validate() const;              // incidence check, throws with the violation
    std::vector<std::vector<int>> components() const; // edge walks, one per component
};

PDCode braid_to_pd(const BraidWord& b);

// Sum of inter-component crossing signs between two components = 2 lk.
int linking_sign_sum(const PDCode& pd, int comp_a, int comp_b);

// Wirtinger presentation data: generators are arcs (edge classes merged across
// overpasses), one conjugation relator per crossing.
struct WirtingerData {
    Presentation pres;
    std::vector<int> arc_of_edge;
    std::vector<std::vector<int>> comps;  // edge walks
    std::vector<int> comp_of_edge;
    int arc_count = 0;
};

WirtingerData pd_wirtinger(const PDCode& pd);

// Preferred longitude of a component, as a word in the Wirtinger generators.
Word longitude_word(const PDCode& pd, const WirtingerData& w, int component);

// Insert an unknotted loop alpha around edges (arc_i, arc_j); the edges must
// carry opposite orientation tags (linking number 0).  Returns the component
// id of alpha via alpha_comp_edge (an edge on alpha).
struct EncircleResult {
    PDCode pd;
    int alpha_edge = -1;       // e1, the alpha arc carrying the meridian mark
    int split_i_mid = -1, split_i_head = -1;
    int split_j_mid = -1, split_j_head = -1;
};

EncircleResult encircle(const PDCode& pd, int edge_i, int edge_j);

// Marked presentation of a knot-or-link exterior group, with meridian and
// longitude marks; component 0 carries "meridian"/"longitude", others
// "meridianN"/"longitudeN".
Presentation link_presentation(const PDCode& pd);

// Torus knot group <u, v | u^p v^-q> with meridian u^s v^-r (sq - rp = 1)
// and longitude u^p mu^{-pq}.
Presentation torus_presentation(int p, int q);

// Satellite gluing: relators of both sides plus mu_J = lambda_alpha and
// lambda_J = mu_alpha.  `link` must carry alpha_meridian/alpha_longitude
// marks, `companion` meridian/longitude marks.  H1 = Z is asserted.
struct GluedPresentation {
    Presentation pres;
    int j_offset = 0;   // first generator index of the companion side
    int j_ngens = 0;
};
GluedPresentation satellite_glue(const Presentation& link, const Presentation& companion);

// The collapse homomorphism psi: G(K(alpha,J)) -> G(K) as a word map,
// given the satellite build data.
struct SatelliteBuild {
    PDCode base_pd;                    // D(K)
    WirtingerData base_w;              // presentation of G(K)
    PDCode link_pd;                    // D(K u alpha)
    WirtingerData link_w;              // presentation of G(K u alpha) + alpha marks
    Presentation j_pres;               // companion presentation
    GluedPresentation glued;
    std::vector<int> link_arc_to_base_arc; // -1 on alpha arcs
    Word alpha_in_base;                // [alpha] = lambda_alpha as a base word
    std::vector<long> j_phi;           // abelianization of the companion
};

// Build K(alpha, J) from a base braid closure: encircle the closure edge and a
// column edge so that the alpha class maps where the caller wants it; the
// chooser is value-driven (see alpha_chooser in twisted).
SatelliteBuild satellite_from_braid(const BraidWord& base, int column_edge_index,
                                    const Presentation& companion);

// psi as one word (in base generators) per glued generator.
std::vector<Word> collapse_pattern(const SatelliteBuild& sb);

// Candidate (column edge, closure edge) encircle placements for a braid
// closure diagram, in deterministic order.
std::vector<int> encircle_candidates(const PDCode& pd);

} // namespace tav

#endif
