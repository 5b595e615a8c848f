#include <doctest.h>

#include "tav/knots.hpp"

using namespace tav;

namespace {

Presentation unknot_companion() {
    Presentation j;
    j.ngens = 1;
    j.names = {"x"};
    j.marks["meridian"] = Word{1};
    j.marks["longitude"] = Word{};
    return j;
}

} // namespace

TEST_CASE("braid basics") {
    BraidWord tre{2, {1, 1, 1}};
    auto perm = braid_permutation(tre);
    CHECK(perm == std::vector<int>{1, 0});
    BraidWord cubed = braid_power(tre, 3);
    CHECK(cubed.letters.size() == 9);
    CHECK(braid_permutation(cubed) == std::vector<int>{1, 0});
}

TEST_CASE("braid closure diagrams") {
    BraidWord tre{2, {1, 1, 1}};
    PDCode pd = braid_to_pd(tre);
    CHECK(pd.crossings.size() == 3);
    CHECK(pd.components().size() == 1);
    WirtingerData w = pd_wirtinger(pd);
    CHECK(w.arc_count == 3);
    CHECK(w.pres.relators.size() == 3);
    auto phi = knot_phi(w.pres);
    for (long v : phi) CHECK(v == 1);
    auto t = tietze_simplify(w.pres);
    CHECK(t.pres.ngens == 2);
    CHECK(t.pres.relators.size() == 1);

    // single positive kink closes to the unknot
    PDCode kink = braid_to_pd(BraidWord{2, {1}});
    CHECK(kink.components().size() == 1);
    auto uw = pd_wirtinger(kink);
    auto ut = tietze_simplify(uw.pres);
    CHECK(ut.pres.ngens == 1);
    CHECK(ut.pres.relators.empty());

    // crossingless strands close to free unknot components
    PDCode unlink = braid_to_pd(BraidWord{2, {}});
    CHECK(unlink.free_loops == 2);
    auto lw = pd_wirtinger(unlink);
    CHECK(lw.pres.ngens == 2);
    CHECK(lw.pres.relators.empty());

    PDCode t215 = braid_to_pd(BraidWord{2, std::vector<int>(15, 1)});
    CHECK(t215.components().size() == 1);
    CHECK(pd_wirtinger(t215).arc_count == 15);
}

TEST_CASE("longitudes") {
    BraidWord tre{2, {1, 1, 1}};
    PDCode pd = braid_to_pd(tre);
    WirtingerData w = pd_wirtinger(pd);
    Word lam = longitude_word(pd, w, 0);
    auto phi = knot_phi(w.pres);
    CHECK(phi_of_word(phi, lam) == 0);
    // longitude commutes with the meridian in finite quotients
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    std::vector<int> tr;
    for (int x = 0; x < 6; ++x)
        if (s3.order_of(x) == 2) tr.push_back(x);
    // Wirtinger images: propagate a valid assignment by brute force
    std::vector<int> images;
    for (int a : tr)
        for (int b : tr) {
            for (int c : tr) {
                std::vector<int> im{a, b, c};
                if (verify_hom(w.pres, s3, im) && subgroup_generated(s3, im).is_whole()) {
                    images = im;
                    break;
                }
            }
            if (!images.empty()) break;
        }
    REQUIRE(!images.empty());
    int lamv = word_eval(s3, lam, images);
    int muv = word_eval(s3, w.pres.marks.at("meridian"), images);
    CHECK(s3.mult(lamv, muv) == s3.mult(muv, lamv));

    Word ulam = longitude_word(braid_to_pd(BraidWord{2, {1}}),
                               pd_wirtinger(braid_to_pd(BraidWord{2, {1}})), 0);
    CHECK(ulam.empty());
}

TEST_CASE("encircling two antiparallel edges") {
    BraidWord tre{2, {1, 1, 1}};
    PDCode pd = braid_to_pd(tre);
    auto cols = encircle_candidates(pd);
    REQUIRE(!cols.empty());
    int closure = pd.closure_edges[1];
    REQUIRE(closure >= 0);
    EncircleResult enc = encircle(pd, cols.front(), closure);
    CHECK(enc.pd.crossings.size() == 7);
    auto comps = enc.pd.components();
    CHECK(comps.size() == 2);
    // lk(K, alpha) = 0 is checked inside encircle; recheck explicitly
    CHECK(linking_sign_sum(enc.pd, 0, 1) == 0);
    // same-orientation pair is rejected
    REQUIRE(cols.size() >= 2);
    CHECK_THROWS_AS((void)encircle(pd, cols[0], cols[1]), std::invalid_argument);
}

TEST_CASE("torus presentations") {
    Presentation t23 = torus_presentation(2, 3);
    auto phi = knot_phi(t23);
    CHECK(phi == std::vector<long>{3, 2});
    CHECK(phi_of_word(phi, t23.marks.at("meridian")) == 1);
    CHECK(phi_of_word(phi, t23.marks.at("longitude")) == 0);
    Presentation t35 = torus_presentation(3, 5);
    auto phi35 = knot_phi(t35);
    CHECK(phi_of_word(phi35, t35.marks.at("meridian")) == 1);
    CHECK(phi_of_word(phi35, t35.marks.at("longitude")) == 0);
    CHECK_THROWS_AS((void)torus_presentation(2, 4), std::invalid_argument);
}

TEST_CASE("satellite glue and collapse") {
    BraidWord tre{2, {1, 1, 1}};
    SatelliteBuild sb = satellite_from_braid(tre, encircle_candidates(braid_to_pd(tre)).front(),
                                             unknot_companion());
    // gluing in the unknot recovers a presentation of G(K): check hom transport
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    auto psi = collapse_pattern(sb);
    // find a surjective base hom by brute force over conjugate transpositions
    std::vector<int> tr;
    for (int x = 0; x < 6; ++x)
        if (s3.order_of(x) == 2) tr.push_back(x);
    std::vector<int> base_images;
    for (int a : tr) {
        for (int b : tr)
            for (int c : tr) {
                std::vector<int> im{a, b, c};
                if (verify_hom(sb.base_w.pres, s3, im) &&
                    subgroup_generated(s3, im).is_whole()) {
                    base_images = im;
                    break;
                }
            }
        if (!base_images.empty()) break;
    }
    REQUIRE(!base_images.empty());
    // f0 composed with psi is a valid hom of the satellite
    std::vector<int> glued_images(sb.glued.pres.ngens);
    for (int g = 0; g < sb.glued.pres.ngens; ++g)
        glued_images[g] = word_eval(s3, psi[g], base_images);
    CHECK(verify_hom(sb.glued.pres, s3, glued_images));
    // psi maps base-side generators to themselves (as base arcs)
    for (int a = 0; a < sb.link_w.arc_count; ++a) {
        int ba = sb.link_arc_to_base_arc[a];
        if (ba >= 0) CHECK(psi[a] == Word{ba + 1});
        else CHECK(psi[a].empty());
    }

    // a genuine companion: T(3,5) into T(2,15)
    BraidWord b215{2, std::vector<int>(15, 1)};
    SatelliteBuild k235 = satellite_from_braid(
        b215, encircle_candidates(braid_to_pd(b215)).front(), torus_presentation(3, 5));
    auto phi = knot_phi(k235.glued.pres);
    CHECK(phi_of_word(phi, k235.glued.pres.marks.at("meridian")) == 1);
    for (int j = 0; j < k235.glued.j_ngens; ++j) CHECK(phi[k235.glued.j_offset + j] == 0);
}

TEST_CASE("satellite glue requires marks") {
    Presentation nomarks;
    nomarks.ngens = 1;
    nomarks.names = {"x"};
    CHECK_THROWS_AS((void)satellite_glue(nomarks, unknot_companion()), std::invalid_argument);
}
