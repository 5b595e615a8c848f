#include <doctest.h>

#include "tav/homsearch.hpp"

using namespace tav;

TEST_CASE("hurwitz action basics") {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto t = hurwitz_act(s3, 1, {a, b});
            CHECK(t[0] == s3.mult(s3.mult(a, b), s3.inverse(a)));
            CHECK(t[1] == a);
            // sigma sigma^-1 = id
            CHECK(hurwitz_act(s3, -1, hurwitz_act(s3, 1, {a, b})) == std::vector<int>{a, b});
        }
    // braid relation on all tuples of S_3^3
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) {
                std::vector<int> t{a, b, c};
                auto lhs = hurwitz_act(s3, 1, hurwitz_act(s3, 2, hurwitz_act(s3, 1, t)));
                auto rhs = hurwitz_act(s3, 2, hurwitz_act(s3, 1, hurwitz_act(s3, 2, t)));
                CHECK(lhs == rhs);
            }
    // far commutation on 4-tuples (spot check)
    FiniteGroup c6 = from_spec(GroupSpec::cyclic(6));
    for (int a = 0; a < 6; ++a) {
        std::vector<int> t{a, (a + 1) % 6, (a + 2) % 6, (a + 3) % 6};
        CHECK(hurwitz_act(c6, 1, hurwitz_act(c6, 3, t)) ==
              hurwitz_act(c6, 3, hurwitz_act(c6, 1, t)));
    }
}

TEST_CASE("hurwitz fixed tuples") {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    BraidWord tre{2, {1, 1, 1}};
    auto fixed = hurwitz_fixed_tuples(tre, s3);
    CHECK(fixed.size() == 12); // 6 diagonal + 6 distinct-transposition pairs
    int diagonal = 0, transposition_pairs = 0;
    for (auto& t : fixed) {
        if (t[0] == t[1]) ++diagonal;
        else if (s3.order_of(t[0]) == 2 && s3.order_of(t[1]) == 2) ++transposition_pairs;
    }
    CHECK(diagonal == 6);
    CHECK(transposition_pairs == 6);

    auto fixed1 = hurwitz_fixed_tuples(BraidWord{2, {1}}, s3);
    CHECK(fixed1.size() == 6);
    for (auto& t : fixed1) CHECK(t[0] == t[1]);

    // fixed tuples of b are fixed tuples of b^3
    auto fixed3 = hurwitz_fixed_tuples(braid_power(tre, 3), s3);
    for (auto& t : fixed)
        CHECK(std::find(fixed3.begin(), fixed3.end(), t) != fixed3.end());
}

TEST_CASE("wirtinger hom enumeration") {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    BraidWord tre{2, {1, 1, 1}};
    WirtingerData w = pd_wirtinger(braid_to_pd(tre));
    HomConstraints epi;
    epi.surjective_only = true;
    auto epis = wirtinger_homs(w.pres, s3, epi);
    CHECK(epis.size() == 6);
    for (auto& h : epis) {
        CHECK(h.valid);
        CHECK(h.surjective);
        CHECK(verify_hom(w.pres, s3, h.images));
    }
    auto all = wirtinger_homs(w.pres, s3);
    CHECK(all.size() == 12);

    // unknot admits no surjection onto a nontrivial group
    WirtingerData uw = pd_wirtinger(braid_to_pd(BraidWord{2, {1}}));
    CHECK(wirtinger_homs(uw.pres, s3, epi).empty());

    // meridian image constraint: 3 homs extend x1 -> fixed transposition
    int t = -1;
    for (int x = 0; x < 6; ++x)
        if (s3.order_of(x) == 2) { t = x; break; }
    HomConstraints mc;
    mc.meridian_image = t;
    auto constrained = wirtinger_homs(w.pres, s3, mc);
    CHECK(constrained.size() == 3);
    for (auto& h : constrained) CHECK(h.images[w.pres.marks.at("meridian")[0] - 1] == t);

    // subgroup restriction: homs into A_3 are the diagonal-abelian ones
    Subgroup a3 = derived_subgroup(s3);
    HomConstraints sub;
    sub.within = a3.elems;
    auto inside = wirtinger_homs(w.pres, s3, sub);
    CHECK(inside.size() == 3);
    for (auto& h : inside)
        for (int v : h.images) CHECK(a3.contains(v));
}

TEST_CASE("fixed tuples equal wirtinger homs across braids and groups") {
    std::vector<BraidWord> braids = {
        {2, {1, 1, 1}}, {2, {1}}, {2, {1, 1, 1, 1, 1}}, {3, {1, 2}},
        {3, {1, 1, 2, 2}}, {3, {1, -2, 1, -2}},
    };
    std::vector<GroupSpec> groups = {GroupSpec::symmetric(3), GroupSpec::cyclic(6),
                                     GroupSpec::dihedral(4), GroupSpec::symmetric(4)};
    for (auto& b : braids)
        for (auto& spec : groups) {
            FiniteGroup g = from_spec(spec);
            WirtingerData w = pd_wirtinger(braid_to_pd(b));
            auto homs = wirtinger_homs(w.pres, g);
            auto fixed = hurwitz_fixed_tuples(b, g);
            CHECK(homs.size() == fixed.size());
        }
}

TEST_CASE("conjugacy seeding returns the same hom set") {
    FiniteGroup s4 = from_spec(GroupSpec::symmetric(4));
    BraidWord tre{2, {1, 1, 1}};
    WirtingerData w = pd_wirtinger(braid_to_pd(tre));
    auto plain = wirtinger_homs(w.pres, s4);
    HomConstraints seeded;
    seeded.conjugacy_seed = true;
    auto fast = wirtinger_homs(w.pres, s4, seeded);
    auto key = [](const Hom& h) { return h.images; };
    std::vector<std::vector<int>> a, b;
    for (auto& h : plain) a.push_back(key(h));
    for (auto& h : fast) b.push_back(key(h));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("transport along braid powers") {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    BraidWord tre{2, {1, 1, 1}};
    PDCode pd = braid_to_pd(tre);
    WirtingerData w = pd_wirtinger(pd);
    HomConstraints epi;
    epi.surjective_only = true;
    auto epis = wirtinger_homs(w.pres, s3, epi);
    REQUIRE(!epis.empty());
    BraidWord t29 = braid_power(tre, 3);
    PDCode pd9 = braid_to_pd(t29);
    WirtingerData w9 = pd_wirtinger(pd9);
    Hom moved = transport_hom(tre, 3, s3, pd, w, epis.front(), pd9, w9);
    CHECK(moved.valid);
    CHECK(moved.surjective);
    // identity transport: k = 1 reproduces the hom
    Hom same = transport_hom(tre, 1, s3, pd, w, epis.front(), pd, w);
    CHECK(same.images == epis.front().images);
}
