#include <doctest.h>

#include "tav/fpgroup.hpp"

using namespace tav;

namespace {

Presentation pres(const std::string& text) { return parse_presentation(text); }

GroupRingElem ring_of(const Presentation& p, std::initializer_list<std::pair<const char*, int>> t) {
    GroupRingElem e;
    for (auto& [w, c] : t) e.add(p.parse_word(w), c);
    return e;
}

} // namespace

TEST_CASE("words") {
    Word w = free_reduce({1, 2, -2, -1, 1});
    CHECK(w == Word{1});
    CHECK(word_mul({1, 2}, {-2, 3}) == Word{1, 3});
    CHECK(word_inv({1, -2}) == Word{2, -1});
    CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
    CHECK(exponent_sum({1, 2, -1}, 0) == 0);
    CHECK(exponent_sum({1, 2, -1}, 1) == 1);
    CHECK(word_eval(from_spec(GroupSpec::cyclic(5)), {}, {1}) == 0);
}

TEST_CASE("fox derivatives") {
    Presentation p = pres("gens: x y\n");
    CHECK(fox_derivative(p.parse_word("x"), 0).terms ==
          ring_of(p, {{"1", 1}}).terms);
    CHECK(fox_derivative(p.parse_word("X"), 0).terms ==
          ring_of(p, {{"X", -1}}).terms);
    CHECK(fox_derivative(p.parse_word("x y X Y"), 0).terms ==
          ring_of(p, {{"1", 1}, {"x y X", -1}}).terms);
    // trefoil relator: d(xyxYXY)/dx = 1 + xy - xyxYX
    CHECK(fox_derivative(p.parse_word("x y x Y X Y"), 0).terms ==
          ring_of(p, {{"1", 1}, {"x y", 1}, {"x y x Y X", -1}}).terms);
}

TEST_CASE("fox fundamental identity") {
    // sum_j dr/dx_j (x_j - 1) = r - 1 in Z[F]
    Presentation p = pres("gens: x y z\n");
    std::vector<Word> rs = {p.parse_word("x y x Y X Y"), p.parse_word("x x y Z y"),
                            p.parse_word("z Y x y Z X"), p.parse_word("x y z X Y Z")};
    for (auto& r : rs) {
        GroupRingElem total;
        for (int j = 0; j < 3; ++j) {
            GroupRingElem xm1;
            xm1.add(Word{j + 1}, 1);
            xm1.add(Word{}, -1);
            total = total + fox_derivative(r, j) * xm1;
        }
        GroupRingElem rhs;
        rhs.add(r, 1);
        rhs.add(Word{}, -1);
        CHECK(total.terms == rhs.terms);
    }
}

TEST_CASE("abelianization") {
    Presentation p1 = pres("gens: x y\nrel: x y x Y X Y\n");
    auto phi1 = knot_phi(p1);
    CHECK(phi1 == std::vector<long>{1, 1});

    Presentation p2 = pres("gens: u v\nrel: u u V V V\n");
    auto phi2 = knot_phi(p2);
    CHECK(phi2 == std::vector<long>{3, 2});

    Presentation p3 = pres("gens: x\n");
    CHECK(knot_phi(p3) == std::vector<long>{1});

    Presentation bad = pres("gens: x y\n");
    CHECK_THROWS_AS((void)knot_phi(bad), std::invalid_argument); // H1 = Z^2

    Presentation tor = pres("gens: x\nrel: x x\n");
    auto ab = abelianization(tor);
    CHECK(ab.free_rank == 0);
    CHECK(ab.torsion == std::vector<Int>{2});
}

TEST_CASE("tietze simplification") {
    Presentation p = pres("gens: x y\nrel: y X\n");
    auto t = tietze_simplify(p);
    CHECK(t.pres.ngens == 1);
    CHECK(t.pres.relators.empty());

    // trefoil from three Wirtinger relators (one redundant)
    Presentation w = pres(
        "gens: x1 x2 x3\n"
        "rel: x3^-1 x1 x2 x1^-1\n"
        "rel: x1^-1 x2 x3 x2^-1\n"
        "rel: x2^-1 x3 x1 x3^-1\n"
        "mark meridian: x1\n");
    auto tw = tietze_simplify(w);
    CHECK(tw.pres.ngens == 2);
    CHECK(tw.pres.relators.size() == 1);
    CHECK(tw.pres.deficiency() == 1);
    // abelianization commutes with simplification along the forward maps
    auto phi_new = knot_phi(tw.pres);
    for (int i = 0; i < 3; ++i) CHECK(phi_of_word(phi_new, tw.fwd[i]) == 1);
    // meridian mark transported and still meridional
    CHECK(phi_of_word(phi_new, tw.pres.marks.at("meridian")) == 1);

    Presentation reduced = pres("gens: a b\nrel: a b a B A B\n");
    auto tr = tietze_simplify(reduced);
    CHECK(tr.pres.ngens == 2);
    CHECK(tr.pres.relators.size() == 1);
}

TEST_CASE("verify_hom") {
    Presentation tre = pres("gens: a b\nrel: a b a B A B\n");
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    std::vector<int> transpositions;
    for (int x = 0; x < 6; ++x)
        if (s3.order_of(x) == 2) transpositions.push_back(x);
    REQUIRE(transpositions.size() == 3);
    std::vector<int> images{transpositions[0], transpositions[1]};
    CHECK(verify_hom(tre, s3, images));
    CHECK(subgroup_generated(s3, images).is_whole());
    int three_cycle = -1;
    for (int x = 0; x < 6; ++x)
        if (s3.order_of(x) == 3) three_cycle = x;
    CHECK_FALSE(verify_hom(tre, s3, {transpositions[0], three_cycle}));
    CHECK(verify_hom(tre, s3, {s3.identity, s3.identity}));
    CHECK_FALSE(subgroup_generated(s3, {s3.identity, s3.identity}).is_whole());

    // hom validity is invariant under Tietze transport
    Presentation w = pres(
        "gens: x1 x2 x3\n"
        "rel: x3^-1 x1 x2 x1^-1\n"
        "rel: x1^-1 x2 x3 x2^-1\n"
        "rel: x2^-1 x3 x1 x3^-1\n");
    auto tw = tietze_simplify(w);
    std::vector<int> small{transpositions[0], transpositions[1]};
    REQUIRE(tw.pres.ngens == 2);
    REQUIRE(verify_hom(tw.pres, s3, small));
    std::vector<int> big(3);
    for (int i = 0; i < 3; ++i) big[i] = word_eval(s3, tw.fwd[i], small);
    CHECK(verify_hom(w, s3, big));
}

TEST_CASE("presentation text round trip") {
    Presentation p = pres("gens: a b\nrel: a b a B A B\nmark meridian: a\nmark longitude: b A\n");
    Presentation q = parse_presentation(format_presentation(p));
    CHECK(q.ngens == p.ngens);
    CHECK(q.relators == p.relators);
    CHECK(q.marks == p.marks);
}

TEST_CASE("ensure_mark_generator") {
    Presentation p = pres("gens: u v\nrel: u u V V V\nmark meridian: u V\n");
    int g = -1;
    Presentation q = ensure_mark_generator(p, "meridian", &g);
    CHECK(q.ngens == 3);
    CHECK(g == 2);
    CHECK(q.relators.size() == 2);
    auto phi = knot_phi(q);
    CHECK(phi[g] == 1);
    Presentation r = ensure_mark_generator(q, "meridian", &g);
    CHECK(r.ngens == 3);
}
