#include <doctest.h>

#include <set>

#include "tav/fingroup.hpp"
#include "tav/numbers.hpp"

using namespace tav;

TEST_CASE("constructor catalog orders and derived subgroups") {
    FiniteGroup g273 = from_spec(GroupSpec::gpqr(3, 7, 13, 4, 9));
    CHECK(g273.order == 273);
    CHECK(derived_subgroup(g273).size() == 91);

    FiniteGroup d15 = from_spec(GroupSpec::dihedral(15));
    CHECK(d15.order == 30);
    Subgroup d = derived_subgroup(d15);
    CHECK(d.size() == 15);
    CHECK(d.as_group().is_abelian());

    CHECK(from_spec(GroupSpec::cyclic(1)).order == 1);

    CHECK_THROWS_AS((void)from_spec(GroupSpec::gpqr(3, 7, 13, 3, 9)), std::invalid_argument);
    CHECK_THROWS_AS((void)from_spec(GroupSpec::gpqr(3, 7, 13, 1, 9)), std::invalid_argument);
}

TEST_CASE("closure operations") {
    FiniteGroup s4 = from_spec(GroupSpec::symmetric(4));
    Subgroup a4 = derived_subgroup(s4);
    CHECK(a4.size() == 12);
    // brute-force commutator closure oracle
    std::set<int> comms;
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 24; ++b) comms.insert(s4.commutator(a, b));
    Subgroup oracle = subgroup_generated(s4, std::vector<int>(comms.begin(), comms.end()));
    CHECK(oracle.elems == a4.elems);

    FiniteGroup dic15 = from_spec(GroupSpec::dicyclic(15));
    CHECK(dic15.order == 60);
    CHECK(center(dic15).size() == 2);
    CHECK(derived_subgroup(dic15).size() == 15);

    FiniteGroup a5 = from_spec(GroupSpec::alternating(5));
    int three_cycle = -1;
    for (int x = 0; x < a5.order; ++x)
        if (a5.order_of(x) == 3) { three_cycle = x; break; }
    REQUIRE(three_cycle >= 0);
    CHECK(normal_closure(a5, {three_cycle}).is_whole());
}

TEST_CASE("weight one") {
    CHECK_FALSE(weight_is_one(from_spec(GroupSpec::abelian({2, 2}))));
    CHECK_FALSE(weight_is_one(from_spec(GroupSpec::dicyclic(2)))); // Q_8
    FiniteGroup s4 = from_spec(GroupSpec::symmetric(4));
    auto w = weight_one_witness(s4);
    REQUIRE(w.has_value());
    CHECK(normal_closure(s4, {*w}).is_whole());
    // some 4-cycle works
    bool found = false;
    for (int x = 0; x < 24 && !found; ++x)
        if (s4.order_of(x) == 4 && normal_closure(s4, {x}).is_whole()) found = true;
    CHECK(found);
}

TEST_CASE("p-subgroup machinery") {
    FiniteGroup a4 = from_spec(GroupSpec::alternating(4));
    CHECK(is_p_group(derived_subgroup(a4))); // V_4, order 4
    CHECK(derived_subgroup(a4).size() == 4);
    FiniteGroup s4 = from_spec(GroupSpec::symmetric(4));
    CHECK(sylow_subgroup(s4, 2).size() == 8);
    CHECK(sylow_subgroup(s4, 3).size() == 3);
    CHECK(sylow_subgroup(s4, 5).size() == 1); // p does not divide 24
    FiniteGroup d15 = from_spec(GroupSpec::dihedral(15));
    bool has15 = false;
    for (int x = 0; x < d15.order; ++x)
        if (d15.order_of(x) == 15) has15 = true;
    CHECK(has15);
}

TEST_CASE("tav and seed verdicts") {
    CHECK(is_tav(from_spec(GroupSpec::symmetric(4))));
    CHECK(is_tav(from_spec(GroupSpec::dihedral(15))));
    CHECK_FALSE(is_tav(from_spec(GroupSpec::cyclic(30))));
    CHECK(is_seed(from_spec(GroupSpec::alternating(5))));
    CHECK_FALSE(is_seed(from_spec(GroupSpec::dicyclic(15))));
    CHECK(is_seed(from_spec(GroupSpec::dihedral(105))));
    CHECK_THROWS_AS((void)is_seed(from_spec(GroupSpec::abelian({2, 2}))), std::invalid_argument);
}

TEST_CASE("isomorphism testing") {
    FiniteGroup a = from_spec(GroupSpec::gpqr(3, 7, 13, 4, 9));
    FiniteGroup b = from_spec(GroupSpec::gpqr(3, 7, 13, 2, 9));
    CHECK_FALSE(is_isomorphic(a, b));
    // G(pqr; a^2, b^2) is isomorphic to G(pqr; a, b) via z -> z^2
    FiniteGroup c = from_spec(GroupSpec::gpqr(3, 7, 13, 16 % 7, 81 % 13));
    CHECK(is_isomorphic(a, c));
    CHECK_FALSE(is_isomorphic(from_spec(GroupSpec::cyclic(6)), from_spec(GroupSpec::symmetric(3))));
    CHECK(is_isomorphic(from_spec(GroupSpec::dicyclic(2)), from_spec(GroupSpec::dicyclic(2))));
}

TEST_CASE("conjugacy classes and cyclic subgroups") {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    std::multiset<std::size_t> sizes;
    for (auto& c : conjugacy_classes(s3)) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
    CHECK(conjugacy_classes(from_spec(GroupSpec::cyclic(4))).size() == 4);
    std::multiset<int> orders;
    for (auto& h : all_cyclic_subgroups(from_spec(GroupSpec::cyclic(6)))) orders.insert(h.size());
    CHECK(orders == std::multiset<int>{1, 2, 3, 6});
}

TEST_CASE("catalog invariants") {
    std::vector<GroupSpec> catalog = {
        GroupSpec::cyclic(12),          GroupSpec::dihedral(6),
        GroupSpec::dicyclic(3),         GroupSpec::symmetric(4),
        GroupSpec::alternating(5),      GroupSpec::gpqr(3, 7, 13, 4, 9),
        GroupSpec::frobenius(5),        GroupSpec::semidirect_cyclic(15, 2, 4),
        GroupSpec::abelian({2, 3, 4}),
    };
    for (auto& spec : catalog) {
        FiniteGroup g = from_spec(spec);
        Subgroup d = derived_subgroup(g);
        CHECK(g.order % d.size() == 0);
        CHECK(center(g).is_abelian());
        Subgroup n = normal_closure(g, {g.order > 1 ? 1 : 0});
        CHECK(n.is_normal()); // conjugation sweep
    }
}

TEST_CASE("two-generator subgroups of bounded order are metacyclic") {
    // brute-force check of the q^2 r / 2 bound on catalog groups of order <= 200
    std::vector<GroupSpec> catalog = {
        GroupSpec::symmetric(4),           GroupSpec::dihedral(15),
        GroupSpec::dicyclic(15),           GroupSpec::frobenius(7),
        GroupSpec::semidirect_cyclic(7, 2, 3), GroupSpec::semidirect_cyclic(21, 4, 3),
        GroupSpec::alternating(5),
    };
    for (auto& spec : catalog) {
        FiniteGroup g = from_spec(spec);
        if (g.order > 200) continue;
        for (int x = 0; x < g.order; ++x) {
            int q = g.order_of(x);
            if (!is_prime_u64(q)) continue;
            for (int y = 0; y < g.order; ++y) {
                int r = g.order_of(y);
                if (!is_prime_u64(r) || q >= r) continue;
                Subgroup h = subgroup_generated(g, {x, y});
                if (2 * static_cast<std::uint64_t>(h.size()) <=
                    static_cast<std::uint64_t>(q) * q * r)
                    CHECK(h.size() == q * r);
            }
        }
    }
}

TEST_CASE("gpqr family: weight one and derived C_q x C_r") {
    std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19};
    for (auto p : primes)
        for (auto q : primes)
            for (auto r : primes) {
                if (!(q < r) || p == q || p == r) continue;
                std::uint64_t n = p * q * r;
                if (n > 500) continue;
                if ((q - 1) % p != 0 || (r - 1) % p != 0) continue;
                std::uint64_t a = 0, b = 0;
                for (std::uint64_t x = 2; x < q; ++x)
                    if (order_mod(x, q) == static_cast<int>(p)) { a = x; break; }
                for (std::uint64_t x = 2; x < r; ++x)
                    if (order_mod(x, r) == static_cast<int>(p)) { b = x; break; }
                REQUIRE(a != 0);
                REQUIRE(b != 0);
                FiniteGroup g = from_spec(GroupSpec::gpqr(p, q, r, a, b));
                CHECK(weight_is_one(g));
                Subgroup d = derived_subgroup(g);
                CHECK(d.size() == static_cast<int>(q * r));
                bool cyclic = false;
                for (int x : d.elems)
                    if (g.order_of(x) == static_cast<int>(q * r)) cyclic = true;
                CHECK(cyclic);
            }
}
