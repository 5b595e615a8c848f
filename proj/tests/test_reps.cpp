#include <doctest.h>

#include <algorithm>

#include "tav/reps.hpp"

using namespace tav;

namespace {

bool chars_equal(const std::vector<CyclotomicNum>& a, const std::vector<CyclotomicNum>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::vector<Representation> builtin_irreps_d15() { return dihedral_irreps(15); }

} // namespace

TEST_CASE("regular representation") {
    FiniteGroup c2 = from_spec(GroupSpec::cyclic(2));
    Representation r = regular_rep(c2);
    CHECK(r.dim == 2);
    CHECK(r.perms[1] == std::vector<int>{1, 0});
    CHECK(r.is_identity_at(c2.identity));
    CHECK(is_faithful(r));

    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    Representation reg = regular_rep(s3);
    auto chi = character(reg);
    for (int x = 0; x < 6; ++x) CHECK(chi[x] == CyclotomicNum(x == s3.identity ? 6 : 0));
    CHECK(char_inner(reg, reg) == CyclotomicNum(6)); // <chi_reg, chi_reg> = |G|
}

TEST_CASE("one dimensional representations") {
    auto c3 = one_dim_reps(from_spec(GroupSpec::cyclic(3)));
    CHECK(c3.size() == 3);
    std::set<int> seen;
    for (auto& r : c3) {
        CHECK(r.dim == 1);
        CyclotomicNum v = r.mats[1].at(0, 0);
        for (int j = 0; j < 3; ++j)
            if (v == CyclotomicNum::zeta(3, j)) seen.insert(j);
    }
    CHECK(seen.size() == 3);

    CHECK(one_dim_reps(from_spec(GroupSpec::symmetric(3))).size() == 2);
    CHECK(one_dim_reps(from_spec(GroupSpec::alternating(5))).size() == 1);
}

TEST_CASE("dihedral irreducibles") {
    auto irr = dihedral_irreps(15);
    int one = 0, two = 0, sq = 0;
    for (auto& r : irr) {
        sq += r.dim * r.dim;
        if (r.dim == 1) ++one;
        if (r.dim == 2) ++two;
        CHECK(is_irreducible(r));
    }
    CHECK(one == 2);
    CHECK(two == 7);
    CHECK(sq == 30);
    // rho_1: faithful, rotation eigenvalues of order 15, reflection {1,2}
    const Representation& rho1 = irr[2]; // after the two 1-dims
    CHECK(rho1.dim == 2);
    CHECK(is_faithful(rho1));
    int rot = 2, refl = 1; // element encoding r^i s^e = 2i+e
    CHECK(eigenvalue_orders(rho1, rot) == std::vector<int>{15, 15});
    CHECK(eigenvalue_orders(rho1, refl) == std::vector<int>{1, 2});
    // rho_5 has rotation eigenvalue order 3
    const Representation& rho5 = irr[2 + 4];
    CHECK(rho5.label == "rho5");
    CHECK(eigenvalue_orders(rho5, rot) == std::vector<int>{3, 3});
    CHECK_FALSE(is_faithful(rho5));
}

TEST_CASE("schmidt irreducibles") {
    FiniteGroup h = from_spec(GroupSpec::semidirect_cyclic(7, 2, 3)); // C_7 x| C_3
    auto irr = schmidt_irreps(h);
    std::multiset<int> dims;
    long sq = 0;
    for (auto& r : irr) {
        dims.insert(r.dim);
        sq += static_cast<long>(r.dim) * r.dim;
    }
    CHECK(dims == std::multiset<int>{1, 1, 1, 3, 3});
    CHECK(sq == h.order);
    // characters pairwise orthonormal
    for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = 0; j < irr.size(); ++j)
            CHECK(char_inner(irr[i], irr[j]) == CyclotomicNum(i == j ? 1 : 0));

    // F_5 = C_5 x| C_4 contains the non-nilpotent proper subgroup D_5
    CHECK_THROWS_AS((void)schmidt_irreps(from_spec(GroupSpec::frobenius(5))),
                    std::invalid_argument);
    // nilpotent input rejected
    CHECK_THROWS_AS((void)schmidt_irreps(from_spec(GroupSpec::cyclic(6))), std::invalid_argument);

    // Dic_3 = C_3 x| C_4 is a metabelian Schmidt group with h = 2
    FiniteGroup dic3 = from_spec(GroupSpec::dicyclic(3));
    auto irr2 = schmidt_irreps(dic3);
    std::multiset<int> dims2;
    for (auto& r : irr2) dims2.insert(r.dim);
    CHECK(dims2 == std::multiset<int>{1, 1, 1, 1, 2, 2});
    for (std::size_t i = 0; i < irr2.size(); ++i)
        for (std::size_t j = 0; j < irr2.size(); ++j)
            CHECK(char_inner(irr2[i], irr2[j]) == CyclotomicNum(i == j ? 1 : 0));
}

TEST_CASE("fixed subspaces and the irreducible dichotomy") {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    Representation reg = regular_rep(s3);
    Subgroup a3 = derived_subgroup(s3);
    CHECK(fixed_subspace(reg, a3).first == 2); // dim |G/N|
    auto irr = s3_irreps();
    const Representation* std2 = nullptr;
    for (auto& r : irr)
        if (r.dim == 2) std2 = &r;
    REQUIRE(std2);
    CHECK(is_irreducible(*std2));
    CHECK(is_faithful(*std2));
    CHECK(fixed_subspace(*std2, a3).first == 0);
    Subgroup triv(s3, {s3.identity});
    CHECK(fixed_subspace(*std2, triv).first == 2);
    // non-normal subgroup rejected
    int t = -1;
    for (int x = 0; x < 6; ++x)
        if (s3.order_of(x) == 2) t = x;
    Subgroup cyc = subgroup_generated(s3, {t});
    CHECK_THROWS_AS((void)fixed_subspace(*std2, cyc), std::invalid_argument);

    // dichotomy across built-in irreducibles and all normal subgroups
    auto check_dichotomy = [](const FiniteGroup& g, const std::vector<Representation>& reps) {
        for (auto& n : all_subgroups(g)) {
            if (!n.is_normal()) continue;
            for (auto& r : reps) {
                if (!is_irreducible(r)) continue;
                int d = fixed_subspace(r, n).first;
                CHECK((d == 0 || d == r.dim));
                if (is_faithful(r) && n.size() > 1) CHECK(d == 0);
            }
        }
    };
    check_dichotomy(s3, irr);
    check_dichotomy(from_spec(GroupSpec::dihedral(15)), builtin_irreps_d15());
    FiniteGroup c7c3 = from_spec(GroupSpec::semidirect_cyclic(7, 2, 3));
    check_dichotomy(c7c3, schmidt_irreps(c7c3));
}

TEST_CASE("eigenvalue orders of regular representations") {
    FiniteGroup d15 = from_spec(GroupSpec::dihedral(15));
    Representation reg = regular_rep(d15);
    int rot = 2; // r, order 15
    auto orders = eigenvalue_orders(reg, rot);
    CHECK(orders.size() == 30);
    // every divisor of 15 appears phi(d) times per 15-cycle, two cycles
    std::map<int, int> count;
    for (int o : orders) ++count[o];
    for (int d : {1, 3, 5, 15}) CHECK(count[d] == 2 * static_cast<int>(totient(d)));
    // primitive 15th roots occur: the Lemma 5.3 precondition for g = rotation
    CHECK(count[15] == 16);
}

TEST_CASE("regular character decomposes into irreducibles") {
    // chi_reg = sum dim(rho_i) chi_i for complete irrep lists
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    {
        auto irr = s3_irreps();
        std::vector<CyclotomicNum> sum(6, CyclotomicNum(0));
        for (auto& r : irr) {
            auto chi = character(r);
            for (int x = 0; x < 6; ++x) sum[x] = sum[x] + chi[x] * CyclotomicNum(r.dim);
        }
        CHECK(chars_equal(sum, character(regular_rep(s3))));
    }
    {
        FiniteGroup d15 = from_spec(GroupSpec::dihedral(15));
        auto irr = dihedral_irreps(15);
        std::vector<CyclotomicNum> sum(30, CyclotomicNum(0));
        for (auto& r : irr) {
            auto chi = character(r);
            for (int x = 0; x < 30; ++x) sum[x] = sum[x] + chi[x] * CyclotomicNum(r.dim);
        }
        CHECK(chars_equal(sum, character(regular_rep(d15))));
    }
}

TEST_CASE("tensor and direct sum") {
    auto irr = s3_irreps();
    const Representation& triv = irr[0].label == "chi0" ? irr[0] : irr[1];
    const Representation* std2 = nullptr;
    for (auto& r : irr)
        if (r.dim == 2) std2 = &r;
    Representation t = tensor_with_char(*std2, triv);
    CHECK(chars_equal(character(t), character(*std2)));
    Representation s = direct_sum({*std2, triv});
    CHECK(s.dim == 3);
    auto cs = character(s), c2 = character(*std2), c1 = character(triv);
    for (std::size_t x = 0; x < cs.size(); ++x) CHECK(cs[x] == c2[x] + c1[x]);
    CHECK_THROWS_AS((void)tensor_with_char(*std2, *std2), std::invalid_argument);
}
