#ifndef TAV_FINGROUP_HPP
#define TAV_FINGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tav {

// Finite group as an explicit Cayley table over element indices 0..order-1.
// Immutable after construction; associativity and the Latin-square property
// are verified when the table is built (full triple check up to order 256,
// sampled triples above).
class FiniteGroup {
public:
    int order = 1;
    std::vector<std::uint16_t> table; // table[a*order+b] = a*b
    int identity = 0;
    std::vector<std::uint16_t> inv;
    std::vector<int> gens; // generating hint recorded by constructors
    std::string name;

    FiniteGroup() : table{0}, inv{0} {}
    FiniteGroup(int n, std::vector<std::uint16_t> t, std::string label = "");

    int mult(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
    int inverse(int a) const { return inv[a]; }
    int conj(int g, int by) const { return mult(mult(by, g), inv[by]); } // by * g * by^-1
    int commutator(int a, int b) const { return mult(mult(a, b), mult(inv[a], inv[b])); }
    int power(int a, long e) const;
    int order_of(int a) const;

    bool is_abelian() const;
    std::vector<int> element_orders() const;
};

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elems;       // sorted
    std::vector<char> member;     // bitmap of size parent->order

    Subgroup() = default;
    Subgroup(const FiniteGroup& g, std::vector<int> el);
    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const { return member[x] != 0; }
    bool is_trivial() const { return elems.size() == 1; }
    bool is_whole() const { return parent && size() == parent->order; }
    bool is_normal() const;
    bool is_abelian() const;
    FiniteGroup as_group() const; // re-indexed Cayley table
};

// --- structural queries -----------------------------------------------------

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& s);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& s);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
std::vector<Subgroup> all_cyclic_subgroups(const FiniteGroup& g);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g); // practical for small orders
bool is_p_group_order(std::uint64_t n);
bool is_p_group(const Subgroup& h);
bool is_nilpotent(const FiniteGroup& g);
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

// weight-one test: some element's normal closure is the whole group
std::optional<int> weight_one_witness(const FiniteGroup& g);
inline bool weight_is_one(const FiniteGroup& g) { return weight_one_witness(g).has_value(); }

// TAV criterion: weight one and derived subgroup not a p-group (the trivial
// subgroup counts as a p-group here).
bool is_tav(const FiniteGroup& g);

// Seed criterion for weight-one groups: fails exactly when some nontrivial
// cyclic central subgroup meets the derived subgroup trivially.
bool is_seed(const FiniteGroup& g);

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// --- constructor catalog ----------------------------------------------------

struct GroupSpec {
    std::string kind;               // cyclic | abelian | dihedral | dicyclic | symmetric |
                                    // alternating | semidirect_cyclic | gpqr |
                                    // metacyclic_holder | direct_product | frobenius
    std::vector<std::uint64_t> params;
    std::vector<GroupSpec> factors;             // direct_product
    std::vector<std::uint64_t> holder_tuple;    // metacyclic_holder exponents

    static GroupSpec cyclic(std::uint64_t n) { return {"cyclic", {n}, {}, {}}; }
    static GroupSpec abelian(std::vector<std::uint64_t> ns);
    static GroupSpec dihedral(std::uint64_t n) { return {"dihedral", {n}, {}, {}}; }
    static GroupSpec dicyclic(std::uint64_t n) { return {"dicyclic", {n}, {}, {}}; }
    static GroupSpec symmetric(std::uint64_t n) { return {"symmetric", {n}, {}, {}}; }
    static GroupSpec alternating(std::uint64_t n) { return {"alternating", {n}, {}, {}}; }
    static GroupSpec semidirect_cyclic(std::uint64_t m, std::uint64_t k, std::uint64_t b) {
        return {"semidirect_cyclic", {m, k, b}, {}, {}};
    }
    static GroupSpec gpqr(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t a,
                          std::uint64_t b) {
        return {"gpqr", {p, q, r, a, b}, {}, {}};
    }
    static GroupSpec frobenius(std::uint64_t p) { return {"frobenius", {p}, {}, {}}; }
    static GroupSpec metacyclic_holder(std::uint64_t n, std::uint64_t m,
                                       std::vector<std::uint64_t> tuple) {
        GroupSpec s{"metacyclic_holder", {n, m}, {}, std::move(tuple)};
        return s;
    }
    static GroupSpec direct_product(std::vector<GroupSpec> fs) {
        GroupSpec s{"direct_product", {}, std::move(fs), {}};
        return s;
    }
};

FiniteGroup from_spec(const GroupSpec& spec);

} // namespace tav

#endif
