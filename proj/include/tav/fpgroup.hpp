#ifndef TAV_FPGROUP_HPP
#define TAV_FPGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tav/fingroup.hpp"
#include "tav/intmat.hpp"

namespace tav {

// Free-group word: letters +-(i+1) for generator index i; stored freely reduced.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word word_mul(const Word& a, const Word& b);
Word word_inv(const Word& a);
Word word_pow(const Word& a, int e);
Word cyclic_reduce(const Word& w);
Word cyclic_canonical(const Word& w); // least rotation of min(w, w^-1), for duplicate tests
long exponent_sum(const Word& w, int gen);

// Formal integer combination of freely reduced words (free-group ring Z[F]).
struct GroupRingElem {
    std::map<Word, Int> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const Int& c);
    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    static GroupRingElem of(const Word& w, Int c = 1);
};

// Fox derivative d w / d x_gen, satisfying d(uv) = du + u dv.
GroupRingElem fox_derivative(const Word& w, int gen);

struct Presentation {
    int ngens = 0;
    std::vector<std::string> names;
    std::vector<Word> relators;
    std::map<std::string, Word> marks; // meridian, longitude, alpha_meridian, ...

    int deficiency() const { return ngens - static_cast<int>(relators.size()); }
    std::string word_str(const Word& w) const;
    Word parse_word(const std::string& s) const;
    int gen_index(const std::string& name) const;
};

Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

// Abelianization via Smith normal form of the relator exponent matrix.
struct Abelianization {
    std::vector<Int> torsion;  // invariant factors > 1
    int free_rank = 0;
    std::vector<long> phi;     // map gens -> Z when free_rank == 1 (empty otherwise)
};
Abelianization abelianization(const Presentation& p);

// phi values for a knot-like presentation (H1 = Z), sign-normalized so the
// meridian mark (or the first nonzero value) maps to +1.
std::vector<long> knot_phi(const Presentation& p);
long phi_of_word(const std::vector<long>& phi, const Word& w);

struct TietzeResult {
    Presentation pres;
    std::vector<Word> fwd;  // original generator -> word in the new generators
    std::vector<int> kept;  // new generator -> original generator index
};

// Greedy simplification: generator elimination via single-occurrence relators,
// free/cyclic reduction, removal of empty and duplicate relators.  Marks are
// transported.
TietzeResult tietze_simplify(const Presentation& p, int max_steps = 10000);

Word substitute(const Word& w, const std::vector<Word>& images);

// Evaluate a word in a finite group under generator images.
int word_eval(const FiniteGroup& g, const Word& w, const std::vector<int>& images);
bool verify_hom(const Presentation& p, const FiniteGroup& g, const std::vector<int>& images);

// Tietze-extend so the named mark is a generator (adds x_new = mark word).
Presentation ensure_mark_generator(const Presentation& p, const std::string& mark,
                                   int* gen_out = nullptr);

} // namespace tav

#endif
