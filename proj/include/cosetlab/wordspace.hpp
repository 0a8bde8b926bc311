#ifndef COSETLAB_WORDSPACE_HPP
#define COSETLAB_WORDSPACE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cosetlab/common.hpp"
#include "cosetlab/galois.hpp"

namespace cosetlab {

// Element of the additive monoid over the canonical generators e_ij of
// GF(q)^n: a flat tuple of n*m nonnegative integer coefficients, position
// (i, j) stored at (i-1)*m + (j-1).  Coefficients below p describe an actual
// vector (standard form); larger ones arise from formal sums.
struct Word {
    std::vector<std::uint32_t> c;

    friend bool operator==(const Word& a, const Word& b) { return a.c == b.c; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// Generalized support of a standard-form word: the set of (i, j) with a
// nonzero coefficient, held as one generator bitmask per coordinate.
class GenSupport {
  public:
    explicit GenSupport(std::vector<std::uint32_t> masks) : masks_(std::move(masks)) {}

    bool contains(unsigned i, unsigned j) const {  // 1-based i, j
        return (masks_[i - 1] >> (j - 1)) & 1u;
    }
    bool coord_empty(unsigned i) const { return masks_[i - 1] == 0; }
    std::size_t size() const;  // number of (i, j) pairs
    std::vector<std::pair<unsigned, unsigned>> pairs() const;
    const std::vector<std::uint32_t>& masks() const { return masks_; }

  private:
    std::vector<std::uint32_t> masks_;
};

// Admissible tie-breaking orders on coefficient tuples: total, zero minimal,
// and compatible with coefficient-wise addition.
enum class TieBreak { Lex, Colex, DegLex };

TieBreak tie_break_from_name(const std::string& name);  // "lex", "colex", "deglex"
std::string tie_break_name(TieBreak tb);

// Weight compatible order: Hamming weight first, the chosen admissible order
// breaking ties.  Guarantees a < b whenever a is a proper subword of b.
struct WeightCompatibleOrder {
    TieBreak tie = TieBreak::Lex;
};

// GF(q)^n viewed both as vector space and as the coefficient monoid over the
// canonical generators.  Standard-form words are indexed 0..q^n-1 by their
// base-p coefficient tuple, position (1,1) least significant.
class WordSpace {
  public:
    WordSpace(Field field, unsigned n);

    const Field& field() const { return field_; }
    unsigned n() const { return n_; }
    unsigned m() const { return field_.m(); }
    unsigned p() const { return field_.p(); }
    unsigned flat_size() const { return n_ * field_.m(); }
    std::uint64_t word_count() const { return count_; }  // q^n

    Word zero_word() const { return Word{std::vector<std::uint32_t>(flat_size(), 0)}; }
    Word generator(unsigned i, unsigned j) const;  // e_ij, 1-based

    bool is_standard_form(const Word& w) const;
    Word standard_form(const Word& w) const;  // reduce each coefficient mod p
    Word oplus(const Word& x, const Word& y) const;  // coefficient-wise sum, no reduction

    GenSupport gen_support(const Word& w) const;     // standard form required
    unsigned hamming_weight(const Word& w) const;    // standard form required

    bool subword(const Word& x, const Word& y) const;   // coefficient-wise <=
    bool subword1(const Word& x, const Word& y) const;  // subword with disjoint supports

    // Vector-space operations on standard forms.
    Word vs_add(const Word& x, const Word& y) const;
    Word vs_sub(const Word& x, const Word& y) const;
    Word vs_neg(const Word& x) const;
    FieldElement coord(const Word& w, unsigned i) const;          // 1-based
    void set_coord(Word& w, unsigned i, const FieldElement& e) const;

    std::uint64_t index_of(const Word& w) const;  // standard form required
    Word word_at(std::uint64_t index) const;

    // Comparison under the weight compatible order; negative, zero or positive
    // like strcmp.  Equality only for identical words.  Standard forms required.
    int compare(const WeightCompatibleOrder& ord, const Word& x, const Word& y) const;
    bool less(const WeightCompatibleOrder& ord, const Word& x, const Word& y) const {
        return compare(ord, x, y) < 0;
    }

    // Tie-breaker alone on raw coefficient tuples (no standard-form requirement).
    int tie_compare(TieBreak tb, const Word& x, const Word& y) const;

    // Word literal: coordinates whitespace-separated, each coordinate m p-adic
    // digits comma-separated, e.g. "1,1 0,1" in GF(4)^2 or "1 0 1" when m = 1.
    Word parse_word(const std::string& text) const;
    std::string format_word(const Word& w) const;

  private:
    void check_size(const Word& w) const;
    void check_standard(const Word& w) const;

    Field field_;
    unsigned n_;
    std::uint64_t count_;
};

// True when x proper-subword y implies x < y over every standard-form pair of
// the space; meant for small parameter sets.
bool check_subword_implies_less(const WordSpace& ws, const WeightCompatibleOrder& ord);

// Validates the tie-breaker's admissibility axioms: zero minimal, and
// translation invariance under the formal sum.  Exhaustive on words with
// coefficients below `coeff_bound` when that stays small, sampled otherwise.
CheckReport verify_admissibility(const WordSpace& ws, TieBreak tb, unsigned coeff_bound = 0);

// Full order check used by the verification driver: sorted-sequence
// consistency, pairwise antisymmetry/totality (all pairs when the space is
// small, sampled otherwise), admissibility of the tie-breaker, and the
// subword-implies-less property.
CheckReport verify_order_axioms(const WordSpace& ws, const WeightCompatibleOrder& ord,
                                std::uint64_t max_enum = kDefaultMaxEnum);

}  // namespace cosetlab

#endif
