#ifndef COSETLAB_ERRORMODEL_HPP
#define COSETLAB_ERRORMODEL_HPP

#include <cstdint>
#include <vector>

#include "cosetlab/common.hpp"
#include "cosetlab/leadercw.hpp"
#include "cosetlab/leaderset.hpp"

namespace cosetlab {

// Correctable/uncorrectable split of the word space: the correctable words
// are exactly the canonical leaders (the order-minimum of each coset).
struct ErrorPartition {
    std::vector<bool> correctable;         // by word index
    std::vector<std::uint64_t> e0;         // sorted correctable indices
    std::uint64_t word_count = 0;

    bool in_e0(std::uint64_t idx) const { return correctable[idx]; }
};

ErrorPartition error_partition(const ListClosure& lc);

// H(y): codewords c with y - c strictly below y in the order.  Empty exactly
// when y is correctable.
std::vector<Word> h_set(const LinearCode& code, const WeightCompatibleOrder& ord, const Word& y,
                        std::uint64_t max_enum = kDefaultMaxEnum);

// Minimal uncorrectable words: uncorrectable with every proper subword (in
// the coordinate sense: zero out part of the support, keep the rest whole)
// correctable.  Maximal correctable words dually.  Sorted word indices.
std::vector<std::uint64_t> minimal_uncorrectable(const WordSpace& ws, const ErrorPartition& ep);
std::vector<std::uint64_t> maximal_correctable(const WordSpace& ws, const ErrorPartition& ep);

enum class LhMinimality {
    Subword1,  // subword-minimal among all qualifying words, weight-filtered
    Order,     // minimum under the weight compatible order (a single word)
};

// Larger halves of a nonzero codeword c: words u with u - c strictly below u
// in the order, minimal under the coordinate subword relation, restricted to
// the weight sandwich w(c) <= 2 w(u) <= w(c) + 2 (the lower bound is
// automatic, the upper one cuts away full-weight qualifiers such as -c).
// The order-minimum reading over the whole space is available for comparison.
std::vector<std::uint64_t> larger_halves(const WordSpace& ws, const WeightCompatibleOrder& ord,
                                         const Word& c, LhMinimality mode = LhMinimality::Subword1,
                                         std::uint64_t max_enum = kDefaultMaxEnum);

// Every larger half u of every nonzero codeword satisfies
// w(c) <= 2 w(u) <= w(c) + 2.
CheckReport verify_larger_half_sandwich(const LinearCode& code, const WeightCompatibleOrder& ord,
                                        std::uint64_t max_enum = kDefaultMaxEnum);

// Correctability respects the subword order: a word above an uncorrectable
// word is uncorrectable.  Pairs with equal generalized support but different
// correctability are counted as a note, not a failure.
CheckReport verify_monotone_structure(const WordSpace& ws, const ErrorPartition& ep);

// H(y) is empty exactly for the correctable words.
CheckReport verify_h_characterization(const LinearCode& code, const WeightCompatibleOrder& ord,
                                      const ErrorPartition& ep,
                                      std::uint64_t max_enum = kDefaultMaxEnum);

// Trial-set verdict from three routes that must agree: the definition (a word
// is correctable iff no member of T pulls it down), the hitting route (every
// minimal uncorrectable word is pulled down by some member), and the
// larger-half route (every minimal uncorrectable word is a larger half of
// some member).  The sum convention (y + c instead of y - c) and closure of T
// under negation are measured and reported as notes.
struct TrialSetReport {
    CheckReport definition;
    CheckReport hitting;
    CheckReport larger_half;
    std::vector<std::string> notes;

    bool passed() const {
        return definition.passed() && hitting.passed() && larger_half.passed();
    }
};

TrialSetReport is_trial_set(const ListClosure& lc, const ErrorPartition& ep,
                            const std::vector<Word>& t);

// Trial set extracted from the closure: for each member that is a minimal
// uncorrectable word t, the codeword t - N(t) enters the set.  Provenance
// keeps each originating pair.  The result is verified to be a trial set
// contained in the leader codewords whose members all own a larger-half
// witness; any failure is a hard error.
struct TrialSet {
    std::vector<Word> members;                      // sorted by word index
    std::vector<std::pair<Word, Word>> provenance;  // (t, N(t)) per member
};

TrialSet extract_trial_set(const ListClosure& lc, const LeaderCodewordSet& lcw,
                           const ErrorPartition& ep);

// Gradient descent by trial-set translates: repeatedly subtract the member of
// T or -T that yields the order-smallest strict improvement.  Terminates in
// fewer steps than there are words; when T is a trial set the residual is the
// canonical leader of the input's coset.
struct DecodeResult {
    Word residual;
    Word codeword;  // input minus residual
    unsigned steps = 0;
};

DecodeResult gradient_decode(const WordSpace& ws, const WeightCompatibleOrder& ord, const Word& y,
                             const std::vector<Word>& t);

// Every word decodes to a residual that is the canonical leader of its coset.
CheckReport verify_decoder(const ListClosure& lc, const std::vector<Word>& t);

// All inclusion-minimal trial sets, by exhaustive search over subsets of the
// nonzero codewords of weight at most twice the covering radius plus one (at
// most 63 candidates supported).
std::vector<std::vector<Word>> minimal_trial_sets(const ListClosure& lc, const ErrorPartition& ep,
                                                  std::uint64_t max_enum = kDefaultMaxEnum);

}  // namespace cosetlab

#endif
