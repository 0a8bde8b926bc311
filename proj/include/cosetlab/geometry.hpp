#ifndef COSETLAB_GEOMETRY_HPP
#define COSETLAB_GEOMETRY_HPP

#include <cstdint>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/common.hpp"
#include "cosetlab/wordspace.hpp"

namespace cosetlab {

// Brute-force set geometry over the whole word space.  Every function here
// evaluates its definition literally, with no shortcuts, so the results can
// serve as ground truth for the incremental algorithms.  Word sets are sorted
// vectors of word indices.

using WordIndexSet = std::vector<std::uint64_t>;

struct VoronoiOptions {
    // By default the region of z is measured against every codeword; the
    // strict variant restricts the competitors to the nonzero codewords,
    // which inflates regions (the region of the sole nonzero codeword of a
    // [n,1] code with two codewords becomes the whole space).
    bool strict = false;
    std::uint64_t max_enum = kDefaultMaxEnum;
};

// Hamming distance between two standard-form words.
unsigned hamming_distance(const WordSpace& ws, const Word& a, const Word& b);

// min over the set of the distance to w; the set must be nonempty.
unsigned distance_to_set(const WordSpace& ws, const Word& w, const std::vector<Word>& set);

// Voronoi region D(z) = { y : d(y, z) <= d(y, c') for every competitor c' }.
// z must be a codeword; z = 0 yields exactly the coset leaders.
WordIndexSet voronoi(const LinearCode& code, const Word& z, const VoronoiOptions& opts = {});

// X(A) = words at distance exactly 1 from A (members of A are at distance 0).
WordIndexSet x_operator(const WordSpace& ws, const WordIndexSet& a,
                        std::uint64_t max_enum = kDefaultMaxEnum);

// Boundary X(A) union X(complement of A).
WordIndexSet boundary(const WordSpace& ws, const WordIndexSet& a,
                      std::uint64_t max_enum = kDefaultMaxEnum);

// Nonzero codewords whose region boundary meets the boundary of D(0).
std::vector<Word> zero_neighbours(const LinearCode& code, const VoronoiOptions& opts = {});

// Every word is either a coset leader or admits v in T with w(y - v) < w(y).
bool is_test_set(const LinearCode& code, const std::vector<Word>& t,
                 std::uint64_t max_enum = kDefaultMaxEnum);

// Coset partition of the whole space computed by codeword translation alone
// (no syndrome machinery): coset_of[w] identifies the coset of word index w.
struct BruteCosets {
    std::vector<std::vector<std::uint64_t>> cosets;
    std::vector<std::uint32_t> coset_of;
};
BruteCosets brute_cosets(const LinearCode& code, std::uint64_t max_enum = kDefaultMaxEnum);

// All minimum-weight words per coset, flattened and sorted: the coset leaders.
std::vector<Word> coset_leaders_brute(const LinearCode& code,
                                      std::uint64_t max_enum = kDefaultMaxEnum);

// Order-minimum of each coset.
std::vector<Word> canonical_leaders_brute(const LinearCode& code, const WeightCompatibleOrder& ord,
                                          std::uint64_t max_enum = kDefaultMaxEnum);

// Leader codewords evaluated straight from their definition: all triples of a
// word n1, a generator e_ij keeping n1 + e_ij in standard form, and a coset
// leader n2, such that both n1 and n1 + e_ij lie within Hamming distance 1 of
// the leader set and n1 + e_ij - n2 is a nonzero codeword.
std::vector<Word> leader_codewords_brute(const LinearCode& code,
                                         std::uint64_t max_enum = kDefaultMaxEnum);

}  // namespace cosetlab

#endif
