#ifndef COSETLAB_LEADERCW_HPP
#define COSETLAB_LEADERCW_HPP

#include <cstdint>
#include <vector>

#include "cosetlab/common.hpp"
#include "cosetlab/leaderset.hpp"

namespace cosetlab {

// One way of writing a leader codeword as n1 + e_ij - n2 with n1 and n1 + e_ij
// within distance 1 of the leader set and n2 a coset leader.
struct LeaderWitness {
    Word n1;
    unsigned i = 0;  // 1-based generator position
    unsigned j = 0;
    Word n2;
};

struct LeaderCodeword {
    Word word;
    std::vector<LeaderWitness> witnesses;
};

class LeaderCodewordSet {
  public:
    // Items and their word indices, both sorted by index.
    LeaderCodewordSet(std::vector<LeaderCodeword> items, std::vector<std::uint64_t> indices);

    const std::vector<LeaderCodeword>& items() const { return items_; }
    std::vector<Word> words() const;
    bool contains(std::uint64_t word_index) const;
    std::size_t size() const { return items_.size(); }

  private:
    std::vector<LeaderCodeword> items_;
    std::vector<std::uint64_t> indices_;
};

// Extracts the leader codewords from a built closure.  Every member within
// distance 1 of the leader set is decomposed through each generator of its
// generalized support, and paired with every leader of its own coset; all
// distinct witnesses are retained.
LeaderCodewordSet leader_codewords(const ListClosure& lc);

// Property: the set reduces every non-leader (some v with w(y - v) < w(y)).
CheckReport verify_test_set(const LeaderCodewordSet& set, const ListClosure& lc);

// Property: no member weighs more than twice the covering radius plus one.
CheckReport verify_weight_bound(const LeaderCodewordSet& set, const ListClosure& lc);

// Properties against the brute-force region geometry: every member's region
// or region fringe meets the fringe of the leader region (so members are zero
// neighbours), and every codeword whose region meets that fringe is a member.
// With `strict_sensitivity` the strict region variant is computed as well and
// any difference is reported as a note.
CheckReport verify_zero_neighbour_props(const LeaderCodewordSet& set, const ListClosure& lc,
                                        bool strict_sensitivity = false);

}  // namespace cosetlab

#endif
