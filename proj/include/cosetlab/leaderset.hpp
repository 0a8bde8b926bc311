#ifndef COSETLAB_LEADERSET_HPP
#define COSETLAB_LEADERSET_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/common.hpp"
#include "cosetlab/wordspace.hpp"

namespace cosetlab {

// How a member was reached: which member generated it by bumping which
// generator coefficient, and under which insertion rule (1, 2 or 3).
struct ParentEdge {
    std::uint32_t parent;  // index into the member sequence
    std::uint16_t i = 0;   // 1-based coordinate
    std::uint16_t j = 0;   // 1-based generator within the coordinate
    std::uint8_t rule = 0;
};

struct ListEntry {
    Word word;
    std::uint64_t word_index = 0;
    std::uint64_t syndrome = 0;
    unsigned weight = 0;
    unsigned excess = 0;  // weight minus the coset weight at processing time
    std::vector<ParentEdge> edges;
};

// Incrementally grown superset of the words within distance 1 of the coset
// leader set, built by a best-first walk from zero under a weight compatible
// order.  Members come out in strictly increasing order, the first member of
// each coset is its canonical leader, and every minimum-weight coset member
// encountered is recorded as a leader.  Expansion rules, applied when a
// member v with coset-weight excess D is processed:
//   rule 1 (D = 0) and rule 2 (D = 1): every v + e_ij that stays in standard
//     form enters the frontier;
//   rule 3 (D = 2): only those e_ij already in the generalized support of v
//     whose coordinate is untouched by every leader of v's coset;
//   D > 2: v stays a member but spawns nothing.
class ListClosure {
  public:
    const LinearCode& code() const { return code_; }
    const WeightCompatibleOrder& order() const { return order_; }
    const std::vector<ListEntry>& members() const { return members_; }
    const SyndromeTable& table() const { return table_; }

    bool contains_word(std::uint64_t word_index) const {
        return member_of_.find(word_index) != member_of_.end();
    }
    std::uint32_t member_position(std::uint64_t word_index) const {
        return member_of_.at(word_index);
    }

  private:
    friend ListClosure build_list(const LinearCode&, const WeightCompatibleOrder&, std::uint64_t);
    ListClosure(LinearCode code, WeightCompatibleOrder ord, std::uint64_t slots)
        : code_(std::move(code)), order_(ord), table_(slots) {}

    LinearCode code_;
    WeightCompatibleOrder order_;
    std::vector<ListEntry> members_;
    std::unordered_map<std::uint64_t, std::uint32_t> member_of_;
    SyndromeTable table_;
};

ListClosure build_list(const LinearCode& code, const WeightCompatibleOrder& ord = {},
                       std::uint64_t max_enum = kDefaultMaxEnum);

// All coset leaders / all canonical leaders, sorted by word index.
std::vector<Word> coset_leaders(const ListClosure& lc);
std::vector<Word> canonical_leaders(const ListClosure& lc);

// Whether w is within Hamming distance 1 of the coset leader set, decided by
// n*(q-1)+1 syndrome-table probes (w itself and every single-coordinate
// substitution).
bool within_1_of_leaders(const ListClosure& lc, const Word& w);

// Each coset leader w = y + e_ij satisfies w(y) <= weight(y's coset) + 1.
CheckReport verify_leader_decomposition_bound(const ListClosure& lc);

// Each word w at distance exactly 1 from the leader set has a decomposition
// w = y + e_ij that the closure rules accept: either w(y) <= weight(y's
// coset) + 1, or equality at + 2 with coordinate i in the support of y but
// of no leader of y's coset.
CheckReport verify_distance1_decomposition_bound(const ListClosure& lc);

// Every word within distance 1 of the brute-force leader set is a member.
CheckReport verify_completeness(const ListClosure& lc, const std::vector<Word>& brute_leaders);

}  // namespace cosetlab

#endif
