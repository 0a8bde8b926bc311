#ifndef COSETLAB_CODE_HPP
#define COSETLAB_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/common.hpp"
#include "cosetlab/wordspace.hpp"

namespace cosetlab {

// Everything recorded about one coset: its weight, its canonical leader (the
// order-minimum of the coset) and the full set of minimum-weight words,
// sorted by word index.
struct CosetRecord {
    unsigned weight = 0;
    Word canonical_leader;
    std::vector<Word> leaders;
};

// Coset records addressed by packed syndrome, first syndrome component most
// significant so that slot order is syndrome-lexicographic.
class SyndromeTable {
  public:
    explicit SyndromeTable(std::uint64_t slots) : recs_(slots) {}

    std::uint64_t slot_count() const { return recs_.size(); }
    std::optional<CosetRecord>& slot(std::uint64_t s) { return recs_.at(s); }
    const std::optional<CosetRecord>& slot(std::uint64_t s) const { return recs_.at(s); }

    // Record for a syndrome that must already be present.
    const CosetRecord& at(std::uint64_t s) const;

    bool complete() const {
        for (const auto& r : recs_)
            if (!r) return false;
        return true;
    }

  private:
    std::vector<std::optional<CosetRecord>> recs_;
};

// Linear [n, k] code over GF(q) given by a rank-k generator matrix.  The
// parity check matrix is derived by Gaussian elimination with column
// permutation tracked and undone, then validated against G.
class LinearCode {
  public:
    LinearCode(Field field, unsigned n, std::vector<Word> generator_rows);

    const WordSpace& space() const { return space_; }
    unsigned n() const { return space_.n(); }
    unsigned k() const { return k_; }
    unsigned redundancy() const { return n() - k_; }

    const std::vector<Word>& generator_rows() const { return gen_rows_; }
    const std::vector<Word>& check_rows() const { return check_rows_; }

    std::vector<FieldElement> syndrome(const Word& w) const;
    std::uint64_t syndrome_index(const Word& w) const;
    std::uint64_t syndrome_count() const;  // q^(n-k)
    std::string format_syndrome(const std::vector<FieldElement>& s) const;
    std::vector<FieldElement> syndrome_at(std::uint64_t index) const;

    bool contains(const Word& w) const;  // zero syndrome

    // All q^k codewords, scalar tuples enumerated with the first generator
    // row's coefficient varying fastest.
    std::vector<Word> codewords(std::uint64_t max_enum = kDefaultMaxEnum) const;

    unsigned min_distance(std::uint64_t max_enum = kDefaultMaxEnum) const;
    unsigned error_capacity(std::uint64_t max_enum = kDefaultMaxEnum) const;  // (d-1)/2

  private:
    WordSpace space_;
    unsigned k_;
    std::vector<Word> gen_rows_;
    std::vector<Word> check_rows_;
};

// Covering radius: the largest coset weight.  The table must be complete.
unsigned covering_radius(const SyndromeTable& table);

// Plain-text code fixture:
//   p <prime>
//   m <degree>
//   poly <c0> ... <cm>      (only when m > 1)
//   n <length>
//   k <dimension>
//   G
//   <k rows of n field elements in comma-digit notation>
// Blank lines and lines starting with '#' are skipped.
LinearCode parse_code(std::istream& in);
LinearCode load_code_file(const std::string& path);

}  // namespace cosetlab

#endif
