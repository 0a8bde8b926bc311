#ifndef COSETLAB_TESTS_HELPERS_HPP
#define COSETLAB_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/galois.hpp"
#include "cosetlab/wordspace.hpp"

#ifndef COSETLAB_FIXTURE_DIR
#define COSETLAB_FIXTURE_DIR "fixtures"
#endif

namespace testutil {

inline cosetlab::Field gf(unsigned p, unsigned m = 1) {
    cosetlab::FieldParams params;
    params.p = p;
    params.m = m;
    if (m > 1) params.poly = cosetlab::default_irreducible(p, m);
    return cosetlab::Field(params);
}

inline std::string fixture(const std::string& name) {
    return std::string(COSETLAB_FIXTURE_DIR) + "/" + name;
}

// Shorthand for building a code from row literals in the word notation.
inline cosetlab::LinearCode make_code(unsigned p, unsigned m, unsigned n,
                                      const std::vector<std::string>& rows) {
    cosetlab::Field f = gf(p, m);
    cosetlab::WordSpace ws(f, n);
    std::vector<cosetlab::Word> parsed;
    for (const std::string& r : rows) parsed.push_back(ws.parse_word(r));
    return cosetlab::LinearCode(std::move(f), n, std::move(parsed));
}

// The small codes whose structure the tests pin down by hand.
inline cosetlab::LinearCode rep31() { return make_code(2, 1, 3, {"1 1 1"}); }
inline cosetlab::LinearCode ternary21() { return make_code(3, 1, 2, {"1 1"}); }
inline cosetlab::LinearCode hamming74() {
    return make_code(2, 1, 7,
                     {"1 0 0 0 1 1 0", "0 1 0 0 1 0 1", "0 0 1 0 0 1 1", "0 0 0 1 1 1 1"});
}
inline cosetlab::LinearCode quaternary21() { return make_code(2, 2, 2, {"1,0 0,1"}); }

// Formats a whole word list, which keeps expected-value comparisons readable
// in test failure output.
inline std::vector<std::string> fmt(const cosetlab::WordSpace& ws,
                                    const std::vector<cosetlab::Word>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const cosetlab::Word& w : words) out.push_back(ws.format_word(w));
    return out;
}

inline std::vector<std::string> fmt_idx(const cosetlab::WordSpace& ws,
                                        const std::vector<std::uint64_t>& indices) {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (std::uint64_t i : indices) out.push_back(ws.format_word(ws.word_at(i)));
    return out;
}

}  // namespace testutil

#endif
