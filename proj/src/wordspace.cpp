#include "cosetlab/wordspace.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cosetlab {

std::size_t GenSupport::size() const {
    std::size_t total = 0;
    for (std::uint32_t mask : masks_) total += static_cast<std::size_t>(__builtin_popcount(mask));
    return total;
}

std::vector<std::pair<unsigned, unsigned>> GenSupport::pairs() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < masks_.size(); ++i)
        for (unsigned j = 0; j < 32; ++j)
            if ((masks_[i] >> j) & 1u) out.emplace_back(i + 1, j + 1);
    return out;
}

TieBreak tie_break_from_name(const std::string& name) {
    if (name == "lex") return TieBreak::Lex;
    if (name == "colex") return TieBreak::Colex;
    if (name == "deglex") return TieBreak::DegLex;
    throw std::invalid_argument("unknown order: " + name);
}

std::string tie_break_name(TieBreak tb) {
    switch (tb) {
        case TieBreak::Lex: return "lex";
        case TieBreak::Colex: return "colex";
        case TieBreak::DegLex: return "deglex";
    }
    return "?";
}

WordSpace::WordSpace(Field field, unsigned n) : field_(std::move(field)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("n must be at least 1");
    count_ = 1;
    for (unsigned i = 0; i < n_; ++i) {
        if (count_ > (std::uint64_t{1} << 62) / field_.size())
            throw std::invalid_argument("q^n does not fit in 64 bits");
        count_ *= field_.size();
    }
}

void WordSpace::check_size(const Word& w) const {
    if (w.c.size() != flat_size())
        throw std::invalid_argument("word length does not match this space");
}

void WordSpace::check_standard(const Word& w) const {
    check_size(w);
    if (!is_standard_form(w)) throw std::invalid_argument("word is not in standard form");
}

Word WordSpace::generator(unsigned i, unsigned j) const {
    if (i < 1 || i > n_ || j < 1 || j > m()) throw std::invalid_argument("generator out of range");
    Word w = zero_word();
    w.c[(i - 1) * m() + (j - 1)] = 1;
    return w;
}

bool WordSpace::is_standard_form(const Word& w) const {
    check_size(w);
    for (std::uint32_t v : w.c)
        if (v >= p()) return false;
    return true;
}

Word WordSpace::standard_form(const Word& w) const {
    check_size(w);
    Word r = w;
    for (std::uint32_t& v : r.c) v %= p();
    return r;
}

Word WordSpace::oplus(const Word& x, const Word& y) const {
    check_size(x);
    check_size(y);
    Word r = x;
    for (std::size_t t = 0; t < r.c.size(); ++t) r.c[t] += y.c[t];
    return r;
}

GenSupport WordSpace::gen_support(const Word& w) const {
    check_standard(w);
    std::vector<std::uint32_t> masks(n_, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < m(); ++j)
            if (w.c[i * m() + j] != 0) masks[i] |= (1u << j);
    return GenSupport(std::move(masks));
}

unsigned WordSpace::hamming_weight(const Word& w) const {
    check_standard(w);
    unsigned weight = 0;
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < m(); ++j) {
            if (w.c[i * m() + j] != 0) {
                ++weight;
                break;
            }
        }
    }
    return weight;
}

bool WordSpace::subword(const Word& x, const Word& y) const {
    check_standard(x);
    check_standard(y);
    for (std::size_t t = 0; t < x.c.size(); ++t)
        if (x.c[t] > y.c[t]) return false;
    return true;
}

bool WordSpace::subword1(const Word& x, const Word& y) const {
    if (!subword(x, y)) return false;
    // With x <= y coefficient-wise the vector difference y - x is literally
    // the coefficient difference, so disjoint supports means each position is
    // either exhausted or untouched.
    for (std::size_t t = 0; t < x.c.size(); ++t)
        if (x.c[t] != 0 && x.c[t] != y.c[t]) return false;
    return true;
}

Word WordSpace::vs_add(const Word& x, const Word& y) const {
    check_standard(x);
    check_standard(y);
    Word r = zero_word();
    for (std::size_t t = 0; t < r.c.size(); ++t) r.c[t] = (x.c[t] + y.c[t]) % p();
    return r;
}

Word WordSpace::vs_sub(const Word& x, const Word& y) const {
    check_standard(x);
    check_standard(y);
    Word r = zero_word();
    for (std::size_t t = 0; t < r.c.size(); ++t) r.c[t] = (x.c[t] + p() - y.c[t]) % p();
    return r;
}

Word WordSpace::vs_neg(const Word& x) const {
    check_standard(x);
    Word r = zero_word();
    for (std::size_t t = 0; t < r.c.size(); ++t) r.c[t] = (p() - x.c[t]) % p();
    return r;
}

FieldElement WordSpace::coord(const Word& w, unsigned i) const {
    check_standard(w);
    if (i < 1 || i > n_) throw std::invalid_argument("coordinate out of range");
    std::vector<unsigned> digits(m());
    for (unsigned j = 0; j < m(); ++j) digits[j] = w.c[(i - 1) * m() + j];
    return field_.from_coords(digits);
}

void WordSpace::set_coord(Word& w, unsigned i, const FieldElement& e) const {
    check_size(w);
    if (i < 1 || i > n_) throw std::invalid_argument("coordinate out of range");
    std::vector<unsigned> digits = field_.coords(e);
    for (unsigned j = 0; j < m(); ++j) w.c[(i - 1) * m() + j] = digits[j];
}

std::uint64_t WordSpace::index_of(const Word& w) const {
    check_standard(w);
    std::uint64_t idx = 0;
    for (std::size_t t = w.c.size(); t-- > 0;) idx = idx * p() + w.c[t];
    return idx;
}

Word WordSpace::word_at(std::uint64_t index) const {
    if (index >= count_) throw std::invalid_argument("word index out of range");
    Word w = zero_word();
    for (std::size_t t = 0; t < w.c.size(); ++t) {
        w.c[t] = static_cast<std::uint32_t>(index % p());
        index /= p();
    }
    return w;
}

int WordSpace::tie_compare(TieBreak tb, const Word& x, const Word& y) const {
    check_size(x);
    check_size(y);
    switch (tb) {
        case TieBreak::Lex:
            for (std::size_t t = 0; t < x.c.size(); ++t) {
                if (x.c[t] != y.c[t]) return x.c[t] < y.c[t] ? -1 : 1;
            }
            return 0;
        case TieBreak::Colex:
            for (std::size_t t = x.c.size(); t-- > 0;) {
                if (x.c[t] != y.c[t]) return x.c[t] < y.c[t] ? -1 : 1;
            }
            return 0;
        case TieBreak::DegLex: {
            std::uint64_t sx = 0, sy = 0;
            for (std::size_t t = 0; t < x.c.size(); ++t) {
                sx += x.c[t];
                sy += y.c[t];
            }
            if (sx != sy) return sx < sy ? -1 : 1;
            return tie_compare(TieBreak::Lex, x, y);
        }
    }
    return 0;
}

int WordSpace::compare(const WeightCompatibleOrder& ord, const Word& x, const Word& y) const {
    unsigned wx = hamming_weight(x);
    unsigned wy = hamming_weight(y);
    if (wx != wy) return wx < wy ? -1 : 1;
    return tie_compare(ord.tie, x, y);
}

Word WordSpace::parse_word(const std::string& text) const {
    std::istringstream in(text);
    std::string coord_text;
    Word w = zero_word();
    unsigned i = 0;
    while (in >> coord_text) {
        if (i >= n_) throw ParseError("word has more than " + std::to_string(n_) + " coordinates");
        std::vector<unsigned> digits;
        std::size_t pos = 0;
        while (pos <= coord_text.size()) {
            std::size_t comma = coord_text.find(',', pos);
            std::string piece = coord_text.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad digit '" + piece + "' in word coordinate");
            digits.push_back(static_cast<unsigned>(std::stoul(piece)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (digits.size() != m())
            throw ParseError("coordinate '" + coord_text + "' must have " + std::to_string(m()) +
                             " digits");
        for (unsigned j = 0; j < m(); ++j) {
            if (digits[j] >= p()) throw ParseError("digit " + std::to_string(digits[j]) +
                                                   " is not below p = " + std::to_string(p()));
            w.c[i * m() + j] = digits[j];
        }
        ++i;
    }
    if (i != n_)
        throw ParseError("word has " + std::to_string(i) + " coordinates, expected " +
                         std::to_string(n_));
    return w;
}

std::string WordSpace::format_word(const Word& w) const {
    check_size(w);
    std::string out;
    for (unsigned i = 0; i < n_; ++i) {
        if (i) out += ' ';
        for (unsigned j = 0; j < m(); ++j) {
            if (j) out += ',';
            out += std::to_string(w.c[i * m() + j]);
        }
    }
    return out;
}

bool check_subword_implies_less(const WordSpace& ws, const WeightCompatibleOrder& ord) {
    // Walk every standard form y and every subword x of y directly.
    std::vector<std::uint32_t> x(ws.flat_size(), 0);
    for (std::uint64_t yi = 0; yi < ws.word_count(); ++yi) {
        Word y = ws.word_at(yi);
        std::fill(x.begin(), x.end(), 0);
        while (true) {
            Word xw{x};
            if (xw != y && !ws.less(ord, xw, y)) return false;
            // Odometer over 0..y_t per position.
            std::size_t t = 0;
            while (t < x.size() && x[t] == y.c[t]) {
                x[t] = 0;
                ++t;
            }
            if (t == x.size()) break;
            ++x[t];
        }
    }
    return true;
}

CheckReport verify_admissibility(const WordSpace& ws, TieBreak tb, unsigned coeff_bound) {
    CheckReport rep;
    rep.name = "admissibility of " + tie_break_name(tb);
    if (coeff_bound == 0) coeff_bound = ws.p() + 1;

    const std::size_t len = ws.flat_size();
    std::uint64_t total = 1;
    bool exhaustive = true;
    for (std::size_t t = 0; t < len; ++t) {
        total *= coeff_bound;
        if (total > 4096) {
            exhaustive = false;
            break;
        }
    }

    std::vector<Word> words;
    if (exhaustive) {
        std::vector<std::uint32_t> c(len, 0);
        while (true) {
            words.push_back(Word{c});
            std::size_t t = 0;
            while (t < len && c[t] + 1 == coeff_bound) {
                c[t] = 0;
                ++t;
            }
            if (t == len) break;
            ++c[t];
        }
    } else {
        std::mt19937_64 rng(0xc0ffee);
        std::uniform_int_distribution<std::uint32_t> pick(0, coeff_bound - 1);
        for (int s = 0; s < 64; ++s) {
            Word w = ws.zero_word();
            for (auto& v : w.c) v = pick(rng);
            words.push_back(w);
        }
        rep.note("coefficient tuples sampled");
    }

    const Word zero = ws.zero_word();
    for (const Word& x : words) {
        ++rep.cases;
        if (x != zero && ws.tie_compare(tb, zero, x) >= 0)
            rep.violation("zero is not minimal below " + std::to_string(x.c[0]));
    }
    // Translation invariance x < y implies x+z < y+z over sampled triples.
    std::mt19937_64 rng(0xfeedu);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    const std::size_t triples = exhaustive && words.size() <= 64
                                    ? words.size() * words.size() * words.size()
                                    : 20000;
    for (std::size_t s = 0; s < triples; ++s) {
        const Word* x;
        const Word* y;
        const Word* z;
        if (exhaustive && words.size() <= 64) {
            x = &words[s % words.size()];
            y = &words[(s / words.size()) % words.size()];
            z = &words[s / (words.size() * words.size())];
        } else {
            x = &words[pick(rng)];
            y = &words[pick(rng)];
            z = &words[pick(rng)];
        }
        ++rep.cases;
        int before = ws.tie_compare(tb, *x, *y);
        int after = ws.tie_compare(tb, ws.oplus(*x, *z), ws.oplus(*y, *z));
        if (before != after) rep.violation("translation changes comparison outcome");
    }
    return rep;
}

CheckReport verify_order_axioms(const WordSpace& ws, const WeightCompatibleOrder& ord,
                                std::uint64_t max_enum) {
    CheckReport rep;
    rep.name = "order axioms (" + tie_break_name(ord.tie) + ")";
    if (ws.word_count() > max_enum)
        throw BoundError("order axiom check over q^n words", ws.word_count(), max_enum);

    std::vector<Word> all;
    all.reserve(ws.word_count());
    for (std::uint64_t i = 0; i < ws.word_count(); ++i) all.push_back(ws.word_at(i));
    std::sort(all.begin(), all.end(),
              [&](const Word& a, const Word& b) { return ws.less(ord, a, b); });

    if (all.front() != ws.zero_word()) rep.violation("zero is not the minimum");
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        ++rep.cases;
        if (ws.compare(ord, all[i], all[i + 1]) >= 0 || ws.compare(ord, all[i + 1], all[i]) <= 0)
            rep.violation("sorted sequence is not strictly increasing at position " +
                          std::to_string(i));
        if (ws.hamming_weight(all[i]) > ws.hamming_weight(all[i + 1]))
            rep.violation("weight decreases along the order at position " + std::to_string(i));
    }

    if (all.size() <= 1500) {
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                ++rep.cases;
                int ij = ws.compare(ord, all[i], all[j]);
                int ji = ws.compare(ord, all[j], all[i]);
                if (ij != -ji) rep.violation("comparison is not antisymmetric");
                if ((ij == 0) != (i == j)) rep.violation("distinct words compare equal");
                if ((ij < 0) != (i < j)) rep.violation("comparison disagrees with sorted rank");
            }
    } else {
        std::mt19937_64 rng(0xabcdu);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int s = 0; s < 200000; ++s) {
            std::size_t i = pick(rng), j = pick(rng);
            ++rep.cases;
            int ij = ws.compare(ord, all[i], all[j]);
            if (ij != -ws.compare(ord, all[j], all[i]))
                rep.violation("comparison is not antisymmetric");
            if ((ij == 0) != (i == j)) rep.violation("distinct words compare equal");
            if ((ij < 0) != (i < j)) rep.violation("comparison disagrees with sorted rank");
        }
        rep.note("pairs sampled (space above 1500 words)");
    }

    CheckReport adm = verify_admissibility(ws, ord.tie);
    rep.cases += adm.cases;
    for (const auto& v : adm.violations) rep.violation("tie-breaker: " + v);
    rep.violation_count += adm.violation_count - adm.violations.size();

    ++rep.cases;
    if (!check_subword_implies_less(ws, ord))
        rep.violation("proper subword does not always precede its superword");
    return rep;
}

}  // namespace cosetlab
