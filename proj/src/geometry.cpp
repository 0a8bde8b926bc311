#include "cosetlab/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosetlab {

unsigned hamming_distance(const WordSpace& ws, const Word& a, const Word& b) {
    if (a.c.size() != b.c.size()) throw std::invalid_argument("word lengths differ");
    const unsigned m = ws.m();
    unsigned dist = 0;
    for (unsigned i = 0; i < ws.n(); ++i) {
        for (unsigned j = 0; j < m; ++j) {
            if (a.c[i * m + j] != b.c[i * m + j]) {
                ++dist;
                break;
            }
        }
    }
    return dist;
}

unsigned distance_to_set(const WordSpace& ws, const Word& w, const std::vector<Word>& set) {
    if (set.empty()) throw std::invalid_argument("distance to an empty set");
    unsigned best = ws.n() + 1;
    for (const Word& a : set) best = std::min(best, hamming_distance(ws, w, a));
    return best;
}

namespace {

void check_space_bound(const WordSpace& ws, std::uint64_t max_enum) {
    if (ws.word_count() > max_enum)
        throw BoundError("word-space enumeration q^n", ws.word_count(), max_enum);
}

std::vector<Word> all_words(const WordSpace& ws) {
    std::vector<Word> out;
    out.reserve(ws.word_count());
    for (std::uint64_t i = 0; i < ws.word_count(); ++i) out.push_back(ws.word_at(i));
    return out;
}

std::vector<bool> to_bitmap(const WordSpace& ws, const WordIndexSet& a) {
    std::vector<bool> bits(ws.word_count(), false);
    for (std::uint64_t idx : a) bits.at(idx) = true;
    return bits;
}

}  // namespace

WordIndexSet voronoi(const LinearCode& code, const Word& z, const VoronoiOptions& opts) {
    const WordSpace& ws = code.space();
    check_space_bound(ws, opts.max_enum);
    if (!code.contains(z)) throw std::invalid_argument("region center must be a codeword");

    std::vector<Word> competitors;
    for (const Word& c : code.codewords(opts.max_enum))
        if (!opts.strict || ws.hamming_weight(c) != 0) competitors.push_back(c);

    WordIndexSet region;
    const std::vector<Word> words = all_words(ws);
    for (std::uint64_t yi = 0; yi < words.size(); ++yi) {
        unsigned dz = hamming_distance(ws, words[yi], z);
        bool inside = true;
        for (const Word& c : competitors) {
            if (hamming_distance(ws, words[yi], c) < dz) {
                inside = false;
                break;
            }
        }
        if (inside) region.push_back(yi);
    }
    return region;
}

WordIndexSet x_operator(const WordSpace& ws, const WordIndexSet& a, std::uint64_t max_enum) {
    check_space_bound(ws, max_enum);
    std::vector<Word> members;
    members.reserve(a.size());
    for (std::uint64_t idx : a) members.push_back(ws.word_at(idx));

    WordIndexSet out;
    if (members.empty()) return out;
    const std::vector<Word> words = all_words(ws);
    for (std::uint64_t yi = 0; yi < words.size(); ++yi)
        if (distance_to_set(ws, words[yi], members) == 1) out.push_back(yi);
    return out;
}

WordIndexSet boundary(const WordSpace& ws, const WordIndexSet& a, std::uint64_t max_enum) {
    check_space_bound(ws, max_enum);
    std::vector<bool> inside = to_bitmap(ws, a);
    WordIndexSet complement;
    for (std::uint64_t i = 0; i < ws.word_count(); ++i)
        if (!inside[i]) complement.push_back(i);

    WordIndexSet xa = x_operator(ws, a, max_enum);
    WordIndexSet xc = x_operator(ws, complement, max_enum);
    WordIndexSet out;
    std::set_union(xa.begin(), xa.end(), xc.begin(), xc.end(), std::back_inserter(out));
    return out;
}

std::vector<Word> zero_neighbours(const LinearCode& code, const VoronoiOptions& opts) {
    const WordSpace& ws = code.space();
    check_space_bound(ws, opts.max_enum);
    WordIndexSet d0 = voronoi(code, ws.zero_word(), opts);
    WordIndexSet delta0 = boundary(ws, d0, opts.max_enum);
    std::vector<bool> delta0_bits = to_bitmap(ws, delta0);

    std::vector<Word> out;
    for (const Word& z : code.codewords(opts.max_enum)) {
        if (ws.hamming_weight(z) == 0) continue;
        WordIndexSet dz = voronoi(code, z, opts);
        bool meets = false;
        for (std::uint64_t idx : boundary(ws, dz, opts.max_enum)) {
            if (delta0_bits[idx]) {
                meets = true;
                break;
            }
        }
        if (meets) out.push_back(z);
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return ws.index_of(a) < ws.index_of(b); });
    return out;
}

bool is_test_set(const LinearCode& code, const std::vector<Word>& t, std::uint64_t max_enum) {
    const WordSpace& ws = code.space();
    check_space_bound(ws, max_enum);
    std::vector<bool> leader = to_bitmap(ws, voronoi(code, ws.zero_word(), {false, max_enum}));

    for (std::uint64_t yi = 0; yi < ws.word_count(); ++yi) {
        if (leader[yi]) continue;
        Word y = ws.word_at(yi);
        unsigned wy = ws.hamming_weight(y);
        bool improved = false;
        for (const Word& v : t) {
            if (ws.hamming_weight(ws.vs_sub(y, v)) < wy) {
                improved = true;
                break;
            }
        }
        if (!improved) return false;
    }
    return true;
}

BruteCosets brute_cosets(const LinearCode& code, std::uint64_t max_enum) {
    const WordSpace& ws = code.space();
    check_space_bound(ws, max_enum);
    const std::vector<Word> cws = code.codewords(max_enum);

    BruteCosets out;
    out.coset_of.assign(ws.word_count(), UINT32_MAX);
    for (std::uint64_t wi = 0; wi < ws.word_count(); ++wi) {
        if (out.coset_of[wi] != UINT32_MAX) continue;
        std::uint32_t id = static_cast<std::uint32_t>(out.cosets.size());
        std::vector<std::uint64_t> members;
        Word w = ws.word_at(wi);
        for (const Word& c : cws) {
            std::uint64_t idx = ws.index_of(ws.vs_add(w, c));
            out.coset_of[idx] = id;
            members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        out.cosets.push_back(std::move(members));
    }
    return out;
}

std::vector<Word> coset_leaders_brute(const LinearCode& code, std::uint64_t max_enum) {
    const WordSpace& ws = code.space();
    BruteCosets parts = brute_cosets(code, max_enum);
    std::vector<Word> out;
    for (const auto& coset : parts.cosets) {
        unsigned best = ws.n() + 1;
        for (std::uint64_t idx : coset)
            best = std::min(best, ws.hamming_weight(ws.word_at(idx)));
        for (std::uint64_t idx : coset) {
            Word w = ws.word_at(idx);
            if (ws.hamming_weight(w) == best) out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return ws.index_of(a) < ws.index_of(b); });
    return out;
}

std::vector<Word> canonical_leaders_brute(const LinearCode& code, const WeightCompatibleOrder& ord,
                                          std::uint64_t max_enum) {
    const WordSpace& ws = code.space();
    BruteCosets parts = brute_cosets(code, max_enum);
    std::vector<Word> out;
    for (const auto& coset : parts.cosets) {
        Word best = ws.word_at(coset.front());
        for (std::uint64_t idx : coset) {
            Word w = ws.word_at(idx);
            if (ws.less(ord, w, best)) best = std::move(w);
        }
        out.push_back(std::move(best));
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return ws.index_of(a) < ws.index_of(b); });
    return out;
}

std::vector<Word> leader_codewords_brute(const LinearCode& code, std::uint64_t max_enum) {
    const WordSpace& ws = code.space();
    check_space_bound(ws, max_enum);
    const std::vector<Word> cl = coset_leaders_brute(code, max_enum);

    // Distance to the leader set for every word, by literal scan.
    std::vector<unsigned> dist(ws.word_count());
    for (std::uint64_t wi = 0; wi < ws.word_count(); ++wi)
        dist[wi] = distance_to_set(ws, ws.word_at(wi), cl);

    const unsigned p = ws.p();
    std::vector<std::uint64_t> found;
    for (std::uint64_t ni = 0; ni < ws.word_count(); ++ni) {
        Word n1 = ws.word_at(ni);
        if (dist[ni] > 1) continue;
        for (std::size_t t = 0; t < n1.c.size(); ++t) {
            if (n1.c[t] + 1 >= p) continue;  // sum would leave standard form
            Word w = n1;
            ++w.c[t];
            std::uint64_t wi = ws.index_of(w);
            if (dist[wi] > 1) continue;
            for (const Word& n2 : cl) {
                Word cand = ws.vs_sub(w, n2);
                if (ws.hamming_weight(cand) == 0) continue;
                if (!code.contains(cand)) continue;
                found.push_back(ws.index_of(cand));
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<Word> out;
    out.reserve(found.size());
    for (std::uint64_t idx : found) out.push_back(ws.word_at(idx));
    return out;
}

}  // namespace cosetlab
