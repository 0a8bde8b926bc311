#include "cosetlab/leadercw.hpp"

#include <algorithm>
#include <map>

#include "cosetlab/geometry.hpp"

namespace cosetlab {

LeaderCodewordSet::LeaderCodewordSet(std::vector<LeaderCodeword> items,
                                     std::vector<std::uint64_t> indices)
    : items_(std::move(items)), indices_(std::move(indices)) {}

std::vector<Word> LeaderCodewordSet::words() const {
    std::vector<Word> out;
    out.reserve(items_.size());
    for (const LeaderCodeword& lw : items_) out.push_back(lw.word);
    return out;
}

bool LeaderCodewordSet::contains(std::uint64_t word_index) const {
    return std::binary_search(indices_.begin(), indices_.end(), word_index);
}

LeaderCodewordSet leader_codewords(const ListClosure& lc) {
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();
    const unsigned m = ws.m();

    std::map<std::uint64_t, LeaderCodeword> found;
    for (const ListEntry& entry : lc.members()) {
        const Word& w = entry.word;
        if (!within_1_of_leaders(lc, w)) continue;
        const CosetRecord& rec = lc.table().at(entry.syndrome);
        for (std::size_t t = 0; t < w.c.size(); ++t) {
            if (w.c[t] == 0) continue;
            Word n1 = w;
            --n1.c[t];
            if (!within_1_of_leaders(lc, n1)) continue;
            for (const Word& n2 : rec.leaders) {
                Word cand = ws.vs_sub(w, n2);
                if (ws.hamming_weight(cand) == 0) continue;
                std::uint64_t idx = ws.index_of(cand);
                auto it = found.find(idx);
                if (it == found.end())
                    it = found.emplace(idx, LeaderCodeword{cand, {}}).first;
                it->second.witnesses.push_back(LeaderWitness{
                    n1, static_cast<unsigned>(t / m) + 1, static_cast<unsigned>(t % m) + 1, n2});
            }
        }
    }

    std::vector<LeaderCodeword> items;
    std::vector<std::uint64_t> indices;
    items.reserve(found.size());
    for (auto& kv : found) {
        indices.push_back(kv.first);
        items.push_back(std::move(kv.second));
    }
    return LeaderCodewordSet(std::move(items), std::move(indices));
}

CheckReport verify_test_set(const LeaderCodewordSet& set, const ListClosure& lc) {
    CheckReport rep;
    rep.name = "leader codewords form a test set";
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();
    const std::vector<Word> members = set.words();

    for (std::uint64_t yi = 0; yi < ws.word_count(); ++yi) {
        Word y = ws.word_at(yi);
        ++rep.cases;
        unsigned wy = ws.hamming_weight(y);
        if (wy == lc.table().at(code.syndrome_index(y)).weight) continue;  // coset leader
        bool reduced = false;
        for (const Word& v : members) {
            if (ws.hamming_weight(ws.vs_sub(y, v)) < wy) {
                reduced = true;
                break;
            }
        }
        if (!reduced)
            rep.violation("non-leader " + ws.format_word(y) + " is reduced by no member");
    }
    return rep;
}

CheckReport verify_weight_bound(const LeaderCodewordSet& set, const ListClosure& lc) {
    CheckReport rep;
    rep.name = "leader codeword weights within 2*rho + 1";
    const WordSpace& ws = lc.code().space();
    const unsigned rho = covering_radius(lc.table());
    unsigned max_weight = 0;

    for (const LeaderCodeword& lw : set.items()) {
        ++rep.cases;
        unsigned w = ws.hamming_weight(lw.word);
        max_weight = std::max(max_weight, w);
        if (w > 2 * rho + 1)
            rep.violation("member " + ws.format_word(lw.word) + " has weight " +
                          std::to_string(w) + " > " + std::to_string(2 * rho + 1));
    }
    rep.note("max member weight " + std::to_string(max_weight) + ", bound " +
             std::to_string(2 * rho + 1));
    return rep;
}

CheckReport verify_zero_neighbour_props(const LeaderCodewordSet& set, const ListClosure& lc,
                                        bool strict_sensitivity) {
    CheckReport rep;
    rep.name = "leader codewords versus region boundaries";
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();

    const WordIndexSet d0 = voronoi(code, ws.zero_word());
    const WordIndexSet xd0 = x_operator(ws, d0);
    std::vector<bool> fringe(ws.word_count(), false);
    for (std::uint64_t idx : xd0) fringe[idx] = true;

    std::vector<Word> zn = zero_neighbours(code);
    std::vector<bool> zn_bits(ws.word_count(), false);
    for (const Word& z : zn) zn_bits[ws.index_of(z)] = true;

    // Members: the leader-region fringe must reach the member's region or its
    // own fringe, which also makes the member a zero neighbour.
    for (const LeaderCodeword& lw : set.items()) {
        ++rep.cases;
        WordIndexSet dw = voronoi(code, lw.word);
        bool meets = false;
        for (std::uint64_t idx : dw)
            if (fringe[idx]) {
                meets = true;
                break;
            }
        if (!meets)
            for (std::uint64_t idx : x_operator(ws, dw))
                if (fringe[idx]) {
                    meets = true;
                    break;
                }
        if (!meets)
            rep.violation("member " + ws.format_word(lw.word) +
                          " has region and fringe disjoint from the leader fringe");
        if (!zn_bits[ws.index_of(lw.word)])
            rep.violation("member " + ws.format_word(lw.word) + " is not a zero neighbour");
    }

    // Converse inclusion: a codeword whose region meets the leader fringe is a
    // member.
    for (const Word& c : code.codewords()) {
        if (ws.hamming_weight(c) == 0) continue;
        ++rep.cases;
        bool meets = false;
        for (std::uint64_t idx : voronoi(code, c))
            if (fringe[idx]) {
                meets = true;
                break;
            }
        if (meets && !set.contains(ws.index_of(c)))
            rep.violation("codeword " + ws.format_word(c) +
                          " meets the leader fringe but is not a member");
    }

    if (strict_sensitivity) {
        VoronoiOptions strict;
        strict.strict = true;
        std::vector<Word> zn_strict = zero_neighbours(code, strict);
        if (zn_strict.size() != zn.size())
            rep.note("strict region variant changes the zero-neighbour count from " +
                     std::to_string(zn.size()) + " to " + std::to_string(zn_strict.size()));
        else {
            bool same = true;
            for (std::size_t i = 0; i < zn.size(); ++i)
                if (zn[i] != zn_strict[i]) same = false;
            rep.note(same ? "strict region variant leaves the zero neighbours unchanged"
                          : "strict region variant changes the zero-neighbour set");
        }
    }
    return rep;
}

}  // namespace cosetlab
