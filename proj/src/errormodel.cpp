#include "cosetlab/errormodel.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace cosetlab {

namespace {

// Proper subwords of y in the coordinate sense: zero out a nonempty subset of
// the nonzero coordinates and keep the others whole.  This is the vector-space
// subword relation (x_i equals 0 or y_i at every i).  An alternative reading
// at digit granularity would also admit partial coordinates when a coordinate
// packs several digits, but correctability is not monotone under that finer
// relation (some codes have a correctable word sitting digit-wise above an
// uncorrectable one), so everything here works coordinate-wise.  Calls
// fn(index) for each; stops early on false.
template <typename Fn>
void for_each_proper_subword_coord(const WordSpace& ws, const Word& y, Fn&& fn) {
    const unsigned m = ws.m();
    std::vector<unsigned> supp;
    for (unsigned i = 0; i < ws.n(); ++i) {
        for (unsigned j = 0; j < m; ++j) {
            if (y.c[i * m + j] != 0) {
                supp.push_back(i);
                break;
            }
        }
    }
    if (supp.size() > 30) throw std::invalid_argument("support too large to enumerate");
    const std::uint32_t full = static_cast<std::uint32_t>((1u << supp.size()) - 1);
    Word x = ws.zero_word();
    for (std::uint32_t mask = 0; mask < full; ++mask) {  // full mask = y itself, excluded
        std::fill(x.c.begin(), x.c.end(), 0);
        for (std::size_t b = 0; b < supp.size(); ++b) {
            if ((mask >> b) & 1u) {
                for (unsigned j = 0; j < m; ++j)
                    x.c[supp[b] * m + j] = y.c[supp[b] * m + j];
            }
        }
        if (!fn(ws.index_of(x))) return;
    }
}

std::vector<bool> minimal_uncorrectable_bits(const WordSpace& ws, const ErrorPartition& ep) {
    std::vector<bool> out(ep.word_count, false);
    for (std::uint64_t yi = 0; yi < ep.word_count; ++yi) {
        if (ep.correctable[yi]) continue;
        bool minimal = true;
        for_each_proper_subword_coord(ws, ws.word_at(yi), [&](std::uint64_t xi) {
            if (!ep.correctable[xi]) {
                minimal = false;
                return false;
            }
            return true;
        });
        if (minimal) out[yi] = true;
    }
    return out;
}

}  // namespace

ErrorPartition error_partition(const ListClosure& lc) {
    const WordSpace& ws = lc.code().space();
    ErrorPartition ep;
    ep.word_count = ws.word_count();
    ep.correctable.assign(ws.word_count(), false);
    for (const Word& w : canonical_leaders(lc)) {
        std::uint64_t idx = ws.index_of(w);
        ep.correctable[idx] = true;
        ep.e0.push_back(idx);
    }
    std::sort(ep.e0.begin(), ep.e0.end());
    assert(ep.e0.size() == lc.code().syndrome_count());
    return ep;
}

std::vector<Word> h_set(const LinearCode& code, const WeightCompatibleOrder& ord, const Word& y,
                        std::uint64_t max_enum) {
    const WordSpace& ws = code.space();
    std::vector<Word> out;
    for (const Word& c : code.codewords(max_enum))
        if (ws.less(ord, ws.vs_sub(y, c), y)) out.push_back(c);
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return ws.index_of(a) < ws.index_of(b); });
    return out;
}

std::vector<std::uint64_t> minimal_uncorrectable(const WordSpace& ws, const ErrorPartition& ep) {
    std::vector<bool> bits = minimal_uncorrectable_bits(ws, ep);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < ep.word_count; ++i)
        if (bits[i]) out.push_back(i);
    return out;
}

std::vector<std::uint64_t> maximal_correctable(const WordSpace& ws, const ErrorPartition& ep) {
    std::vector<std::uint64_t> out;
    const Field& f = ws.field();
    const unsigned q = f.size();
    for (std::uint64_t xi = 0; xi < ep.word_count; ++xi) {
        if (!ep.correctable[xi]) continue;
        Word x = ws.word_at(xi);
        std::vector<unsigned> free;  // coordinates x leaves empty, 1-based
        for (unsigned i = 1; i <= ws.n(); ++i)
            if (ws.coord(x, i) == f.zero()) free.push_back(i);
        // Proper superwords in the coordinate sense keep the occupied
        // coordinates whole and fill some of the free ones.
        bool maximal = true;
        Word y = x;
        std::vector<unsigned> odo(free.size(), 0);
        while (maximal) {
            std::size_t t = 0;
            while (t < odo.size() && odo[t] + 1 == q) {
                odo[t] = 0;
                ws.set_coord(y, free[t], f.zero());
                ++t;
            }
            if (t == odo.size()) break;
            ++odo[t];
            ws.set_coord(y, free[t], f.element(odo[t]));
            if (ep.correctable[ws.index_of(y)]) maximal = false;
        }
        if (maximal) out.push_back(xi);
    }
    return out;
}

std::vector<std::uint64_t> larger_halves(const WordSpace& ws, const WeightCompatibleOrder& ord,
                                         const Word& c, LhMinimality mode,
                                         std::uint64_t max_enum) {
    if (ws.word_count() > max_enum)
        throw BoundError("larger-half enumeration q^n", ws.word_count(), max_enum);
    if (ws.hamming_weight(c) == 0) throw std::invalid_argument("larger halves of the zero word");

    std::vector<std::uint64_t> out;
    if (mode == LhMinimality::Order) {
        // The order-minimum word u with u - c strictly below u, scanned over
        // the whole space; kept for comparison against the default reading.
        Word best;
        bool have = false;
        for (std::uint64_t ui = 0; ui < ws.word_count(); ++ui) {
            Word u = ws.word_at(ui);
            if (!ws.less(ord, ws.vs_sub(u, c), u)) continue;
            if (!have || ws.less(ord, u, best)) {
                best = u;
                have = true;
            }
        }
        if (have) out.push_back(ws.index_of(best));
        return out;
    }

    // A larger half of c is a word u that keeps more weight than it drops:
    // the standard form of u - c lands strictly below u in the order, and u
    // is minimal with that property under the coordinate subword relation,
    // inside the weight window w(c) <= 2 w(u) <= w(c) + 2.  The lower bound
    // holds for every qualifier, since w(u - c) <= w(u) and the two sides
    // cover c, and minimal qualifiers keep only coordinates of c; the upper
    // cut is a genuine filter, because -c itself qualifies at full weight and
    // can be subword-minimal, which no weight sandwich survives.
    const unsigned wc = ws.hamming_weight(c);
    std::vector<bool> qualifies(ws.word_count(), false);
    for (std::uint64_t ui = 0; ui < ws.word_count(); ++ui) {
        Word u = ws.word_at(ui);
        if (ws.less(ord, ws.vs_sub(u, c), u)) qualifies[ui] = true;
    }
    for (std::uint64_t ui = 0; ui < ws.word_count(); ++ui) {
        if (!qualifies[ui]) continue;
        Word u = ws.word_at(ui);
        unsigned wu = ws.hamming_weight(u);
        if (2 * wu > wc + 2) continue;
        bool minimal = true;
        for_each_proper_subword_coord(ws, u, [&](std::uint64_t xi) {
            if (qualifies[xi]) {
                minimal = false;
                return false;
            }
            return true;
        });
        if (!minimal) continue;
        assert(wc <= 2 * wu);
        out.push_back(ui);
    }
    return out;
}

CheckReport verify_larger_half_sandwich(const LinearCode& code, const WeightCompatibleOrder& ord,
                                        std::uint64_t max_enum) {
    CheckReport rep;
    rep.name = "larger-half weight sandwich";
    const WordSpace& ws = code.space();
    for (const Word& c : code.codewords(max_enum)) {
        unsigned wc = ws.hamming_weight(c);
        if (wc == 0) continue;
        for (std::uint64_t ui : larger_halves(ws, ord, c, LhMinimality::Subword1, max_enum)) {
            ++rep.cases;
            unsigned wu = ws.hamming_weight(ws.word_at(ui));
            if (!(wc <= 2 * wu && 2 * wu <= wc + 2))
                rep.violation("codeword " + ws.format_word(c) + " has larger half " +
                              ws.format_word(ws.word_at(ui)) + " outside the sandwich");
        }
    }
    return rep;
}

CheckReport verify_monotone_structure(const WordSpace& ws, const ErrorPartition& ep) {
    CheckReport rep;
    rep.name = "correctability is monotone under the subword relation";

    std::uint64_t mixed_support_pairs = 0;
    for (std::uint64_t yi = 0; yi < ep.word_count; ++yi) {
        Word y = ws.word_at(yi);
        bool y_correctable = ep.correctable[yi];
        for_each_proper_subword_coord(ws, y, [&](std::uint64_t xi) {
            ++rep.cases;
            if (y_correctable && !ep.correctable[xi])
                rep.violation("correctable " + ws.format_word(y) +
                              " sits above uncorrectable " + ws.format_word(ws.word_at(xi)));
            return true;
        });

        // Same generalized support, smaller coefficients: correctability may
        // differ here, which is tracked but not an error.
        std::vector<std::size_t> supp;
        for (std::size_t t = 0; t < y.c.size(); ++t)
            if (y.c[t] != 0) supp.push_back(t);
        Word v = y;
        bool moved = true;
        while (moved) {
            std::size_t t = 0;
            while (t < supp.size() && v.c[supp[t]] == 1) {
                v.c[supp[t]] = y.c[supp[t]];
                ++t;
            }
            if (t == supp.size()) {
                moved = false;
                break;
            }
            --v.c[supp[t]];
            if (v != y && ep.correctable[ws.index_of(v)] != y_correctable) ++mixed_support_pairs;
        }
    }
    if (mixed_support_pairs)
        rep.note("pairs with equal support but different correctability: " +
                 std::to_string(mixed_support_pairs));
    return rep;
}

CheckReport verify_h_characterization(const LinearCode& code, const WeightCompatibleOrder& ord,
                                      const ErrorPartition& ep, std::uint64_t max_enum) {
    CheckReport rep;
    rep.name = "correctable words are exactly those with empty H";
    const WordSpace& ws = code.space();
    const std::vector<Word> cws = code.codewords(max_enum);

    for (std::uint64_t yi = 0; yi < ep.word_count; ++yi) {
        Word y = ws.word_at(yi);
        ++rep.cases;
        bool empty = true;
        for (const Word& c : cws)
            if (ws.less(ord, ws.vs_sub(y, c), y)) {
                empty = false;
                break;
            }
        if (empty != ep.correctable[yi])
            rep.violation("word " + ws.format_word(y) + (empty ? " has empty H but is uncorrectable"
                                                                : " has nonempty H but is correctable"));
    }
    return rep;
}

TrialSetReport is_trial_set(const ListClosure& lc, const ErrorPartition& ep,
                            const std::vector<Word>& t) {
    TrialSetReport out;
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();
    const WeightCompatibleOrder& ord = lc.order();

    out.definition.name = "trial set by definition";
    std::uint64_t sum_convention_disagreements = 0;
    for (std::uint64_t yi = 0; yi < ep.word_count; ++yi) {
        Word y = ws.word_at(yi);
        ++out.definition.cases;
        bool pulled_down = false;
        bool pulled_down_sum = false;
        for (const Word& c : t) {
            if (ws.less(ord, ws.vs_sub(y, c), y)) pulled_down = true;
            if (ws.less(ord, ws.vs_add(y, c), y)) pulled_down_sum = true;
        }
        if (ep.correctable[yi] == pulled_down)
            out.definition.violation(
                ep.correctable[yi]
                    ? "correctable " + ws.format_word(y) + " is pulled down by a member"
                    : "uncorrectable " + ws.format_word(y) + " is pulled down by no member");
        if (pulled_down != pulled_down_sum) ++sum_convention_disagreements;
    }
    if (sum_convention_disagreements)
        out.notes.push_back("difference and sum conventions disagree on " +
                            std::to_string(sum_convention_disagreements) + " words");

    const std::vector<std::uint64_t> m1 = minimal_uncorrectable(ws, ep);

    out.hitting.name = "every minimal uncorrectable word is pulled down";
    for (std::uint64_t yi : m1) {
        Word y = ws.word_at(yi);
        ++out.hitting.cases;
        bool hit = false;
        for (const Word& c : t)
            if (ws.less(ord, ws.vs_sub(y, c), y)) {
                hit = true;
                break;
            }
        if (!hit)
            out.hitting.violation("minimal uncorrectable " + ws.format_word(y) +
                                  " is pulled down by no member");
    }

    out.larger_half.name = "minimal uncorrectable words are larger halves of members";
    std::vector<bool> lh_union(ws.word_count(), false);
    for (const Word& c : t)
        for (std::uint64_t ui : larger_halves(ws, ord, c))
            lh_union[ui] = true;
    for (std::uint64_t yi : m1) {
        ++out.larger_half.cases;
        if (!lh_union[yi])
            out.larger_half.violation("minimal uncorrectable " + ws.format_word(ws.word_at(yi)) +
                                      " is a larger half of no member");
    }

    std::size_t open_negations = 0;
    std::set<std::uint64_t> t_indices;
    for (const Word& c : t) t_indices.insert(ws.index_of(c));
    for (const Word& c : t)
        if (!t_indices.count(ws.index_of(ws.vs_neg(c)))) ++open_negations;
    out.notes.push_back(open_negations == 0
                            ? "the set is closed under negation"
                            : std::to_string(open_negations) + " members lack their negation");

    if (out.definition.passed() != out.hitting.passed() ||
        out.definition.passed() != out.larger_half.passed())
        out.notes.push_back("finding: the three trial-set routes disagree");
    return out;
}

TrialSet extract_trial_set(const ListClosure& lc, const LeaderCodewordSet& lcw,
                           const ErrorPartition& ep) {
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();
    const std::vector<bool> minimal = minimal_uncorrectable_bits(ws, ep);

    TrialSet out;
    std::set<std::uint64_t> seen;
    for (const ListEntry& entry : lc.members()) {
        if (ep.correctable[entry.word_index] || !minimal[entry.word_index]) continue;
        const Word& t = entry.word;
        const Word& tk = lc.table().at(entry.syndrome).canonical_leader;
        Word c = ws.vs_sub(t, tk);
        if (seen.insert(ws.index_of(c)).second) {
            out.members.push_back(c);
            out.provenance.emplace_back(t, tk);
        }
    }

    std::vector<std::size_t> perm(out.members.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return ws.index_of(out.members[a]) < ws.index_of(out.members[b]);
    });
    TrialSet sorted;
    for (std::size_t i : perm) {
        sorted.members.push_back(out.members[i]);
        sorted.provenance.push_back(out.provenance[i]);
    }

    TrialSetReport check = is_trial_set(lc, ep, sorted.members);
    if (!check.passed()) {
        const CheckReport& failing = !check.definition.passed()
                                         ? check.definition
                                         : (!check.hitting.passed() ? check.hitting
                                                                    : check.larger_half);
        throw std::runtime_error("extracted set is not a trial set: " + failing.violations.front());
    }
    for (const Word& c : sorted.members)
        if (!lcw.contains(ws.index_of(c)))
            throw std::runtime_error("extracted member " + ws.format_word(c) +
                                     " is not a leader codeword");
    const std::vector<std::uint64_t> m1 = minimal_uncorrectable(ws, ep);
    std::vector<bool> m1_bits(ws.word_count(), false);
    for (std::uint64_t yi : m1) m1_bits[yi] = true;
    for (const Word& c : sorted.members) {
        bool witnessed = false;
        for (std::uint64_t ui : larger_halves(ws, lc.order(), c)) {
            if (!m1_bits[ui]) continue;
            if (ep.correctable[ws.index_of(ws.vs_sub(ws.word_at(ui), c))]) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed)
            throw std::runtime_error("extracted member " + ws.format_word(c) +
                                     " has no minimal uncorrectable larger half landing in E0");
    }
    return sorted;
}

DecodeResult gradient_decode(const WordSpace& ws, const WeightCompatibleOrder& ord, const Word& y,
                             const std::vector<Word>& t) {
    std::vector<Word> candidates;
    std::set<std::uint64_t> seen;
    for (const Word& c : t) {
        if (seen.insert(ws.index_of(c)).second) candidates.push_back(c);
        Word n = ws.vs_neg(c);
        if (seen.insert(ws.index_of(n)).second) candidates.push_back(n);
    }

    DecodeResult res;
    res.residual = y;
    while (true) {
        const Word* best = nullptr;
        Word best_word;
        for (const Word& c : candidates) {
            Word d = ws.vs_sub(res.residual, c);
            if (!ws.less(ord, d, res.residual)) continue;
            if (!best || ws.less(ord, d, best_word)) {
                best_word = d;
                best = &c;
            }
        }
        if (!best) break;
        res.residual = best_word;
        ++res.steps;
        if (res.steps > ws.word_count())
            throw std::logic_error("decoder failed to terminate");  // strict descent forbids this
    }
    res.codeword = ws.vs_sub(y, res.residual);
    return res;
}

CheckReport verify_decoder(const ListClosure& lc, const std::vector<Word>& t) {
    CheckReport rep;
    rep.name = "decoder residuals are canonical leaders";
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();

    for (std::uint64_t yi = 0; yi < ws.word_count(); ++yi) {
        Word y = ws.word_at(yi);
        ++rep.cases;
        DecodeResult res = gradient_decode(ws, lc.order(), y, t);
        const CosetRecord& rec = lc.table().at(code.syndrome_index(y));
        if (res.residual != rec.canonical_leader) {
            rep.violation("word " + ws.format_word(y) + " decodes to residual " +
                          ws.format_word(res.residual) + " instead of " +
                          ws.format_word(rec.canonical_leader));
            continue;
        }
        if (!code.contains(res.codeword))
            rep.violation("word " + ws.format_word(y) + " yields a non-codeword");
        if (ws.hamming_weight(ws.vs_sub(y, res.codeword)) != rec.weight)
            rep.violation("word " + ws.format_word(y) +
                          " is not decoded at coset-weight distance");
    }
    return rep;
}

std::vector<std::vector<Word>> minimal_trial_sets(const ListClosure& lc, const ErrorPartition& ep,
                                                  std::uint64_t max_enum) {
    const LinearCode& code = lc.code();
    const WordSpace& ws = code.space();
    const WeightCompatibleOrder& ord = lc.order();

    unsigned rho = 0;
    for (std::uint64_t s = 0; s < lc.table().slot_count(); ++s)
        rho = std::max(rho, lc.table().at(s).weight);
    // Candidate members are the nonzero codewords of weight at most twice the
    // covering radius plus one, the weight range the leader codewords live
    // in.  Heavier codewords can complete an inclusion-minimal hitting set
    // only through order tie-breaks, and sets built that way say nothing
    // about the containment this search exists to probe.
    std::vector<Word> candidates;
    for (const Word& c : code.codewords(max_enum)) {
        unsigned wcand = ws.hamming_weight(c);
        if (wcand != 0 && wcand <= 2 * rho + 1) candidates.push_back(c);
    }
    if (candidates.size() > 63)
        throw BoundError("minimal trial set search over candidate codewords", candidates.size(),
                         63);

    // For each uncorrectable word, the mask of candidates pulling it down.
    // A set is a trial set exactly when it hits all of these.
    std::vector<std::uint64_t> family;
    for (std::uint64_t yi = 0; yi < ep.word_count; ++yi) {
        if (ep.correctable[yi]) continue;
        Word y = ws.word_at(yi);
        std::uint64_t mask = 0;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci)
            if (ws.less(ord, ws.vs_sub(y, candidates[ci]), y)) mask |= std::uint64_t{1} << ci;
        assert(mask != 0);
        family.push_back(mask);
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    // Supersets of another constraint are implied by it.
    std::vector<std::uint64_t> reduced;
    for (std::uint64_t a : family) {
        bool implied = false;
        for (std::uint64_t b : family)
            if (b != a && (a & b) == b) {
                implied = true;
                break;
            }
        if (!implied) reduced.push_back(a);
    }

    auto hits_all = [&](std::uint64_t chosen) {
        for (std::uint64_t s : reduced)
            if (!(s & chosen)) return false;
        return true;
    };

    std::set<std::uint64_t> results;
    std::set<std::uint64_t> visited;
    std::vector<std::uint64_t> stack{0};
    while (!stack.empty()) {
        std::uint64_t chosen = stack.back();
        stack.pop_back();
        if (!visited.insert(chosen).second) continue;  // reached along another branch order
        std::uint64_t unhit = 0;
        for (std::uint64_t s : reduced)
            if (!(s & chosen)) {
                unhit = s;
                break;
            }
        if (!unhit) {
            results.insert(chosen);
            continue;
        }
        for (std::size_t ci = 0; ci < candidates.size(); ++ci)
            if ((unhit >> ci) & 1u) stack.push_back(chosen | (std::uint64_t{1} << ci));
    }

    std::vector<std::vector<Word>> out;
    for (std::uint64_t mask : results) {
        bool minimal = true;
        for (std::size_t ci = 0; ci < candidates.size() && minimal; ++ci)
            if ((mask >> ci) & 1u)
                if (hits_all(mask & ~(std::uint64_t{1} << ci))) minimal = false;
        if (!minimal) continue;
        std::vector<Word> set;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci)
            if ((mask >> ci) & 1u) set.push_back(candidates[ci]);
        std::sort(set.begin(), set.end(),
                  [&](const Word& a, const Word& b) { return ws.index_of(a) < ws.index_of(b); });
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end(), [&](const std::vector<Word>& a, const std::vector<Word>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t ia = ws.index_of(a[i]), ib = ws.index_of(b[i]);
            if (ia != ib) return ia < ib;
        }
        return false;
    });
    return out;
}

}  // namespace cosetlab
