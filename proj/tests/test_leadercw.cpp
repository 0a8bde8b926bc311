#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cosetlab/geometry.hpp"
#include "cosetlab/leadercw.hpp"
#include "cosetlab/leaderset.hpp"
#include "helpers.hpp"

using cosetlab::LeaderCodewordSet;
using cosetlab::LinearCode;
using cosetlab::ListClosure;
using cosetlab::TieBreak;
using cosetlab::Word;

namespace {

const char* const kFixtures[] = {"rep_3_1.code",     "hamming_7_4.code", "binary_6_3.code",
                                 "ternary_2_1.code", "ternary_4_2.code", "gf4_2_1.code",
                                 "gf4_4_2.code",     "gf9_3_1.code"};

}  // namespace

TEST_CASE("ternary [2,1] leader codewords, witnesses included") {
    ListClosure lc = cosetlab::build_list(testutil::ternary21());
    const cosetlab::WordSpace& ws = lc.code().space();
    LeaderCodewordSet set = cosetlab::leader_codewords(lc);

    REQUIRE(set.size() == 2);
    CHECK(testutil::fmt(ws, set.words()) == std::vector<std::string>{"1 1", "2 2"});
    CHECK(set.contains(ws.index_of(ws.parse_word("1 1"))));
    CHECK_FALSE(set.contains(ws.index_of(ws.parse_word("1 2"))));

    // Both members decompose in eight distinct ways; spot-check one fully.
    CHECK(set.items()[0].witnesses.size() == 8);
    CHECK(set.items()[1].witnesses.size() == 8);
    bool found = false;
    for (const cosetlab::LeaderWitness& w : set.items()[0].witnesses) {
        if (ws.format_word(w.n1) == "0 1" && w.i == 1 && w.j == 1 &&
            ws.format_word(w.n2) == "0 0")
            found = true;
        // Every witness replays: n1 + e_ij - n2 equals the member.
        Word v = ws.oplus(w.n1, ws.generator(w.i, w.j));
        CHECK(ws.is_standard_form(v));
        CHECK(ws.vs_sub(v, w.n2) == set.items()[0].word);
        CHECK(cosetlab::within_1_of_leaders(lc, w.n1));
        CHECK(cosetlab::within_1_of_leaders(lc, v));
    }
    CHECK(found);
}

TEST_CASE("repetition code: one leader codeword, six witnesses") {
    ListClosure lc = cosetlab::build_list(testutil::rep31());
    const cosetlab::WordSpace& ws = lc.code().space();
    LeaderCodewordSet set = cosetlab::leader_codewords(lc);
    REQUIRE(set.size() == 1);
    CHECK(ws.format_word(set.items()[0].word) == "1 1 1");
    // The all-ones word itself is past distance 1 from the leaders, so only
    // the six decompositions through the weight-2 words appear.
    CHECK(set.items()[0].witnesses.size() == 6);
    for (const cosetlab::LeaderWitness& w : set.items()[0].witnesses) {
        CHECK(ws.hamming_weight(w.n1) == 1);
        CHECK(ws.hamming_weight(w.n2) == 1);
    }
}

TEST_CASE("hamming [7,4]: the minimum-weight codewords and nothing else") {
    ListClosure lc = cosetlab::build_list(testutil::hamming74());
    const cosetlab::WordSpace& ws = lc.code().space();
    LeaderCodewordSet set = cosetlab::leader_codewords(lc);
    CHECK(set.size() == 7);
    for (const cosetlab::LeaderCodeword& lw : set.items())
        CHECK(ws.hamming_weight(lw.word) == 3);
}

TEST_CASE("closure extraction matches the literal definition everywhere") {
    for (const char* name : kFixtures) {
        LinearCode code = cosetlab::load_code_file(testutil::fixture(name));
        const cosetlab::WordSpace& ws = code.space();
        std::vector<Word> brute = cosetlab::leader_codewords_brute(code);
        for (TieBreak tb : {TieBreak::Lex, TieBreak::Colex}) {
            INFO(std::string(name), " under ", cosetlab::tie_break_name(tb));
            ListClosure lc = cosetlab::build_list(code, {tb});
            LeaderCodewordSet set = cosetlab::leader_codewords(lc);
            CHECK(testutil::fmt(ws, set.words()) == testutil::fmt(ws, brute));
            // Members are nonzero codewords by construction.
            for (const Word& w : set.words()) {
                CHECK(code.contains(w));
                CHECK(ws.hamming_weight(w) > 0);
            }
        }
    }
}

TEST_CASE("the four structural properties hold on the whole corpus") {
    for (const char* name : kFixtures) {
        LinearCode code = cosetlab::load_code_file(testutil::fixture(name));
        ListClosure lc = cosetlab::build_list(code);
        LeaderCodewordSet set = cosetlab::leader_codewords(lc);
        INFO(std::string(name));

        cosetlab::CheckReport ts = cosetlab::verify_test_set(set, lc);
        CHECK(ts.passed());
        CHECK(ts.cases == code.space().word_count());

        cosetlab::CheckReport wb = cosetlab::verify_weight_bound(set, lc);
        CHECK(wb.passed());
        REQUIRE(wb.notes.size() == 1);

        cosetlab::CheckReport zn = cosetlab::verify_zero_neighbour_props(set, lc);
        CHECK(zn.passed());
    }
}

TEST_CASE("the weight bound is tight on the repetition code") {
    ListClosure lc = cosetlab::build_list(testutil::rep31());
    LeaderCodewordSet set = cosetlab::leader_codewords(lc);
    cosetlab::CheckReport wb = cosetlab::verify_weight_bound(set, lc);
    REQUIRE(wb.notes.size() == 1);
    CHECK(wb.notes.front() == "max member weight 3, bound 3");
}

TEST_CASE("strict region sensitivity is reported, not failed") {
    ListClosure lc = cosetlab::build_list(testutil::ternary21());
    LeaderCodewordSet set = cosetlab::leader_codewords(lc);
    cosetlab::CheckReport rep = cosetlab::verify_zero_neighbour_props(set, lc, true);
    CHECK(rep.passed());
    bool mentioned = false;
    for (const std::string& n : rep.notes)
        if (n.find("strict region variant") != std::string::npos) mentioned = true;
    CHECK(mentioned);
}
