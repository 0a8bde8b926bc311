#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cosetlab/geometry.hpp"
#include "cosetlab/leaderset.hpp"
#include "helpers.hpp"

using cosetlab::LinearCode;
using cosetlab::ListClosure;
using cosetlab::TieBreak;
using cosetlab::WeightCompatibleOrder;
using cosetlab::Word;

namespace {

const char* const kFixtures[] = {"rep_3_1.code",     "hamming_7_4.code", "binary_6_3.code",
                                 "ternary_2_1.code", "ternary_4_2.code", "gf4_2_1.code",
                                 "gf4_4_2.code",     "gf9_3_1.code"};

std::vector<std::string> member_words(const ListClosure& lc) {
    std::vector<std::string> out;
    for (const cosetlab::ListEntry& e : lc.members())
        out.push_back(lc.code().space().format_word(e.word));
    return out;
}

}  // namespace

TEST_CASE("ternary [2,1] closure, fully pinned down") {
    ListClosure lc = cosetlab::build_list(testutil::ternary21());
    const cosetlab::WordSpace& ws = lc.code().space();

    // Every word of GF(3)^2 enters, in exactly the order of the ordering.
    CHECK(member_words(lc) == std::vector<std::string>{"0 0", "0 1", "0 2", "1 0", "2 0",
                                                       "1 1", "1 2", "2 1", "2 2"});
    std::vector<unsigned> excess;
    for (const auto& e : lc.members()) excess.push_back(e.excess);
    CHECK(excess == std::vector<unsigned>{0, 0, 0, 0, 0, 2, 1, 1, 2});

    const cosetlab::CosetRecord& zero = lc.table().at(0);
    CHECK(zero.weight == 0);
    CHECK(ws.format_word(zero.canonical_leader) == "0 0");
    CHECK(testutil::fmt(ws, zero.leaders) == std::vector<std::string>{"0 0"});

    const cosetlab::CosetRecord& one = lc.table().at(1);
    CHECK(one.weight == 1);
    CHECK(ws.format_word(one.canonical_leader) == "0 1");
    CHECK(testutil::fmt(ws, one.leaders) == std::vector<std::string>{"2 0", "0 1"});

    const cosetlab::CosetRecord& two = lc.table().at(2);
    CHECK(two.weight == 1);
    CHECK(ws.format_word(two.canonical_leader) == "0 2");
    CHECK(testutil::fmt(ws, two.leaders) == std::vector<std::string>{"1 0", "0 2"});

    CHECK(testutil::fmt(ws, cosetlab::coset_leaders(lc)) ==
          std::vector<std::string>{"0 0", "1 0", "2 0", "0 1", "0 2"});
    CHECK(testutil::fmt(ws, cosetlab::canonical_leaders(lc)) ==
          std::vector<std::string>{"0 0", "0 1", "0 2"});
    CHECK(cosetlab::covering_radius(lc.table()) == 1);

    for (std::uint64_t i = 0; i < ws.word_count(); ++i) CHECK(cosetlab::within_1_of_leaders(lc, ws.word_at(i)));
}

TEST_CASE("binary repetition closure holds a member beyond excess 2") {
    ListClosure lc = cosetlab::build_list(testutil::rep31());
    const cosetlab::WordSpace& ws = lc.code().space();

    CHECK(member_words(lc) == std::vector<std::string>{"0 0 0", "0 0 1", "0 1 0", "1 0 0",
                                                       "0 1 1", "1 0 1", "1 1 0", "1 1 1"});
    // The all-ones word sits three above its coset weight (it is a codeword):
    // the construction may emit such members, it just never expands them.
    const cosetlab::ListEntry& last = lc.members().back();
    CHECK(ws.format_word(last.word) == "1 1 1");
    CHECK(last.excess == 3);
    REQUIRE(last.edges.size() == 3);
    for (const cosetlab::ParentEdge& e : last.edges) {
        CHECK(e.rule == 2);
        CHECK(lc.members()[e.parent].excess == 1);
    }
    // It is past distance 1 from the leaders, so only the expansion rules
    // explain its presence.
    CHECK_FALSE(cosetlab::within_1_of_leaders(lc, last.word));

    unsigned beyond = 0;
    for (const auto& e : lc.members())
        if (e.excess > 2) ++beyond;
    CHECK(beyond == 1);

    CHECK(testutil::fmt(ws, cosetlab::coset_leaders(lc)) ==
          std::vector<std::string>{"0 0 0", "1 0 0", "0 1 0", "0 0 1"});
    CHECK(cosetlab::covering_radius(lc.table()) == 1);
}

TEST_CASE("closure structure replays on every fixture and order") {
    for (const char* name : kFixtures) {
        LinearCode code = cosetlab::load_code_file(testutil::fixture(name));
        for (TieBreak tb : {TieBreak::Lex, TieBreak::Colex, TieBreak::DegLex}) {
            INFO(std::string(name), " under ", cosetlab::tie_break_name(tb));
            WeightCompatibleOrder ord{tb};
            ListClosure lc = cosetlab::build_list(code, ord);
            const cosetlab::WordSpace& ws = code.space();

            // Members pop in strictly increasing order.
            for (std::size_t i = 0; i + 1 < lc.members().size(); ++i)
                CHECK(ws.less(ord, lc.members()[i].word, lc.members()[i + 1].word));

            // Each recorded edge replays: the child is the parent plus one
            // generator, the parent came earlier, and the rule matches the
            // parent's excess at expansion time.
            for (std::size_t pos = 0; pos < lc.members().size(); ++pos) {
                const cosetlab::ListEntry& entry = lc.members()[pos];
                if (pos == 0) {
                    CHECK(entry.edges.empty());
                    CHECK(entry.word == ws.zero_word());
                    continue;
                }
                CHECK_FALSE(entry.edges.empty());
                for (const cosetlab::ParentEdge& e : entry.edges) {
                    REQUIRE(e.parent < pos);
                    const cosetlab::ListEntry& parent = lc.members()[e.parent];
                    CHECK(ws.oplus(parent.word, ws.generator(e.i, e.j)) == entry.word);
                    if (e.rule == 3) {
                        CHECK(parent.excess == 2);
                        // The expanded coordinate was already in the parent's
                        // support, and no leader of the parent's coset touches it.
                        CHECK_FALSE(ws.gen_support(parent.word).coord_empty(e.i));
                        for (const Word& leader : lc.table().at(parent.syndrome).leaders)
                            CHECK(ws.gen_support(leader).coord_empty(e.i));
                    } else {
                        CHECK(e.rule == parent.excess + 1);
                        CHECK(parent.excess <= 1);
                    }
                }
            }

            // Syndrome table agrees with the code on every member.
            for (const auto& entry : lc.members()) {
                CHECK(entry.syndrome == code.syndrome_index(entry.word));
                CHECK(entry.weight == ws.hamming_weight(entry.word));
                CHECK(entry.word_index == ws.index_of(entry.word));
                CHECK(lc.contains_word(entry.word_index));
                CHECK(lc.members()[lc.member_position(entry.word_index)].word == entry.word);
            }
        }
    }
}

TEST_CASE("closure leaders equal the brute-force leaders everywhere") {
    for (const char* name : kFixtures) {
        LinearCode code = cosetlab::load_code_file(testutil::fixture(name));
        const cosetlab::WordSpace& ws = code.space();
        std::vector<Word> brute = cosetlab::coset_leaders_brute(code);
        for (TieBreak tb : {TieBreak::Lex, TieBreak::Colex, TieBreak::DegLex}) {
            INFO(std::string(name), " under ", cosetlab::tie_break_name(tb));
            WeightCompatibleOrder ord{tb};
            ListClosure lc = cosetlab::build_list(code, ord);
            CHECK(testutil::fmt(ws, cosetlab::coset_leaders(lc)) == testutil::fmt(ws, brute));
            CHECK(testutil::fmt(ws, cosetlab::canonical_leaders(lc)) ==
                  testutil::fmt(ws, cosetlab::canonical_leaders_brute(code, ord)));
        }
    }
}

TEST_CASE("decomposition weight bounds and completeness hold everywhere") {
    for (const char* name : kFixtures) {
        LinearCode code = cosetlab::load_code_file(testutil::fixture(name));
        ListClosure lc = cosetlab::build_list(code);
        INFO(std::string(name));
        cosetlab::CheckReport t1 = cosetlab::verify_leader_decomposition_bound(lc);
        CHECK(t1.passed());
        CHECK(t1.cases > 0);
        cosetlab::CheckReport t2 = cosetlab::verify_distance1_decomposition_bound(lc);
        CHECK(t2.passed());
        cosetlab::CheckReport done =
            cosetlab::verify_completeness(lc, cosetlab::coset_leaders_brute(code));
        CHECK(done.passed());
        CHECK(done.cases > 0);
    }
}

TEST_CASE("canonical leader is the first member of its coset") {
    for (const char* name : {"ternary_4_2.code", "gf4_2_1.code"}) {
        LinearCode code = cosetlab::load_code_file(testutil::fixture(name));
        ListClosure lc = cosetlab::build_list(code);
        std::vector<bool> seen(code.syndrome_count(), false);
        for (const auto& entry : lc.members()) {
            if (!seen[entry.syndrome]) {
                seen[entry.syndrome] = true;
                CHECK(lc.table().at(entry.syndrome).canonical_leader == entry.word);
                CHECK(entry.excess == 0);
            }
        }
        for (bool s : seen) CHECK(s);
    }
}

TEST_CASE("closure refuses oversized enumerations") {
    LinearCode code = testutil::ternary21();
    CHECK_THROWS_AS(cosetlab::build_list(code, {}, 8), cosetlab::BoundError);
    CHECK_NOTHROW(cosetlab::build_list(code, {}, 9));
}
