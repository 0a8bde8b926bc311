#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "cosetlab/code.hpp"
#include "helpers.hpp"

using cosetlab::LinearCode;
using cosetlab::Word;

TEST_CASE("ternary [2,1] code: derived check matrix and syndromes") {
    LinearCode code = testutil::ternary21();
    const cosetlab::WordSpace& ws = code.space();
    CHECK(code.n() == 2);
    CHECK(code.k() == 1);
    CHECK(code.redundancy() == 1);
    // G = [1 1] is already [I | A] with A = [1], so H = [-A^T | I] = [2 1].
    REQUIRE(code.check_rows().size() == 1);
    CHECK(ws.format_word(code.check_rows()[0]) == "2 1");

    CHECK(code.syndrome_count() == 3);
    CHECK(code.syndrome_index(ws.parse_word("0 0")) == 0);
    CHECK(code.syndrome_index(ws.parse_word("1 0")) == 2);
    CHECK(code.syndrome_index(ws.parse_word("0 2")) == 2);
    CHECK(code.syndrome_index(ws.parse_word("0 1")) == 1);
    CHECK(code.syndrome_index(ws.parse_word("2 0")) == 1);
    CHECK(code.format_syndrome(code.syndrome(ws.parse_word("1 0"))) == "2");
    CHECK(code.format_syndrome(code.syndrome_at(1)) == "1");

    CHECK(code.contains(ws.parse_word("1 1")));
    CHECK(code.contains(ws.parse_word("2 2")));
    CHECK_FALSE(code.contains(ws.parse_word("1 2")));
    CHECK(testutil::fmt(ws, code.codewords()) ==
          std::vector<std::string>{"0 0", "1 1", "2 2"});
    CHECK(code.min_distance() == 2);
    CHECK(code.error_capacity() == 0);
}

TEST_CASE("binary repetition code: syndrome packing is first-component major") {
    LinearCode code = testutil::rep31();
    const cosetlab::WordSpace& ws = code.space();
    // H rows come out as [1 1 0] and [1 0 1].
    REQUIRE(code.check_rows().size() == 2);
    CHECK(ws.format_word(code.check_rows()[0]) == "1 1 0");
    CHECK(ws.format_word(code.check_rows()[1]) == "1 0 1");
    CHECK(code.syndrome_index(ws.parse_word("0 0 0")) == 0);
    CHECK(code.syndrome_index(ws.parse_word("0 0 1")) == 1);
    CHECK(code.syndrome_index(ws.parse_word("0 1 0")) == 2);
    CHECK(code.syndrome_index(ws.parse_word("1 0 0")) == 3);
    CHECK(code.format_syndrome(code.syndrome(ws.parse_word("1 0 0"))) == "1 1");
    CHECK(code.min_distance() == 3);
    CHECK(code.error_capacity() == 1);
    // Round trip through syndrome_at across every slot.
    for (std::uint64_t s = 0; s < code.syndrome_count(); ++s) {
        std::vector<cosetlab::FieldElement> syn = code.syndrome_at(s);
        std::uint64_t packed = 0;
        for (const auto& e : syn) packed = packed * 2 + ws.field().index(e);
        CHECK(packed == s);
    }
}

TEST_CASE("quaternary [2,1] codeword enumeration order") {
    LinearCode code = testutil::quaternary21();
    const cosetlab::WordSpace& ws = code.space();
    // Scalars run through 0, 1, b, b+1 with the single row G = [1 b]:
    // b * (1, b) = (b, b^2) = (b, b+1) and (b+1)(1, b) = (b+1, b^2+b) = (b+1, 1).
    CHECK(testutil::fmt(ws, code.codewords()) ==
          std::vector<std::string>{"0,0 0,0", "1,0 0,1", "0,1 1,1", "1,1 1,0"});
    CHECK(code.min_distance() == 2);
}

TEST_CASE("gaussian elimination handles rows needing column swaps") {
    // First column zero forces a tracked swap; G stays as given, H is valid.
    LinearCode code = testutil::make_code(2, 1, 3, {"0 1 1"});
    const cosetlab::WordSpace& ws = code.space();
    for (const Word& h : code.check_rows())
        for (const Word& g : code.generator_rows()) {
            cosetlab::FieldElement dot = ws.field().zero();
            for (unsigned i = 1; i <= 3; ++i)
                dot = ws.field().add(dot, ws.field().mul(ws.coord(g, i), ws.coord(h, i)));
            CHECK(dot.is_zero());
        }
    CHECK(code.contains(ws.parse_word("0 1 1")));
    CHECK(code.syndrome_count() == 4);
}

TEST_CASE("code construction rejects bad generators") {
    cosetlab::Field f = testutil::gf(2);
    cosetlab::WordSpace ws(f, 3);
    CHECK_THROWS_AS(LinearCode(f, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode(f, 3, std::vector<Word>(4, ws.parse_word("1 0 0"))),
                    std::invalid_argument);
    // Dependent rows have rank below k.
    CHECK_THROWS_AS(LinearCode(f, 3, {ws.parse_word("1 1 0"), ws.parse_word("1 1 0")}),
                    std::invalid_argument);
    Word formal = ws.oplus(ws.parse_word("1 0 0"), ws.parse_word("1 0 0"));
    CHECK_THROWS_AS(LinearCode(f, 3, {formal}), std::invalid_argument);
}

TEST_CASE("full-dimension code has the empty syndrome") {
    LinearCode code = testutil::make_code(3, 1, 2, {"1 0", "0 1"});
    CHECK(code.redundancy() == 0);
    CHECK(code.syndrome_count() == 1);
    CHECK(code.check_rows().empty());
    CHECK(code.format_syndrome(code.syndrome(code.space().parse_word("2 1"))) == "-");
    CHECK(code.contains(code.space().parse_word("2 1")));
}

TEST_CASE("codeword enumeration respects the bound") {
    LinearCode code = testutil::hamming74();
    CHECK(code.codewords(16).size() == 16);
    CHECK_THROWS_AS(code.codewords(15), cosetlab::BoundError);
    try {
        code.codewords(15);
    } catch (const cosetlab::BoundError& e) {
        CHECK(e.requested() == 16);
        CHECK(e.limit() == 15);
    }
}

TEST_CASE("hamming [7,4] weight distribution") {
    LinearCode code = testutil::hamming74();
    const cosetlab::WordSpace& ws = code.space();
    std::vector<unsigned> histogram(8, 0);
    for (const Word& c : code.codewords()) ++histogram[ws.hamming_weight(c)];
    CHECK(histogram == std::vector<unsigned>{1, 0, 0, 7, 7, 0, 0, 1});
    CHECK(code.min_distance() == 3);
    CHECK(code.error_capacity() == 1);
}

TEST_CASE("fixture parsing round trip") {
    std::istringstream in(
        "# a comment line\n"
        "p 3\n"
        "m 1\n"
        "\n"
        "n 2\n"
        "k 1\n"
        "G\n"
        "1 1\n");
    LinearCode code = cosetlab::parse_code(in);
    CHECK(code.n() == 2);
    CHECK(code.k() == 1);
    CHECK(code.space().p() == 3);
    CHECK(code.space().format_word(code.generator_rows()[0]) == "1 1");
}

TEST_CASE("fixture parsing reports the offending line") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return cosetlab::parse_code(in);
    };
    CHECK_THROWS_AS(parse(""), cosetlab::ParseError);
    CHECK_THROWS_AS(parse("q 2\n"), cosetlab::ParseError);
    CHECK_THROWS_AS(parse("p 2\nm 1\nn 3\nk 1\nG\n1 1\n"), cosetlab::ParseError);
    CHECK_THROWS_AS(parse("p 2\nm 2\nn 2\nk 1\nG\n1,0 0,1\n"), cosetlab::ParseError);
    CHECK_THROWS_AS(parse("p 2\nm 2\npoly 1 0 1\nn 2\nk 1\nG\n1,0 0,1\n"),
                    cosetlab::ParseError);  // reducible modulus
    try {
        parse("p 2\nm 1\nn 3\nk 1\nG\n1 2 1\n");
        FAIL("expected a parse error");
    } catch (const cosetlab::ParseError& e) {
        CHECK(e.line() == 6);
        CHECK(std::string(e.what()).find("line 6") != std::string::npos);
        CHECK(std::string(e.what()).rfind("parse error at line 6: parse error") ==
              std::string::npos);  // no nested prefixes
    }
    CHECK_THROWS_AS(cosetlab::load_code_file("/nonexistent/path.code"), cosetlab::ParseError);
}

TEST_CASE("shipped fixtures all load and match their parameters") {
    struct Expect {
        const char* file;
        unsigned q, n, k, d;
    };
    const Expect table[] = {
        {"rep_3_1.code", 2, 3, 1, 3},      {"hamming_7_4.code", 2, 7, 4, 3},
        {"binary_6_3.code", 2, 6, 3, 3},   {"ternary_2_1.code", 3, 2, 1, 2},
        {"ternary_4_2.code", 3, 4, 2, 2},  {"gf4_2_1.code", 4, 2, 1, 2},
        {"gf4_4_2.code", 4, 4, 2, 2},      {"gf9_3_1.code", 9, 3, 1, 3},
    };
    for (const Expect& e : table) {
        INFO(e.file);
        LinearCode code = cosetlab::load_code_file(testutil::fixture(e.file));
        CHECK(code.space().field().size() == e.q);
        CHECK(code.n() == e.n);
        CHECK(code.k() == e.k);
        CHECK(code.min_distance() == e.d);
    }
}
