#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edsm/eds.hpp"

using namespace edsm;

TEST_CASE("parse basic segmented text") {
    EDString e = parse_eds("{AB,B,}C{D,E}");
    REQUIRE(e.length() == 3);
    CHECK(e.size_total() == 7);
    CHECK(e.cardinality() == 6);
    CHECK(e.symbols[0].alternatives == std::vector<std::string>{"AB", "B"});
    CHECK(e.symbols[0].has_epsilon);
    CHECK(e.symbols[1].alternatives == std::vector<std::string>{"C"});
    CHECK_FALSE(e.symbols[1].has_epsilon);
    CHECK(e.symbols[2].alternatives == std::vector<std::string>{"D", "E"});
}

TEST_CASE("plain run is one symbol") {
    EDString e = parse_eds("ACGT");
    REQUIRE(e.length() == 1);
    CHECK(e.symbols[0].alternatives == std::vector<std::string>{"ACGT"});
    CHECK(e.size_total() == 4);
    CHECK(e.cardinality() == 1);
}

TEST_CASE("alternatives are sorted and deduplicated") {
    EDString e = parse_eds("{B,A,B}");
    CHECK(e.symbols[0].alternatives == std::vector<std::string>{"A", "B"});
    CHECK(e.cardinality() == 2);
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_eds(""), ParseError);
    CHECK_THROWS_AS(parse_eds("{AB"), ParseError);
    CHECK_THROWS_AS(parse_eds("A}B"), ParseError);
    CHECK_THROWS_AS(parse_eds("{}"), ParseError);
    CHECK_THROWS_AS(parse_eds("{,}"), ParseError);
    CHECK_THROWS_AS(parse_eds("{A,{B}}"), ParseError);
    CHECK_THROWS_AS(parse_eds("A B"), ParseError);
    try {
        parse_eds("AC{G,%}T");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);
        CHECK(std::string(e.what()).find("at byte 5") != std::string::npos);
    }
}

TEST_CASE("render emits canonical form") {
    EDString e = parse_eds("{AB,B,}C{D,E}");
    CHECK(render_eds(e) == "{AB,B,}C{D,E}");
    EDString f = parse_eds("{B,AB,}C");
    CHECK(render_eds(f) == "{AB,B,}C");
    CHECK(render_eds(parse_eds("ACGT")) == "ACGT");
    CHECK(parse_eds(render_eds(f)) == f);
}

TEST_CASE("render separates adjacent singleton symbols") {
    EDString e;
    Symbol a, b;
    a.alternatives = {"AC"};
    b.alternatives = {"GT"};
    e.symbols = {a, b};
    std::string r = render_eds(e);
    CHECK(parse_eds(r) == e);
    CHECK(parse_eds(r).length() == 2);
}

TEST_CASE("generate is deterministic and parse round-trips") {
    GenParams p;
    p.seed = 42;
    p.n = 50;
    p.max_alts = 4;
    p.max_len = 6;
    p.eps_prob = 0.2;
    EDString a = generate(p);
    EDString b = generate(p);
    CHECK(a == b);
    REQUIRE(a.length() == 50);
    CHECK(parse_eds(render_eds(a)) == a);
    bool any_eps = false, any_multi = false;
    for (const auto& s : a.symbols) {
        any_eps |= s.has_epsilon;
        any_multi |= s.alternatives.size() > 1;
    }
    CHECK(any_eps);
    CHECK(any_multi);
}

TEST_CASE("generate rejects bad parameters") {
    GenParams p;
    p.n = 0;
    CHECK_THROWS_AS(generate(p), std::invalid_argument);
    p.n = 1;
    p.alphabet = "A,B";
    CHECK_THROWS_AS(generate(p), std::invalid_argument);
}
