#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "edsm/suffix_tree.hpp"

using namespace edsm;

namespace {

std::string random_string(std::mt19937_64& rng, int len, int sigma) {
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(char('a' + rng() % sigma));
    return s;
}

} // namespace

TEST_CASE("walk recognizes exactly the substrings") {
    SuffixTree st("banana");
    auto is_sub = [&](const std::string& s) {
        auto ids = substring_id_walk(st, s);
        return !ids.empty() && ids.back() != 0;
    };
    CHECK(is_sub("banana"));
    CHECK(is_sub("ana"));
    CHECK(is_sub("nan"));
    CHECK(is_sub("b"));
    CHECK_FALSE(is_sub("bx"));
    CHECK_FALSE(is_sub("aab"));
    CHECK_FALSE(is_sub("bananan"));
}

TEST_CASE("walk ids stay null after first failure") {
    SuffixTree st("banana");
    auto ids = substring_id_walk(st, "bax");
    REQUIRE(ids.size() == 3);
    CHECK(ids[0] != 0);
    CHECK(ids[1] != 0);
    CHECK(ids[2] == 0);
    auto more = substring_id_walk(st, "baxna");
    CHECK(more[3] == 0);
    CHECK(more[4] == 0);
}

TEST_CASE("equal substrings share one id, distinct substrings never collide") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + rng() % 64;
        std::string t = random_string(rng, n, iter % 2 ? 2 : 3);
        SuffixTree st(t);
        std::map<std::string, uint64_t> seen;
        std::set<uint64_t> used;
        for (int i = 0; i < n; ++i) {
            auto ids = substring_id_walk(st, t.substr(i));
            for (int l = 1; l <= n - i; ++l) {
                uint64_t id = ids[l - 1];
                REQUIRE(id != 0);
                std::string sub = t.substr(i, l);
                auto it = seen.find(sub);
                if (it != seen.end()) {
                    REQUIRE(it->second == id);
                } else {
                    REQUIRE(!used.count(id));
                    seen.emplace(std::move(sub), id);
                    used.insert(id);
                }
            }
        }
    }
}

TEST_CASE("step walks one character at a time") {
    SuffixTree st("mississippi");
    auto loc = st.root();
    std::string w = "issi";
    for (char c : w) REQUIRE(st.step(loc, (unsigned char)c));
    CHECK(st.id(loc) != 0);
    auto bad = loc;
    CHECK_FALSE(st.step(bad, 'z'));
}

TEST_CASE("single character and unary texts") {
    SuffixTree st("aaaa");
    auto ids = substring_id_walk(st, "aaaa");
    for (auto id : ids) CHECK(id != 0);
    std::set<uint64_t> uniq(ids.begin(), ids.end());
    CHECK(uniq.size() == 4);
    CHECK(substring_id_walk(st, "aaaaa").back() == 0);
}
