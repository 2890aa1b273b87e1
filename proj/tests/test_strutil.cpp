#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edsm/strutil.hpp"

using namespace edsm;

TEST_CASE("min_period on classic strings") {
    CHECK(min_period("abab") == 2);
    CHECK(min_period("ababa") == 2);
    CHECK(min_period("abcabcabc") == 3);
    CHECK(min_period("aaaa") == 1);
    CHECK(min_period("abca") == 3);
    CHECK(min_period("a") == 1);
}

TEST_CASE("min_period matches definition on all short binary strings") {
    for (int n = 1; n <= 10; ++n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::string s;
            for (int i = 0; i < n; ++i) s.push_back((mask >> i) & 1 ? 'b' : 'a');
            int naive = n;
            for (int p = 1; p < n; ++p) {
                bool ok = true;
                for (int i = 0; i + p < n; ++i)
                    if (s[i] != s[i + p]) { ok = false; break; }
                if (ok) { naive = p; break; }
            }
            REQUIRE(min_period(s) == naive);
        }
    }
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive("ab"));
    CHECK(is_primitive("aab"));
    CHECK(is_primitive("ababa"));
    CHECK_FALSE(is_primitive("abab"));
    CHECK_FALSE(is_primitive("aaa"));
    CHECK_FALSE(is_primitive(""));
}

TEST_CASE("cyclic equivalence") {
    CHECK(are_cyclic_equivalent("abc", "bca"));
    CHECK(are_cyclic_equivalent("abc", "cab"));
    CHECK(are_cyclic_equivalent("abc", "abc"));
    CHECK_FALSE(are_cyclic_equivalent("abc", "acb"));
    CHECK_FALSE(are_cyclic_equivalent("abc", "ab"));
    CHECK(are_cyclic_equivalent("", ""));
}

TEST_CASE("rotate_left") {
    CHECK(rotate_left("abcd", 1) == "bcda");
    CHECK(rotate_left("abcd", 0) == "abcd");
    CHECK(rotate_left("abcd", 4) == "abcd");
    CHECK(rotate_left("abcd", 5) == "bcda");
    CHECK(rotate_left("abcd", -1) == "dabc");
    for (int r = -8; r <= 8; ++r)
        CHECK(are_cyclic_equivalent("abcab", rotate_left("abcab", r)));
}
