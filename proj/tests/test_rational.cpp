#include "doctest.h"

#include "nlg/rational.hpp"

using namespace nlg;

TEST_CASE("construction canonicalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, 4) == rat(-1, 2));
    CHECK(rat(0, 7) == Rat(0));
    CHECK(rat_to_string(rat(2, 4)) == "1/2");
    CHECK(rat_to_string(rat(6, 3)) == "2");
    CHECK(rat_to_string(rat(-10, 15)) == "-2/3");
}

TEST_CASE("pow2_rat covers both signs") {
    CHECK(pow2_rat(0) == Rat(1));
    CHECK(pow2_rat(5) == Rat(32));
    CHECK(pow2_rat(-3) == rat(1, 8));
    CHECK(pow2_rat(-40) * pow2_rat(40) == Rat(1));
}

TEST_CASE("parse_rational accepts p and p/q only") {
    CHECK(*parse_rational("3/4") == rat(3, 4));
    CHECK(*parse_rational("-3/6") == rat(-1, 2));
    CHECK(*parse_rational("7") == Rat(7));
    CHECK(*parse_rational("+7") == Rat(7));
    CHECK(rat_to_string(*parse_rational("1000000000000000000000/3")) ==
          "1000000000000000000000/3");

    CHECK(!parse_rational("0.5"));
    CHECK(!parse_rational("1e-3"));
    CHECK(!parse_rational("1/"));
    CHECK(!parse_rational("/2"));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1 / 2"));
}

TEST_CASE("round trip through text") {
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 12; ++d) {
            const Rat q = rat(n, d);
            CHECK(*parse_rational(rat_to_string(q)) == q);
        }
}
