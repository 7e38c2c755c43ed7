#include <doctest.h>

#include "primew/hpreal.hpp"

using namespace primew;

TEST_CASE("precision defaults and clamping") {
    CHECK(HPReal().precision() == 32);
    CHECK(HPReal(5).precision() == 16); // floor
    CHECK(HPReal("1.5", 50).precision() == 50);
}

TEST_CASE("decimal strings round-trip") {
    CHECK(HPReal("2.5").str() == "2.5");
    CHECK(HPReal("-2.5").str() == "-2.5");
    CHECK(HPReal("0.1", 32).str() == "0.1");
    CHECK(HPReal("709.4999").str() == "709.4999");
    CHECK(HPReal(0LL, 32).str() == "0");
    // a 26-digit integer is exact at 32 digits
    CHECK(HPReal("58310039994836584070534263").str() == "58310039994836584070534263");
    CHECK_THROWS_AS(HPReal("12,5"), std::invalid_argument);
}

TEST_CASE("fixed-point rendering never uses exponents") {
    CHECK(HPReal("1e24", 32).str() == "1000000000000000000000000");
    CHECK(HPReal("1e-5", 32).str(3) == "0.00001");
    CHECK(HPReal("1234.5678").str(6) == "1234.57");
}

TEST_CASE("precision propagates through arithmetic") {
    HPReal a("1.5", 32), b("2.5", 48);
    CHECK((a + b).precision() == 48);
    CHECK((b * a).precision() == 48);
    CHECK((a / 3L).precision() == 32);
}

TEST_CASE("single operations stay within one ulp of the stated digits") {
    HPReal one(1LL, 32);
    HPReal r = one / 3L * 3L;
    CHECK((r - one).abs() < HPReal("1e-35", 32));
    HPReal two(2LL, 40);
    CHECK((sqrt(two) * sqrt(two) - two).abs() < HPReal("1e-42", 40));
}

TEST_CASE("rounding half away from zero") {
    CHECK(HPReal("2.5").round_half_away() == 3);
    CHECK(HPReal("-2.5").round_half_away() == -3);
    CHECK(HPReal("709.4999").round_half_away() == 709);
    CHECK(HPReal("709.5").round_half_away() == 710);
    CHECK(HPReal("-0.49").round_half_away() == 0);
}

TEST_CASE("constants") {
    CHECK(HPReal::e(32).str(10) == "2.718281828");
    CHECK(HPReal::pi(32).str(10) == "3.141592654");
    CHECK(HPReal::euler_gamma(32).str(10) == "0.5772156649");
}

TEST_CASE("pow and roots") {
    HPReal x("1.0000000001", 40);
    CHECK((pow_si(x, 10) - HPReal("1.000000001", 40)).abs() < HPReal("1e-17", 40));
    CHECK((root_ui(HPReal(1024LL, 32), 10) - HPReal(2LL, 32)).abs() < HPReal("1e-30", 32));
}
