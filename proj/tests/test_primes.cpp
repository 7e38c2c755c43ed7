#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <vector>

#include "primew/errors.hpp"
#include "primew/primes.hpp"

using namespace primew;

namespace {

// independent oracle: trial-division primality for small n
bool trial_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("small counts against direct enumeration") {
    std::uint64_t pi100 = 0;
    for (std::uint64_t n = 2; n <= 100; ++n)
        if (trial_is_prime(n)) ++pi100;
    CHECK(pi100 == 25);
    CHECK(sieve_pi(100) == 25);
    CHECK(sieve_pi(2) == 1);
    CHECK(sieve_pi(10) == 4);
    CHECK(sieve_pi(541) == 100);
}

TEST_CASE("segmented sieve equals a naive sieve through 10^7") {
    const std::uint64_t limit = 10000000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint64_t> naive;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        naive.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    std::vector<std::uint64_t> segmented;
    segmented.reserve(naive.size());
    for_primes_up_to(limit, [&](std::uint64_t p) {
        segmented.push_back(p);
        return true;
    });
    REQUIRE(segmented.size() == naive.size());
    CHECK(segmented == naive);
    CHECK(segmented.size() == 664579); // pi(1e7)
}

TEST_CASE("nth_prime anchors") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(4) == 7);
    CHECK(nth_prime(78498) == 999983);
    CHECK(nth_prime(1000000) == 15485863);
}

TEST_CASE("pi and nth_prime invert each other on random samples") {
    // one shared prime list below 1e7; spot-check the public ops against it
    std::vector<std::uint64_t> primes;
    for_primes_up_to(10000000, [&](std::uint64_t p) {
        primes.push_back(p);
        return true;
    });
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(1, primes.size());
    for (int i = 0; i < 10000; ++i) {
        const std::size_t k = pick(rng);
        const std::uint64_t p = primes[k - 1];
        // pi(p_k) = k via the list
        const std::size_t rank =
            std::upper_bound(primes.begin(), primes.end(), p) - primes.begin();
        CHECK(rank == k);
    }
    for (std::size_t k : {std::size_t(1), std::size_t(1229), std::size_t(664579)}) {
        CHECK(nth_prime(k) == primes[k - 1]);
        CHECK(sieve_pi(primes[k - 1]) == k);
    }
}

TEST_CASE("capacity limits raise resource errors") {
    CHECK_THROWS_AS(sieve_pi(kDefaultSieveCapacity + 1), resource_error);
    CHECK_THROWS_AS(nth_prime(1000000000, 1000000000), resource_error);
    CHECK_THROWS_AS(build_sample_table(2, 1, 1000000000000ULL, false), resource_error);
}

TEST_CASE("build_sample_table basics") {
    const PrimeTable t = build_sample_table(2, 1, 3, false);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].n == 2);
    CHECK(*t.rows[0].pi_n == 1);
    CHECK(*t.rows[1].pi_n == 2);
    CHECK(*t.rows[2].pi_n == 2);
    CHECK(!t.rows[0].p_n.has_value());

    const PrimeTable t2 = build_sample_table(1000000, 100000, 10, true);
    REQUIRE(t2.rows.size() == 10);
    for (const auto& r : t2.rows) {
        CHECK(r.pi_n.has_value());
        CHECK(r.p_n.has_value());
    }
    CHECK(*t2.rows[0].pi_n == 78498);
    CHECK(*t2.rows[0].p_n == 15485863);
    CHECK(*t2.rows[9].pi_n == sieve_pi(1900000));
    CHECK(*t2.rows[9].p_n == nth_prime(1900000));
}

TEST_CASE("table file grammar round trip") {
    PrimeTable t;
    t.source = TableSource::sieved;
    t.origin = "unit test";
    PrimeRow a;
    a.n = 10;
    a.pi_n = 4;
    a.p_n = 29;
    PrimeRow b;
    b.n = 20;
    b.pi_n = 8;
    PrimeRow c;
    c.n = 30;
    c.p_n = 113;
    t.rows = {a, b, c};
    write_table("test_table_rt.txt", t);
    const PrimeTable back = load_table("test_table_rt.txt");
    REQUIRE(back.rows.size() == 3);
    CHECK(back.rows[0].n == 10);
    CHECK(*back.rows[0].pi_n == 4);
    CHECK(*back.rows[0].p_n == 29);
    CHECK(back.rows[1].n == 20);
    CHECK(!back.rows[1].p_n.has_value());
    CHECK(back.rows[2].n == 30);
    CHECK(!back.rows[2].pi_n.has_value());
    CHECK(*back.rows[2].p_n == 113);
    std::remove("test_table_rt.txt");
}

TEST_CASE("loader accepts comments and the two-column rank form") {
    {
        std::ofstream f("test_table_2col.txt");
        f << "# k p_k\n\n1 2\n2 3\n3 5\n4 7 # trailing comment\n";
    }
    const PrimeTable t = load_table("test_table_2col.txt");
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[3].n == 4);
    CHECK(*t.rows[3].p_n == 7);
    CHECK(!t.rows[3].pi_n.has_value());
    std::remove("test_table_2col.txt");
}

TEST_CASE("loader rejects malformed and non-monotone input") {
    {
        std::ofstream f("test_table_bad.txt");
        f << "1 2\n2 x\n";
    }
    try {
        load_table("test_table_bad.txt");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line_no == 2);
    }
    std::remove("test_table_bad.txt");

    {
        std::ofstream f("test_table_dec.txt");
        f << "1 13\n2 11\n"; // decreasing primes
    }
    CHECK_THROWS_AS(load_table("test_table_dec.txt"), std::invalid_argument);
    std::remove("test_table_dec.txt");

    {
        std::ofstream f("test_table_cols.txt");
        f << "1 2 3 4\n";
    }
    CHECK_THROWS_AS(load_table("test_table_cols.txt"), parse_error);
    std::remove("test_table_cols.txt");
}
