#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polycosec/combinatorics.hpp"
#include "polycosec/uniseries.hpp"

#include <thread>

using namespace polycosec;

TEST_CASE("binomial basics and Pascal identity") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    for (long n = 1; n <= 20; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("stirling2 against set-partition enumeration") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, -1) == 0);
    CHECK(stirling2(5, 6) == 0);
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(stirling2(n, m) == testing::set_partition_count(n, m));
}

TEST_CASE("stirling1 against cycle enumeration") {
    CHECK(stirling1_unsigned(3, 1) == 2);
    CHECK(stirling1_unsigned(6, 6) == 1);
    CHECK(stirling1_unsigned(3, 2) == 3);
    for (int n = 0; n <= 7; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(stirling1_unsigned(n, m) == testing::permutation_cycle_count(n, m));
}

TEST_CASE("stirling1 row sums are factorials") {
    for (long n = 0; n <= 15; ++n) {
        Integer sum = 0;
        for (long m = 0; m <= n; ++m)
            sum += stirling1_unsigned(n, m);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("bernoulli numbers match the t*e^t/(e^t-1) expansion") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));

    const int order = 30;
    const UniSeries numerator =
        mul(UniSeries::monomial(order + 1, 1), elementary(Elementary::Exp, order + 1));
    const UniSeries denominator =
        sub(elementary(Elementary::Exp, order + 1), UniSeries::constant(order + 1, Rational(1)));
    const UniSeries q = divide(numerator, denominator);
    for (int n = 0; n <= order; ++n)
        CHECK(bernoulli(n) == q.egf_coeff(n));
}

TEST_CASE("bernoulli odd vanishing and even sign alternation") {
    for (long j = 1; j <= 15; ++j)
        CHECK(bernoulli(2 * j + 1).is_zero());
    for (long j = 1; j <= 15; ++j) {
        const int expected_sign = (j % 2 == 1) ? 1 : -1;
        CHECK(bernoulli(2 * j).sign() == expected_sign);
    }
}

TEST_CASE("higher tangent numbers: spot values and zero pattern") {
    CHECK(tangent_higher(1, 1) == 1);
    CHECK(tangent_higher(2, 1) == 0);
    CHECK(tangent_higher(3, 1) == 2);
    CHECK(tangent_higher(4, 7) == 0);
    CHECK_THROWS_AS(tangent_higher(3, 0), std::domain_error);
    for (long n = 0; n <= 12; ++n)
        for (long m = 1; m <= 12; ++m)
            if (n < m || (n - m) % 2 != 0)
                CHECK(tangent_higher(n, m) == 0);
}

TEST_CASE("higher tangent numbers reproduce tan^m") {
    const int order = 30;
    const UniSeries tan = testing::tan_series(order);
    UniSeries power = UniSeries::constant(order, Rational(1));
    for (long m = 1; m <= order; ++m) {
        power = mul(power, tan);
        // m! * sum_j T(j,m) t^j / j! should equal tan^m.
        UniSeries expected(order);
        for (long j = m; j <= order; ++j)
            expected.set_coeff(static_cast<int>(j),
                               Rational(tangent_higher(j, m) * factorial(m), factorial(j)));
        CHECK(power == expected);
    }
}

TEST_CASE("stirling1 expands the iterated-derivative operator") {
    // t^n f^(n)(t) == sum_m (-1)^(n-m) [n,m] (t d/dt)^m f for f = 1/(1+t).
    const int order = 20;
    UniSeries f(order);
    for (int i = 0; i <= order; ++i)
        f.set_coeff(i, Rational(i % 2 == 0 ? 1 : -1));
    for (int n = 1; n <= 8; ++n) {
        UniSeries deriv = f;
        for (int i = 0; i < n; ++i)
            deriv = differentiate(deriv);
        const UniSeries lhs = mul(UniSeries::monomial(order, n), deriv);

        UniSeries rhs(order - n);
        UniSeries theta = f; // (t d/dt)^m f, m running
        for (int m = 1; m <= n; ++m) {
            theta = mul(UniSeries::monomial(theta.order(), 1), differentiate(theta));
            Rational c(stirling1_unsigned(n, m));
            if ((n - m) % 2 != 0)
                c = -c;
            rhs = add(rhs, scale(theta, c));
        }
        CHECK(truncate(lhs, order - n) == rhs);
    }
}

TEST_CASE("tables are readable concurrently while growing") {
    clear_comb_tables();
    std::vector<std::thread> workers;
    std::vector<Integer> results(4);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([t, &results] {
            Integer acc = 0;
            for (long n = 0; n <= 60; ++n)
                for (long m = 0; m <= n; ++m)
                    acc += stirling2(n, m) + binomial(n, m);
            results[static_cast<std::size_t>(t)] = acc;
        });
    for (auto& w : workers)
        w.join();
    for (int t = 1; t < 4; ++t)
        CHECK(results[0] == results[static_cast<std::size_t>(t)]);
}

TEST_CASE("dump and preload round-trip") {
    binomial(12, 5);
    bernoulli(10);
    tangent_higher(9, 3);
    const CombTablesDump dump = dump_comb_tables();
    clear_comb_tables();
    preload_comb_tables(dump);
    const CombTablesDump again = dump_comb_tables();
    CHECK(dump.binomial == again.binomial);
    CHECK(dump.stirling1_unsigned == again.stirling1_unsigned);
    CHECK(dump.stirling2 == again.stirling2);
    CHECK(dump.bernoulli == again.bernoulli);
    CHECK(dump.tangent_higher == again.tangent_higher);
    CHECK(binomial(12, 5) == 792);
}

TEST_CASE("preload rejects malformed rows") {
    CombTablesDump bad;
    bad.binomial = {{"1"}, {"1", "1", "5"}};
    CHECK_THROWS_AS(preload_comb_tables(bad), std::invalid_argument);
    CombTablesDump junk;
    junk.binomial = {{"xyz"}};
    CHECK_THROWS_AS(preload_comb_tables(junk), std::invalid_argument);
}
