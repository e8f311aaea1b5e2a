#include <catch2/catch_amalgamated.hpp>

#include <choix/extremal.hpp>

#include <cstdint>
#include <vector>

using choix::digit_string;

namespace {

std::uint64_t brute_max(std::uint64_t n) {
    std::uint64_t best = n;
    choix::for_each_neighbor_value(n, [&](std::uint64_t m) { best = std::max(best, m); });
    return best;
}

}  // namespace

TEST_CASE("smallest and largest one-step neighbors for 1..16") {
    const std::vector<std::uint64_t> m0 = {1, 1, 3, 2, 5, 3, 7, 4, 9, 5, 11, 6, 13, 7, 15, 8};
    const std::vector<std::uint64_t> m1 = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 110, 112};
    for (std::uint64_t n = 1; n <= 16; ++n) {
        CAPTURE(n);
        REQUIRE(choix::min_neighbor(digit_string(n)).value.value_u64() == m0[n - 1]);
        REQUIRE(choix::max_neighbor(digit_string(n)).value.value_u64() == m1[n - 1]);
    }
}

TEST_CASE("largest neighbor closed form") {
    REQUIRE(choix::max_neighbor(digit_string(15)).value.str() == "110");
    REQUIRE(choix::max_neighbor(digit_string(99)).value.str() == "918");
    REQUIRE(choix::max_neighbor(digit_string(1234)).value.str() == "2468");
    REQUIRE(brute_max(1234) == 2468);

    // the witness move reproduces the value
    for (std::uint64_t n : {15ULL, 99ULL, 1234ULL, 20218ULL, 88224ULL}) {
        const auto res = choix::max_neighbor(digit_string(n));
        REQUIRE(res.witness.has_value());
        REQUIRE(apply_move(digit_string(n), *res.witness) == res.value);
    }
}

TEST_CASE("smallest neighbor via brute force") {
    REQUIRE(choix::min_neighbor(digit_string(16)).value.value_u64() == 8);
    REQUIRE(choix::min_neighbor(digit_string(110)).value.value_u64() == 15);
    const auto odd = choix::min_neighbor(digit_string(7));
    REQUIRE(odd.value.value_u64() == 7);
    REQUIRE_FALSE(odd.witness.has_value());
}

TEST_CASE("literal smallest-neighbor rule and its disagreements") {
    for (std::uint64_t n = 1; n <= 16; ++n) {
        CAPTURE(n);
        REQUIRE(choix::min_neighbor_rule(digit_string(n)).agrees);
    }
    const auto r16 = choix::min_neighbor_rule(digit_string(16));
    REQUIRE(r16.rule.value.value_u64() == 8);
    const auto r12 = choix::min_neighbor_rule(digit_string(12));
    REQUIRE(r12.rule.value.value_u64() == 6);

    // the rule halves all of 110 to 55 while the true smallest neighbor is 15
    const auto r110 = choix::min_neighbor_rule(digit_string(110));
    REQUIRE(r110.rule.value.value_u64() == 55);
    REQUIRE(r110.brute_force.value_u64() == 15);
    REQUIRE_FALSE(r110.agrees);

    // ... and prefers 112 -> 56 over the shorter halve 112 -> 16
    const auto r112 = choix::min_neighbor_rule(digit_string(112));
    REQUIRE(r112.rule.value.value_u64() == 56);
    REQUIRE(r112.brute_force.value_u64() == 16);
    REQUIRE_FALSE(r112.agrees);
}

TEST_CASE("range bound reports") {
    const auto r99 = choix::check_range_bounds(digit_string(99));
    REQUIRE(r99.ok);
    REQUIRE(r99.max_ratio.num.value_u64() == 918);
    REQUIRE(r99.max_ratio.den.value_u64() == 99);

    const auto r110 = choix::check_range_bounds(digit_string(110));
    REQUIRE(r110.ok);
    REQUIRE(r110.min_ratio.num.value_u64() == 15);
    REQUIRE(r110.min_ratio.den.value_u64() == 110);

    const auto r1 = choix::check_range_bounds(digit_string(1));
    REQUIRE(r1.ok);
    REQUIRE(r1.min_ratio.num.value_u64() == 1);
    REQUIRE(r1.max_ratio.num.value_u64() == 2);
}

TEST_CASE("closed forms agree with brute force up to 200000") {
    for (std::uint64_t n = 1; n <= 200000; ++n) {
        REQUIRE(choix::max_neighbor_value(n) == brute_max(n));
        if (n <= 20000) {
            CAPTURE(n);
            REQUIRE(choix::max_neighbor(digit_string(n)).value.value_u64() == brute_max(n));
            REQUIRE(choix::min_neighbor(digit_string(n)).value.value_u64() ==
                    choix::min_neighbor_value(n));
        }
    }
}

TEST_CASE("largest neighbor gains exactly one digit when a digit is >= 5") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        bool small_digits = true;
        for (std::uint64_t x = n; x > 0; x /= 10)
            small_digits = small_digits && (x % 10 < 5);
        const std::uint64_t m = choix::max_neighbor_value(n);
        CAPTURE(n, m);
        if (small_digits)
            REQUIRE(m == 2 * n);
        else
            REQUIRE(choix::digit_count(m) == choix::digit_count(n) + 1);
    }
}

TEST_CASE("n is its own smallest neighbor exactly when all digits are odd") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        bool all_odd = true;
        for (std::uint64_t x = n; x > 0; x /= 10)
            all_odd = all_odd && (x % 10 % 2 == 1);
        CAPTURE(n);
        REQUIRE((choix::min_neighbor_value(n) == n) == all_odd);
    }
}

TEST_CASE("bound tightness families are monotone toward 10 and 1/10") {
    // 99...9 with t nines: largest-neighbor ratio 10 - 72/n, increasing toward 10
    std::optional<choix::ratio> prev;
    for (int t = 2; t <= 12; ++t) {
        digit_string n = digit_string::from_digits(std::vector<std::uint8_t>(t, 9), 10);
        auto rep = choix::check_range_bounds(n);
        REQUIRE(rep.ok);
        // exact identity: largest neighbor is 10n - 72
        REQUIRE(rep.max_ratio.num.value_u64() == 10 * n.value_u64() - 72);
        if (prev)
            REQUIRE(choix::ratio_less(*prev, rep.max_ratio));
        REQUIRE(choix::ratio_less(rep.max_ratio, choix::ratio{digit_string(10), digit_string(1)}));
        prev = rep.max_ratio;
    }

    // 10^t + 10: smallest-neighbor ratio decreasing toward 1/10, staying above it
    prev.reset();
    for (int t = 2; t <= 12; ++t) {
        const std::uint64_t v = choix::detail::powers<10>.p[t] + 10;
        auto rep = choix::check_range_bounds(digit_string(v));
        REQUIRE(rep.ok);
        REQUIRE(rep.min_ratio.num.value_u64() == choix::detail::powers<10>.p[t - 1] + 5);
        if (prev)
            REQUIRE(choix::ratio_less(rep.min_ratio, *prev));
        REQUIRE(choix::ratio_less(choix::ratio{digit_string(1), digit_string(10)}, rep.min_ratio));
        prev = rep.min_ratio;
    }
}
