#pragma once
// extremal.hpp - largest/smallest one-step neighbors and the x10 range bound.
//
// The largest neighbor has a closed form: double the whole number when every
// digit is below 5, otherwise double the substring running from the
// right-most digit >= 5 to the end. The smallest neighbor is taken from brute
// force over all moves; the closed-form rule stated for it in the literature
// mispredicts some inputs (110 is the smallest), so that rule is kept only as
// a diagnostic that reports its own disagreements.

#include <choix/digits.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace choix {

struct extremal_result {
    digit_string value;
    std::optional<choice_move> witness;  // empty when the identity choice is extremal
};

inline extremal_result max_neighbor(const digit_string& n) {
    const auto k = static_cast<std::uint32_t>(n.size());
    std::uint32_t p = 0;  // right-most digit >= 5, 1-based
    for (std::uint32_t i = k; i >= 1; --i) {
        if (n.digit(i - 1) >= 5) {
            p = i;
            break;
        }
    }
    const choice_move m{p == 0 ? 1 : p, k, choice_move::action_t::grow};
    return {apply_move(n, m), m};
}

inline extremal_result min_neighbor(const digit_string& n) {
    extremal_result best{n, std::nullopt};
    for (const choice_move& m : enumerate_moves(n)) {
        digit_string v = apply_move(n, m);
        if (v < best.value)
            best = {std::move(v), m};
    }
    return best;
}

struct min_rule_result {
    extremal_result rule;
    digit_string brute_force;
    bool agrees;
};

// Literal reading of the published smallest-neighbor rule: halve the
// substring from the left-most 1 to the right-most even digit when such a
// substring exists, else from the first digit to the right-most even digit,
// else (all digits odd) keep n.
inline min_rule_result min_neighbor_rule(const digit_string& n) {
    std::uint32_t leftmost_one = 0, rightmost_even = 0;
    for (std::uint32_t i = 1; i <= n.size(); ++i) {
        if (leftmost_one == 0 && n.digit(i - 1) == 1)
            leftmost_one = i;
        if ((n.digit(i - 1) & 1) == 0)
            rightmost_even = i;
    }
    extremal_result rule{n, std::nullopt};
    if (leftmost_one != 0 && rightmost_even >= leftmost_one) {
        const choice_move m{leftmost_one, rightmost_even, choice_move::action_t::halve};
        rule = {apply_move(n, m), m};
    } else if (rightmost_even != 0) {
        const choice_move m{1, rightmost_even, choice_move::action_t::halve};
        rule = {apply_move(n, m), m};
    }
    digit_string brute = min_neighbor(n).value;
    const bool agrees = rule.value == brute;
    return {std::move(rule), std::move(brute), agrees};
}

// Exact rational, compared by cross multiplication.
struct ratio {
    digit_string num;
    digit_string den;
};

inline bool ratio_less(const ratio& a, const ratio& b) {
    return a.num.times(b.den) < b.num.times(a.den);
}

struct bound_check_report {
    digit_string n;
    ratio min_ratio;  // smallest neighbor over n
    ratio max_ratio;  // largest neighbor over n
    bool ok;          // 1/10 < min_ratio and max_ratio < 10
};

inline bound_check_report check_range_bounds(const digit_string& n) {
    digit_string lo = min_neighbor(n).value;
    digit_string hi = max_neighbor(n).value;
    const bool ok = n < lo.shifted_up(1) && hi < n.shifted_up(1);
    return {n, {std::move(lo), n}, {std::move(hi), n}, ok};
}

// uint64_t fast paths for exhaustive sweeps.

inline std::uint64_t max_neighbor_value(std::uint64_t n) {
    const auto& pw = detail::powers<10>.p;
    std::uint64_t s = 0;
    int slen = 0;
    // walk digits from the least significant until one >= 5 is found
    std::uint64_t x = n;
    std::uint8_t d = 0;
    while (x > 0) {
        d = static_cast<std::uint8_t>(x % 10);
        s += d * pw[slen];
        ++slen;
        x /= 10;
        if (d >= 5)
            break;
    }
    if (d < 5)
        return 2 * n;  // all digits < 5
    const std::uint64_t t2 = 2 * s;
    const int t2len = (t2 >= pw[slen]) ? slen + 1 : slen;
    return x * pw[t2len] + t2;
}

inline std::uint64_t min_neighbor_value(std::uint64_t n) {
    std::uint64_t best = n;
    for_each_neighbor_value(n, [&](std::uint64_t m) {
        if (m < best)
            best = m;
    });
    return best;
}

// uint64_t mirror of min_neighbor_rule, value only.
inline std::uint64_t min_rule_value(std::uint64_t n) {
    const auto& pw = detail::powers<10>.p;
    std::uint8_t d[20];
    int k = 0;
    for (std::uint64_t x = n; x > 0; x /= 10)
        d[k++] = static_cast<std::uint8_t>(x % 10);
    std::reverse(d, d + k);

    int leftmost_one = -1, rightmost_even = -1;
    for (int i = 0; i < k; ++i) {
        if (leftmost_one < 0 && d[i] == 1)
            leftmost_one = i;
        if ((d[i] & 1) == 0)
            rightmost_even = i;
    }
    int r = 0;
    if (leftmost_one >= 0 && rightmost_even >= leftmost_one)
        r = leftmost_one;
    else if (rightmost_even < 0)
        return n;  // all digits odd
    const int s = rightmost_even;

    const std::uint64_t sp = pw[k - 1 - s];
    const std::uint64_t suffix = n % sp;
    const std::uint64_t prefix = n / pw[k - r];
    const std::uint64_t sub = (n / sp) % pw[s - r + 1];
    const std::uint64_t t1 = sub / 2;
    const int slen = s - r + 1;
    const int t1len = (slen > 1 && t1 < pw[slen - 1]) ? slen - 1 : slen;
    return (prefix * pw[t1len] + t1) * sp + suffix;
}

}  // namespace choix
