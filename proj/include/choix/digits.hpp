#pragma once
// digits.hpp - digit strings and the halve/double substring operation.
//
// A digit_string is the canonical base-10 or base-2 expansion of a positive
// integer, most significant digit first. All arithmetic works directly on the
// digit sequence, so values are not limited to 64 bits. A fast uint64_t
// enumeration of one-step neighbors is provided separately for bulk sweeps
// and the breadth-first searches.

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace choix {

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class invalid_move : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class digit_string {
public:
    // Value constructor; value must be >= 1.
    explicit digit_string(std::uint64_t value, int base = 10) : base_(check_base(base)) {
        if (value == 0)
            throw parse_error("digit_string: value must be a positive integer");
        while (value > 0) {
            digits_.push_back(static_cast<std::uint8_t>(value % base));
            value /= base;
        }
        std::reverse(digits_.begin(), digits_.end());
    }

    static digit_string parse(std::string_view text, int base = 10) {
        check_base(base);
        if (text.empty())
            throw parse_error("digit_string: empty input");
        if (text.size() > 1 && text.front() == '0')
            throw parse_error("digit_string: leading zero");
        std::vector<std::uint8_t> ds;
        ds.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c >= '0' + base)
                throw parse_error(std::string("digit_string: invalid digit '") + c + "'");
            ds.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        if (ds.size() == 1 && ds[0] == 0)
            throw parse_error("digit_string: zero is not a positive integer");
        return digit_string(std::move(ds), base);
    }

    int base() const { return base_; }
    std::size_t size() const { return digits_.size(); }
    std::uint8_t digit(std::size_t i) const { return digits_[i]; }  // 0-based, most significant first
    std::uint8_t last_digit() const { return digits_.back(); }
    const std::vector<std::uint8_t>& digits() const { return digits_; }

    bool is_even() const { return (digits_.back() & 1) == 0; }

    std::string str() const {
        std::string s(digits_.size(), '0');
        for (std::size_t i = 0; i < digits_.size(); ++i)
            s[i] = static_cast<char>('0' + digits_[i]);
        return s;
    }

    // Checked narrowing; throws if the value does not fit.
    std::uint64_t value_u64() const {
        unsigned __int128 v = 0;
        for (std::uint8_t d : digits_) {
            v = v * base_ + d;
            if (v > UINT64_MAX)
                throw std::overflow_error("digit_string: value exceeds 64 bits");
        }
        return static_cast<std::uint64_t>(v);
    }

    bool fits_u64() const {
        unsigned __int128 v = 0;
        for (std::uint8_t d : digits_) {
            v = v * base_ + d;
            if (v > UINT64_MAX)
                return false;
        }
        return true;
    }

    digit_string doubled() const {
        std::vector<std::uint8_t> out(digits_.size() + 1);
        int carry = 0;
        for (std::size_t i = digits_.size(); i-- > 0;) {
            int v = 2 * digits_[i] + carry;
            out[i + 1] = static_cast<std::uint8_t>(v % base_);
            carry = v / base_;
        }
        out[0] = static_cast<std::uint8_t>(carry);
        if (out[0] == 0)
            out.erase(out.begin());
        return digit_string(std::move(out), base_);
    }

    digit_string halved() const {
        if (!is_even())
            throw invalid_move("halved: value is odd");
        std::vector<std::uint8_t> out(digits_.size());
        int rem = 0;
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            int v = rem * base_ + digits_[i];
            out[i] = static_cast<std::uint8_t>(v / 2);
            rem = v & 1;
        }
        if (out.size() > 1 && out[0] == 0)
            out.erase(out.begin());
        return digit_string(std::move(out), base_);
    }

    // Value times base^j (append j zeros).
    digit_string shifted_up(std::size_t j) const {
        std::vector<std::uint8_t> out(digits_);
        out.insert(out.end(), j, 0);
        return digit_string(std::move(out), base_);
    }

    // Schoolbook product; operands must share a base.
    digit_string times(const digit_string& other) const {
        assert(base_ == other.base_);
        std::vector<std::uint32_t> acc(digits_.size() + other.digits_.size(), 0);
        for (std::size_t i = digits_.size(); i-- > 0;)
            for (std::size_t j = other.digits_.size(); j-- > 0;)
                acc[i + j + 1] += static_cast<std::uint32_t>(digits_[i]) * other.digits_[j];
        std::vector<std::uint8_t> out(acc.size());
        std::uint32_t carry = 0;
        for (std::size_t i = acc.size(); i-- > 0;) {
            std::uint32_t v = acc[i] + carry;
            out[i] = static_cast<std::uint8_t>(v % base_);
            carry = v / base_;
        }
        assert(carry == 0);
        std::size_t lead = 0;
        while (lead + 1 < out.size() && out[lead] == 0)
            ++lead;
        out.erase(out.begin(), out.begin() + lead);
        return digit_string(std::move(out), base_);
    }

    std::size_t ones_count() const {
        std::size_t c = 0;
        for (std::uint8_t d : digits_)
            c += (d == 1);
        return c;
    }

    digit_string to_base(int base) const {
        check_base(base);
        if (base == base_)
            return *this;
        if (base == 2) {
            // divide by 2 repeatedly, collecting parities
            std::vector<std::uint8_t> bits;
            digit_string v = *this;
            for (;;) {
                const std::uint8_t parity = v.digits_.back() & 1;
                bits.push_back(parity);
                if (v.size() == 1 && v.digits_[0] == 1)
                    break;
                if (parity)
                    v.digits_.back() -= 1;
                v = v.halved();
            }
            std::reverse(bits.begin(), bits.end());
            return digit_string(std::move(bits), 2);
        }
        // base 2 -> 10 by double-and-add
        digit_string v(static_cast<std::uint64_t>(digits_[0]), 10);
        for (std::size_t i = 1; i < digits_.size(); ++i) {
            v = v.doubled();
            if (digits_[i]) {
                int carry = 1;
                for (std::size_t p = v.digits_.size(); carry && p-- > 0;) {
                    int d = v.digits_[p] + carry;
                    v.digits_[p] = static_cast<std::uint8_t>(d % 10);
                    carry = d / 10;
                }
                if (carry)
                    v.digits_.insert(v.digits_.begin(), 1);
            }
        }
        return v;
    }

    // Canonical digit sequence, most significant first.
    static digit_string from_digits(std::vector<std::uint8_t> ds, int base) {
        check_base(base);
        if (ds.empty())
            throw parse_error("digit_string: empty digit sequence");
        if (ds.front() == 0)
            throw parse_error("digit_string: leading zero");
        for (std::uint8_t d : ds)
            if (d >= base)
                throw parse_error("digit_string: digit out of range for base");
        return digit_string(std::move(ds), base);
    }

    friend std::strong_ordering operator<=>(const digit_string& a, const digit_string& b) {
        assert(a.base_ == b.base_);
        if (a.digits_.size() != b.digits_.size())
            return a.digits_.size() <=> b.digits_.size();
        return std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(),
                                                      b.digits_.begin(), b.digits_.end());
    }
    friend bool operator==(const digit_string& a, const digit_string& b) {
        return a.base_ == b.base_ && a.digits_ == b.digits_;
    }

private:
    digit_string(std::vector<std::uint8_t>&& ds, int base)
        : digits_(std::move(ds)), base_(static_cast<std::uint8_t>(base)) {
        assert(!digits_.empty() && digits_.front() != 0);
    }

    static int check_base(int base) {
        if (base != 10 && base != 2)
            throw parse_error("digit_string: base must be 10 or 2");
        return base;
    }

    std::vector<std::uint8_t> digits_;
    std::uint8_t base_;
};

struct choice_move {
    enum class action_t : std::uint8_t { halve, grow };
    std::uint32_t start = 1;  // 1-based, inclusive
    std::uint32_t end = 1;    // 1-based, inclusive
    action_t action = action_t::grow;

    friend bool operator==(const choice_move&, const choice_move&) = default;
};

// "grow" doubles the chosen substring in situ; "halve" halves it.
inline digit_string apply_move(const digit_string& n, const choice_move& m) {
    if (m.start < 1 || m.start > m.end || m.end > n.size())
        throw invalid_move("apply_move: span out of range");
    if (n.digit(m.start - 1) == 0)
        throw invalid_move("apply_move: substring starts with a zero digit");
    std::vector<std::uint8_t> sub(n.digits().begin() + (m.start - 1), n.digits().begin() + m.end);
    digit_string s = digit_string::from_digits(std::move(sub), n.base());
    digit_string t = (m.action == choice_move::action_t::halve) ? s.halved() : s.doubled();
    std::vector<std::uint8_t> out;
    out.reserve(n.size() + 1);
    out.insert(out.end(), n.digits().begin(), n.digits().begin() + (m.start - 1));
    out.insert(out.end(), t.digits().begin(), t.digits().end());
    out.insert(out.end(), n.digits().begin() + m.end, n.digits().end());
    return digit_string::from_digits(std::move(out), n.base());
}

// Moves in (start, end, action) order, halve before double.
inline std::vector<choice_move> enumerate_moves(const digit_string& n) {
    std::vector<choice_move> out;
    const auto k = static_cast<std::uint32_t>(n.size());
    for (std::uint32_t p = 1; p <= k; ++p) {
        if (n.digit(p - 1) == 0)
            continue;
        for (std::uint32_t q = p; q <= k; ++q) {
            if ((n.digit(q - 1) & 1) == 0)
                out.push_back({p, q, choice_move::action_t::halve});
            out.push_back({p, q, choice_move::action_t::grow});
        }
    }
    return out;
}

// All values reachable in one step, ascending and deduplicated, including n
// itself (the empty-substring choice).
inline std::vector<digit_string> neighbors(const digit_string& n) {
    std::vector<digit_string> out;
    out.push_back(n);
    for (const choice_move& m : enumerate_moves(n))
        out.push_back(apply_move(n, m));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool is_neighbor(const digit_string& n, const digit_string& m) {
    assert(n.base() == m.base());
    if (n == m)
        return true;
    const auto nb = neighbors(n);
    return std::binary_search(nb.begin(), nb.end(), m);
}

inline int digit_count(std::uint64_t n, int base = 10) {
    int k = 0;
    do {
        ++k;
        n /= static_cast<std::uint64_t>(base);
    } while (n > 0);
    return k;
}

namespace detail {

template <int Base>
constexpr std::uint64_t pow_of(int e) {
    if constexpr (Base == 2) {
        return std::uint64_t{1} << e;
    } else {
        std::uint64_t v = 1;
        for (int i = 0; i < e; ++i)
            v *= 10;
        return v;
    }
}

template <int Base>
struct pow_table {
    static constexpr int max_exp = (Base == 10) ? 20 : 64;
    std::array<std::uint64_t, max_exp> p{};
    constexpr pow_table() {
        for (int i = 0; i < max_exp; ++i)
            p[i] = pow_of<Base>(i);
    }
};

template <int Base>
inline constexpr pow_table<Base> powers{};

}  // namespace detail

// Calls fn(m) for the result of every non-identity move on n. Duplicate
// values may be reported more than once. Requires n >= 1 and, so every
// result fits, n < 2^63 for base 2 and n <= ~1.8e18 for base 10.
template <int Base = 10, class Fn>
inline void for_each_neighbor_value(std::uint64_t n, Fn&& fn) {
    static_assert(Base == 10 || Base == 2);
    assert(n >= 1);
    const auto& pw = detail::powers<Base>.p;
    std::uint8_t d[detail::pow_table<Base>::max_exp];
    int k = 0;
    for (std::uint64_t x = n; x > 0; x /= Base)
        d[k++] = static_cast<std::uint8_t>(x % Base);
    std::reverse(d, d + k);

    std::uint64_t suf[detail::pow_table<Base>::max_exp];  // value of digits after q
    std::uint64_t sp[detail::pow_table<Base>::max_exp];   // Base^(k-1-q)
    suf[k - 1] = 0;
    sp[k - 1] = 1;
    for (int q = k - 2; q >= 0; --q) {
        sp[q] = sp[q + 1] * Base;
        suf[q] = suf[q + 1] + d[q + 1] * sp[q + 1];
    }

    for (int p = 0; p < k; ++p) {
        if (d[p] == 0)
            continue;
        const std::uint64_t prefix = n / pw[k - p];
        std::uint64_t s = 0;
        int slen = 0;
        for (int q = p; q < k; ++q) {
            s = s * Base + d[q];
            ++slen;
            const std::uint64_t t2 = 2 * s;
            const int t2len = (t2 >= pw[slen]) ? slen + 1 : slen;
            fn((prefix * pw[t2len] + t2) * sp[q] + suf[q]);
            if ((d[q] & 1) == 0) {
                const std::uint64_t t1 = s / 2;
                const int t1len = (slen > 1 && t1 < pw[slen - 1]) ? slen - 1 : slen;
                fn((prefix * pw[t1len] + t1) * sp[q] + suf[q]);
            }
        }
    }
}

// Sorted deduplicated one-step neighbor values including n itself.
inline std::vector<std::uint64_t> neighbors_u64(std::uint64_t n, int base = 10) {
    std::vector<std::uint64_t> out;
    out.push_back(n);
    auto collect = [&](std::uint64_t m) { out.push_back(m); };
    if (base == 10)
        for_each_neighbor_value<10>(n, collect);
    else
        for_each_neighbor_value<2>(n, collect);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace choix
