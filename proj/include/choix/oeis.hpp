#pragma once
// oeis.hpp - sequence generators and b-file text tooling.
//
// b-file lines are "<index> <value>" with LF endings, indices consecutive.
// Comment lines start with '#'. Offsets are label-only: the term stream of a
// sequence is fixed, the configured offset just numbers its first term.

#include <choix/digits.hpp>
#include <choix/extremal.hpp>
#include <choix/search.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace choix {

enum class sequence_id {
    A323288,  // largest one-step neighbor
    A323453,  // reserved; no definition available
    A323454,  // steps to reach n from 1, -1 if impossible
    A323460,  // one-step neighbor sets, rows flattened
    A323462,  // smallest one-step neighbor
    A323463,  // record step counts from 1 (positions available)
    A323464,  // record step counts from 5 (positions available)
    A323465,  // binary one-step neighbor sets, rows flattened
    A323484,  // steps to reach 5m from 5
};

inline const char* to_string(sequence_id id) {
    switch (id) {
        case sequence_id::A323288: return "A323288";
        case sequence_id::A323453: return "A323453";
        case sequence_id::A323454: return "A323454";
        case sequence_id::A323460: return "A323460";
        case sequence_id::A323462: return "A323462";
        case sequence_id::A323463: return "A323463";
        case sequence_id::A323464: return "A323464";
        case sequence_id::A323465: return "A323465";
        case sequence_id::A323484: return "A323484";
    }
    return "?";
}

inline std::optional<sequence_id> parse_sequence_id(std::string_view text) {
    for (sequence_id id :
         {sequence_id::A323288, sequence_id::A323453, sequence_id::A323454, sequence_id::A323460,
          sequence_id::A323462, sequence_id::A323463, sequence_id::A323464, sequence_id::A323465,
          sequence_id::A323484}) {
        if (text == to_string(id))
            return id;
    }
    return std::nullopt;
}

struct bfile_entry {
    std::int64_t index;
    std::string value;

    friend bool operator==(const bfile_entry&, const bfile_entry&) = default;
};

struct bfile {
    std::vector<bfile_entry> entries;

    friend bool operator==(const bfile&, const bfile&) = default;
};

inline std::string emit_bfile(const bfile& b) {
    std::string out;
    for (const auto& e : b.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.value;
        out += '\n';
    }
    return out;
}

namespace detail {

inline bool canonical_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return s.size() == 1 || s.front() != '0';
}

}  // namespace detail

inline bfile parse_bfile(std::string_view text) {
    bfile out;
    std::size_t pos = 0;
    std::size_t lineno = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#')
            continue;
        const std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string_view::npos)
            throw parse_error("b-file: malformed line " + std::to_string(lineno));
        std::string_view idx_text = line.substr(0, sp);
        std::string_view val_text = line.substr(sp);
        while (!val_text.empty() && (val_text.front() == ' ' || val_text.front() == '\t'))
            val_text.remove_prefix(1);
        if (!detail::canonical_integer(idx_text) || !detail::canonical_integer(val_text) ||
            val_text == "-0")
            throw parse_error("b-file: malformed line " + std::to_string(lineno));
        const std::int64_t idx = std::stoll(std::string(idx_text));
        if (!out.entries.empty() && idx != out.entries.back().index + 1)
            throw parse_error("b-file: index gap at " +
                              std::to_string(out.entries.back().index + 1));
        out.entries.push_back({idx, std::string(val_text)});
    }
    return out;
}

struct diff_report {
    bool match = false;
    std::int64_t overlap_begin = 0;
    std::int64_t overlap_end = 0;       // inclusive
    std::int64_t divergence_index = 0;  // meaningful when !match
    std::string lhs, rhs;
};

// First divergence over the shared index range, or a full-match verdict.
inline diff_report compare_sequences(const bfile& a, const bfile& b) {
    if (a.entries.empty() || b.entries.empty())
        throw std::invalid_argument("compare_sequences: empty sequence");
    const std::int64_t lo = std::max(a.entries.front().index, b.entries.front().index);
    const std::int64_t hi = std::min(a.entries.back().index, b.entries.back().index);
    if (lo > hi)
        throw std::invalid_argument("compare_sequences: no overlapping indices");
    diff_report rep;
    rep.overlap_begin = lo;
    rep.overlap_end = hi;
    for (std::int64_t i = lo; i <= hi; ++i) {
        const auto& av = a.entries[i - a.entries.front().index].value;
        const auto& bv = b.entries[i - b.entries.front().index].value;
        if (av != bv) {
            rep.divergence_index = i;
            rep.lhs = av;
            rep.rhs = bv;
            return rep;
        }
    }
    rep.match = true;
    return rep;
}

// Lazily built distance tables shared by the step-count generators.
class sequence_context {
public:
    sequence_context(int cap_digits, std::uint64_t limit, int threads = 0,
                     std::string cache_dir = {})
        : cap_digits_(cap_digits), limit_(limit), threads_(threads),
          cache_dir_(std::move(cache_dir)) {}

    const distance_table& from_1() {
        if (!t1_)
            t1_ = cached_bfs(1, cap_digits_, limit_, threads_, cache_dir_);
        return *t1_;
    }
    const distance_table& from_5() {
        if (!t5_)
            t5_ = cached_bfs(5, cap_digits_, limit_, threads_, cache_dir_);
        return *t5_;
    }

    std::uint64_t limit() const { return limit_; }

private:
    int cap_digits_;
    std::uint64_t limit_;
    int threads_;
    std::string cache_dir_;
    std::optional<distance_table> t1_;
    std::optional<distance_table> t5_;
};

struct sequence_request {
    sequence_id id;
    std::int64_t count;
    std::int64_t offset = 1;
    bool positions = false;  // record sequences: emit where records occur instead
};

inline bfile generate_sequence(const sequence_request& req, sequence_context& ctx) {
    if (req.count < 1)
        throw std::invalid_argument("generate_sequence: count must be >= 1");

    std::vector<std::string> terms;
    terms.reserve(req.count);
    const auto need = static_cast<std::uint64_t>(req.count);

    switch (req.id) {
        case sequence_id::A323462:
            for (std::uint64_t n = 1; n <= need; ++n)
                terms.push_back(min_neighbor(digit_string(n)).value.str());
            break;
        case sequence_id::A323288:
            for (std::uint64_t n = 1; n <= need; ++n)
                terms.push_back(max_neighbor(digit_string(n)).value.str());
            break;
        case sequence_id::A323460:
            for (std::uint64_t n = 1; terms.size() < need; ++n)
                for (const digit_string& m : neighbors(digit_string(n))) {
                    terms.push_back(m.str());
                    if (terms.size() == need)
                        break;
                }
            break;
        case sequence_id::A323465:
            for (std::uint64_t n = 1; terms.size() < need; ++n)
                for (const digit_string& m : neighbors(digit_string(n).to_base(2))) {
                    terms.push_back(m.to_base(10).str());
                    if (terms.size() == need)
                        break;
                }
            break;
        case sequence_id::A323454: {
            if (need > ctx.limit())
                throw std::out_of_range("A323454: count exceeds the distance-table limit");
            const auto& t = ctx.from_1();
            for (std::uint64_t n = 1; n <= need; ++n)
                terms.push_back(std::to_string(tau(t, n)));
            break;
        }
        case sequence_id::A323484: {
            if (5 * need > ctx.limit())
                throw std::out_of_range("A323484: count exceeds the distance-table limit");
            const auto& t = ctx.from_5();
            for (std::uint64_t m = 1; m <= need; ++m)
                terms.push_back(std::to_string(steps_from_source(t, 5 * m)));
            break;
        }
        case sequence_id::A323463: {
            const auto rt = records_tau(ctx.limit(), ctx.from_1());
            if (need > rt.entries.size())
                throw std::out_of_range("A323463: only " + std::to_string(rt.entries.size()) +
                                        " records known up to the table limit");
            for (std::uint64_t i = 0; i < need; ++i)
                terms.push_back(std::to_string(req.positions ? rt.entries[i].first
                                                             : rt.entries[i].second));
            break;
        }
        case sequence_id::A323464: {
            const auto rt = records_class_b(ctx.limit(), ctx.from_5());
            if (need > rt.entries.size())
                throw std::out_of_range("A323464: only " + std::to_string(rt.entries.size()) +
                                        " records known up to the table limit");
            for (std::uint64_t i = 0; i < need; ++i)
                terms.push_back(std::to_string(req.positions ? rt.entries[i].first
                                                             : rt.entries[i].second));
            break;
        }
        case sequence_id::A323453:
            throw std::invalid_argument("A323453 is reserved but has no published definition");
    }

    bfile out;
    out.entries.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        out.entries.push_back({req.offset + static_cast<std::int64_t>(i), std::move(terms[i])});
    return out;
}

}  // namespace choix
