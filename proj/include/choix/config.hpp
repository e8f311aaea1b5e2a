#pragma once
// config.hpp - runtime knobs with flags > environment > config file > defaults.

#include <choix/digits.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace choix {

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct config {
    int cap_digits = 7;             // BFS digit cap
    std::uint64_t limit = 10000;    // distance-table limit
    int n_max = 40;                 // growth generations
    std::string cache_dir = ".choix-cache";
    int threads = 0;                // 0 = all hardware threads
};

struct config_overrides {
    std::optional<int> cap_digits;
    std::optional<std::uint64_t> limit;
    std::optional<int> n_max;
    std::optional<std::string> cache_dir;
    std::optional<int> threads;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::int64_t config_int(std::string_view key, std::string_view value) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(std::string(value), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty())
        throw config_error("config: '" + std::string(key) + "' needs an integer, got '" +
                           std::string(value) + "'");
    return v;
}

}  // namespace detail

// `key = value` lines; blank lines and # comments are skipped.
inline config_overrides parse_config_file(std::string_view text) {
    config_overrides out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        const std::string_view line = detail::trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#')
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error("config: expected 'key = value', got '" + std::string(line) + "'");
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key == "cap_digits")
            out.cap_digits = static_cast<int>(detail::config_int(key, value));
        else if (key == "limit")
            out.limit = static_cast<std::uint64_t>(detail::config_int(key, value));
        else if (key == "n_max")
            out.n_max = static_cast<int>(detail::config_int(key, value));
        else if (key == "cache_dir")
            out.cache_dir = std::string(value);
        else if (key == "threads")
            out.threads = static_cast<int>(detail::config_int(key, value));
        else
            throw config_error("config: unknown key '" + std::string(key) + "'");
    }
    return out;
}

inline config load_config(const config_overrides& flags,
                          const std::function<const char*(const char*)>& env,
                          const std::optional<std::string>& file_text) {
    config cfg;

    auto apply = [&](const config_overrides& o) {
        if (o.cap_digits)
            cfg.cap_digits = *o.cap_digits;
        if (o.limit)
            cfg.limit = *o.limit;
        if (o.n_max)
            cfg.n_max = *o.n_max;
        if (o.cache_dir)
            cfg.cache_dir = *o.cache_dir;
        if (o.threads)
            cfg.threads = *o.threads;
    };

    if (file_text)
        apply(parse_config_file(*file_text));

    if (env) {
        if (const char* v = env("CHOIX_CACHE_DIR"))
            cfg.cache_dir = v;
        if (const char* v = env("CHOIX_THREADS"))
            cfg.threads = static_cast<int>(detail::config_int("CHOIX_THREADS", v));
    }

    apply(flags);

    if (cfg.limit < 1)
        throw config_error("config: limit must be >= 1");
    if (cfg.n_max < 0)
        throw config_error("config: n_max must be >= 0");
    if (cfg.threads < 0)
        throw config_error("config: threads must be >= 0");
    if (cfg.cap_digits < digit_count(cfg.limit))
        throw config_error("config: cap_digits " + std::to_string(cfg.cap_digits) +
                           " is smaller than the digit count of limit " +
                           std::to_string(cfg.limit));
    if (cfg.cap_digits > 10)
        throw config_error("config: cap_digits above 10 exceeds the search memory budget");
    return cfg;
}

}  // namespace choix
