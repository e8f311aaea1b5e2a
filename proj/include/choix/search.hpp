#pragma once
// search.hpp - component classification, capped breadth-first search for step
// counts, shortest paths, record tables, and the on-disk distance cache.
//
// The state space is implicit: vertices are all positive integers with at
// most cap_digits digits, edges are one halve/double substring move. Within
// the cap every vertex is encoded as a plain uint64_t and visited state lives
// in a flat bitmap over the contiguous range, which the search scans layer by
// layer. Layers can be expanded by several workers; discovery is
// first-writer-wins on an atomic bitmap, so the resulting distances do not
// depend on the worker count.

#include <choix/digits.hpp>

#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unistd.h>
#include <utility>
#include <vector>

namespace choix {

class no_path_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class cap_exceeded_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class component_class : std::uint8_t { a, b };

inline component_class component_of(std::uint64_t n) {
    const auto d = n % 10;
    return (d == 0 || d == 5) ? component_class::b : component_class::a;
}

inline component_class component_of(const digit_string& n) {
    const auto d = n.last_digit();
    return (d == 0 || d == 5) ? component_class::b : component_class::a;
}

namespace detail {

class bitmap {
public:
    explicit bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}

    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    // Returns true iff this call flipped the bit from 0 to 1.
    bool try_set_atomic(std::uint64_t i) {
        std::atomic_ref<std::uint64_t> w(words_[i >> 6]);
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (w.load(std::memory_order_relaxed) & bit)
            return false;
        return (w.fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
    }

    void set_atomic(std::uint64_t i) {
        std::atomic_ref<std::uint64_t> w(words_[i >> 6]);
        w.fetch_or(std::uint64_t{1} << (i & 63), std::memory_order_relaxed);
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

private:
    std::vector<std::uint64_t> words_;
};

inline int resolve_threads(int threads) {
    if (threads > 0)
        return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Layered BFS over all values in [1, 10^cap_digits). on_visit(v, layer) fires
// exactly once per discovered vertex (from whichever worker discovers it);
// stop_after(layer) is polled between layers.
template <class OnVisit, class StopAfter>
void bfs_layers(std::uint64_t source, int cap_digits, int threads, OnVisit&& on_visit,
                StopAfter&& stop_after) {
    if (cap_digits < 1 || cap_digits > 10)
        throw std::invalid_argument("bfs_layers: cap_digits must be in 1..10");
    const std::uint64_t max_value = powers<10>.p[cap_digits] - 1;
    if (source < 1 || source > max_value)
        throw std::invalid_argument("bfs_layers: source outside digit cap");

    bitmap visited(max_value + 1), cur(max_value + 1), next(max_value + 1);
    visited.set(source);
    cur.set(source);
    on_visit(source, 0);

    const int workers = resolve_threads(threads);
    int layer = 0;
    for (;;) {
        ++layer;
        std::atomic<bool> any_new{false};
        auto expand_words = [&](std::size_t lo, std::size_t hi) {
            bool found = false;
            for (std::size_t wi = lo; wi < hi; ++wi) {
                std::uint64_t w = cur.word(wi);
                while (w != 0) {
                    const int bitpos = std::countr_zero(w);
                    w &= w - 1;
                    const std::uint64_t v = (static_cast<std::uint64_t>(wi) << 6) + bitpos;
                    for_each_neighbor_value(v, [&](std::uint64_t m) {
                        if (m <= max_value && visited.try_set_atomic(m)) {
                            next.set_atomic(m);
                            on_visit(m, layer);
                            found = true;
                        }
                    });
                }
            }
            if (found)
                any_new.store(true, std::memory_order_relaxed);
        };

        const std::size_t words = cur.word_count();
        if (workers == 1 || words < 1024) {
            expand_words(0, words);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            const std::size_t chunk = (words + workers - 1) / workers;
            for (int t = 0; t < workers; ++t) {
                const std::size_t lo = std::min(words, t * chunk);
                const std::size_t hi = std::min(words, lo + chunk);
                pool.emplace_back(expand_words, lo, hi);
            }
            for (auto& th : pool)
                th.join();
        }

        if (!any_new.load())
            break;
        std::swap(cur, next);
        next.clear();
        if (stop_after(layer))
            break;
    }
}

}  // namespace detail

// Minimal step counts from `source` to every target <= limit, restricted to
// intermediate values of at most cap_digits digits. -1 marks targets that
// were not reached (the other component, or starved by the cap).
struct distance_table {
    int source = 1;  // 1 or 5
    int cap_digits = 7;
    std::uint64_t limit = 0;
    std::vector<std::int32_t> steps;  // index 1..limit

    std::int32_t raw(std::uint64_t n) const { return steps[n]; }
};

inline distance_table bfs_distances(int source, int cap_digits, std::uint64_t limit,
                                    int threads = 0) {
    if (source != 1 && source != 5)
        throw std::invalid_argument("bfs_distances: source must be 1 or 5");
    if (limit < 1)
        throw std::invalid_argument("bfs_distances: limit must be >= 1");
    if (cap_digits < digit_count(limit))
        throw std::invalid_argument("bfs_distances: cap_digits smaller than digits of limit");

    distance_table t;
    t.source = source;
    t.cap_digits = cap_digits;
    t.limit = limit;
    t.steps.assign(limit + 1, -1);

    const component_class sc = component_of(static_cast<std::uint64_t>(source));
    // class B holds the multiples of 5; everything else is class A
    std::atomic<std::int64_t> remaining{
        sc == component_class::b ? static_cast<std::int64_t>(limit / 5)
                                 : static_cast<std::int64_t>(limit - limit / 5)};

    detail::bfs_layers(
        static_cast<std::uint64_t>(source), cap_digits, threads,
        [&](std::uint64_t v, int layer) {
            if (v <= limit) {
                t.steps[v] = layer;
                remaining.fetch_sub(1, std::memory_order_relaxed);
            }
        },
        [&](int) { return remaining.load(std::memory_order_relaxed) <= 0; });
    return t;
}

// Step count from the table's source, or -1 for targets in the other
// component. Targets the cap starved are reported as an error, not -1.
inline std::int32_t steps_from_source(const distance_table& t, std::uint64_t n) {
    if (n < 1 || n > t.limit)
        throw std::out_of_range("steps_from_source: target beyond table limit");
    if (component_of(n) != component_of(static_cast<std::uint64_t>(t.source)))
        return -1;
    const std::int32_t v = t.steps[n];
    if (v < 0)
        throw std::runtime_error("steps_from_source: target not reached within cap_digits");
    return v;
}

inline std::int32_t tau(const distance_table& from_1, std::uint64_t n) {
    if (from_1.source != 1)
        throw std::invalid_argument("tau: table was not built from source 1");
    return steps_from_source(from_1, n);
}

struct path_trace {
    std::vector<digit_string> vertices;
};

// A shortest path between two values of the same component, all intermediate
// values capped at cap_digits digits. Among equal-length choices the
// numerically smallest predecessor is taken at every step.
inline path_trace shortest_path(const digit_string& a, const digit_string& b, int cap_digits,
                                int threads = 0) {
    if (a.base() != 10 || b.base() != 10)
        throw std::invalid_argument("shortest_path: base-10 values required");
    if (component_of(a) != component_of(b))
        throw no_path_error("shortest_path: endpoints lie in different components");
    if (static_cast<int>(a.size()) > cap_digits || static_cast<int>(b.size()) > cap_digits)
        throw cap_exceeded_error("shortest_path: endpoint exceeds cap_digits");
    if (cap_digits > 9)
        throw std::invalid_argument("shortest_path: cap_digits above 9 is not supported");

    const std::uint64_t av = a.value_u64(), bv = b.value_u64();
    if (av == bv)
        return {{a}};

    const std::uint64_t max_value = detail::powers<10>.p[cap_digits] - 1;
    std::vector<std::uint8_t> dist(max_value + 1, 0xFF);
    std::atomic<bool> found{false};
    detail::bfs_layers(
        av, cap_digits, threads,
        [&](std::uint64_t v, int layer) {
            if (layer > 254)
                return;  // beyond reconstructable depth; treated as unreached
            dist[v] = static_cast<std::uint8_t>(layer);
            if (v == bv)
                found.store(true, std::memory_order_relaxed);
        },
        [&](int) { return found.load(std::memory_order_relaxed); });
    if (!found.load())
        throw cap_exceeded_error("shortest_path: no path within cap_digits");

    std::vector<std::uint64_t> rev{bv};
    std::uint64_t cur = bv;
    for (int d = dist[bv]; d > 0; --d) {
        std::uint64_t best = 0;
        for_each_neighbor_value(cur, [&](std::uint64_t m) {
            if (m <= max_value && dist[m] == d - 1 && (best == 0 || m < best))
                best = m;
        });
        if (best == 0)
            throw std::logic_error("shortest_path: broken parent chain");
        rev.push_back(best);
        cur = best;
    }
    path_trace out;
    out.vertices.reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
        out.vertices.emplace_back(*it);
    return out;
}

// Running maxima of a step-count sequence: (position, record value) pairs.
struct record_table {
    std::vector<std::pair<std::uint64_t, std::int32_t>> entries;
};

namespace detail {

inline record_table records_over_class(std::uint64_t limit, const distance_table& t,
                                       component_class cls) {
    if (limit > t.limit)
        throw std::out_of_range("records: limit beyond table limit");
    record_table rt;
    std::int32_t best = -1;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (component_of(n) != cls)
            continue;
        const std::int32_t v = steps_from_source(t, n);
        if (v > best) {
            best = v;
            rt.entries.emplace_back(n, v);
        }
    }
    return rt;
}

}  // namespace detail

inline record_table records_tau(std::uint64_t limit, const distance_table& from_1) {
    if (from_1.source != 1)
        throw std::invalid_argument("records_tau: table was not built from source 1");
    return detail::records_over_class(limit, from_1, component_class::a);
}

inline record_table records_class_b(std::uint64_t limit, const distance_table& from_5) {
    if (from_5.source != 5)
        throw std::invalid_argument("records_class_b: table was not built from source 5");
    return detail::records_over_class(limit, from_5, component_class::b);
}

// --- distance table cache ---------------------------------------------------
//
// ASCII text, LF line endings:
//   # choix-cache v1
//   # source=<1|5> cap=<D> limit=<L>
//   <n> <steps>          (one line per n = 1..limit, ascending; -1 unreached)

inline std::filesystem::path cache_path(const std::filesystem::path& dir, int source,
                                        int cap_digits, std::uint64_t limit) {
    std::ostringstream name;
    name << "choix-s" << source << "-c" << cap_digits << "-l" << limit << ".txt";
    return dir / name.str();
}

inline void save_distance_table(const distance_table& t, const std::filesystem::path& path) {
    if (!path.parent_path().empty())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw std::runtime_error("cache: cannot write " + tmp.string());
        out << "# choix-cache v1\n";
        out << "# source=" << t.source << " cap=" << t.cap_digits << " limit=" << t.limit << "\n";
        for (std::uint64_t n = 1; n <= t.limit; ++n)
            out << n << ' ' << t.steps[n] << '\n';
        if (!out.flush())
            throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

// Loads a cache file only when its key matches exactly; a missing file or a
// key mismatch is a miss (nullopt), a malformed file is an error.
inline std::optional<distance_table> load_distance_table(const std::filesystem::path& path,
                                                         int source, int cap_digits,
                                                         std::uint64_t limit) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "# choix-cache v1")
        throw std::runtime_error("cache: bad header in " + path.string());
    if (!std::getline(in, line))
        throw std::runtime_error("cache: missing key line in " + path.string());
    int src = 0, cap = 0;
    unsigned long long lim = 0;
    if (std::sscanf(line.c_str(), "# source=%d cap=%d limit=%llu", &src, &cap, &lim) != 3)
        throw std::runtime_error("cache: bad key line in " + path.string());
    if (src != source || cap != cap_digits || lim != limit)
        return std::nullopt;

    distance_table t;
    t.source = source;
    t.cap_digits = cap_digits;
    t.limit = limit;
    t.steps.assign(limit + 1, -1);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (!std::getline(in, line))
            throw std::runtime_error("cache: truncated file " + path.string());
        unsigned long long idx = 0;
        long long steps = 0;
        if (std::sscanf(line.c_str(), "%llu %lld", &idx, &steps) != 2 || idx != n)
            throw std::runtime_error("cache: malformed line in " + path.string());
        t.steps[n] = static_cast<std::int32_t>(steps);
    }
    return t;
}

// Builds the table, going through the on-disk cache when cache_dir is set.
inline distance_table cached_bfs(int source, int cap_digits, std::uint64_t limit, int threads = 0,
                                 const std::string& cache_dir = {}) {
    if (cache_dir.empty())
        return bfs_distances(source, cap_digits, limit, threads);
    const auto path = cache_path(cache_dir, source, cap_digits, limit);
    if (auto t = load_distance_table(path, source, cap_digits, limit))
        return std::move(*t);
    distance_table t = bfs_distances(source, cap_digits, limit, threads);
    save_distance_table(t, path);
    return t;
}

// Compares distances at cap_digits and cap_digits + 1 over all targets.
struct stability_audit {
    bool stable = true;
    std::uint64_t first_mismatch = 0;
    std::int32_t steps_at_cap = -1;
    std::int32_t steps_at_cap_plus_one = -1;
};

inline stability_audit audit_cap_stability(int source, int cap_digits, std::uint64_t limit,
                                           int threads = 0, const std::string& cache_dir = {}) {
    const distance_table lo = cached_bfs(source, cap_digits, limit, threads, cache_dir);
    const distance_table hi = cached_bfs(source, cap_digits + 1, limit, threads, cache_dir);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (lo.steps[n] != hi.steps[n])
            return {false, n, lo.steps[n], hi.steps[n]};
    }
    return {};
}

}  // namespace choix
