#include <catch2/catch_amalgamated.hpp>

#include <choix/search.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

using choix::component_class;
using choix::digit_string;
using choix::distance_table;

namespace {

const distance_table& table1() {
    static const distance_table t = choix::bfs_distances(1, 7, 10000);
    return t;
}

const distance_table& table5() {
    static const distance_table t = choix::bfs_distances(5, 7, 20000);
    return t;
}

}  // namespace

TEST_CASE("component classification by last digit") {
    REQUIRE(choix::component_of(20218ULL) == component_class::a);
    REQUIRE(choix::component_of(5ULL) == component_class::b);
    REQUIRE(choix::component_of(19995ULL) == component_class::b);
    REQUIRE(choix::component_of(digit_string(1)) == component_class::a);
    REQUIRE(choix::component_of(digit_string(40)) == component_class::b);
}

TEST_CASE("step counts from 1 match the published table for 1..36") {
    const std::vector<std::int32_t> expected = {
        0, 1, 11, 2, -1, 10, 9,  3, 9, -1, 10, 9,  5,  8, -1, 4,  7, 8,
        8, -1, 10, 9, 6,  8,  -1, 5, 8, 7,  9,  -1, 6,  5, 10, 6,  -1, 9,
    };
    const distance_table t = choix::bfs_distances(1, 6, 36);
    for (std::uint64_t n = 1; n <= 36; ++n) {
        CAPTURE(n);
        REQUIRE(tau(t, n) == expected[n - 1]);
    }
    // stable against a one-digit-larger cap
    const auto audit = choix::audit_cap_stability(1, 6, 36);
    REQUIRE(audit.stable);
}

TEST_CASE("trivial table from source 1 with limit 1") {
    const distance_table t = choix::bfs_distances(1, 1, 1);
    REQUIRE(tau(t, 1) == 0);
}

TEST_CASE("step counts from 5 match the published multiples-of-5 row") {
    const std::vector<std::int32_t> expected = {0, 1, 11, 2, 11, 12, 8, 3, 10, 12, 9, 11};
    const distance_table t = choix::bfs_distances(5, 6, 60);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        REQUIRE(choix::steps_from_source(t, 5 * (i + 1)) == expected[i]);
    }
}

TEST_CASE("distances agree with plain set expansion for six steps") {
    // oracle: expand neighbor sets from 1; min generation of first appearance
    std::map<std::uint64_t, int> first_seen{{1, 0}};
    std::set<std::uint64_t> frontier{1};
    for (int k = 1; k <= 6; ++k) {
        std::set<std::uint64_t> grown;
        for (std::uint64_t v : frontier)
            for (std::uint64_t m : choix::neighbors_u64(v))
                grown.insert(m);
        for (std::uint64_t m : grown)
            first_seen.emplace(m, k);
        frontier = std::move(grown);
    }
    for (const auto& [v, k] : first_seen) {
        CAPTURE(v);
        REQUIRE(tau(table1(), v) == k);
    }
    // the doubling chain in particular
    REQUIRE(tau(table1(), 2) == 1);
    REQUIRE(tau(table1(), 4) == 2);
    REQUIRE(tau(table1(), 8) == 3);
    REQUIRE(tau(table1(), 16) == 4);
}

TEST_CASE("tau handles both components and range errors") {
    REQUIRE(tau(table1(), 3) == 11);
    REQUIRE(tau(table1(), 5) == -1);
    REQUIRE(tau(table1(), 9879) == 16);
    REQUIRE_THROWS_AS(tau(table1(), 10001), std::out_of_range);
    REQUIRE_THROWS_AS(tau(table1(), 0), std::out_of_range);
    REQUIRE_THROWS_AS(tau(table5(), 5), std::invalid_argument);
}

TEST_CASE("running records of tau up to 10000") {
    const auto rt = choix::records_tau(10000, table1());
    const std::vector<std::pair<std::uint64_t, std::int32_t>> expected = {
        {1, 0}, {2, 1}, {3, 11}, {99, 12}, {369, 13}, {999, 14}, {1999, 15}, {9879, 16},
    };
    REQUIRE(rt.entries == expected);

    const auto prefix = choix::records_tau(10, table1());
    REQUIRE(prefix.entries == std::vector<std::pair<std::uint64_t, std::int32_t>>{
                                  {1, 0}, {2, 1}, {3, 11}});
    const auto lone = choix::records_tau(1, table1());
    REQUIRE(lone.entries == std::vector<std::pair<std::uint64_t, std::int32_t>>{{1, 0}});
}

TEST_CASE("running records of steps from 5 up to 20000") {
    const auto rt = choix::records_class_b(20000, table5());
    const std::vector<std::pair<std::uint64_t, std::int32_t>> expected = {
        {5, 0},    {10, 1},   {15, 11},  {30, 12},    {100, 13},
        {200, 14}, {400, 15}, {9875, 16}, {19995, 17},
    };
    REQUIRE(rt.entries == expected);

    const auto prefix = choix::records_class_b(30, table5());
    REQUIRE(prefix.entries == std::vector<std::pair<std::uint64_t, std::int32_t>>{
                                  {5, 0}, {10, 1}, {15, 11}, {30, 12}});
    const auto lone = choix::records_class_b(5, table5());
    REQUIRE(lone.entries == std::vector<std::pair<std::uint64_t, std::int32_t>>{{5, 0}});
}

TEST_CASE("shortest paths validate edge by edge") {
    const auto p = choix::shortest_path(digit_string(1), digit_string(3), 7);
    REQUIRE(p.vertices.size() == 12);  // 11 steps
    REQUIRE(p.vertices.front() == digit_string(1));
    REQUIRE(p.vertices.back() == digit_string(3));
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        REQUIRE(p.vertices[i + 1] != p.vertices[i]);
        REQUIRE(is_neighbor(p.vertices[i], p.vertices[i + 1]));
    }

    const auto self = choix::shortest_path(digit_string(1), digit_string(1), 7);
    REQUIRE(self.vertices == std::vector<digit_string>{digit_string(1)});

    REQUIRE_THROWS_AS(choix::shortest_path(digit_string(1), digit_string(5), 7),
                      choix::no_path_error);
    // 3 is not reachable from 1 through single-digit intermediates
    REQUIRE_THROWS_AS(choix::shortest_path(digit_string(1), digit_string(3), 1),
                      choix::cap_exceeded_error);
    // endpoint wider than the cap
    REQUIRE_THROWS_AS(choix::shortest_path(digit_string(1), digit_string(112), 2),
                      choix::cap_exceeded_error);
}

TEST_CASE("shortest path is deterministic") {
    const auto p1 = choix::shortest_path(digit_string(1), digit_string(369), 7, 1);
    const auto p2 = choix::shortest_path(digit_string(1), digit_string(369), 7, 2);
    REQUIRE(p1.vertices == p2.vertices);
    REQUIRE(static_cast<std::int32_t>(p1.vertices.size()) == tau(table1(), 369) + 1);
}

TEST_CASE("parent property and triangle consistency") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        if (choix::component_of(n) != component_class::a)
            continue;
        const std::int32_t d = tau(table1(), n);
        if (d > 0) {
            bool has_parent = false;
            for (std::uint64_t m : choix::neighbors_u64(n))
                if (m != n && m <= table1().limit && table1().raw(m) == d - 1)
                    has_parent = true;
            CAPTURE(n, d);
            REQUIRE(has_parent);
        }
        for (std::uint64_t m : choix::neighbors_u64(n))
            if (m <= 1000 && choix::component_of(m) == component_class::a) {
                CAPTURE(n, m);
                REQUIRE(std::abs(tau(table1(), n) - tau(table1(), m)) <= 1);
            }
    }
}

TEST_CASE("distance tables are identical across worker counts") {
    const distance_table a = choix::bfs_distances(1, 6, 5000, 1);
    const distance_table b = choix::bfs_distances(1, 6, 5000, 4);
    REQUIRE(a.steps == b.steps);
}

TEST_CASE("bad configurations are rejected") {
    REQUIRE_THROWS_AS(choix::bfs_distances(2, 7, 100), std::invalid_argument);
    REQUIRE_THROWS_AS(choix::bfs_distances(1, 3, 10000), std::invalid_argument);
    REQUIRE_THROWS_AS(choix::bfs_distances(1, 7, 0), std::invalid_argument);
}

TEST_CASE("distance cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "choix-test-cache";
    std::filesystem::remove_all(dir);

    const distance_table t = choix::cached_bfs(1, 6, 500, 0, dir.string());
    const auto path = choix::cache_path(dir, 1, 6, 500);
    REQUIRE(std::filesystem::exists(path));

    // reload hits the exact key
    const auto loaded = choix::load_distance_table(path, 1, 6, 500);
    REQUIRE(loaded.has_value());
    REQUIRE(loaded->steps == t.steps);

    // key mismatch is a miss, not an error
    REQUIRE_FALSE(choix::load_distance_table(path, 1, 7, 500).has_value());
    REQUIRE_FALSE(choix::load_distance_table(path, 5, 6, 500).has_value());

    // second cached_bfs reuses the file byte for byte
    const auto before = std::filesystem::last_write_time(path);
    const distance_table again = choix::cached_bfs(1, 6, 500, 0, dir.string());
    REQUIRE(again.steps == t.steps);
    REQUIRE(std::filesystem::last_write_time(path) == before);

    // malformed content is loud
    {
        std::ofstream out(path, std::ios::binary);
        out << "# choix-cache v1\n# source=1 cap=6 limit=500\n1 0\nbroken\n";
    }
    REQUIRE_THROWS(choix::load_distance_table(path, 1, 6, 500));

    std::filesystem::remove_all(dir);
}

TEST_CASE("cache file format is exact") {
    // single-digit cap: from 1 only 1, 2, 4, 8 are reachable
    const distance_table t = choix::bfs_distances(1, 1, 4);
    const auto dir = std::filesystem::temp_directory_path() / "choix-test-cache2";
    std::filesystem::remove_all(dir);
    const auto path = choix::cache_path(dir, 1, 1, 4);
    choix::save_distance_table(t, path);
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(text == "# choix-cache v1\n# source=1 cap=1 limit=4\n1 0\n2 1\n3 -1\n4 2\n");
    std::filesystem::remove_all(dir);
}
