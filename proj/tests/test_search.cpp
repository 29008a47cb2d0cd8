#include <doctest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "nerveforge/errors.h"
#include "nerveforge/io.h"
#include "nerveforge/nerve.h"
#include "nerveforge/randgen.h"
#include "nerveforge/search.h"

using namespace nerveforge;

namespace {

// Stirling numbers of the second kind by the standard recurrence, computed in
// unsigned arithmetic small enough not to overflow for the sizes used here.
uint64_t stirling_oracle(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return 1;  // S(0,0)
    std::vector<std::vector<uint64_t>> s(static_cast<std::size_t>(n + 1),
                                         std::vector<uint64_t>(static_cast<std::size_t>(k + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                static_cast<uint64_t>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("stirling2 matches the recurrence and saturates") {
    for (int n = 0; n <= 16; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling_oracle(n, k));
    CHECK(stirling2(8, 4) == 1701);
    CHECK(stirling2(10, 4) == 34105);
    CHECK(stirling2(9, 4) == 7770);
    CHECK(stirling2(5, 7) == 0);
    // S(64, 32) overflows 64 bits; the saturating value must compare as
    // "over any budget" rather than wrapping.
    CHECK(stirling2(64, 32) == std::numeric_limits<uint64_t>::max());
}

TEST_CASE("blocker configs really block and the scan is exhaustive") {
    struct Case {
        const char* config;
        GraphSpec target;
        uint64_t all;
    } cases[] = {
        {"p4-blocker-8", GraphSpec::path(4), 1701},
        {"c4-blocker-10", GraphSpec::cycle(4), 34105},
    };
    for (const auto& c : cases) {
        PointSet ps = builtin_config(c.config).points;
        SearchOptions opt;
        opt.prune = false;
        SearchResult res = is_partition_induced(ps, c.target, opt);
        CHECK(!res.found());
        // With pruning off, every exactly-4-block partition is a leaf, so the
        // leaf count must equal S(n, 4) or the scan skipped something.
        CHECK(res.stats.leaves == c.all);
        CHECK(res.stats.pruned == 0);

        SearchResult pruned = is_partition_induced(ps, c.target);
        CHECK(!pruned.found());
        CHECK(pruned.stats.leaves <= c.all);
        CHECK(pruned.stats.pruned > 0);
    }
}

TEST_CASE("prune and no-prune find the same canonical first hit") {
    // Nine random points in a box admit a path-4 partition at this seed.
    PointSet ps = random_points(9, 2, 424242u, RandomMode::uniform_box);
    GraphSpec target = GraphSpec::path(4);

    SearchOptions plain;
    plain.prune = false;
    SearchResult a = is_partition_induced(ps, target, plain);
    SearchResult b = is_partition_induced(ps, target);
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.partition->parts == b.partition->parts);
    CHECK(b.stats.pruned > 0);

    // The hit is a real witness.
    a.partition->validate(ps);
    auto iso = graphs_isomorphic(intersection_graph(ps, *a.partition), target);
    CHECK(iso.has_value());
}

TEST_CASE("found partitions are exact covers with the target graph") {
    PointSet ps = random_points(8, 2, 99u, RandomMode::uniform_box);
    for (const GraphSpec& target : {GraphSpec::star(4), GraphSpec::path(3)}) {
        SearchResult res = is_partition_induced(ps, target);
        if (!res.found()) continue;
        res.partition->validate(ps);
        CHECK(res.partition->part_count() == target.n);
        CHECK(graphs_isomorphic(intersection_graph(ps, *res.partition), target).has_value());
    }
}

TEST_CASE("budget is checked against the exact partition count up front") {
    PointSet ps = random_points(12, 2, 7u, RandomMode::uniform_box);
    SearchOptions opt;
    opt.budget = 100;  // S(12, 4) = 611501 is far over
    CHECK_THROWS_AS(is_partition_induced(ps, GraphSpec::path(4), opt), InfeasibleSizeError);
}

TEST_CASE("impossible and oversized inputs") {
    // Fewer points than parts: no partitions exist, and that is a clean miss.
    PointSet few = random_points(3, 2, 3u, RandomMode::uniform_box);
    SearchResult res = is_partition_induced(few, GraphSpec::path(4));
    CHECK(!res.found());
    CHECK(res.stats.leaves == 0);

    PointSet big = random_points(65, 2, 3u, RandomMode::uniform_box);
    CHECK_THROWS_AS(is_partition_induced(big, GraphSpec::path(4)), PreconditionError);
}

TEST_CASE("audit mode agrees with the plain run") {
    PointSet ps = random_points(9, 2, 424242u, RandomMode::uniform_box);
    SearchOptions opt;
    opt.audit = true;
    SearchResult res = is_partition_induced(ps, GraphSpec::path(4), opt);
    CHECK(res.found());
}
