#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nerveforge/predicates.h"
#include "nerveforge/randgen.h"

using namespace nerveforge;

namespace {

// Laplace-expansion determinant over exact rationals, written from scratch so
// the library's sign pipeline is checked against independent arithmetic.
Rat det_laplace(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rat acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rat>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Rat term = m[0][j] * det_laplace(std::move(minor));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

int orientation_oracle(const PointSet& ps, const IndexList& tuple) {
    std::size_t k = tuple.size();
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (std::size_t r = 0; r < k; ++r) {
        m[r][0] = 1;
        for (int c = 0; c < ps.dim; ++c)
            m[r][static_cast<std::size_t>(c) + 1] = ps[tuple[r]][static_cast<std::size_t>(c)];
    }
    return sign_of(det_laplace(std::move(m)));
}

}  // namespace

TEST_CASE("orient2d matches a hand-computed determinant") {
    PointSet ps{2, {{Rat(222), Rat(243)}, {Rat(238), Rat(13)}, {Rat(131), Rat(50)}}};
    // | 238-222  13-243 ; 131-222  50-243 | = 16*(-193) - (-230)*(-91) = -24018
    CHECK(orient2d(ps[0], ps[1], ps[2]) == -1);
    CHECK(orientation(ps, {0, 1, 2}) == -1);
    CHECK(orientation_oracle(ps, {0, 1, 2}) == -1);
}

TEST_CASE("chirotope signs agree with independent determinants") {
    for (int d : {2, 3}) {
        int n = (d == 2) ? 9 : 7;
        PointSet ps = random_points(n, d, 77u + static_cast<uint64_t>(d), RandomMode::uniform_box);
        Chirotope chi = chirotope(ps);
        CHECK(chi.n == n);
        CHECK(chi.dim == d);
        CHECK(chi.signs.size() == binomial(n, d + 1));
        std::size_t at = 0;
        for_each_tuple(n, d + 1, [&](const IndexList& t) {
            CHECK(chi.rank(t) == at);
            CHECK(static_cast<int>(chi.sign(t)) == orientation_oracle(ps, t));
            ++at;
        });
        CHECK(at == chi.signs.size());
        CHECK(!chi.has_zero());
        CHECK(in_general_position(ps));
    }
}

TEST_CASE("moment curve points are uniformly positive") {
    for (int d : {2, 3, 4}) {
        PointSet ps = random_points(d + 4, d, 5u, RandomMode::moment_curve);
        Chirotope chi = chirotope(ps);
        CHECK(chi.all_positive());
        CHECK(!chi.has_zero());
    }
}

TEST_CASE("sign_any_order applies tuple parity") {
    PointSet ps = random_points(6, 2, 13u, RandomMode::uniform_box);
    Chirotope chi = chirotope(ps);
    CHECK(chi.sign_any_order({0, 1, 2}) == chi.sign({0, 1, 2}));
    CHECK(chi.sign_any_order({1, 0, 2}) == -chi.sign({0, 1, 2}));
    CHECK(chi.sign_any_order({2, 0, 1}) == chi.sign({0, 1, 2}));
    CHECK(chi.sign_any_order({5, 3, 1}) == -chi.sign({1, 3, 5}));
}

TEST_CASE("induced chirotope equals the chirotope of the reordered subset") {
    PointSet ps = random_points(8, 2, 21u, RandomMode::uniform_box);
    Chirotope chi = chirotope(ps);
    IndexList subset = {6, 0, 3, 5, 2};
    CHECK(induced_chirotope(chi, ps, subset) == chirotope(ps.subset(subset)));
}

TEST_CASE("degeneracies are reported, not hidden") {
    PointSet ps{2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(1), Rat(0)}}};
    CHECK(orientation(ps, {0, 1, 2}) == 0);
    Chirotope chi = chirotope(ps);
    CHECK(chi.has_zero());
    CHECK(!in_general_position(ps));
}

TEST_CASE("binomial and tuple enumeration") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(10, 4) == 210);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 4) == 0);

    std::vector<IndexList> seen;
    for_each_tuple(4, 2, [&](const IndexList& t) { seen.push_back(t); });
    std::vector<IndexList> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == want);
}

TEST_CASE("unimodular maps preserve every orientation sign") {
    PointSet ps = random_points(7, 3, 31u, RandomMode::uniform_box);
    AffineMap map = random_unimodular_map(3, 99u);
    PointSet moved = map.apply(ps);
    CHECK(chirotope(moved) == chirotope(ps));
}
