#include <algorithm>

#include "doctest.h"
#include "monodesc/loops.hpp"
#include "oracles.hpp"

using namespace monodesc;
using cd = std::complex<double>;

TEST_SUITE_BEGIN("loops");

TEST_CASE("diameter and default base goldens") {
    CHECK(diameter({cd(0, 0), cd(3, 4)}) == doctest::Approx(5.0));
    CHECK(default_base({cd(0, 1), cd(0, -1)}) == -3.0);
    CHECK(default_base({cd(0, 0)}) == -1.0);
    CHECK(clearance_min({cd(0, 1), cd(0, -1)}, -3.0) > 0.0);
    CHECK_THROWS_AS(default_base({}), ContractViolation);
}

TEST_CASE("standard loops wind once around their own pole only") {
    std::vector<cd> s = {cd(0, 1), cd(0, -1), cd(2, 1), cd(2, -1)};
    double base = default_base(s);
    std::vector<Loop> loops = standard_loops(s, base);
    REQUIRE(loops.size() == 4);
    for (size_t k = 0; k < 4; ++k) {
        CHECK(loops[k].base == cd(base, 0.0));
        CHECK(loops[k].vertices.front() == loops[k].vertices.back());
        for (size_t j = 0; j < 4; ++j) {
            int expected = (j == k) ? 1 : 0;
            CHECK(winding_number(loops[k], s[j]) == expected);
            CHECK(oracle::winding_by_angle(loops[k], s[j]) == expected);
        }
        validate_loop(loops[k], s, clearance_min(s, cd(base, 0.0)));
    }
}

TEST_CASE("standard loops are conjugation equivariant") {
    std::vector<cd> s = {cd(0, 1), cd(0, -1), cd(2, 1), cd(2, -1)};
    std::vector<Loop> loops = standard_loops(s, default_base(s));
    auto check_pair = [&](size_t up, size_t down) {
        const auto& u = loops[up].vertices;
        const auto& d = loops[down].vertices;
        REQUIRE(u.size() == d.size());
        // the loop of conj(s) is the reversed conjugate of the loop of s
        for (size_t j = 0; j < u.size(); ++j) CHECK(d[j] == std::conj(u[u.size() - 1 - j]));
    };
    check_pair(0, 1);
    check_pair(2, 3);
}

TEST_CASE("mirror keeps order, flips winding sense") {
    std::vector<cd> s = {cd(0, 1), cd(0, -1)};
    std::vector<Loop> loops = standard_loops(s, default_base(s));
    Loop m = mirror_loop(loops[0]);
    REQUIRE(m.vertices.size() == loops[0].vertices.size());
    for (size_t j = 0; j < m.vertices.size(); ++j)
        CHECK(m.vertices[j] == std::conj(loops[0].vertices[j]));
    CHECK(winding_number(m, cd(0, -1)) == -1);
    CHECK(winding_number(loops[0], cd(0, 1)) == 1);
    CHECK(mirror_loop(m).vertices == loops[0].vertices);
}

TEST_CASE("winding numbers agree with the angle-summation oracle") {
    auto rng = oracle::make_rng(601);
    for (int t = 0; t < 40; ++t) {
        cd center(oracle::rand_unit(rng) * 3.0, oracle::rand_unit(rng) * 3.0);
        int turns_options[] = {-2, -1, 1, 2};
        int turns = turns_options[oracle::rand_int(rng, 0, 3)];
        Loop l = oracle::rand_star_loop(rng, center, turns);
        CHECK(winding_number(l, center) == turns);
        CHECK(winding_number(l, center) == oracle::winding_by_angle(l, center));
        cd outside = center + cd(25.0, 17.0);
        CHECK(winding_number(l, outside) == 0);
        CHECK(oracle::winding_by_angle(l, outside) == 0);
    }
}

TEST_CASE("loop validation") {
    std::vector<cd> poles = {cd(0, 0)};
    Loop open;
    open.base = cd(2, 0);
    open.vertices = {cd(2, 0), cd(3, 0), cd(3, 1)};
    CHECK_THROWS_AS(validate_loop(open, poles, 0.1), DegenerateGeometry);

    Loop tiny;
    tiny.base = cd(2, 0);
    tiny.vertices = {cd(2, 0)};
    CHECK_THROWS_AS(validate_loop(tiny, poles, 0.1), DegenerateGeometry);

    Loop through;  // segment passes right through the pole
    through.base = cd(-1, -1);
    through.vertices = {cd(-1, -1), cd(1, 1), cd(1, -1), cd(-1, -1)};
    CHECK_THROWS_AS(validate_loop(through, poles, 0.1), DegenerateGeometry);

    Loop fine;
    fine.base = cd(2, 0);
    fine.vertices = {cd(2, 0), cd(2, 1), cd(3, 1), cd(2, 0)};
    validate_loop(fine, poles, 0.1);  // no throw
}

TEST_CASE("degenerate construction inputs") {
    CHECK_THROWS_AS(standard_loops({}, 0.0), ContractViolation);
    CHECK_THROWS_AS(standard_loops({cd(0, 0)}, 0.0), DegenerateGeometry);  // base on pole
    CHECK_THROWS_AS(standard_loops({cd(0, 0), cd(1e-14, 0)}, -2.0), DegenerateGeometry);
}

TEST_CASE("segment distance") {
    CHECK(dist_point_segment(cd(0, 1), cd(-1, 0), cd(1, 0)) == doctest::Approx(1.0));
    CHECK(dist_point_segment(cd(5, 0), cd(-1, 0), cd(1, 0)) == doctest::Approx(4.0));
    CHECK(dist_point_segment(cd(0, 0), cd(2, 2), cd(2, 2)) == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("refinement halves segments without changing the path") {
    std::vector<cd> s = {cd(0, 1), cd(0, -1)};
    std::vector<Loop> loops = standard_loops(s, default_base(s));
    Loop r = refine_loop(loops[0]);
    CHECK(r.vertices.size() == 2 * loops[0].vertices.size() - 1);
    CHECK(r.base == loops[0].base);
    CHECK(r.vertices.front() == r.vertices.back());
    CHECK(winding_number(r, s[0]) == 1);
    CHECK(winding_number(r, s[1]) == 0);
    // original vertices survive at even indices
    for (size_t j = 0; j < loops[0].vertices.size(); ++j)
        CHECK(r.vertices[2 * j] == loops[0].vertices[j]);
}

TEST_CASE("concatenation requires a common base") {
    std::vector<cd> s = {cd(0, 1), cd(0, -1)};
    std::vector<Loop> loops = standard_loops(s, default_base(s));
    Loop c = concat_loops(loops[0], loops[1]);
    CHECK(c.base == loops[0].base);
    CHECK(c.vertices.size() == loops[0].vertices.size() + loops[1].vertices.size() - 1);
    CHECK(winding_number(c, s[0]) == 1);
    CHECK(winding_number(c, s[1]) == 1);

    Loop shifted = loops[1];
    shifted.base += cd(0.5, 0.0);
    for (auto& v : shifted.vertices) v += cd(0.5, 0.0);
    CHECK_THROWS_AS(concat_loops(loops[0], shifted), ContractViolation);
}

TEST_SUITE_END();
