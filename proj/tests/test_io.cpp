#include <cstdio>
#include <string>

#include "doctest.h"
#include "monodesc/io.hpp"
#include "oracles.hpp"

using namespace monodesc;
using cd = std::complex<double>;

namespace {

std::string temp_path(const char* name) {
    return std::string("/tmp/monodesc_io_test_") + name;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("numeric formatting") {
    CHECK(fmt_g(0.5) == "0.5");
    CHECK(fmt_g(-3.0) == "-3");
    CHECK(fmt_g(1e20) == "1e+20");
    CHECK(fmt_complex(cd(2, 0)) == "2");
    CHECK(fmt_complex(cd(0, 1)) == "0+1i");
    CHECK(fmt_complex(cd(1.5, -2)) == "1.5-2i");
    CMat m(1, 2);
    m(0, 0) = cd(1, 0);
    m(0, 1) = cd(0, -1);
    CHECK(fmt_cmat(m) == "[[1, 0-1i]]");
}

TEST_CASE("text files round trip and report failures") {
    std::string path = temp_path("roundtrip.txt");
    write_text_file(path, "hello\nworld\n");
    CHECK(read_text_file(path) == "hello\nworld\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("/tmp/monodesc_io_test_does_not_exist"), BadInput);
    CHECK_THROWS_AS(write_text_file("/tmp/no_such_dir_xyz/file.txt", "x"), BadInput);
}

TEST_CASE("loop files round trip exactly") {
    std::vector<cd> s = {cd(0, 1), cd(0, -1)};
    std::vector<Loop> loops = standard_loops(s, default_base(s));
    std::string text = loops_to_text(loops);
    std::vector<Loop> back = loops_from_text(text);
    REQUIRE(back.size() == loops.size());
    for (size_t k = 0; k < loops.size(); ++k) {
        CHECK(back[k].base == loops[k].base);
        REQUIRE(back[k].vertices.size() == loops[k].vertices.size());
        for (size_t j = 0; j < loops[k].vertices.size(); ++j)
            CHECK(back[k].vertices[j] == loops[k].vertices[j]);
    }
    // serialization is deterministic
    CHECK(loops_to_text(loops) == text);
}

TEST_CASE("loop file rejection") {
    CHECK_THROWS_AS(loops_from_text("not json"), BadInput);
    CHECK_THROWS_AS(loops_from_text("{\"loops\": 5}"), BadInput);
    CHECK_THROWS_AS(loops_from_text("{}"), BadInput);
    CHECK_THROWS_AS(loops_from_text("{\"loops\": [{\"base\": [0,0]}]}"), BadInput);
    CHECK_THROWS_AS(
        loops_from_text("{\"loops\": [{\"base\": [0,0], \"vertices\": [[0,0]]}]}"), BadInput);
    CHECK_THROWS_AS(
        loops_from_text("{\"loops\": [{\"base\": [0], \"vertices\": [[0,0],[1,1],[0,0]]}]}"),
        BadInput);
}

TEST_CASE("representation dump is structured and deterministic") {
    MonodromyRep rep;
    rep.base = cd(-3, 0);
    std::vector<cd> s = {cd(0, 1), cd(0, -1)};
    rep.loops = standard_loops(s, -3.0);
    CMat m = cmat_identity(1);
    m(0, 0) = cd(0.25, -0.5);
    rep.matrices = {m, m};
    std::string text = rep_to_text(rep);
    CHECK(text.find("\"base\"") != std::string::npos);
    CHECK(text.find("\"loops\"") != std::string::npos);
    CHECK(text.find("\"matrices\"") != std::string::npos);
    CHECK(text.find("0.25") != std::string::npos);
    CHECK(text.find("-0.5") != std::string::npos);
    CHECK(rep_to_text(rep) == text);
}

TEST_CASE("target files") {
    TargetData t = targets_from_text(
        "{\"points\": [[0, 1], [2, 1]],"
        " \"generators\": [[[[1,0],[0,0]],[[0,0],[1,0]]], [[[2,0],[0,1]],[[0,0],[1,0]]]],"
        " \"base\": -4.5}");
    REQUIRE(t.points.size() == 2);
    CHECK(t.points[0] == cd(0, 1));
    CHECK(t.points[1] == cd(2, 1));
    REQUIRE(t.generators.size() == 2);
    CHECK(t.generators[0].rows() == 2);
    CHECK(t.generators[0](0, 0) == cd(1, 0));
    CHECK(t.generators[1](0, 0) == cd(2, 0));
    CHECK(t.generators[1](0, 1) == cd(0, 1));
    CHECK(t.generators[1](1, 0) == cd(0, 0));
    REQUIRE(t.base.has_value());
    CHECK(*t.base == -4.5);

    TargetData nb = targets_from_text(
        "{\"points\": [[0, 1]], \"generators\": [[[[2,0]]]]}");
    CHECK(!nb.base.has_value());
    CHECK(nb.generators[0](0, 0) == cd(2, 0));
}

TEST_CASE("target file rejection") {
    CHECK_THROWS_AS(targets_from_text("[1,2,3]"), BadInput);
    CHECK_THROWS_AS(targets_from_text("{\"points\": []}"), BadInput);
    CHECK_THROWS_AS(targets_from_text("{\"points\": [[0,1]], \"generators\": []}"), BadInput);
    CHECK_THROWS_AS(
        targets_from_text("{\"points\": [[0,1]], \"generators\": [[[[1,0Q]]]]}"), BadInput);
    // ragged generator rows
    CHECK_THROWS_AS(
        targets_from_text(
            "{\"points\": [[0,1]], \"generators\": [[[[1,0]],[[0,1],[1,0]]]]}"),
        BadInput);
    CHECK_THROWS_AS(
        targets_from_text(
            "{\"points\": [[0,1]], \"generators\": [[[[1,0]]]], \"base\": \"x\"}"),
        BadInput);
}

TEST_SUITE_END();
