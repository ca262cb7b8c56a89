#include "monodesc/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace monodesc {

using nlohmann::json;
using cd = std::complex<double>;

std::string fmt_g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt_complex(cd v) {
    if (v.imag() == 0.0) return fmt_g(v.real());
    std::string s = fmt_g(v.real());
    std::string im = fmt_g(v.imag());
    if (!im.empty() && im[0] != '-') s += '+';
    return s + im + "i";
}

std::string fmt_cmat(const CMat& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += fmt_complex(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot open file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadInput("cannot open file for writing: " + path);
    out << body;
    if (!out) throw BadInput("write failed: " + path);
}

namespace {

json complex_to_json(cd v) { return json::array({v.real(), v.imag()}); }

cd complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw BadInput(std::string(what) + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json cmat_to_json(const CMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

CMat cmat_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw BadInput(std::string(what) + " must be a matrix");
    size_t cols = 0;
    std::vector<std::vector<cd>> grid;
    for (const json& row : j) {
        if (!row.is_array() || row.empty())
            throw BadInput(std::string(what) + " rows must be nonempty arrays");
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw BadInput(std::string(what) + " rows have unequal length");
        std::vector<cd> r;
        for (const json& e : row) r.push_back(complex_from_json(e, what));
        grid.push_back(std::move(r));
    }
    CMat m(static_cast<int>(grid.size()), static_cast<int>(cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int jj = 0; jj < m.cols(); ++jj)
            m(i, jj) = grid[static_cast<size_t>(i)][static_cast<size_t>(jj)];
    return m;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw BadInput(std::string("invalid JSON: ") + e.what());
    }
}

json loop_to_json(const Loop& l) {
    json vertices = json::array();
    for (cd v : l.vertices) vertices.push_back(complex_to_json(v));
    return json{{"base", complex_to_json(l.base)}, {"vertices", vertices}};
}

Loop loop_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("vertices"))
        throw BadInput("loop must be an object with \"base\" and \"vertices\"");
    Loop l;
    l.base = complex_from_json(j["base"], "loop base");
    if (!j["vertices"].is_array() || j["vertices"].size() < 2)
        throw BadInput("loop vertices must be an array of at least two points");
    for (const json& v : j["vertices"]) l.vertices.push_back(complex_from_json(v, "loop vertex"));
    return l;
}

}  // namespace

std::string loops_to_text(const std::vector<Loop>& loops) {
    json ls = json::array();
    for (const Loop& l : loops) ls.push_back(loop_to_json(l));
    return json{{"loops", ls}}.dump(2) + "\n";
}

std::vector<Loop> loops_from_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("loops") || !j["loops"].is_array())
        throw BadInput("loop file must be an object with a \"loops\" array");
    std::vector<Loop> out;
    for (const json& l : j["loops"]) out.push_back(loop_from_json(l));
    return out;
}

std::string rep_to_text(const MonodromyRep& rep) {
    json loops = json::array(), mats = json::array();
    for (const Loop& l : rep.loops) loops.push_back(loop_to_json(l));
    for (const CMat& m : rep.matrices) mats.push_back(cmat_to_json(m));
    return json{{"base", complex_to_json(rep.base)}, {"loops", loops}, {"matrices", mats}}
               .dump(2) +
           "\n";
}

TargetData targets_from_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("points") || !j.contains("generators"))
        throw BadInput("target file must be an object with \"points\" and \"generators\"");
    if (!j["points"].is_array() || j["points"].empty())
        throw BadInput("\"points\" must be a nonempty array");
    if (!j["generators"].is_array() || j["generators"].size() != j["points"].size())
        throw BadInput("\"generators\" must match \"points\" in length");
    TargetData t;
    for (const json& p : j["points"]) t.points.push_back(complex_from_json(p, "target point"));
    for (const json& g : j["generators"]) t.generators.push_back(cmat_from_json(g, "generator"));
    if (j.contains("base")) {
        if (!j["base"].is_number()) throw BadInput("\"base\" must be a real number");
        t.base = j["base"].get<double>();
    }
    return t;
}

}  // namespace monodesc
