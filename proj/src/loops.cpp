#include "monodesc/loops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monodesc {

using cd = std::complex<double>;

double diameter(const std::vector<cd>& pts) {
    double best = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, std::abs(pts[i] - pts[j]));
    return best;
}

double default_base(const std::vector<cd>& s) {
    if (s.empty()) throw ContractViolation("default base needs at least one pole");
    double min_re = std::numeric_limits<double>::infinity();
    for (cd p : s) min_re = std::min(min_re, p.real());
    return min_re - 1.0 - diameter(s);
}

double clearance_min(const std::vector<cd>& s, cd base) {
    std::vector<cd> pts = s;
    pts.push_back(base);
    return 1e-3 * diameter(pts);
}

double dist_point_segment(cd p, cd a, cd b) {
    cd ab = b - a;
    double l2 = std::norm(ab);
    if (l2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

int winding_number(const Loop& loop, cd p) {
    // standard signed crossing count, half-open in y to handle vertices
    int w = 0;
    const auto& v = loop.vertices;
    for (size_t k = 0; k + 1 < v.size(); ++k) {
        cd a = v[k], b = v[k + 1];
        double cross = ((b - a) * std::conj(p - a)).imag();
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && cross < 0.0) ++w;
        } else {
            if (b.imag() <= p.imag() && cross > 0.0) --w;
        }
    }
    return w;
}

void validate_loop(const Loop& loop, const std::vector<cd>& poles, double clearance) {
    const auto& v = loop.vertices;
    if (v.size() < 2) throw DegenerateGeometry("loop needs at least two vertices");
    double scale = 1.0 + std::abs(loop.base);
    if (std::abs(v.front() - loop.base) > 1e-12 * scale || std::abs(v.back() - loop.base) > 1e-12 * scale)
        throw DegenerateGeometry("loop is not closed at its base");
    for (cd p : poles)
        for (size_t k = 0; k + 1 < v.size(); ++k)
            if (dist_point_segment(p, v[k], v[k + 1]) < clearance)
                throw DegenerateGeometry("loop passes within the clearance of a pole");
}

namespace {

// cross(u, w) = Im(conj(u) * w): positive when w lies to the left of u.
double cross2(cd u, cd w) { return (std::conj(u) * w).imag(); }

struct Head {
    cd entry;                 // point where the approach meets the square
    std::vector<cd> cycle;    // entry -> 4 corners CCW -> entry
};

Head square_head(cd s, double h, cd base) {
    cd d = s - base;
    double minf = std::max(std::abs(d.real()), std::abs(d.imag()));
    cd x = base + (1.0 - h / minf) * d;
    cd corners[4] = {s + cd(h, -h), s + cd(h, h), s + cd(-h, h), s + cd(-h, -h)};
    // edge e runs from corner e to corner e+1 (mod 4): right, top, left, bottom
    cd rel = x - s;
    int edge;
    double eps = 1e-9 * h;
    if (std::abs(rel.real() - h) < eps)
        edge = 0;
    else if (std::abs(rel.imag() - h) < eps)
        edge = 1;
    else if (std::abs(rel.real() + h) < eps)
        edge = 2;
    else
        edge = 3;
    Head out;
    out.entry = x;
    out.cycle.push_back(x);
    for (int k = 1; k <= 4; ++k) out.cycle.push_back(corners[(edge + k) % 4]);
    out.cycle.push_back(x);
    return out;
}

}  // namespace

std::vector<Loop> standard_loops(const std::vector<cd>& s, double base) {
    if (s.empty()) throw ContractViolation("standard_loops needs at least one pole");
    cd a(base, 0.0);
    double clearance = clearance_min(s, a);
    if (!(clearance > 0.0)) throw DegenerateGeometry("pole set and base are a single point");
    for (size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i] - a) < 4.0 * clearance)
            throw DegenerateGeometry("base point too close to a pole");
        for (size_t j = i + 1; j < s.size(); ++j)
            if (std::abs(s[i] - s[j]) < 4.0 * clearance)
                throw DegenerateGeometry("pole pair too close for loop construction");
    }

    // head half-width per pole, from its isolation distance
    std::vector<double> hw(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        double d = std::abs(s[k] - a);
        for (size_t j = 0; j < s.size(); ++j)
            if (j != k) d = std::min(d, std::abs(s[k] - s[j]));
        hw[k] = 0.35 * d;
    }

    std::vector<Loop> out;
    out.reserve(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        Head head = square_head(s[k], hw[k], a);
        cd x = head.entry;
        cd u = (x - a) / std::abs(x - a);

        // detours around poles sitting near the approach segment
        struct Obstacle {
            double t;
            size_t idx;
        };
        std::vector<Obstacle> obs;
        for (size_t p = 0; p < s.size(); ++p) {
            if (p == k) continue;
            if (dist_point_segment(s[p], a, x) < 0.8 * hw[p])
                obs.push_back({((s[p] - a) * std::conj(u)).real(), p});
        }
        std::sort(obs.begin(), obs.end(), [](const Obstacle& l, const Obstacle& r) { return l.t < r.t; });

        std::vector<cd> approach;
        approach.push_back(a);
        for (const Obstacle& o : obs) {
            cd p = s[o.idx];
            double g = 1.2 * hw[o.idx];
            double side = cross2(u, p - a);
            double sigma;
            if (std::abs(side) > 1e-12 * std::abs(p - a))
                sigma = side > 0.0 ? 1.0 : -1.0;
            else
                sigma = p.imag() > 0.0 ? 1.0 : (p.imag() < 0.0 ? -1.0 : 1.0);
            cd foot = a + std::clamp(o.t, 0.0, std::abs(x - a)) * u;
            cd nu = sigma * cd(0.0, 1.0) * u;
            approach.push_back(foot - g * u + g * nu);
            approach.push_back(foot + g * u + g * nu);
        }
        approach.push_back(x);

        Loop loop;
        loop.base = a;
        loop.vertices = approach;
        loop.vertices.insert(loop.vertices.end(), head.cycle.begin() + 1, head.cycle.end());
        for (size_t j = approach.size() - 1; j-- > 0;) loop.vertices.push_back(approach[j]);

        validate_loop(loop, s, clearance);
        if (winding_number(loop, s[k]) != 1)
            throw DegenerateGeometry("constructed loop fails to wind once around its pole");
        for (size_t j = 0; j < s.size(); ++j)
            if (j != k && winding_number(loop, s[j]) != 0)
                throw DegenerateGeometry("constructed loop winds around a foreign pole");
        out.push_back(std::move(loop));
    }
    return out;
}

Loop mirror_loop(const Loop& loop) {
    Loop out;
    out.base = std::conj(loop.base);
    out.vertices.reserve(loop.vertices.size());
    for (cd v : loop.vertices) out.vertices.push_back(std::conj(v));
    return out;
}

Loop concat_loops(const Loop& a, const Loop& b) {
    double scale = 1.0 + std::abs(a.base);
    if (std::abs(a.base - b.base) > 1e-12 * scale)
        throw ContractViolation("loop concatenation requires a common base");
    Loop out = a;
    out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    return out;
}

Loop refine_loop(const Loop& loop) {
    Loop out;
    out.base = loop.base;
    const auto& v = loop.vertices;
    for (size_t k = 0; k + 1 < v.size(); ++k) {
        out.vertices.push_back(v[k]);
        out.vertices.push_back(0.5 * (v[k] + v[k + 1]));
    }
    out.vertices.push_back(v.back());
    return out;
}

}  // namespace monodesc
