#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlas/witt.hpp"

namespace atlas {

// Partition m_1 >= ... >= m_r of positive integers, drawn as the convex
// polygon with vertices (m_1 + ... + m_i, i).  All slopes are 1/m_i <= 1.
class YoungPolygon {
public:
    YoungPolygon() = default;
    explicit YoungPolygon(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long total() const;                              // right abscissa
    long rows() const { return static_cast<long>(parts_.size()); }
    Rat eval(const Rat& x) const;
    std::string str() const;  // "(2,1,1)"

    friend bool operator==(const YoungPolygon& a, const YoungPolygon& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const YoungPolygon& a, const YoungPolygon& b) { return !(a == b); }
    // lexicographic on the part lists
    friend bool operator<(const YoungPolygon& a, const YoungPolygon& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<long> parts_;
};

// Lower convex hull of (i, nu(Q_i)) for Q = sum Q_i t^(d-i).  Vertices have
// strictly increasing slopes; a final (d, TOP) vertex records a constant
// term that vanishes at working precision.
class NewtonPolygon {
public:
    NewtonPolygon() = default;

    // Q must be exactly monic of degree >= 1.
    static NewtonPolygon of(const WittPoly& q);
    static NewtonPolygon from_vertices(std::vector<std::pair<long, ExtVal>> vertices);

    const std::vector<std::pair<long, ExtVal>>& vertices() const { return v_; }
    long right_abscissa() const { return v_.back().first; }
    bool has_top() const { return v_.back().second.is_top(); }

    // value at x in [0, d]; nullopt encodes TOP
    std::optional<Rat> eval(const Rat& x) const;

    // slopes greater than 1 (including the TOP segment) replaced by slope
    // exactly 1 from the last vertex where the slope is still <= 1
    NewtonPolygon clamped() const;

    // "(1/3,1)" style label: each segment repeated gcd(dx,dy) times
    std::string slope_label() const;

    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.v_ == b.v_;
    }

private:
    std::vector<std::pair<long, ExtVal>> v_;
};

// NP(x) >= YP(x) on [0, d]; checked at the integer abscissae, which is
// sufficient since both polygons have integer-x vertices.
bool dominates(const NewtonPolygon& np, const YoungPolygon& yp);

// all partitions of d, in decreasing lexicographic order
std::vector<YoungPolygon> partitions_of(long d);

// the partitions of d whose Young polygon the given polygon dominates
std::vector<YoungPolygon> admissible_partitions(const NewtonPolygon& np, long d);

}  // namespace atlas
