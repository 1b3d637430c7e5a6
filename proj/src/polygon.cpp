#include "atlas/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

YoungPolygon::YoungPolygon(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long p : parts_)
        if (p <= 0) throw error(errc::parse, "partition parts must be positive");
    std::sort(parts_.rbegin(), parts_.rend());
}

long YoungPolygon::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Rat YoungPolygon::eval(const Rat& x) const {
    check_internal(x >= 0 && x <= total(), "YoungPolygon::eval out of range");
    long cum = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (x <= cum + parts_[i]) return Rat(i) + (x - cum) / parts_[i];
        cum += parts_[i];
    }
    return Rat(static_cast<long>(parts_.size()));
}

std::string YoungPolygon::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

NewtonPolygon NewtonPolygon::of(const WittPoly& q) {
    if (!q.monic_exact() || q.degree() < 1)
        throw error(errc::parse, "newton_polygon: polynomial must be monic of degree >= 1");
    long d = q.degree();
    std::vector<std::pair<long, long>> pts;  // finite (x, nu)
    bool const_top = false;
    for (long i = 0; i <= d; ++i) {
        ExtVal v = q.R->valuation(q.coeff(d - i));
        if (v.is_top()) {
            if (i == d) const_top = true;
            continue;  // vanishing coefficients impose no hull constraint
        }
        pts.emplace_back(i, v.v);
    }
    // lower convex hull, strictly increasing slopes
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if slope(a,b) < slope(a,p)
            if ((b.second - a.second) * (p.first - a.first) <
                (p.second - a.second) * (b.first - a.first))
                break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    std::vector<std::pair<long, ExtVal>> verts;
    verts.reserve(hull.size() + 1);
    for (const auto& p : hull) verts.emplace_back(p.first, ExtVal::finite(p.second));
    if (const_top) verts.emplace_back(d, ExtVal::top_val());
    return from_vertices(std::move(verts));
}

NewtonPolygon NewtonPolygon::from_vertices(std::vector<std::pair<long, ExtVal>> vertices) {
    if (vertices.empty() || vertices.front().first != 0 || vertices.front().second != ExtVal::finite(0))
        throw error(errc::parse, "newton polygon must start at (0,0)");
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i].second.is_top())
            throw error(errc::parse, "TOP ordinate only allowed at the right endpoint");
        if (vertices[i].first >= vertices[i + 1].first)
            throw error(errc::parse, "newton polygon abscissae must increase");
    }
    // slopes strictly increase between consecutive finite segments
    for (size_t i = 0; i + 2 < vertices.size(); ++i) {
        if (vertices[i + 2].second.is_top()) continue;
        long x0 = vertices[i].first, x1 = vertices[i + 1].first, x2 = vertices[i + 2].first;
        long y0 = vertices[i].second.v, y1 = vertices[i + 1].second.v, y2 = vertices[i + 2].second.v;
        if ((y1 - y0) * (x2 - x1) >= (y2 - y1) * (x1 - x0))
            throw error(errc::parse, "newton polygon must be strictly lower convex");
    }
    NewtonPolygon np;
    np.v_ = std::move(vertices);
    return np;
}

std::optional<Rat> NewtonPolygon::eval(const Rat& x) const {
    check_internal(x >= 0 && x <= right_abscissa(), "NewtonPolygon::eval out of range");
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        const auto& [x0, y0] = v_[i];
        const auto& [x1, y1] = v_[i + 1];
        if (x > x1) continue;
        if (y1.is_top()) {
            if (x == x0) return Rat(y0.v);
            return std::nullopt;
        }
        return Rat(y0.v) + Rat(y1.v - y0.v) * (x - x0) / Rat(x1 - x0);
    }
    // single-vertex polygon cannot occur (degree >= 1)
    if (v_.size() == 1 && x == v_[0].first && !v_[0].second.is_top()) return Rat(v_[0].second.v);
    throw InternalError("NewtonPolygon::eval: no segment found");
}

NewtonPolygon NewtonPolygon::clamped() const {
    long d = right_abscissa();
    std::vector<std::pair<long, ExtVal>> out;
    out.push_back(v_.front());
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        const auto& [x0, y0] = v_[i];
        const auto& [x1, y1] = v_[i + 1];
        bool steep = y1.is_top() || (y1.v - y0.v) > (x1 - x0);
        if (steep) {
            if (x0 == d) return *this;  // nothing to the right
            // cut with slope exactly 1; merge with a final slope-1 segment
            if (out.size() >= 2) {
                const auto& [px, py] = out[out.size() - 2];
                if (y0.v - py.v == x0 - px) out.pop_back();
            }
            long base_x = out.back().first;
            long base_y = out.back().second.v;
            out.emplace_back(d, ExtVal::finite(base_y + (d - base_x)));
            return from_vertices(std::move(out));
        }
        out.emplace_back(x1, y1);
    }
    return from_vertices(std::move(out));
}

std::string NewtonPolygon::slope_label() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        const auto& [x0, y0] = v_[i];
        const auto& [x1, y1] = v_[i + 1];
        if (y1.is_top()) {
            if (!first) os << ",";
            os << "TOP";
            first = false;
            continue;
        }
        long dx = x1 - x0, dy = y1.v - y0.v;
        long g = dy == 0 ? dx : std::gcd(dx, dy);
        long px = dx / g, py = dy / g;
        for (long k = 0; k < g; ++k) {
            if (!first) os << ",";
            first = false;
            if (px == 1)
                os << py;
            else
                os << py << "/" << px;
        }
    }
    os << ")";
    return os.str();
}

bool dominates(const NewtonPolygon& np, const YoungPolygon& yp) {
    if (np.right_abscissa() != yp.total())
        throw DimensionMismatch("dominates: polygons end at different abscissae");
    for (long x = 0; x <= np.right_abscissa(); ++x) {
        auto nv = np.eval(Rat(x));
        if (!nv) continue;  // TOP dominates everything
        if (*nv < yp.eval(Rat(x))) return false;
    }
    return true;
}

namespace {

void partitions_rec(long d, long max_part, std::vector<long>& cur,
                    std::vector<YoungPolygon>& out) {
    if (d == 0) {
        out.emplace_back(cur);
        return;
    }
    for (long p = std::min(d, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(d - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<YoungPolygon> partitions_of(long d) {
    check_internal(d >= 0, "partitions_of: negative d");
    std::vector<YoungPolygon> out;
    std::vector<long> cur;
    partitions_rec(d, d, cur, out);
    return out;
}

std::vector<YoungPolygon> admissible_partitions(const NewtonPolygon& np, long d) {
    if (np.right_abscissa() != d)
        throw DimensionMismatch("admissible_partitions: polygon does not end at d");
    std::vector<YoungPolygon> out;
    for (auto& p : partitions_of(d))
        if (dominates(np, p)) out.push_back(std::move(p));
    return out;
}

}  // namespace atlas
