#include "tropscatter/fan.hpp"

#include <algorithm>

namespace tropscatter {

Cone Cone::ray(const Vec2& g)
{
    if (g.is_zero()) throw Error("Cone::ray: zero generator");
    Cone c;
    c.dim = 1;
    c.g1 = primitive_part(g);
    return c;
}

Cone Cone::span(const Vec2& a, const Vec2& b)
{
    if (cross(a, b) <= 0) throw Error("Cone::span: generators not positively oriented");
    Cone c;
    c.dim = 2;
    c.g1 = primitive_part(a);
    c.g2 = primitive_part(b);
    return c;
}

bool Cone::contains(const QVec2& p) const
{
    switch (dim) {
        case 0: return p.is_zero();
        case 1: return cross(g1, p) == 0 && dot(g1, p) >= 0;
        default: return cross(g1, p) >= 0 && cross(p, g2) >= 0;
    }
}

bool Cone::contains_in_relative_interior(const QVec2& p) const
{
    switch (dim) {
        case 0: return p.is_zero();
        case 1: return cross(g1, p) == 0 && dot(g1, p) > 0;
        default: return cross(g1, p) > 0 && cross(p, g2) > 0;
    }
}

namespace {

// Directions ordered counterclockwise starting just above the +x axis:
// sector 0 is {y > 0} together with the positive x-axis, sector 1 the rest.
int sector(const Vec2& v)
{
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
    return 1;
}

}  // namespace

int angular_compare(const Vec2& a, const Vec2& b)
{
    if (a.is_zero() || b.is_zero()) throw Error("angular_compare: zero direction");
    int sa = sector(a), sb = sector(b);
    if (sa != sb) return sa < sb ? -1 : 1;
    Int c = cross(a, b);
    if (c > 0) return -1;
    if (c < 0) return 1;
    return 0;
}

void Seed::validate() const
{
    const std::size_t n = rays.size();
    if (n < 3) throw Error("seed needs at least 3 rays");
    if (kinks.size() != n) throw Error("seed needs one kink per ray");
    for (const auto& r : rays) {
        if (r.is_zero() || !is_primitive(r)) throw Error("seed rays must be primitive");
    }
    Int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = rays[i];
        const Vec2& b = rays[(i + 1) % n];
        if (cross(a, b) != 1)
            throw Error("consecutive seed rays must be a positively oriented lattice basis");
        // count how many cones [d_i, d_{i+1}) contain the direction (1,0)
        Cone c = Cone::span(a, b);
        if (c.contains(Vec2{1, 0}) && !(b == Vec2{1, 0})) winding += 1;
    }
    if (winding != 1) throw Error("seed rays must wrap around the origin exactly once");
}

Fan Fan::from_seed(const Seed& seed)
{
    seed.validate();
    Fan f;
    f.rays_ = seed.rays;
    f.self_int_ = seed.kinks;
    f.curve_rank_ = seed.curve_rank;
    f.default_order_ = seed.order;

    const std::size_t n = seed.rays.size();
    f.ccw_cross_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // T_i fixes d_i and sends d_{i+1} to -d_{i-1} - (D_i^2) d_i, the
        // developed image of the next ray in the chart across ray i.
        const Vec2& prev = seed.rays[(i + n - 1) % n];
        const Vec2& cur = seed.rays[i];
        const Vec2& next = seed.rays[(i + 1) % n];
        Vec2 image = -prev - cur * seed.kinks[i];
        Mat2 t = linear_map_from_images(cur, next, cur, image);
        // crossing counterclockwise goes from chart i-1 to chart i
        f.ccw_cross_[i] = t.inverse();
    }
    return f;
}

std::optional<std::size_t> Fan::ray_index(const Vec2& dir) const
{
    if (dir.is_zero()) return std::nullopt;
    Vec2 p = primitive_part(dir);
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == p) return i;
    return std::nullopt;
}

std::size_t Fan::chamber_containing(const QVec2& p) const
{
    if (p.is_zero()) throw Error("chamber_containing: zero point");
    const std::size_t n = rays_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(rays_[i], p) >= 0 && cross(p, rays_[(i + 1) % n]) > 0) return i;
    }
    throw Error("chamber_containing: point not covered by the fan");
}

Mat2 Fan::monodromy() const
{
    Mat2 m = Mat2::identity();
    const std::size_t n = rays_.size();
    // start in chamber 0, cross rays 1, 2, ..., n-1, 0
    for (std::size_t s = 1; s <= n; ++s) {
        m = ccw_cross_[s % n] * m;
    }
    return m;
}

bool Fan::is_toric() const
{
    return std::all_of(ccw_cross_.begin(), ccw_cross_.end(),
                       [](const Mat2& m) { return m.is_identity(); });
}

bool Fan::refines(const Fan& other) const
{
    if (curve_rank_ != other.curve_rank_) return false;
    for (std::size_t i = 0; i < other.num_rays(); ++i) {
        auto idx = ray_index(other.ray(i));
        if (!idx) return false;
        if (ccw_cross_[*idx] != other.ccw_crossing(i)) return false;
    }
    return true;
}

Vec2 parallel_transport(const Vec2& v, const std::vector<std::size_t>& crossed_rays, const Fan& fan,
                        bool ccw)
{
    Vec2 cur = v;
    for (std::size_t k = 0; k < crossed_rays.size(); ++k) {
        std::size_t r = crossed_rays[k];
        if (r >= fan.num_rays()) throw Error("parallel_transport: ray index out of range");
        if (k > 0) {
            std::size_t expect = ccw ? fan.next_ray(crossed_rays[k - 1]) : fan.prev_ray(crossed_rays[k - 1]);
            if (r != expect) throw Error("parallel_transport: path is not contiguous");
        }
        cur = ccw ? fan.ccw_crossing(r).apply(cur) : fan.ccw_crossing(r).inverse().apply(cur);
    }
    return cur;
}

Fan star_subdivide(const Fan& fan, const Vec2& new_ray)
{
    if (new_ray.is_zero()) throw Error("star_subdivide: zero ray");
    Vec2 p = primitive_part(new_ray);
    if (fan.ray_index(p)) throw Error("star_subdivide: ray already in the fan");

    const std::size_t n = fan.num_rays();
    std::size_t host = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (fan.chamber(i).contains_in_relative_interior(to_q(p))) {
            host = i;
            break;
        }
    }
    if (host == n) throw Error("star_subdivide: ray not interior to a maximal cone");

    Fan out = fan;
    out.rays_.insert(out.rays_.begin() + host + 1, p);
    out.self_int_.insert(out.self_int_.begin() + host + 1, Int(-1));
    out.ccw_cross_.insert(out.ccw_cross_.begin() + host + 1, Mat2::identity());
    return out;
}

}  // namespace tropscatter
