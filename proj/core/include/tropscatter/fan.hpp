#pragma once

#include "tropscatter/vec.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tropscatter {

/// Strictly convex rational cone in the plane: the origin, a ray, or a
/// 2-dimensional cone spanned by two positively oriented primitive vectors.
struct Cone {
    int dim{0};
    Vec2 g1{};  // dim >= 1
    Vec2 g2{};  // dim == 2

    static Cone origin() { return {}; }
    static Cone ray(const Vec2& g);
    static Cone span(const Vec2& a, const Vec2& b);

    bool operator==(const Cone&) const = default;

    bool contains(const QVec2& p) const;
    bool contains(const Vec2& p) const { return contains(to_q(p)); }
    bool contains_in_relative_interior(const QVec2& p) const;
};

/// Looijenga-pair seed: a cyclic list of boundary rays with their
/// self-intersection numbers, plus the rank of the curve-class monoid.
struct Seed {
    std::vector<Vec2> rays;     // primitive, cyclically ordered, n >= 3
    std::vector<Int> kinks;     // self-intersections D_i^2
    std::size_t curve_rank{0};  // Q = N^curve_rank
    int order{1};               // default truncation order

    void validate() const;
    bool operator==(const Seed&) const = default;
};

/// Fan of the skeleton with chart data. Chamber i sits between rays[i] and
/// rays[i+1]; each ray carries the transition matrix of the integral-affine
/// structure. Crossing ray i counterclockwise re-expresses tangent vectors
/// by ccw_cross[i]; crossing clockwise by its inverse.
class Fan {
public:
    static Fan from_seed(const Seed& seed);

    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<Vec2>& rays() const { return rays_; }
    const Vec2& ray(std::size_t i) const { return rays_[i]; }
    const Int& self_intersection(std::size_t i) const { return self_int_[i]; }
    const Mat2& ccw_crossing(std::size_t i) const { return ccw_cross_[i]; }
    std::size_t curve_rank() const { return curve_rank_; }
    int default_order() const { return default_order_; }

    std::size_t next_ray(std::size_t i) const { return (i + 1) % rays_.size(); }
    std::size_t prev_ray(std::size_t i) const { return (i + rays_.size() - 1) % rays_.size(); }

    /// Chamber i = Cone(ray i, ray i+1).
    Cone chamber(std::size_t i) const { return Cone::span(rays_[i], rays_[(i + 1) % rays_.size()]); }

    /// Index of the ray a primitive direction sits on, if any.
    std::optional<std::size_t> ray_index(const Vec2& dir) const;

    /// Chamber whose closure contains p; for p on ray i returns i (the
    /// chamber counterclockwise of the ray). p must be nonzero.
    std::size_t chamber_containing(const QVec2& p) const;
    std::size_t chamber_containing(const Vec2& p) const { return chamber_containing(to_q(p)); }

    /// Counterclockwise monodromy around the origin, starting and ending in
    /// chamber 0. Identity exactly for toric seeds.
    Mat2 monodromy() const;
    bool has_trivial_monodromy() const { return monodromy().is_identity(); }

    /// True when the seed relation d_{i-1} + d_{i+1} = -(D_i^2) d_i holds on
    /// the nose, i.e. all crossing matrices are the identity.
    bool is_toric() const;

    /// True when every ray of `other` is a ray here and all shared data
    /// agrees (this fan refines `other`).
    bool refines(const Fan& other) const;

    bool operator==(const Fan&) const = default;

    friend Fan star_subdivide(const Fan& fan, const Vec2& new_ray);

private:
    std::vector<Vec2> rays_;
    std::vector<Int> self_int_;
    std::vector<Mat2> ccw_cross_;
    std::size_t curve_rank_{0};
    int default_order_{1};
};

/// v expressed in the chart reached after crossing the listed rays. With
/// ccw = true the rays must be consecutive counterclockwise (ray, next,
/// ...); each crossing applies that ray's transition. ccw = false walks the
/// path clockwise with inverse transitions.
Vec2 parallel_transport(const Vec2& v, const std::vector<std::size_t>& crossed_rays, const Fan& fan,
                        bool ccw = true);

/// Insert a primitive ray in the interior of a maximal cone. The new ray
/// carries the identity transition (the affine structure is unchanged) and
/// records self-intersection -1 for the exceptional divisor.
Fan star_subdivide(const Fan& fan, const Vec2& new_ray);

/// Strict angular order of nonzero lattice directions, counterclockwise
/// starting just above the positive x-axis. Ties = equal direction.
int angular_compare(const Vec2& a, const Vec2& b);

}  // namespace tropscatter
