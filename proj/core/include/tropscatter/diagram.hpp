#pragma once

#include "tropscatter/fan.hpp"
#include "tropscatter/series.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace tropscatter {

/// Wall of the scattering diagram. The support is the ray R>=0 * dir from
/// the origin (developed coordinates), or the full line through the origin
/// for incoming walls. The function is 1 + sum c t^A z^{-j dir}, j >= 1.
struct Wall {
    Vec2 dir;  // primitive
    bool incoming{false};
    TruncatedSeries function;

    Wall(Vec2 d, bool inc, TruncatedSeries f);

    /// Primitive normal, positive on the side counterclockwise of dir.
    Vec2 normal() const { return rot90(dir); }

    void validate() const;
};

/// z^m picked up across a wall: t^A z^m * f^(sign * <n, m>), truncated.
TruncatedSeries cross_wall(const Wall& w, const Monomial& mono, int crossing_sign);

/// Scattering diagram on the fan of a seed. Walls are kept sorted by
/// (incoming first, then angular order of dir); walls with equal direction
/// and incoming flag are merged by multiplying functions.
class ScatteringDiagram {
public:
    ScatteringDiagram(Fan fan, int order);

    const Fan& fan() const { return fan_; }
    int order() const { return order_; }
    std::size_t curve_rank() const { return fan_.curve_rank(); }
    const std::vector<Wall>& walls() const { return walls_; }

    /// Multiplies the function into an existing wall with the same
    /// (dir, incoming) or inserts a new wall, keeping canonical order.
    void add_wall(Wall w);

    bool operator==(const ScatteringDiagram&) const = default;

private:
    Fan fan_;
    int order_;
    std::vector<Wall> walls_;
};

/// Transform of t^A z^m carried once counterclockwise around the origin
/// from the interior of the given start chamber: every wall crossing and
/// every ray transition is applied, the first crossing acting outermost.
TruncatedSeries path_ordered_product(const ScatteringDiagram& diagram, std::size_t start_chamber,
                                     const Monomial& mono);

/// Order-by-order insertion of outgoing walls until the cyclic path-ordered
/// product fixes every monomial modulo curve degree > order. Deterministic
/// and idempotent. Requires trivial monodromy and initial walls = 1 mod I.
ScatteringDiagram complete_to_consistency(const ScatteringDiagram& initial);

/// Table of wall coefficients: (ray direction, contact multiple j, curve
/// class) -> k_tau W_tau, read off as the log of the wall functions.
class CoefficientTable {
public:
    struct Key {
        Vec2 dir;  // primitive ray direction
        std::int64_t j{1};
        CurveClass curve;

        bool operator==(const Key&) const = default;
        bool operator<(const Key& o) const
        {
            if (!(dir == o.dir)) return dir < o.dir;
            if (j != o.j) return j < o.j;
            return curve < o.curve;
        }
    };

    void add(const Key& k, const Rational& v);
    const std::map<Key, Rational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Entries with the given primitive direction.
    CoefficientTable restricted_to(const Vec2& dir) const;
    /// All primitive directions present, in canonical order.
    std::vector<Vec2> directions() const;

    bool operator==(const CoefficientTable&) const = default;

private:
    std::map<Key, Rational> entries_;
};

/// log of every wall function, merged per direction: the term c t^A
/// z^{-j dir} of log f contributes (dir, j, A) -> c.
CoefficientTable extract_coefficients(const ScatteringDiagram& diagram);

}  // namespace tropscatter
