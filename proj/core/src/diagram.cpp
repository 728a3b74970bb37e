#include "tropscatter/diagram.hpp"

#include <algorithm>

namespace tropscatter {

Wall::Wall(Vec2 d, bool inc, TruncatedSeries f) : dir(std::move(d)), incoming(inc), function(std::move(f))
{
    validate();
}

void Wall::validate() const
{
    if (dir.is_zero() || !is_primitive(dir)) throw Error("wall direction must be primitive");
    if (function.constant_term() != 1) throw Error("wall function must have constant term 1");
    for (const auto& [m, c] : function.terms()) {
        if (m.is_identity()) continue;
        if (m.curve.degree() < 1) throw Error("wall function term with zero curve class");
        // z-exponent must be a negative multiple of dir
        if (cross(m.dir, dir) != 0 || !(dot(m.dir, dir) < 0))
            throw Error("wall function exponent is not a negative multiple of the direction");
    }
}

TruncatedSeries cross_wall(const Wall& w, const Monomial& mono, int crossing_sign)
{
    if (crossing_sign != 1 && crossing_sign != -1) throw Error("cross_wall: sign must be +-1");
    Int e = dot(rot90(w.dir), mono.dir) * crossing_sign;
    TruncatedSeries factor = pow(w.function, static_cast<std::int64_t>(e));
    return mul(TruncatedSeries::monomial(w.function.order(), mono), factor);
}

ScatteringDiagram::ScatteringDiagram(Fan fan, int order) : fan_(std::move(fan)), order_(order)
{
    if (order < 1) throw Error("diagram order must be >= 1");
}

void ScatteringDiagram::add_wall(Wall w)
{
    if (w.function.order() != order_ || w.function.curve_rank() != curve_rank())
        throw Error("wall function order/rank does not match the diagram");
    if (w.function.is_one()) return;
    for (auto& existing : walls_) {
        if (existing.dir == w.dir && existing.incoming == w.incoming) {
            existing.function = mul(existing.function, w.function);
            if (existing.function.is_one()) {
                walls_.erase(walls_.begin() + (&existing - walls_.data()));
            }
            return;
        }
    }
    walls_.push_back(std::move(w));
    std::sort(walls_.begin(), walls_.end(), [](const Wall& a, const Wall& b) {
        if (a.incoming != b.incoming) return a.incoming;
        return angular_compare(a.dir, b.dir) < 0;
    });
}

namespace {

/// One multiplicative step of the cyclic loop: either a wall crossed at a
/// given half-ray, or a chart transition at a fan ray.
struct LoopEvent {
    Vec2 locus;  // direction of the crossed half-ray, developed coordinates
    const Wall* wall{nullptr};
    Mat2 transition{};  // used when wall == nullptr
};

/// Crossing events in counterclockwise order, starting from the interior of
/// start_chamber (so the chamber's ccw boundary ray comes first and its cw
/// boundary ray comes last).
std::vector<LoopEvent> loop_events(const ScatteringDiagram& diagram, std::size_t start_chamber)
{
    const Fan& fan = diagram.fan();
    if (start_chamber >= fan.num_rays()) throw Error("start chamber out of range");

    std::vector<LoopEvent> events;
    for (std::size_t step = 1; step <= fan.num_rays(); ++step) {
        std::size_t ray = (start_chamber + step) % fan.num_rays();
        // walls supported on this ray come before its chart transition
        for (const Wall& w : diagram.walls()) {
            if (w.dir == fan.ray(ray))
                events.push_back({fan.ray(ray), &w, Mat2::identity()});
            else if (w.incoming && -w.dir == fan.ray(ray))
                events.push_back({fan.ray(ray), &w, Mat2::identity()});
        }
        events.push_back({fan.ray(ray), nullptr, fan.ccw_crossing(ray)});
        // then walls strictly inside the next chamber, in angular order
        std::size_t chamber = ray;
        std::vector<const Wall*> inside;
        for (const Wall& w : diagram.walls()) {
            auto in_chamber = [&](const Vec2& d) {
                return fan.chamber(chamber).contains_in_relative_interior(to_q(d)) &&
                       !(d == fan.ray(chamber));
            };
            if (in_chamber(w.dir)) inside.push_back(&w);
            if (w.incoming && in_chamber(-w.dir)) inside.push_back(&w);
        }
        std::sort(inside.begin(), inside.end(), [&](const Wall* a, const Wall* b) {
            Vec2 da = fan.chamber(chamber).contains_in_relative_interior(to_q(a->dir)) ? a->dir : -a->dir;
            Vec2 db = fan.chamber(chamber).contains_in_relative_interior(to_q(b->dir)) ? b->dir : -b->dir;
            int c = angular_compare(da, db);
            if (c != 0) return c < 0;
            return a < b;
        });
        for (const Wall* w : inside) {
            Vec2 half = fan.chamber(chamber).contains_in_relative_interior(to_q(w->dir)) ? w->dir : -w->dir;
            events.push_back({half, w, Mat2::identity()});
        }
    }
    return events;
}

}  // namespace

TruncatedSeries path_ordered_product(const ScatteringDiagram& diagram, std::size_t start_chamber,
                                     const Monomial& mono)
{
    if (mono.curve.degree() > diagram.order()) throw Error("monomial exceeds the truncation order");

    auto events = loop_events(diagram, start_chamber);

    // The first crossing acts outermost: fold the loop from its far end.
    TruncatedSeries acc = TruncatedSeries::monomial(diagram.order(), mono);
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
        if (it->wall == nullptr) {
            acc = acc.substitute_direction(it->transition);
            continue;
        }
        // crossing counterclockwise over the half-ray `locus`: exponent
        // <rot90(locus), m> on each monomial z^m
        Vec2 n = rot90(it->locus);
        TruncatedSeries next(diagram.order(), diagram.curve_rank());
        for (const auto& [m, c] : acc.terms()) {
            Int e = dot(n, m.dir);
            TruncatedSeries crossed =
                mul(TruncatedSeries::monomial(diagram.order(), m, c),
                    pow(it->wall->function, static_cast<std::int64_t>(e)));
            next = next + crossed;
        }
        acc = next;
    }
    return acc;
}

namespace {

/// Defect of the loop on z^m at exactly the given curve degree:
/// terms of path_ordered_product(z^m) * z^{-m} - 1 with deg A = degree.
std::vector<std::pair<Monomial, Rational>> loop_defect(const ScatteringDiagram& diagram,
                                                       const Vec2& m, int degree)
{
    Monomial mono{CurveClass::zero(diagram.curve_rank()), m};
    TruncatedSeries out = path_ordered_product(diagram, 0, mono);
    std::vector<std::pair<Monomial, Rational>> defect;
    for (const auto& [term, c] : out.terms()) {
        if (term.curve.degree() != degree) continue;
        Monomial shifted{term.curve, term.dir - m};
        if (degree == 0) {
            if (shifted.is_identity() && c == 1) continue;
            throw Error("path-ordered product has a defect at curve degree 0");
        }
        defect.push_back({shifted, c});
    }
    return defect;
}

}  // namespace

ScatteringDiagram complete_to_consistency(const ScatteringDiagram& initial)
{
    const Fan& fan = initial.fan();
    if (!fan.has_trivial_monodromy())
        throw Error("complete_to_consistency requires trivial monodromy (toric presentation)");
    for (const Wall& w : initial.walls()) {
        if (!w.incoming) continue;
        if (!w.function.without_constant_term().in_ideal())
            throw Error("initial wall function is not 1 mod the maximal ideal");
    }

    ScatteringDiagram diagram = initial;
    const Vec2 e1{1, 0}, e2{0, 1};

    for (int degree = 1; degree <= diagram.order(); ++degree) {
        // Reconstruct the order-`degree` derivation from the defect on the
        // two basis monomials: a defect term c t^A z^w on z^m comes from a
        // wall along -w with pairing <rot90(prim(-w)), m>.
        auto d1 = loop_defect(diagram, e1, degree);
        auto d2 = loop_defect(diagram, e2, degree);

        std::map<Monomial, Rational> fixes;  // exponent monomial -> function coefficient
        auto record = [&](const Monomial& term, const Rational& c, const Vec2& basis) {
            if (term.dir.is_zero())
                throw Error("central defect term cannot be cancelled by a wall");
            Vec2 ray = primitive_part(-term.dir);
            Int pairing = dot(rot90(ray), basis);
            if (pairing == 0) return;  // invisible on this basis vector; the other sees it
            Rational coeff = -c / Rational(pairing);
            auto [it, inserted] = fixes.emplace(term, coeff);
            if (!inserted && it->second != coeff)
                throw Error("inconsistent defect reconstruction between basis monomials");
        };
        for (const auto& [term, c] : d1) record(term, c, e1);
        for (const auto& [term, c] : d2) record(term, c, e2);
        if (fixes.empty()) continue;

        for (const auto& [term, coeff] : fixes) {
            Vec2 ray = primitive_part(-term.dir);
            TruncatedSeries gen(diagram.order(), diagram.curve_rank());
            gen.add_term(term, coeff);
            diagram.add_wall(Wall(ray, false, exp_series(gen)));
        }

        // The fix at each order is unique; anything left is a bug.
        if (!loop_defect(diagram, e1, degree).empty() || !loop_defect(diagram, e2, degree).empty())
            throw Error("consistency defect not cancelled at order " + std::to_string(degree));
    }
    return diagram;
}

void CoefficientTable::add(const Key& k, const Rational& v)
{
    if (v == 0) return;
    if (k.j < 1) throw Error("coefficient table contact multiple must be >= 1");
    if (k.curve.degree() < 1) throw Error("coefficient table entry with zero curve class");
    if (!is_primitive(k.dir)) throw Error("coefficient table direction must be primitive");
    auto [it, inserted] = entries_.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

CoefficientTable CoefficientTable::restricted_to(const Vec2& dir) const
{
    CoefficientTable t;
    for (const auto& [k, v] : entries_)
        if (k.dir == dir) t.add(k, v);
    return t;
}

std::vector<Vec2> CoefficientTable::directions() const
{
    std::vector<Vec2> dirs;
    for (const auto& [k, v] : entries_)
        if (dirs.empty() || !(dirs.back() == k.dir)) dirs.push_back(k.dir);
    return dirs;
}

CoefficientTable extract_coefficients(const ScatteringDiagram& diagram)
{
    CoefficientTable table;
    for (const Wall& w : diagram.walls()) {
        TruncatedSeries lg = log_series(w.function);
        for (const auto& [m, c] : lg.terms()) {
            // m.dir = -j * w.dir with j >= 1, by the wall invariant
            Int j = -dot(m.dir, w.dir) / dot(w.dir, w.dir);
            table.add({w.dir, static_cast<std::int64_t>(j), m.curve}, c);
        }
    }
    return table;
}

}  // namespace tropscatter
