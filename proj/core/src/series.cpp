#include "tropscatter/series.hpp"

#include <sstream>

namespace tropscatter {

CurveClass::CurveClass(std::vector<std::int64_t> m) : mult(std::move(m))
{
    for (auto v : mult)
        if (v < 0) throw Error("curve class multiplicities must be nonnegative");
}

CurveClass CurveClass::unit(std::size_t rank, std::size_t i)
{
    std::vector<std::int64_t> m(rank, 0);
    m.at(i) = 1;
    return CurveClass(std::move(m));
}

std::int64_t CurveClass::degree() const
{
    std::int64_t d = 0;
    for (auto v : mult) d += v;
    return d;
}

CurveClass CurveClass::operator+(const CurveClass& o) const
{
    if (rank() != o.rank()) throw Error("curve class rank mismatch");
    CurveClass r = *this;
    for (std::size_t i = 0; i < mult.size(); ++i) r.mult[i] += o.mult[i];
    return r;
}

CurveClass CurveClass::operator*(std::int64_t k) const
{
    if (k < 0) throw Error("curve class scaled by negative integer");
    CurveClass r = *this;
    for (auto& v : r.mult) v *= k;
    return r;
}

bool CurveClass::operator<(const CurveClass& o) const
{
    if (rank() != o.rank()) throw Error("curve class rank mismatch");
    // graded lexicographic, so low-degree terms sort first
    if (degree() != o.degree()) return degree() < o.degree();
    return mult < o.mult;
}

std::string to_string(const CurveClass& a)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.mult.size(); ++i) {
        if (i) os << ",";
        os << a.mult[i];
    }
    os << "]";
    return os.str();
}

std::string to_string(const Monomial& m)
{
    return "t^" + to_string(m.curve) + " z^" + to_string(m.dir);
}

TruncatedSeries::TruncatedSeries(int order, std::size_t curve_rank) : order_(order), rank_(curve_rank)
{
    if (order < 0) throw Error("series order must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(int order, std::size_t curve_rank)
{
    TruncatedSeries s(order, curve_rank);
    s.add_term({CurveClass::zero(curve_rank), Vec2{0, 0}}, Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, const Monomial& m, const Rational& c)
{
    TruncatedSeries s(order, m.curve.rank());
    s.add_term(m, c);
    return s;
}

Rational TruncatedSeries::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const
{
    return coefficient({CurveClass::zero(rank_), Vec2{0, 0}});
}

bool TruncatedSeries::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.is_identity() &&
           terms_.begin()->second == 1;
}

bool TruncatedSeries::in_ideal() const
{
    for (const auto& [m, c] : terms_)
        if (m.curve.degree() < 1) return false;
    return true;
}

TruncatedSeries TruncatedSeries::without_constant_term() const
{
    TruncatedSeries r = *this;
    r.terms_.erase(Monomial{CurveClass::zero(rank_), Vec2{0, 0}});
    return r;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c)
{
    if (m.curve.rank() != rank_) throw Error("monomial curve rank does not match the series");
    if (c == 0) return;
    if (m.curve.degree() > order_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    if (order_ != o.order_ || rank_ != o.rank_) throw Error("series order/rank mismatch");
    TruncatedSeries r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    if (order_ != o.order_ || rank_ != o.rank_) throw Error("series order/rank mismatch");
    TruncatedSeries r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const
{
    TruncatedSeries r(order_, rank_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::substitute_direction(const Mat2& t) const
{
    TruncatedSeries r(order_, rank_);
    for (const auto& [m, c] : terms_) r.add_term({m.curve, t.apply(m.dir)}, c);
    return r;
}

std::string TruncatedSeries::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << to_string(m);
    }
    return os.str();
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order() || a.curve_rank() != b.curve_rank())
        throw Error("series order/rank mismatch");
    TruncatedSeries r(a.order(), a.curve_rank());
    for (const auto& [ma, ca] : a.terms()) {
        std::int64_t budget = a.order() - ma.curve.degree();
        for (const auto& [mb, cb] : b.terms()) {
            if (mb.curve.degree() > budget) break;  // terms sorted by degree first
            r.add_term({ma.curve + mb.curve, ma.dir + mb.dir}, ca * cb);
        }
    }
    return r;
}

TruncatedSeries exp_series(const TruncatedSeries& f)
{
    if (!f.in_ideal()) throw Error("exp_series: argument not in the maximal ideal");
    TruncatedSeries acc = TruncatedSeries::one(f.order(), f.curve_rank());
    TruncatedSeries power = acc;
    Rational factorial(1);
    for (int j = 1; j <= f.order(); ++j) {
        power = mul(power, f);
        if (power.is_zero()) break;
        factorial *= j;
        acc = acc + power * (Rational(1) / factorial);
    }
    return acc;
}

TruncatedSeries log_series(const TruncatedSeries& f)
{
    if (f.constant_term() != 1) throw Error("log_series: constant term is not 1");
    TruncatedSeries g = f.without_constant_term();
    if (!g.in_ideal()) throw Error("log_series: argument is not 1 mod the maximal ideal");
    TruncatedSeries acc(f.order(), f.curve_rank());
    TruncatedSeries power = g;
    for (int j = 1; j <= f.order(); ++j) {
        if (power.is_zero()) break;
        Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
        acc = acc + power * (sign / j);
        power = mul(power, g);
    }
    return acc;
}

TruncatedSeries pow(const TruncatedSeries& f, std::int64_t e)
{
    if (e == 0) return TruncatedSeries::one(f.order(), f.curve_rank());

    TruncatedSeries base = f;
    if (e < 0) {
        if (f.constant_term() != 1) throw Error("pow: negative exponent needs constant term 1");
        TruncatedSeries g = f.without_constant_term();
        if (!g.in_ideal()) throw Error("pow: negative exponent needs f = 1 mod the maximal ideal");
        // geometric series for (1 + g)^{-1}
        TruncatedSeries inv = TruncatedSeries::one(f.order(), f.curve_rank());
        TruncatedSeries power = inv;
        for (int j = 1; j <= f.order(); ++j) {
            power = mul(power, g);
            if (power.is_zero()) break;
            inv = (j % 2 == 1) ? inv - power : inv + power;
        }
        base = inv;
        e = -e;
    }

    TruncatedSeries acc = TruncatedSeries::one(f.order(), f.curve_rank());
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

TruncatedSeries truncate(const TruncatedSeries& f, int j)
{
    if (j > f.order()) throw Error("truncate: cannot raise the order");
    TruncatedSeries r(j, f.curve_rank());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c);
    return r;
}

}  // namespace tropscatter
