#pragma once

#include "tropscatter/vec.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tropscatter {

/// Effective curve class, an element of Q = N^r graded by coordinate sum.
struct CurveClass {
    std::vector<std::int64_t> mult;

    CurveClass() = default;
    explicit CurveClass(std::vector<std::int64_t> m);
    static CurveClass zero(std::size_t rank) { return CurveClass(std::vector<std::int64_t>(rank, 0)); }
    static CurveClass unit(std::size_t rank, std::size_t i);

    std::size_t rank() const { return mult.size(); }
    std::int64_t degree() const;
    bool is_zero() const { return degree() == 0; }

    CurveClass operator+(const CurveClass& o) const;
    CurveClass operator*(std::int64_t k) const;
    bool operator==(const CurveClass&) const = default;
    bool operator<(const CurveClass& o) const;
};

std::string to_string(const CurveClass& a);

/// Monomial t^A z^m of the ring Z[Q + M]; total order = degree of A.
struct Monomial {
    CurveClass curve;
    Vec2 dir;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const
    {
        if (curve == o.curve) return dir < o.dir;
        return curve < o.curve;
    }
    bool is_identity() const { return curve.is_zero() && dir.is_zero(); }
};

std::string to_string(const Monomial& m);

/// Element of the completion of Z[Q + M] at the ideal I = (t^A, A != 0),
/// with rational coefficients, truncated at a fixed curve-class order.
/// Terms are kept in a sorted map with no zero coefficients, so structural
/// equality is ring equality.
class TruncatedSeries {
public:
    TruncatedSeries(int order, std::size_t curve_rank);

    static TruncatedSeries zero(int order, std::size_t curve_rank)
    {
        return TruncatedSeries(order, curve_rank);
    }
    static TruncatedSeries one(int order, std::size_t curve_rank);
    static TruncatedSeries monomial(int order, const Monomial& m, const Rational& c = Rational(1));

    int order() const { return order_; }
    std::size_t curve_rank() const { return rank_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    bool is_one() const;

    /// True when every term has curve degree >= 1, i.e. the series lies in I.
    bool in_ideal() const;

    TruncatedSeries without_constant_term() const;

    void add_term(const Monomial& m, const Rational& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;

    bool operator==(const TruncatedSeries&) const = default;

    /// Applies an integral substitution z^m -> z^(T m) to every term.
    TruncatedSeries substitute_direction(const Mat2& t) const;

    std::string str() const;

private:
    int order_;
    std::size_t rank_;
    std::map<Monomial, Rational> terms_;
};

/// Product in the truncated ring; both factors must share the truncation
/// order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// sum_j f^j / j!; requires f in I.
TruncatedSeries exp_series(const TruncatedSeries& f);

/// sum_j (-1)^{j+1} (f-1)^j / j; requires f = 1 mod I.
TruncatedSeries log_series(const TruncatedSeries& f);

/// f^e for integer e; negative exponents invert via the geometric series and
/// require f = 1 mod I.
TruncatedSeries pow(const TruncatedSeries& f, std::int64_t e);

/// Same series re-truncated at order j <= current order.
TruncatedSeries truncate(const TruncatedSeries& f, int j);

}  // namespace tropscatter
