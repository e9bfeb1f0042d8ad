#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

// Dense univariate polynomial in the formal variable t over the rationals.
// Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial stores no coefficients at all.
class PolyT {
public:
    PolyT() = default;

    explicit PolyT(const Rational& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }

    explicit PolyT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyT monomial(const Rational& c, int power) {
        PolyT p;
        if (c == 0) return p;
        p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
        p.coeffs_.back() = c;
        return p;
    }

    static PolyT variable() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    const Rational& leading() const { return coeffs_.back(); } // pre: !is_zero()

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    PolyT operator-() const {
        PolyT r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return PolyT(std::move(c));
    }

    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyT(std::move(c));
    }

    PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
    PolyT& operator-=(const PolyT& o) { return *this = *this - o; }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    PolyT scaled(const Rational& c) const {
        if (c == 0) return PolyT();
        PolyT r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    // Euclidean division; pre: b != 0.
    static std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
        if (b.is_zero()) throw zero_denominator("polynomial division by zero");
        PolyT rem = a;
        std::vector<Rational> q;
        if (rem.degree() >= b.degree())
            q.assign(static_cast<std::size_t>(rem.degree() - b.degree()) + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            Rational factor = rem.leading() / b.leading();
            q[static_cast<std::size_t>(shift)] = factor;
            rem -= PolyT::monomial(factor, shift) * b;
        }
        return {PolyT(std::move(q)), rem};
    }

    // Monic Euclidean gcd over the rationals; gcd(0, 0) = 0.
    static PolyT gcd(PolyT a, PolyT b) {
        while (!b.is_zero()) {
            PolyT r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading());
        return a;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (i == 0 || a != 1) os << rational_to_string(a);
            if (i > 0) {
                if (a != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

// Truncated power series in t: coefficients 0..order.
struct SeriesTrunc {
    int order = 0;
    std::vector<Rational> coefficients; // length order + 1

    friend bool operator==(const SeriesTrunc& a, const SeriesTrunc& b) {
        return a.order == b.order && a.coefficients == b.coefficients;
    }
};

// Rational function of t in canonical form: gcd(num, den) = 1 and den(0) = 1.
class RationalFunctionT {
public:
    RationalFunctionT() : num_(), den_(Rational(1)) {}

    RationalFunctionT(PolyT num, PolyT den) {
        if (den.is_zero()) throw zero_denominator("rational function with zero denominator");
        if (den.coeff(0) == 0)
            throw non_unit_constant_term("denominator vanishes at t=0");
        PolyT g = PolyT::gcd(num, den);
        if (!g.is_zero() && g.degree() > 0) {
            num = PolyT::divmod(num, g).first;
            den = PolyT::divmod(den, g).first;
        }
        Rational c0 = den.coeff(0);
        num_ = num.scaled(Rational(1) / c0);
        den_ = den.scaled(Rational(1) / c0);
    }

    static RationalFunctionT from_poly(PolyT p) { return RationalFunctionT(std::move(p), PolyT(Rational(1))); }

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational at_zero() const { return num_.coeff(0); } // den(0) = 1

    friend RationalFunctionT operator+(const RationalFunctionT& a, const RationalFunctionT& b) {
        return RationalFunctionT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunctionT operator-(const RationalFunctionT& a, const RationalFunctionT& b) {
        return RationalFunctionT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunctionT operator*(const RationalFunctionT& a, const RationalFunctionT& b) {
        return RationalFunctionT(a.num_ * b.num_, a.den_ * b.den_);
    }
    RationalFunctionT operator-() const {
        RationalFunctionT r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // Canonical form makes equality a pair of polynomial comparisons.
    friend bool operator==(const RationalFunctionT& a, const RationalFunctionT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunctionT& a, const RationalFunctionT& b) { return !(a == b); }

    std::string str() const {
        if (den_ == PolyT(Rational(1))) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    PolyT num_;
    PolyT den_;
};

inline RationalFunctionT rf_normalize(const PolyT& num, const PolyT& den) {
    return RationalFunctionT(num, den);
}

// Maclaurin expansion of f to the given order; pre: f.den()(0) = 1 (canonical).
inline SeriesTrunc rf_to_series(const RationalFunctionT& f, int order) {
    if (order < 0) throw precondition_error("series order must be nonnegative");
    SeriesTrunc s;
    s.order = order;
    s.coefficients.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    const PolyT& num = f.num();
    const PolyT& den = f.den();
    for (int k = 0; k <= order; ++k) {
        Rational c = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j)
            c -= den.coeff(j) * s.coefficients[static_cast<std::size_t>(k - j)];
        s.coefficients[static_cast<std::size_t>(k)] = c;
    }
    return s;
}

// Unique polynomial of degree <= degree_bound through the first
// degree_bound + 1 points; any further points are verified against the fit.
inline PolyT interpolate_polynomial(const std::vector<std::pair<Rational, Rational>>& points,
                                    int degree_bound) {
    if (degree_bound < 0) throw precondition_error("negative degree bound");
    const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < need)
        throw precondition_error("interpolation needs at least " + std::to_string(need) + " points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw duplicate_abscissa("duplicate abscissa " + rational_to_string(points[i].first));

    // Newton divided differences on the first degree_bound + 1 points.
    std::vector<Rational> x(need), dd(need);
    for (std::size_t i = 0; i < need; ++i) {
        x[i] = points[i].first;
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < need; ++level)
        for (std::size_t i = need - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

    PolyT result;
    PolyT basis(Rational(1));
    for (std::size_t i = 0; i < need; ++i) {
        result += basis.scaled(dd[i]);
        basis *= PolyT({-x[i], Rational(1)});
    }

    for (std::size_t i = need; i < points.size(); ++i) {
        if (result.eval(points[i].first) != points[i].second)
            throw inconsistent_extra_point(
                "verification sample at " + rational_to_string(points[i].first) +
                " does not lie on the fitted polynomial");
    }
    return result;
}

} // namespace nok
