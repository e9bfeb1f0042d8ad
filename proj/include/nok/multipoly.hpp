#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

// Monomial exponents; length is fixed by the ambient ring.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline bool exponent_divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExponentVector exponent_sum(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

// All exponent vectors of the given total degree, in lexicographic order.
inline std::vector<ExponentVector> monomial_exponents(int num_vars, int degree) {
    std::vector<ExponentVector> out;
    if (num_vars <= 0 || degree < 0) return out;
    ExponentVector cur(static_cast<std::size_t>(num_vars), 0);
    auto emit = [&](auto&& self, int pos, int left) -> void {
        if (pos == num_vars - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    emit(emit, 0, degree);
    return out;
}

// Multivariate polynomial over the rationals. Terms are kept in a map keyed
// by exponent vector (lexicographic), with no zero coefficients stored.
class MultiPoly {
public:
    explicit MultiPoly(int num_vars) : num_vars_(num_vars) {}

    static MultiPoly monomial(int num_vars, ExponentVector e, Rational c = Rational(1)) {
        MultiPoly p(num_vars);
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    int num_vars() const { return num_vars_; }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const ExponentVector& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Common total degree of all terms, or nullopt (non-homogeneous or zero).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return std::nullopt;
        return d;
    }

    MultiPoly extended(int extra_vars) const {
        MultiPoly p(num_vars_ + extra_vars);
        for (const auto& [e, c] : terms_) {
            ExponentVector ext = e;
            ext.resize(e.size() + static_cast<std::size_t>(extra_vars), 0);
            p.terms_.emplace(std::move(ext), c);
        }
        return p;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(exponent_sum(ea, eb), ca * cb);
        return r;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(num_vars_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& var_names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool printed = false;
            if (a != 1 || total_degree(e) == 0) {
                os << rational_to_string(a);
                printed = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << var_names[i];
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    int num_vars_;
    std::map<ExponentVector, Rational> terms_;
};

// Homogeneous ideal given by a nonempty list of homogeneous generators.
struct HomogeneousIdeal {
    int num_vars = 0; // n + 1
    std::vector<MultiPoly> generators;

    HomogeneousIdeal(int num_vars_, std::vector<MultiPoly> gens)
        : num_vars(num_vars_), generators(std::move(gens)) {
        if (num_vars < 2) throw precondition_error("ideal needs at least 2 variables");
        if (generators.empty()) throw precondition_error("ideal needs at least one generator");
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const MultiPoly& g = generators[i];
            if (g.num_vars() != num_vars)
                throw precondition_error("generator " + std::to_string(i) + " lives in the wrong ring");
            auto d = g.homogeneous_degree();
            if (!d)
                throw precondition_error("generator " + std::to_string(i) + " is zero or not homogeneous");
            if (*d == 0)
                throw precondition_error("generator " + std::to_string(i) + " is a nonzero constant");
        }
    }

    std::vector<int> generator_degrees() const {
        std::vector<int> out;
        out.reserve(generators.size());
        for (const auto& g : generators) out.push_back(*g.homogeneous_degree());
        return out;
    }
};

// Basis of the degree-s piece of the t-th power of an ideal, triangular with
// respect to a valuation order: basis values are pairwise distinct.
struct GradedPieceBasis {
    int power = 1;  // t
    int degree = 0; // s
    std::vector<MultiPoly> basis;
};

} // namespace nok
