#pragma once

#include <vector>

#include "jacstrata/rational.hpp"

namespace jacstrata {

/// Univariate polynomial in the deformation parameter b, rational coefficients.
/// coeff(i) is the coefficient of b^i; trailing zeros are trimmed.
class BPoly {
public:
    BPoly() = default;
    BPoly(Rational constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static BPoly monomial(Rational coeff, int bexp) {
        BPoly p;
        if (coeff.is_zero()) return p;
        p.c_.assign(bexp + 1, Rational());
        p.c_[bexp] = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial

    Rational coeff(int i) const {
        if (i < 0 || i >= (int)c_.size()) return Rational();
        return c_[i];
    }

    Rational at_zero() const { return coeff(0); }

    /// Smallest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (int i = 0; i < (int)c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return -1;
    }

    /// Exact division by b; requires the constant term to vanish.
    BPoly shifted_down() const {
        if (is_zero()) return BPoly();
        if (!c_[0].is_zero())
            throw Error(ErrorCode::Internal, "division by b with nonzero constant term");
        BPoly p;
        p.c_.assign(c_.begin() + 1, c_.end());
        p.trim();
        return p;
    }

    friend BPoly operator+(const BPoly& a, const BPoly& b) {
        BPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff((int)i) + b.coeff((int)i);
        r.trim();
        return r;
    }
    friend BPoly operator-(const BPoly& a, const BPoly& b) {
        BPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff((int)i) - b.coeff((int)i);
        r.trim();
        return r;
    }
    friend BPoly operator*(const BPoly& a, const BPoly& b) {
        if (a.is_zero() || b.is_zero()) return BPoly();
        BPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend BPoly operator*(const Rational& s, const BPoly& a) {
        BPoly r;
        if (s.is_zero()) return r;
        r.c_ = a.c_;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }
    BPoly& operator+=(const BPoly& b) { return *this = *this + b; }
    BPoly& operator-=(const BPoly& b) { return *this = *this - b; }

    friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace jacstrata
