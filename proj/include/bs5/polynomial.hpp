#pragma once

#include <vector>

#include "bs5/rational.hpp"

namespace bs5 {

// Univariate polynomial with exact rational coefficients, coeffs[d] is the
// coefficient of x^d.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int d) const {
        static const Rational zero{0};
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[d];
    }

    void add_term(int d, const Rational& c) {
        if (d >= static_cast<int>(coeffs_.size())) coeffs_.resize(d + 1);
        coeffs_[d] += c;
    }

    double eval(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + to_double(*it);
        return acc;
    }

    Rational eval_exact(const Rational& x) const {
        Rational acc{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    // Antiderivative with zero constant term.
    Polynomial antiderivative() const {
        std::vector<Rational> c(coeffs_.size() + 1);
        for (size_t d = 0; d < coeffs_.size(); ++d)
            c[d + 1] = coeffs_[d] / Rational(d + 1);
        return Polynomial(std::move(c));
    }

    // Exact integral over [0, 1].
    Rational integral01() const {
        Rational s{0};
        for (size_t d = 0; d < coeffs_.size(); ++d) s += coeffs_[d] / Rational(d + 1);
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace bs5
