#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hplab/chart.hpp"
#include "hplab/errors.hpp"
#include "hplab/numeric.hpp"

namespace hplab {

// Bivariate truncated power series sum c[i][j] x^i y^j over i+j <= N,
// stored as a triangular grid. The chart records what (x, y) mean.
template <class T>
class TriSeries {
public:
    TriSeries() = default;
    TriSeries(Chart chart, int degree)
        : chart_(chart), degree_(degree),
          coeffs_(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2)) {
        if (degree < 0) throw ContractViolation("TriSeries: negative degree");
    }

    Chart chart() const { return chart_; }
    int degree() const { return degree_; }

    T& at(int i, int j) { return coeffs_[index(i, j)]; }
    const T& at(int i, int j) const { return coeffs_[index(i, j)]; }

    // c[i][j] *= p(i, j) for a diagonal operator p; delta1 is p=(i), delta2 p=(j).
    template <class DiagFn>
    TriSeries apply_diagonal(DiagFn&& p) const {
        TriSeries out(chart_, degree_);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; j + i <= degree_; ++j) out.at(i, j) = at(i, j) * p(i, j);
        return out;
    }

    TriSeries euler_delta1() const {
        return apply_diagonal([](int i, int) { return T(i); });
    }
    TriSeries euler_delta2() const {
        return apply_diagonal([](int, int j) { return T(j); });
    }

    // Multiply by x^p y^q, truncating at the stored degree.
    TriSeries shift(int p, int q) const {
        TriSeries out(chart_, degree_);
        for (int i = 0; i + p <= degree_; ++i)
            for (int j = 0; i + j + p + q <= degree_; ++j) out.at(i + p, j + q) = at(i, j);
        return out;
    }

    TriSeries scaled(const T& s) const {
        TriSeries out(chart_, degree_);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * s;
        return out;
    }

    TriSeries& add_inplace(const TriSeries& other, const T& scale = T(1)) {
        require_compatible(other);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += other.coeffs_[k] * scale;
        return *this;
    }

    TriSeries operator+(const TriSeries& other) const {
        TriSeries out = *this;
        out.add_inplace(other);
        return out;
    }

    // Series of the x-derivative; coefficients above degree N-1 are dropped.
    TriSeries deriv_x() const {
        TriSeries out(chart_, degree_);
        for (int i = 0; i + 1 <= degree_; ++i)
            for (int j = 0; i + 1 + j <= degree_; ++j) out.at(i, j) = at(i + 1, j) * T(i + 1);
        return out;
    }
    TriSeries deriv_y() const {
        TriSeries out(chart_, degree_);
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j + 1 <= degree_; ++j) out.at(i, j) = at(i, j + 1) * T(j + 1);
        return out;
    }

    double eval(double x, double y) const {
        // Horner over rows: sum_i x^i (sum_j c[i][j] y^j)
        double total = 0.0;
        double xi = 1.0;
        for (int i = 0; i <= degree_; ++i) {
            double row = 0.0;
            for (int j = degree_ - i; j >= 0; --j) row = row * y + to_double(at(i, j));
            total += xi * row;
            xi *= x;
        }
        return total;
    }

    T max_abs_coeff(int max_total_degree) const {
        T best{};
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_ && i + j <= max_total_degree; ++j) {
                T a = abs_value(at(i, j));
                if (a > best) best = a;
            }
        return best;
    }

    bool is_zero(int max_total_degree) const {
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_ && i + j <= max_total_degree; ++j)
                if (at(i, j) != T(0)) return false;
        return true;
    }

    void require_compatible(const TriSeries& other) const {
        if (chart_ != other.chart_ || degree_ != other.degree_)
            throw ContractViolation("TriSeries: chart/degree mismatch");
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > degree_)
            throw ContractViolation("TriSeries: index out of range");
        // row-major over i with rows of length N+1-i
        std::size_t off = static_cast<std::size_t>(i) * (degree_ + 1) -
                          static_cast<std::size_t>(i) * (i - 1) / 2;
        return off + static_cast<std::size_t>(j);
    }

    Chart chart_ = Chart::X_T1_Y_ONE_MINUS_T2;
    int degree_ = 0;
    std::vector<T> coeffs_;
};

// Trivariate triangular grid over i+j+k <= N, used by the three-variable
// Lauricella-type checks. Variables are plain (t1, t2, t3).
template <class T>
class TriSeries3 {
public:
    TriSeries3() = default;
    explicit TriSeries3(int degree) : degree_(degree) {
        if (degree < 0) throw ContractViolation("TriSeries3: negative degree");
        coeffs_.resize(count(degree));
    }

    int degree() const { return degree_; }

    T& at(int i, int j, int k) { return coeffs_[index(i, j, k)]; }
    const T& at(int i, int j, int k) const { return coeffs_[index(i, j, k)]; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (int i = 0; i <= degree_; ++i)
            for (int j = 0; i + j <= degree_; ++j)
                for (int k = 0; i + j + k <= degree_; ++k) fn(i, j, k, at(i, j, k));
    }

private:
    static std::size_t count(int n) {
        return static_cast<std::size_t>(n + 1) * (n + 2) * (n + 3) / 6;
    }
    std::size_t index(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i + j + k > degree_)
            throw ContractViolation("TriSeries3: index out of range");
        // blocks by i, then rows by j
        int r = degree_ - i;       // remaining degree for (j,k)
        std::size_t off = count(degree_) - count(r);
        off += static_cast<std::size_t>(j) * (r + 1) - static_cast<std::size_t>(j) * (j - 1) / 2;
        return off + static_cast<std::size_t>(k);
    }

    int degree_ = 0;
    std::vector<T> coeffs_;
};

using SeriesD = TriSeries<double>;
using SeriesQ = TriSeries<Rational>;

}  // namespace hplab
