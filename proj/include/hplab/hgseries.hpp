#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "hplab/errors.hpp"
#include "hplab/numeric.hpp"
#include "hplab/params.hpp"
#include "hplab/series.hpp"

namespace hplab::hgseries {

// Rising factorial (a)_k = a(a+1)...(a+k-1); empty product for k = 0.
template <class T>
T pochhammer(const T& a, int k) {
    T result(1);
    for (int l = 0; l < k; ++l) result *= a + T(l);
    return result;
}

// ---- coefficient grids -------------------------------------------------

// Exact (i, j) coefficient of the F2n series. The grid builders below use the
// two-term ratio recurrences; this direct product is the fallback and oracle.
template <class T>
T coeff_F2n(const HGParamsF2n<T>& p, int i, int j) {
    p.validate();
    if (i < 0 || j < 0) throw ContractViolation("coeff_F2n: negative index");
    T num = pochhammer(p.a, i + j) * pochhammer(p.bprime, j);
    T den = pochhammer(p.cprime, j) * pochhammer(T(1), i) * pochhammer(T(1), j);
    for (int k = 0; k < p.n; ++k) {
        num *= pochhammer(p.b[k], i);
        den *= pochhammer(p.c[k], i);
    }
    return num / den;
}

template <class T>
T coeff_Fn2(const HGParamsFnm<T>& p, int i, int j) {
    p.validate();
    if (p.m != 2) throw ContractViolation("coeff_Fn2: m must be 2");
    T num = pochhammer(p.beta[0], i) * pochhammer(p.beta[1], j);
    T den = pochhammer(T(1), i) * pochhammer(T(1), j);
    for (int k = 0; k < p.n; ++k) {
        num *= pochhammer(p.alpha[k], i + j);
        den *= pochhammer(p.gamma[k], i + j);
    }
    return num / den;
}

template <class T>
T coeff_F4(const AppellF4Params<T>& p, int i, int j) {
    p.validate();
    return pochhammer(p.a, i + j) * pochhammer(p.b, i + j) /
           (pochhammer(p.c1, i) * pochhammer(p.c2, j) * pochhammer(T(1), i) *
            pochhammer(T(1), j));
}

// i-direction ratio coeff(i+1,j)/coeff(i,j) of F2n.
template <class T>
T ratio_F2n_i(const HGParamsF2n<T>& p, int i, int j) {
    T num = p.a + T(i + j);
    T den = T(1 + i);
    for (int k = 0; k < p.n; ++k) {
        num *= p.b[k] + T(i);
        den *= p.c[k] + T(i);
    }
    return num / den;
}

// j-direction ratio coeff(i,j+1)/coeff(i,j) of F2n.
template <class T>
T ratio_F2n_j(const HGParamsF2n<T>& p, int i, int j) {
    return (p.bprime + T(j)) * (p.a + T(i + j)) / ((p.cprime + T(j)) * T(1 + j));
}

// ---- truncated expansions ----------------------------------------------

// Grid fill via the ratio recurrences, falling back to the direct product
// whenever the previous coefficient vanished (e.g. a numerator parameter at
// a nonpositive integer cuts the series off).
template <class T>
TriSeries<T> series_expand(const HGParamsF2n<T>& p, int N) {
    p.validate();
    TriSeries<T> s(Chart::X_T1_Y_ONE_MINUS_T2, N);
    s.at(0, 0) = T(1);
    for (int i = 0; i + 1 <= N; ++i)
        s.at(i + 1, 0) = s.at(i, 0) != T(0) ? T(s.at(i, 0) * ratio_F2n_i(p, i, 0))
                                            : coeff_F2n(p, i + 1, 0);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j + 1 <= N; ++j)
            s.at(i, j + 1) = s.at(i, j) != T(0) ? T(s.at(i, j) * ratio_F2n_j(p, i, j))
                                                : coeff_F2n(p, i, j + 1);
    return s;
}

template <class T>
TriSeries<T> series_expand(const HGParamsFnm<T>& p, int N) {
    p.validate();
    if (p.m != 2) throw ContractViolation("series_expand(Fnm): bivariate chart needs m = 2");
    TriSeries<T> s(Chart::X_S1_Y_S2, N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) s.at(i, j) = coeff_Fn2(p, i, j);
    return s;
}

template <class T>
TriSeries<T> series_expand(const AppellF4Params<T>& p, int N) {
    p.validate();
    TriSeries<T> s(Chart::X_T1_Y_T2, N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) s.at(i, j) = coeff_F4(p, i, j);
    return s;
}

// F2nm grid for m = 3 (the first variable carries the n-fold parameter rows).
template <class T>
TriSeries3<T> series_expand_3(const HGParamsF2nm<T>& p, int N) {
    p.validate();
    if (p.m != 3) throw ContractViolation("series_expand_3: m must be 3");
    TriSeries3<T> s(N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j)
            for (int k = 0; i + j + k <= N; ++k) {
                T num = pochhammer(p.a, i + j + k) * pochhammer(p.b_rest[0], j) *
                        pochhammer(p.b_rest[1], k);
                T den = pochhammer(p.c_rest[0], j) * pochhammer(p.c_rest[1], k) *
                        pochhammer(T(1), i) * pochhammer(T(1), j) * pochhammer(T(1), k);
                for (int l = 0; l < p.n; ++l) {
                    num *= pochhammer(p.b1row[l], i);
                    den *= pochhammer(p.c1row[l], i);
                }
                s.at(i, j, k) = num / den;
            }
    return s;
}

// ---- pointwise evaluation with tail estimate ---------------------------

struct EvalResult {
    double value = 0.0;
    double tail_bound = 0.0;
    bool tail_warning = false;
};

struct EvalOptions {
    double region_margin = 1e-3;  // refuse points closer than this to the boundary
    double tail_tolerance = 1e-8; // tail bounds above this raise the warning flag
};

namespace detail {

// Ratio-test heuristic on the last two anti-diagonals, safety factor 2.
inline EvalResult finish(double value, double last, double prev, double tol) {
    EvalResult r;
    r.value = value;
    if (last == 0.0) {
        r.tail_bound = 0.0;
    } else {
        double ratio = prev > 0.0 ? last / prev : 1.0;
        ratio = std::clamp(ratio, 0.0, 0.95);
        r.tail_bound = 2.0 * last * ratio / (1.0 - ratio);
        if (prev == 0.0) r.tail_bound = 2.0 * last;
    }
    r.tail_warning = r.tail_bound > tol;
    return r;
}

}  // namespace detail

// Partial sum of F2n over i+j <= N at chart point (x, y) = (t1, 1-t2).
inline EvalResult eval_F2n(const HGParamsF2nD& p, double x, double y, int N,
                           const EvalOptions& opt = {}) {
    p.validate();
    if (N < 0) throw ContractViolation("eval_F2n: N must be >= 0");
    if (std::abs(x) + std::abs(y) >= 1.0 - opt.region_margin)
        throw RegionError("eval_F2n: |x|+|y| outside convergence region");
    TriSeries<double> s = series_expand(p, N);
    double total = 0.0, last = 0.0, prev = 0.0;
    for (int d = 0; d <= N; ++d) {
        double diag = 0.0;
        for (int i = 0; i <= d; ++i)
            diag += std::abs(s.at(i, d - i) * std::pow(x, i) * std::pow(y, d - i));
        for (int i = 0; i <= d; ++i)
            total += s.at(i, d - i) * std::pow(x, i) * std::pow(y, d - i);
        prev = last;
        last = diag;
    }
    return detail::finish(total, last, prev, opt.tail_tolerance);
}

// Partial sum of F_{n+1,m} over |i| <= N at s = (s_1..s_m).
inline EvalResult eval_Fnm(const HGParamsFnmD& p, const std::vector<double>& s, int N,
                           const EvalOptions& opt = {}) {
    p.validate();
    if (static_cast<int>(s.size()) != p.m) throw ContractViolation("eval_Fnm: |s| != m");
    for (double si : s)
        if (std::abs(si) >= 1.0 - opt.region_margin)
            throw RegionError("eval_Fnm: |s_i| outside convergence region");
    double total = 0.0, last = 0.0, prev = 0.0;
    std::vector<int> idx(p.m, 0);
    for (int d = 0; d <= N; ++d) {
        double diag = 0.0, diag_signed = 0.0;
        // iterate all multi-indices with |i| = d
        std::fill(idx.begin(), idx.end(), 0);
        idx[0] = d;
        while (true) {
            double term = 1.0;
            int total_deg = 0;
            for (int l = 0; l < p.m; ++l) total_deg += idx[l];
            for (int k = 0; k < p.n; ++k)
                term *= pochhammer(p.alpha[k], total_deg) / pochhammer(p.gamma[k], total_deg);
            for (int l = 0; l < p.m; ++l)
                term *= pochhammer(p.beta[l], idx[l]) / pochhammer(1.0, idx[l]) *
                        std::pow(s[l], idx[l]);
            diag += std::abs(term);
            diag_signed += term;
            // next composition of d into m parts
            int k = p.m - 2;
            while (k >= 0 && idx[k] == 0) --k;
            if (k < 0) break;
            --idx[k];
            int rest = d;
            for (int l = 0; l <= k; ++l) rest -= idx[l];
            for (int l = k + 1; l < p.m; ++l) idx[l] = 0;
            idx[k + 1] = rest;
        }
        total += diag_signed;
        prev = last;
        last = diag;
    }
    return detail::finish(total, last, prev, opt.tail_tolerance);
}

// Partial sum of F2nm over |i| <= N at t = (t_1..t_m); the sum(|t_i|) < 1
// region is a heuristic, the paper states no region for this family.
inline EvalResult eval_F2nm(const HGParamsF2nm<double>& p, const std::vector<double>& t, int N,
                            const EvalOptions& opt = {}) {
    p.validate();
    if (static_cast<int>(t.size()) != p.m) throw ContractViolation("eval_F2nm: |t| != m");
    double radius = 0.0;
    for (double ti : t) radius += std::abs(ti);
    if (radius >= 1.0 - opt.region_margin)
        throw RegionError("eval_F2nm: sum|t_i| outside heuristic region");
    double total = 0.0, last = 0.0, prev = 0.0;
    std::vector<int> idx(p.m, 0);
    for (int d = 0; d <= N; ++d) {
        double diag = 0.0, diag_signed = 0.0;
        std::fill(idx.begin(), idx.end(), 0);
        idx[0] = d;
        while (true) {
            int total_deg = 0;
            for (int l = 0; l < p.m; ++l) total_deg += idx[l];
            double term = pochhammer(p.a, total_deg);
            for (int l = 0; l < p.n; ++l)
                term *= pochhammer(p.b1row[l], idx[0]) / pochhammer(p.c1row[l], idx[0]);
            for (int l = 1; l < p.m; ++l)
                term *= pochhammer(p.b_rest[l - 1], idx[l]) / pochhammer(p.c_rest[l - 1], idx[l]);
            for (int l = 0; l < p.m; ++l)
                term *= std::pow(t[l], idx[l]) / pochhammer(1.0, idx[l]);
            diag += std::abs(term);
            diag_signed += term;
            int k = p.m - 2;
            while (k >= 0 && idx[k] == 0) --k;
            if (k < 0) break;
            --idx[k];
            int rest = d;
            for (int l = 0; l <= k; ++l) rest -= idx[l];
            for (int l = k + 1; l < p.m; ++l) idx[l] = 0;
            idx[k + 1] = rest;
        }
        total += diag_signed;
        prev = last;
        last = diag;
    }
    return detail::finish(total, last, prev, opt.tail_tolerance);
}

// Partial sum of F4 over i+j <= N; convergence region sqrt|t1| + sqrt|t2| < 1.
inline EvalResult eval_F4(const AppellF4Params<double>& p, double t1, double t2, int N,
                          const EvalOptions& opt = {}) {
    p.validate();
    if (std::sqrt(std::abs(t1)) + std::sqrt(std::abs(t2)) >= 1.0 - opt.region_margin)
        throw RegionError("eval_F4: point outside convergence region");
    TriSeries<double> s = series_expand(p, N);
    double total = 0.0, last = 0.0, prev = 0.0;
    for (int d = 0; d <= N; ++d) {
        double diag = 0.0;
        for (int i = 0; i <= d; ++i) {
            double term = s.at(i, d - i) * std::pow(t1, i) * std::pow(t2, d - i);
            total += term;
            diag += std::abs(term);
        }
        prev = last;
        last = diag;
    }
    return detail::finish(total, last, prev, opt.tail_tolerance);
}

}  // namespace hplab::hgseries
