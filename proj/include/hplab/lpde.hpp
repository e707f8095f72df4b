#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "hplab/chart.hpp"
#include "hplab/errors.hpp"
#include "hplab/params.hpp"
#include "hplab/series.hpp"

namespace hplab::lpde {

// Polynomial in the Euler operators (delta_1, delta_2[, delta_3]); acts
// diagonally on series coefficients: the monomial d1^e1 d2^e2 multiplies
// c[i][j] by i^e1 j^e2.
template <class T>
class DeltaPoly {
public:
    struct Mono {
        std::array<int, 3> e{0, 0, 0};
        T coeff{};
    };

    DeltaPoly() = default;

    static DeltaPoly constant(const T& c) {
        DeltaPoly p;
        p.add_mono({0, 0, 0}, c);
        return p;
    }
    // delta_axis + shift  (axis in 0..2)
    static DeltaPoly linear(int axis, const T& shift) {
        DeltaPoly p;
        std::array<int, 3> e{0, 0, 0};
        e[static_cast<std::size_t>(axis)] = 1;
        p.add_mono(e, T(1));
        if (shift != T(0)) p.add_mono({0, 0, 0}, shift);
        return p;
    }

    void add_mono(const std::array<int, 3>& e, const T& c) {
        for (Mono& m : monos_)
            if (m.e == e) {
                m.coeff += c;
                return;
            }
        monos_.push_back({e, c});
    }

    DeltaPoly operator*(const DeltaPoly& other) const {
        DeltaPoly out;
        for (const Mono& a : monos_)
            for (const Mono& b : other.monos_)
                out.add_mono({a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]},
                             a.coeff * b.coeff);
        return out;
    }
    DeltaPoly operator+(const DeltaPoly& other) const {
        DeltaPoly out = *this;
        for (const Mono& b : other.monos_) out.add_mono(b.e, b.coeff);
        return out;
    }
    DeltaPoly scaled(const T& s) const {
        DeltaPoly out = *this;
        for (Mono& m : out.monos_) m.coeff *= s;
        return out;
    }

    T eval(int i, int j, int k = 0) const {
        T total{};
        for (const Mono& m : monos_) {
            T term = m.coeff;
            for (int l = 0; l < m.e[0]; ++l) term *= T(i);
            for (int l = 0; l < m.e[1]; ++l) term *= T(j);
            for (int l = 0; l < m.e[2]; ++l) term *= T(k);
            total += term;
        }
        return total;
    }

    int degree() const {
        int d = 0;
        for (const Mono& m : monos_) d = std::max(d, m.e[0] + m.e[1] + m.e[2]);
        return d;
    }

    const std::vector<Mono>& monomials() const { return monos_; }

private:
    std::vector<Mono> monos_;
};

// prod over the given shifts of (delta_axis + shift)
template <class T>
DeltaPoly<T> delta_product(int axis, const std::vector<T>& shifts) {
    DeltaPoly<T> p = DeltaPoly<T>::constant(T(1));
    for (const T& s : shifts) p = p * DeltaPoly<T>::linear(axis, s);
    return p;
}

// One additive piece of an operator: prefactor * dpoly(delta), where the
// prefactor is the chart monomial x^s0 y^s1 (z^s2) or, for the F4 system,
// one of the two rational cross factors.
enum class Prefactor { MONOMIAL, F4_CROSS_1, F4_CROSS_2 };

template <class T>
struct OperatorTerm {
    std::array<int, 3> shift{0, 0, 0};
    DeltaPoly<T> dpoly;
    Prefactor pref = Prefactor::MONOMIAL;

    int shift_total() const { return shift[0] + shift[1] + shift[2]; }
};

template <class T>
using Equation = std::vector<OperatorTerm<T>>;

template <class T>
struct LPDESystem {
    Chart chart = Chart::X_T1_Y_ONE_MINUS_T2;
    int nvars = 2;
    std::vector<Equation<T>> equations;
    bool pointwise_only = false;

    // Residual coefficients are only trusted where truncation cannot leak in.
    int trusted_degree(int N) const {
        int p = 0;
        for (const Equation<T>& eq : equations)
            for (const OperatorTerm<T>& t : eq)
                p = std::max(p, std::max(t.shift_total(), t.dpoly.degree()));
        return N - p;
    }
};

// ---- system builders -----------------------------------------------------

// General F2n system (two equations, chart x = t1, y = 1-t2).
template <class T>
LPDESystem<T> build_F2n_general(const HGParamsF2n<T>& p) {
    p.validate();
    LPDESystem<T> sys;
    sys.chart = Chart::X_T1_Y_ONE_MINUS_T2;

    std::vector<T> cm1(p.c);
    for (T& v : cm1) v -= T(1);
    DeltaPoly<T> d1pd2pa = DeltaPoly<T>::linear(0, T(0)) + DeltaPoly<T>::linear(1, p.a);

    Equation<T> eq1;
    eq1.push_back({{1, 0, 0}, d1pd2pa * delta_product(0, p.b)});
    eq1.push_back({{0, 0, 0},
                   (DeltaPoly<T>::linear(0, T(0)) * delta_product(0, cm1)).scaled(T(-1))});
    Equation<T> eq2;
    eq2.push_back({{0, 1, 0}, d1pd2pa * DeltaPoly<T>::linear(1, p.bprime)});
    eq2.push_back({{0, 0, 0},
                   (DeltaPoly<T>::linear(1, T(0)) * DeltaPoly<T>::linear(1, p.cprime - T(1)))
                       .scaled(T(-1))});
    sys.equations = {eq1, eq2};
    return sys;
}

// Same system on the a = c_1 + c' - 2 constraint surface.
template <class T>
LPDESystem<T> build_F2n_constrained(const HGParamsF2n<T>& p) {
    if (to_double(abs_value(p.a - (p.c[0] + p.cprime - T(2)))) > 1e-12)
        throw ContractViolation("build_F2n_constrained: a != c_1 + c' - 2");
    return build_F2n_general(p);
}

// Degenerate system satisfied by (delta_1 + c_1 - 1) z when b_1 = c_1 - 1:
// the parameter products run over i = 2..n only.
template <class T>
LPDESystem<T> build_F2n_degenerate(const HGParamsF2n<T>& p) {
    p.validate();
    LPDESystem<T> sys;
    sys.chart = Chart::X_T1_Y_ONE_MINUS_T2;
    T a = p.c[0] + p.cprime - T(2);

    std::vector<T> btail(p.b.begin() + 1, p.b.end());
    std::vector<T> ctail;
    for (std::size_t i = 1; i < p.c.size(); ++i) ctail.push_back(p.c[i] - T(1));
    DeltaPoly<T> d1pd2pa = DeltaPoly<T>::linear(0, T(0)) + DeltaPoly<T>::linear(1, a);

    Equation<T> eq1;
    eq1.push_back({{1, 0, 0}, d1pd2pa * delta_product(0, btail)});
    eq1.push_back({{0, 0, 0},
                   (DeltaPoly<T>::linear(0, T(0)) * delta_product(0, ctail)).scaled(T(-1))});
    Equation<T> eq2;
    eq2.push_back({{0, 1, 0}, d1pd2pa * DeltaPoly<T>::linear(1, p.bprime)});
    eq2.push_back({{0, 0, 0},
                   (DeltaPoly<T>::linear(1, T(0)) * DeltaPoly<T>::linear(1, p.cprime - T(1)))
                       .scaled(T(-1))});
    sys.equations = {eq1, eq2};
    return sys;
}

// Three-equation system of F_{n+1,2} (chart x = s1, y = s2; D = D1 + D2).
template <class T>
LPDESystem<T> build_Fn2(const HGParamsFnm<T>& p) {
    p.validate();
    if (p.m != 2) throw ContractViolation("build_Fn2: m must be 2");
    LPDESystem<T> sys;
    sys.chart = Chart::X_S1_Y_S2;

    DeltaPoly<T> Dsum = DeltaPoly<T>::linear(0, T(0)) + DeltaPoly<T>::linear(1, T(0));
    DeltaPoly<T> prodA = DeltaPoly<T>::constant(T(1));
    DeltaPoly<T> prodG = DeltaPoly<T>::constant(T(1));
    for (int k = 0; k < p.n; ++k) {
        prodA = prodA * (Dsum + DeltaPoly<T>::constant(p.alpha[k]));
        prodG = prodG * (Dsum + DeltaPoly<T>::constant(p.gamma[k] - T(1)));
    }
    DeltaPoly<T> D1 = DeltaPoly<T>::linear(0, T(0));
    DeltaPoly<T> D2 = DeltaPoly<T>::linear(1, T(0));

    Equation<T> eq1;
    eq1.push_back({{1, 0, 0}, DeltaPoly<T>::linear(0, p.beta[0]) * prodA});
    eq1.push_back({{0, 0, 0}, (D1 * prodG).scaled(T(-1))});
    Equation<T> eq2;
    eq2.push_back({{0, 1, 0}, DeltaPoly<T>::linear(1, p.beta[1]) * prodA});
    eq2.push_back({{0, 0, 0}, (D2 * prodG).scaled(T(-1))});
    Equation<T> eq3;
    eq3.push_back({{1, 0, 0}, DeltaPoly<T>::linear(0, p.beta[0]) * D2});
    eq3.push_back({{0, 1, 0}, (DeltaPoly<T>::linear(1, p.beta[1]) * D1).scaled(T(-1))});
    sys.equations = {eq1, eq2, eq3};
    return sys;
}

// Three-equation F2n system under a = c' (the form the Section 6 theorem
// transforms into the F_{n+1,2} system).
template <class T>
LPDESystem<T> build_F2n_a_eq_cprime(const HGParamsF2n<T>& p) {
    p.validate();
    if (to_double(abs_value(p.a - p.cprime)) > 1e-12)
        throw ContractViolation("build_F2n_a_eq_cprime: a != c'");
    LPDESystem<T> sys;
    sys.chart = Chart::X_T1_Y_ONE_MINUS_T2;

    std::vector<T> cm1(p.c);
    for (T& v : cm1) v -= T(1);
    DeltaPoly<T> prodB = delta_product(0, p.b);
    DeltaPoly<T> prodC = delta_product(0, cm1);
    DeltaPoly<T> d1pd2pc = DeltaPoly<T>::linear(0, T(0)) + DeltaPoly<T>::linear(1, p.cprime);
    DeltaPoly<T> d2 = DeltaPoly<T>::linear(1, T(0));

    Equation<T> eq1;
    eq1.push_back({{1, 0, 0}, d1pd2pc * prodB});
    eq1.push_back({{0, 0, 0}, (DeltaPoly<T>::linear(0, T(0)) * prodC).scaled(T(-1))});
    Equation<T> eq2;
    eq2.push_back({{0, 1, 0}, d1pd2pc * DeltaPoly<T>::linear(1, p.bprime)});
    eq2.push_back({{0, 0, 0}, (d2 * DeltaPoly<T>::linear(1, p.cprime - T(1))).scaled(T(-1))});
    Equation<T> eq3;
    eq3.push_back({{1, 0, 0}, d2 * prodB});
    eq3.push_back({{0, 1, 0}, DeltaPoly<T>::linear(1, p.bprime) * prodC});
    eq3.push_back({{0, 0, 0}, (d2 * prodC).scaled(T(-1))});
    sys.equations = {eq1, eq2, eq3};
    return sys;
}

// Classical Appell F2 system in the plain chart x = t1, y = t2.
template <class T>
LPDESystem<T> build_F2_classical(const T& a, const T& b, const T& bprime, const T& c,
                                 const T& cprime) {
    LPDESystem<T> sys;
    sys.chart = Chart::X_T1_Y_T2;
    DeltaPoly<T> d1pd2pa = DeltaPoly<T>::linear(0, T(0)) + DeltaPoly<T>::linear(1, a);
    Equation<T> eq1;
    eq1.push_back({{1, 0, 0}, d1pd2pa * DeltaPoly<T>::linear(0, b)});
    eq1.push_back({{0, 0, 0},
                   (DeltaPoly<T>::linear(0, T(0)) * DeltaPoly<T>::linear(0, c - T(1)))
                       .scaled(T(-1))});
    Equation<T> eq2;
    eq2.push_back({{0, 1, 0}, d1pd2pa * DeltaPoly<T>::linear(1, bprime)});
    eq2.push_back({{0, 0, 0},
                   (DeltaPoly<T>::linear(1, T(0)) * DeltaPoly<T>::linear(1, cprime - T(1)))
                       .scaled(T(-1))});
    sys.equations = {eq1, eq2};
    return sys;
}

// F4 system with the rational cross terms on t1 = t2; pointwise only.
template <class T>
LPDESystem<T> build_F4_system(const AppellF4Params<T>& p) {
    p.validate();
    LPDESystem<T> sys;
    sys.chart = Chart::X_T1_Y_T2;
    sys.pointwise_only = true;
    T K = p.a + p.b - p.c1 - p.c2 + T(1);
    DeltaPoly<T> d1 = DeltaPoly<T>::linear(0, T(0));
    DeltaPoly<T> d2 = DeltaPoly<T>::linear(1, T(0));

    Equation<T> eq1;
    eq1.push_back({{1, 0, 0}, DeltaPoly<T>::linear(0, p.a) * DeltaPoly<T>::linear(0, p.b)});
    eq1.push_back({{0, 0, 0}, (d1 * DeltaPoly<T>::linear(0, p.c1)).scaled(T(-1))});
    eq1.push_back({{0, 0, 0}, (d1 + d2.scaled(T(-1))).scaled(K), Prefactor::F4_CROSS_1});
    Equation<T> eq2;
    eq2.push_back({{0, 1, 0}, DeltaPoly<T>::linear(1, p.a) * DeltaPoly<T>::linear(1, p.b)});
    eq2.push_back({{0, 0, 0}, (d2 * DeltaPoly<T>::linear(1, p.c2)).scaled(T(-1))});
    eq2.push_back({{0, 0, 0}, (d2 + d1.scaled(T(-1))).scaled(K), Prefactor::F4_CROSS_2});
    sys.equations = {eq1, eq2};
    return sys;
}

// Lauricella F_A system in m variables (m <= 3), for F2nm parameters with n = 1:
//   { t_i (D + a)(delta_i + b_i) - delta_i (delta_i + c_i - 1) } z = 0.
template <class T>
LPDESystem<T> build_FA_system(const HGParamsF2nm<T>& p) {
    p.validate();
    if (p.n != 1) throw ContractViolation("build_FA_system: needs n = 1");
    if (p.m > 3) throw UnsupportedError("build_FA_system: m > 3 not supported");
    LPDESystem<T> sys;
    sys.chart = Chart::X_T1_Y_T2;
    sys.nvars = p.m;

    std::vector<T> bs{p.b1row[0]};
    std::vector<T> cs{p.c1row[0]};
    for (const T& v : p.b_rest) bs.push_back(v);
    for (const T& v : p.c_rest) cs.push_back(v);

    DeltaPoly<T> D = DeltaPoly<T>::constant(T(0));
    for (int axis = 0; axis < p.m; ++axis) D = D + DeltaPoly<T>::linear(axis, T(0));

    for (int axis = 0; axis < p.m; ++axis) {
        Equation<T> eq;
        std::array<int, 3> sh{0, 0, 0};
        sh[static_cast<std::size_t>(axis)] = 1;
        eq.push_back({sh, (D + DeltaPoly<T>::constant(p.a)) *
                              DeltaPoly<T>::linear(axis, bs[static_cast<std::size_t>(axis)])});
        eq.push_back({{0, 0, 0},
                      (DeltaPoly<T>::linear(axis, T(0)) *
                       DeltaPoly<T>::linear(axis, cs[static_cast<std::size_t>(axis)] - T(1)))
                          .scaled(T(-1))});
        sys.equations.push_back(eq);
    }
    return sys;
}

// ---- residuals -------------------------------------------------------------

// Apply one monomial-prefactor term to a series.
template <class T>
TriSeries<T> apply_term(const OperatorTerm<T>& term, const TriSeries<T>& z) {
    if (term.pref != Prefactor::MONOMIAL)
        throw ContractViolation("apply_term: rational prefactor needs pointwise evaluation");
    TriSeries<T> out =
        z.apply_diagonal([&term](int i, int j) { return term.dpoly.eval(i, j); });
    return out.shift(term.shift[0], term.shift[1]);
}

template <class T>
TriSeries<T> apply_equation(const Equation<T>& eq, const TriSeries<T>& z) {
    TriSeries<T> out(z.chart(), z.degree());
    for (const OperatorTerm<T>& term : eq) out.add_inplace(apply_term(term, z));
    return out;
}

// Max |residual coefficient| over the trusted degree range.
template <class T>
T residual_coeffwise(const LPDESystem<T>& sys, const TriSeries<T>& z) {
    if (sys.pointwise_only)
        throw ContractViolation("residual_coeffwise: system is pointwise-only");
    if (sys.nvars != 2) throw ContractViolation("residual_coeffwise: needs a 2-variable system");
    if (sys.chart != z.chart()) throw ContractViolation("residual: chart mismatch");
    int trusted = sys.trusted_degree(z.degree());
    T worst{};
    for (const Equation<T>& eq : eq_range(sys)) {
        T m = apply_equation(eq, z).max_abs_coeff(trusted);
        if (m > worst) worst = m;
    }
    return worst;
}

template <class T>
const std::vector<Equation<T>>& eq_range(const LPDESystem<T>& sys) {
    return sys.equations;
}

// Pointwise residual: exact series differentiation, numeric prefactors.
inline double residual_pointwise(const LPDESystem<double>& sys, const TriSeries<double>& z,
                                 const std::vector<std::pair<double, double>>& points) {
    if (sys.chart != z.chart()) throw ContractViolation("residual: chart mismatch");
    if (points.empty()) throw ContractViolation("residual_pointwise: empty point list");
    double worst = 0.0;
    for (const Equation<double>& eq : sys.equations) {
        // precompute the diagonal images once per equation term
        std::vector<TriSeries<double>> images;
        images.reserve(eq.size());
        for (const OperatorTerm<double>& term : eq)
            images.push_back(z.apply_diagonal(
                [&term](int i, int j) { return term.dpoly.eval(i, j); }));
        for (const auto& [t1, t2] : points) {
            if (std::abs(t1 - t2) < 1e-9)
                throw SingularLocusError("residual_pointwise: t1 = t2");
            auto [x, y] = chart_xy(sys.chart, t1, t2);
            double total = 0.0;
            for (std::size_t k = 0; k < eq.size(); ++k) {
                double pref = 1.0;
                switch (eq[k].pref) {
                    case Prefactor::MONOMIAL:
                        pref = std::pow(x, eq[k].shift[0]) * std::pow(y, eq[k].shift[1]);
                        break;
                    case Prefactor::F4_CROSS_1:
                        pref = t1 * (t2 - 1.0) / (t1 - t2);
                        break;
                    case Prefactor::F4_CROSS_2:
                        pref = t2 * (t1 - 1.0) / (t2 - t1);
                        break;
                }
                total += pref * images[k].eval(x, y);
            }
            worst = std::max(worst, std::abs(total));
        }
    }
    return worst;
}

inline double residual(const LPDESystem<double>& sys, const TriSeries<double>& z,
                       const std::optional<std::vector<std::pair<double, double>>>& points = {}) {
    if (sys.pointwise_only || points.has_value()) {
        if (!points.has_value())
            throw ContractViolation("residual: pointwise-only system needs eval points");
        return residual_pointwise(sys, z, *points);
    }
    return residual_coeffwise(sys, z);
}

// Residual of the m = 3 Lauricella system on a trivariate grid.
template <class T>
T residual_coeffwise_3(const LPDESystem<T>& sys, const TriSeries3<T>& z) {
    if (sys.nvars != 3) throw ContractViolation("residual_coeffwise_3: needs 3 variables");
    int trusted = sys.trusted_degree(z.degree());
    T worst{};
    for (const Equation<T>& eq : sys.equations) {
        TriSeries3<T> out(z.degree());
        for (const OperatorTerm<T>& term : eq) {
            z.for_each([&](int i, int j, int k, const T& v) {
                int ii = i + term.shift[0], jj = j + term.shift[1], kk = k + term.shift[2];
                if (ii + jj + kk <= z.degree())
                    out.at(ii, jj, kk) += v * term.dpoly.eval(i, j, k);
            });
        }
        out.for_each([&](int i, int j, int k, const T& v) {
            if (i + j + k <= trusted) {
                T a = abs_value(v);
                if (a > worst) worst = a;
            }
        });
    }
    return worst;
}

}  // namespace hplab::lpde
