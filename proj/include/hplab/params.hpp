#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hplab/errors.hpp"
#include "hplab/numeric.hpp"

namespace hplab {

// Parameters of the extended Appell series
//   F2n[b_1..b_n, b', a / c_1..c_n, c'; t1, 1-t2].
template <class T>
struct HGParamsF2n {
    int n = 1;
    std::vector<T> b;   // b_1..b_n
    T bprime{};
    T a{};
    std::vector<T> c;   // c_1..c_n
    T cprime{};

    void validate() const {
        if (n < 1) throw ContractViolation("HGParamsF2n: n must be >= 1");
        if (static_cast<int>(b.size()) != n || static_cast<int>(c.size()) != n)
            throw ContractViolation("HGParamsF2n: b/c length must equal n");
        for (const T& ci : c)
            if (is_nonpositive_integer(ci))
                throw DomainError("HGParamsF2n: c_i at a nonpositive integer");
        if (is_nonpositive_integer(cprime))
            throw DomainError("HGParamsF2n: c' at a nonpositive integer");
    }
};

// Parameters of F_{n+1,m}: alpha_1..alpha_n upper, beta_1..beta_m per-variable,
// gamma_1..gamma_n lower.
template <class T>
struct HGParamsFnm {
    int n = 1;
    int m = 2;
    std::vector<T> alpha;
    std::vector<T> beta;
    std::vector<T> gamma;

    void validate() const {
        if (n < 1 || m < 1) throw ContractViolation("HGParamsFnm: n, m must be >= 1");
        if (static_cast<int>(alpha.size()) != n || static_cast<int>(gamma.size()) != n ||
            static_cast<int>(beta.size()) != m)
            throw ContractViolation("HGParamsFnm: parameter list lengths");
        for (const T& g : gamma)
            if (is_nonpositive_integer(g))
                throw DomainError("HGParamsFnm: gamma_i at a nonpositive integer");
    }
};

// Parameters of the multi-variable extension F2nm: the first variable carries
// the length-n parameter rows, variables 2..m carry single parameters.
template <class T>
struct HGParamsF2nm {
    int n = 1;
    int m = 2;
    std::vector<T> b1row;   // b_{1,1}..b_{1,n}
    std::vector<T> b_rest;  // b_2..b_m
    T a{};
    std::vector<T> c1row;   // c_{1,1}..c_{1,n}
    std::vector<T> c_rest;  // c_2..c_m

    void validate() const {
        if (n < 1 || m < 2) throw ContractViolation("HGParamsF2nm: need n >= 1, m >= 2");
        if (static_cast<int>(b1row.size()) != n || static_cast<int>(c1row.size()) != n ||
            static_cast<int>(b_rest.size()) != m - 1 || static_cast<int>(c_rest.size()) != m - 1)
            throw ContractViolation("HGParamsF2nm: parameter list lengths");
        for (const T& ci : c1row)
            if (is_nonpositive_integer(ci)) throw DomainError("HGParamsF2nm: c_{1,i} pole");
        for (const T& ci : c_rest)
            if (is_nonpositive_integer(ci)) throw DomainError("HGParamsF2nm: c_i pole");
    }
};

template <class T>
struct AppellF4Params {
    T a{}, b{}, c1{}, c2{};

    void validate() const {
        if (is_nonpositive_integer(c1) || is_nonpositive_integer(c2))
            throw DomainError("AppellF4Params: c1/c2 at a nonpositive integer");
    }
};

// Parameters (theta_1..theta_3, kappa_0..kappa_n, rho_1..rho_n) of the
// Schlesinger-Tsuda Hamiltonian in two time variables.
template <class T>
struct PainleveParams {
    int n = 1;
    T theta1{}, theta2{}, theta3{};
    std::vector<T> kappa;  // kappa_0..kappa_n  (size n+1)
    std::vector<T> rho;    // rho_1..rho_n      (size n)

    void validate() const {
        if (n < 1) throw ContractViolation("PainleveParams: n must be >= 1");
        if (static_cast<int>(kappa.size()) != n + 1 || static_cast<int>(rho.size()) != n)
            throw ContractViolation("PainleveParams: kappa/rho length");
    }
    const T& kappa0() const { return kappa[0]; }
    const T& kap(int i) const { return kappa[static_cast<std::size_t>(i)]; }       // kappa_i
    const T& rh(int i) const { return rho[static_cast<std::size_t>(i - 1)]; }      // rho_i, i>=1
};

struct PainleveParamsF4 {
    // alpha_0..alpha_5 with 2a0 + a1 + a2 + a3 + a4 + a5 = 0
    std::array<double, 6> alpha{};

    void validate() const {
        double rel = 2 * alpha[0] + alpha[1] + alpha[2] + alpha[3] + alpha[4] + alpha[5];
        if (std::abs(rel) > 1e-12)
            throw ContractViolation("PainleveParamsF4: 2a0+a1+...+a5 != 0");
    }
};

using HGParamsF2nD = HGParamsF2n<double>;
using HGParamsF2nQ = HGParamsF2n<Rational>;
using HGParamsFnmD = HGParamsFnm<double>;
using HGParamsFnmQ = HGParamsFnm<Rational>;

// ---- parameter dictionaries between the hypergeometric and Hamiltonian sides ----

// Change of parameters of the main solution theorem:
//   b_i = -kappa_i - rho_1, b' = -theta_2, c_1 = -kappa_0 - rho_1 + 1,
//   c_i = -rho_1 + rho_i + 1 (i>=2), c' = 1 - theta_2 - theta_3,
// with the series constraint a = c_1 + c' - 2.
template <class T>
HGParamsF2n<T> hg_from_painleve_main(const PainleveParams<T>& p) {
    p.validate();
    HGParamsF2n<T> h;
    h.n = p.n;
    h.b.resize(p.n);
    h.c.resize(p.n);
    for (int i = 1; i <= p.n; ++i) h.b[i - 1] = -p.kap(i) - p.rh(1);
    h.bprime = -p.theta2;
    h.c[0] = -p.kappa0() - p.rh(1) + T(1);
    for (int i = 2; i <= p.n; ++i) h.c[i - 1] = -p.rh(1) + p.rh(i) + T(1);
    h.cprime = T(1) - p.theta2 - p.theta3;
    h.a = h.c[0] + h.cprime - T(2);
    return h;
}

// Inverse of the dictionary above; rho_1 is the free gauge parameter.
template <class T>
PainleveParams<T> painleve_from_hg_main(const HGParamsF2n<T>& h, const T& rho1) {
    PainleveParams<T> p;
    p.n = h.n;
    p.theta2 = -h.bprime;
    p.theta3 = T(1) - h.cprime + h.bprime;
    p.kappa.resize(h.n + 1);
    p.rho.resize(h.n);
    p.rho[0] = rho1;
    p.kappa[0] = T(1) - h.c[0] - rho1;
    for (int i = 1; i <= h.n; ++i) p.kappa[static_cast<std::size_t>(i)] = -h.b[i - 1] - rho1;
    for (int i = 2; i <= h.n; ++i) p.rho[static_cast<std::size_t>(i - 1)] = h.c[i - 1] - T(1) + rho1;
    T s{};
    for (int j = 1; j <= h.n; ++j) s += p.kap(j) + p.rh(j);
    p.theta1 = -s;
    return p;
}

// Degenerate dictionary of the 2n-dimensional system: kappa_0 = kappa_1 and
// c_1 = -kappa_1 - rho_1 + 1; agrees with the main dictionary when b_1 = c_1 - 1.
template <class T>
PainleveParams<T> painleve_from_hg_deg(const HGParamsF2n<T>& h, const T& rho1) {
    PainleveParams<T> p = painleve_from_hg_main(h, rho1);
    p.kappa[1] = T(1) - h.c[0] - rho1;
    p.kappa[0] = p.kappa[1];
    T s{};
    for (int j = 1; j <= h.n; ++j) s += p.kap(j) + p.rh(j);
    p.theta1 = -s;
    return p;
}

}  // namespace hplab
