#pragma once

#include <string>
#include <utility>

namespace hplab {

// Expansion chart of a truncated series. The chart fixes what the grid
// variables (x, y) mean and therefore how the Euler operators act:
//   X_T1_Y_ONE_MINUS_T2 : x = t1, y = 1-t2, delta2 = (t2-1) d/dt2 = y d/dy
//   X_T1_Y_T2           : x = t1, y = t2,   delta2 = t2 d/dt2     = y d/dy
//   X_S1_Y_S2           : x = s1, y = s2,   D2     = s2 d/ds2     = y d/dy
// In every chart delta1 (resp. D1) is x d/dx; both operators are diagonal
// on coefficients, multiplying c[i][j] by i resp. j.
enum class Chart { X_T1_Y_ONE_MINUS_T2, X_T1_Y_T2, X_S1_Y_S2 };

inline std::string chart_name(Chart c) {
    switch (c) {
        case Chart::X_T1_Y_ONE_MINUS_T2: return "x=t1,y=1-t2";
        case Chart::X_T1_Y_T2: return "x=t1,y=t2";
        case Chart::X_S1_Y_S2: return "x=s1,y=s2";
    }
    return "?";
}

// Map an ambient point (t1, t2) (or (s1, s2)) to chart coordinates (x, y).
inline std::pair<double, double> chart_xy(Chart c, double t1, double t2) {
    if (c == Chart::X_T1_Y_ONE_MINUS_T2) return {t1, 1.0 - t2};
    return {t1, t2};
}

}  // namespace hplab
