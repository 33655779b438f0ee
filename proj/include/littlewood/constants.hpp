// littlewood - scalar constant formulas: Khinchine constants, gamma-product
// upper bounds, sublinear envelopes, mixed Littlewood constants and the
// extremal-family lower-bound exponents.

#pragma once

#include "littlewood/dyadic.hpp"
#include "littlewood/mixednorm.hpp"
#include "littlewood/rational.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace littlewood {

enum class BoundKind { lower, upper, sharp };

enum class ScalarField { real, complex };

/// A constant bound with provenance. When the value is exactly 2^{p/q}
/// the rational exponent is carried alongside the float.
struct BoundReport {
    BoundKind kind = BoundKind::lower;
    std::optional<Rational> log2;
    double value = 0.0;
    std::string provenance;
};

inline const char* to_string(BoundKind k)
{
    switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::sharp: return "sharp";
    }
    return "?";
}

/// Gamma function via the Lanczos approximation (g = 7, 9 terms),
/// certified to 1e-13 relative accuracy on [0.5, 50].
inline double gamma_fn(double x)
{
    if (!(x >= 0.5 && x <= 50.0))
        throw std::domain_error("gamma_fn: argument outside certified range [0.5, 50]");
    static constexpr double g = 7.0;
    static constexpr double coeff[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double a = coeff[0];
    for (int i = 1; i < 9; ++i)
        a += coeff[i] / (z + i);
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

/// The root p0 in (1,2) of Gamma((p+1)/2) = sqrt(pi)/2, approximately 1.8474.
/// p = 2 also satisfies the equation and is excluded by bisecting [1.5, 1.9],
/// where Gamma((p+1)/2) is strictly decreasing through the target.
inline double p0()
{
    static const double root = [] {
        const double target = std::sqrt(std::numbers::pi) / 2.0;
        double lo = 1.5, hi = 1.9;
        for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (gamma_fn((mid + 1.0) / 2.0) > target)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return root;
}

/// Best Khinchine constant A_p on [1,2]: 2^{1/2 - 1/p} for p <= p0 and
/// sqrt(2) (Gamma((p+1)/2)/sqrt(pi))^{1/p} above.
inline double khinchine_A(const Rational& p)
{
    if (p < 1 || p > 2)
        throw std::domain_error("khinchine_A: p outside [1,2]");
    const double pd = to_double(p);
    if (pd <= p0())
        return std::pow(2.0, 0.5 - 1.0 / pd);
    return std::sqrt(2.0) * std::pow(gamma_fn((pd + 1.0) / 2.0) / std::sqrt(std::numbers::pi), 1.0 / pd);
}

/// Upper bound prod_{j=2}^m A_{(2j-2)/j}^{-1} for the real BH constant.
/// For m <= 13 every factor sits on the dyadic Khinchine branch and the
/// exact exponent (1/2) H_{m-1} is attached.
inline BoundReport bh_upper_real(int m)
{
    if (m < 2 || m > 10'000)
        throw std::invalid_argument("bh_upper_real: m outside [2, 1e4]");
    BoundReport report;
    report.kind = BoundKind::upper;
    double log2_sum = 0.0;
    for (int j = 2; j <= m; ++j)
        log2_sum -= std::log2(khinchine_A(Rational(2 * j - 2, j)));
    report.value = std::pow(2.0, log2_sum);
    if (m <= 13) {
        Rational exact = 0;
        for (int j = 2; j <= m; ++j)
            exact += Rational(1, 2 * (j - 1));
        report.log2 = exact;
        report.value = std::pow(2.0, to_double(exact));
    }
    report.provenance = "khinchine product, m=" + std::to_string(m);
    return report;
}

/// Upper bound prod_{j=2}^m Gamma(2 - 1/j)^{j/(2-2j)} for the complex BH
/// constant.
inline BoundReport bh_upper_complex(int m)
{
    if (m < 2 || m > 10'000)
        throw std::invalid_argument("bh_upper_complex: m outside [2, 1e4]");
    BoundReport report;
    report.kind = BoundKind::upper;
    double log_sum = 0.0;
    for (int j = 2; j <= m; ++j)
        log_sum += (static_cast<double>(j) / (2.0 - 2.0 * j))
                   * std::log(gamma_fn(2.0 - 1.0 / j));
    report.value = std::exp(log_sum);
    report.provenance = "gamma product, m=" + std::to_string(m);
    return report;
}

/// Lower bound 2^{1 - 1/m} for the real BH constant.
inline BoundReport bh_lower_real(int m)
{
    if (m < 2)
        throw std::invalid_argument("bh_lower_real: m must be >= 2");
    BoundReport report;
    report.kind = BoundKind::lower;
    report.log2 = Rational(m - 1, m);
    report.value = std::pow(2.0, to_double(*report.log2));
    report.provenance = "BH lower bound, m=" + std::to_string(m);
    return report;
}

/// (sqrt(2))^{m-1} for real scalars, (2/sqrt(pi))^{m-1} for complex.
inline BoundReport mixed_littlewood_upper(int m, ScalarField field)
{
    if (m < 2)
        throw std::invalid_argument("mixed_littlewood_upper: m must be >= 2");
    BoundReport report;
    report.kind = BoundKind::upper;
    if (field == ScalarField::real) {
        report.log2 = Rational(m - 1, 2);
        report.value = std::pow(2.0, to_double(*report.log2));
        report.provenance = "mixed Littlewood constant (real), m=" + std::to_string(m);
    } else {
        report.value = std::pow(2.0 / std::sqrt(std::numbers::pi), m - 1);
        report.provenance = "mixed Littlewood constant (complex), m=" + std::to_string(m);
    }
    return report;
}

namespace detail {

inline std::string q_tag(const ExponentVector& q)
{
    std::string s;
    for (int i = 1; i <= q.size(); ++i) {
        if (i > 1)
            s += ",";
        s += littlewood::to_string(q.slot(i));
    }
    return s;
}

/// Shared exponent: ((m-1) qhat_pivot + sum_{i != pivot} qhat_i) / prod - (m-1).
/// This equals the predicted T_m (or L_m) mixed norm divided by the exact
/// operator norm 2^{m-1}.
inline BoundReport extremal_lower_bound(int m, const ExponentVector& q, int pivot)
{
    if (q.size() != m)
        throw std::invalid_argument("lower bound: exponent count does not match m");
    if (!q.admissible(AdmissibilityMode::equality))
        throw std::invalid_argument("lower bound requires sum 1/q_i = (m+1)/2 exactly");
    Rational num = Rational(m - 1) * qhat(q, pivot);
    for (int i = 1; i <= m; ++i)
        if (i != pivot)
            num += qhat(q, i);
    BoundReport report;
    report.kind = BoundKind::lower;
    report.log2 = num / exponent_product(q) - (m - 1);
    report.value = std::pow(2.0, to_double(*report.log2));
    report.provenance = "extremal lower bound, pivot slot " + std::to_string(pivot) + ", m="
                        + std::to_string(m) + ", q=" + q_tag(q);
    return report;
}

} // namespace detail

/// Lower bound from the T_m family (pivot exponent in slot 1).
inline BoundReport lower_bound_pos1(int m, const ExponentVector& q)
{
    return detail::extremal_lower_bound(m, q, 1);
}

/// Lower bound from the L_m family (pivot exponent in slot 2).
inline BoundReport lower_bound_pos2(int m, const ExponentVector& q)
{
    return detail::extremal_lower_bound(m, q, 2);
}

} // namespace littlewood
