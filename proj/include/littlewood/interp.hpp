// littlewood - exponent interpolation: exact convex-hull certificates,
// applicability predicates for the Khinchine-product upper bounds, and the
// sharp 3-linear families.

#pragma once

#include "littlewood/constants.hpp"
#include "littlewood/mixednorm.hpp"
#include "littlewood/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace littlewood {

/// Convex weights theta_k >= 0 with sum 1 witnessing hull membership.
struct HullCertificate {
    std::vector<Rational> weights;
};

enum class TrilinearVariant { pos1, pos2 };

/// Parameters (tau, theta) in [0,1]^2 for the sharp 3-linear families.
struct TrilinearParams {
    TrilinearParams(Rational tau_, Rational theta_, TrilinearVariant variant_)
        : tau(std::move(tau_)), theta(std::move(theta_)), variant(variant_)
    {
        if (tau < 0 || tau > 1 || theta < 0 || theta > 1)
            throw std::invalid_argument("trilinear parameters must lie in [0,1]");
    }

    Rational tau;
    Rational theta;
    TrilinearVariant variant;
};

namespace detail {

/// Exact Phase-I simplex feasibility solve for A x = b, x >= 0, with
/// Bland's rule for anti-cycling. Returns the feasible x or nullopt.
inline std::optional<std::vector<Rational>> phase1_feasible(std::vector<std::vector<Rational>> A,
                                                            std::vector<Rational> b)
{
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        if (b[r] < 0) {
            b[r] = -b[r];
            for (auto& v : A[r])
                v = -v;
        }
    }
    // Tableau columns: structural vars, artificial vars, RHS.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(width, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            tab[r][c] = A[r][c];
        tab[r][cols + r] = 1;
        tab[r][width - 1] = b[r];
        basis[r] = cols + r;
    }
    // Reduced-cost row for minimizing the artificial sum.
    std::vector<Rational> obj(width, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < width; ++c)
            obj[c] -= tab[r][c];
    for (std::size_t r = 0; r < rows; ++r)
        obj[cols + r] = 0;

    while (true) {
        // Bland: entering = smallest index with negative reduced cost.
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == width)
            break;
        // Ratio test, smallest basis index on ties.
        std::size_t leave = rows;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0)
                continue;
            const Rational ratio = tab[r][width - 1] / tab[r][enter];
            if (leave == rows || ratio < best_ratio
                || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows)
            return std::nullopt; // unbounded phase-I cannot happen; defensive exit
        const Rational pivot = tab[leave][enter];
        for (auto& v : tab[leave])
            v /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0)
                continue;
            const Rational factor = tab[r][enter];
            for (std::size_t c = 0; c < width; ++c)
                tab[r][c] -= factor * tab[leave][c];
        }
        const Rational ofactor = obj[enter];
        if (ofactor != 0)
            for (std::size_t c = 0; c < width; ++c)
                obj[c] -= ofactor * tab[leave][c];
        basis[leave] = enter;
    }

    Rational artificial_sum = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= cols)
            artificial_sum += tab[r][width - 1];
    if (artificial_sum != 0)
        return std::nullopt;

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < cols)
            x[basis[r]] = tab[r][width - 1];
    return x;
}

} // namespace detail

/// Re-verifies a certificate by exact substitution.
inline bool certificate_valid(const HullCertificate& cert, const std::vector<Rational>& point,
                              const std::vector<std::vector<Rational>>& vertices)
{
    if (cert.weights.size() != vertices.size())
        return false;
    Rational total = 0;
    for (const Rational& w : cert.weights) {
        if (w < 0)
            return false;
        total += w;
    }
    if (total != 1)
        return false;
    for (std::size_t i = 0; i < point.size(); ++i) {
        Rational coord = 0;
        for (std::size_t k = 0; k < vertices.size(); ++k)
            coord += cert.weights[k] * vertices[k][i];
        if (coord != point[i])
            return false;
    }
    return true;
}

/// Exact hull membership: finds convex weights with
/// sum_k theta_k vertex_k = point, or nullopt when infeasible.
inline std::optional<HullCertificate> in_convex_hull(const std::vector<Rational>& point,
                                                     const std::vector<std::vector<Rational>>& vertices)
{
    if (vertices.empty())
        return std::nullopt;
    const std::size_t dim = point.size();
    for (const auto& v : vertices)
        if (v.size() != dim)
            throw std::invalid_argument("vertex dimension does not match point");

    std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(vertices.size()));
    std::vector<Rational> b(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < vertices.size(); ++k)
            A[i][k] = vertices[k][i];
        b[i] = point[i];
    }
    for (std::size_t k = 0; k < vertices.size(); ++k)
        A[dim][k] = 1;
    b[dim] = 1;

    auto x = detail::phase1_feasible(std::move(A), std::move(b));
    if (!x)
        return std::nullopt;
    HullCertificate cert{std::move(*x)};
    if (!certificate_valid(cert, point, vertices))
        throw std::logic_error("simplex returned an invalid hull certificate");
    return cert;
}

/// Lemma-style predicate: some q_i >= (2m-2)/m while all other slots are
/// equal to each other.
inline bool lemma21_applies(int m, const ExponentVector& q)
{
    if (q.size() != m)
        throw std::invalid_argument("exponent count does not match m");
    if (!q.admissible(AdmissibilityMode::equality))
        throw std::invalid_argument("lemma21_applies requires an equality-mode exponent vector");
    const Rational threshold(2 * m - 2, m);
    for (int i = 1; i <= m; ++i) {
        if (q.slot(i) < threshold)
            continue;
        bool others_equal = true;
        const Rational* common = nullptr;
        for (int k = 1; k <= m; ++k) {
            if (k == i)
                continue;
            if (!common)
                common = &q.slot(k);
            else if (q.slot(k) != *common)
                others_equal = false;
        }
        if (others_equal)
            return true;
    }
    return false;
}

/// Theorem-style predicate: max q_i < (2m^2 - 4m + 2)/(m^2 - m - 1).
inline bool thm23_applies(int m, const ExponentVector& q)
{
    if (q.size() != m)
        throw std::invalid_argument("exponent count does not match m");
    if (!q.admissible(AdmissibilityMode::equality))
        throw std::invalid_argument("thm23_applies requires an equality-mode exponent vector");
    const Rational threshold(2 * m * m - 4 * m + 2, m * m - m - 1);
    for (int i = 1; i <= m; ++i)
        if (q.slot(i) >= threshold)
            return false;
    return true;
}

inline std::vector<Rational> reciprocals(const ExponentVector& q)
{
    std::vector<Rational> r;
    r.reserve(static_cast<std::size_t>(q.size()));
    for (const Rational& qi : q.values())
        r.push_back(1 / qi);
    return r;
}

/// Upper bound via interpolation: when every anchor passes one of the two
/// predicates and 1/q lies in the hull of the anchor reciprocals, the
/// Khinchine product bounds C_{m,q}. Absent means not established by this
/// route, never that the bound is false.
inline std::optional<BoundReport> interpolated_upper(int m, const ExponentVector& q,
                                                     const std::vector<ExponentVector>& anchors)
{
    if (anchors.empty())
        return std::nullopt;
    for (const auto& a : anchors) {
        if (!a.admissible(AdmissibilityMode::equality))
            throw std::invalid_argument("interpolation anchors must be equality-mode");
        if (!lemma21_applies(m, a) && !thm23_applies(m, a))
            return std::nullopt;
    }
    std::vector<std::vector<Rational>> vertex_recips;
    vertex_recips.reserve(anchors.size());
    for (const auto& a : anchors)
        vertex_recips.push_back(reciprocals(a));
    auto cert = in_convex_hull(reciprocals(q), vertex_recips);
    if (!cert)
        return std::nullopt;
    BoundReport report = bh_upper_real(m);
    report.provenance += ", hull weights (";
    for (std::size_t k = 0; k < cert->weights.size(); ++k) {
        if (k)
            report.provenance += ",";
        report.provenance += to_string(cert->weights[k]);
    }
    report.provenance += ")";
    return report;
}

/// Coordinate-wise harmonic combination 1/q_i = sum_k theta_k / q_i(k).
inline ExponentVector interpolate_exponents(const std::vector<ExponentVector>& anchors,
                                            const std::vector<Rational>& weights)
{
    if (anchors.empty() || anchors.size() != weights.size())
        throw std::invalid_argument("anchor and weight counts must match and be nonempty");
    Rational total = 0;
    for (const Rational& w : weights) {
        if (w < 0)
            throw std::invalid_argument("interpolation weights must be nonnegative");
        total += w;
    }
    if (total != 1)
        throw std::invalid_argument("interpolation weights must sum to 1");
    const int m = anchors.front().size();
    std::vector<Rational> q;
    q.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        Rational recip = 0;
        for (std::size_t k = 0; k < anchors.size(); ++k) {
            if (anchors[k].size() != m)
                throw std::invalid_argument("anchors must share one arity");
            recip += weights[k] / anchors[k].slot(i);
        }
        q.push_back(1 / recip);
    }
    return ExponentVector(std::move(q));
}

/// The sharp 3-linear exponent family
/// (4/(theta+3), 4/(2+tau-theta tau), 4/(3+theta tau-theta-tau)); the pos2
/// variant swaps the first two slots. Always equality-admissible.
inline ExponentVector trilinear_family_q(const TrilinearParams& p)
{
    const Rational& t = p.tau;
    const Rational& th = p.theta;
    Rational q1 = Rational(4) / (th + 3);
    Rational q2 = Rational(4) / (2 + t - th * t);
    Rational q3 = Rational(4) / (3 + th * t - th - t);
    if (p.variant == TrilinearVariant::pos2)
        std::swap(q1, q2);
    ExponentVector q({q1, q2, q3});
    if (!q.admissible(AdmissibilityMode::equality))
        throw std::logic_error("trilinear family must be equality-admissible");
    return q;
}

/// Sharp constant 2^{(theta+3)/4} of the 3-linear family. Labeled sharp
/// only after both legs check out exactly: the extremal lower bound at the
/// family point reproduces the exponent, and the two-anchor interpolation
/// (constant-2 point and theta=0 family) gives the same exponent from
/// above via an exact hull certificate.
inline BoundReport trilinear_sharp_constant(const TrilinearParams& p)
{
    const ExponentVector q = trilinear_family_q(p);
    const Rational expected = (p.theta + 3) / 4;

    const BoundReport lower = p.variant == TrilinearVariant::pos1 ? lower_bound_pos1(3, q)
                                                                  : lower_bound_pos2(3, q);
    if (!lower.log2 || *lower.log2 != expected)
        throw std::logic_error("trilinear lower-bound identity failed");

    // Upper leg: 1/q = theta * (1/anchor) + (1-theta) * (1/family(theta=0)),
    // with constants 2 and 2^{3/4} at the two anchors.
    const ExponentVector unit_anchor =
        p.variant == TrilinearVariant::pos1
            ? ExponentVector({Rational(1), Rational(2), Rational(2)})
            : ExponentVector({Rational(2), Rational(1), Rational(2)});
    const ExponentVector base_family =
        trilinear_family_q(TrilinearParams(p.tau, Rational(0), p.variant));
    auto cert = in_convex_hull(reciprocals(q),
                               {reciprocals(unit_anchor), reciprocals(base_family)});
    if (!cert)
        throw std::logic_error("trilinear upper-bound interpolation certificate failed");
    const Rational upper_log2 = cert->weights[0] * 1 + cert->weights[1] * Rational(3, 4);
    if (upper_log2 != expected)
        throw std::logic_error("trilinear upper-bound exponent mismatch");

    BoundReport report;
    report.kind = BoundKind::sharp;
    report.log2 = expected;
    report.value = std::pow(2.0, to_double(expected));
    report.provenance = std::string("sharp 3-linear constant, variant ")
                        + (p.variant == TrilinearVariant::pos1 ? "pos1" : "pos2") + ", tau="
                        + to_string(p.tau) + ", theta=" + to_string(p.theta)
                        + ", lower: " + lower.provenance
                        + ", upper: interpolation of 2 and 2^(3/4)";
    return report;
}

} // namespace littlewood
