// littlewood - nested mixed (q_1,...,q_m)-norms of coefficient tensors.
//
// The norm is the right-to-left fold
//
//   ( sum_{j_1} ( ... ( sum_{j_m} |c(j)|^{q_m} )^{q_{m-1}/q_m} ... )^{q_1/q_2} )^{1/q_1},
//
// innermost axis = last slot. Two evaluation paths: a compensated floating
// fold over the sparse entries, and an exact fold in the dyadic domain
// 2^{rational} that succeeds exactly when every axis sum collapses to a
// power of two (which the extremal families do at every level).

#pragma once

#include "littlewood/dyadic.hpp"
#include "littlewood/form.hpp"
#include "littlewood/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace littlewood {

enum class AdmissibilityMode { inequality, equality };

/// Exponent vector q in [1,2]^m with exact rational entries. Slot access
/// is 1-based to match the nested-norm indexing throughout.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<Rational> q) : q_(std::move(q))
    {
        if (q_.empty())
            throw std::invalid_argument("exponent vector must be nonempty");
        Rational recip_sum = 0;
        for (const Rational& qi : q_) {
            if (qi < 1 || qi > 2)
                throw std::invalid_argument("exponents must lie in [1,2]");
            recip_sum += 1 / qi;
        }
        const Rational target = Rational(size() + 1, 2);
        admissible_le_ = recip_sum <= target;
        admissible_eq_ = recip_sum == target;
    }

    static ExponentVector parse(const std::vector<std::string>& tokens)
    {
        std::vector<Rational> q;
        q.reserve(tokens.size());
        for (const auto& t : tokens)
            q.push_back(parse_rational(t));
        return ExponentVector(std::move(q));
    }

    int size() const { return static_cast<int>(q_.size()); }
    const Rational& slot(int i) const { return q_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Rational>& values() const { return q_; }

    bool admissible(AdmissibilityMode mode) const
    {
        return mode == AdmissibilityMode::equality ? admissible_eq_ : admissible_le_;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b)
    {
        return a.q_ == b.q_;
    }

private:
    std::vector<Rational> q_;
    bool admissible_le_ = false;
    bool admissible_eq_ = false;
};

inline bool admissible(const ExponentVector& q, AdmissibilityMode mode)
{
    return q.admissible(mode);
}

/// qhat_{i,m} = q_1 q_2 ... q_m / q_i (exact).
inline Rational qhat(const ExponentVector& q, int i)
{
    if (i < 1 || i > q.size())
        throw std::out_of_range("qhat slot index");
    Rational prod = 1;
    for (int k = 1; k <= q.size(); ++k)
        if (k != i)
            prod *= q.slot(k);
    return prod;
}

inline Rational exponent_product(const ExponentVector& q)
{
    Rational prod = 1;
    for (const Rational& qi : q.values())
        prod *= qi;
    return prod;
}

namespace detail {

using Entry = std::pair<const MultiIndex*, std::int64_t>;

struct KahanSum {
    double total = 0.0;
    double carry = 0.0;
    void add(double x)
    {
        const double y = x - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

/// Folds entries[lo, hi) sharing a fixed index prefix of length `depth`.
/// Returns sum_{j_{depth+1}} term, where the innermost term is |c|^{q_m}
/// and interior terms are child sums raised to q_{k}/q_{k+1}.
inline double float_fold(const std::vector<Entry>& entries, std::size_t lo, std::size_t hi,
                         int depth, const ExponentVector& q)
{
    const int m = q.size();
    KahanSum sum;
    std::size_t i = lo;
    while (i < hi) {
        const int j = (*entries[i].first)[static_cast<std::size_t>(depth)];
        std::size_t end = i;
        while (end < hi && (*entries[end].first)[static_cast<std::size_t>(depth)] == j)
            ++end;
        if (depth == m - 1) {
            // single entry per full index
            sum.add(std::pow(std::abs(static_cast<double>(entries[i].second)),
                             to_double(q.slot(m))));
        } else {
            const double inner = float_fold(entries, i, end, depth + 1, q);
            sum.add(std::pow(inner, to_double(q.slot(depth + 1) / q.slot(depth + 2))));
        }
        i = end;
    }
    return sum.total;
}

/// Exact analogue of float_fold. Every axis sum must consist of terms with
/// one common exponent and a power-of-two term count.
inline std::optional<DyadicScalar> dyadic_fold(const std::vector<Entry>& entries, std::size_t lo,
                                               std::size_t hi, int depth, const ExponentVector& q)
{
    const int m = q.size();
    std::optional<Rational> shared_log2;
    std::size_t terms = 0;
    std::size_t i = lo;
    while (i < hi) {
        const int j = (*entries[i].first)[static_cast<std::size_t>(depth)];
        std::size_t end = i;
        while (end < hi && (*entries[end].first)[static_cast<std::size_t>(depth)] == j)
            ++end;
        Rational term_log2;
        if (depth == m - 1) {
            const std::int64_t c = entries[i].second;
            if (c != 1 && c != -1)
                throw std::invalid_argument("mixed_norm_exact requires coefficients in {-1,0,+1}");
            term_log2 = 0; // |c|^{q_m} = 1
        } else {
            auto inner = dyadic_fold(entries, i, end, depth + 1, q);
            if (!inner)
                return std::nullopt; // all-cancelling fibers cannot occur on sparse input
            term_log2 = inner->log2() * (q.slot(depth + 1) / q.slot(depth + 2));
        }
        if (shared_log2) {
            if (*shared_log2 != term_log2)
                throw NotDyadicError("axis sum mixes distinct dyadic exponents");
        } else {
            shared_log2 = term_log2;
        }
        ++terms;
        i = end;
    }
    if (terms == 0)
        return std::nullopt;
    if ((terms & (terms - 1)) != 0)
        throw NotDyadicError("axis sum term count is not a power of two");
    int log2_count = 0;
    while ((std::size_t{1} << log2_count) < terms)
        ++log2_count;
    return DyadicScalar(*shared_log2 + log2_count);
}

inline std::vector<Entry> sorted_entries(const MultilinearForm& form)
{
    std::vector<Entry> entries;
    entries.reserve(form.nonzero_count());
    for (const auto& [idx, c] : form.entries())
        entries.emplace_back(&idx, c); // std::map iterates in lexicographic index order
    return entries;
}

} // namespace detail

/// Floating-point nested mixed norm with compensated summation per axis.
inline double mixed_norm(const MultilinearForm& form, const ExponentVector& q)
{
    if (q.size() != form.arity())
        throw std::invalid_argument("exponent count does not match arity");
    if (form.nonzero_count() == 0)
        return 0.0;
    const auto entries = detail::sorted_entries(form);
    const double outer = detail::float_fold(entries, 0, entries.size(), 0, q);
    return std::pow(outer, to_double(1 / q.slot(1)));
}

/// Exact mixed norm in the dyadic domain; requires coefficients in
/// {-1,0,+1} and throws NotDyadicError when some intermediate sum does not
/// collapse to a single power of two.
inline DyadicScalar mixed_norm_exact(const MultilinearForm& form, const ExponentVector& q)
{
    if (q.size() != form.arity())
        throw std::invalid_argument("exponent count does not match arity");
    const auto entries = detail::sorted_entries(form);
    auto outer = detail::dyadic_fold(entries, 0, entries.size(), 0, q);
    if (!outer)
        throw NotDyadicError("zero form has no dyadic mixed norm");
    return outer->pow(1 / q.slot(1));
}

/// Closed-form mixed norm of T_m:
/// log2 = ((m-1) qhat_1 + sum_{i=2}^m qhat_i) / (q_1 ... q_m).
inline DyadicScalar predicted_mixed_norm_T(int m, const ExponentVector& q)
{
    if (q.size() != m)
        throw std::invalid_argument("exponent count does not match arity");
    Rational num = Rational(m - 1) * qhat(q, 1);
    for (int i = 2; i <= m; ++i)
        num += qhat(q, i);
    return DyadicScalar(num / exponent_product(q));
}

/// Closed-form mixed norm of L_m; slot 2 takes over the (m-1)-weighted role.
inline DyadicScalar predicted_mixed_norm_L(int m, const ExponentVector& q)
{
    if (q.size() != m)
        throw std::invalid_argument("exponent count does not match arity");
    Rational num = Rational(m - 1) * qhat(q, 2);
    for (int i = 1; i <= m; ++i)
        if (i != 2)
            num += qhat(q, i);
    return DyadicScalar(num / exponent_product(q));
}

namespace detail {

/// All exponent vectors with reciprocals a_i/denom, a_i integral,
/// q_i in [1,2] and sum 1/q_i = (m+1)/2 exactly, in lexicographic order.
inline std::vector<ExponentVector> equality_grid_at_denom(int m, int denom)
{
    std::vector<ExponentVector> grid;
    std::vector<int> numer(static_cast<std::size_t>(m)); // reciprocal numerators a_i, q_i = denom/a_i
    const int lo = denom / 2, hi = denom;
    const int target = denom * (m + 1) / 2;
    auto emit = [&] {
        std::vector<Rational> q;
        q.reserve(static_cast<std::size_t>(m));
        for (int a : numer)
            q.emplace_back(denom, a);
        grid.emplace_back(std::move(q));
    };
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k == m - 1) {
            if (remaining >= lo && remaining <= hi) {
                numer.back() = remaining;
                emit();
            }
            return;
        }
        for (int a = lo; a <= hi; ++a) {
            if (remaining - a < lo * (m - 1 - k) || remaining - a > hi * (m - 1 - k))
                continue;
            numer[static_cast<std::size_t>(k)] = a;
            self(self, k + 1, remaining - a);
        }
    };
    rec(rec, 0, target);
    return grid;
}

} // namespace detail

/// Deterministic grid of at least min_count admissible equality-mode
/// exponent vectors (the denominator is refined until enough exist), then
/// stride-sampled down to at most max_count.
inline std::vector<ExponentVector> admissible_equality_grid(int m, std::size_t min_count = 20,
                                                            std::size_t max_count = 40)
{
    if (m < 1)
        throw std::invalid_argument("admissible_equality_grid needs m >= 1");
    std::vector<ExponentVector> grid;
    for (int denom = 8; denom <= 256; denom *= 2) {
        grid = detail::equality_grid_at_denom(m, denom);
        if (grid.size() >= min_count)
            break;
    }
    if (grid.size() > max_count) {
        std::vector<ExponentVector> sampled;
        sampled.reserve(max_count);
        for (std::size_t i = 0; i < max_count; ++i)
            sampled.push_back(grid[i * grid.size() / max_count]);
        grid = std::move(sampled);
    }
    return grid;
}

} // namespace littlewood
