// littlewood - sup norms of integer multilinear forms over unit sup-norm
// balls, by exact enumeration of extreme-point sign patterns.

#pragma once

#include "littlewood/dyadic.hpp"
#include "littlewood/form.hpp"
#include "littlewood/mixednorm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace littlewood {

/// Exact norm value together with one attaining sign assignment per slot.
struct NormResult {
    std::int64_t value = 0;
    std::vector<std::vector<int>> witness; // entries +/-1
};

struct InequalityReport {
    double ratio = 0.0;
    bool holds = false;
    double bound_value = 0.0;
};

namespace detail {

/// Enumeration budget as a count of sign assignments; LITTLEWOOD_MAX_ENUM
/// overrides the default.
inline std::uint64_t enum_budget(std::uint64_t fallback)
{
    if (const char* env = std::getenv("LITTLEWOOD_MAX_ENUM")) {
        const unsigned long long v = std::strtoull(env, nullptr, 10);
        if (v > 0)
            return v;
    }
    return fallback;
}

struct BitLayout {
    std::vector<int> offsets; // bit offset of each enumerated slot
    int total_bits = 0;
};

inline BitLayout layout_slots(const std::vector<int>& dims, int slot_count)
{
    BitLayout layout;
    layout.offsets.reserve(static_cast<std::size_t>(slot_count));
    for (int k = 0; k < slot_count; ++k) {
        layout.offsets.push_back(layout.total_bits);
        layout.total_bits += dims[static_cast<std::size_t>(k)];
    }
    return layout;
}

/// Bit b set in an assignment means the corresponding sign is -1.
inline std::vector<std::vector<int>> signs_from_assignment(std::uint64_t a,
                                                           const std::vector<int>& dims,
                                                           const BitLayout& layout)
{
    std::vector<std::vector<int>> signs;
    signs.reserve(layout.offsets.size());
    for (std::size_t k = 0; k < layout.offsets.size(); ++k) {
        std::vector<int> s(static_cast<std::size_t>(dims[k]));
        for (int j = 0; j < dims[k]; ++j)
            s[static_cast<std::size_t>(j)] =
                (a >> (layout.offsets[k] + j)) & 1 ? -1 : 1;
        signs.push_back(std::move(s));
    }
    return signs;
}

struct PrefixScan {
    std::int64_t best = -1;
    std::uint64_t best_assignment = 0;
};

/// Scans assignments [lo, hi) over the first m-1 slots; the last slot is
/// resolved analytically (optimal signs are the signs of the inner sums).
/// First maximizer in ascending assignment order wins, which pins the
/// reported witness independently of how the range is chunked.
inline PrefixScan scan_prefix_range(const std::vector<std::uint64_t>& masks,
                                    const std::vector<std::int64_t>& coeffs,
                                    const std::vector<int>& last_index, int last_dim,
                                    std::uint64_t lo, std::uint64_t hi)
{
    PrefixScan out;
    std::vector<std::int64_t> accum(static_cast<std::size_t>(last_dim));
    for (std::uint64_t a = lo; a < hi; ++a) {
        std::fill(accum.begin(), accum.end(), 0);
        for (std::size_t e = 0; e < masks.size(); ++e) {
            const std::int64_t signed_c =
                (std::popcount(masks[e] & a) & 1) ? -coeffs[e] : coeffs[e];
            accum[static_cast<std::size_t>(last_index[e])] += signed_c;
        }
        std::int64_t value = 0;
        for (std::int64_t v : accum)
            value += v < 0 ? -v : v;
        if (value > out.best) {
            out.best = value;
            out.best_assignment = a;
        }
    }
    return out;
}

} // namespace detail

/// Exact sup norm with the last slot optimized analytically; enumeration
/// runs over sign patterns of the first m-1 slots only. The default guard
/// admits prefix spaces up to 2^24 assignments.
inline NormResult operator_norm(const MultilinearForm& form, int threads = 0)
{
    const int m = form.arity();
    const auto& dims = form.dims();

    if (m == 1) {
        NormResult r;
        std::vector<int> w(static_cast<std::size_t>(dims[0]), 1);
        for (const auto& [idx, c] : form.entries()) {
            r.value += c < 0 ? -c : c;
            w[static_cast<std::size_t>(idx[0] - 1)] = c < 0 ? -1 : 1;
        }
        r.witness.push_back(std::move(w));
        return r;
    }

    const auto layout = detail::layout_slots(dims, m - 1);
    const std::uint64_t budget = detail::enum_budget(std::uint64_t{1} << 24);
    if (layout.total_bits >= 63 || (std::uint64_t{1} << layout.total_bits) > budget)
        throw std::invalid_argument("operator_norm enumeration guard exceeded");
    const std::uint64_t space = std::uint64_t{1} << layout.total_bits;

    std::vector<std::uint64_t> masks;
    std::vector<std::int64_t> coeffs;
    std::vector<int> last_index;
    masks.reserve(form.nonzero_count());
    for (const auto& [idx, c] : form.entries()) {
        std::uint64_t mask = 0;
        for (int k = 0; k < m - 1; ++k)
            mask |= std::uint64_t{1}
                    << (layout.offsets[static_cast<std::size_t>(k)] + idx[static_cast<std::size_t>(k)] - 1);
        masks.push_back(mask);
        coeffs.push_back(c);
        last_index.push_back(idx[static_cast<std::size_t>(m - 1)] - 1);
    }

    unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads)
                                        : std::thread::hardware_concurrency();
    if (worker_count == 0)
        worker_count = 1;
    if (space < 4096)
        worker_count = 1;

    std::vector<detail::PrefixScan> partials(worker_count);
    {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (space + worker_count - 1) / worker_count;
        for (unsigned w = 0; w < worker_count; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(space, w * chunk);
            const std::uint64_t hi = std::min<std::uint64_t>(space, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                partials[w] = detail::scan_prefix_range(masks, coeffs, last_index,
                                                        dims[static_cast<std::size_t>(m - 1)], lo, hi);
            });
        }
        for (auto& t : pool)
            t.join();
    }
    // Merge in chunk order: (value, smallest assignment) is deterministic.
    detail::PrefixScan best;
    for (const auto& p : partials)
        if (p.best > best.best)
            best = p;

    NormResult result;
    result.value = best.best;
    result.witness = detail::signs_from_assignment(
        best.best_assignment, dims, detail::layout_slots(dims, m - 1));
    // Reconstruct the analytic last-slot signs; ties go to +1.
    std::vector<std::int64_t> accum(static_cast<std::size_t>(dims[static_cast<std::size_t>(m - 1)]));
    for (std::size_t e = 0; e < masks.size(); ++e) {
        const std::int64_t signed_c =
            (std::popcount(masks[e] & best.best_assignment) & 1) ? -coeffs[e] : coeffs[e];
        accum[static_cast<std::size_t>(last_index[e])] += signed_c;
    }
    std::vector<int> last(accum.size());
    for (std::size_t j = 0; j < accum.size(); ++j)
        last[j] = accum[j] < 0 ? -1 : 1;
    result.witness.push_back(std::move(last));
    return result;
}

/// Brute-force sup norm over sign patterns in every slot (test oracle).
/// Guarded at 2^20 assignments by default.
inline NormResult operator_norm_full(const MultilinearForm& form)
{
    const int m = form.arity();
    const auto& dims = form.dims();
    const auto layout = detail::layout_slots(dims, m);
    const std::uint64_t budget = detail::enum_budget(std::uint64_t{1} << 20);
    if (layout.total_bits >= 63 || (std::uint64_t{1} << layout.total_bits) > budget)
        throw std::invalid_argument("operator_norm_full enumeration guard exceeded");
    const std::uint64_t space = std::uint64_t{1} << layout.total_bits;

    std::vector<std::uint64_t> masks;
    std::vector<std::int64_t> coeffs;
    for (const auto& [idx, c] : form.entries()) {
        std::uint64_t mask = 0;
        for (int k = 0; k < m; ++k)
            mask |= std::uint64_t{1}
                    << (layout.offsets[static_cast<std::size_t>(k)] + idx[static_cast<std::size_t>(k)] - 1);
        masks.push_back(mask);
        coeffs.push_back(c);
    }

    std::int64_t best = -1;
    std::uint64_t best_assignment = 0;
    for (std::uint64_t a = 0; a < space; ++a) {
        std::int64_t value = 0;
        for (std::size_t e = 0; e < masks.size(); ++e)
            value += (std::popcount(masks[e] & a) & 1) ? -coeffs[e] : coeffs[e];
        if (value < 0)
            value = -value;
        if (value > best) {
            best = value;
            best_assignment = a;
        }
    }

    NormResult result;
    result.value = best < 0 ? 0 : best;
    result.witness = detail::signs_from_assignment(best_assignment, dims, layout);
    return result;
}

/// Checks mixed_norm(form, q) <= 2^{bound} * ||form|| and reports the ratio.
inline InequalityReport verify_inequality(const MultilinearForm& form, const ExponentVector& q,
                                          const DyadicScalar& bound)
{
    const NormResult norm = operator_norm(form);
    if (norm.value == 0)
        throw std::domain_error("verify_inequality: zero operator norm, ratio undefined");
    InequalityReport report;
    report.bound_value = bound.value();
    report.ratio = mixed_norm(form, q) / static_cast<double>(norm.value);
    report.holds = report.ratio <= report.bound_value + 1e-9;
    return report;
}

} // namespace littlewood
