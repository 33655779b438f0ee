// littlewood - the inductive extremal families T_m and L_m.
//
// T_2(x,y) = x_1 y_1 + x_1 y_2 + x_2 y_1 - x_2 y_2, and for m >= 3
//
//   T_m(x) = (x_1^(m) + x_2^(m)) T_{m-1}(x^(1),...,x^(m-1))
//          + (x_1^(m) - x_2^(m)) T_{m-1}(B^{s_1} x^(1),...,B^{s_{m-1}} x^(m-1)),
//
// with shifts s_1 = s_2 = 2^{m-2} and s_k = 2^{m-k} for k = 3..m-1.
// L_2 = T_2, and for m >= 3 L_m carries the (x_1 +/- x_2) factor in slot 1
// and feeds slots 2..m into T_{m-1} with the same shift list.
//
// B^s e_j = e_{j-s} when j > s and 0 otherwise, so on the coefficient
// tensor the shifted branch re-emits every T_{m-1} entry at indices
// translated by s_k; the two branches land on disjoint supports.

#pragma once

#include "littlewood/form.hpp"

#include <stdexcept>
#include <vector>

namespace littlewood {

inline constexpr int kMaxExtremalArity = 8;

namespace detail {

inline void check_extremal_arity(int m)
{
    if (m < 2 || m > kMaxExtremalArity)
        throw std::invalid_argument("extremal form arity must be in [2, 8]");
}

inline MultilinearForm t2()
{
    MultilinearForm f({2, 2});
    f.insert_fresh({1, 1}, 1);
    f.insert_fresh({1, 2}, 1);
    f.insert_fresh({2, 1}, 1);
    f.insert_fresh({2, 2}, -1);
    return f;
}

/// Shift amounts applied to the m-1 arguments of the inner T_{m-1} call.
inline std::vector<int> branch_shifts(int m)
{
    std::vector<int> s(static_cast<std::size_t>(m - 1));
    s[0] = 1 << (m - 2);
    if (m >= 3)
        s[1] = 1 << (m - 2);
    for (int k = 3; k <= m - 1; ++k)
        s[static_cast<std::size_t>(k - 1)] = 1 << (m - k);
    return s;
}

/// Reduced domain of T_m: (2^{m-1}, 2^{m-1}, 2^{m-2}, ..., 2^2, 2).
inline std::vector<int> t_dims(int m)
{
    if (m == 2)
        return {2, 2};
    std::vector<int> dims(static_cast<std::size_t>(m));
    dims[0] = dims[1] = 1 << (m - 1);
    for (int k = 3; k <= m; ++k)
        dims[static_cast<std::size_t>(k - 1)] = 1 << (m - k + 1);
    return dims;
}

/// Reduced domain of L_m: (2, 2^{m-1}, 2^{m-1}, 2^{m-2}, ..., 2^2).
inline std::vector<int> l_dims(int m)
{
    if (m == 2)
        return {2, 2};
    std::vector<int> dims(static_cast<std::size_t>(m));
    dims[0] = 2;
    dims[1] = dims[2] = 1 << (m - 1);
    for (int k = 4; k <= m; ++k)
        dims[static_cast<std::size_t>(k - 1)] = 1 << (m - k + 2);
    return dims;
}

} // namespace detail

/// Builds T_m on its reduced domain (full_domain widens every slot to
/// 2^{m-1}; the coefficients are identical either way).
inline MultilinearForm construct_T(int m, bool full_domain = false)
{
    detail::check_extremal_arity(m);
    std::vector<int> dims =
        full_domain ? std::vector<int>(static_cast<std::size_t>(m), 1 << (m - 1))
                    : detail::t_dims(m);
    if (m == 2) {
        MultilinearForm f(dims);
        const MultilinearForm base = detail::t2();
        for (const auto& [idx, c] : base.entries())
            f.insert_fresh(idx, c);
        return f;
    }

    const MultilinearForm prev = construct_T(m - 1);
    const std::vector<int> shift = detail::branch_shifts(m);
    MultilinearForm f(dims);
    MultiIndex idx(static_cast<std::size_t>(m));
    for (const auto& [jprev, c] : prev.entries()) {
        for (int jm = 1; jm <= 2; ++jm) {
            // Unshifted branch: both j_m coordinates enter with sign +1.
            for (int k = 0; k < m - 1; ++k)
                idx[static_cast<std::size_t>(k)] = jprev[static_cast<std::size_t>(k)];
            idx[static_cast<std::size_t>(m - 1)] = jm;
            f.insert_fresh(idx, c);
            // Shifted branch: sign flips with j_m = 2.
            for (int k = 0; k < m - 1; ++k)
                idx[static_cast<std::size_t>(k)] =
                    jprev[static_cast<std::size_t>(k)] + shift[static_cast<std::size_t>(k)];
            f.insert_fresh(idx, jm == 1 ? c : -c);
        }
    }
    return f;
}

/// Builds L_m on its reduced domain. L_2 coincides with T_2.
inline MultilinearForm construct_L(int m, bool full_domain = false)
{
    detail::check_extremal_arity(m);
    if (m == 2)
        return construct_T(2, full_domain);

    std::vector<int> dims =
        full_domain ? std::vector<int>(static_cast<std::size_t>(m), 1 << (m - 1))
                    : detail::l_dims(m);
    const MultilinearForm prev = construct_T(m - 1);
    const std::vector<int> shift = detail::branch_shifts(m);
    MultilinearForm f(dims);
    MultiIndex idx(static_cast<std::size_t>(m));
    for (const auto& [jprev, c] : prev.entries()) {
        for (int j1 = 1; j1 <= 2; ++j1) {
            idx[0] = j1;
            for (int k = 0; k < m - 1; ++k)
                idx[static_cast<std::size_t>(k + 1)] = jprev[static_cast<std::size_t>(k)];
            f.insert_fresh(idx, c);
            for (int k = 0; k < m - 1; ++k)
                idx[static_cast<std::size_t>(k + 1)] =
                    jprev[static_cast<std::size_t>(k)] + shift[static_cast<std::size_t>(k)];
            f.insert_fresh(idx, j1 == 1 ? c : -c);
        }
    }
    return f;
}

} // namespace littlewood
