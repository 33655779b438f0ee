// littlewood - sparse integer-coefficient multilinear forms on finite
// sup-norm spaces.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace littlewood {

/// 1-based index tuple (j_1,...,j_m) into a form's coefficient tensor.
using MultiIndex = std::vector<int>;

/// A backward shift B^amount applied to one argument slot:
/// B^s e_j = e_{j-s} when j > s, the zero vector otherwise.
struct ShiftSpec {
    int slot = 1;   // 1-based
    int amount = 0; // nonnegative
};

/// Real m-linear form stored as a sparse map MultiIndex -> integer
/// coefficient. Zero coefficients are never stored; arity and dims are
/// fixed at construction.
class MultilinearForm {
public:
    using CoeffMap = std::map<MultiIndex, std::int64_t>;

    explicit MultilinearForm(std::vector<int> dims) : dims_(std::move(dims))
    {
        if (dims_.empty())
            throw std::invalid_argument("form needs at least one slot");
        for (int d : dims_)
            if (d < 1)
                throw std::invalid_argument("slot dimensions must be positive");
    }

    int arity() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    const CoeffMap& entries() const { return coeffs_; }
    std::size_t nonzero_count() const { return coeffs_.size(); }

    bool valid_index(const MultiIndex& idx) const
    {
        if (idx.size() != dims_.size())
            return false;
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] < 1 || idx[k] > dims_[k])
                return false;
        return true;
    }

    /// Adds c to the coefficient at idx, dropping the entry if it cancels.
    void add(const MultiIndex& idx, std::int64_t c)
    {
        check_index(idx);
        if (c == 0)
            return;
        auto [it, inserted] = coeffs_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    /// Inserts a coefficient that must not already be present. The T_m/L_m
    /// builders use this to assert the two recursion branches have disjoint
    /// supports.
    void insert_fresh(const MultiIndex& idx, std::int64_t c)
    {
        check_index(idx);
        if (c == 0)
            return;
        auto [it, inserted] = coeffs_.try_emplace(idx, c);
        if (!inserted)
            throw std::logic_error("duplicate support index in form construction");
    }

    std::int64_t coefficient(const MultiIndex& idx) const
    {
        check_index(idx);
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? 0 : it->second;
    }

private:
    void check_index(const MultiIndex& idx) const
    {
        if (!valid_index(idx))
            throw std::out_of_range("multi-index out of range for form dims");
    }

    std::vector<int> dims_;
    CoeffMap coeffs_;
};

/// Sum over stored coefficients of coeff * prod_k args[k][j_k - 1].
inline double evaluate(const MultilinearForm& form, const std::vector<std::vector<double>>& args)
{
    if (static_cast<int>(args.size()) != form.arity())
        throw std::invalid_argument("argument count does not match arity");
    for (int k = 0; k < form.arity(); ++k)
        if (static_cast<int>(args[k].size()) != form.dims()[k])
            throw std::invalid_argument("argument length does not match slot dimension");
    double total = 0.0;
    for (const auto& [idx, c] : form.entries()) {
        double term = static_cast<double>(c);
        for (std::size_t k = 0; k < idx.size(); ++k)
            term *= args[k][static_cast<std::size_t>(idx[k] - 1)];
        total += term;
    }
    return total;
}

/// Exact integer evaluation at integer arguments (sign vectors in particular).
inline std::int64_t evaluate_exact(const MultilinearForm& form,
                                   const std::vector<std::vector<int>>& args)
{
    if (static_cast<int>(args.size()) != form.arity())
        throw std::invalid_argument("argument count does not match arity");
    for (int k = 0; k < form.arity(); ++k)
        if (static_cast<int>(args[k].size()) != form.dims()[k])
            throw std::invalid_argument("argument length does not match slot dimension");
    std::int64_t total = 0;
    for (const auto& [idx, c] : form.entries()) {
        std::int64_t term = c;
        for (std::size_t k = 0; k < idx.size(); ++k)
            term *= args[k][static_cast<std::size_t>(idx[k] - 1)];
        total += term;
    }
    return total;
}

/// Entry distribution for random_form: either a dense +/-1 fill or a
/// uniform integer range [lo, hi] (which may produce structural zeros).
struct EntrySpec {
    static EntrySpec signs() { return EntrySpec{true, -1, 1}; }
    static EntrySpec range(std::int64_t lo, std::int64_t hi) { return EntrySpec{false, lo, hi}; }

    bool sign_fill;
    std::int64_t lo;
    std::int64_t hi;
};

/// Reproducible dense pseudo-random form; identical seeds yield identical
/// coefficient maps on every platform (the generator stream is consumed in
/// index order and reduced without distribution objects).
inline MultilinearForm random_form(const std::vector<int>& dims, std::uint64_t seed,
                                   EntrySpec entries = EntrySpec::signs())
{
    std::int64_t total = 1;
    for (int d : dims) {
        total *= d;
        if (total > 1'000'000)
            throw std::invalid_argument("random_form size guard exceeded (product of dims > 1e6)");
    }
    if (entries.lo > entries.hi)
        throw std::invalid_argument("empty entry range");

    std::mt19937_64 rng(seed);
    MultilinearForm form(dims);
    MultiIndex idx(dims.size(), 1);
    const std::uint64_t span = static_cast<std::uint64_t>(entries.hi - entries.lo + 1);
    for (std::int64_t n = 0; n < total; ++n) {
        std::int64_t c;
        if (entries.sign_fill)
            c = (rng() & 1) ? 1 : -1;
        else
            c = entries.lo + static_cast<std::int64_t>(rng() % span);
        form.add(idx, c);
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            if (++idx[k] <= dims[k])
                break;
            idx[k] = 1;
        }
    }
    return form;
}

} // namespace littlewood
