#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "crdom/error.hpp"
#include "crdom/graph.hpp"

namespace crdom {

// Closed-form extremal values for cardinality-redundance.
//
//   M(n,k,r) / m(n,k,r): max / min edges over order-n graphs with CR = k and
//                        gamma_CR = r.
//   D(n,k,m) / d(n,k,m): max / min gamma_CR over order-n, size-m graphs with
//                        CR = k.
//
// A missing graph makes the value 0 by convention. Each result says whether
// it is a proved value, a proved nonexistence, or outside every known
// theorem, and names the result it rests on (`basis`).

enum class Quantity { max_edges, min_edges, max_gamma, min_gamma };

/// "M", "m", "D", "d".
constexpr std::string_view quantity_symbol(Quantity q) noexcept
{
    switch (q) {
    case Quantity::max_edges: return "M";
    case Quantity::min_edges: return "m";
    case Quantity::max_gamma: return "D";
    case Quantity::min_gamma: return "d";
    }
    return "?";
}

inline std::optional<Quantity> parse_quantity(std::string_view s) noexcept
{
    if (s == "M")
        return Quantity::max_edges;
    if (s == "m")
        return Quantity::min_edges;
    if (s == "D")
        return Quantity::max_gamma;
    if (s == "d")
        return Quantity::min_gamma;
    return std::nullopt;
}

/// True when the third parameter is a domination number r rather than an
/// edge count m.
constexpr bool indexed_by_gamma(Quantity q) noexcept { return q == Quantity::max_edges || q == Quantity::min_edges; }

struct ExtremalQuery {
    Quantity quantity;
    int n;
    int k;
    std::int64_t third; ///< r for M and m, the edge count for D and d
};

enum class ValueStatus { value, zero_by_nonexistence, not_covered };

constexpr std::string_view status_name(ValueStatus s) noexcept
{
    switch (s) {
    case ValueStatus::value: return "Value";
    case ValueStatus::zero_by_nonexistence: return "ZeroByNonexistence";
    case ValueStatus::not_covered: return "NotCovered";
    }
    return "?";
}

/// Tags naming the result each value rests on. They double as theorem tags
/// for verification.
namespace basis {
    inline constexpr std::string_view max_edges_cr0 = "Mn0r";
    inline constexpr std::string_view min_edges_cr0 = "mn0r";
    inline constexpr std::string_view max_gamma_cr0 = "Dn0m";
    inline constexpr std::string_view min_gamma_cr0 = "dn0m";
    inline constexpr std::string_view empty_graph = "empty-graph";
    inline constexpr std::string_view max_edges_cr1 = "Mn1r";
    inline constexpr std::string_view min_edges_cr1 = "mn1r";
    inline constexpr std::string_view max_gamma_cr1 = "Dn1r";
    inline constexpr std::string_view min_gamma_cr1 = "dn1m";
    inline constexpr std::string_view max_edges_gamma2 = "Mnk2";
    inline constexpr std::string_view max_edges_bound = "Mnkr";
    inline constexpr std::string_view max_edges_cr2 = "Mn2r";
    inline constexpr std::string_view max_gamma_cr2_small = "dn2msmall";
    inline constexpr std::string_view max_gamma_cr2_large = "dn2mlarge";
    inline constexpr std::string_view gamma_at_least_2 = "gammageq2";
    inline constexpr std::string_view cr_bound = "crbnd";
    inline constexpr std::string_view cr1_bound = "prop1";
    inline constexpr std::string_view cr2_bound = "cr2bnd";
    inline constexpr std::string_view none = "";
} // namespace basis

struct ExtremalValue {
    ValueStatus status = ValueStatus::not_covered;
    std::optional<std::int64_t> value; ///< present iff status != not_covered
    std::string_view basis = basis::none;

    static ExtremalValue of(std::int64_t v, std::string_view why) { return {ValueStatus::value, v, why}; }
    static ExtremalValue zero(std::string_view why) { return {ValueStatus::zero_by_nonexistence, 0, why}; }
    static ExtremalValue uncovered() { return {}; }

    bool covered() const noexcept { return status != ValueStatus::not_covered; }

    friend bool operator==(const ExtremalValue&, const ExtremalValue&) = default;
};

/// C(x, 2), zero for x < 2.
constexpr std::int64_t choose2(std::int64_t x) noexcept { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Orders above this are rejected to keep every intermediate in range.
inline constexpr int max_formula_order = 1 << 20;

/// Largest k for which a graph of order n can have CR = k: n-2 for even n,
/// n-3 for odd n (n >= 2).
constexpr int max_cr(int n) noexcept { return n % 2 == 0 ? n - 2 : n - 3; }

namespace detail {

    inline void check_order(int n)
    {
        if (n < 2 || n > max_formula_order)
            throw DomainError("order n=" + std::to_string(n) + " outside [2, " + std::to_string(max_formula_order) +
                              "]");
    }

    inline void check_cr(int n, int k)
    {
        if (k < 0 || k > n)
            throw DomainError("k=" + std::to_string(k) + " outside [0, n=" + std::to_string(n) + "]");
    }

    inline void check_gamma(int n, std::int64_t r)
    {
        if (r < 1 || r > n)
            throw DomainError("r=" + std::to_string(r) + " outside [1, n=" + std::to_string(n) + "]");
    }

    inline void check_size(int n, std::int64_t m)
    {
        if (m < 0 || m > choose2(n))
            throw DomainError("m=" + std::to_string(m) + " outside [0, C(n,2)=" + std::to_string(choose2(n)) + "]");
    }

    /// Nonexistence that depends only on (n, k).
    inline std::optional<ExtremalValue> impossible_cr(int n, int k)
    {
        if (k == 0)
            return std::nullopt;
        if (k > max_cr(n))
            return ExtremalValue::zero(basis::cr_bound);
        if (k == 1 && n < 5)
            return ExtremalValue::zero(basis::cr1_bound);
        return std::nullopt;
    }

    /// Nonexistence that depends on (n, k, r).
    inline std::optional<ExtremalValue> impossible_gamma(int n, int k, std::int64_t r)
    {
        if (auto z = impossible_cr(n, k))
            return z;
        if (k >= 1 && r < 2)
            return ExtremalValue::zero(basis::gamma_at_least_2);
        if (k == 1 && r >= n - 2)
            return ExtremalValue::zero(basis::cr1_bound);
        if (k == 2 && n >= 5 && r >= n - 1)
            return ExtremalValue::zero(basis::cr2_bound);
        return std::nullopt;
    }

    /// Unique r with C(r,2) < m <= C(r+1,2), for m >= 1.
    inline std::int64_t triangular_bracket(std::int64_t m)
    {
        std::int64_t r = 1;
        while (choose2(r + 1) < m)
            ++r;
        return r;
    }

} // namespace detail

/// The bound on |E(G)| for CR = k, gamma_CR = r >= 3 and a gamma_CR-set
/// whose induced subgraph has b non-isolated vertices.
inline std::int64_t bbnd_upper_bound(int n, int k, int r, int b)
{
    detail::check_order(n);
    if (n < 5 || k < 2 || k > max_cr(n) || r < 3 || r > n || b < 0 || b > k || b > r)
        throw DomainError("bbnd_upper_bound needs n>=5, 2<=k<=" + std::to_string(max_cr(n)) +
                          ", 3<=r<=n, 0<=b<=min(k,r); got n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          " r=" + std::to_string(r) + " b=" + std::to_string(b));
    const std::int64_t outside = k - b;
    std::int64_t bound = choose2(b) + static_cast<std::int64_t>(r - 2) * outside + choose2(n - r + 1);
    if (r <= n - r - outside)
        bound += outside / 2;
    return bound;
}

/// A(j) = 2(j-2) + C(n-j+1, 2), the bracket function for CR = 2.
inline std::int64_t a_bracket(int n, int j)
{
    detail::check_order(n);
    if (j < 2 || j > n - 2)
        throw DomainError("a_bracket needs 2 <= j <= n-2; got n=" + std::to_string(n) + " j=" + std::to_string(j));
    return 2 * static_cast<std::int64_t>(j - 2) + choose2(n - j + 1);
}

/// max over r >= 2 of M(n,k,r) = C(n-1,2) + floor(k/2).
inline std::int64_t universal_max_edges(int n, int k)
{
    detail::check_order(n);
    if (n < 5 || k < 0 || k > max_cr(n))
        throw DomainError("universal_max_edges needs n>=5 and 0<=k<=" + std::to_string(max_cr(n)) +
                          "; got n=" + std::to_string(n) + " k=" + std::to_string(k));
    return choose2(n - 1) + k / 2;
}

/// M(n,k,r).
inline ExtremalValue max_edges(int n, int k, std::int64_t r)
{
    detail::check_order(n);
    detail::check_cr(n, k);
    detail::check_gamma(n, r);
    if (auto z = detail::impossible_gamma(n, k, r))
        return *z;

    if (k == 0)
        return r <= n - 1 ? ExtremalValue::of(choose2(n - r + 1), basis::max_edges_cr0) : ExtremalValue::uncovered();
    if (k == 1)
        return ExtremalValue::of(choose2(n - r) + (n - 2), basis::max_edges_cr1);
    if (n < 5)
        return ExtremalValue::uncovered();
    if (r == 2)
        return ExtremalValue::of(choose2(n - 1) + k / 2, basis::max_edges_gamma2);
    if (k == 2) {
        if (r == n - 2)
            return ExtremalValue::of(4, basis::max_edges_cr2);
        if (r == n - 3)
            return ExtremalValue::of(7, basis::max_edges_cr2);
        const std::int64_t core = 2 * (r - 2) + choose2(n - r + 1);
        return ExtremalValue::of(n - r - 2 >= r ? core + 1 : core, basis::max_edges_cr2);
    }
    return ExtremalValue::uncovered();
}

/// m(n,k,r).
inline ExtremalValue min_edges(int n, int k, std::int64_t r)
{
    detail::check_order(n);
    detail::check_cr(n, k);
    detail::check_gamma(n, r);
    if (auto z = detail::impossible_gamma(n, k, r))
        return *z;

    if (k == 0)
        return r <= n - 1 ? ExtremalValue::of(n - r, basis::min_edges_cr0) : ExtremalValue::uncovered();
    if (k == 1)
        return ExtremalValue::of(n - r + 1, basis::min_edges_cr1);
    return ExtremalValue::uncovered();
}

/// D(n,k,m).
inline ExtremalValue max_gamma(int n, int k, std::int64_t m)
{
    detail::check_order(n);
    detail::check_cr(n, k);
    detail::check_size(n, m);
    if (auto z = detail::impossible_cr(n, k))
        return *z;

    if (k == 0) {
        if (m == 0)
            return ExtremalValue::of(n, basis::empty_graph);
        return ExtremalValue::of(n - detail::triangular_bracket(m), basis::max_gamma_cr0);
    }
    if (k == 1) {
        if (m < 4 || m > choose2(n - 1))
            return ExtremalValue::zero(basis::max_gamma_cr1);
        if (m <= n + 1)
            return ExtremalValue::of(n - 3, basis::max_gamma_cr1);
        for (std::int64_t r = 2; r <= n - 4; ++r)
            if (choose2(n - (r + 1)) + (n - 2) < m && m <= choose2(n - r) + (n - 2))
                return ExtremalValue::of(r, basis::max_gamma_cr1);
        return ExtremalValue::uncovered();
    }
    if (n >= 5 && k <= max_cr(n) && m > universal_max_edges(n, k))
        return ExtremalValue::zero(k == 2 ? basis::max_edges_gamma2 : basis::max_edges_bound);
    if (k == 2 && n >= 8) {
        if (m <= 3)
            return ExtremalValue::zero(basis::max_gamma_cr2_small);
        if (m == 4)
            return ExtremalValue::of(n - 2, basis::max_gamma_cr2_small);
        if (m <= 7)
            return ExtremalValue::of(n - 3, basis::max_gamma_cr2_small);
        if (m <= 2 * (n - 6) + 10)
            return ExtremalValue::of(n - 4, basis::max_gamma_cr2_small);
        const int pivot = (n - 2) / 2;
        for (int r = 2; r <= n - 5; ++r) {
            const std::int64_t above = a_bracket(n, r + 1);
            const std::int64_t at = a_bracket(n, r);
            bool hit = false;
            if (r < pivot)
                hit = above + 1 < m && m <= at + 1;
            else if (r == pivot)
                hit = above < m && m <= at + 1;
            else
                hit = above < m && m <= at;
            if (hit)
                return ExtremalValue::of(r, basis::max_gamma_cr2_large);
        }
        return ExtremalValue::uncovered();
    }
    return ExtremalValue::uncovered();
}

/// d(n,k,m).
inline ExtremalValue min_gamma(int n, int k, std::int64_t m)
{
    detail::check_order(n);
    detail::check_cr(n, k);
    detail::check_size(n, m);
    if (auto z = detail::impossible_cr(n, k))
        return *z;

    if (k == 0)
        return ExtremalValue::of(m < n - 1 ? n - m : 1, basis::min_gamma_cr0);
    if (k == 1) {
        if (4 <= m && m <= n - 1)
            return ExtremalValue::of(n - m + 1, basis::min_gamma_cr1);
        if (n <= m && m <= choose2(n - 1))
            return ExtremalValue::of(2, basis::min_gamma_cr1);
        return ExtremalValue::zero(basis::min_gamma_cr1);
    }
    if (n >= 5 && k <= max_cr(n) && m > universal_max_edges(n, k))
        return ExtremalValue::zero(k == 2 ? basis::max_edges_gamma2 : basis::max_edges_bound);
    return ExtremalValue::uncovered();
}

inline ExtremalValue evaluate(const ExtremalQuery& q)
{
    switch (q.quantity) {
    case Quantity::max_edges: return max_edges(q.n, q.k, q.third);
    case Quantity::min_edges: return min_edges(q.n, q.k, q.third);
    case Quantity::max_gamma: return max_gamma(q.n, q.k, q.third);
    case Quantity::min_gamma: return min_gamma(q.n, q.k, q.third);
    }
    return ExtremalValue::uncovered();
}

/// CR(G) = n-2 holds exactly for graphs of even order with every degree n-2.
inline bool cr_max_characterization(const Graph& g)
{
    const int n = g.order();
    if (n < 4)
        throw DomainError("characterisation needs order >= 4, got " + std::to_string(n));
    if (n % 2 != 0)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 2)
            return false;
    return true;
}

} // namespace crdom
