#pragma once

// Brute-force ground truth for D^lambda over F_p.
//
// Standard polytabloids are expanded in the tabloid basis of M^lambda, the
// Gram matrix of the symmetric form on S^lambda is formed from those
// expansions, and D^lambda = S^lambda / rad is realized through the Gram
// functional v -> (<v, e_t>)_t, whose kernel on S^lambda is the radical.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mullineux.hpp"
#include "partition.hpp"
#include "prime_field.hpp"

namespace symmod {

struct OracleCaps {
    std::size_t max_tableaux = 4000;
    std::size_t max_tabloids = 500000;

    friend bool operator==(const OracleCaps&, const OracleCaps&) = default;
};

/// A filling of a Young diagram; standard when rows and columns increase.
struct StandardTableau {
    Partition shape;
    /// rows[r][c] is the entry in row r+1, column c+1.
    std::vector<std::vector<int>> rows;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

    bool is_standard() const {
        std::vector<bool> seen(static_cast<std::size_t>(shape.size()) + 1, false);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(rows[r].size()) != shape.part(static_cast<int>(r) + 1))
                return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                int x = rows[r][c];
                if (x < 1 || x > shape.size() || seen[static_cast<std::size_t>(x)])
                    return false;
                seen[static_cast<std::size_t>(x)] = true;
                if (c > 0 && rows[r][c - 1] >= x)
                    return false;
                if (r > 0 && rows[r - 1][c] >= x)
                    return false;
            }
        }
        return true;
    }
};

namespace detail {

inline boost::multiprecision::cpp_int hook_count(const Partition& lambda) {
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k)
        num *= k;
    std::vector<int> conj(static_cast<std::size_t>(lambda.first()), 0);
    for (int part : lambda.parts())
        for (int c = 0; c < part; ++c)
            ++conj[static_cast<std::size_t>(c)];
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c)
            den *= (lambda.part(r) - c) + (conj[static_cast<std::size_t>(c - 1)] - r) + 1;
    return num / den;
}

inline boost::multiprecision::cpp_int multinomial(const Partition& lambda) {
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k)
        num *= k;
    for (int part : lambda.parts())
        for (int k = 2; k <= part; ++k)
            den *= k;
    return num / den;
}

} // namespace detail

/// Number of tabloids of shape lambda, n! / prod lambda_i!.
inline boost::multiprecision::cpp_int tabloid_count(const Partition& lambda) { return detail::multinomial(lambda); }

/// Number of standard tableaux of shape lambda (hook length formula).
inline boost::multiprecision::cpp_int standard_tableau_count(const Partition& lambda) { return detail::hook_count(lambda); }

inline void check_caps(const Partition& lambda, const OracleCaps& caps) {
    if (lambda.size() > 16 || lambda.length() > 15)
        throw error(errc::oracle_out_of_range, lambda.to_string() + " exceeds the packed tabloid encoding");
    if (lambda.length() > 8)
        throw error(errc::oracle_out_of_range, lambda.to_string() + " has a column longer than 8");
    if (standard_tableau_count(lambda) > caps.max_tableaux)
        throw error(errc::oracle_out_of_range, lambda.to_string() + " has more than " +
                                                   std::to_string(caps.max_tableaux) + " standard tableaux");
    if (tabloid_count(lambda) > caps.max_tabloids)
        throw error(errc::oracle_out_of_range,
                    lambda.to_string() + " has more than " + std::to_string(caps.max_tabloids) + " tabloids");
}

/// Standard tableaux ordered lexicographically by the row index of 1, 2, ..., n.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda, const OracleCaps& caps = {}) {
    if (standard_tableau_count(lambda) > caps.max_tableaux)
        throw error(errc::oracle_out_of_range, lambda.to_string() + " has more than " +
                                                   std::to_string(caps.max_tableaux) + " standard tableaux");
    std::vector<StandardTableau> out;
    StandardTableau current{lambda, std::vector<std::vector<int>>(static_cast<std::size_t>(lambda.length()))};
    auto rec = [&](auto&& self, int next) -> void {
        if (next > lambda.size()) {
            out.push_back(current);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            auto& row = current.rows[static_cast<std::size_t>(r)];
            int len = static_cast<int>(row.size());
            if (len >= lambda.part(r + 1))
                continue;
            if (r > 0 && static_cast<int>(current.rows[static_cast<std::size_t>(r - 1)].size()) <= len)
                continue;
            row.push_back(next);
            self(self, next + 1);
            row.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace detail {

/// Tabloid {t} packed as 4 bits per entry: the row (1-based) holding entry x
/// sits at bits 4(x-1)..4(x-1)+3.
using tabloid_key = std::uint64_t;

struct term {
    tabloid_key key;
    int sign;
};

inline tabloid_key swap_entries(tabloid_key key, int x) {
    // Rows of entries x and x+1 trade places.
    const unsigned lo = 4U * static_cast<unsigned>(x - 1);
    const tabloid_key a = (key >> lo) & 0xF, b = (key >> (lo + 4)) & 0xF;
    key &= ~((tabloid_key{0xFF}) << lo);
    return key | (b << lo) | (a << (lo + 4));
}

struct column_perm {
    std::vector<int> image;
    int sign;
};

inline const std::vector<column_perm>& perms_of(int length) {
    static const std::vector<std::vector<column_perm>> table = [] {
        std::vector<std::vector<column_perm>> t(16);
        for (int len = 0; len < 16 && len <= 8; ++len) {
            std::vector<int> image(static_cast<std::size_t>(len));
            std::iota(image.begin(), image.end(), 0);
            do {
                int inversions = 0;
                for (int i = 0; i < len; ++i)
                    for (int j = i + 1; j < len; ++j)
                        inversions += image[static_cast<std::size_t>(i)] > image[static_cast<std::size_t>(j)];
                t[static_cast<std::size_t>(len)].push_back({image, inversions % 2 ? -1 : 1});
            } while (std::next_permutation(image.begin(), image.end()));
        }
        return t;
    }();
    if (length > 8)
        throw error(errc::oracle_out_of_range, "column longer than 8");
    return table[static_cast<std::size_t>(length)];
}

/// e_t = sum over column permutations sigma of sign(sigma) {sigma t}, sorted by key.
inline std::vector<term> polytabloid(const StandardTableau& t) {
    std::vector<std::vector<int>> columns;
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (columns.size() <= c)
                columns.emplace_back();
            columns[c].push_back(row[c]);
        }
    std::vector<term> out;
    auto rec = [&](auto&& self, std::size_t col, tabloid_key key, int sign) -> void {
        if (col == columns.size()) {
            out.push_back({key, sign});
            return;
        }
        const auto& entries = columns[col];
        for (const auto& perm : perms_of(static_cast<int>(entries.size()))) {
            tabloid_key k = key;
            for (std::size_t j = 0; j < entries.size(); ++j)
                k |= tabloid_key(perm.image[j] + 1) << (4U * static_cast<unsigned>(entries[j] - 1));
            self(self, col + 1, k, sign * perm.sign);
        }
    };
    rec(rec, 0, 0, 1);
    std::sort(out.begin(), out.end(), [](const term& a, const term& b) { return a.key < b.key; });
    return out;
}

struct occurrence {
    tabloid_key key;
    std::uint32_t tableau;
    int sign;
};

/// Polytabloid expansions of all standard tableaux plus a tabloid -> tableau index.
struct specht_basis {
    Partition shape;
    std::vector<StandardTableau> tableaux;
    std::vector<std::vector<term>> expansions;
    std::vector<occurrence> index; // sorted by key

    explicit specht_basis(const Partition& lambda, const OracleCaps& caps) : shape(lambda) {
        check_caps(lambda, caps);
        tableaux = standard_tableaux(lambda, caps);
        expansions.reserve(tableaux.size());
        for (std::uint32_t t = 0; t < tableaux.size(); ++t) {
            expansions.push_back(polytabloid(tableaux[t]));
            for (const auto& term : expansions.back())
                index.push_back({term.key, t, term.sign});
        }
        std::sort(index.begin(), index.end(), [](const occurrence& a, const occurrence& b) {
            return a.key != b.key ? a.key < b.key : a.tableau < b.tableau;
        });
    }

    /// Calls f(tableau, sign) for every standard polytabloid containing key.
    template <typename F>
    void for_each_occurrence(tabloid_key key, F&& f) const {
        auto it = std::lower_bound(index.begin(), index.end(), key,
                                   [](const occurrence& o, tabloid_key k) { return o.key < k; });
        for (; it != index.end() && it->key == key; ++it)
            f(it->tableau, it->sign);
    }

    /// Calls f(a, b, sign_a * sign_b) for every pair sharing a tabloid.
    template <typename F>
    void for_each_pair(F&& f) const {
        for (std::size_t lo = 0; lo < index.size();) {
            std::size_t hi = lo;
            while (hi < index.size() && index[hi].key == index[lo].key)
                ++hi;
            for (std::size_t a = lo; a < hi; ++a)
                for (std::size_t b = lo; b < hi; ++b)
                    f(index[a].tableau, index[b].tableau, index[a].sign * index[b].sign);
            lo = hi;
        }
    }
};

} // namespace detail

/// Gram matrix of the standard polytabloids over the integers.
inline std::vector<std::vector<long long>> integer_gram_matrix(const Partition& lambda, const OracleCaps& caps = {}) {
    detail::specht_basis basis(lambda, caps);
    std::size_t f = basis.tableaux.size();
    std::vector<std::vector<long long>> g(f, std::vector<long long>(f, 0));
    basis.for_each_pair([&](std::uint32_t a, std::uint32_t b, int s) { g[a][b] += s; });
    return g;
}

namespace detail {

inline PrimeFieldMatrix gram_mod_p(const specht_basis& basis, PrimeChar p) {
    const auto q = static_cast<std::uint32_t>(p.value());
    std::size_t f = basis.tableaux.size();
    std::vector<long long> acc(f * f, 0);
    basis.for_each_pair([&](std::uint32_t a, std::uint32_t b, int s) { acc[a * f + b] += s; });
    PrimeFieldMatrix g(f, f, q);
    for (std::size_t a = 0; a < f; ++a)
        for (std::size_t b = 0; b < f; ++b)
            g(a, b) = g.reduce(acc[a * f + b]);
    return g;
}

} // namespace detail

inline PrimeFieldMatrix gram_matrix(const Partition& lambda, PrimeChar p, const OracleCaps& caps = {}) {
    return detail::gram_mod_p(detail::specht_basis(lambda, caps), p);
}

namespace detail {

struct dim_key {
    int p;
    Partition lambda;
    friend bool operator==(const dim_key&, const dim_key&) = default;
};

struct dim_key_hash {
    std::size_t operator()(const dim_key& k) const noexcept { return partition_hash{}(k.lambda) * 131 + static_cast<std::size_t>(k.p); }
};

class dim_cache {
public:
    std::optional<int> find(const dim_key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        return it == table_.end() ? std::nullopt : std::optional<int>(it->second);
    }
    void insert(dim_key key, int dim) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(std::move(key), dim);
    }
    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<dim_key, int, dim_key_hash> table_;
};

inline dim_cache& global_dim_cache() {
    static dim_cache cache;
    return cache;
}

} // namespace detail

inline void clear_dim_cache() { detail::global_dim_cache().clear(); }

/// dim D^lambda over F_p: the rank of the Gram matrix mod p.
inline int dim_irreducible(const Partition& lambda, PrimeChar p, const OracleCaps& caps = {}) {
    require_regular(lambda, p);
    auto& cache = detail::global_dim_cache();
    detail::dim_key key{p.value(), lambda};
    check_caps(lambda, caps);
    if (auto hit = cache.find(key))
        return *hit;
    int dim = static_cast<int>(gram_matrix(lambda, p, caps).rank());
    cache.insert(std::move(key), dim);
    return dim;
}

/// D^lambda with the action of the adjacent transpositions s_1, ..., s_{n-1}.
struct IrreducibleModule {
    Partition label;
    int p = 2;
    std::size_t dim = 0;
    /// generators[i-1] acts as s_i on column coordinate vectors.
    std::vector<PrimeFieldMatrix> generators;
    /// Standard tableaux whose polytabloids give the basis of D^lambda.
    std::vector<StandardTableau> basis;

    PrimeFieldMatrix identity() const { return PrimeFieldMatrix::identity(dim, static_cast<std::uint32_t>(p)); }
};

/// Involution, braid and far-commutation relations, checked on the full
/// matrices.
inline bool satisfies_coxeter_relations(const IrreducibleModule& m) {
    auto id = m.identity();
    const auto& g = m.generators;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] * g[i] != id)
            return false;
        if (i + 1 < g.size() && g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1])
            return false;
        for (std::size_t j = i + 2; j < g.size(); ++j)
            if (g[i] * g[j] != g[j] * g[i])
                return false;
    }
    return true;
}

namespace detail {

/// Same relations tested on a random block of vectors; used on every
/// construction, where full products would dominate the cost.
inline bool sketch_coxeter_relations(const IrreducibleModule& m, std::uint64_t seed) {
    if (m.dim == 0)
        return true;
    const auto q = static_cast<std::uint32_t>(m.p);
    std::mt19937_64 rng(seed);
    PrimeFieldMatrix x(m.dim, 16, q);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            x(i, j) = static_cast<std::uint32_t>(rng() % q);
    const auto& g = m.generators;
    std::vector<PrimeFieldMatrix> gx;
    gx.reserve(g.size());
    for (const auto& gi : g)
        gx.push_back(gi * x);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] * gx[i] != x)
            return false;
        if (i + 1 < g.size() && g[i] * (g[i + 1] * gx[i]) != g[i + 1] * (g[i] * gx[i + 1]))
            return false;
        for (std::size_t j = i + 2; j < g.size(); ++j)
            if (g[i] * gx[j] != g[j] * gx[i])
                return false;
    }
    return true;
}

} // namespace detail

/// Builds generator matrices for D^lambda. The basis is the set of standard
/// polytabloids at the pivot columns J of the Gram matrix G; G[J,J] is then
/// invertible, and s_i sends basis vector j to G[J,J]^{-1} Phi_i[:, j] with
/// Phi_i[k][j] = <s_i e_{t_j}, e_{t_k}>.
inline IrreducibleModule irreducible_action(const Partition& lambda, PrimeChar p, const OracleCaps& caps = {}) {
    require_regular(lambda, p);
    detail::specht_basis basis(lambda, caps);
    const auto q = static_cast<std::uint32_t>(p.value());
    auto gram = detail::gram_mod_p(basis, p);
    auto reduced = gram;
    auto pivots = reduced.row_reduce();
    const std::size_t r = pivots.size();
    auto block_inverse = gram.submatrix(pivots, pivots).inverted();
    if (!block_inverse)
        throw std::logic_error("principal Gram block at pivot columns is singular");

    std::vector<int> position(basis.tableaux.size(), -1);
    for (std::size_t k = 0; k < r; ++k)
        position[pivots[k]] = static_cast<int>(k);

    IrreducibleModule module;
    module.label = lambda;
    module.p = p.value();
    module.dim = r;
    for (auto idx : pivots)
        module.basis.push_back(basis.tableaux[idx]);

    const int n = lambda.size();
    std::vector<long long> column(r);
    for (int i = 1; i < n; ++i) {
        PrimeFieldMatrix phi(r, r, q);
        for (std::size_t j = 0; j < r; ++j) {
            std::fill(column.begin(), column.end(), 0);
            for (const auto& term : basis.expansions[pivots[j]]) {
                basis.for_each_occurrence(detail::swap_entries(term.key, i), [&](std::uint32_t t, int sign) {
                    if (position[t] >= 0)
                        column[static_cast<std::size_t>(position[t])] += term.sign * sign;
                });
            }
            for (std::size_t k = 0; k < r; ++k)
                phi(k, j) = phi.reduce(column[k]);
        }
        module.generators.push_back(*block_inverse * phi);
    }
    if (!detail::sketch_coxeter_relations(module, 0x5eed0000ULL + static_cast<std::uint64_t>(n)))
        throw std::logic_error("generators of D^" + lambda.to_string() + " violate the Coxeter relations");
    return module;
}

namespace detail {

/// Largest j in [0, n-2] such that s_1..s_j have a common eigenvector with
/// eigenvalue `eigen`; j = 0 is the whole space.
inline int longest_eigen_prefix(const IrreducibleModule& m, std::uint32_t eigen) {
    const int n = m.label.size();
    if (m.dim == 0)
        return -1;
    PrimeFieldMatrix span = m.identity();
    int best = 0;
    for (int j = 1; j <= n - 2; ++j) {
        auto shifted = m.generators[static_cast<std::size_t>(j - 1)] - m.identity().scaled(eigen);
        auto kernel = (shifted * span).nullspace();
        if (kernel.cols() == 0)
            break;
        span = span * kernel;
        best = j;
    }
    return best;
}

} // namespace detail

/// Least a >= 1 such that the restriction of D^lambda to S_{n-a} has a
/// trivial submodule or, for p >= 3, a sign submodule.
inline int minimal_a_of(const IrreducibleModule& m) {
    const int n = m.label.size();
    if (n <= 2)
        return 1;
    int best = detail::longest_eigen_prefix(m, 1);
    if (m.p != 2)
        best = std::max(best, detail::longest_eigen_prefix(m, static_cast<std::uint32_t>(m.p - 1)));
    return n - 1 - best;
}

inline int minimal_a(const Partition& lambda, PrimeChar p, const OracleCaps& caps = {}) {
    require_nonempty(lambda);
    return minimal_a_of(irreducible_action(lambda, p, caps));
}

/// trace(w) on `m` for a word of generator indices (1-based).
inline std::uint32_t word_trace(const IrreducibleModule& m, const std::vector<int>& word) {
    if (word.empty())
        return static_cast<std::uint32_t>(m.dim % static_cast<std::size_t>(m.p));
    const auto& last = m.generators[static_cast<std::size_t>(word.back() - 1)];
    if (word.size() == 1)
        return last.trace();
    PrimeFieldMatrix product = m.generators[static_cast<std::size_t>(word.front() - 1)];
    for (std::size_t k = 1; k + 1 < word.size(); ++k)
        product = product * m.generators[static_cast<std::size_t>(word[k] - 1)];
    // trace(P * L) without forming P * L.
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < m.dim; ++i) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < m.dim; ++j)
            row += std::uint64_t(product(i, j)) * last(j, i);
        sum = (sum + row % static_cast<std::uint64_t>(m.p)) % static_cast<std::uint64_t>(m.p);
    }
    return static_cast<std::uint32_t>(sum);
}

/// Compares sign-twisted traces of D^lambda with traces of `twin` on
/// pseudo-random words. Necessary for D^lambda (x) sgn = D^twin.
inline bool twisted_trace_check(const IrreducibleModule& m, const IrreducibleModule& twin, int samples,
                                std::uint64_t seed) {
    if (m.dim != twin.dim || m.p != twin.p || m.label.size() != twin.label.size())
        return false;
    const int n = m.label.size();
    const auto q = static_cast<long long>(m.p);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> word;
        if (n >= 2) {
            auto length = static_cast<int>(1 + rng() % static_cast<std::uint64_t>(2 * (n - 1)));
            for (int k = 0; k < length; ++k)
                word.push_back(static_cast<int>(1 + rng() % static_cast<std::uint64_t>(n - 1)));
        }
        long long lhs = word_trace(m, word);
        if (word.size() % 2 == 1)
            lhs = (q - lhs) % q;
        if (lhs != static_cast<long long>(word_trace(twin, word)))
            return false;
    }
    return true;
}

inline bool twisted_trace_check(const Partition& lambda, PrimeChar p, int samples, std::uint64_t seed,
                                const OracleCaps& caps = {}) {
    require_regular(lambda, p);
    auto twin_label = mullineux(lambda, p);
    auto m = irreducible_action(lambda, p, caps);
    auto twin = twin_label == lambda ? m : irreducible_action(twin_label, p, caps);
    return twisted_trace_check(m, twin, samples, seed);
}

} // namespace symmod
