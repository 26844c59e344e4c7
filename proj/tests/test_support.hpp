#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.
// Nothing here calls differential() or linalg::kernel(); the oracles are
// separate routes to the same quantities.

#include "filling/exterior.hpp"
#include "filling/families.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace filling::testing {

inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    int p = 0;
    while (p == 0)
        p = num(rng);
    return ratio(p, den(rng));
}

inline std::vector<int> random_subset(int dimension, int size, std::mt19937_64& rng)
{
    std::vector<int> all(static_cast<std::size_t>(dimension));
    for (int x = 0; x < dimension; ++x)
        all[static_cast<std::size_t>(x)] = x;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    return all; // unsorted on purpose: exercises add_term's reordering
}

inline InvariantForm random_form(const AlgebraPtr& algebra, int degree, std::mt19937_64& rng, int max_terms = 4)
{
    InvariantForm f(algebra, degree);
    std::uniform_int_distribution<int> count(1, max_terms);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t)
        f.add_term(random_subset(algebra->dimension(), degree, rng), random_rational(rng));
    return f;
}

inline AlgebraPtr random_family_algebra(std::mt19937_64& rng)
{
    static const Family families[] = {Family::complex, Family::quaternionic, Family::octonionic};
    std::uniform_int_distribution<int> fam(0, 2);
    const Family family = families[fam(rng)];
    // Octonionic rank 3 has dimension 31; keep randomized cases small.
    std::uniform_int_distribution<int> rank(1, family == Family::octonionic ? 2 : 3);
    return heisenberg(family, rank(rng));
}

/// omega(e_{x_1}, ..., e_{x_k}) for arbitrary (possibly unsorted) arguments.
inline Rational evaluate(const InvariantForm& form, std::vector<int> args)
{
    int sign = 1;
    for (std::size_t p = 0; p < args.size(); ++p)
        for (std::size_t q = p + 1; q < args.size(); ++q) {
            if (args[p] == args[q])
                return 0;
            if (args[p] > args[q])
                sign = -sign;
        }
    std::sort(args.begin(), args.end());
    return sign * form.coefficient(MultiIndex(std::move(args)));
}

/// Differential by the invariant Cartan formula
///   d omega(X_0..X_k) = sum_{i<j} (-1)^{i+j} omega([X_i, X_j], X_0..^..^..X_k),
/// evaluated on every increasing (k+1)-tuple of basis vectors.
inline InvariantForm differential_by_evaluation(const InvariantForm& form)
{
    const AlgebraPtr& g = form.algebra();
    const int dim = g->dimension();
    const int k = form.degree();
    InvariantForm out(g, k + 1);

    std::vector<int> tuple;
    auto visit = [&](auto&& self, int start) -> void {
        if (static_cast<int>(tuple.size()) == k + 1) {
            Rational value = 0;
            for (int i = 0; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j) {
                    std::vector<int> rest;
                    for (int p = 0; p <= k; ++p)
                        if (p != i && p != j)
                            rest.push_back(tuple[static_cast<std::size_t>(p)]);
                    const int sign = ((i + j) % 2 == 0) ? 1 : -1;
                    for (int m = 0; m < dim; ++m) {
                        const Rational c = g->coefficient(tuple[static_cast<std::size_t>(i)],
                                                          tuple[static_cast<std::size_t>(j)], m);
                        if (c == 0)
                            continue;
                        std::vector<int> args{m};
                        args.insert(args.end(), rest.begin(), rest.end());
                        value += sign * c * evaluate(form, args);
                    }
                }
            out.add(MultiIndex(tuple), value);
            return;
        }
        for (int x = start; x < dim; ++x) {
            tuple.push_back(x);
            self(self, x + 1);
            tuple.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

/// Dense rank over Z/p for an integer matrix (entries reduced mod p).
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p = 1000000007)
{
    auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
    auto power = [&](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b = mod(b);
        while (e > 0) {
            if (e & 1)
                r = static_cast<std::int64_t>((__int128)r * b % p);
            b = static_cast<std::int64_t>((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    for (auto& row : m)
        for (auto& x : row)
            x = mod(x);
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t inv = power(m[rank][c], p - 2);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            const std::int64_t f = static_cast<std::int64_t>((__int128)m[r][c] * inv % p);
            for (std::size_t q = c; q < cols; ++q)
                m[r][q] = mod(m[r][q] - static_cast<std::int64_t>((__int128)f * m[rank][q] % p));
        }
        ++rank;
    }
    return rank;
}

/// Dimension of closed forms of given degree/weight by brute force: build the
/// differential matrix from differential_by_evaluation of each monomial and
/// take its rank mod p. Integer structure constants only.
inline std::size_t closed_dimension_oracle(const AlgebraPtr& g, int degree, int weight_s)
{
    std::vector<MultiIndex> domain;
    std::vector<int> tuple;
    auto visit = [&](auto&& self, int start) -> void {
        if (static_cast<int>(tuple.size()) == degree) {
            MultiIndex m(tuple);
            if (filling::weight(*g, m) == weight_s)
                domain.push_back(m);
            return;
        }
        for (int x = start; x < g->dimension(); ++x) {
            tuple.push_back(x);
            self(self, x + 1);
            tuple.pop_back();
        }
    };
    visit(visit, 0);

    std::map<MultiIndex, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
    for (const auto& m : domain) {
        const InvariantForm d = differential_by_evaluation(InvariantForm::monomial(g, m.indices()));
        std::vector<std::pair<std::size_t, std::int64_t>> col;
        for (const auto& [mono, c] : d.terms()) {
            auto it = row_of.try_emplace(mono, row_of.size()).first;
            col.emplace_back(it->second, c.get_num().get_si());
        }
        columns.push_back(std::move(col));
    }
    std::vector<std::vector<std::int64_t>> dense(row_of.size(), std::vector<std::int64_t>(domain.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c])
            dense[r][c] = v;
    return domain.size() - rank_mod_p(std::move(dense));
}

} // namespace filling::testing
