#include "filling/families.hpp"

#include <doctest.h>

#include <set>

using namespace filling;

namespace {

SignedUnit conj_product(const DivisionAlgebraTable& t, int p, int q)
{
    // e_p * conj(e_q)
    SignedUnit r = t.product(p, q);
    if (q != 0)
        r.sign = -r.sign;
    return r;
}

} // namespace

TEST_CASE("division algebra tables satisfy the unit rules")
{
    for (const auto& t : {complex_table(), quaternion_table(), octonion_table()}) {
        const int r = t.rank();
        for (int p = 0; p < r; ++p) {
            CHECK(t.product(0, p) == SignedUnit{1, p});
            CHECK(t.product(p, 0) == SignedUnit{1, p});
            if (p >= 1)
                CHECK(t.product(p, p) == SignedUnit{-1, 0});
            for (int q = 1; q < r; ++q)
                if (p >= 1 && q != p) {
                    const SignedUnit pq = t.product(p, q);
                    const SignedUnit qp = t.product(q, p);
                    CHECK(pq.index == qp.index);
                    CHECK(pq.sign == -qp.sign);
                }
        }
    }
}

TEST_CASE("quaternion table follows ij = k, jk = i, ki = j")
{
    const auto t = quaternion_table();
    CHECK(t.product(1, 2) == SignedUnit{1, 3});
    CHECK(t.product(2, 3) == SignedUnit{1, 1});
    CHECK(t.product(3, 1) == SignedUnit{1, 2});
}

TEST_CASE("octonion table extends the quaternion table")
{
    const auto o = octonion_table();
    const auto q = quaternion_table();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(o.product(a, b) == q.product(a, b));
    CHECK(o.product(1, 2) == SignedUnit{1, 3});
    // (i)(l) with a = i, b = 0, c = 0, d = 1: (0 - 0) + (1 * i) l = i l = e_5.
    CHECK(o.product(1, 4) == SignedUnit{1, 5});
    for (int p = 1; p < 8; ++p)
        CHECK(o.product(p, p) == SignedUnit{-1, 0});
}

TEST_CASE("the bracket formula is antisymmetric on every unit pair")
{
    for (const auto& t : {complex_table(), quaternion_table(), octonion_table()})
        for (int p = 0; p < t.rank(); ++p)
            for (int q = 0; q < t.rank(); ++q) {
                const SignedUnit uv = conj_product(t, p, q);
                const SignedUnit vu = conj_product(t, q, p);
                REQUIRE(uv.index == vu.index);
                if (uv.index != 0)
                    CHECK(uv.sign == -vu.sign); // Im part flips
                else
                    CHECK(uv.sign == vu.sign);  // real part is symmetric
            }
}

TEST_CASE("heisenberg dimensions")
{
    CHECK(heisenberg(Family::quaternionic, 1)->dimension() == 7);
    CHECK(heisenberg(Family::complex, 3)->dimension() == 7);
    CHECK(heisenberg(Family::octonionic, 1)->dimension() == 15);
    for (int n = 1; n <= 4; ++n) {
        CHECK(heisenberg(Family::quaternionic, n)->dimension() == 4 * n + 3);
        CHECK(heisenberg(Family::complex, n)->dimension() == 2 * n + 1);
    }
    CHECK_THROWS_AS(heisenberg(Family::quaternionic, 0), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg(Family::complex, -1), std::invalid_argument);
}

TEST_CASE("basis labels follow the frozen order")
{
    const auto h = heisenberg(Family::quaternionic, 2);
    CHECK(h->labels() == std::vector<std::string>{"h_1", "h_2", "i_1", "i_2", "j_1", "j_2", "k_1", "k_2", "I", "J", "K"});
    CHECK(h->layers() == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2});
    const auto c = heisenberg(Family::complex, 2);
    CHECK(c->labels() == std::vector<std::string>{"h_1", "h_2", "k_1", "k_2", "K"});
}

TEST_CASE("complex family has the single bracket [k_m, h_m] = K")
{
    for (int n = 1; n <= 4; ++n) {
        const auto g = heisenberg(Family::complex, n);
        CHECK(g->terms().size() == static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m)
            CHECK(g->coefficient(complex::k(n, m), complex::h(n, m), complex::K(n)) == 1);
    }
}

TEST_CASE("quaternionic same-coordinate imaginary pairs")
{
    const int n = 2;
    const auto g = heisenberg(Family::quaternionic, n);
    using namespace quaternionic;
    for (int m = 0; m < n; ++m) {
        CHECK(g->coefficient(i(n, m), j(n, m), K(n)) == -1);
        CHECK(g->coefficient(j(n, m), k(n, m), I(n)) == -1);
        CHECK(g->coefficient(k(n, m), i(n, m), J(n)) == -1);
    }
    // distinct coordinates commute
    CHECK(g->coefficient(i(n, 0), h(n, 1), I(n)) == 0);
    CHECK(g->coefficient(k(n, 1), h(n, 0), K(n)) == 0);
}

TEST_CASE("[V_1, V_1] spans V_2 for every family")
{
    for (int n = 1; n <= 3; ++n)
        for (Family f : {Family::complex, Family::quaternionic, Family::octonionic}) {
            const auto g = heisenberg(f, n);
            std::set<int> hit;
            for (const auto& t : g->terms())
                hit.insert(t.k);
            CHECK(hit.size() == static_cast<std::size_t>(rank_of(f) - 1));
        }
}

TEST_CASE("family names parse")
{
    CHECK(parse_family("quaternionic") == Family::quaternionic);
    CHECK(parse_family("complex") == Family::complex);
    CHECK(parse_family("octonionic") == Family::octonionic);
    CHECK_FALSE(parse_family("sedenion").has_value());
}
