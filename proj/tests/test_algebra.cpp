#include "filling/algebra.hpp"
#include "filling/families.hpp"

#include <doctest.h>

#include <algorithm>

using namespace filling;

namespace {

AlgebraPtr abelian(std::vector<int> layers)
{
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < layers.size(); ++x)
        labels.push_back("e" + std::to_string(x));
    return make_algebra("abelian", std::move(labels), std::move(layers), {});
}

// Jacobi by summing over every ordered quadruple (i, j, k, l), independent of
// the alternating shortcut used by validate().
bool jacobi_by_direct_summation(const GradedLieAlgebra& g)
{
    const int n = g.dimension();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational s = 0;
                    for (int m = 0; m < n; ++m)
                        s += g.coefficient(i, j, m) * g.coefficient(m, k, l) +
                             g.coefficient(j, k, m) * g.coefficient(m, i, l) +
                             g.coefficient(k, i, m) * g.coefficient(m, j, l);
                    if (s != 0)
                        return false;
                }
    return true;
}

} // namespace

TEST_CASE("validate accepts the built-in families")
{
    CHECK(validate(*heisenberg(Family::quaternionic, 1)).empty());
    CHECK(validate(*abelian({1, 1, 1})).empty());
    for (int n = 1; n <= 3; ++n)
        for (Family f : {Family::complex, Family::quaternionic, Family::octonionic}) {
            const auto g = heisenberg(f, n);
            CHECK(validate(*g).empty());
            CHECK(is_stratified(*g));
        }
}

TEST_CASE("Jacobi holds by direct summation over all quadruples")
{
    for (int n = 1; n <= 2; ++n)
        for (Family f : {Family::complex, Family::quaternionic, Family::octonionic})
            CHECK(jacobi_by_direct_summation(*heisenberg(f, n)));
}

TEST_CASE("conflicting antisymmetric entries are reported at the offending triple")
{
    const std::vector<BracketTerm> terms{{1, 2, 3, 1}, {2, 1, 3, 1}};
    const auto g = make_algebra("bad", {"a", "b", "c", "d"}, {1, 1, 1, 2}, terms);
    const auto v = validate(*g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::antisymmetry);
    CHECK(v[0].i == 1);
    CHECK(v[0].j == 2);
    CHECK(v[0].k == 3);
}

TEST_CASE("consistent reversed entries are sign-extended")
{
    const std::vector<BracketTerm> terms{{1, 0, 2, 1}};
    const auto g = make_algebra("h3", {"x", "y", "z"}, {1, 1, 2}, terms);
    CHECK(validate(*g).empty());
    CHECK(g->coefficient(0, 1, 2) == -1);
    CHECK(g->coefficient(1, 0, 2) == 1);
    CHECK(g->coefficient(0, 0, 2) == 0);
}

TEST_CASE("validate reports grading, range, diagonal, zero and Jacobi problems")
{
    using K = Violation::Kind;
    auto kinds = [](const AlgebraPtr& g) {
        std::vector<K> out;
        for (const auto& v : validate(*g))
            out.push_back(v.kind);
        return out;
    };
    CHECK(kinds(make_algebra("g", {"a", "b", "c"}, {1, 1, 1}, std::vector<BracketTerm>{{0, 1, 2, 1}})) ==
          std::vector<K>{K::grading});
    CHECK(kinds(make_algebra("g", {"a", "b"}, {1, 2}, std::vector<BracketTerm>{{0, 5, 1, 1}})) ==
          std::vector<K>{K::index_range});
    CHECK(kinds(make_algebra("g", {"a", "b"}, {1, 2}, std::vector<BracketTerm>{{0, 0, 1, 1}})) ==
          std::vector<K>{K::antisymmetry});
    CHECK(kinds(make_algebra("g", {"a", "b", "c"}, {1, 1, 2}, std::vector<BracketTerm>{{0, 1, 2, 0}})) ==
          std::vector<K>{K::zero_coefficient});
    CHECK(kinds(make_algebra("g", {"a"}, {0}, {})) == std::vector<K>{K::layer});

    // [x, y] = x, [x, z] = x, [y, z] = y: the Jacobiator on (x, y, z) is -x.
    const std::vector<BracketTerm> broken{{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 2, 1, 1}};
    const auto kb = kinds(make_algebra("broken", {"x", "y", "z"}, {1, 1, 1}, broken));
    CHECK(std::count(kb.begin(), kb.end(), K::jacobi) == 1);
}

TEST_CASE("validate is deterministic and idempotent")
{
    const std::vector<BracketTerm> terms{{1, 2, 3, 1}, {2, 1, 3, 1}, {0, 1, 2, 1}};
    const auto g = make_algebra("bad", {"a", "b", "c", "d"}, {1, 1, 1, 2}, terms);
    const auto first = validate(*g);
    const auto second = validate(*g);
    REQUIRE(first.size() == second.size());
    for (std::size_t p = 0; p < first.size(); ++p) {
        CHECK(first[p].kind == second[p].kind);
        CHECK(first[p].i == second[p].i);
        CHECK(first[p].j == second[p].j);
        CHECK(first[p].k == second[p].k);
    }
}

TEST_CASE("is_stratified rejects an abelian algebra with a layer-2 vector")
{
    CHECK(is_stratified(*abelian({1, 1})));
    CHECK_FALSE(is_stratified(*abelian({1, 1, 2})));
    // Skipped layer: nothing in layer 2 can generate layer 3.
    CHECK_FALSE(is_stratified(*abelian({1, 3})));
}

TEST_CASE("is_stratified checks the full span, not just nonvanishing brackets")
{
    // [x, y] = z only; w in layer 2 is not reached.
    const std::vector<BracketTerm> terms{{0, 1, 2, 1}};
    CHECK_FALSE(is_stratified(*make_algebra("g", {"x", "y", "z", "w"}, {1, 1, 2, 2}, terms)));
    CHECK(is_stratified(*make_algebra("g", {"x", "y", "z"}, {1, 1, 2}, terms)));
}

TEST_CASE("embed accepts the complex-into-quaternionic inclusion and the identity")
{
    for (int n = 1; n <= 4; ++n) {
        const auto c = heisenberg(Family::complex, n);
        const auto h = heisenberg(Family::quaternionic, n);
        const auto phi = complex_into_quaternionic(c, h);
        for (int m = 0; m < n; ++m) {
            CHECK(h->labels()[static_cast<std::size_t>(phi.index_map()[static_cast<std::size_t>(m)])] ==
                  "h_" + std::to_string(m + 1));
            CHECK(h->labels()[static_cast<std::size_t>(phi.index_map()[static_cast<std::size_t>(n + m)])] ==
                  "k_" + std::to_string(m + 1));
        }
        CHECK(h->labels()[static_cast<std::size_t>(phi.index_map().back())] == "K");
        CHECK_NOTHROW(identity_embedding(h));
        CHECK_NOTHROW(identity_embedding(c));
    }
}

TEST_CASE("embed rejects layer-changing, non-injective and bracket-breaking maps")
{
    const auto c = heisenberg(Family::complex, 1);     // h_1, k_1, K
    const auto h = heisenberg(Family::quaternionic, 1); // h_1, i_1, j_1, k_1, I, J, K
    // h_1 -> I changes layer.
    CHECK_THROWS_AS(embed(c, h, {4, 3, 6}), EmbeddingError);
    CHECK_THROWS_AS(embed(c, h, {0, 0, 6}), EmbeddingError);
    CHECK_THROWS_AS(embed(c, h, {0, 3}), EmbeddingError);
    CHECK_THROWS_AS(embed(c, h, {0, 3, 7}), EmbeddingError);
    // k_1 -> i_1: [i_1, h_1] = I, not K.
    CHECK_THROWS_AS(embed(c, h, {0, 1, 6}), EmbeddingError);
    // k_1 -> k_1 but K -> J.
    CHECK_THROWS_AS(embed(c, h, {0, 3, 5}), EmbeddingError);
    CHECK_NOTHROW(embed(c, h, {0, 3, 6}));
}
