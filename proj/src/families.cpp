#include "filling/families.hpp"

#include <stdexcept>

namespace filling {

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::complex: return "complex";
    case Family::quaternionic: return "quaternionic";
    case Family::octonionic: return "octonionic";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view text)
{
    if (text == "complex")
        return Family::complex;
    if (text == "quaternionic")
        return Family::quaternionic;
    if (text == "octonionic")
        return Family::octonionic;
    return std::nullopt;
}

int rank_of(Family family)
{
    switch (family) {
    case Family::complex: return 2;
    case Family::quaternionic: return 4;
    case Family::octonionic: return 8;
    }
    return 0;
}

namespace {

// Dense integer coefficients in the unit basis of a Cayley-Dickson algebra of
// size 2^level.
using Element = std::vector<int>;

Element conj(Element x)
{
    for (std::size_t p = 1; p < x.size(); ++p)
        x[p] = -x[p];
    return x;
}

Element add(const Element& a, const Element& b, int sign_b = 1)
{
    Element out(a.size());
    for (std::size_t p = 0; p < a.size(); ++p)
        out[p] = a[p] + sign_b * b[p];
    return out;
}

Element multiply(const Element& x, const Element& y)
{
    if (x.size() == 1)
        return {x[0] * y[0]};
    const auto half = static_cast<std::ptrdiff_t>(x.size() / 2);
    const Element a(x.begin(), x.begin() + half), b(x.begin() + half, x.end());
    const Element c(y.begin(), y.begin() + half), d(y.begin() + half, y.end());
    const Element lo = add(multiply(a, c), multiply(conj(d), b), -1);
    const Element hi = add(multiply(d, a), multiply(b, conj(c)));
    Element out(lo);
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
}

} // namespace

DivisionAlgebraTable::DivisionAlgebraTable(int rank) : rank_(rank), table_(static_cast<std::size_t>(rank * rank))
{
    if (rank != 1 && rank != 2 && rank != 4 && rank != 8)
        throw std::invalid_argument("Cayley-Dickson rank must be 1, 2, 4 or 8");
    for (int p = 0; p < rank; ++p)
        for (int q = 0; q < rank; ++q) {
            Element ep(static_cast<std::size_t>(rank), 0), eq(static_cast<std::size_t>(rank), 0);
            ep[static_cast<std::size_t>(p)] = 1;
            eq[static_cast<std::size_t>(q)] = 1;
            const Element prod = multiply(ep, eq);
            SignedUnit unit{0, -1};
            for (int r = 0; r < rank; ++r)
                if (prod[static_cast<std::size_t>(r)] != 0)
                    unit = {prod[static_cast<std::size_t>(r)], r};
            table_[static_cast<std::size_t>(p * rank + q)] = unit;
        }
}

DivisionAlgebraTable complex_table() { return DivisionAlgebraTable(2); }
DivisionAlgebraTable quaternion_table() { return DivisionAlgebraTable(4); }
DivisionAlgebraTable octonion_table() { return DivisionAlgebraTable(8); }

std::string heisenberg_name(Family family, int n)
{
    return "heisenberg-" + std::string(to_string(family)) + "-" + std::to_string(n);
}

namespace {

std::vector<std::string> heisenberg_labels(const HeisenbergLayout& layout)
{
    std::vector<std::string> horizontal;
    std::vector<std::string> vertical;
    switch (layout.family) {
    case Family::complex:
        horizontal = {"h", "k"};
        vertical = {"K"};
        break;
    case Family::quaternionic:
        horizontal = {"h", "i", "j", "k"};
        vertical = {"I", "J", "K"};
        break;
    case Family::octonionic:
        for (int p = 0; p < 8; ++p)
            horizontal.push_back("x" + std::to_string(p));
        for (int p = 1; p < 8; ++p)
            vertical.push_back("X" + std::to_string(p));
        break;
    }
    std::vector<std::string> labels;
    for (const auto& base : horizontal)
        for (int m = 1; m <= layout.n; ++m)
            labels.push_back(base + "_" + std::to_string(m));
    labels.insert(labels.end(), vertical.begin(), vertical.end());
    return labels;
}

} // namespace

AlgebraPtr heisenberg(Family family, int n)
{
    if (n < 1)
        throw std::invalid_argument("heisenberg: n must be at least 1, got " + std::to_string(n));
    const HeisenbergLayout layout{family, n};
    const int rank = layout.rank();
    const DivisionAlgebraTable table(rank);

    std::vector<int> layers(static_cast<std::size_t>(layout.dimension()), 2);
    for (int x = 0; x < rank * n; ++x)
        layers[static_cast<std::size_t>(x)] = 1;

    // [e_p, e_q] = Im(e_p conj(e_q)); conj(e_q) = -e_q since q > p >= 0.
    std::vector<BracketTerm> terms;
    for (int m = 0; m < n; ++m)
        for (int p = 0; p < rank; ++p)
            for (int q = p + 1; q < rank; ++q) {
                SignedUnit prod = table.product(p, q);
                prod.sign = -prod.sign;
                if (prod.index == 0)
                    continue;
                terms.push_back({layout.horizontal(p, m), layout.horizontal(q, m), layout.vertical(prod.index),
                                 Rational(prod.sign)});
            }
    return make_algebra(heisenberg_name(family, n), heisenberg_labels(layout), std::move(layers), terms);
}

SubalgebraEmbedding complex_into_quaternionic(const AlgebraPtr& complex_algebra,
                                              const AlgebraPtr& quaternionic_algebra)
{
    const int n = (complex_algebra->dimension() - 1) / 2;
    std::vector<int> map(static_cast<std::size_t>(complex_algebra->dimension()));
    for (int m = 0; m < n; ++m) {
        map[static_cast<std::size_t>(complex::h(n, m))] = quaternionic::h(n, m);
        map[static_cast<std::size_t>(complex::k(n, m))] = quaternionic::k(n, m);
    }
    map[static_cast<std::size_t>(complex::K(n))] = quaternionic::K(n);
    return embed(complex_algebra, quaternionic_algebra, std::move(map));
}

} // namespace filling
