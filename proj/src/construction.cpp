#include "filling/construction.hpp"

#include <numeric>
#include <stdexcept>

namespace filling {

BitWord::BitWord(std::vector<int> bits) : bits_(std::move(bits))
{
    if (bits_.empty())
        throw std::invalid_argument("bit word must have length at least 1");
    for (int b : bits_)
        if (b != 0 && b != 1)
            throw std::invalid_argument("bit word entries must be 0 or 1");
}

int BitWord::weight() const
{
    return std::accumulate(bits_.begin(), bits_.end(), 0);
}

BitWord BitWord::flipped(std::size_t r) const
{
    std::vector<int> bits = bits_;
    bits.at(r) = 1 - bits[r];
    return BitWord(std::move(bits));
}

std::vector<BitWord> all_words(int n)
{
    if (n < 1 || n > 30)
        throw std::invalid_argument("word length must be in [1, 30]");
    std::vector<BitWord> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << n); ++code) {
        std::vector<int> bits(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m)
            bits[static_cast<std::size_t>(m)] = static_cast<int>((code >> (n - 1 - m)) & 1u);
        out.emplace_back(std::move(bits));
    }
    return out;
}

int sign_of(const BitWord& word)
{
    const int r = word.weight() % 4;
    return (r == 0 || r == 3) ? 1 : -1;
}

namespace {

void require_quaternionic(const AlgebraPtr& algebra, int n)
{
    if (algebra->dimension() != 4 * n + 3)
        throw std::invalid_argument("expected the quaternionic Heisenberg algebra of rank " + std::to_string(n) +
                                    " (dimension " + std::to_string(4 * n + 3) + ")");
}

} // namespace

InvariantForm v_form(const AlgebraPtr& quaternionic_algebra, const BitWord& word)
{
    const int n = static_cast<int>(word.length());
    if (quaternionic_algebra->dimension() != 4 * n + 3)
        throw std::invalid_argument("bit word length does not match the algebra rank");
    std::vector<int> factors;
    factors.reserve(word.length());
    for (int m = 0; m < n; ++m)
        factors.push_back(word[static_cast<std::size_t>(m)] == 0 ? quaternionic::h(n, m) : quaternionic::i(n, m));
    return InvariantForm::monomial(quaternionic_algebra, std::move(factors));
}

InvariantForm build_gamma(const AlgebraPtr& complex_algebra, int n)
{
    if (n < 1)
        throw std::invalid_argument("build_gamma: n must be at least 1");
    if (complex_algebra->dimension() != 2 * n + 1)
        throw std::invalid_argument("expected the complex Heisenberg algebra of rank " + std::to_string(n));
    std::vector<int> factors{complex::K(n)};
    for (int m = 0; m < n; ++m)
        factors.push_back(complex::h(n, m));
    return InvariantForm::monomial(complex_algebra, std::move(factors), n % 2 == 0 ? 1 : -1);
}

InvariantForm build_gamma(int n)
{
    return build_gamma(heisenberg(Family::complex, n), n);
}

InvariantForm build_eta(const AlgebraPtr& quaternionic_algebra, int n)
{
    if (n < 1)
        throw std::invalid_argument("build_eta: n must be at least 1");
    require_quaternionic(quaternionic_algebra, n);
    const auto theta_K = InvariantForm::monomial(quaternionic_algebra, {quaternionic::K(n)});
    const auto theta_J = InvariantForm::monomial(quaternionic_algebra, {quaternionic::J(n)});

    InvariantForm eta(quaternionic_algebra, n + 1);
    for (const BitWord& a : all_words(n)) {
        const InvariantForm va = v_form(quaternionic_algebra, a);
        if (a.is_even())
            eta += sign_of(a) * wedge(va, theta_K);
        else
            eta -= sign_of(a) * wedge(va, theta_J);
    }
    return eta;
}

InvariantForm build_eta(int n)
{
    return build_eta(heisenberg(Family::quaternionic, n), n);
}

} // namespace filling
