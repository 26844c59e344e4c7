#pragma once

#include "filling/exterior.hpp"
#include "filling/families.hpp"

#include <cstdint>
#include <vector>

namespace filling {

/// A word a in {0,1}^n. Bit m selects h_m (0) or i_m (1) in v(a).
class BitWord {
public:
    /// Throws std::invalid_argument on an empty word or entries outside {0, 1}.
    explicit BitWord(std::vector<int> bits);

    std::size_t length() const { return bits_.size(); }
    int operator[](std::size_t m) const { return bits_[m]; }
    const std::vector<int>& bits() const { return bits_; }

    /// Number of ones.
    int weight() const;
    bool is_even() const { return weight() % 2 == 0; }

    /// The word with bit r flipped.
    BitWord flipped(std::size_t r) const;

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    std::vector<int> bits_;
};

/// All 2^n words in lexicographic order (a_1 most significant).
std::vector<BitWord> all_words(int n);

/// +1 when the number of ones is 0 or 3 mod 4, -1 when it is 1 or 2 mod 4.
int sign_of(const BitWord& word);

/// v(a) = v_{a_1,1} ^ ... ^ v_{a_n,n} with v_{0,m} = theta^{h_m} and
/// v_{1,m} = theta^{i_m}, on the quaternionic algebra of rank n.
InvariantForm v_form(const AlgebraPtr& quaternionic_algebra, const BitWord& word);

/// gamma = (-1)^n theta^K ^ theta^{h_1} ^ ... ^ theta^{h_n} on the complex
/// Heisenberg algebra; canonically +theta^{h_1} ^ ... ^ theta^{h_n} ^ theta^K.
InvariantForm build_gamma(const AlgebraPtr& complex_algebra, int n);
InvariantForm build_gamma(int n);

/// eta = sum_{even a} sign(a) v(a) ^ theta^K - sum_{odd a} sign(a) v(a) ^ theta^J
/// on the quaternionic Heisenberg algebra of rank n. 2^n monomials.
InvariantForm build_eta(const AlgebraPtr& quaternionic_algebra, int n);
InvariantForm build_eta(int n);

} // namespace filling
