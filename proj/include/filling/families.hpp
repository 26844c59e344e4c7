#pragma once

#include "filling/algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace filling {

enum class Family { complex, quaternionic, octonionic };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

/// +/- e_index. Products of basis units in a Cayley-Dickson algebra are always
/// a signed unit.
struct SignedUnit {
    int sign = 1;
    int index = 0;
    friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// Multiplication table of the basis units e_0 = 1, e_1, ..., e_{rank-1}.
class DivisionAlgebraTable {
public:
    explicit DivisionAlgebraTable(int rank);

    int rank() const { return rank_; }
    SignedUnit product(int p, int q) const { return table_[static_cast<std::size_t>(p * rank_ + q)]; }

private:
    int rank_;
    std::vector<SignedUnit> table_;
};

/// Tables from repeated Cayley-Dickson doubling of the reals,
/// (a + b l)(c + d l) = (ac - conj(d) b) + (da + b conj(c)) l.
/// Rank 4 gives ij = k, jk = i, ki = j with (1, i, j, k) = (e_0, e_1, e_2, e_3).
DivisionAlgebraTable complex_table();
DivisionAlgebraTable quaternion_table();
DivisionAlgebraTable octonion_table();

int rank_of(Family family);

/// Basis layout of heisenberg(family, n). Layer-1 vectors come unit-major,
/// then the imaginary units of layer 2:
///   complex       h_1..h_n, k_1..k_n, K
///   quaternionic  h_1..h_n, i_1..i_n, j_1..j_n, k_1..k_n, I, J, K
///   octonionic    x0_1..x0_n, ..., x7_1..x7_n, X1..X7
struct HeisenbergLayout {
    Family family;
    int n;

    int rank() const { return rank_of(family); }
    int dimension() const { return rank() * n + rank() - 1; }
    /// Layer-1 vector for unit p of coordinate m (both 0-based).
    int horizontal(int unit, int m) const { return unit * n + m; }
    /// Layer-2 vector for imaginary unit p >= 1.
    int vertical(int unit) const { return rank() * n + unit - 1; }
};

/// Family-specific shortcuts for the quaternionic layout (m is 0-based).
namespace quaternionic {
inline int h(int /*n*/, int m) { return m; }
inline int i(int n, int m) { return n + m; }
inline int j(int n, int m) { return 2 * n + m; }
inline int k(int n, int m) { return 3 * n + m; }
inline int I(int n) { return 4 * n; }
inline int J(int n) { return 4 * n + 1; }
inline int K(int n) { return 4 * n + 2; }
} // namespace quaternionic

namespace complex {
inline int h(int /*n*/, int m) { return m; }
inline int k(int n, int m) { return n + m; }
inline int K(int n) { return 2 * n; }
} // namespace complex

std::string heisenberg_name(Family family, int n);

/// The 2-step algebra with V_1 = A^n, V_2 = Im A and per-coordinate bracket
/// [u, v] = Im(u conj(v)); distinct coordinates commute.
/// Throws std::invalid_argument for n < 1.
AlgebraPtr heisenberg(Family family, int n);

/// The inclusion h_m -> h_m, k_m -> k_m, K -> K of heisenberg(complex, n)
/// into heisenberg(quaternionic, n).
SubalgebraEmbedding complex_into_quaternionic(const AlgebraPtr& complex_algebra,
                                              const AlgebraPtr& quaternionic_algebra);

} // namespace filling
