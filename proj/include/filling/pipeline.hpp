#pragma once

#include "filling/certify.hpp"
#include "filling/families.hpp"

#include <stdexcept>
#include <utility>

namespace filling {

/// The family has no lower-bound construction (octonionic), or an algebra
/// does not match a certified layout.
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Full lower-bound pipeline on `algebra`, which must use the built-in basis
/// layout of `family` at rank n:
///   quaternionic  eta on the algebra, gamma on heisenberg(complex, n), the
///                 inclusion h -> h, k -> k, K -> K, boundary h_1..h_n
///   complex       gamma with the identity embedding, boundary h_1..h_n
/// Throws CertificationError on a failed check and EmbeddingError if the
/// inclusion is not a Lie algebra embedding.
Certificate certify_heisenberg(Family family, int n, const AlgebraPtr& algebra);

inline Certificate certify_heisenberg(Family family, int n)
{
    return certify_heisenberg(family, n, heisenberg(family, n));
}

/// Family and rank of a 2-step algebra from its layer sizes
/// (4n + 3 for quaternionic, 2n + 1 for complex).
std::pair<Family, int> infer_layout(const GradedLieAlgebra& algebra);

} // namespace filling
