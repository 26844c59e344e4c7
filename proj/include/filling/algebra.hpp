#pragma once

#include "filling/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace filling {

/// One raw structure constant c_{ij}^k as supplied by a caller or a file.
/// Any ordering of i and j is accepted at ingestion; storage keeps i < j only.
struct BracketTerm {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational coeff;
};

/// A violated algebra invariant. Index fields that do not apply are -1.
struct Violation {
    enum class Kind {
        dimension,
        index_range,
        layer,
        antisymmetry,
        zero_coefficient,
        jacobi,
        grading,
    };
    Kind kind;
    int i = -1;
    int j = -1;
    int k = -1;
    int l = -1;
    std::string message;
};

const char* to_string(Violation::Kind kind);

/// Finite-dimensional graded Lie algebra given by structure constants in a
/// fixed basis. [e_i, e_j] = sum_k c_{ij}^k e_k, stored sparsely for i < j.
///
/// Construction never throws on bad tables: problems found while ingesting raw
/// terms (conflicting antisymmetric pairs, diagonal brackets, explicit zeros,
/// out-of-range indices) are kept and reported by validate().
class GradedLieAlgebra {
public:
    using Row = std::map<int, Rational>; // k -> c_{ij}^k

    GradedLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> layers,
                     std::span<const BracketTerm> terms);

    const std::string& name() const { return name_; }
    int dimension() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& layers() const { return layers_; }
    int layer(int index) const { return layers_.at(static_cast<std::size_t>(index)); }
    int max_layer() const;

    /// Basis index for a label, or -1.
    int index_of(const std::string& label) const;

    /// c_{ij}^k, sign-extended for i > j.
    Rational coefficient(int i, int j, int k) const;

    /// Stored rows for i < j, keyed by (i, j).
    const std::map<std::pair<int, int>, Row>& brackets() const { return brackets_; }

    /// Problems detected while ingesting raw terms.
    const std::vector<Violation>& ingest_issues() const { return ingest_issues_; }

    /// Flattened canonical term list (i < j, ascending).
    std::vector<BracketTerm> terms() const;

    friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> layers_;
    std::map<std::pair<int, int>, Row> brackets_;
    std::vector<Violation> ingest_issues_;
};

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

AlgebraPtr make_algebra(std::string name, std::vector<std::string> labels, std::vector<int> layers,
                        std::span<const BracketTerm> terms);

/// Every violated invariant, in a deterministic order. Empty means valid.
std::vector<Violation> validate(const GradedLieAlgebra& algebra);

/// True iff [V_1, V_j] spans V_{j+1} for every j (exact rank check).
bool is_stratified(const GradedLieAlgebra& algebra);

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Injective, layer- and bracket-preserving index map between two algebras.
class SubalgebraEmbedding {
public:
    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<int>& index_map() const { return index_map_; }

    /// Source index whose image is `target_index`, or -1.
    int preimage(int target_index) const;

    friend SubalgebraEmbedding embed(AlgebraPtr source, AlgebraPtr target, std::vector<int> index_map);

private:
    SubalgebraEmbedding(AlgebraPtr source, AlgebraPtr target, std::vector<int> index_map);

    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<int> index_map_;
    std::vector<int> inverse_;
};

/// Checks injectivity, layers and brackets; throws EmbeddingError naming the
/// first offending index or pair.
SubalgebraEmbedding embed(AlgebraPtr source, AlgebraPtr target, std::vector<int> index_map);

/// The identity embedding of an algebra into itself.
SubalgebraEmbedding identity_embedding(const AlgebraPtr& algebra);

} // namespace filling
