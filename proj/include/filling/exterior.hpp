#pragma once

#include "filling/algebra.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <vector>

namespace filling {

/// Strictly increasing tuple of basis indices labelling the monomial
/// theta^{i_1} ^ ... ^ theta^{i_k}.
class MultiIndex {
public:
    MultiIndex() = default;
    /// Throws std::invalid_argument unless `indices` is strictly increasing.
    explicit MultiIndex(std::vector<int> indices);

    std::size_t size() const { return indices_.size(); }
    int operator[](std::size_t pos) const { return indices_[pos]; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }
    const std::vector<int>& indices() const { return indices_; }

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> indices_;
};

/// Sorts `factors` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats (the wedge product vanishes).
int sort_with_sign(std::vector<int>& factors);

/// Sum of layer weights of the monomial's dual factors.
int weight(const GradedLieAlgebra& algebra, const MultiIndex& monomial);

class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Left-invariant exterior form: a sparse rational combination of canonical
/// monomials of one degree. Zero coefficients are never stored.
class InvariantForm {
public:
    using Terms = std::map<MultiIndex, Rational>;

    InvariantForm(AlgebraPtr algebra, int degree);

    /// theta^{f_1} ^ ... ^ theta^{f_k} in the given factor order.
    static InvariantForm monomial(AlgebraPtr algebra, std::vector<int> factors, const Rational& coeff = 1);
    static InvariantForm monomial(AlgebraPtr algebra, std::initializer_list<int> factors, const Rational& coeff = 1)
    {
        return monomial(std::move(algebra), std::vector<int>(factors), coeff);
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a canonical monomial (0 if absent).
    Rational coefficient(const MultiIndex& monomial) const;

    /// Adds coeff * theta^{f_1} ^ ... ^ theta^{f_k}, reordering with sign.
    void add_term(std::vector<int> factors, const Rational& coeff);
    void add(const MultiIndex& monomial, const Rational& coeff);

    InvariantForm& operator+=(const InvariantForm& other);
    InvariantForm& operator-=(const InvariantForm& other);
    InvariantForm& operator*=(const Rational& scalar);

    friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
    friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
    friend InvariantForm operator*(const Rational& s, InvariantForm a) { return a *= s; }
    friend InvariantForm operator-(InvariantForm a) { return a *= -1; }

    /// Same degree, same terms, structurally equal algebras.
    friend bool operator==(const InvariantForm& a, const InvariantForm& b);

private:
    void check_compatible(const InvariantForm& other) const;

    AlgebraPtr algebra_;
    int degree_;
    Terms terms_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);

/// Chevalley-Eilenberg differential with d theta^k = -sum_{i<j} c_{ij}^k
/// theta^i ^ theta^j, extended as a degree +1 anti-derivation.
InvariantForm differential(const InvariantForm& form);

/// Dilation grading: s_t^* acts on the weight-w component by t^w.
struct WeightDecomposition {
    std::map<int, InvariantForm> components;

    bool is_homogeneous() const { return components.size() == 1; }
    /// The single weight when homogeneous.
    int weight() const;
};

WeightDecomposition weight_decompose(const InvariantForm& form);

/// Pullback along the embedding: monomials with a factor outside the image
/// vanish; the rest are re-indexed on the source and re-sorted with sign.
InvariantForm restrict(const InvariantForm& form, const SubalgebraEmbedding& embedding);

} // namespace filling
