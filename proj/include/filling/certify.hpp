#pragma once

#include "filling/exterior.hpp"
#include "filling/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace filling {

/// Form-level record of the three conditions of the Stokes-type lower-bound
/// criterion: a closed invariant (m+1)-form of dilation weight s that pairs
/// positively with an (m+1)-chain whose boundary mass scales like t^r gives
/// F^{m+1}(l) >= l^{s/r}.
struct Certificate {
    std::string algebra_name;
    int n = 0;                 // m, so degree = n + 1
    int degree = 0;
    int weight_s = 0;
    int boundary_exponent_r = 0;
    struct Checks {
        bool closed = false;
        bool homogeneous = false;
        bool restriction_nonvanishing = false;
        friend bool operator==(const Checks&, const Checks&) = default;
    } checks;
    Rational exponent;
    std::string provenance_note;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Raised by verify_burillo; condition() names the failed check.
class CertificationError : public std::runtime_error {
public:
    CertificationError(std::string condition, const std::string& detail)
        : std::runtime_error(condition + ": " + detail), condition_(std::move(condition))
    {
    }
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

/// Sum of layer weights of the listed directions: the dilation exponent of
/// the polyvector they span. Throws std::invalid_argument on empty, duplicate
/// or out-of-range input.
int chain_scaling_exponent(const GradedLieAlgebra& algebra, const std::vector<int>& directions);

Certificate verify_burillo(const InvariantForm& form, const SubalgebraEmbedding& embedding,
                           const InvariantForm& reference_restriction, const std::vector<int>& boundary_directions);

struct KernelBasis {
    std::string algebra_name;
    int degree = 0;
    int weight = 0;
    std::size_t space_size = 0; // number of weight-s degree-k monomials
    std::vector<InvariantForm> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Monomial enumeration order for the kernel search.
enum class MonomialOrder { lexicographic, reverse_lexicographic };

struct SearchOptions {
    MonomialOrder order = MonomialOrder::lexicographic;
    unsigned threads = 1;
};

/// Canonical monomials of the given degree and total weight, lexicographic.
std::vector<MultiIndex> weighted_monomials(const GradedLieAlgebra& algebra, int degree, int weight);

/// Exact basis of the closed invariant forms of degree k and weight s.
/// Each basis element is the reduced-echelon kernel vector of one free
/// monomial. Every element is re-checked for closedness before returning.
KernelBasis closed_invariant_forms(const AlgebraPtr& algebra, int degree, int weight,
                                   const SearchOptions& options = {});

/// True iff `form` is a rational combination of the basis elements.
bool in_span(const KernelBasis& basis, const InvariantForm& form);

struct ExponentReport {
    int n = 0;
    Rational exponent;            // (n+2)/n
    Rational euclidean_exponent;  // (n+1)/n
};

/// Throws std::invalid_argument for n < 1.
ExponentReport exponent_report(int n);

} // namespace filling
