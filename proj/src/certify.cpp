#include "filling/certify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace filling {

namespace {

const char* const kProvenanceNote =
    "Condition 2 is certified at the form level: the restriction of the form to the embedded subalgebra "
    "equals the reference form exactly and is nonzero. Existence of the comparison chain in the embedded "
    "subgroup and positivity of the reference form's integral over it are imported from the cited "
    "construction, not re-derived. The constant C of condition 1 is not computed.";

} // namespace

int chain_scaling_exponent(const GradedLieAlgebra& algebra, const std::vector<int>& directions)
{
    if (directions.empty())
        throw std::invalid_argument("boundary directions must be nonempty");
    std::set<int> seen;
    int total = 0;
    for (int d : directions) {
        if (d < 0 || d >= algebra.dimension())
            throw std::invalid_argument("boundary direction " + std::to_string(d) + " out of range");
        if (!seen.insert(d).second)
            throw std::invalid_argument("duplicate boundary direction " + algebra.labels()[static_cast<std::size_t>(d)]);
        total += algebra.layer(d);
    }
    return total;
}

Certificate verify_burillo(const InvariantForm& form, const SubalgebraEmbedding& embedding,
                           const InvariantForm& reference_restriction, const std::vector<int>& boundary_directions)
{
    if (!same_algebra(form.algebra(), embedding.target()))
        throw CertificationError("input", "form does not live on the embedding target");
    if (!same_algebra(reference_restriction.algebra(), embedding.source()))
        throw CertificationError("input", "reference form does not live on the embedding source");

    Certificate cert;
    cert.algebra_name = form.algebra()->name();
    cert.degree = form.degree();
    cert.n = form.degree() - 1;

    if (form.is_zero())
        throw CertificationError("closed", "form is zero");
    const InvariantForm d = differential(form);
    if (!d.is_zero())
        throw CertificationError("closed", "differential has " + std::to_string(d.size()) + " nonzero terms");
    cert.checks.closed = true;

    const WeightDecomposition weights = weight_decompose(form);
    if (!weights.is_homogeneous())
        throw CertificationError("homogeneous",
                                 "form has " + std::to_string(weights.components.size()) + " weight components");
    cert.weight_s = weights.weight();
    cert.checks.homogeneous = true;

    if (reference_restriction.is_zero())
        throw CertificationError("restriction_nonvanishing", "reference form is zero");
    if (restrict(form, embedding) != reference_restriction)
        throw CertificationError("restriction_nonvanishing", "restriction differs from the reference form");
    cert.checks.restriction_nonvanishing = true;

    try {
        cert.boundary_exponent_r = chain_scaling_exponent(*form.algebra(), boundary_directions);
    } catch (const std::invalid_argument& e) {
        throw CertificationError("boundary_directions", e.what());
    }

    cert.exponent = ratio(cert.weight_s, cert.boundary_exponent_r);
    cert.provenance_note = kProvenanceNote;
    return cert;
}

std::vector<MultiIndex> weighted_monomials(const GradedLieAlgebra& algebra, int degree, int weight)
{
    std::vector<MultiIndex> out;
    if (degree < 0)
        return out;
    const int dim = algebra.dimension();
    std::vector<int> current;
    // Layers are >= 1, so each remaining factor needs at least weight 1.
    auto recurse = [&](auto&& self, int start, int remaining_weight) -> void {
        const int remaining = degree - static_cast<int>(current.size());
        if (remaining == 0) {
            if (remaining_weight == 0)
                out.emplace_back(current);
            return;
        }
        for (int x = start; x <= dim - remaining; ++x) {
            const int w = algebra.layer(x);
            if (remaining_weight - w < remaining - 1)
                continue;
            current.push_back(x);
            self(self, x + 1, remaining_weight - w);
            current.pop_back();
        }
    };
    recurse(recurse, 0, weight);
    return out;
}

KernelBasis closed_invariant_forms(const AlgebraPtr& algebra, int degree, int weight, const SearchOptions& options)
{
    if (degree < 1)
        throw std::invalid_argument("degree must be at least 1");
    KernelBasis result;
    result.algebra_name = algebra->name();
    result.degree = degree;
    result.weight = weight;

    std::vector<MultiIndex> columns = weighted_monomials(*algebra, degree, weight);
    if (options.order == MonomialOrder::reverse_lexicographic)
        std::reverse(columns.begin(), columns.end());
    result.space_size = columns.size();
    if (columns.empty())
        return result;

    // Rows are target monomials of degree k+1, numbered on first appearance.
    std::map<MultiIndex, std::size_t> row_of;
    std::vector<linalg::SparseVector> rows;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const InvariantForm image =
            differential(InvariantForm::monomial(algebra, columns[c].indices()));
        for (const auto& [mono, coeff] : image.terms()) {
            auto [it, inserted] = row_of.try_emplace(mono, rows.size());
            if (inserted)
                rows.emplace_back();
            rows[it->second].emplace_back(static_cast<int>(c), coeff);
        }
    }

    const auto vectors = linalg::kernel(rows, static_cast<int>(columns.size()), {options.threads});
    result.basis.reserve(vectors.size());
    for (const auto& v : vectors) {
        InvariantForm f(algebra, degree);
        for (const auto& [c, x] : v)
            f.add(columns[static_cast<std::size_t>(c)], x);
        if (!differential(f).is_zero())
            throw std::logic_error("kernel vector is not closed");
        result.basis.push_back(std::move(f));
    }
    return result;
}

bool in_span(const KernelBasis& basis, const InvariantForm& form)
{
    std::map<MultiIndex, int> column_of;
    auto column = [&](const MultiIndex& m) {
        return column_of.try_emplace(m, static_cast<int>(column_of.size())).first->second;
    };
    auto to_vector = [&](const InvariantForm& f) {
        linalg::SparseVector v;
        for (const auto& [m, c] : f.terms())
            v.emplace_back(column(m), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };
    std::vector<linalg::SparseVector> rows;
    rows.reserve(basis.basis.size());
    for (const auto& b : basis.basis)
        rows.push_back(to_vector(b));
    return linalg::in_span(std::move(rows), to_vector(form));
}

ExponentReport exponent_report(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    ExponentReport r;
    r.n = n;
    r.exponent = ratio(n + 2, n);
    r.euclidean_exponent = ratio(n + 1, n);
    return r;
}

} // namespace filling
