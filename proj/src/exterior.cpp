#include "filling/exterior.hpp"

#include <algorithm>

namespace filling {

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices))
{
    for (std::size_t p = 1; p < indices_.size(); ++p)
        if (indices_[p - 1] >= indices_[p])
            throw std::invalid_argument("MultiIndex must be strictly increasing");
}

int sort_with_sign(std::vector<int>& factors)
{
    // Insertion sort; factor lists are short.
    int sign = 1;
    for (std::size_t p = 1; p < factors.size(); ++p) {
        const int value = factors[p];
        std::size_t q = p;
        while (q > 0 && factors[q - 1] > value) {
            factors[q] = factors[q - 1];
            --q;
            sign = -sign;
        }
        factors[q] = value;
        if (q > 0 && factors[q - 1] == value)
            return 0;
    }
    return sign;
}

int weight(const GradedLieAlgebra& algebra, const MultiIndex& monomial)
{
    int total = 0;
    for (int x : monomial)
        total += algebra.layer(x);
    return total;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && *a == *b);
}

InvariantForm::InvariantForm(AlgebraPtr algebra, int degree) : algebra_(std::move(algebra)), degree_(degree)
{
    if (degree_ < 0)
        throw std::invalid_argument("form degree must be nonnegative");
}

InvariantForm InvariantForm::monomial(AlgebraPtr algebra, std::vector<int> factors, const Rational& coeff)
{
    InvariantForm out(std::move(algebra), static_cast<int>(factors.size()));
    out.add_term(std::move(factors), coeff);
    return out;
}

Rational InvariantForm::coefficient(const MultiIndex& monomial) const
{
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
}

void InvariantForm::add_term(std::vector<int> factors, const Rational& coeff)
{
    if (static_cast<int>(factors.size()) != degree_)
        throw std::invalid_argument("monomial length does not match form degree");
    for (int x : factors)
        if (x < 0 || x >= algebra_->dimension())
            throw std::invalid_argument("basis index out of range");
    const int sign = sort_with_sign(factors);
    if (sign == 0)
        return;
    add(MultiIndex(std::move(factors)), sign > 0 ? coeff : Rational(-coeff));
}

void InvariantForm::add(const MultiIndex& monomial, const Rational& coeff)
{
    if (coeff == 0)
        return;
    if (static_cast<int>(monomial.size()) != degree_)
        throw std::invalid_argument("monomial length does not match form degree");
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void InvariantForm::check_compatible(const InvariantForm& other) const
{
    if (!same_algebra(algebra_, other.algebra_))
        throw AlgebraMismatch("forms live on different algebras");
    if (degree_ != other.degree_)
        throw std::invalid_argument("forms have different degrees");
}

InvariantForm& InvariantForm::operator+=(const InvariantForm& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

InvariantForm& InvariantForm::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

bool operator==(const InvariantForm& a, const InvariantForm& b)
{
    return a.degree_ == b.degree_ && a.terms_ == b.terms_ && same_algebra(a.algebra_, b.algebra_);
}

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b)
{
    if (!same_algebra(a.algebra(), b.algebra()))
        throw AlgebraMismatch("wedge of forms on different algebras");
    InvariantForm out(a.algebra(), a.degree() + b.degree());
    std::vector<int> factors;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            factors.assign(ma.begin(), ma.end());
            factors.insert(factors.end(), mb.begin(), mb.end());
            const int sign = sort_with_sign(factors);
            if (sign != 0)
                out.add(MultiIndex(factors), sign * ca * cb);
        }
    return out;
}

namespace {

struct DualTerm {
    int a;
    int b;
    Rational coeff;
};

// d theta^k for every k.
std::vector<std::vector<DualTerm>> dual_differentials(const GradedLieAlgebra& algebra)
{
    std::vector<std::vector<DualTerm>> out(static_cast<std::size_t>(algebra.dimension()));
    for (const auto& [ij, row] : algebra.brackets())
        for (const auto& [k, c] : row)
            out[static_cast<std::size_t>(k)].push_back({ij.first, ij.second, -c});
    return out;
}

} // namespace

InvariantForm differential(const InvariantForm& form)
{
    const auto dtheta = dual_differentials(*form.algebra());
    InvariantForm out(form.algebra(), form.degree() + 1);
    std::vector<int> factors;
    for (const auto& [mono, coeff] : form.terms()) {
        for (std::size_t p = 0; p < mono.size(); ++p) {
            const auto& terms = dtheta[static_cast<std::size_t>(mono[p])];
            if (terms.empty())
                continue;
            const int position_sign = (p % 2 == 0) ? 1 : -1;
            for (const DualTerm& t : terms) {
                factors.clear();
                factors.insert(factors.end(), mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(p));
                factors.push_back(t.a);
                factors.push_back(t.b);
                factors.insert(factors.end(), mono.begin() + static_cast<std::ptrdiff_t>(p) + 1, mono.end());
                const int sign = sort_with_sign(factors);
                if (sign != 0)
                    out.add(MultiIndex(factors), sign * position_sign * coeff * t.coeff);
            }
        }
    }
    return out;
}

int WeightDecomposition::weight() const
{
    if (!is_homogeneous())
        throw std::logic_error("form is not weight-homogeneous");
    return components.begin()->first;
}

WeightDecomposition weight_decompose(const InvariantForm& form)
{
    WeightDecomposition out;
    for (const auto& [mono, coeff] : form.terms()) {
        const int w = weight(*form.algebra(), mono);
        auto it = out.components.try_emplace(w, form.algebra(), form.degree()).first;
        it->second.add(mono, coeff);
    }
    return out;
}

InvariantForm restrict(const InvariantForm& form, const SubalgebraEmbedding& embedding)
{
    if (!same_algebra(form.algebra(), embedding.target()))
        throw AlgebraMismatch("form does not live on the embedding target");
    InvariantForm out(embedding.source(), form.degree());
    std::vector<int> factors;
    for (const auto& [mono, coeff] : form.terms()) {
        factors.clear();
        bool in_image = true;
        for (int x : mono) {
            const int pre = embedding.preimage(x);
            if (pre < 0) {
                in_image = false;
                break;
            }
            factors.push_back(pre);
        }
        if (!in_image)
            continue;
        const int sign = sort_with_sign(factors);
        if (sign != 0)
            out.add(MultiIndex(factors), sign * coeff);
    }
    return out;
}

} // namespace filling
