#include "filling/algebra.hpp"

#include "filling/linalg.hpp"

#include <algorithm>
#include <set>

namespace filling {

const char* to_string(Violation::Kind kind)
{
    switch (kind) {
    case Violation::Kind::dimension: return "dimension";
    case Violation::Kind::index_range: return "index_range";
    case Violation::Kind::layer: return "layer";
    case Violation::Kind::antisymmetry: return "antisymmetry";
    case Violation::Kind::zero_coefficient: return "zero_coefficient";
    case Violation::Kind::jacobi: return "jacobi";
    case Violation::Kind::grading: return "grading";
    }
    return "unknown";
}

GradedLieAlgebra::GradedLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> layers,
                                   std::span<const BracketTerm> terms)
    : name_(std::move(name)), labels_(std::move(labels)), layers_(std::move(layers))
{
    using K = Violation::Kind;
    const int dim = static_cast<int>(labels_.size());
    if (dim == 0 || layers_.size() != labels_.size())
        ingest_issues_.push_back({K::dimension, -1, -1, -1, -1,
                                  "need one layer per label and at least one basis vector"});
    for (int idx = 0; idx < static_cast<int>(layers_.size()); ++idx)
        if (layers_[static_cast<std::size_t>(idx)] < 1)
            ingest_issues_.push_back({K::layer, idx, -1, -1, -1, "layer must be a positive integer"});

    auto in_range = [dim](int x) { return x >= 0 && x < dim; };
    for (const BracketTerm& t : terms) {
        if (!in_range(t.i) || !in_range(t.j) || !in_range(t.k)) {
            ingest_issues_.push_back({K::index_range, t.i, t.j, t.k, -1, "index out of range"});
            continue;
        }
        if (t.coeff == 0) {
            ingest_issues_.push_back({K::zero_coefficient, t.i, t.j, t.k, -1, "explicit zero coefficient"});
            continue;
        }
        if (t.i == t.j) {
            ingest_issues_.push_back({K::antisymmetry, t.i, t.j, t.k, -1, "nonzero [e_i, e_i]"});
            continue;
        }
        const int lo = std::min(t.i, t.j);
        const int hi = std::max(t.i, t.j);
        const Rational value = t.i < t.j ? t.coeff : Rational(-t.coeff);
        auto& row = brackets_[{lo, hi}];
        auto [it, inserted] = row.emplace(t.k, value);
        if (!inserted && it->second != value)
            ingest_issues_.push_back({K::antisymmetry, lo, hi, t.k, -1,
                                      "c_ij^k and c_ji^k are not negatives of each other"});
    }
}

int GradedLieAlgebra::max_layer() const
{
    return layers_.empty() ? 0 : *std::max_element(layers_.begin(), layers_.end());
}

int GradedLieAlgebra::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Rational GradedLieAlgebra::coefficient(int i, int j, int k) const
{
    if (i == j)
        return 0;
    auto it = brackets_.find({std::min(i, j), std::max(i, j)});
    if (it == brackets_.end())
        return 0;
    auto c = it->second.find(k);
    if (c == it->second.end())
        return 0;
    return i < j ? c->second : Rational(-c->second);
}

std::vector<BracketTerm> GradedLieAlgebra::terms() const
{
    std::vector<BracketTerm> out;
    for (const auto& [ij, row] : brackets_)
        for (const auto& [k, c] : row)
            out.push_back({ij.first, ij.second, k, c});
    return out;
}

bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b)
{
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.layers_ == b.layers_ && a.brackets_ == b.brackets_;
}

AlgebraPtr make_algebra(std::string name, std::vector<std::string> labels, std::vector<int> layers,
                        std::span<const BracketTerm> terms)
{
    return std::make_shared<const GradedLieAlgebra>(std::move(name), std::move(labels), std::move(layers), terms);
}

namespace {

// [e_i, e_j] as a sparse vector (sign-extended).
std::map<int, Rational> bracket(const GradedLieAlgebra& g, int i, int j)
{
    std::map<int, Rational> out;
    if (i == j)
        return out;
    auto it = g.brackets().find({std::min(i, j), std::max(i, j)});
    if (it == g.brackets().end())
        return out;
    for (const auto& [k, c] : it->second)
        out.emplace(k, i < j ? c : Rational(-c));
    return out;
}

} // namespace

std::vector<Violation> validate(const GradedLieAlgebra& algebra)
{
    using K = Violation::Kind;
    std::vector<Violation> out = algebra.ingest_issues();
    const int dim = algebra.dimension();
    if (static_cast<int>(algebra.layers().size()) != dim)
        return out;

    for (const auto& [ij, row] : algebra.brackets())
        for (const auto& [k, c] : row) {
            if (c == 0)
                out.push_back({K::zero_coefficient, ij.first, ij.second, k, -1, "stored zero coefficient"});
            else if (algebra.layer(k) != algebra.layer(ij.first) + algebra.layer(ij.second))
                out.push_back({K::grading, ij.first, ij.second, k, -1,
                               "layer(k) != layer(i) + layer(j)"});
        }

    // The Jacobiator is alternating in (i, j, k), so ordered triples suffice.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                std::map<int, Rational> sum;
                auto accumulate = [&](int a, int b, int c) {
                    for (const auto& [m, x] : bracket(algebra, a, b))
                        for (const auto& [l, y] : bracket(algebra, m, c))
                            sum[l] += x * y;
                };
                accumulate(i, j, k);
                accumulate(j, k, i);
                accumulate(k, i, j);
                for (const auto& [l, v] : sum)
                    if (v != 0)
                        out.push_back({K::jacobi, i, j, k, l, "Jacobi identity fails"});
            }
    return out;
}

bool is_stratified(const GradedLieAlgebra& algebra)
{
    const int top = algebra.max_layer();
    const int dim = algebra.dimension();
    for (int level = 1; level < top; ++level) {
        std::vector<int> next;
        for (int x = 0; x < dim; ++x)
            if (algebra.layer(x) == level + 1)
                next.push_back(x);
        if (next.empty())
            continue;

        std::vector<linalg::SparseVector> images;
        for (int a = 0; a < dim; ++a) {
            if (algebra.layer(a) != 1)
                continue;
            for (int b = 0; b < dim; ++b) {
                if (algebra.layer(b) != level)
                    continue;
                linalg::SparseVector v;
                for (const auto& [k, c] : bracket(algebra, a, b))
                    v.emplace_back(k, c);
                if (!v.empty())
                    images.push_back(std::move(v));
            }
        }
        if (linalg::rank(std::move(images)) != next.size())
            return false;
    }
    return true;
}

SubalgebraEmbedding::SubalgebraEmbedding(AlgebraPtr source, AlgebraPtr target, std::vector<int> index_map)
    : source_(std::move(source)), target_(std::move(target)), index_map_(std::move(index_map)),
      inverse_(static_cast<std::size_t>(target_->dimension()), -1)
{
    for (std::size_t s = 0; s < index_map_.size(); ++s)
        inverse_[static_cast<std::size_t>(index_map_[s])] = static_cast<int>(s);
}

int SubalgebraEmbedding::preimage(int target_index) const
{
    if (target_index < 0 || target_index >= static_cast<int>(inverse_.size()))
        return -1;
    return inverse_[static_cast<std::size_t>(target_index)];
}

SubalgebraEmbedding embed(AlgebraPtr source, AlgebraPtr target, std::vector<int> index_map)
{
    const int sdim = source->dimension();
    const int tdim = target->dimension();
    if (static_cast<int>(index_map.size()) != sdim)
        throw EmbeddingError("index map has " + std::to_string(index_map.size()) + " entries, source dimension is " +
                             std::to_string(sdim));

    std::set<int> seen;
    for (int s = 0; s < sdim; ++s) {
        const int t = index_map[static_cast<std::size_t>(s)];
        if (t < 0 || t >= tdim)
            throw EmbeddingError("image of " + source->labels()[static_cast<std::size_t>(s)] + " out of range");
        if (!seen.insert(t).second)
            throw EmbeddingError("index map not injective at " + source->labels()[static_cast<std::size_t>(s)]);
        if (target->layer(t) != source->layer(s))
            throw EmbeddingError("layer mismatch: " + source->labels()[static_cast<std::size_t>(s)] + " -> " +
                                 target->labels()[static_cast<std::size_t>(t)]);
    }

    std::vector<int> inverse(static_cast<std::size_t>(tdim), -1);
    for (int s = 0; s < sdim; ++s)
        inverse[static_cast<std::size_t>(index_map[static_cast<std::size_t>(s)])] = s;

    // [Phi e_a, Phi e_b] must equal Phi [e_a, e_b]: the target bracket may not
    // leave the image and must carry the same coefficients.
    for (int a = 0; a < sdim; ++a)
        for (int b = a + 1; b < sdim; ++b) {
            const auto src = bracket(*source, a, b);
            const auto tgt = bracket(*target, index_map[static_cast<std::size_t>(a)], index_map[static_cast<std::size_t>(b)]);
            std::map<int, Rational> pulled;
            bool leaves_image = false;
            for (const auto& [k, c] : tgt) {
                const int pre = inverse[static_cast<std::size_t>(k)];
                if (pre < 0)
                    leaves_image = true;
                else
                    pulled.emplace(pre, c);
            }
            if (leaves_image || pulled != src)
                throw EmbeddingError("bracket not preserved for pair (" + source->labels()[static_cast<std::size_t>(a)] +
                                     ", " + source->labels()[static_cast<std::size_t>(b)] + ")");
        }
    return SubalgebraEmbedding(std::move(source), std::move(target), std::move(index_map));
}

SubalgebraEmbedding identity_embedding(const AlgebraPtr& algebra)
{
    std::vector<int> map(static_cast<std::size_t>(algebra->dimension()));
    for (int x = 0; x < algebra->dimension(); ++x)
        map[static_cast<std::size_t>(x)] = x;
    return embed(algebra, algebra, std::move(map));
}

} // namespace filling
