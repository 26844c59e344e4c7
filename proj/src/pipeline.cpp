#include "filling/pipeline.hpp"

#include "filling/construction.hpp"

namespace filling {

Certificate certify_heisenberg(Family family, int n, const AlgebraPtr& algebra)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    if (algebra->dimension() != HeisenbergLayout{family, n}.dimension())
        throw UnsupportedInput(algebra->name() + " does not have the " + std::string(to_string(family)) +
                               " layout of rank " + std::to_string(n));
    std::vector<int> directions;
    switch (family) {
    case Family::quaternionic: {
        for (int m = 0; m < n; ++m)
            directions.push_back(quaternionic::h(n, m));
        const AlgebraPtr source = heisenberg(Family::complex, n);
        const SubalgebraEmbedding phi = complex_into_quaternionic(source, algebra);
        return verify_burillo(build_eta(algebra, n), phi, build_gamma(source, n), directions);
    }
    case Family::complex: {
        for (int m = 0; m < n; ++m)
            directions.push_back(complex::h(n, m));
        const InvariantForm gamma = build_gamma(algebra, n);
        return verify_burillo(gamma, identity_embedding(algebra), gamma, directions);
    }
    case Family::octonionic:
        break;
    }
    throw UnsupportedInput("no lower-bound construction is available for the " + std::string(to_string(family)) +
                           " family");
}

std::pair<Family, int> infer_layout(const GradedLieAlgebra& algebra)
{
    int layer1 = 0;
    int layer2 = 0;
    for (int l : algebra.layers()) {
        if (l == 1)
            ++layer1;
        else if (l == 2)
            ++layer2;
        else
            throw UnsupportedInput(algebra.name() + " is not 2-step graded");
    }
    if (layer2 == 3 && layer1 > 0 && layer1 % 4 == 0)
        return {Family::quaternionic, layer1 / 4};
    if (layer2 == 1 && layer1 > 0 && layer1 % 2 == 0)
        return {Family::complex, layer1 / 2};
    throw UnsupportedInput("cannot match " + algebra.name() + " to the complex or quaternionic layout");
}

} // namespace filling
