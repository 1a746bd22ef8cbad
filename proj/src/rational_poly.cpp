#include "flagpart/rational_poly.hpp"

#include <stdexcept>

namespace flagpart {

RationalPoly interpolate_poly(const std::vector<std::pair<mpq_class, mpq_class>>& samples,
                              int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("interpolate_poly: negative degree bound");
    const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    if (samples.size() < need)
        throw std::invalid_argument("interpolate_poly: need at least degree_bound+1 samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw DuplicateAbscissa("interpolate_poly: repeated abscissa " +
                                        samples[i].first.get_str());

    // Newton divided differences on the first degree_bound+1 samples.
    std::vector<mpq_class> xs(need), dd(need);
    for (std::size_t i = 0; i < need; ++i) {
        xs[i] = samples[i].first;
        dd[i] = samples[i].second;
    }
    for (std::size_t level = 1; level < need; ++level)
        for (std::size_t i = need - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    // Expand the Newton form to monomial coefficients.
    std::vector<mpq_class> coeffs(need, 0);
    std::vector<mpq_class> basis{1}; // prod_{k<i} (x - x_k), ascending
    for (std::size_t i = 0; i < need; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += dd[i] * basis[k];
        if (i + 1 < need) {
            basis.push_back(0);
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - xs[i] * basis[k];
            basis[0] = -xs[i] * basis[0];
        }
    }
    RationalPoly p{std::move(coeffs)};

    for (const auto& [x, y] : samples)
        if (p.eval(x) != y)
            throw OverdeterminedMismatch("interpolate_poly: sample at q=" + x.get_str() +
                                         " violates the degree-" + std::to_string(degree_bound) +
                                         " fit");
    return p;
}

} // namespace flagpart
