#include "mobi/algebra.hpp"

#include "mobi/errors.hpp"

namespace mobi {

Vec p_eval(const MobiAlgebra& alg, const Vec& a, const Vec& b, const Vec& c) {
    if (!alg.contains(a) || !alg.contains(b) || !alg.contains(c))
        throw domain_error("p_eval: input not in carrier of algebra '" + alg.name + "'");
    Vec r = alg.p(a, b, c);
    if (!alg.contains(r))
        throw domain_error("p_eval: result left carrier of algebra '" + alg.name + "'");
    return r;
}

std::shared_ptr<const MobiAlgebra> canonical_algebra() {
    static const auto instance = [] {
        auto alg = std::make_shared<MobiAlgebra>();
        alg->name = "canonical";
        alg->p = [](const Vec& a, const Vec& b, const Vec& c) {
            return Vec{(1.0 - b[0]) * a[0] + b[0] * c[0]};
        };
        alg->zero = {0.0};
        alg->half = {0.5};
        alg->one = {1.0};
        alg->two = std::nullopt; // 2 is not in [0,1]
        alg->dist = [](const Vec& a, const Vec& b) { return std::abs(a[0] - b[0]); };
        // Membership keeps a 1e-12 slack: the bilinear form can overshoot the
        // endpoints by an ulp.
        alg->contains = [](const Vec& v) {
            return v.size() == 1 && v[0] >= -1e-12 && v[0] <= 1.0 + 1e-12;
        };
        alg->sample = BoxSampler({0.0}, {1.0});
        alg->embed_unit = [](double t) { return Vec{t}; };
        return alg;
    }();
    return instance;
}

} // namespace mobi
