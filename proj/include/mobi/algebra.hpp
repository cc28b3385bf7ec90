#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "mobi/vec.hpp"

namespace mobi {

/// A mobi algebra: carrier with ternary operation p and constants 0, 1/2, 1,
/// together with the sampler, membership predicate and distance the
/// verification harness needs. p(a,b,c) reads as "the position at instant b
/// of a particle moving from a to c".
struct MobiAlgebra {
    std::string name;

    std::function<Vec(const Vec&, const Vec&, const Vec&)> p;
    Vec zero, half, one;
    /// Present when 1/2 is invertible, i.e. p(0, 1/2, two) = 1. Needed by the
    /// module bridge.
    std::optional<Vec> two;

    std::function<double(const Vec&, const Vec&)> dist;
    std::function<bool(const Vec&)> contains;
    std::function<std::vector<Vec>(std::uint64_t, std::size_t)> sample;

    /// Maps a unit-interval parameter into the carrier (identity for scalar
    /// carriers, t -> (t, 0) for the lozenge). Used by path sampling.
    std::function<Vec(double)> embed_unit;

    bool eq(const Vec& a, const Vec& b, double tol) const { return dist(a, b) <= tol; }
};

/// Checked evaluation of p; throws domain_error when an input is not in the
/// carrier.
Vec p_eval(const MobiAlgebra& alg, const Vec& a, const Vec& b, const Vec& c);

// Derived operations of a mobi algebra, each defined by its p-expression and
// evaluated through the exact same code path.
inline Vec complement(const MobiAlgebra& alg, const Vec& a) { return alg.p(alg.one, a, alg.zero); }
inline Vec product(const MobiAlgebra& alg, const Vec& a, const Vec& b) { return alg.p(alg.zero, a, b); }
inline Vec oplus(const MobiAlgebra& alg, const Vec& a, const Vec& b) { return alg.p(a, alg.half, b); }
inline Vec circ(const MobiAlgebra& alg, const Vec& a, const Vec& b) { return alg.p(a, b, alg.one); }

/// The canonical mobi algebra: carrier [0,1], p(a,b,c) = (1-b)a + bc.
std::shared_ptr<const MobiAlgebra> canonical_algebra();

} // namespace mobi
