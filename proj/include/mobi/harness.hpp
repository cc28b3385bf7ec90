#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mobi/algebra.hpp"
#include "mobi/report.hpp"

namespace mobi {

/// Checks axioms A1-A8 on sampled inputs. Equational axioms compare both
/// sides with dist <= tol; the cancellation axiom A6 is checked
/// contrapositively: inputs separated by at least kSeparationFloor must keep
/// their images separated by at least tol.
std::vector<AxiomReport> check_algebra_axioms(const MobiAlgebra& alg, std::uint64_t seed,
                                              std::size_t n_samples, double tol);

/// Checks the derived identities eq5-eq13 (complement/product/oplus/circ
/// laws); eq7 and eq9 are implication-shaped and tested contrapositively.
std::vector<AxiomReport> check_derived_properties(const MobiAlgebra& alg, std::uint64_t seed,
                                                  std::size_t n_samples, double tol);

/// A binary operation together with the sampler and distance needed to test
/// the midpoint-algebra laws.
struct MidpointSystem {
    std::function<Vec(const Vec&, const Vec&)> op;
    std::function<std::vector<Vec>(std::uint64_t, std::size_t)> sample;
    std::function<double(const Vec&, const Vec&)> dist;
};

/// Midpoint-algebra laws: idempotency, commutativity, cancellation
/// (contrapositive) and mediality.
std::vector<AxiomReport> check_midpoint_axioms(const MidpointSystem& sys, std::uint64_t seed,
                                               std::size_t n_samples, double tol);

} // namespace mobi
