#include "mobi/harness.hpp"

namespace mobi {

namespace {

// Per-axiom sub-seed so each report draws an independent, reproducible
// stream.
std::uint64_t subseed(std::uint64_t seed, std::uint64_t k) {
    return seed + 0x9E3779B97F4A7C15ull * (k + 1);
}

using Tuple = std::vector<Vec>;

std::vector<Tuple> draw_tuples(const MobiAlgebra& alg, std::uint64_t seed, std::size_t n,
                               std::size_t arity) {
    auto pool = alg.sample(seed, n * arity);
    std::vector<Tuple> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Tuple t(arity);
        for (std::size_t j = 0; j < arity; ++j) t[j] = pool[i * arity + j];
        out[i] = std::move(t);
    }
    return out;
}

// Runs one equational law: eval returns (lhs, rhs) for a sampled tuple.
AxiomReport equational(const MobiAlgebra& alg, const std::string& id,
                       std::vector<std::string> names, std::uint64_t seed, std::size_t n,
                       double tol,
                       const std::function<std::pair<Vec, Vec>(const Tuple&)>& eval) {
    AxiomReport rep;
    rep.axiom_id = id;
    rep.input_names = std::move(names);
    const std::size_t arity = rep.input_names.size();
    if (arity == 0) {
        auto [lhs, rhs] = eval({});
        rep.samples_tested = 1;
        const double d = alg.dist(lhs, rhs);
        if (!(d <= tol)) rep.record_failure({{}, lhs, rhs, d});
        return rep;
    }
    for (auto& t : draw_tuples(alg, seed, n, arity)) {
        auto [lhs, rhs] = eval(t);
        ++rep.samples_tested;
        const double d = alg.dist(lhs, rhs);
        if (!(d <= tol)) rep.record_failure({t, lhs, rhs, d});
    }
    return rep;
}

// Contrapositive check of an implication "f(u) = f(v) => u = v": inputs
// separated by at least kSeparationFloor must keep images separated by at
// least tol.
AxiomReport contrapositive(const MobiAlgebra& alg, const std::string& id,
                           std::vector<std::string> names, std::uint64_t seed, std::size_t n,
                           double tol, std::size_t arity, std::size_t sep_i, std::size_t sep_j,
                           const std::function<std::pair<Vec, Vec>(const Tuple&)>& eval) {
    AxiomReport rep;
    rep.axiom_id = id;
    rep.input_names = std::move(names);
    for (auto& t : draw_tuples(alg, seed, n, arity)) {
        if (alg.dist(t[sep_i], t[sep_j]) < kSeparationFloor) continue;
        auto [lhs, rhs] = eval(t);
        ++rep.samples_tested;
        const double d = alg.dist(lhs, rhs);
        if (!(d >= tol)) rep.record_failure({t, lhs, rhs, d});
    }
    return rep;
}

} // namespace

std::vector<AxiomReport> check_algebra_axioms(const MobiAlgebra& alg, std::uint64_t seed,
                                              std::size_t n, double tol) {
    const auto& p = alg.p;
    const Vec z = alg.zero, h = alg.half, o = alg.one;
    std::vector<AxiomReport> reports;

    // A1: p(1, 1/2, 0) = 1/2
    reports.push_back(equational(alg, "A1", {}, subseed(seed, 1), n, tol,
                                 [&](const Tuple&) { return std::pair{p(o, h, z), h}; }));
    // A2: p(0, a, 1) = a
    reports.push_back(equational(alg, "A2", {"a"}, subseed(seed, 2), n, tol,
                                 [&](const Tuple& t) { return std::pair{p(z, t[0], o), t[0]}; }));
    // A3: p(a, b, a) = a
    reports.push_back(equational(alg, "A3", {"a", "b"}, subseed(seed, 3), n, tol, [&](const Tuple& t) {
        return std::pair{p(t[0], t[1], t[0]), t[0]};
    }));
    // A4: p(a, 0, b) = a
    reports.push_back(equational(alg, "A4", {"a", "b"}, subseed(seed, 4), n, tol, [&](const Tuple& t) {
        return std::pair{p(t[0], z, t[1]), t[0]};
    }));
    // A5: p(a, 1, b) = b
    reports.push_back(equational(alg, "A5", {"a", "b"}, subseed(seed, 5), n, tol, [&](const Tuple& t) {
        return std::pair{p(t[0], o, t[1]), t[1]};
    }));
    // A6: p(a, 1/2, b1) = p(a, 1/2, b2) => b1 = b2 (contrapositive)
    reports.push_back(contrapositive(alg, "A6", {"a", "b1", "b2"}, subseed(seed, 6), n, tol, 3, 1, 2,
                                     [&](const Tuple& t) {
                                         return std::pair{p(t[0], h, t[1]), p(t[0], h, t[2])};
                                     }));
    // A7: p(a, p(c1,c2,c3), b) = p(p(a,c1,b), c2, p(a,c3,b))
    reports.push_back(equational(alg, "A7", {"a", "b", "c1", "c2", "c3"}, subseed(seed, 7), n, tol,
                                 [&](const Tuple& t) {
                                     const Vec& a = t[0];
                                     const Vec& b = t[1];
                                     return std::pair{p(a, p(t[2], t[3], t[4]), b),
                                                      p(p(a, t[2], b), t[3], p(a, t[4], b))};
                                 }));
    // A8: p(p(a1,c,b1), 1/2, p(a2,c,b2)) = p(p(a1,1/2,a2), c, p(b1,1/2,b2))
    reports.push_back(equational(alg, "A8", {"a1", "a2", "b1", "b2", "c"}, subseed(seed, 8), n, tol,
                                 [&](const Tuple& t) {
                                     const Vec& c = t[4];
                                     return std::pair{p(p(t[0], c, t[2]), h, p(t[1], c, t[3])),
                                                      p(p(t[0], h, t[1]), c, p(t[2], h, t[3]))};
                                 }));
    return reports;
}

std::vector<AxiomReport> check_derived_properties(const MobiAlgebra& alg, std::uint64_t seed,
                                                  std::size_t n, double tol) {
    const auto& p = alg.p;
    const Vec z = alg.zero, h = alg.half, o = alg.one;
    auto conj = [&](const Vec& a) { return complement(alg, a); };
    auto prod = [&](const Vec& a, const Vec& b) { return product(alg, a, b); };
    std::vector<AxiomReport> reports;

    // eq5: complement(1/2) = 1/2
    reports.push_back(equational(alg, "eq5", {}, subseed(seed, 21), n, tol,
                                 [&](const Tuple&) { return std::pair{conj(h), h}; }));
    // eq6: a.1/2 = 1/2.a = 0 (+) a ; both equalities folded into one report
    {
        AxiomReport rep;
        rep.axiom_id = "eq6";
        rep.input_names = {"a"};
        for (auto& t : draw_tuples(alg, subseed(seed, 22), n, 1)) {
            const Vec rhs = oplus(alg, z, t[0]);
            const Vec l1 = prod(t[0], h), l2 = prod(h, t[0]);
            ++rep.samples_tested;
            const double d = std::max(alg.dist(l1, rhs), alg.dist(l2, rhs));
            if (!(d <= tol)) rep.record_failure({t, l1, rhs, d});
        }
        reports.push_back(std::move(rep));
    }
    // eq7: 1/2.a = 1/2.a' => a = a' (contrapositive)
    reports.push_back(contrapositive(alg, "eq7", {"a", "a2"}, subseed(seed, 23), n, tol, 2, 0, 1,
                                     [&](const Tuple& t) {
                                         return std::pair{prod(h, t[0]), prod(h, t[1])};
                                     }));
    // eq8: p(complement(a), 1/2, a) = 1/2
    reports.push_back(equational(alg, "eq8", {"a"}, subseed(seed, 24), n, tol, [&](const Tuple& t) {
        return std::pair{p(conj(t[0]), h, t[0]), h};
    }));
    // eq9: complement(a) = a => a = 1/2 (contrapositive against 1/2)
    {
        AxiomReport rep;
        rep.axiom_id = "eq9";
        rep.input_names = {"a"};
        for (auto& t : draw_tuples(alg, subseed(seed, 25), n, 1)) {
            if (alg.dist(t[0], h) < kSeparationFloor) continue;
            ++rep.samples_tested;
            const Vec c = conj(t[0]);
            const double d = alg.dist(c, t[0]);
            if (!(d >= tol)) rep.record_failure({t, c, t[0], d});
        }
        reports.push_back(std::move(rep));
    }
    // eq10: complement(p(a,b,c)) = p(complement(a), b, complement(c))
    reports.push_back(equational(alg, "eq10", {"a", "b", "c"}, subseed(seed, 26), n, tol,
                                 [&](const Tuple& t) {
                                     return std::pair{conj(p(t[0], t[1], t[2])),
                                                      p(conj(t[0]), t[1], conj(t[2]))};
                                 }));
    // eq11: p(c,b,a) = p(a, complement(b), c)
    reports.push_back(equational(alg, "eq11", {"a", "b", "c"}, subseed(seed, 27), n, tol,
                                 [&](const Tuple& t) {
                                     return std::pair{p(t[2], t[1], t[0]), p(t[0], conj(t[1]), t[2])};
                                 }));
    // eq12: complement(a o b) = complement(b) . complement(a)
    reports.push_back(equational(alg, "eq12", {"a", "b"}, subseed(seed, 28), n, tol,
                                 [&](const Tuple& t) {
                                     return std::pair{conj(circ(alg, t[0], t[1])),
                                                      prod(conj(t[1]), conj(t[0]))};
                                 }));
    // eq13: 1/2 . p(a,b,c) = (complement(b).a) (+) (b.c)
    reports.push_back(equational(alg, "eq13", {"a", "b", "c"}, subseed(seed, 29), n, tol,
                                 [&](const Tuple& t) {
                                     return std::pair{prod(h, p(t[0], t[1], t[2])),
                                                      oplus(alg, prod(conj(t[1]), t[0]),
                                                            prod(t[1], t[2]))};
                                 }));
    return reports;
}

std::vector<AxiomReport> check_midpoint_axioms(const MidpointSystem& sys, std::uint64_t seed,
                                               std::size_t n, double tol) {
    auto draw = [&](std::uint64_t s, std::size_t count, std::size_t arity) {
        auto pool = sys.sample(s, count * arity);
        std::vector<Tuple> out(count);
        for (std::size_t i = 0; i < count; ++i) {
            Tuple t(arity);
            for (std::size_t j = 0; j < arity; ++j) t[j] = pool[i * arity + j];
            out[i] = std::move(t);
        }
        return out;
    };
    std::vector<AxiomReport> reports;

    {
        AxiomReport rep;
        rep.axiom_id = "idempotency";
        rep.input_names = {"x"};
        for (auto& t : draw(subseed(seed, 41), n, 1)) {
            ++rep.samples_tested;
            const Vec lhs = sys.op(t[0], t[0]);
            const double d = sys.dist(lhs, t[0]);
            if (!(d <= tol)) rep.record_failure({t, lhs, t[0], d});
        }
        reports.push_back(std::move(rep));
    }
    {
        AxiomReport rep;
        rep.axiom_id = "commutativity";
        rep.input_names = {"x", "y"};
        for (auto& t : draw(subseed(seed, 42), n, 2)) {
            ++rep.samples_tested;
            const Vec lhs = sys.op(t[0], t[1]), rhs = sys.op(t[1], t[0]);
            const double d = sys.dist(lhs, rhs);
            if (!(d <= tol)) rep.record_failure({t, lhs, rhs, d});
        }
        reports.push_back(std::move(rep));
    }
    {
        AxiomReport rep;
        rep.axiom_id = "cancellation";
        rep.input_names = {"x", "x2", "y"};
        for (auto& t : draw(subseed(seed, 43), n, 3)) {
            if (sys.dist(t[0], t[1]) < kSeparationFloor) continue;
            ++rep.samples_tested;
            const Vec lhs = sys.op(t[0], t[2]), rhs = sys.op(t[1], t[2]);
            const double d = sys.dist(lhs, rhs);
            if (!(d >= tol)) rep.record_failure({t, lhs, rhs, d});
        }
        reports.push_back(std::move(rep));
    }
    {
        AxiomReport rep;
        rep.axiom_id = "mediality";
        rep.input_names = {"x", "y", "z", "w"};
        for (auto& t : draw(subseed(seed, 44), n, 4)) {
            ++rep.samples_tested;
            const Vec lhs = sys.op(sys.op(t[0], t[1]), sys.op(t[2], t[3]));
            const Vec rhs = sys.op(sys.op(t[0], t[2]), sys.op(t[1], t[3]));
            const double d = sys.dist(lhs, rhs);
            if (!(d <= tol)) rep.record_failure({t, lhs, rhs, d});
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace mobi
