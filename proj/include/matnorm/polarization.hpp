#pragma once

#include <bit>
#include <cmath>
#include <vector>

#include "matnorm/moment_value.hpp"
#include "matnorm/sym_trace.hpp"

namespace matnorm {

/// A batch of k equal-dimension matrices whose mixed sphere moment is wanted.
struct PolarizationJob {
    std::vector<ComplexMatrix> matrices;
    int k() const { return static_cast<int>(matrices.size()); }
};

/// int prod_{i=1..k} <A_i xi, xi> dsigma for arbitrary k <= 12, by finite-
/// difference polarization of the diagonal map A -> Tr(vee^k A):
///
///   (1/k!) sum over nonempty subsets S of {1..k} of
///          (-1)^{k-|S|} Tr(vee^k (sum_{i in S} A_i)).
///
/// Tr(vee^k .) is homogeneous of degree k, so the alternating sum isolates the
/// multilinear coefficient exactly; the only error is roundoff cancellation,
/// which the unit-Frobenius pre-scaling keeps at ~k digits in the worst case.
/// Subset index ascending is the fixed reduction order.
inline MomentValue mixed_moment_general(const PolarizationJob& job) {
    const int k = job.k();
    if (k < 1) throw DimensionMismatch("polarization needs at least one matrix");
    if (k > 12) throw KTooLarge("polarization capped at k = 12");
    const int n = job.matrices.front().dim();
    for (const auto& m : job.matrices)
        if (m.dim() != n) throw DimensionMismatch("polarization matrices must share one dimension");

    MomentValue out;
    out.order.assign(static_cast<std::size_t>(k), 1);
    out.method = MomentMethod::polarization;

    double scale = 1;
    std::vector<ComplexMatrix> b;
    b.reserve(static_cast<std::size_t>(k));
    for (const auto& m : job.matrices) {
        const double f = m.frobenius_norm();
        if (f == 0) {
            out.value = 0; // multilinear in every slot
            return out;
        }
        scale *= f;
        ComplexMatrix scaled = m;
        scaled *= Complex(1.0 / f, 0.0);
        b.push_back(std::move(scaled));
    }

    double kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;

    Complex total{};
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        ComplexMatrix s(n);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s += b[static_cast<std::size_t>(i)];
        const Complex v = normalized_sym_trace(s, k).value;
        const int popcount = std::popcount(mask);
        total += ((k - popcount) % 2 == 0) ? v : -v;
    }
    out.value = total * (scale / kfact);
    return out;
}

/// Phi'_{2k}(A) on all of M_n(C): the mixed moment of k copies of A and k
/// copies of A*, which integrates |<A xi, xi>|^{2k}; then the 2k-th root.
inline double phi_2k_general(const ComplexMatrix& a, int k) {
    if (k < 1) throw InvalidOrder("phi_2k_general requires k >= 1");
    if (2 * k > 12) throw KTooLarge("phi_2k_general capped at 2k = 12");
    PolarizationJob job;
    job.matrices.reserve(static_cast<std::size_t>(2 * k));
    const ComplexMatrix adj = a.adjoint();
    for (int i = 0; i < k; ++i) job.matrices.push_back(a);
    for (int i = 0; i < k; ++i) job.matrices.push_back(adj);
    const Complex v = mixed_moment_general(job).value;
    return std::pow(std::max(0.0, v.real()), 1.0 / (2.0 * k));
}

} // namespace matnorm
