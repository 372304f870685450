#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "matnorm/moment_value.hpp"
#include "matnorm/montecarlo.hpp"
#include "matnorm/sym_trace.hpp"
#include "matnorm/ui_norms.hpp"

namespace matnorm {

namespace detail {

/// tr(X Y) without forming the product.
inline Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y) {
    Complex t{};
    const int n = x.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t += x(i, j) * y(j, i);
    return t;
}

inline void require_hermitian(const ComplexMatrix& a, const char* who) {
    const double tol = 1e-10 * std::max(1.0, a.max_abs());
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
                throw DomainError(std::string(who) + ": matrix is not Hermitian");
}

inline void require_psd(const ComplexMatrix& a, const char* who) {
    require_hermitian(a, who);
    const Spectrum eig = hermitian_eigenvalues(a);
    const double scale = eig.values.empty() ? 1.0 : std::max(1.0, std::abs(eig.values.front()));
    if (!eig.values.empty() && eig.values.back() < -1e-10 * scale)
        throw DomainError(std::string(who) + ": matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(eig.values.back()) + ")");
}

} // namespace detail

/// n(n+1)(n+2); weights the three-matrix moment.
inline double moment_d_n(int n) { return static_cast<double>(n) * (n + 1) * (n + 2); }
/// n(n+1)(n+2)(n+3); weights the four-matrix moment.
inline double moment_c_n(int n) { return static_cast<double>(n) * (n + 1) * (n + 2) * (n + 3); }

/// int prod_i <A_i xi, xi> dsigma for 1 to 4 matrices, by the closed forms.
/// The two-matrix denominator is n(n+1): the naive C(n+1,2) normalization
/// fails the forced value at A = B = I (a regression test pins this).
/// The four-matrix case evaluates all 24 trace terms one by one, so each is
/// individually auditable.
inline MomentValue mixed_moment_closed(const std::vector<ComplexMatrix>& as) {
    if (as.empty()) throw DimensionMismatch("mixed_moment_closed needs at least one matrix");
    if (as.size() > 4) throw TooManyMatrices("closed forms stop at four matrices; use polarization");
    const int n = as.front().dim();
    for (const auto& m : as)
        if (m.dim() != n) throw DimensionMismatch("matrices must share one dimension");

    MomentValue out;
    out.order.assign(as.size(), 1);
    out.method = MomentMethod::closed_form;

    using detail::trace_product;
    if (as.size() == 1) {
        out.value = as[0].trace() / static_cast<double>(n);
        return out;
    }
    if (as.size() == 2) {
        const Complex tab = trace_product(as[0], as[1]);
        out.value = (tab + as[0].trace() * as[1].trace()) / (static_cast<double>(n) * (n + 1));
        return out;
    }
    if (as.size() == 3) {
        const ComplexMatrix& a = as[0];
        const ComplexMatrix& b = as[1];
        const ComplexMatrix& c = as[2];
        const ComplexMatrix ab = a * b;
        const ComplexMatrix ac = a * c;
        const Complex ta = a.trace(), tb = b.trace(), tc = c.trace();
        Complex s = trace_product(ab, c) + trace_product(ac, b); // tr[ABC + ACB]
        s += ta * trace_product(b, c);
        s += tb * trace_product(a, c);
        s += tc * trace_product(a, b);
        s += ta * tb * tc;
        out.value = s / moment_d_n(n);
        return out;
    }

    const ComplexMatrix& a = as[0];
    const ComplexMatrix& b = as[1];
    const ComplexMatrix& c = as[2];
    const ComplexMatrix& d = as[3];
    const ComplexMatrix ab = a * b, ac = a * c, ad = a * d;
    const ComplexMatrix bc = b * c, bd = b * d, cd = c * d;
    const ComplexMatrix dc = d * c, db = d * b, cb = c * b;
    const Complex ta = a.trace(), tb = b.trace(), tc = c.trace(), td = d.trace();
    const Complex t_ab = trace_product(a, b), t_ac = trace_product(a, c), t_ad = trace_product(a, d);
    const Complex t_bc = trace_product(b, c), t_bd = trace_product(b, d), t_cd = trace_product(c, d);

    Complex s{};
    s += trace_product(ab, cd) + trace_product(ab, dc) + trace_product(ac, bd) +
         trace_product(ac, db) + trace_product(ad, bc) + trace_product(ad, cb);
    s += ta * (trace_product(bc, d) + trace_product(bd, c));
    s += tb * (trace_product(ac, d) + trace_product(ad, c));
    s += tc * (trace_product(ab, d) + trace_product(ad, b));
    s += td * (trace_product(ab, c) + trace_product(ac, b));
    s += t_ab * (t_cd + tc * td);
    s += t_ac * (t_bd + tb * td);
    s += t_ad * (t_bc + tb * tc);
    s += ta * (tb * t_cd + tc * t_bd + td * t_bc);
    s += ta * tb * tc * td;
    out.value = s / moment_c_n(n);
    return out;
}

/// Phi'_2(A) = [ (||A||_F^2 + |tr A|^2) / (n(n+1)) ]^{1/2}.
inline double phi2(const ComplexMatrix& a) {
    const int n = a.dim();
    return std::sqrt((a.frobenius_norm_sq() + std::norm(a.trace())) /
                     (static_cast<double>(n) * (n + 1)));
}

enum class PhiDomain { psd, hermitian_even };

/// Phi'_k on the cone where |f_A|^k = f_A^k: PSD matrices (any k) or Hermitian
/// matrices (even k). Evaluated as [H_k(lambda)]^{1/k} via signed power traces;
/// never via Schatten norms, which are wrong off the PSD cone.
inline double phi_closed(const ComplexMatrix& a, int k, PhiDomain domain) {
    if (k < 1 || k > 64) throw InvalidOrder("phi_closed requires 1 <= k <= 64");
    if (domain == PhiDomain::psd) {
        detail::require_psd(a, "phi_closed[psd]");
    } else {
        detail::require_hermitian(a, "phi_closed[hermitian-even]");
        if (k % 2 != 0) throw DomainError("phi_closed[hermitian-even]: k must be even");
    }
    const double h = h_from_power_sums(power_traces(a, k), k).real();
    const double c = u128_to_double(dim_sym(a.dim(), k));
    return std::pow(std::max(0.0, h / c), 1.0 / k);
}

/// Phi'_4 on all of M_n(C): the eight-term closed form over c_n, fourth root.
inline double phi4(const ComplexMatrix& a) {
    const int n = a.dim();
    const ComplexMatrix adj = a.adjoint();
    const ComplexMatrix gram = adj * a;           // A*A
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix adj2 = adj * adj;
    const double f2 = gram.trace().real();        // ||A||_F^2
    const double s4 = detail::trace_product(gram, gram).real();  // ||A||^4_(4)
    const double g = detail::trace_product(adj2, a2).real();     // ||A^2||_F^2
    const Complex ta = a.trace();
    const Complex ta2 = a2.trace();
    const Complex t_aadj2 = detail::trace_product(a, adj2);      // tr(A A*^2)

    double num = 4.0 * g + 2.0 * s4 + 2.0 * f2 * f2;
    num += 8.0 * (ta * t_aadj2).real();
    num += 2.0 * (ta2 * std::conj(ta) * std::conj(ta)).real();
    num += 4.0 * f2 * std::norm(ta);
    num += std::norm(ta2);
    num += std::norm(ta) * std::norm(ta);
    return std::pow(std::max(0.0, num / moment_c_n(n)), 0.25);
}

/// d_n * int |<A xi, xi>|^2 dmu with dmu = <C xi, xi> dsigma, C PSD. Returned
/// un-normalized, exactly as the five-term closed form reads.
inline double weighted_l2_moment(const ComplexMatrix& a, const ComplexMatrix& c) {
    if (a.dim() != c.dim()) throw DimensionMismatch("weighted_l2_moment: dimensions differ");
    detail::require_psd(c, "weighted_l2_moment");
    const ComplexMatrix adj = a.adjoint();
    const ComplexMatrix aadj = a * adj;
    const ComplexMatrix ac = a * c;
    Complex s = detail::trace_product(aadj, c) + detail::trace_product(ac, adj);
    s += 2.0 * (a.trace() * detail::trace_product(adj, c)).real();
    s += c.trace().real() * a.frobenius_norm_sq();
    s += std::norm(a.trace()) * c.trace().real();
    return s.real();
}

/// N_Psi: the L^4-based w.u.i. norm with the centered fourth-moment term.
/// Seven-term right side, fourth root.
inline double n_psi(const ComplexMatrix& a) {
    const int n = a.dim();
    const ComplexMatrix adj = a.adjoint();
    const ComplexMatrix gram = adj * a;
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix adj2 = adj * adj;
    const double f2 = gram.trace().real();
    const double s4 = detail::trace_product(gram, gram).real();
    const double g = detail::trace_product(adj2, a2).real();
    const Complex ta = a.trace();
    const Complex ta2 = a2.trace();

    double num = 4.0 * g + 2.0 * s4 + 2.0 * f2 * f2;
    num += (4.0 / n) * (ta2 * std::conj(ta) * std::conj(ta)).real();
    num += (8.0 / n) * f2 * std::norm(ta);
    num += std::norm(ta2);
    num += ((3.0 * n - 6.0) / (static_cast<double>(n) * n)) * std::norm(ta) * std::norm(ta);
    return std::pow(std::max(0.0, num), 0.25);
}

/// N_Psi0: N_Psi augmented with the squared-variance term; six-term right side.
inline double n_psi0(const ComplexMatrix& a) {
    const int n = a.dim();
    const ComplexMatrix adj = a.adjoint();
    const ComplexMatrix gram = adj * a;
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix adj2 = adj * adj;
    const double f2 = gram.trace().real();
    const double s4 = detail::trace_product(gram, gram).real();
    const double g = detail::trace_product(adj2, a2).real();
    const Complex ta = a.trace();
    const Complex ta2 = a2.trace();

    double num = 4.0 * g + 2.0 * s4 + 6.0 * f2 * f2;
    num += (4.0 / n) * (ta2 * std::conj(ta) * std::conj(ta)).real();
    num += std::norm(ta2);
    num += ((3.0 * n - 2.0) / (static_cast<double>(n) * n)) * std::norm(ta) * std::norm(ta);
    return std::pow(std::max(0.0, num), 0.25);
}

/// A - (tr A / n) I; the numerical values of the result are the centered f_A.
inline ComplexMatrix centered(const ComplexMatrix& a) {
    const int n = a.dim();
    const Complex gamma = a.trace() / static_cast<double>(n);
    ComplexMatrix out = a;
    for (int i = 0; i < n; ++i) out(i, i) -= gamma;
    return out;
}

struct MomentStats {
    double e2 = 0;       // E |f_A|^2
    double v = 0;        // Var f_A
    double mu4 = 0;      // (E |f_A - E f_A|^4)^{1/4}
    double combined = 0; // 3 d_n E|f|^4 + n d_n mu4^4 + 4 alpha n^2 (n+1)^2 V^2
};

inline MomentStats moment_stats(const ComplexMatrix& a, double alpha) {
    if (alpha < 0) throw DomainError("moment_stats requires alpha >= 0");
    const int n = a.dim();
    MomentStats st;
    const double p2 = phi2(a);
    st.e2 = p2 * p2;
    st.v = st.e2 - std::norm(a.trace() / static_cast<double>(n));
    st.mu4 = phi4(centered(a));
    const double e4 = std::pow(phi4(a), 4);
    const double dn = moment_d_n(n);
    st.combined = 3.0 * dn * e4 + n * dn * std::pow(st.mu4, 4) +
                  4.0 * alpha * static_cast<double>(n) * n * (n + 1.0) * (n + 1.0) * st.v * st.v;
    return st;
}

struct BoundSlack {
    std::string name;
    double slack = 0;
    double stderr_est = 0;
    bool applicable = false;
    std::string note;
};

namespace detail {

struct Leg {
    double value = 0;
    double stderr_est = 0;
};

inline bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

inline bool is_hermitian_quiet(const ComplexMatrix& a) {
    const double tol = 1e-10 * std::max(1.0, a.max_abs());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

inline bool is_psd_quiet(const ComplexMatrix& a) {
    if (!is_hermitian_quiet(a)) return false;
    const Spectrum eig = hermitian_eigenvalues(a);
    const double scale = std::max(1.0, std::abs(eig.values.front()));
    return eig.values.back() >= -1e-10 * scale;
}

/// int |<A xi, xi>|^r, closed when possible, else MC. Returns the raw moment.
inline Leg abs_moment_leg(const ComplexMatrix& a, double r, const MCConfig& mc) {
    if (is_integer(r)) {
        const int k = static_cast<int>(std::round(r));
        if (k == 2) {
            const double v = phi2(a);
            return {v * v, 0.0};
        }
        if (k == 4) return {std::pow(phi4(a), 4), 0.0};
        if (is_hermitian_quiet(a)) {
            if (k % 2 == 0) return {std::pow(phi_closed(a, k, PhiDomain::hermitian_even), k), 0.0};
            if (is_psd_quiet(a)) return {std::pow(phi_closed(a, k, PhiDomain::psd), k), 0.0};
        }
    }
    const MCEstimate est = mc_abs_power(a, r, mc);
    return {est.mean.real(), est.stderr_est};
}

} // namespace detail

/// Slack report for the upper bounds: the Q-norm estimate on Phi'_{2p} and the
/// interpolation bound between Phi'_2 and Phi'_4 (applicable for 2 < p < 4).
/// Slacks are right side minus left side in raw-moment scale where possible;
/// Monte Carlo legs carry standard errors for a 4-sigma guard band.
inline std::vector<BoundSlack> bound_report(const ComplexMatrix& a, double p, const MCConfig& mc) {
    if (p < 1) throw InvalidOrder("bound_report requires p >= 1");
    std::vector<BoundSlack> out;

    {
        BoundSlack b;
        b.name = "squared-moment-bound";
        b.applicable = true;
        const detail::Leg left = detail::abs_moment_leg(a, 2.0 * p, mc);
        const detail::Leg mid = detail::abs_moment_leg(a * a, p, MCConfig{mc.samples, mc.seed + 1, mc.chunk});
        detail::Leg right_q;
        if (detail::is_integer(p)) {
            const NormValue nv = n_prime(a, p);
            right_q = {std::pow(nv.value, 2.0 * p), 0.0};
        } else {
            const MCEstimate est = mc_bochner(a, p, MCConfig{mc.samples, mc.seed + 2, mc.chunk});
            right_q = {est.mean.real(), est.stderr_est};
        }
        b.slack = 0.5 * (mid.value + right_q.value) - left.value;
        b.stderr_est = std::sqrt(0.25 * mid.stderr_est * mid.stderr_est +
                                 0.25 * right_q.stderr_est * right_q.stderr_est +
                                 left.stderr_est * left.stderr_est);
        b.note = (left.stderr_est == 0 && mid.stderr_est == 0 && right_q.stderr_est == 0)
                     ? "closed-form"
                     : "monte-carlo";
        out.push_back(std::move(b));
    }

    {
        BoundSlack b;
        b.name = "riesz-thorin";
        if (p > 2.0 && p < 4.0) {
            b.applicable = true;
            detail::Leg left;
            if (detail::is_integer(p) && detail::is_psd_quiet(a)) {
                left = {phi_closed(a, static_cast<int>(std::round(p)), PhiDomain::psd), 0.0};
            } else {
                const MCEstimate est = mc_abs_power(a, p, MCConfig{mc.samples, mc.seed + 3, mc.chunk});
                const double m = std::max(est.mean.real(), 0.0);
                const double v = std::pow(m, 1.0 / p);
                left = {v, m > 0 ? est.stderr_est * v / (p * m) : est.stderr_est};
            }
            const double rhs = std::pow(phi2(a), 4.0 / p - 1.0) * std::pow(phi4(a), 2.0 - 4.0 / p);
            b.slack = rhs - left.value;
            b.stderr_est = left.stderr_est;
            b.note = left.stderr_est == 0 ? "closed-form" : "monte-carlo";
        } else {
            b.applicable = false;
            b.note = "requires 2 < p < 4";
        }
        out.push_back(std::move(b));
    }

    return out;
}

} // namespace matnorm
