#pragma once

#include "fraccalc/analytic.hpp"
#include "fraccalc/grid.hpp"
#include "fraccalc/measures.hpp"
#include "fraccalc/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fraccalc {

// limit of v at a+ from the first interior nodes, assuming v = T + C (x-a)^q
// with q > 0 (Richardson on the node ladder 1, 2, 4); falls back to v(x_1)
// when no power trend is resolvable
double extrapolate_trace(const GridFunction& v);

// I^alpha[I^beta[u]] = I^(alpha+beta)[u] in L1 on a refinement ladder;
// requires alpha + beta <= 1
VerificationReport check_semigroup(const AnalyticFunction& f,
                                   const Interval& iv,
                                   const std::vector<int>& ladder,
                                   FracOrder alpha, FracOrder beta);

// I^s_{a+}[u](a+b-x) = I^s_{b-}[u(a+b-.)](x) nodewise (exact mirror images
// of the same scheme); singular metadata is folded into plain values first
VerificationReport check_reflection(const GridFunction& u, FracOrder s);

// integral of I^s_{a+}[u] v = integral of u I^s_{b-}[v]
VerificationReport check_duality(const AnalyticFunction& u,
                                 const AnalyticFunction& v, const Interval& iv,
                                 const std::vector<int>& ladder, FracOrder s);

// same pairing identity with a measure on the left slot:
// integral of I^s[mu] phi dx = integral of I^s_{b-}[phi] d(mu)
VerificationReport check_measure_duality(const AnalyticFunction& ac_density,
                                         const std::vector<Atom>& atoms,
                                         const Interval& iv,
                                         const std::vector<int>& ladder,
                                         FracOrder s);

// ||I^s[u] - u||_L1 along a decreasing s list; the identity limit
VerificationReport sweep_s_to_0(const AnalyticFunction& f, const Interval& iv,
                                int n, const std::vector<double>& s_list);

// Riemann-Liouville and Marchaud agree on the interpolant to 1e-8
VerificationReport check_marchaud_equiv(const AnalyticFunction& f,
                                        const Interval& iv,
                                        const std::vector<int>& ladder,
                                        FracOrder s);

// three inversion residuals: (i) D^s[I^s[u]] - u, (ii) I^s[D^s[u]] plus the
// extrapolated-trace boundary term minus u, (iii) the trace-free form when
// the trace vanishes (reported not-applicable otherwise)
VerificationReport check_ftc(const AnalyticFunction& f, const Interval& iv,
                             const std::vector<int>& ladder, FracOrder s);

// integral of D^s_{a+}[u] v = integral of u {}^C D^s_{b-}[v] with v a hat
// vanishing at both endpoints
VerificationReport check_caputo_duality(const AnalyticFunction& u,
                                        const Interval& iv,
                                        const std::vector<int>& ladder,
                                        FracOrder s);

using GridBuilder = std::function<GridFunction(const Grid&)>;

// L^p-representability classifier: u = I^s[f] for some f in L^p iff the
// trace of I^(1-s)[u] at a vanishes and ||D^s[u]||_p stays bounded under
// refinement; representable inputs also round-trip through I^s[D^s[u]].
// expect: 1 = representable, 0 = not, -1 = classify only (always passes)
VerificationReport check_representability(const GridBuilder& builder,
                                          const std::string& label,
                                          const Interval& iv,
                                          const std::vector<int>& ladder,
                                          FracOrder s, double p,
                                          int expect = -1);

// ||I^s[u]||_L1 <= (b-a)^s/Gamma(s+1) ||u||_L1 + 1e-8 over the corpus and
// 20 seeded random grid functions, s in {0.1, ..., 0.9}
VerificationReport check_l1_bound(const Interval& iv, int n, unsigned seed);

// weak-L^(1/(1-s)) quasinorm of I^s[u] stays bounded under refinement
// (qualitative: the operator constant is not explicit)
VerificationReport check_weak_type(const AnalyticFunction& f,
                                   const Interval& iv,
                                   const std::vector<int>& ladder, FracOrder s);

// Hardy quotient against ||u||_p + Gagliardo seminorm: the ratio is recorded
// per level and must stay bounded (the inequality constant is not explicit)
VerificationReport check_hardy(const AnalyticFunction& f, const Interval& iv,
                               const std::vector<int>& ladder, FracOrder s,
                               double p);

// ||I^(1-s)[u]||_p + ||I^(1-s)[u']||_p <= (b-a)^(1-s)/Gamma(2-s)
//   (||u||_p + ||u'||_p) for u with u(a) = 0, one-sided with 1e-2 slack
VerificationReport check_sobolev_action(const GridBuilder& u,
                                        const GridBuilder& du,
                                        const std::string& label,
                                        const Interval& iv,
                                        const std::vector<int>& ladder,
                                        FracOrder s, double p);

// higher-order representation consistency at k = 2: the centered second
// difference of the j = 0 output matches the j = 2 output at O(h) interior
VerificationReport check_higher_order(const AnalyticFunction& u_second_deriv,
                                      const Interval& iv,
                                      const std::vector<int>& ladder, double s);

// divergence probes on (0,1); verdict diverges-as-expected iff the sustained
// growth gate (1.2x per level, 1.5x per 4x refinement for sup probes) is met
VerificationReport probe_gagliardo_critical(FracOrder s);
VerificationReport probe_emb_p1_sharp(FracOrder s);
VerificationReport probe_emb_p1s_sharp(FracOrder s);
VerificationReport probe_cos_linfty(FracOrder s);
// right-RL derivative of the critical power: interior closed-form match plus
// an L1(0,1) divergence flag (the left derivative is identically zero)
VerificationReport probe_left_right(FracOrder s);

std::vector<AnalyticFunction> default_corpus(const Interval& iv);

} // namespace fraccalc
