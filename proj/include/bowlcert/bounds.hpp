#pragma once

#include <string>
#include <vector>

#include "bowlcert/certificate.hpp"
#include "bowlcert/interval.hpp"
#include "bowlcert/profile.hpp"

namespace bowlcert {

/// Certified envelope for K on the grid r_i = i*h.
///
/// a[i].lo is a certified lower bound for K(r) on r >= r_i, and b[i].hi a
/// certified upper bound on r <= r_i. The recursions propagate the rounded
/// scalar endpoints (inf on the a-side, sup on the b-side); the stored
/// intervals are the full enclosures of each recursion step, kept for audit.
struct BoundTable {
    double h = 0.0;
    int n = 0;
    std::vector<double> r;        // nominal radii i*h
    std::vector<Interval> r_iv;   // enclosures of the exact grid products
    std::vector<Interval> a;      // lower-bound side (empty if not computed)
    std::vector<Interval> b;      // upper-bound side (empty if not computed)
    std::vector<double> b_stage_c;       // first-stage sup per row (audit)
    std::vector<double> b_stage_ctilde;  // second-stage sup per row (audit)

    double a_cert(int i) const { return a[static_cast<std::size_t>(i)].lo; }
    double b_cert(int i) const { return b[static_cast<std::size_t>(i)].hi; }
    bool has_a() const { return !a.empty(); }
    bool has_b() const { return !b.empty(); }
};

/// Enclosure of F(r,a|rho,alpha) = 1 - (1 - [1-(1-alpha) a^2 rho^2]
/// e^{-a^2 (r^2-rho^2)/2}) / (a^2 r^2).
Interval eval_F(Interval r, Interval a, Interval rho, Interval alpha);

/// a_{i+1} = F(r_{i+1}, a_i | r_i, a_i), a_0 = 1/2, propagating infima.
BoundTable lower_table(double h, int n);

/// b_{i+1} = F(r_{i+1}, F(r_{i+1}, F(r_{i+1}, 1 | r_i, b_i) | r_i, b_i) | r_i, b_i),
/// b_0 = 1/2, propagating suprema; the two inner stages are kept for audit.
BoundTable upper_table(double h, int n);

/// Both recursions on one grid.
BoundTable envelope_tables(double h, int n);

/// Certified-side invariants plus the grid oracle
/// inf(a_i) <= K_ref(r_i) <= sup(b_i); margin over rows i >= 1.
Certificate certify_envelope(const BoundTable& t, const ProfileTable& profile);

/// inf(a_34) must clear 173/200 with the exact rational on the safe side.
Certificate certify_a34(const BoundTable& t);

/// K(r) <= 1/2 + r^2/20 on (0,1] through F(r, e^{-1/2} | 0, 1/2): a
/// closed-form series reduction below r = 0.01 and an adaptive certified
/// subinterval cover of [0.01, 1] above it.
Certificate certify_upper_closed_form();

/// Lower bound for delta on one cell [r_i, r_{i+1}] with K in [a_i, b_{i+1}]:
/// the explicit bracketing expression (min over the four beta products, max
/// over the two endpoint squares). Valid for cells with r_i > 0.
Interval delta_bracket_lower(Interval ri, Interval rip, Interval a_i, Interval b_ip1);

/// Lower bound for delta on the first cell (0, h], where the bracketing
/// expression is singular; couples the negative first-order term against the
/// zeroth-order coefficient. Requires h <= 1/10.
Interval delta_first_cell_lower(double h);

/// delta >= 1/100 cell by cell on (0,4]. Throws GridTooCoarse when any cell
/// bound falls below 1/100 (a smaller h is the remedy, not a verdict on delta).
Certificate certify_delta(const BoundTable& t);

/// Tail certificates on [39/10, r_cap] plus r-free closed-form reductions
/// beyond r_cap: the K lower bound 1 - 7/(5 r^2) driven by a_34, and the
/// three coefficient channels alpha <= 5/(4r^2), beta >= 5/(9r),
/// gamma <= -1/(25 r^2). Returns {K-bound, alpha, beta, gamma} certificates.
std::vector<Certificate> certify_tail_coeffs(double r_cap, const BoundTable& lower);

/// CSV with header i,r,a_lo,b_hi.
std::string bound_table_csv(const BoundTable& t);

}  // namespace bowlcert
