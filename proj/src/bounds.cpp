#include "polwalk/bounds.hpp"

#include <cmath>

#include "polwalk/errors.hpp"

namespace polwalk {

double bound_b_display(long long g) {
    if (g < 0) throw input_error("genus must be nonnegative");
    return 1.0 + std::sqrt(static_cast<double>(6 * g + 1));
}

bool bound_b_holds(const Rat& v, long long g) {
    if (g < 0) throw input_error("genus must be nonnegative");
    Rat shifted = v - 1;
    if (shifted <= 0) return true;  // b(g) >= 2 > v
    return shifted * shifted <= Rat(6 * g + 1);
}

namespace {

// Parity floors/ceilings of S_j(g) = 2 + sqrt(6g+j), decided with isqrt.
// s = isqrt(n) gives floor(S_j) = s+2 and, when n is not a square,
// ceil(S_j) = s+3.
long long parity_floor(long long n, int parity) {
    long long s = isqrt(n);
    long long fl = s + 2;
    return (fl % 2 == parity) ? fl : fl - 1;
}

long long parity_ceil(long long n, int parity) {
    long long s = isqrt(n);
    long long ce = (s * s == n) ? s + 2 : s + 3;
    return (ce % 2 == parity) ? ce : ce + 1;
}

}  // namespace

BrBound bound_br(long long g) {
    if (g < 1) throw input_error("b_r needs genus >= 1");
    BrBound out;
    out.terms[0] = Rat(parity_floor(6 * g + 0, 0) - 1);
    out.terms[1] = Rat(parity_floor(6 * g + 1, 1) - 1);
    out.terms[2] = Rat(3) + Rat(6 * g - 4, parity_ceil(6 * g + 0, 0));
    out.terms[3] = Rat(3) + Rat(6 * g - 3, parity_ceil(6 * g + 1, 1));
    out.value = out.terms[0];
    for (const Rat& t : out.terms)
        if (t > out.value) out.value = t;
    for (int i = 0; i < 4; ++i) out.attained[i] = (out.terms[i] == out.value);
    return out;
}

HomotopicBound homotopic_bound(long long s, long long g) {
    if (s < 1 || g < 1) throw input_error("homotopic bound needs S >= 1 and g >= 1");
    HomotopicBound hb;
    hb.edge_cap = 3 * g + (3 * (s - 1)) / 2;
    hb.valence_cap = Rat(3) + Rat(6 * g - 4 + (s % 2), s);
    return hb;
}

Rat lower_bound_valence(long long g) {
    if (g < 1) throw input_error("lower bound needs genus >= 1");
    return Rat(12 * g, 3 * g + 1);
}

bool BoundReport::all_applicable_ok() const {
    for (const BoundLine* l : {&spade, &heart, &diamond, &club_r, &diamond_r})
        if (l->applicable && !l->ok) return false;
    return true;
}

BoundReport audit_bounds(const GraphStats& st) {
    BoundReport rep;

    // (spade) is an identity: 2A equals the sum of the valences, which is
    // the dart count by construction; A = V*S/2 restated.
    rep.spade.applicable = true;
    rep.spade.slack = Rat(2 * st.A) - st.V * Rat(st.S);
    rep.spade.ok = rep.spade.slack == Rat(0);

    Rat rhs = Rat(3) + Rat(6 * st.gamma - 4 + st.parity, st.S);

    rep.heart.applicable = st.satisfies_C;
    if (rep.heart.applicable) {
        rep.heart.slack = Rat(1) + Rat(st.A, 3) - Rat(st.F);
        rep.heart.ok = rep.heart.slack >= Rat(0);
    }

    rep.diamond.applicable = st.satisfies_C;
    if (rep.diamond.applicable) {
        rep.diamond.slack = rhs - st.V;
        rep.diamond.ok = rep.diamond.slack >= Rat(0);
    }

    rep.club_r.applicable = true;
    rep.club_r.slack = Rat(st.S - 1) - st.V_r;
    rep.club_r.ok = rep.club_r.slack >= Rat(0);

    rep.diamond_r.applicable = st.satisfies_C;
    if (rep.diamond_r.applicable) {
        rep.diamond_r.slack = rhs - st.V_r;
        rep.diamond_r.ok = rep.diamond_r.slack >= Rat(0);
    }
    return rep;
}

AppendixBounds appendix_bounds(long long g) {
    if (g < 0) throw input_error("genus must be nonnegative");
    AppendixBounds ab;
    if (g == 0)
        ab = {0, 0, 1};
    else if (g == 1)
        ab = {1, 3, 4};
    else
        ab = {3 * g - 3, 6 * g - 3, 6 * g - 2};
    return ab;
}

}  // namespace polwalk
