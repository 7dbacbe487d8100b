#include "ramsey/bounds.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ramsey/embed.hpp"
#include "ramsey/extraction.hpp"

namespace ramsey {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::unchecked: return "unchecked";
    }
    return "unknown";
}

namespace {

// rational enclosure of e = 2.71828182845904523536...; comparisons against e
// are certified by picking the conservative endpoint
const Rat kELo = Rat(Int("2718281828459045"), ipow(Int(10), 15));
const Rat kEHi = Rat(Int("2718281828459046"), ipow(Int(10), 15));

constexpr mpfr_prec_t kSweepPrec = 256;

XNum cube(const XNum& x) { return x * x * x; }

// alpha_1 = 27, alpha_{i+1} = 2^(2*alpha_i^(1/3)); past the exponent range the
// upper endpoint saturates to +inf and the lower endpoint stays finite
std::vector<XNum> alpha_ladder(int count, mpfr_prec_t prec) {
    std::vector<XNum> lad;
    lad.reserve(count);
    XNum a = XNum(27);
    for (int i = 0; i < count; ++i) {
        lad.push_back(a);
        a = (XNum(2) * a.cbrt(prec)).exp2(prec);
    }
    return lad;
}

InequalityCheck base_ratio_check(const std::vector<Rat>& eps_grid) {
    InequalityCheck ck;
    ck.name = "lemma3_base_ratio";
    ck.domain = "7*eps/(e*(1+7*eps)) >= 1.2*eps for grid eps with 0 < eps <= 1/7";
    ck.method = "exact (rational enclosure of e)";
    ck.status = CheckStatus::pass;
    for (const Rat& eps : eps_grid) {
        if (eps <= 0 || eps > Rat(1, 7)) continue;
        // dividing out eps, the claim is 35 >= 6*e*(1+7*eps)
        if (Rat(6) * kEHi * (Rat(1) + Rat(7) * eps) <= Rat(35)) continue;
        ck.status = CheckStatus::fail;
        ck.counterexample = "eps=" + rat_str(eps);
        break;
    }
    return ck;
}

InequalityCheck power_margin_check() {
    InequalityCheck ck;
    ck.name = "lemma3_power_margin";
    ck.domain = "1.2^7 >= 3.5";
    ck.method = "exact";
    bool ok = rat_pow(Rat(6, 5), 7) >= Rat(7, 2);
    ck.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) ck.counterexample = "1.2^7=" + rat_str(rat_pow(Rat(6, 5), 7));
    return ck;
}

InequalityCheck binomial_spots_check() {
    InequalityCheck ck;
    ck.name = "binomial_upper_spots";
    ck.domain = "C(a,b) <= (e*a/b)^b at fixed (a,b) spots";
    ck.method = "exact (rational enclosure of e)";
    ck.status = CheckStatus::pass;
    const std::pair<long, long> spots[] = {{6, 3},   {10, 5},  {14, 7},  {20, 4},
                                           {50, 10}, {64, 32}, {100, 3}, {200, 7}};
    for (auto [a, b] : spots) {
        // e >= kELo makes the rational bound a lower bound for the true one
        if (Rat(binomial(Int(a), Int(b))) <= rat_pow(kELo * Rat(a, b), b)) continue;
        ck.status = CheckStatus::fail;
        ck.counterexample = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
    }
    return ck;
}

void window_checks(long m, int points, std::vector<InequalityCheck>& out) {
    const mpfr_prec_t prec = kSweepPrec;
    const std::string mtag = "[m=" + std::to_string(m) + "]";
    XNum lg = XNum(Rat(m)).log2(prec);
    XNum L = cube(lg) / XNum(8);
    XNum sm = XNum(Rat(m)).sqrt(prec);

    InequalityCheck tail;
    tail.name = "alpha_tail_bound" + mtag;
    tail.domain = "42*a^(1/3)*2^(-a^(1/3)) <= 48*a^(-1/3), a in [27,(log2 m)^3/8), " +
                  std::to_string(points) + " points";
    tail.method = "outward-rounded interval (256-bit); a=27 exact";
    InequalityCheck chain;
    chain.name = "exp_window_chain" + mtag;
    chain.domain = "5*a^(-1/3)*sqrt(m) >= 10*sqrt(m)/log2(m) >= 1.5*log2(m) >= "
                   "2*a^(1/3)+log2(m)/2, same window";
    chain.method = "outward-rounded interval (256-bit)";

    if (L.gt(XNum(27)) != XNum::Cmp::yes) {
        tail.status = CheckStatus::pass;
        tail.domain += " -- window empty";
        chain.status = CheckStatus::pass;
        chain.domain += " -- window empty";
        out.push_back(std::move(tail));
        out.push_back(std::move(chain));
        return;
    }

    // the chain's last link is an equality at the window top, so the grid ends
    // strictly below it: dyadic floor of the lower endpoint minus one ulp
    Int sc = (L * XNum(Rat(Int(1) << 48))).floor_lower();
    Rat w = Rat(sc, Int(1) << 48) - Rat(1, Int(1) << 48);

    tail.status = CheckStatus::pass;
    chain.status = CheckStatus::pass;

    // middle link is alpha-free: 10*sqrt(m)/log2(m) >= 1.5*log2(m)
    if (((XNum(10) * sm) / lg).ge(XNum(Rat(3, 2)) * lg) != XNum::Cmp::yes) {
        chain.status = CheckStatus::fail;
        chain.counterexample = "10*sqrt(m)/log2(m) < 1.5*log2(m)";
    }

    for (int j = 0; j < points; ++j) {
        Rat aj = Rat(27) + (w - Rat(27)) * Rat(j, points - 1);
        XNum a{aj};
        XNum x = a.cbrt(prec);
        if (tail.status == CheckStatus::pass) {
            XNum lhs = XNum(42) * x * (XNum(0) - x).exp2(prec);
            if ((XNum(48) / x).ge(lhs) != XNum::Cmp::yes) {
                tail.status = CheckStatus::fail;
                tail.counterexample = "alpha=" + rat_str(aj);
            }
        }
        if (chain.status == CheckStatus::pass) {
            bool left = ((XNum(5) / x) * sm).ge((XNum(10) * sm) / lg) == XNum::Cmp::yes;
            bool right = (XNum(Rat(3, 2)) * lg).ge(XNum(2) * x + XNum(Rat(1, 2)) * lg) ==
                         XNum::Cmp::yes;
            if (!left || !right) {
                chain.status = CheckStatus::fail;
                chain.counterexample = "alpha=" + rat_str(aj);
            }
        }
    }
    out.push_back(std::move(tail));
    out.push_back(std::move(chain));
}

void ladder_checks(const std::vector<XNum>& lad, std::vector<InequalityCheck>& out) {
    const mpfr_prec_t prec = kSweepPrec;
    const XNum sat_floor{Rat(ipow(Int(2), 300))};

    InequalityCheck ratio;
    ratio.name = "alpha_growth_ratio";
    ratio.domain = "alpha_{i+1} >= (4/3)^3*alpha_i, 1 <= i <= 50";
    ratio.method = "outward-rounded interval (256-bit); saturation certificate past overflow";
    ratio.status = CheckStatus::pass;
    for (int i = 1; i <= 50; ++i) {
        if (lad[i].ge(XNum(Rat(64, 27)) * lad[i - 1]) == XNum::Cmp::yes) continue;
        // the RHS upper endpoint is +inf only past saturation; there
        // alpha_i >= 2^300 gives 2^(2*alpha_i^(1/3)) >= 2^(2^101) >> (64/27)*alpha_i
        if (lad[i - 1].ge(sat_floor) == XNum::Cmp::yes) continue;
        ratio.status = CheckStatus::fail;
        ratio.counterexample = "i=" + std::to_string(i);
        break;
    }
    out.push_back(std::move(ratio));

    InequalityCheck sum;
    sum.name = "alpha_partial_sum";
    sum.domain = "sum_{j<=i} alpha_j^(-1/3) <= 4/3 - 4*alpha_{i+1}^(-1/3), 1 <= i <= 50";
    sum.method = "outward-rounded interval (256-bit); i=1 is an exact equality";
    sum.status = CheckStatus::pass;
    XNum partial{Rat(0)};
    for (int i = 1; i <= 50; ++i) {
        partial = partial + XNum(1) / lad[i - 1].cbrt(prec);
        XNum rhs = XNum(Rat(4, 3)) - XNum(4) / lad[i].cbrt(prec);
        if (rhs.ge(partial) == XNum::Cmp::yes) continue;
        sum.status = CheckStatus::fail;
        sum.counterexample = "i=" + std::to_string(i);
        break;
    }
    out.push_back(std::move(sum));
}

InequalityCheck ledger_identities_check() {
    InequalityCheck ck;
    ck.name = "exponent_ledger_identities";
    ck.domain = "250-54=196, 196-160=36, 125-72=53, 53=5+48, 72+48=120";
    ck.method = "exact";
    bool ok = (250 - 54 == 196) && (Rat(196) - Rat(120) * Rat(4, 3) == Rat(36)) &&
              (125 - 72 == 53) && (53 == 5 + 48) && (72 + 48 == 120);
    ck.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return ck;
}

InequalityCheck t_reading_check(const std::vector<Rat>& eps_grid) {
    InequalityCheck ck;
    ck.name = "lemma3_t_reading";
    ck.domain = "printed 't <= 1/eps' vs hypothesis 't >= 1/eps'; every chain use "
                "of t needs eps*t >= 1, valid under the hypothesis reading";
    ck.method = "exact";
    ck.status = CheckStatus::pass;
    for (const Rat& eps : eps_grid) {
        if (eps <= 0 || eps > Rat(1, 7)) continue;
        Int t_ge = ceil_rat(Rat(1) / eps);
        // uses in the chain: 1.2^(7*eps*t) >= 1.2^7 and eps^(eps*t) <= eps need
        // eps*t >= 1; (1/2 - 2*eps) >= eps^(eps*t) then follows from eps <= 1/6
        bool ok = Rat(t_ge) * eps >= Rat(1) && Rat(1, 2) - Rat(2) * eps >= eps;
        if (!ok) {
            ck.status = CheckStatus::fail;
            ck.counterexample = "eps=" + rat_str(eps);
            return ck;
        }
        if (ck.counterexample.empty()) {
            Int t_le = floor_rat(Rat(1) / (Rat(2) * eps));
            if (t_le >= 1 && Rat(t_le) * eps < Rat(1))
                ck.counterexample = "refuted reading t<=1/eps: eps=" + rat_str(eps) +
                                    ", t=" + t_le.str() + " has eps*t=" +
                                    rat_str(Rat(t_le) * eps) +
                                    " < 1, so 1.2^(7*eps*t) < 1.2^7 and the chain breaks";
        }
    }
    return ck;
}

InequalityCheck series_reading_check(const std::vector<XNum>& lad) {
    InequalityCheck ck;
    ck.name = "series_sign_reading";
    ck.domain = "printed (3/4)^(-j) vs corrected (3/4)^(+j) in the summation display";
    ck.method = "exact series value; termwise bound by 256-bit intervals";
    // corrected reading: (1/3)*sum_{j>=0}(3/4)^j = 4/3 and the termwise bound
    // alpha_i^(-1/3) <= (1/3)*(3/4)^(i-1) holds down the ladder
    bool plus_ok = Rat(1, 3) * Rat(4) == Rat(4, 3);
    for (int i = 1; i <= 50 && plus_ok; ++i) {
        XNum rhs{rat_pow(Rat(3, 4), i - 1) * Rat(1, 3)};
        if (rhs.ge(XNum(1) / lad[i - 1].cbrt(kSweepPrec)) != XNum::Cmp::yes)
            plus_ok = false;
    }
    // printed reading: the series diverges and already at i=1 the displayed sum
    // exceeds the claimed bound
    bool minus_refuted =
        Rat(1, 3) * (Rat(1) + Rat(4, 3)) > Rat(4, 3) - Rat(4) * Rat(1, 4);
    ck.status = (plus_ok && minus_refuted) ? CheckStatus::pass : CheckStatus::fail;
    ck.counterexample = "refuted reading (3/4)^(-j): at i=1 the display is "
                        "(1/3)*(1+4/3)=7/9 > 1/3 = 4/3 - 4*alpha_2^(-1/3)";
    return ck;
}

}  // namespace

std::vector<InequalityCheck> verify_inequalities(const std::vector<long>& ms,
                                                 int alpha_grid_points,
                                                 const std::vector<Rat>& eps_grid) {
    const int points = std::max(2, alpha_grid_points);
    std::vector<InequalityCheck> out;
    out.push_back(base_ratio_check(eps_grid));
    out.push_back(power_margin_check());
    out.push_back(binomial_spots_check());
    for (long m : ms) {
        if (m < 2) throw precondition_error("verify_inequalities: need m >= 2");
        window_checks(m, points, out);
    }
    std::vector<XNum> lad = alpha_ladder(51, kSweepPrec);
    ladder_checks(lad, out);
    out.push_back(ledger_identities_check());
    out.push_back(t_reading_check(eps_grid));
    out.push_back(series_reading_check(lad));
    return out;
}

Rat expected_mono_cliques(long N, int n) {
    if (n < 2) throw precondition_error("expected_mono_cliques: need n >= 2");
    if (N < n) return Rat(0);
    Int count = binomial(Int(N), Int(n));
    unsigned long e2 = (unsigned long)n * (n - 1) / 2;
    return Rat(count * 2, ipow(Int(2), e2));
}

WitnessSearchResult lower_bound_witness_search(const Graph& G, int N, long trials,
                                               std::uint64_t seed) {
    if (N < G.n()) throw precondition_error("witness search: need N >= n(G)");
    WitnessSearchResult res;
    for (long k = 0; k < trials; ++k) {
        TwoColoring c = gen_uniform(N, seed + (std::uint64_t)k);
        ++res.trials_used;
        if (find_mono_copy(c, Color::red, G)) continue;
        if (find_mono_copy(c, Color::blue, G)) continue;
        res.witness = std::move(c);
        break;
    }
    return res;
}

InequalityCheck es_clique_bound_check(int n, int N) {
    if (n < 2) throw precondition_error("es_clique_bound_check: need n >= 2");
    if (N < 0) N = 2 * n;
    if (N < n) throw precondition_error("es_clique_bound_check: need N >= n");
    InequalityCheck ck;
    ck.name = "es_clique_bound";
    ck.domain = "every 2-coloring of K_" + std::to_string(N) +
                " contains a monochromatic K_" + std::to_string(n);
    ck.method = "exhaustive";
    if (N > 6) {
        ck.status = CheckStatus::unchecked;
        return ck;
    }
    const int E = N * (N - 1) / 2;
    const Graph kn = Graph::complete(n);
    for (std::uint64_t mask = 0; mask < (1ull << E); ++mask) {
        Graph red(N);
        int bit = 0;
        for (int u = 0; u < N; ++u)
            for (int v = u + 1; v < N; ++v, ++bit)
                if (mask >> bit & 1) red.add_edge(u, v);
        TwoColoring c(std::move(red));
        MonoPair p = es_pair(c, n, n);
        bool found = p.X.count() >= n;
        if (!found)
            found = find_mono_copy(c, Color::red, kn).has_value() ||
                    find_mono_copy(c, Color::blue, kn).has_value();
        if (!found) {
            std::string edges;
            for (int u = 0; u < N; ++u)
                for (int v = u + 1; v < N; ++v)
                    if (c.is_red(u, v))
                        edges += (edges.empty() ? "" : ",") + std::to_string(u) + "-" +
                                 std::to_string(v);
            ck.status = CheckStatus::fail;
            ck.counterexample = "mask=" + std::to_string(mask) + " red={" + edges + "}";
            return ck;
        }
    }
    ck.status = CheckStatus::pass;
    return ck;
}

}  // namespace ramsey
