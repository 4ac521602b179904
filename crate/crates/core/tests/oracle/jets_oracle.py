"""Independent oracle for the frozen jet values in the Rust test suites.

Two routes:
  * `direct_curvature` builds the full metric in explicit coordinates and
    computes the Ricci tensor from Christoffel symbols (sympy), for small n.
  * `warped_jets` uses sympy series expansion of the closed forms.
Run: python3 jets_oracle.py
"""
import sympy as sp

t = sp.symbols("t")
K = 16


def series_coeffs(expr, order=K):
    s = sp.series(expr, t, 0, order + 1).removeO()
    s = sp.expand(s)
    return [sp.nsimplify(s.coeff(t, i)) for i in range(order + 1)]


def lead(coeffs):
    for i, c in enumerate(coeffs):
        if c != 0:
            return (i, c)
    return ("zero", 0)


def warped_jets(factors):
    """factors: list of (dim, sec_curv, warp expr)."""
    kap = [sp.diff(f, t) / f for (_, _, f) in factors]
    H = sum(d * k for (d, _, _), k in zip(factors, kap))
    B2 = sum(d * k**2 for (d, _, _), k in zip(factors, kap))
    ric = -sum(d * sp.diff(f, t, 2) / f for (d, _, f) in factors)
    sleaf = sum(d * (d - 1) * c / f**2 for (d, c, f) in factors)
    sm = sleaf + 2 * ric + B2 - H**2 + 0  # Gauss rearranged is NOT used below
    # explicit form instead:
    sm = sleaf - 2 * sum(d * sp.diff(f, t, 2) / f for (d, _, f) in factors)
    sm -= sum(d * (d - 1) * k**2 for (d, _, _), k in zip(factors, kap))
    for i, (di, _, _) in enumerate(factors):
        for j, (dj, _, _) in enumerate(factors):
            if i != j:
                sm -= di * dj * kap[i] * kap[j]
    area = sp.Integer(1)
    for (d, _, f) in factors:
        area *= (f / f.subs(t, 0)) ** d
    return dict(H=H, B2=B2, Ric=ric, S_leaf=sleaf, S_M=sm, area=area)


def ricci_scalar(g, coords):
    n = len(coords)
    ginv = g.inv()
    Gamma = [[[sp.simplify(sum(ginv[a, e] * (sp.diff(g[e, b], coords[c]) + sp.diff(g[e, c], coords[b]) - sp.diff(g[b, c], coords[e])) for e in range(n)) / 2)
               for c in range(n)] for b in range(n)] for a in range(n)]
    def ric(b, c):
        r = 0
        for a in range(n):
            r += sp.diff(Gamma[a][b][c], coords[a]) - sp.diff(Gamma[a][b][a], coords[c])
            for e in range(n):
                r += Gamma[a][a][e] * Gamma[e][b][c] - Gamma[a][c][e] * Gamma[e][b][a]
        return sp.simplify(r)
    R = sp.zeros(n, n)
    for b in range(n):
        for c in range(n):
            R[b, c] = ric(b, c)
    S = sp.simplify(sum(ginv[b, c] * R[b, c] for b in range(n) for c in range(n)))
    return R, S


def direct_case(u, w, kind):
    """kind: 'sphere_circle' (S^2 x S^1), 'hyp_circle' (H^2 x S^1), 'hyp_sphere'."""
    x, y, z = sp.symbols("x y z", positive=True)
    if kind == "sphere_circle":
        g = sp.diag(u**2, u**2 * sp.sin(x) ** 2, w**2, 1)
    elif kind == "hyp_circle":
        g = sp.diag(u**2 / y**2, u**2 / y**2, w**2, 1)
    elif kind == "torus":
        g = sp.diag(u**2, w**2, 1)
        coords = [x, y, t]
        R, S = ricci_scalar(g, coords)
        return R[2, 2], S
    coords = [x, y, z, t]
    R, S = ricci_scalar(g, coords)
    return R[3, 3], S


def report(name, factors):
    j = warped_jets(factors)
    out = {}
    for q in ["H", "B2", "Ric", "S_leaf", "S_M", "area"]:
        c = series_coeffs(j[q])
        out[q] = c
        print(f"{name:22s} {q:7s} lead={lead(c)}  coeffs={[str(v) for v in c]}")
    return j, out


if __name__ == "__main__":
    R = sp.Rational
    entries = {}
    for n in (4, 5, 6):
        u = 1 / (1 + (n - 3) * t**4)
        w = 1 + 2 * t**4 + 2 * t**8
        entries[f"case1_n{n}"] = [(2, 1, u), (n - 3, 0, w)]
    for n in (4, 5):
        u = 1 + t**4 + t**8
        w = 1 / (1 + (n - 2) * t**4)
        entries[f"case2_n{n}"] = [(n - 2, -1, u), (1, 0, w)]
    for n in (5, 6):
        u = 1 + 2 * t**4 + 2 * t**8
        w = 1 / (1 + (n - 3) * t**4)
        entries[f"case3_n{n}"] = [(n - 3, -1, u), (2, R((n - 3) * (n - 4), 2), w)]
    for k in (1, 2, 3):
        f = 1 + t ** (2 * k)
        entries[f"torus3_k{k}"] = [(1, 0, f), (1, 0, 1 / f)]
    for (k, m) in ((2, 5), (1, 3), (2, 3), (1, 2), (2, 4)):
        f = 1 + t ** (2 * k)
        entries[f"ptorus_k{k}_m{m}"] = [(1, 0, f + t ** (2 * m)), (1, 0, 1 / f)]
    for k in (1, 2):
        entries[f"intro_k{k}"] = [(2, 1, sp.sqrt(1 + t ** (2 * k)))]
    entries["mm_sphere"] = [(2, 1, sp.sqrt(1 + t**4))]
    entries["positive_sigma_n5"] = [(3, 1, sp.Integer(1)), (1, 0, sp.Integer(1)), ]

    results = {}
    for name, fac in entries.items():
        results[name] = report(name, fac)

    # direct Christoffel route for the four-dimensional cases and the 3-torus
    print("--- direct curvature cross-check")
    for name, kind in (("case1_n4", "sphere_circle"), ("case2_n4", "hyp_circle")):
        fac = entries[name]
        u, w = fac[0][2], fac[1][2]
        ric_tt, S = direct_case(u, w, kind)
        j = results[name][0]
        print(name, "Ric diff:", sp.simplify(ric_tt - j["Ric"]), " S diff:", sp.simplify(S - j["S_M"]))
    fac = entries["torus3_k2"]
    ric_tt, S = direct_case(fac[0][2], fac[1][2], "torus")
    j = results["torus3_k2"][0]
    print("torus3_k2 Ric diff:", sp.simplify(ric_tt - j["Ric"]), " S diff:", sp.simplify(S - j["S_M"]))
    fac = entries["ptorus_k2_m5"]
    ric_tt, S = direct_case(fac[0][2], fac[1][2], "torus")
    j = results["ptorus_k2_m5"][0]
    print("ptorus_k2_m5 Ric diff:", sp.simplify(ric_tt - j["Ric"]), " S diff:", sp.simplify(S - j["S_M"]))

    # closed forms used by the series / geometry unit tests
    print("--- misc")
    print("div", series_coeffs((8*t**3 + 16*t**7) / (1 + 2*t**4 + 2*t**8)))
    print("sqrt(1+t^2)", series_coeffs(sp.sqrt(1 + t**2)))
    print("d sqrt(1+t^2)", series_coeffs(sp.diff(sp.sqrt(1 + t**2), t), 15))
    for n in (4, 5, 6):
        u = 1 / (1 + (n - 3) * t**4)
        print("u'' n=%d" % n, series_coeffs(sp.diff(u, t, 2)))
    # intro k=2 S^M on |t|<=0.25
    sm = results["intro_k2"][0]["S_M"]
    f = sp.lambdify(t, sm)
    print("intro_k2 min S^M on [-0.25,0.25]", min(f(-0.25 + 0.5 * i / 1000) for i in range(1001)))
    print("intro_k1 S^M(0)", sp.simplify(results["intro_k1"][0]["S_M"].subs(t, 0)))
    print("mm S^M closed", sp.simplify(results["mm_sphere"][0]["S_M"] - (2/(1+t**4) - (24*t**2 + 16*t**6)/(1+t**4)**2)))
    print("intro_k1 Ric closed", sp.simplify(results["intro_k1"][0]["Ric"] + 2/(1+t**2)**2))
    # case1 n=4 area ratio at 0.1
    print("case1_n4 area(0.1)", sp.N(results["case1_n4"][0]["area"].subs(t, sp.Rational(1, 10)), 20))
