"""
Profiles of three classical threefolds
======================================

The linear P^3, the quadric in P^4, and the (2,2) complete intersection in
P^5 all have split normal bundles in P^6, so every invariant can be checked
by hand.  Their five-parameter tuples feed the profile and constraint
machinery.
"""

from p6fold import HypothesisConfig, InvariantTuple, evaluate, profile

EXAMPLES = {
    "linear P^3 (degree 1)": InvariantTuple(1, -2, 1, 1, 0),
    "quadric in P^4 (degree 2)": InvariantTuple(2, -2, 1, 2, 2),
    "(2,2) intersection in P^5 (degree 4)": InvariantTuple(4, 0, 1, 6, 32),
}

cfg = HypothesisConfig()  # geometric mode: parity and positivity included

for name, t in EXAMPLES.items():
    print(name, "->", tuple(t))
    p = profile(t)
    # the seven basic intersection numbers
    print(f"  h^3={p.h3} h^2k={p.h2k} hk^2={p.hk2} k^3={p.k3} "
          f"h.c2={p.hc2} k.c2={p.kc2} c3={p.c3top}")
    # surface and curve invariants
    print(f"  K_S^2={p.KS2} c2(S)={p.c2S} p_g={p.pg} g={p.g} "
          f"(n3={p.n3}=d^2)")
    # the six Schur numbers of the twisted normal bundle, all >= 0 for a
    # genuine threefold
    print(f"  schur={tuple(p.schur)}")
    report = evaluate(t, cfg)
    slacks = {e.id: e.value for e in report.entries}
    print(f"  feasible={report.feasible} "
          f"(H1 slack={slacks['H1']}, H2 slack={slacks['H2']})")
    print()

# The linear P^3 is extremal: its twisted normal bundle is trivial, so all
# six Schur numbers and both Hodge slacks vanish at once.
