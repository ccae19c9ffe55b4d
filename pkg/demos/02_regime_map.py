# %% [markdown]
# Which asymptotic law governs N_{n,l}(D, p)?  A map over (D, p), then a
# look at how fast exact norms approach the selected law.

# %%
from rydberg_renyi import classify, convergence_report, make_spec

dims = [1.0, 1.2, 1.5, 1.8, 2.0, 3.0, 4.0, 6.0]
orders = [0.5, 1.5, 2.0, 2.5, 3.0, 5.0, 8.0]
print("D \\ p " + "".join(f"{p:>29}" for p in orders))
for D in dims:
    cells = []
    for p in orders:
        r = classify(make_spec(10, 0, D, p))
        tag = r.branch.value + ("*log" if r.has_log else "")
        cells.append(f"{tag:>29}")
    print(f"{D:5.1f} " + "".join(cells))

# %% [markdown]
# Exact over asymptotic for one case per power-law branch.  Log branches
# report exact / power law - ln n instead, which only has to stay bounded.

# %%
cases = {
    "cosine D=3 p=0.5": (0, 3, 0.5),
    "Bessel D=3 p=2": (0, 3, 2.0),
    "Airy D=1 p=3": (0, 1, 3.0),
    "tie D=1.5 p=5": (0, 1.5, 5.0),
    "log D=3 p=1.5": (0, 3, 1.5),
}
for name, (l, D, p) in cases.items():
    rows = convergence_report(l, D, p, [100, 400, 1600])
    print(f"{name:>18}: " + "  ".join(f"n={r.n}: {r.ratio:.5f}" for r in rows))
