# %% [markdown]
# Disequilibrium of the Rydberg s-state n = 50 as a function of dimension.
#
# The leading-order formula puts the maximum at D = 12.  Exact quadrature at
# the same n shifts it by one, to D = 13: at n = 50 the o(1) correction is
# still a few percent and the peak is flat enough for that to matter.

# %%
import numpy as np

from rydberg_renyi import Method, OscillatorState, disequilibrium

dims = np.arange(2, 31)
asym = np.array([disequilibrium(OscillatorState(50, 0, D), Method.ASYMPTOTIC).value for D in dims])
exact = np.array([disequilibrium(OscillatorState(50, 0, D), Method.EXACT).value for D in dims])

# %%
print(" D   asymptotic        exact   ratio")
for D, a, e in zip(dims, asym, exact):
    print(f"{D:2d} {a:12.6g} {e:12.6g} {e / a:7.4f}")
print(f"argmax: asymptotic D = {dims[asym.argmax()]}, exact D = {dims[exact.argmax()]}")

# %% [markdown]
# The peak moves outward with n; the asymptotic law alone shows it.  Much
# past D = 180 the Bessel constant drops below the smallest double and the
# library raises ToleranceError, so the scan stops at D = 100.

# %%
for n in (50, 200, 1000):
    vals = [disequilibrium(OscillatorState(n, 0, D), Method.ASYMPTOTIC).value for D in range(2, 101)]
    print(f"n = {n:>5}: maximum at D = {2 + int(np.argmax(vals))}")
