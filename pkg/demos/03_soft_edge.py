# %% [markdown]
# The weighted Laguerre function of degree 500 next to its four
# large-degree models.  Errors are measured against the exact recurrence.

# %%
import numpy as np

from rydberg_renyi.laguerre import (
    LaguerreParams,
    hilb_eval,
    pr_airy_eval,
    pr_growing_log_abs,
    pr_oscillatory_eval,
    weighted,
)

params = LaguerreParams(500, 0.5)
n, a = params.n, params.alpha

# %% Bessel zone near the origin
x = np.array([1e-3, 1 / n, 0.1, 1.0])
print("Hilb / exact:", np.round(hilb_eval(params, x) / weighted(n, a, x), 8))

# %% bulk: the squared model follows the oscillations
x = np.linspace(995, 1005, 9)
print("oscillatory model :", np.round(pr_oscillatory_eval(params, x), 7))
print("exact squared     :", np.round(weighted(n, a, x) ** 2, 7))

# %% soft edge, in the variable t with x = 4n + 2a + 2 - 2 (2n/3)^(1/3) t
t = np.linspace(-4, 4, 9)
x = 4 * n + 2 * a + 2 - 2 * (2 * n / 3) ** (1 / 3) * t
print("Airy model :", np.round(pr_airy_eval(params, x), 5))
print("exact      :", np.round(weighted(n, a, x), 5))

# %% beyond the edge only the logarithm is meaningful
x = np.array([2030.0, 2100.0, 2400.0])
print("log|model| :", np.round(pr_growing_log_abs(params, x), 3))
print("log|exact| :", np.round(np.log(np.abs(weighted(n, a, x))), 3))
