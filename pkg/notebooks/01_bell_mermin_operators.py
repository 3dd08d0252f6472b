# %% [markdown]
# # Three ways to build the Bell-Mermin operator
#
# Each party measures sigma_x or sigma_y. Combining the two settings into
# f(x, y) = exp(-i pi/4)(x + i y)/sqrt(2) turns the Bell-Mermin pair into a
# plain tensor product, which we can build directly, grow block by block, or
# write down as a GHZ projector difference.

# %%
import numpy as np

from bellzuk import numerics as nm
from bellzuk import operators as ops

np.set_printoptions(precision=3, suppress=True)

# %% [markdown]
# One site: f(sigma_x, sigma_y) is a scaled raising operator.

# %%
print(ops.f_combine(ops.pauli("X"), ops.pauli("Y")))

# %% [markdown]
# Two sites: B and B' expanded over the four measurable correlations.

# %%
pair = ops.bell_mermin_product(2)
print("B  :", ops.pauli_expansion(pair).terms)
print("B' :", ops.pauli_expansion(pair, primed=True).terms)

# %% [markdown]
# The builders agree for every even qubit count and every two-block split.

# %%
for n in (2, 4, 6, 8):
    prod = ops.bell_mermin_product(n)
    dev = nm.max_abs_diff(prod.b, ops.bell_mermin_closed_form(n))
    for part in ops.two_block_partitions(n):
        dev = max(dev, nm.max_abs_diff(prod.b, ops.bell_mermin_recursive(part).b))
    top = np.linalg.eigvalsh(prod.b).max()
    print(f"2N={n}: max deviation {dev:.1e}, top eigenvalue {top:.4f} = 2^((2N-1)/2) = {2 ** ((n - 1) / 2):.4f}")

# %% [markdown]
# The Bell-Zukowski operator is the same matrix times a number.

# %%
for n in (2, 4, 6):
    print(f"2N={n}: Z / B = {ops.zukowski_scale(n):.5f}, top eigenvalue of Z = {np.linalg.eigvalsh(ops.zukowski_operator(n)).max():.5f}")
