# %% [markdown]
# # A noisy Bell pair that passes every two-setting test
#
# rho(V) mixes the Bell state with white noise. With settings sigma_x and
# sigma_y the pair has correlations (XX, XY, YX, YY) = (0, V, V, 0): no CHSH
# combination exceeds 2, and the full-correlation local-model test passes
# even for tensor products of several pairs.

# %%
import itertools

import numpy as np

from bellzuk import analysis as an
from bellzuk.states import noisy_bell, tensor_power

# %%
for v in (0.0, 0.5, 0.85, 1.0):
    rho = noisy_bell(v)
    corr = [an.correlation(rho, s) for s in ("XX", "XY", "YX", "YY")]
    chsh = [r.value for r in an.chsh_suite(rho)]
    print(f"V={v:.2f}  E={np.round(corr, 4)}  CHSH={np.round(chsh, 4)}")

# %% [markdown]
# Local-model check on N copies: the sign-contracted sum equals (4V)^N and
# never exceeds 4^N.

# %%
for n_copies in (1, 2):
    for v in (0.5, 1.0):
        rep = an.lhv_full_set_check(an.correlation_table(tensor_power(noisy_bell(v), n_copies)))
        print(f"N={n_copies} V={v}: S={rep.value:.4f} bound={rep.bound:.0f} violated={rep.violated}")

# %% [markdown]
# The Bell-Mermin expectation on N copies is V^N, whichever way we compute it.

# %%
for n_copies in (1, 2, 3, 4):
    v = 0.9
    print(
        f"N={n_copies}: dense {an.mermin_expectation_dense(n_copies, v):.6f}, "
        f"factorized {an.mermin_expectation_factorized(n_copies, v):.6f}, V^N {v**n_copies:.6f}"
    )
