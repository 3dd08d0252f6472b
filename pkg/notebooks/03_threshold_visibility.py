# %% [markdown]
# # Where the Zukowski bound breaks
#
# Rescaling <B> = V^N into <Z> gives a violation once V exceeds
# T(N) = (2 (2/pi)^(2N) 2^((2N-1)/2))^(1/N). One copy never suffices; from
# two copies on the threshold drops below 1 and tends to 8/pi^2.

# %%
from bellzuk import analysis as an

# %%
for n, t in an.threshold_curve(10).entries:
    print(f"N={n:2d}  T={t:.5f}  {'feasible' if t < 1 else '-'}")
print(f"limit 8/pi^2 = {an.asymptotic_threshold():.5f}")
for n in (50, 100, 1000):
    print(f"N={n}: T - limit = {an.threshold_visibility(n) - an.asymptotic_threshold():.2e}")

# %% [markdown]
# At N = 2 and V = 0.98 the Mermin inequality holds while the Zukowski one
# fails.

# %%
for rep in an.scan(2, [0.90, 0.98]):
    print(f"V={rep.visibility:.2f} {rep.name:22s} value={rep.value:.5f} bound={rep.bound:.5f} violated={rep.violated}")
