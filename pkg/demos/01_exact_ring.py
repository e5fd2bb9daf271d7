# # Exact functions of momentum
#
# Every function in this package lives in the ring P(p) / (1 + p^2)^N with
# Gaussian-rational coefficients. Sums, products and derivatives stay in the
# ring, and equality is decided by comparing canonical forms.

# %%
from coulomb_momentum import PolyField, evaluate
from coulomb_momentum.poly import I

p1, p2, p3 = (PolyField.coordinate(a) for a in (1, 2, 3))
inv = PolyField(1, 1)  # 1 / (1 + p^2)

# %% [markdown]
# Common factors of (1 + p^2) cancel automatically.

# %%
print(inv * PolyField.q(1))
print(1 - inv * 2)

# %% [markdown]
# Derivatives are exact. The Laplacian agrees with three second partials.

# %%
print(inv.partial(1))
lap = inv.laplacian()
print(lap)
print(lap == sum((inv.partial(a).partial(a) for a in (2, 3)), inv.partial(1).partial(1)))

# %% [markdown]
# Complex coefficients come for free, and evaluation rounds only once.

# %%
z = p1 + p2 * I
print(z * z.conjugate())
print(evaluate((PolyField.p_squared() - 1) * inv, (2, 0, 0)))
print(PolyField.from_text(lap.to_text()) == lap)
