# %% [markdown]
# # The two curious identities and their chi-gated closed forms
#
# The 3F2(3/4) sum and its q-analogue vanish unless n is a multiple of 3.

# %%
from fractions import Fraction

from qhv.arith import make_sample_point
from qhv.catalog import lhs_sum, rhs_closed_form

a = Fraction(1, 5)
for n in range(7):
    print(f"n={n}  3F2(3/4) = {lhs_sum('eq-andrews', n, 0, a)!s:>12}"
          f"   closed form = {rhs_closed_form('eq-andrews', n, 0, a)}")

# %% [markdown]
# The q-side sum at q = 1/4, a = 1/9.

# %%
pt = make_sample_point(Fraction(1, 2), Fraction(1, 3))
for n in range(7):
    lhs = lhs_sum("eq-q-andrews", n, 0, pt)
    assert lhs == rhs_closed_form("eq-q-andrews", n, 0, pt)
    print(f"n={n}  {lhs}")

# %% [markdown]
# The reversed companions behave the same way.

# %%
b = Fraction(2, 7)
print([str(lhs_sum("eq-andrews-rev", n, 0, b)) for n in range(7)])
print([str(lhs_sum("eq-q-andrews-rev", n, 0, pt)) for n in range(7)])
