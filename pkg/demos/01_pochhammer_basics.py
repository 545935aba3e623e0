# %% [markdown]
# # Shifted factorials, q-shifted factorials and monomial parameters
#
# Everything in qhv is exact: scalars are `fractions.Fraction`.

# %%
from fractions import Fraction

from qhv.arith import A, Q, make_sample_point, mono, monomial_eval
from qhv.pochhammer import FractionSpec, PochSpec, fraction_eval, q_pochhammer, shifted_factorial

# %% [markdown]
# The rising factorial extends to negative indices; so does the q-version.

# %%
print("(2)_3      =", shifted_factorial(2, 3))
print("(3)_-2     =", shifted_factorial(3, -2))
print("(2;3)_2    =", q_pochhammer(2, 3, 2))
print("(2;3)_-1   =", q_pochhammer(2, 3, -1))

# (x;q)_{-n} = 1 / (x q^-n; q)_n
x, q = Fraction(2, 7), Fraction(3, 5)
assert q_pochhammer(x, q, -4) == 1 / q_pochhammer(x * q ** -4, q, 4)

# %% [markdown]
# Square roots vanish under q = t^2, a = c^2: sqrt(qa) is the monomial t*c,
# and (a; q^3)_k is a symbol with step 3.

# %%
pt = make_sample_point(Fraction(1, 2), Fraction(1, 3))
print("q, a       =", pt.q, pt.a)
print("sqrt(qa)   =", monomial_eval(mono(t=1, c=1), pt))
print("-q^-1      =", monomial_eval(mono(t=-2, sign=-1), pt))

ratio = FractionSpec((PochSpec(Q, 3),), (PochSpec(Q * A, 3),), index=1)
print("(q;q^3)_1/(qa;q^3)_1 =", fraction_eval(ratio, pt))
