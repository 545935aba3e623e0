# %% [markdown]
# # The 6phi5 building block, unit sums and reversal
#
# The generalisations come from inserting a sum equal to 1 (a specialised
# terminating 6phi5) and swapping the order of summation.

# %%
from fractions import Fraction

from qhv.arith import A, make_sample_point, mono, q_pow
from qhv.catalog import phi65_pair, proof_unit_sum_a, proof_unit_sum_c, reversal_check

pt = make_sample_point(Fraction(3, 7), Fraction(-5, 2))

for ell in range(5):
    lhs, rhs = phi65_pair(A, mono(t=3, c=-1, sign=-1), mono(t=-1, c=3), ell, pt)
    print(f"6phi5, ell={ell}: equal = {lhs == rhs}")

# %% [markdown]
# The c -> 0 limit with a -> q^-2n/a and b -> q^(k-n).

# %%
n, k = 3, 1
for ell in range(5):
    lhs, rhs = phi65_pair(mono(t=-4 * n, c=-2), q_pow(k - n), None, ell, pt)
    print(f"c=0 limit, ell={ell}: equal = {lhs == rhs}")

# %% [markdown]
# The two unit sums used for the rearrangement are identically 1.

# %%
print({(n, k, ell): (proof_unit_sum_a(n, k, ell, pt), proof_unit_sum_c(n, k, ell, pt))
       for n, k, ell in [(2, 0, 1), (4, 3, 2), (5, 5, 3)]})

# %% [markdown]
# Reversing k -> n - k with a -> q^(1-2n)/b maps each q-side sum onto
# its reversed partner, up to the last term as a common factor.

# %%
for pair in [("thm-a", "thm-e"), ("thm-c", "thm-g")]:
    print(pair, all(reversal_check(n, ell, pt, pair) for n in range(8) for ell in range(4)))
