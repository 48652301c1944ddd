"""Upper bounds from powers of standard examples."""

# %%
from posetdim.bounds import (
    build_corollary2_witness,
    corollary2_bound,
    corollary2_threshold,
    optimal_m,
    table_tsv,
)
from posetdim import ex_star_max_dim

# %%
print(table_tsv(), end="")
print(optimal_m(5))

# %%
for n in (20, 400, 437, 8000):
    c = corollary2_bound(n, 2)
    print(n, c.digits.digits, c.digit_bound, round(c.smoothed, 2), round(n**0.8295, 2))

# %%
# the witness for n = 11 with m = 2 is S_2 (4 points) twice plus three points
q = build_corollary2_witness(11, 2)
print(q.n, ex_star_max_dim(q, 2).value)

# %%
k = corollary2_threshold()
print("smoothed bound below n^0.8295 for all n >= 20 **", k)
