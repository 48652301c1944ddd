"""A large subposet of dimension at most d, found in polynomial time."""

# %%
from posetdim import boolean_lattice, goodwillie_subposet, has_dim_at_most, induced, random_poset
from posetdim.bounds import goodwillie_lower_bound

# %%
for p in (boolean_lattice(4), random_poset(40, 0.3, seed=1)):
    for d in (2, 3):
        ex = goodwillie_subposet(p, d)
        sub = induced(p, ex.subset)
        print(p.n, d, ex.kind, len(ex.subset), ">=", ex.guarantee_int, has_dim_at_most(sub, d)[0])

# %%
print(goodwillie_lower_bound(20, 2))
