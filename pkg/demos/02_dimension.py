"""Realizers: dimension 2 by transitive orientation, higher by search."""

# %%
from posetdim import dimension, has_dim_at_most, has_dim_at_most_2, restrict_realizer, verify_realizer
from posetdim import boolean_lattice, induced, standard_example

# %%
ok, r = has_dim_at_most_2(boolean_lattice(2))
print(ok, r.extensions)

# %%
# the standard examples need exactly m extensions
for m in (2, 3, 4):
    s = standard_example(m)
    print(m, dimension(s), has_dim_at_most(s, m - 1)[0])

# %%
# every realizer is checked, and restricting one stays valid
b3 = boolean_lattice(3)
ok, r = has_dim_at_most(b3, 3)
keep = [0, 1, 2, 3, 7]
print(verify_realizer(b3, r), verify_realizer(induced(b3, keep), restrict_realizer(r, keep)))
