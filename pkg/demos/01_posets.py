"""Building posets and reading off the basic invariants."""

# %%
import numpy as np

from posetdim import boolean_lattice, chain, height, lex_power, max_antichain, min_chain_cover, standard_example
from posetdim.io import format_dot, format_poset

# %%
# B_3: subsets of {0,1,2}, labelled by bitmask
b3 = boolean_lattice(3)
print(b3.n, "elements,", len(b3.covers()), "covers")
print(b3.lt.astype(int))

# %%
# Dilworth: the minimum chain cover and a maximum antichain have the same size
print("antichain", max_antichain(b3).members)
print("chains   ", min_chain_cover(b3).chains)
print("height   ", height(b3))

# %%
# S_3 is a_i < b_j for i != j; its lex square has 36 points
s3 = standard_example(3)
print(np.argwhere(s3.lt).tolist())
print(lex_power(s3, 2).n, lex_power(chain(2), 3).is_chain())

# %%
print(format_poset(chain(3)))
print(format_dot(boolean_lattice(2)))
