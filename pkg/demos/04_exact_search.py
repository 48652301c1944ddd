"""Exact largest subposets of dimension <= 2, with certificates."""

# %%
import time

from posetdim import boolean_lattice, ex_star_max_dim, lex_power, standard_example, verify_theorem1_instance

# %%
for n in range(1, 6):
    t = time.perf_counter()
    res = ex_star_max_dim(boolean_lattice(n), 2)
    print(f"B_{n}: {res.value} exact={res.exact} oracle calls={res.stats.nodes} {time.perf_counter() - t:.2f}s")

# %%
for m in range(2, 6):
    print(f"S_{m}:", ex_star_max_dim(standard_example(m), 2).value)

# %%
# the witness comes with a realizer of the induced subposet
res = ex_star_max_dim(standard_example(4), 2)
print(res.witness, res.certificate.extensions)

# %%
# lex powers: ex* is submultiplicative
rep = verify_theorem1_instance(standard_example(3), 2, 2)
print(rep.lhs.value, "<=", rep.rhs, rep.holds)

# %%
# a tight budget still returns a certified answer, flagged inexact
print(ex_star_max_dim(lex_power(standard_example(3), 2), 2, budget=50).exact)
