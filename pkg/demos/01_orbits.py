# %% [markdown]
# # Orbits of a multiplicative subgroup
#
# The published difference families are unions of orbits of a small
# subgroup H of Z_n^*.  Orbits come in negation pairs alpha_{2i},
# alpha_{2i+1} = -alpha_{2i}.

# %%
from skewhad import cyclic_subgroup, elements_of_order, orbits_of, paper_indexing, unit_group_order

n = 145
print("phi(145) =", unit_group_order(n))
print("units of order 7:", elements_of_order(n, 7))

# %%
H = cyclic_subgroup(n, 16)
print("H =", H.elements)
print("orbits on Z_145, including {0}:", len(orbits_of(n, H)))

# %% [markdown]
# For n=145 the published numbering lists every unit orbit before the
# orbits of zero divisors, so we ask for the "units-first" rule.

# %%
idx = paper_indexing(n, H, order="units-first")
for i in range(0, len(idx), 2):
    print(f"alpha_{i:<2} = {idx[i]}   alpha_{i + 1:<2} = {idx[i + 1]}")

# %% [markdown]
# n=247 has several subgroups of order 9; the one used here is generated by 9.

# %%
idx247 = paper_indexing(247, cyclic_subgroup(247, 9))
print(len(idx247), "nonzero orbits, sizes", sorted(set(idx247.sizes)))
print("alpha_22 =", idx247[22], " alpha_28 =", idx247[28])
