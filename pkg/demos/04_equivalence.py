# %% [markdown]
# # Are the two families really different?
#
# Two blocks are equivalent when some x -> m*x + t (m a unit) carries one
# onto the other.  Scanning all maps shows the second blocks of the A and B
# families are not equivalent for v=145 and v=247.

# %%
from skewhad import datasets
from skewhad.equivalence import AffineMap, apply, find_equivalence
from skewhad.ring import unit_group_order

for v in (145, 247):
    a2 = datasets.get(f"{v}A").blocks()[1]
    b2 = datasets.get(f"{v}B").blocks()[1]
    print(v, unit_group_order(v) * v, "maps scanned ->", find_equivalence(a2, b2))

# %% [markdown]
# A planted map is recovered (or a lexicographically smaller one that does
# the same job).

# %%
b2 = datasets.get("145B").blocks()[1]
image = apply(AffineMap(145, 37, 12), b2)
print(find_equivalence(b2, image))
