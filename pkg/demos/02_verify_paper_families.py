# %% [markdown]
# # The six difference families of orders 109, 145, 247
#
# Each family is stored as orbit index sets and, separately, as explicit
# element listings.  Expanding one must reproduce the other.

# %%
from skewhad import datasets
from skewhad.families import difference_counts, parameter_identities, verify_sds

datasets.self_check()

for cid, case in datasets.CASES.items():
    q = case.quadruple()
    report = verify_sds(q)
    params = parameter_identities(q)
    print(f"{cid}: {q.label():30} sds={report.passed}  {params}")

# %% [markdown]
# Every nonzero residue of Z_109 appears exactly 98 times as an ordered
# difference inside the blocks of the 109A family.

# %%
counts = difference_counts(datasets.get("109A").blocks())
print(counts.min(), counts.max(), len(counts))
