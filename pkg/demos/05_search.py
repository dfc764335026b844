# %% [markdown]
# # Searching for new difference families
#
# Local search over orbit unions with a skew-type first block.  With
# H = {1} every subset is an orbit union, which is enough for small v.

# %%
from skewhad.construction import matrix_from_blocks, verify_hadamard, verify_skew
from skewhad.search import SearchConfig, build_indexing, run_search

for v in (3, 5, 7, 9, 11, 13, 19, 25):
    cfg = SearchConfig(v=v, seed=0)
    (res,) = run_search(cfg)
    A = matrix_from_blocks(res.blocks(build_indexing(cfg)))
    print(f"v={v:<3} verified={res.verified} restarts={res.restarts:<4} "
          f"order {A.shape[0]:<4} hadamard={verify_hadamard(A)} skew={verify_skew(A)}")

# %% [markdown]
# A nontrivial subgroup shrinks the space: for v=37 the subgroup generated
# by 10 has order 3, leaving 12 orbits.

# %%
cfg = SearchConfig(v=37, H_generator=10, seed=0)
(res,) = run_search(cfg)
print(res.verified, res.index_sets)

# %% [markdown]
# Starting from the published index sets with no steps simply re-verifies them.

# %%
from skewhad import datasets

case = datasets.get("109A")
cfg = SearchConfig(v=109, H_generator=45, initial=case.index_sets, max_steps_per_restart=0, max_restarts=1)
print(run_search(cfg)[0])
