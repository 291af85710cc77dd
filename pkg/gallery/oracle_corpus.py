"""
Checking against brute force on a random corpus
===============================================

Lattices, the sees relation and saturation are recomputed by exhaustion
over all subfamilies and compared with the fast paths.
"""

import collections
import time

from labelled_prim import enumerate_hs
from labelled_prim.oracle import check_oracle, corpus

start = time.perf_counter()
result = check_oracle(seed=0, instances=200)
print("passed:", result.passed, result.compared, f"{time.perf_counter() - start:.2f} s")

sizes = collections.Counter(len(s.family) for s in corpus(0, 200))
lattices = collections.Counter(len(enumerate_hs(s).members) for s in corpus(0, 200))
print("|B| histogram:", dict(sorted(sizes.items())))
print("lattice size histogram:", dict(sorted(lattices.items())))
