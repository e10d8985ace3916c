"""Scan half-integer contraction weights for N = 1 and N = 2."""

from galsca.search import SearchSpec, scan_weights

for N in (1, 2):
    res = scan_weights(SearchSpec.make(N))
    print(f"N={N}: {res.naive_size} assignments over families {res.families}")
    print(f"  rejected: {res.rejected}")
    print(f"  admissible: {len(res.admissible)}  ({res.elapsed:.1f}s)")
    for w in res.weights():
        print("   ", {k: str(v) for k, v in w.items()})
