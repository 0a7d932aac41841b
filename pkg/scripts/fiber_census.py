"""Tabulate fiber sizes of the splitting map by front size r and block-count condition.

Each listed size is counted by gluing, then compared with the partition-sum formula.
"""

from rderange.condition import SplitCondition
from rderange.permutation import identity
from rderange.splitting import fiber, fiber_size_formula

for r in range(7):
    blocks = [s.front_cycle_count(r) for s in fiber(identity(r), r)]
    conds = [SplitCondition.parity(0), SplitCondition.parity(1)]
    conds += [SplitCondition.equal_k(k) for k in range(1, r + 1)]
    cells = []
    for w in conds:
        seen = sum(1 for k in blocks if w.accepts(k))
        mark = "" if seen == fiber_size_formula(r, w) else "!"
        cells.append(f"{w}:{seen}{mark}")
    print(f"r={r} total={len(blocks)}  " + "  ".join(cells))
