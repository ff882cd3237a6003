"""Instance search shared by several test modules."""

from functools import lru_cache

from gshape.decompose import classify, defines_octic_field, iter_fourth_power_free


@lru_cache(maxsize=None)
def instances(norm_bound=3000, per_case=3):
    """Up to ``per_case`` decompositions per primary case, smallest norm first."""
    found = {c: [] for c in range(1, 13)}
    for d in iter_fourth_power_free(norm_bound):
        c = classify(d).primary
        if c is not None and len(found[c]) < per_case and defines_octic_field(d):
            found[c].append(d)
        if all(len(v) == per_case for v in found.values()):
            break
    return found


@lru_cache(maxsize=None)
def overlap_instances(norm_bound=600):
    """(d, case) for every non-primary matching case, bounded norm."""
    out = []
    for d in iter_fourth_power_free(norm_bound):
        cm = classify(d)
        out.extend((d, c) for c in sorted(cm.matches - {cm.primary}))
    return tuple(out)
