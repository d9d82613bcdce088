"""Naive reference implementations used as test oracles.

Nothing here imports the package's order, closure, or enumeration code:
strings are plain (tilde set, bar set) pairs, the order is the padded
componentwise comparison written out directly, and families come from
scanning every subset.
"""

from __future__ import annotations

from itertools import combinations, product


def all_strings(n, r):
    """Every (tilde, bar) pair of frozensets for I(n, r), in mask order."""
    out = []
    for m in range(1 << n):
        tilde = frozenset(i + 1 for i in range(r) if m >> i & 1)
        bar = frozenset(j + 1 for j in range(n - r) if m >> (r + j) & 1)
        out.append((tilde, bar))
    return out


def padded(w, n, r):
    tilde, bar = w
    left = sorted(tilde, reverse=True) + [0] * (r - len(tilde))
    right = [0] * (n - r - len(bar)) + [-q for q in sorted(bar)]
    return left + right


def leq(v, w, n, r):
    return all(a <= b for a, b in zip(padded(v, n, r), padded(w, n, r)))


def complement(w, n, r):
    tilde, bar = w
    return (frozenset(range(1, r + 1)) - tilde, frozenset(range(1, n - r + 1)) - bar)


def text(w, n, r):
    tilde, bar = w
    left = "".join(str(i) for i in sorted(tilde, reverse=True)) + "0" * (r - len(tilde))
    right = "0" * (n - r - len(bar)) + "".join(str(j) for j in sorted(bar))
    return f"{left}|{right}"


def covers(n, r):
    xs = all_strings(n, r)
    lt = [[a != b and leq(a, b, n, r) for b in xs] for a in xs]
    k = len(xs)
    return sorted((i, j) for i in range(k) for j in range(k)
                  if lt[i][j] and not any(lt[i][z] and lt[z][j] for z in range(k)))


def weighted_family(n, r, plus, nr=False):
    """All total maps (as frozensets of P-strings) in W+ / W- on S(n, r), by full scan."""
    xs = all_strings(n, r)
    k = len(xs)
    le = [[leq(a, b, n, r) for b in xs] for a in xs]
    comp = [xs.index(complement(a, n, r)) for a in xs]
    full = k - 1
    singles = [i for i in range(k) if bin(i).count("1") <= 1]
    out = []
    for pos in range(1 << k):
        P = [pos >> i & 1 for i in range(k)]
        if any(P[i] and not P[j] for i in range(k) for j in range(k) if le[i][j]):
            continue
        if plus and any(not P[i] and not P[comp[i]] for i in range(k)):
            continue
        if not plus and any(P[i] and P[comp[i]] for i in range(k)):
            continue
        if nr:
            # xi strings (empty, tilde singletons) P; eta strings (bar singletons) N
            if any(P[i] != (i < (1 << r)) for i in singles):
                continue
            if P[full] != plus:
                continue
        out.append(frozenset(i for i in range(k) if P[i]))
    return out


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def subset_sum_signs(tilde_vals, bar_vals):
    """Number of index subsets with nonnegative sum, over all 2^n subsets."""
    vals = list(tilde_vals) + list(bar_vals)
    count = 0
    for bits in product((0, 1), repeat=len(vals)):
        if sum(v for v, b in zip(vals, bits) if b) >= 0:
            count += 1
    return count


def nonneg_subsets(tilde_vals, bar_vals):
    vals = list(tilde_vals) + list(bar_vals)
    idx = range(len(vals))
    return {c for k in range(len(vals) + 1) for c in combinations(idx, k) if sum(vals[i] for i in c) >= 0}
