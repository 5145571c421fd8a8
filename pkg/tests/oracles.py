"""Brute-force reference computations, deliberately naive and independent of bpa."""

from itertools import permutations, product

BAR = "|"


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if 0 <= k <= n else 0


def fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def set_partitions(n):
    """All set partitions of {1..n} via restricted growth strings."""
    if n == 0:
        yield []
        return
    for rgs in product(range(n), repeat=n):
        if rgs[0] != 0:
            continue
        if any(rgs[i] > max(rgs[:i]) + 1 for i in range(1, n)):
            continue
        k = max(rgs) + 1
        yield [frozenset(i + 1 for i in range(n) if rgs[i] == b) for b in range(k)]


def stirling2_brute(n, k):
    return sum(1 for p in set_partitions(n) if len(p) == k)


def stirling1_brute(m):
    """Coefficients of x(x-1)...(x-m+1), lowest degree first."""
    poly = [1]
    for i in range(m):
        # multiply by (x - i)
        nxt = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d + 1] += c
            nxt[d] -= i * c
        poly = nxt
    return poly


def barred_brute(n, m):
    """Every barred arrangement as a tuple of tokens (blocks and bars)."""
    out = set()
    for part in set_partitions(n):
        tokens = [tuple(sorted(b)) for b in part] + [BAR] * m
        out.update(permutations(tokens))
    return out


def sections_of(tokens):
    secs = [[]]
    for t in tokens:
        if t == BAR:
            secs.append([])
        else:
            secs[-1].append(t)
    return secs


def restricted_brute(n, m, free=None):
    free = m if free is None else free
    return {
        t for t in barred_brute(n, m)
        if all(len(s) <= 1 for i, s in enumerate(sections_of(t)) if i != free)
    }


def render_tokens(tokens):
    return "|".join(" ".join("".join(map(str, b)) for b in s) for s in sections_of(tokens))
