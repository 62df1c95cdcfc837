"""Shared constructors for the test suite.

Small combinatorial generators: cycle types, systems built from them,
divisor chains, and a seeded conjugation helper.  Everything here is
brute-force and independent of the library's own enumeration code so the
tests can cross-check against it.
"""

import random
from functools import lru_cache
from math import gcd

from adicdyn import FinSystem


def divisors(n):
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def int_partitions(n):
    """Partitions of n as sorted-descending tuples: cycle types of S_n."""
    if n == 0:
        return ((),)
    out = []
    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()
    rec(n, n, [])
    return tuple(out)


def all_cycle_types(max_n):
    """One representative cycle type per (n, type), 1 <= n <= max_n."""
    for n in range(1, max_n + 1):
        for parts in int_partitions(n):
            yield parts


def system_of_type(parts):
    """Permutation with consecutive cycles of the given lengths.

    system_of_type((3, 2)) is the permutation (0 1 2)(3 4) on 5 points.
    """
    fwd = []
    start = 0
    for length in parts:
        for i in range(length):
            fwd.append(start + (i + 1) % length)
        start += length
    return FinSystem(tuple(fwd))


def random_conjugate(S, rng):
    """Relabel S by a random bijection: g . S . g^-1 on the same point set."""
    n = S.size
    g = list(range(n))
    rng.shuffle(g)
    fwd = [0] * n
    for x in range(n):
        fwd[g[x]] = g[S.apply(x)]
    return FinSystem(tuple(fwd))


def random_system(n, rng):
    """Uniformly random permutation on n points."""
    fwd = list(range(n))
    rng.shuffle(fwd)
    return FinSystem(tuple(fwd))


def strict_divisor_chains(limit):
    """All chains 1 <= d_1 < d_2 < ... with d_i | d_{i+1}, d_last <= limit.

    Single-element chains are included.  Used to drive chain construction
    over every admissible length profile up to the limit.
    """
    chains = []
    def grow(chain):
        chains.append(tuple(chain))
        last = chain[-1]
        for mult in range(2, limit // last + 1):
            chain.append(last * mult)
            grow(chain)
            chain.pop()
    for start in range(1, limit + 1):
        grow([start])
    return chains


def saturated_chains(n):
    """Maximal divisor chains 1 = d_0 | d_1 | ... | d_k = n.

    Each step multiplies by a single prime, so the chains correspond to
    orderings of the prime multiset of n.
    """
    if n == 1:
        return [(1,)]
    out = []
    def primes_of(m):
        ps = []
        d = 2
        while d * d <= m:
            if m % d == 0:
                ps.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            ps.append(m)
        return ps
    def grow(chain):
        cur = chain[-1]
        if cur == n:
            out.append(tuple(chain))
            return
        for p in primes_of(n // cur):
            chain.append(cur * p)
            grow(chain)
            chain.pop()
    grow([1])
    return out


def cycle_gcd(parts):
    g = 0
    for length in parts:
        g = gcd(g, length)
    return g


def seeded(seed):
    return random.Random(seed)
