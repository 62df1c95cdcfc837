"""Exact arithmetic in the lattice of supernatural numbers.

A supernatural number assigns to every prime an exponent that is either a
nonnegative integer or infinity.  Values here are finitely described: a
finite table of exceptional primes plus a default exponent (0 or infinity)
for every prime not listed.  That family is closed under products, gcd,
lcm and order comparison, and it covers everything the rest of the package
needs — images of ordinary integers, single-prime infinite powers, and the
top element.  Values with infinitely many distinct finite nonzero
exponents are not representable and are rejected by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError


class _Infinity:
    """The exponent infinity: above every int, absorbing under addition."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = _Infinity()

Exp = "int | _Infinity"  # documentation alias; exponents are ints or INF


def _is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _same_exp(a, b) -> bool:
    # INF compares equal only to itself; ints compare numerically
    if a is INF or b is INF:
        return a is b
    return a == b


def _valid_exp(e) -> bool:
    return e is INF or (isinstance(e, int) and e >= 0)


@dataclass(frozen=True)
class Supernatural:
    """A supernatural number in canonical exception/default form.

    ``exps`` lists (prime, exponent) exceptions; ``default`` (0 or INF)
    applies to every prime not listed.  Construction canonicalizes — primes
    ascending, entries equal to the default stripped — so structural
    equality is semantic equality.
    """

    exps: tuple = ()
    default: object = 0

    def __post_init__(self):
        if not (self.default == 0 or self.default is INF):
            raise DomainError("default exponent must be 0 or inf")
        seen = {}
        for entry in self.exps:
            p, e = entry
            if not _is_prime(p):
                raise DomainError(f"{p!r} is not prime")
            if not _valid_exp(e):
                raise DomainError(f"bad exponent for {p}: {e!r}")
            if p in seen:
                raise DomainError(f"prime {p} listed twice")
            seen[p] = e
        canon = tuple(
            (p, e) for p, e in sorted(seen.items()) if not _same_exp(e, self.default)
        )
        object.__setattr__(self, "exps", canon)

    def exponent(self, p: int):
        """The exponent of the prime p (the default if p is not listed)."""
        for q, e in self.exps:
            if q == p:
                return e
        return self.default

    def __str__(self) -> str:
        return format_supernatural(self)


E = Supernatural()
TOP = Supernatural(default=INF)


def phi0(n: int) -> Supernatural:
    """Embed a positive integer by its prime factorization."""
    if not isinstance(n, int) or n < 1:
        raise DomainError("phi0 expects a positive integer")
    exps = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            exps.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        exps.append((m, 1))
    return Supernatural(tuple(exps), 0)


def _union_primes(M: Supernatural, N: Supernatural):
    return sorted({p for p, _ in M.exps} | {p for p, _ in N.exps})


def mul(M: Supernatural, N: Supernatural) -> Supernatural:
    """Exponentwise sum; infinity absorbs."""
    exps = tuple((p, M.exponent(p) + N.exponent(p)) for p in _union_primes(M, N))
    return Supernatural(exps, M.default + N.default)


def leq(M: Supernatural, N: Supernatural) -> bool:
    """True iff every exponent of M is at most the one in N."""
    if not M.default <= N.default:
        return False
    return all(M.exponent(p) <= N.exponent(p) for p in _union_primes(M, N))


def gcd(M: Supernatural, N: Supernatural) -> Supernatural:
    """Componentwise minimum of exponents (the lattice meet)."""
    exps = tuple((p, min(M.exponent(p), N.exponent(p))) for p in _union_primes(M, N))
    return Supernatural(exps, min(M.default, N.default))


def lcm(M: Supernatural, N: Supernatural) -> Supernatural:
    """Componentwise maximum of exponents (the lattice join)."""
    exps = tuple((p, max(M.exponent(p), N.exponent(p))) for p in _union_primes(M, N))
    return Supernatural(exps, max(M.default, N.default))


def phi_of_set(values) -> Supernatural:
    """Componentwise supremum of phi0 over a finite nonempty set of ints.

    For a finite set this is just phi0 of the least common multiple, but it
    is computed as the fold of the lattice join so the identity is testable
    rather than assumed.
    """
    vals = list(values)
    if not vals:
        raise DomainError("phi of the empty set is undefined")
    out = phi0(vals[0])
    for a in vals[1:]:
        out = lcm(out, phi0(a))
    return out


def regular_contains(R: Supernatural, a: int) -> bool:
    """Membership of a positive integer in the regular set described by R."""
    return leq(phi0(a), R)


@dataclass(frozen=True)
class RegularSeq:
    """A divisibility chain b1 | b2 | ... | bK of positive integers."""

    terms: tuple = ()

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise DomainError("a regular sequence needs at least one term")
        for b in terms:
            if not isinstance(b, int) or b < 1:
                raise DomainError(f"bad term {b!r}: terms are positive integers")
        for a, b in zip(terms, terms[1:]):
            if b % a:
                raise DomainError(f"{a} does not divide {b}")

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def extract_regular_sequence(R: Supernatural, depth: int) -> RegularSeq:
    """A deterministic divisibility chain whose phi-sup climbs to R.

    Term k is the product over the first k support primes p of
    p^min(R_p, k): support primes enter one at a time in ascending order
    while every exponent ramps up, so consecutive terms divide and the
    prefix sup is monotone, reaching R once k covers both the support and
    the largest finite exponent.  Requires default 0 — with all but
    finitely many exponents infinite there is no finite chain to extract.
    """
    if not isinstance(depth, int) or depth < 1:
        raise DomainError("depth must be a positive integer")
    if R.default is INF:
        raise DomainError("cannot extract a chain from a value with default inf")
    support = [p for p, _ in R.exps]  # canonical form: every listed exponent > 0
    terms = []
    for k in range(1, depth + 1):
        b = 1
        for p in support[:k]:
            b *= p ** min(R.exponent(p), k)
        terms.append(b)
    return RegularSeq(tuple(terms))


def seq_dominates(a: RegularSeq, b: RegularSeq) -> bool:
    """True iff every term of a divides some term of b."""
    return all(any(bj % ai == 0 for bj in b.terms) for ai in a.terms)


def parse_supernatural(text: str) -> Supernatural:
    """Parse a literal like ``2^3*5^inf``, ``1``, or ``2^2;default=inf``.

    Bare primes mean exponent 1.  Anything malformed — including non-prime
    factors — raises ParseError.
    """
    s = text.strip()
    default = 0
    has_default_clause = False
    if ";" in s:
        s, _, tail = s.partition(";")
        s = s.strip()
        tail = tail.strip()
        has_default_clause = True
        if tail == "default=0":
            default = 0
        elif tail == "default=inf":
            default = INF
        else:
            raise ParseError(f"bad default clause {tail!r}")
    if s == "" and not has_default_clause:
        raise ParseError("empty literal")
    exps = []
    if s not in ("", "1"):
        for factor in s.split("*"):
            factor = factor.strip()
            base_s, sep, exp_s = factor.partition("^")
            try:
                p = int(base_s.strip())
            except ValueError:
                raise ParseError(f"bad factor {factor!r}") from None
            if sep:
                exp_s = exp_s.strip()
                if exp_s == "inf":
                    e = INF
                else:
                    try:
                        e = int(exp_s)
                    except ValueError:
                        raise ParseError(f"bad exponent in {factor!r}") from None
            else:
                e = 1
            exps.append((p, e))
    try:
        return Supernatural(tuple(exps), default)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_supernatural(M: Supernatural) -> str:
    """Canonical literal: primes ascending, ^1 omitted, default suffix."""
    parts = []
    for p, e in M.exps:
        if e is INF:
            parts.append(f"{p}^inf")
        elif e == 1:
            parts.append(str(p))
        else:
            parts.append(f"{p}^{e}")
    body = "*".join(parts)
    if M.default is INF:
        return f"{body};default=inf" if body else ";default=inf"
    return body or "1"
