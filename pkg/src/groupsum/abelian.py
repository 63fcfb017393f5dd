"""Finite Abelian groups in primary decomposition.

A group is a tuple of prime-power moduli; an element is a tuple of residues,
one per factor.  Elements are plain tuples so they hash, sort and print
without ceremony.  Ordering of elements everywhere is lexicographic on the
residue vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

GroupElement = tuple[int, ...]


class GroupError(ValueError):
    pass


class NoSuchSubset(GroupError):
    """Raised when no zero-sum involution subset of the requested size exists."""


class UnsupportedGroup(GroupError):
    pass


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_of(q: int) -> int | None:
    """Return p if q is a power of the prime p, else None."""
    f = factorize(q)
    if len(f) != 1:
        return None
    return next(iter(f))


def _canonical_key(q: int) -> tuple[int, int]:
    # ascending prime, larger powers first: Z4 x Z2 is stored as (4, 2)
    return (prime_of(q), -q)


@dataclass(frozen=True)
class GroupSpec:
    """A finite Abelian group Z_{q1} x ... x Z_{qr}, each q a prime power."""

    factors: tuple[int, ...]
    order: int = field(init=False, compare=False)

    def __post_init__(self):
        factors = tuple(int(q) for q in self.factors)
        for q in factors:
            if q < 2 or prime_of(q) is None:
                raise GroupError(f"factor {q} is not a prime power >= 2")
        factors = tuple(sorted(factors, key=_canonical_key))
        object.__setattr__(self, "factors", factors)
        order = 1
        for q in factors:
            order *= q
        object.__setattr__(self, "order", order)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse "4,2,3" style strings.  Composite moduli are split by CRT."""
        text = text.strip()
        if not text:
            raise GroupError("empty group spec")
        factors: list[int] = []
        for tok in text.split(","):
            tok = tok.strip()
            try:
                m = int(tok)
            except ValueError:
                raise GroupError(f"bad group factor {tok!r}") from None
            if m < 2:
                raise GroupError(f"group factor must be >= 2, got {m}")
            factors.extend(p**e for p, e in factorize(m).items())
        return cls(tuple(factors))

    def __str__(self) -> str:
        return ",".join(str(q) for q in self.factors)

    def __repr__(self) -> str:
        if not self.factors:
            return "GroupSpec(trivial)"
        return "GroupSpec(" + " x ".join(f"Z{q}" for q in self.factors) + ")"

    # structure -----------------------------------------------------------

    @cached_property
    def even_positions(self) -> tuple[int, ...]:
        return tuple(i for i, q in enumerate(self.factors) if q % 2 == 0)

    @property
    def two_rank(self) -> int:
        """Number of even factors; there are 2**two_rank - 1 involutions."""
        return len(self.even_positions)

    @property
    def is_elementary_2(self) -> bool:
        return bool(self.factors) and all(q == 2 for q in self.factors)

    @property
    def zero(self) -> GroupElement:
        return (0,) * len(self.factors)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(q) for q in self.factors)))

    def element(self, residues: Iterable[int]) -> GroupElement:
        a = tuple(int(x) for x in residues)
        self.check(a)
        return a

    def check(self, a: Sequence[int]) -> None:
        if len(a) != len(self.factors):
            raise GroupError(
                f"element {tuple(a)} has {len(a)} residues, group {self} has {len(self.factors)} factors"
            )
        for x, q in zip(a, self.factors):
            if not 0 <= x < q:
                raise GroupError(f"residue {x} out of range for Z{q}")

    # arithmetic ----------------------------------------------------------

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if len(a) != len(self.factors) or len(b) != len(self.factors):
            raise GroupError("element/group dimension mismatch")
        return tuple((x + y) % q for x, y, q in zip(a, b, self.factors))

    def neg(self, a: GroupElement) -> GroupElement:
        if len(a) != len(self.factors):
            raise GroupError("element/group dimension mismatch")
        return tuple((-x) % q for x, q in zip(a, self.factors))

    def scale(self, m: int, a: GroupElement) -> GroupElement:
        if len(a) != len(self.factors):
            raise GroupError("element/group dimension mismatch")
        return tuple((m * x) % q for x, q in zip(a, self.factors))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, self.neg(b))

    def total(self, items: Iterable[GroupElement]) -> GroupElement:
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def is_involution(self, a: GroupElement) -> bool:
        return a != self.zero and self.scale(2, a) == self.zero

    # involution bit embedding -------------------------------------------

    def involution_from_bits(self, bits: int) -> GroupElement:
        """Map a two_rank-bit integer to an element of order <= 2.

        Bit (two_rank - 1 - j) of ``bits`` (most significant first) selects
        the half-residue on the j-th even factor.  0 maps to the identity.
        """
        k = self.two_rank
        if not 0 <= bits < (1 << k):
            raise GroupError(f"bit index {bits} out of range for two-rank {k}")
        res = [0] * len(self.factors)
        for j, pos in enumerate(self.even_positions):
            if bits >> (k - 1 - j) & 1:
                res[pos] = self.factors[pos] // 2
        return tuple(res)

    def involution_bits(self, a: GroupElement) -> int:
        if self.scale(2, a) != self.zero:
            raise GroupError(f"{a} is not of order dividing 2")
        bits = 0
        for pos in self.even_positions:
            bits = (bits << 1) | (1 if a[pos] else 0)
        return bits


def add(spec: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    return spec.add(a, b)


def neg(spec: GroupSpec, a: GroupElement) -> GroupElement:
    return spec.neg(a)


def scale(spec: GroupSpec, m: int, a: GroupElement) -> GroupElement:
    return spec.scale(m, a)


def _partitions(n: int, largest: int | None = None):
    """Integer partitions of n, parts non-increasing, largest-first order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_abelian_groups(order: int) -> list[GroupSpec]:
    """One GroupSpec per isomorphism class of Abelian groups of ``order``.

    Cyclic first: for each prime the exponent partitions run from the single
    part down to all ones, primes combined in ascending order.
    """
    if order < 1:
        raise GroupError("order must be positive")
    per_prime = []
    for p, e in sorted(factorize(order).items()):
        per_prime.append([tuple(p**part for part in lam) for lam in _partitions(e)])
    return [GroupSpec(tuple(itertools.chain.from_iterable(combo)))
            for combo in itertools.product(*per_prime)]


def involutions(spec: GroupSpec) -> list[GroupElement]:
    """All elements of order exactly 2, in lexicographic order."""
    k = spec.two_rank
    return sorted(spec.involution_from_bits(b) for b in range(1, 1 << k))


def zero_sum_involution_subset(spec: GroupSpec, r: int) -> list[GroupElement]:
    """An r-subset of {0} + involutions(spec) summing to zero.

    Works on the involutions as k-bit vectors in increasing order
    i_1 < i_2 < ... (i_q is the binary expansion of q).  Sizes above
    2**(k-1) are served by complementing a solution for 2**k - r, since
    the full set sums to zero.

    Raises NoSuchSubset for r in {2, 2**k - 2}; UnsupportedGroup when the
    group has fewer than two even factors.
    """
    k = spec.two_rank
    if k < 2:
        raise UnsupportedGroup(f"zero-sum involution subsets need two-rank >= 2, {spec!r} has {k}")
    full = 1 << k
    half = full >> 1
    if not 0 <= r <= full:
        raise GroupError(f"r={r} outside [0, {full}]")
    if r in (2, full - 2):
        raise NoSuchSubset(f"no {r} distinct elements of order <= 2 sum to zero in {spec!r}")

    rr = r if r <= half else full - r
    if rr == 0:
        chosen: set[int] = set()
    elif rr == 1:
        chosen = {0}
    else:
        base = list(range(1, rr))  # i_1 .. i_{rr-1}
        star = 0
        for b in base:
            star ^= b
        if star == 0:
            chosen = set(base) | {0}
        elif star not in base:
            chosen = set(base) | {star}
        else:
            # star < half, so flipping the top bit yields two fresh elements
            p = next(b for b in base if b != star)
            chosen = (set(base) - {p}) | {p ^ half, star ^ half}
    if r > half:
        chosen = set(range(full)) - chosen
    return sorted(spec.involution_from_bits(b) for b in chosen)


def disjoint_inverse_pairs(spec: GroupSpec, m: int) -> list[tuple[GroupElement, GroupElement]]:
    """First m pairs (a, -a) of nonzero non-involutions, lexicographic in a."""
    capacity = (spec.order - (1 << spec.two_rank)) // 2
    if m < 0 or m > capacity:
        raise GroupError(f"{m} inverse pairs requested, {spec!r} has {capacity}")
    pairs = []
    used: set[GroupElement] = set()
    for a in spec.elements:
        if len(pairs) == m:
            break
        if a == spec.zero or a in used:
            continue
        b = spec.neg(a)
        if b == a:
            continue
        used.update((a, b))
        pairs.append((a, b))
    return pairs


def non_involution(spec: GroupSpec) -> GroupElement | None:
    """Lexicographically first a with 2a != 0, or None for elementary 2-groups."""
    for a in spec.elements:
        if spec.scale(2, a) != spec.zero:
            return a
    return None
