"""Finite abelian groups as direct products of cyclic groups.

A group spec lists the orders of its cyclic factors; an element is a tuple
of residues, one per factor. Elements iterate in mixed-radix lexicographic
order over the residues, so the identity is always element 0 and positional
indexing into the group is well defined. Isomorphism questions go through
the primary decomposition (prime-power factors sorted by prime, then
exponent), which is a complete invariant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

__all__ = [
    "GroupElement",
    "GroupError",
    "GroupSpec",
    "CyclicFactorSplit",
    "parse_group_spec",
    "involutions",
    "sum_of_elements",
    "enumerate_abelian_groups",
    "find_cyclic_factor",
    "find_cyclic_two_factor",
    "two_power_exponents",
    "trivial_group",
    "cyclic_group",
]

GroupElement = tuple[int, ...]


class GroupError(ValueError):
    """Malformed group spec, foreign element, or impossible decomposition."""


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _crt(residues, moduli) -> int:
    """Combine residues modulo pairwise coprime moduli."""
    x, m = 0, 1
    for r, mod in zip(residues, moduli):
        t = ((r - x) * pow(m, -1, mod)) % mod
        x += m * t
        m *= mod
    return x


@dataclass(frozen=True)
class GroupSpec:
    """Additive abelian group Z_f1 x ... x Z_fr; the empty product is trivial."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(f) for f in self.factors)
        for f in factors:
            if f < 2:
                raise GroupError(f"cyclic factor must be >= 2, got {f}")
        object.__setattr__(self, "factors", factors)

    # structure ------------------------------------------------------------

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def arity(self) -> int:
        return len(self.factors)

    def canonical_factors(self) -> tuple[int, ...]:
        """Prime-power factors sorted by (prime, exponent); two specs are
        isomorphic exactly when these tuples agree."""
        return tuple(p ** e for _, p, e in _slots(self))

    def is_isomorphic_to(self, other: "GroupSpec") -> bool:
        return self.canonical_factors() == other.canonical_factors()

    def __str__(self) -> str:
        if not self.factors:
            return "trivial"
        return "x".join(f"Z{f}" for f in self.factors)

    # elements -------------------------------------------------------------

    def element(self, coords) -> GroupElement:
        """Coerce a coordinate sequence to a reduced element of this group."""
        g = tuple(int(c) for c in coords)
        if len(g) != len(self.factors):
            raise GroupError(
                f"element arity {len(g)} does not match group {self} "
                f"(arity {self.arity})")
        return tuple(c % f for c, f in zip(g, self.factors))

    def zero(self) -> GroupElement:
        return (0,) * len(self.factors)

    def _check_arity(self, g: GroupElement) -> None:
        if len(g) != len(self.factors):
            raise GroupError(f"element arity {len(g)} does not match group {self}")

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check_arity(g)
        self._check_arity(h)
        return tuple((a + b) % f for a, b, f in zip(g, h, self.factors))

    def neg(self, g: GroupElement) -> GroupElement:
        self._check_arity(g)
        return tuple((-a) % f for a, f in zip(g, self.factors))

    def sub(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.add(g, self.neg(h))

    def scalar_mul(self, c: int, g: GroupElement) -> GroupElement:
        # per-coordinate modular multiplication, not repeated addition
        self._check_arity(g)
        return tuple((c * a) % f for a, f in zip(g, self.factors))

    def elements(self) -> Iterator[GroupElement]:
        """All elements in mixed-radix lexicographic order (identity first)."""
        return itertools.product(*(range(f) for f in self.factors))

    def element_at(self, index: int) -> GroupElement:
        if not 0 <= index < self.order:
            raise GroupError(f"element index {index} out of range for {self}")
        coords = []
        for f in reversed(self.factors):
            coords.append(index % f)
            index //= f
        return tuple(reversed(coords))

    def index_of(self, g: GroupElement) -> int:
        g = self.element(g)
        index = 0
        for c, f in zip(g, self.factors):
            index = index * f + c
        return index

    # text forms -----------------------------------------------------------

    def format_element(self, g: GroupElement) -> str:
        self._check_arity(g)
        return "(" + ",".join(str(c) for c in g) + ")"

    def parse_element(self, text: str) -> GroupElement:
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise GroupError(f"element must look like (r1,...,rk), got {text!r}")
        inner = t[1:-1].strip()
        if not inner:
            coords = ()
        else:
            try:
                coords = tuple(int(p) for p in inner.split(","))
            except ValueError:
                raise GroupError(f"bad element coordinates in {text!r}") from None
        return self.element(coords)


def trivial_group() -> GroupSpec:
    return GroupSpec(())


def cyclic_group(n: int) -> GroupSpec:
    """Z_n, with n = 1 giving the trivial group."""
    if n < 1:
        raise GroupError(f"cyclic group order must be >= 1, got {n}")
    return GroupSpec(()) if n == 1 else GroupSpec((n,))


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the grammar Z<int>("x"Z<int>)*, or the word "trivial"."""
    t = text.strip()
    if t == "trivial":
        return GroupSpec(())
    if not t:
        raise GroupError("empty group spec")
    factors = []
    for part in t.split("x"):
        part = part.strip()
        if len(part) < 2 or part[0] != "Z" or not part[1:].isdigit():
            raise GroupError(
                f"bad group spec {text!r}: expected Z<int>(xZ<int>)* or 'trivial'")
        f = int(part[1:])
        if f < 2:
            raise GroupError(f"bad group spec {text!r}: factor {f} < 2")
        factors.append(f)
    return GroupSpec(tuple(factors))


def involutions(spec: GroupSpec) -> set[GroupElement]:
    """All non-identity g with g = -g; there are 2^t - 1 of them, where t is
    the number of even factors."""
    per_coord = [(0, f // 2) if f % 2 == 0 else (0,) for f in spec.factors]
    out = set()
    for coords in itertools.product(*per_coord):
        if any(coords):
            out.add(coords)
    return out


def sum_of_elements(spec: GroupSpec) -> GroupElement:
    """Sum of all group elements: the involution if it is unique, else zero."""
    invs = involutions(spec)
    if len(invs) == 1:
        return next(iter(invs))
    return spec.zero()


def _partitions_desc(n: int):
    """Integer partitions of n, parts descending, in descending lex order."""
    def rec(m, cap):
        if m == 0:
            yield ()
            return
        for p in range(min(m, cap), 0, -1):
            for rest in rec(m - p, p):
                yield (p,) + rest
    yield from rec(n, n)


def enumerate_abelian_groups(n: int) -> list[GroupSpec]:
    """One spec per isomorphism class of abelian groups of order n.

    The class count is the product, over primes p with p^a || n, of the
    number of partitions of a.
    """
    if n < 1:
        raise GroupError(f"order must be >= 1, got {n}")
    if n == 1:
        return [GroupSpec(())]
    per_prime = []
    for p, e in _factorize(n):
        per_prime.append([tuple(p ** part for part in lam)
                          for lam in _partitions_desc(e)])
    specs = []
    for combo in itertools.product(*per_prime):
        factors = tuple(itertools.chain.from_iterable(combo))
        specs.append(GroupSpec(factors))
    return specs


def _slots(spec: GroupSpec) -> list[tuple[int, int, int]]:
    """Prime-power slots of the primary decomposition in canonical order.

    Each slot (user_index, prime, exponent) carries the residue of user
    coordinate `user_index` modulo prime**exponent.
    """
    slots = []
    for idx, f in enumerate(spec.factors):
        for p, e in _factorize(f):
            slots.append((idx, p, e))
    slots.sort(key=lambda s: (s[1], s[2], s[0]))
    return slots


@dataclass(frozen=True)
class CyclicFactorSplit:
    """Witness of an isomorphism group ~ Z_d x complement.

    `to_pair` maps a group element to its (z, a) image; `from_pair` inverts.
    Both directions are additive, so labelings may be built in split
    coordinates and shipped in the user's coordinates.
    """

    group: GroupSpec
    d: int
    complement: GroupSpec
    selected: tuple[tuple[int, int, int], ...]
    rest: tuple[tuple[int, int, int], ...]

    def to_pair(self, g: GroupElement) -> tuple[int, GroupElement]:
        g = self.group.element(g)
        residues = [g[idx] % (p ** e) for idx, p, e in self.selected]
        moduli = [p ** e for _, p, e in self.selected]
        z = _crt(residues, moduli)
        a = tuple(g[idx] % (p ** e) for idx, p, e in self.rest)
        return z, a

    def from_pair(self, z: int, a: GroupElement) -> GroupElement:
        a = self.complement.element(a)
        per_factor: dict[int, list[tuple[int, int]]] = {}
        for idx, p, e in self.selected:
            q = p ** e
            per_factor.setdefault(idx, []).append((z % q, q))
        for (idx, p, e), r in zip(self.rest, a):
            q = p ** e
            per_factor.setdefault(idx, []).append((r % q, q))
        coords = []
        for idx, f in enumerate(self.group.factors):
            pairs = per_factor[idx]
            coords.append(_crt([r for r, _ in pairs], [m for _, m in pairs]) % f)
        return tuple(coords)


def find_cyclic_factor(spec: GroupSpec, d: int) -> Optional[CyclicFactorSplit]:
    """Split off a cyclic direct factor of order d, if one exists.

    Succeeds exactly when the primary decomposition of the group contains
    every prime-power factor of d (with multiplicity); the complement is
    what remains.
    """
    if d < 2:
        raise GroupError(f"cyclic factor order must be >= 2, got {d}")
    if spec.order % d:
        return None
    slots = _slots(spec)
    used: set[int] = set()
    chosen = []
    for p, e in _factorize(d):
        for si, (idx, sp, se) in enumerate(slots):
            if si not in used and sp == p and se == e:
                used.add(si)
                chosen.append((idx, sp, se))
                break
        else:
            return None
    rest = tuple(s for si, s in enumerate(slots) if si not in used)
    complement = GroupSpec(tuple(p ** e for _, p, e in rest))
    return CyclicFactorSplit(spec, d, complement, tuple(chosen), rest)


def find_cyclic_two_factor(spec: GroupSpec, s: int) -> Optional[CyclicFactorSplit]:
    """Split off a cyclic factor of order exactly 2**s (cyclic 2-groups are
    indecomposable, so this is an isomorphism-invariant test)."""
    if s < 1:
        raise GroupError(f"s must be >= 1, got {s}")
    return find_cyclic_factor(spec, 1 << s)


def two_power_exponents(spec: GroupSpec) -> list[int]:
    """Ascending exponents e such that Z_{2^e} is a direct factor."""
    return sorted({e for _, p, e in _slots(spec) if p == 2})
