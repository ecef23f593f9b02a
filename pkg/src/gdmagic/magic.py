"""Group labelings of graphs: weights, verification, the integer bridge,
structural obstructions, and certificate serialization.

A labeling assigns every vertex a distinct group element; it is magic when
every vertex's neighbor-label sum lands on one common element, the magic
constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .abelian import GroupElement, GroupSpec, cyclic_group, parse_group_spec
from .graphs import Graph, construct_graph, metrics

__all__ = [
    "LabelingError",
    "CertificateError",
    "Labeling",
    "Obstruction",
    "Certificate",
    "TWO_UNIVERSAL",
    "SHARED_NEIGHBORHOOD",
    "TREE_SHAPE",
    "FORCED_IDENTITY",
    "weight",
    "verify",
    "weight_mismatch",
    "negate_labeling",
    "to_zn_labeling",
    "obstruction_two_universal",
    "obstruction_shared_neighborhood",
    "tree_group_magic",
    "kmn_group_magic",
    "detect_biregular_universal",
    "all_obstructions",
    "format_certificate",
    "parse_certificate",
    "load_certificate",
    "save_certificate",
    "verify_certificate",
]


class LabelingError(ValueError):
    """Assignment is not a bijection, sizes disagree, or inputs are invalid."""


class CertificateError(LabelingError):
    """Malformed certificate text."""


@dataclass(frozen=True)
class Labeling:
    """A bijection from vertex ids to group elements.

    ``assignment[v]`` is the label of vertex v; ``magic_constant`` is the
    claimed common weight, when known.
    """

    group: GroupSpec
    assignment: tuple[GroupElement, ...]
    magic_constant: Optional[GroupElement] = None

    def __post_init__(self):
        elems = tuple(self.group.element(g) for g in self.assignment)
        object.__setattr__(self, "assignment", elems)
        if len(elems) != self.group.order:
            raise LabelingError(
                f"{len(elems)} labels for a group of order {self.group.order}")
        if len(set(elems)) != len(elems):
            raise LabelingError("assignment is not injective")
        if self.magic_constant is not None:
            object.__setattr__(self, "magic_constant",
                               self.group.element(self.magic_constant))


def _check_sizes(g: Graph, labeling: Labeling) -> None:
    if g.n != len(labeling.assignment):
        raise LabelingError(
            f"graph has {g.n} vertices but labeling covers "
            f"{len(labeling.assignment)}")


def weight(g: Graph, labeling: Labeling, v: int) -> GroupElement:
    """Group sum of the labels on v's neighbors (zero for isolated v)."""
    _check_sizes(g, labeling)
    grp = labeling.group
    total = grp.zero()
    for u in sorted(g.adj[v]):
        total = grp.add(total, labeling.assignment[u])
    return total


def weight_mismatch(g: Graph, labeling: Labeling) -> Optional[tuple[int, int]]:
    """First vertex pair with differing weights, or None when all agree.

    Vertex 0's weight is the reference; the offender is the smallest id
    whose weight differs.
    """
    _check_sizes(g, labeling)
    if g.n == 0:
        return None
    w0 = weight(g, labeling, 0)
    for v in range(1, g.n):
        if weight(g, labeling, v) != w0:
            return (0, v)
    return None


def verify(g: Graph, labeling: Labeling) -> Optional[GroupElement]:
    """The magic constant when all vertex weights agree, else None.

    Edgeless graphs verify with the identity (all weights are empty sums).
    """
    if weight_mismatch(g, labeling) is not None:
        return None
    if g.n == 0:
        return labeling.group.zero()
    return weight(g, labeling, 0)


def negate_labeling(g: Graph, labeling: Labeling) -> Labeling:
    """Negate every label; the magic constant is negated too.

    Requires a group with at least one non-involution non-identity element,
    otherwise negation is the identity map and produces nothing new.
    """
    mu = verify(g, labeling)
    if mu is None:
        raise LabelingError("labeling is not magic; nothing to negate")
    grp = labeling.group
    if all(f == 2 for f in grp.canonical_factors()):
        raise LabelingError(
            f"every non-identity element of {grp} is an involution; "
            "negation is the identity map")
    negated = tuple(grp.neg(x) for x in labeling.assignment)
    return Labeling(grp, negated, grp.neg(mu))


def to_zn_labeling(g: Graph, int_labels: Sequence[int], mu: int) -> Labeling:
    """Convert an integer distance magic labeling (labels 1..n, constant mu)
    into a Z_n labeling by sending n to 0; the constant becomes mu mod n."""
    n = g.n
    labels = [int(x) for x in int_labels]
    if sorted(labels) != list(range(1, n + 1)):
        raise LabelingError("integer labels must be a bijection onto 1..n")
    for v in range(n):
        wv = sum(labels[u] for u in g.adj[v])
        if wv != mu:
            raise LabelingError(
                f"not distance magic: vertex {v} has weight {wv}, expected {mu}")
    grp = cyclic_group(n)
    if n == 1:
        assignment: tuple[GroupElement, ...] = ((),)
        return Labeling(grp, assignment, ())
    assignment = tuple((x % n,) for x in labels)
    return Labeling(grp, assignment, (mu % n,))


# obstructions ----------------------------------------------------------------

TWO_UNIVERSAL = "two-universal"
SHARED_NEIGHBORHOOD = "shared-neighborhood"
TREE_SHAPE = "tree-shape"
FORCED_IDENTITY = "forced-identity"


@dataclass(frozen=True)
class Obstruction:
    """A structural finding about a graph's magic labelings.

    ``two-universal``, ``shared-neighborhood`` and ``tree-shape`` rule out a
    magic labeling over every group of matching order; ``forced-identity``
    only pins the label of one vertex to the identity.
    """

    kind: str
    witness: tuple[int, ...]
    detail: str


def obstruction_two_universal(g: Graph) -> Optional[Obstruction]:
    """Two distinct vertices adjacent to everything else rule out magicness:
    both would need weight s - label, forcing equal labels."""
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1 and g.n > 1]
    if len(universal) >= 2:
        u, v = universal[0], universal[1]
        return Obstruction(TWO_UNIVERSAL, (u, v),
                           f"vertices {u} and {v} are both adjacent to every "
                           "other vertex")
    return None


def obstruction_shared_neighborhood(g: Graph) -> Optional[Obstruction]:
    """A pair u, v with |N(u) & N(v)| = deg(u)-1 = deg(v)-1 rules out
    magicness; the first witness in lexicographic pair order is returned."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            du, dv = g.degree(u), g.degree(v)
            if du == dv and len(g.adj[u] & g.adj[v]) == du - 1:
                return Obstruction(
                    SHARED_NEIGHBORHOOD, (u, v),
                    f"deg({u}) = deg({v}) = {du} and the neighborhoods share "
                    f"{du - 1} vertices")
    return None


def tree_group_magic(t: Graph) -> bool:
    """Whether a non-trivial tree admits a magic labeling over any (hence
    every) abelian group of matching order: exactly the stars K_{1,m} with
    m mod 4 != 1."""
    m = metrics(t)
    if not m.is_tree:
        raise LabelingError("graph is not a tree")
    if t.n < 2:
        raise LabelingError("tree must have at least two vertices")
    is_star = any(t.degree(v) == t.n - 1
                  and all(t.degree(u) == 1 for u in range(t.n) if u != v)
                  for v in range(t.n))
    return is_star and (t.n - 1) % 4 != 1


def kmn_group_magic(m: int, n: int) -> bool:
    """Whether K_{m,n} is magic over every abelian group of order m + n."""
    if m < 1 or n < 1:
        raise LabelingError(f"part sizes must be >= 1, got ({m},{n})")
    return (m + n) % 4 != 2


def _matching_join_pairs(g: Graph, hub: int) -> Optional[list[tuple[int, int]]]:
    """Twin pairs of a complete-minus-matching joined to a universal hub.

    Every non-hub vertex must be adjacent to the hub and miss exactly one
    other non-hub vertex; those misses must pair up.
    """
    others = [v for v in range(g.n) if v != hub]
    partner = {}
    for u in others:
        if hub not in g.adj[u]:
            return None
        non = [w for w in others if w != u and w not in g.adj[u]]
        if len(non) != 1:
            return None
        partner[u] = non[0]
    pairs = []
    for u in others:
        if partner[partner[u]] != u:
            return None
        if u < partner[u]:
            pairs.append((u, partner[u]))
    return pairs


def detect_biregular_universal(g: Graph) -> Optional[tuple[int, int]]:
    """Detect an odd-order graph with one universal vertex and all other
    degrees equal to some r2 in {1, 2, 3, n-3}, or r2 = n-2 when the rest is
    a complete graph minus a perfect matching.

    In such graphs every magic labeling assigns the identity to the
    universal vertex. Only odd n > 3 qualifies (for even order the forced
    label can genuinely differ from the identity).
    """
    n = g.n
    if n <= 3 or n % 2 == 0:
        return None
    universal = [v for v in range(n) if g.degree(v) == n - 1]
    if len(universal) != 1:
        return None
    v = universal[0]
    rest = {g.degree(u) for u in range(n) if u != v}
    if len(rest) != 1:
        return None
    r2 = rest.pop()
    if r2 == n - 2:
        return (v, r2) if _matching_join_pairs(g, v) is not None else None
    if r2 in (1, 2, 3, n - 3):
        return (v, r2)
    return None


def all_obstructions(g: Graph) -> list[Obstruction]:
    """Run every structural check and collect the findings."""
    out = []
    for check in (obstruction_two_universal, obstruction_shared_neighborhood):
        found = check(g)
        if found:
            out.append(found)
    m = metrics(g)
    if m.is_tree and g.n >= 2 and not tree_group_magic(g):
        out.append(Obstruction(
            TREE_SHAPE, (),
            "tree is not a star K(1,m) with m mod 4 != 1"))
    det = detect_biregular_universal(g)
    if det is not None:
        v, r2 = det
        out.append(Obstruction(
            FORCED_IDENTITY, (v,),
            f"any magic labeling must assign the identity to vertex {v} "
            f"(degrees {g.n - 1} and {r2})"))
    return out


# certificates ----------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Self-contained record of a labeling: graph expression, group, claimed
    magic constant, per-vertex labels, and an optional construction tag."""

    graph_expr: str
    group: GroupSpec
    mu: GroupElement
    labels: tuple[GroupElement, ...]
    theorem: Optional[str] = None


def format_certificate(cert: Certificate) -> str:
    grp = cert.group
    lines = []
    if cert.theorem:
        lines.append(f"# theorem: {cert.theorem}")
    lines.append(f"graph: {cert.graph_expr}")
    lines.append(f"group: {grp}")
    lines.append(f"mu: {grp.format_element(cert.mu)}")
    for v, g in enumerate(cert.labels):
        lines.append(f"v {v} {grp.format_element(g)}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    theorem = None
    fields: dict[str, str] = {}
    raw_labels: dict[int, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*theorem:\s*(\S+)", line)
            if m:
                theorem = m.group(1)
            continue
        if line.startswith("v "):
            parts = line.split(None, 2)
            if len(parts) != 3 or not parts[1].isdigit():
                raise CertificateError(f"bad vertex line {line!r}")
            idx = int(parts[1])
            if idx in raw_labels:
                raise CertificateError(f"duplicate vertex {idx}")
            raw_labels[idx] = parts[2]
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise CertificateError(f"bad certificate line {line!r}")
        fields[key.strip()] = value.strip()
    for required in ("graph", "group", "mu"):
        if required not in fields:
            raise CertificateError(f"certificate missing {required!r} line")
    group = parse_group_spec(fields["group"])
    mu = group.parse_element(fields["mu"])
    n = group.order
    if sorted(raw_labels) != list(range(n)):
        raise CertificateError(
            f"certificate must label vertices 0..{n - 1} exactly once")
    labels = tuple(group.parse_element(raw_labels[v]) for v in range(n))
    return Certificate(fields["graph"], group, mu, labels, theorem)


def load_certificate(filename: str) -> Certificate:
    with open(filename, "r", encoding="utf-8") as fh:
        return parse_certificate(fh.read())


def save_certificate(cert: Certificate, filename: str) -> None:
    with open(filename, "w", encoding="utf-8") as fh:
        fh.write(format_certificate(cert))


def verify_certificate(cert: Certificate) -> tuple[bool, str, Optional[GroupElement]]:
    """Recompute the certificate from scratch: parse the graph expression,
    rebuild the labeling, and check every weight against the claimed mu.

    Returns (ok, detail, actual_mu).
    """
    try:
        g = construct_graph(cert.graph_expr)
    except ValueError as exc:
        return False, f"bad graph expression: {exc}", None
    if g.n != cert.group.order:
        return False, (f"graph has {g.n} vertices but group {cert.group} "
                       f"has order {cert.group.order}"), None
    try:
        labeling = Labeling(cert.group, cert.labels)
    except LabelingError as exc:
        return False, str(exc), None
    mismatch = weight_mismatch(g, labeling)
    if mismatch is not None:
        a, b = mismatch
        wa = cert.group.format_element(weight(g, labeling, a))
        wb = cert.group.format_element(weight(g, labeling, b))
        return False, (f"weights differ: vertex {a} has {wa}, "
                       f"vertex {b} has {wb}"), None
    mu = verify(g, labeling)
    assert mu is not None
    if mu != cert.mu:
        return False, (f"magic constant is {cert.group.format_element(mu)} but "
                       f"certificate claims {cert.group.format_element(cert.mu)}"),\
               mu
    return True, "ok", mu
