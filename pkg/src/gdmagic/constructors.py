"""Constructive labelers for product graphs and small named families.

Every labeler assembles an explicit bijection onto the target group in split
coordinates (z, a) over Z_d x A, maps it back to the caller's group, and
re-checks the result with the verifier before reporting. The reported
``predicted_mu`` is the constant the construction is designed to achieve; a
verification mismatch raises instead of being patched over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .abelian import (
    CyclicFactorSplit,
    GroupElement,
    GroupSpec,
    find_cyclic_factor,
    sum_of_elements,
    two_power_exponents,
)
from .graphs import (
    Graph,
    TwinPairing,
    complete,
    complete_bipartite,
    complete_bipartite_parts,
    complete_minus_matching,
    cycle,
    find_twin_pairing,
    graph_power,
    join,
    star,
    validate_twin_pairing,
)
from .magic import Labeling, verify
from .products import direct_product, lex_product

__all__ = [
    "ConstructionError",
    "ConstructionReport",
    "label_matching_join",
    "label_matching_join_graph",
    "label_star",
    "label_star_graph",
    "label_lex_c4k2",
    "label_dir_c4k2",
    "label_lex_balanced_pow2",
    "label_dir_balanced_pow2",
    "label_lex_even_degrees",
    "label_lex_kmn_mixed",
    "auto_label",
]


class ConstructionError(ValueError):
    """A labeler's precondition failed; the message names the condition."""

    def __init__(self, message: str, diagnostics: Optional[list[str]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else [message]


@dataclass
class ConstructionReport:
    """A labeled product graph plus the constant the labeler promised."""

    graph: Graph
    labeling: Labeling
    theorem: str
    predicted_mu: GroupElement
    parameters: dict = field(default_factory=dict)


def _verified(graph: Graph, assignment, group: GroupSpec,
              predicted: GroupElement, theorem: str,
              parameters: dict) -> ConstructionReport:
    labeling = Labeling(group, tuple(assignment), predicted)
    mu = verify(graph, labeling)
    if mu != predicted:
        got = group.format_element(mu) if mu is not None else "no constant"
        raise ConstructionError(
            f"{theorem}: construction produced {got} instead of "
            f"{group.format_element(predicted)}; please report this input")
    return ConstructionReport(graph, labeling, theorem, predicted, parameters)


def _check_order(group: GroupSpec, expected: int) -> None:
    if group.order != expected:
        raise ConstructionError(
            f"group {group} has order {group.order}, expected {expected}")


def _split_or_error(group: GroupSpec, d: int) -> CyclicFactorSplit:
    split = find_cyclic_factor(group, d)
    if split is None:
        raise ConstructionError(
            f"group {group} has no Z{d} direct factor (primary decomposition "
            + "x".join(f"Z{q}" for q in group.canonical_factors()) + ")")
    return split


# ---------------------------------------------------------------------------
# universal vertex over a complete-minus-matching core

def label_matching_join_graph(g: Graph, group: GroupSpec) -> ConstructionReport:
    """Label a graph shaped like a universal vertex joined onto a complete
    graph minus a perfect matching: the hub gets the identity and every twin
    pair gets an inverse pair (x, -x); all weights collapse to the identity.
    """
    from .magic import _matching_join_pairs

    n = g.n
    if n < 3 or n % 2 == 0:
        raise ConstructionError(f"vertex count must be odd and >= 3, got {n}")
    universal = [v for v in range(n) if g.degree(v) == n - 1]
    if len(universal) != 1:
        raise ConstructionError("graph needs exactly one universal vertex")
    hub = universal[0]
    pairs = _matching_join_pairs(g, hub)
    if pairs is None:
        raise ConstructionError(
            "non-hub vertices must form a complete graph minus a perfect "
            "matching")
    _check_order(group, n)
    assignment: list[Optional[GroupElement]] = [None] * n
    assignment[hub] = group.zero()
    taken = {group.zero()}
    slot = 0
    for elem in group.elements():
        if elem in taken:
            continue
        negated = group.neg(elem)
        taken.add(elem)
        taken.add(negated)
        a, b = pairs[slot]
        slot += 1
        assignment[a] = elem
        assignment[b] = negated
    return _verified(g, assignment, group, group.zero(), "matching-join",
                     {"n": n})


def label_matching_join(n: int, group: GroupSpec) -> ConstructionReport:
    """Canonical form of the construction above on join(KmM(n-1), K(1))."""
    if n < 3 or n % 2 == 0:
        raise ConstructionError(f"n must be an odd integer >= 3, got {n}")
    g = join(complete_minus_matching(n - 1), complete(1))
    return label_matching_join_graph(g, group)


# ---------------------------------------------------------------------------
# stars

def label_star_graph(g: Graph, group: GroupSpec) -> Optional[ConstructionReport]:
    """Label a star: scan for a center label x with 2x equal to the sum of
    all group elements; leaves take the rest in canonical order. Returns
    None when no such x exists (leaf count 1 mod 4)."""
    n = g.n
    center = next(
        (v for v in range(n)
         if n >= 2 and g.degree(v) == n - 1
         and all(g.degree(u) == 1 for u in range(n) if u != v)),
        None)
    if center is None:
        raise ConstructionError("graph is not a star")
    _check_order(group, n)
    target = sum_of_elements(group)
    x = next((e for e in group.elements() if group.add(e, e) == target), None)
    if x is None:
        return None
    rest = iter(e for e in group.elements() if e != x)
    assignment = [x if v == center else next(rest) for v in range(n)]
    return _verified(g, assignment, group, x, "star", {"n": n - 1})


def label_star(n: int, group: GroupSpec) -> Optional[ConstructionReport]:
    """Canonical star K_{1,n} with center 0."""
    if n < 1:
        raise ConstructionError(f"n must be >= 1, got {n}")
    return label_star_graph(star(n), group)


# ---------------------------------------------------------------------------
# products with a complete-minus-matching factor on 4k+2 vertices

def _c4k2_host(k: int, h: Optional[Graph],
               pairing: Optional[TwinPairing]) -> tuple[Graph, TwinPairing]:
    if k < 1:
        raise ConstructionError(f"k must be >= 1, got {k}")
    size = 4 * k + 2
    if h is None:
        h = graph_power(cycle(size), 2 * k)
    if h.n != size:
        raise ConstructionError(f"H must have {size} vertices, got {h.n}")
    if {h.n - 1 - d for d in h.degrees} != {1}:
        raise ConstructionError(
            "H must be a complete graph minus a perfect matching")
    if pairing is None:
        pairing = find_twin_pairing(h)
        assert pairing is not None
    validate_twin_pairing(h, pairing)
    return h, pairing


def _c4k2_assignment(g: Graph, h: Graph, pairing: TwinPairing,
                     split: CyclicFactorSplit, k: int) -> list[GroupElement]:
    group, comp = split.group, split.complement
    pair_sum = split.from_pair(4 * k + 1, comp.zero())
    hn = h.n
    assignment: list[GroupElement] = [group.zero()] * (g.n * hn)
    for i in range(g.n):
        a_i = comp.element_at(i)
        for t, (j, jp) in enumerate(pairing.pairs):
            primary = split.from_pair(t, a_i)
            assignment[i * hn + j] = primary
            assignment[i * hn + jp] = group.sub(pair_sum, primary)
    return assignment


def label_lex_c4k2(g: Graph, k: int, group: GroupSpec,
                   h: Optional[Graph] = None,
                   pairing: Optional[TwinPairing] = None) -> ConstructionReport:
    """Label G o H for H the (2k)-th power of a (4k+2)-cycle, i.e. the
    complete graph minus a matching on 4k+2 vertices.

    Needs all degrees of G even, or all odd; the magic constant comes out as
    (2k+2, 0) respectively (1, 0) in Z_{4k+2} x A coordinates.
    """
    h, pairing = _c4k2_host(k, h, pairing)
    parities = {d % 2 for d in g.degrees}
    if len(parities) != 1:
        raise ConstructionError(
            "degrees of G are neither all even nor all odd "
            f"(degrees {sorted(set(g.degrees))})")
    _check_order(group, (4 * k + 2) * g.n)
    split = _split_or_error(group, 4 * k + 2)
    assignment = _c4k2_assignment(g, h, pairing, split, k)
    z = (2 * k + 2) % (4 * k + 2) if parities == {0} else 1
    predicted = split.from_pair(z, split.complement.zero())
    return _verified(lex_product(g, h), assignment, group, predicted,
                     "c4k2-lex", {"k": k})


def label_dir_c4k2(g: Graph, k: int, group: GroupSpec,
                   h: Optional[Graph] = None,
                   pairing: Optional[TwinPairing] = None) -> ConstructionReport:
    """Label G x H for the same H; needs all degrees of G congruent to a
    common m mod 4k+2, and reaches the constant (-2mk, 0)."""
    h, pairing = _c4k2_host(k, h, pairing)
    mod = 4 * k + 2
    residues = {d % mod for d in g.degrees}
    if len(residues) != 1:
        raise ConstructionError(
            f"degrees of G are not all congruent mod {mod} "
            f"(residues {sorted(residues)})")
    m = residues.pop()
    _check_order(group, mod * g.n)
    split = _split_or_error(group, mod)
    assignment = _c4k2_assignment(g, h, pairing, split, k)
    predicted = split.from_pair((-2 * m * k) % mod, split.complement.zero())
    return _verified(direct_product(g, h), assignment, group, predicted,
                     "c4k2-dir", {"k": k, "m": m})


# ---------------------------------------------------------------------------
# products with a balanced factor on 2^k vertices

def _pow2_host(h: Graph,
               pairing: Optional[TwinPairing]) -> tuple[int, int, TwinPairing]:
    """Validate H: 2^k vertices with k >= 2, regular, twin-paired. Returns
    (k, r, pairing) where H is 2r-regular."""
    n = h.n
    k = n.bit_length() - 1
    if n < 4 or (1 << k) != n:
        raise ConstructionError(
            f"H must have 2^k vertices with k >= 2, got {n}")
    degs = set(h.degrees)
    if len(degs) != 1:
        raise ConstructionError("H must be regular")
    if pairing is None:
        pairing = find_twin_pairing(h)
        if pairing is None:
            raise ConstructionError(
                "H is not balanced: no twin pairing exists")
    validate_twin_pairing(h, pairing)
    deg = degs.pop()
    assert deg % 2 == 0  # neighborhoods are unions of twin pairs
    return k, deg // 2, pairing


def _common_residue(g: Graph, mod: int) -> int:
    residues = {d % mod for d in g.degrees}
    if len(residues) != 1:
        raise ConstructionError(
            f"degrees of G are not all congruent mod {mod} "
            f"(residues {sorted(residues)})")
    return residues.pop()


def _pow2_small_s_assignment(g: Graph, h: Graph, pairing: TwinPairing,
                             split: CyclicFactorSplit, k: int,
                             s: int) -> list[GroupElement]:
    # block i, pair t: primary label (t // 2^{k-s}, a_{(t mod 2^{k-s}) + 2^{k-s} i})
    group, comp = split.group, split.complement
    pair_sum = split.from_pair((1 << s) - 1, comp.zero())
    chunk = 1 << (k - s)
    hn = h.n
    assignment: list[GroupElement] = [group.zero()] * (g.n * hn)
    for i in range(g.n):
        for t, (j, jp) in enumerate(pairing.pairs):
            a = comp.element_at((t % chunk) + chunk * i)
            primary = split.from_pair(t // chunk, a)
            assignment[i * hn + j] = primary
            assignment[i * hn + jp] = group.sub(pair_sum, primary)
    return assignment


def _pow2_large_s_assignment(g: Graph, h: Graph, pairing: TwinPairing,
                             split: CyclicFactorSplit, k: int,
                             s: int) -> list[GroupElement]:
    # block i, pair t: primary label ((2^{k-1} i + t) mod 2^{s-1}, a_{i // 2^{s-k}})
    group, comp = split.group, split.complement
    pair_sum = split.from_pair((1 << s) - 1, comp.zero())
    halfmod = 1 << (s - 1)
    shift = 1 << (s - k)
    hn = h.n
    assignment: list[GroupElement] = [group.zero()] * (g.n * hn)
    for i in range(g.n):
        a = comp.element_at(i // shift)
        for t, (j, jp) in enumerate(pairing.pairs):
            primary = split.from_pair(((1 << (k - 1)) * i + t) % halfmod, a)
            assignment[i * hn + j] = primary
            assignment[i * hn + jp] = group.sub(pair_sum, primary)
    return assignment


def label_lex_balanced_pow2(g: Graph, h: Graph, group: GroupSpec, s: int,
                            pairing: Optional[TwinPairing] = None
                            ) -> ConstructionReport:
    """Label G o H for a balanced 2r-regular H on 2^k vertices, splitting the
    group as Z_{2^s} x A.

    For s <= k-1 there is no condition on G and the constant is (-r, 0); for
    s >= k all degrees of G must be congruent mod 2^{s-1} and the constant is
    (-r - 2^{k-1} m, 0).
    """
    k, r, pairing = _pow2_host(h, pairing)
    if s < 1:
        raise ConstructionError(f"s must be >= 1, got {s}")
    _check_order(group, (1 << k) * g.n)
    split = _split_or_error(group, 1 << s)
    if s <= k - 1:
        assignment = _pow2_small_s_assignment(g, h, pairing, split, k, s)
        predicted = split.from_pair((-r) % (1 << s), split.complement.zero())
        return _verified(lex_product(g, h), assignment, group, predicted,
                         "balanced-lex-small-s", {"k": k, "s": s, "r": r})
    m = _common_residue(g, 1 << (s - 1))
    if g.n % (1 << (s - k)):
        raise ConstructionError(
            f"vertex count {g.n} is not divisible by 2^{s - k}")
    assignment = _pow2_large_s_assignment(g, h, pairing, split, k, s)
    predicted = split.from_pair((-r - (1 << (k - 1)) * m) % (1 << s),
                                split.complement.zero())
    return _verified(lex_product(g, h), assignment, group, predicted,
                     "balanced-lex-large-s", {"k": k, "s": s, "r": r, "m": m})


def label_dir_balanced_pow2(g: Graph, h: Graph, group: GroupSpec, s: int,
                            pairing: Optional[TwinPairing] = None
                            ) -> ConstructionReport:
    """Label G x H for a balanced H on 2^k vertices; all degrees of G must be
    congruent to a common m mod 2^s and the constant is (-mr, 0)."""
    k, r, pairing = _pow2_host(h, pairing)
    if s < 1:
        raise ConstructionError(f"s must be >= 1, got {s}")
    _check_order(group, (1 << k) * g.n)
    split = _split_or_error(group, 1 << s)
    m = _common_residue(g, 1 << s)
    if s <= k - 1:
        assignment = _pow2_small_s_assignment(g, h, pairing, split, k, s)
        tag = "balanced-dir-small-s"
    else:
        if g.n % (1 << (s - k)):
            raise ConstructionError(
                f"vertex count {g.n} is not divisible by 2^{s - k}")
        assignment = _pow2_large_s_assignment(g, h, pairing, split, k, s)
        tag = "balanced-dir-large-s"
    predicted = split.from_pair((-m * r) % (1 << s), split.complement.zero())
    return _verified(direct_product(g, h), assignment, group, predicted,
                     tag, {"k": k, "s": s, "r": r, "m": m})


def label_lex_even_degrees(g: Graph, h: Graph, group: GroupSpec,
                           pairing: Optional[TwinPairing] = None
                           ) -> ConstructionReport:
    """Label G o H when every degree of G is even and positive, splitting off
    a full Z_{2^k} factor; pair t of block i takes (2t, a_i) and the constant
    is (-r, 0). For groups without an exact Z_{2^k} factor use the small-s
    labeler instead."""
    k, r, pairing = _pow2_host(h, pairing)
    if any(d % 2 or d == 0 for d in g.degrees):
        raise ConstructionError(
            "G has an odd-degree or isolated vertex; all degrees must be "
            "even and >= 2")
    _check_order(group, (1 << k) * g.n)
    split = find_cyclic_factor(group, 1 << k)
    if split is None:
        raise ConstructionError(
            f"group {group} has no Z{1 << k} direct factor; route to the "
            f"small-s labeler with s <= {k - 1}")
    comp = split.complement
    pair_sum = split.from_pair((1 << k) - 1, comp.zero())
    hn = h.n
    assignment: list[GroupElement] = [group.zero()] * (g.n * hn)
    for i in range(g.n):
        a_i = comp.element_at(i)
        for t, (j, jp) in enumerate(pairing.pairs):
            primary = split.from_pair((2 * t) % (1 << k), a_i)
            assignment[i * hn + j] = primary
            assignment[i * hn + jp] = group.sub(pair_sum, primary)
    predicted = split.from_pair((-r) % (1 << k), comp.zero())
    return _verified(lex_product(g, h), assignment, group, predicted,
                     "even-degrees-lex", {"k": k, "r": r})


def _inverse_pair_values(comp: GroupSpec) -> list[tuple[GroupElement, GroupElement]]:
    pairs = []
    taken = {comp.zero()}
    for a in comp.elements():
        if a in taken:
            continue
        na = comp.neg(a)
        taken.add(a)
        taken.add(na)
        pairs.append((a, na))
    return pairs


def _label_kmn_parts(g: Graph, xs: list[int], ys: list[int], h: Graph,
                     pairing: TwinPairing, group: GroupSpec, k: int,
                     r: int) -> ConstructionReport:
    """Core of the mixed-parity complete bipartite labeler.

    The even side's block values are chosen inverse-closed (pairs (a, -a))
    and the identity sits on the odd side; this is what makes the union of
    all block labelings a bijection. Both block sums land on (2^{k-1}, 0)
    and every weight on (-r, 0).
    """
    split = _split_or_error(group, 1 << k)
    comp = split.complement
    value_pairs = _inverse_pair_values(comp)
    need = len(xs) // 2
    x_vals = [v for pr in value_pairs[:need] for v in pr]
    y_vals = [comp.zero()] + [v for pr in value_pairs[need:] for v in pr]
    x_pair_sum = split.from_pair((1 << (k - 1)) - 1, comp.zero())
    y_pair_sum = split.from_pair((1 << k) - 1, comp.zero())
    hn = h.n
    assignment: list[GroupElement] = [group.zero()] * (g.n * hn)
    for a, i in zip(x_vals, xs):
        for q, (j, jp) in enumerate(pairing.pairs):
            primary = split.from_pair(((1 << (k - 1)) + 1) * q % (1 << k), a)
            assignment[i * hn + j] = primary
            assignment[i * hn + jp] = group.sub(x_pair_sum, primary)
    for a, i in zip(y_vals, ys):
        for q, (j, jp) in enumerate(pairing.pairs):
            primary = split.from_pair((2 * q) % (1 << k), a)
            assignment[i * hn + j] = primary
            assignment[i * hn + jp] = group.sub(y_pair_sum, primary)
    predicted = split.from_pair((-r) % (1 << k), comp.zero())
    return _verified(lex_product(g, h), assignment, group, predicted,
                     "kmn-mixed-lex",
                     {"k": k, "r": r, "m": len(xs), "n": len(ys),
                      "t": (r - 1) // 2})


def label_lex_kmn_mixed(m: int, n: int, h: Graph, group: GroupSpec,
                        pairing: Optional[TwinPairing] = None
                        ) -> ConstructionReport:
    """Label K_{m,n} o H with m even, n odd, and H a 2r-regular balanced
    graph on 2^k vertices with r odd.

    When the group has no exact Z_{2^k} factor the job is routed to the
    small-s labeler (which needs no degree condition on K_{m,n})."""
    if m < 2 or m % 2:
        raise ConstructionError(f"m must be even and >= 2, got {m}")
    if n < 1 or n % 2 == 0:
        raise ConstructionError(f"n must be odd and >= 1, got {n}")
    k, r, pairing = _pow2_host(h, pairing)
    if r % 2 == 0:
        raise ConstructionError(
            f"H must be 2r-regular with r odd, got r = {r}")
    _check_order(group, (1 << k) * (m + n))
    g = complete_bipartite(m, n)
    if find_cyclic_factor(group, 1 << k) is None:
        for s in range(k - 1, 0, -1):
            if find_cyclic_factor(group, 1 << s) is not None:
                return label_lex_balanced_pow2(g, h, group, s, pairing)
        raise ConstructionError(
            f"group {group} has no cyclic 2-power direct factor")
    return _label_kmn_parts(g, list(range(m)), list(range(m, m + n)),
                            h, pairing, group, k, r)


# ---------------------------------------------------------------------------
# dispatcher

def auto_label(g: Graph, h: Graph, product: str, group: GroupSpec,
               pairing: Optional[TwinPairing] = None) -> ConstructionReport:
    """Pick a labeler for the product of G with a balanced H.

    For H on 2^k vertices the available cyclic 2-power exponents of the
    group are tried largest first: small exponents go to the unconditional
    (lex) or mod-2^s (dir) branch, exponent k prefers the even-degree and
    mixed complete-bipartite specializations, and larger exponents use the
    mod-2^{s-1} branch. H on 4k+2 vertices (complete minus a matching)
    routes to the corresponding labelers. Raises with one diagnostic per
    failed route when nothing applies.
    """
    if product not in ("lex", "dir"):
        raise ConstructionError(f"product must be 'lex' or 'dir', got {product!r}")
    hn = h.n
    if hn >= 4 and hn & (hn - 1) == 0:
        return _auto_pow2(g, h, product, group, pairing)
    if hn >= 6 and hn % 4 == 2 and {hn - 1 - d for d in h.degrees} == {1}:
        k = (hn - 2) // 4
        if product == "lex":
            return label_lex_c4k2(g, k, group, h=h, pairing=pairing)
        return label_dir_c4k2(g, k, group, h=h, pairing=pairing)
    raise ConstructionError(
        "H must have 2^k vertices (k >= 2) and be balanced, or be a complete "
        f"graph minus a perfect matching on 4k+2 vertices; got {hn} vertices")


def _auto_pow2(g: Graph, h: Graph, product: str, group: GroupSpec,
               pairing: Optional[TwinPairing]) -> ConstructionReport:
    k, r, pairing = _pow2_host(h, pairing)
    _check_order(group, (1 << k) * g.n)
    exponents = sorted(two_power_exponents(group), reverse=True)
    if not exponents:
        raise ConstructionError(
            f"group {group} has no cyclic 2-power direct factor")
    diagnostics: list[str] = []
    for n0 in exponents:
        if n0 >= k and product == "lex":
            if n0 == k:
                try:
                    return label_lex_even_degrees(g, h, group, pairing)
                except ConstructionError as exc:
                    diagnostics.append(f"even-degrees (s={n0}): {exc}")
                parts = complete_bipartite_parts(g)
                if parts is not None:
                    evens = [p for p in parts if len(p) % 2 == 0]
                    odds = [p for p in parts if len(p) % 2 == 1]
                    if evens and odds and r % 2 == 1 and len(evens[0]) >= 2:
                        try:
                            return _label_kmn_parts(g, evens[0], odds[0], h,
                                                    pairing, group, k, r)
                        except ConstructionError as exc:
                            diagnostics.append(f"kmn-mixed (s={n0}): {exc}")
        try:
            if product == "lex":
                return label_lex_balanced_pow2(g, h, group, n0, pairing)
            return label_dir_balanced_pow2(g, h, group, n0, pairing)
        except ConstructionError as exc:
            diagnostics.append(f"s={n0}: {exc}")
    raise ConstructionError(
        "no applicable construction:\n  " + "\n  ".join(diagnostics),
        diagnostics)


def auto_label_bare(g: Graph, group: GroupSpec) -> Optional[ConstructionReport]:
    """Label a bare (non-product) graph when its shape admits a construction:
    stars and universal-vertex-over-matching graphs. Returns None for a star
    whose center equation has no solution."""
    n = g.n
    is_star_shape = n >= 2 and any(
        g.degree(v) == n - 1 and all(g.degree(u) == 1 for u in range(n) if u != v)
        for v in range(n))
    if is_star_shape:
        return label_star_graph(g, group)
    if n >= 3 and n % 2 == 1:
        universal = [v for v in range(n) if g.degree(v) == n - 1]
        if len(universal) == 1:
            from .magic import _matching_join_pairs
            if _matching_join_pairs(g, universal[0]) is not None:
                return label_matching_join_graph(g, group)
    raise ConstructionError(
        "graph is neither a star nor a universal vertex over a complete "
        "graph minus a perfect matching; provide a second factor for the "
        "product constructions")
