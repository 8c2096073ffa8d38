"""Chromatic numbers of Bier spheres and the minimal-chromatic machinery.

A Bier sphere on [m] has chromatic number m-1 or m.  The m-1 case is
recognized three independent ways: an exact coloring, membership of the
base complex in the cone/dual closure of three small seed complexes, and
structural recognition of the sphere as an iterated suspension over a
4-cycle or a 6-cycle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import kernels
from .bier import BierSphere, alexander_dual, bier
from .core import (
    FVector,
    SimplicialComplex,
    VertexSet,
    _labels_of,
    are_isomorphic,
    canonical_form,
    cone,
    one_skeleton,
)
from .errors import BadM, InvalidComplex, NoVertices


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring; colors are 0..num_colors-1, all used."""

    colors: tuple[tuple[int, int], ...]  # (vertex label, color)
    num_colors: int

    def as_dict(self) -> dict[int, int]:
        return dict(self.colors)

    def is_proper(self, K: SimplicialComplex) -> bool:
        table = self.as_dict()
        if set(table) != set(K.vertices):
            return False
        if set(table.values()) != set(range(self.num_colors)):
            return False
        labels, adj = one_skeleton(K)
        for i, a in enumerate(labels):
            nb = adj[i]
            while nb:
                bit = nb & -nb
                b = labels[bit.bit_length() - 1]
                nb ^= bit
                if table[a] == table[b]:
                    return False
        return True


def chromatic_number(K: SimplicialComplex) -> tuple[int, Coloring]:
    """Exact chromatic number of the 1-skeleton, with a witness coloring.

    DSATUR branch and bound (greedy clique lower bound, DSATUR greedy
    upper bound); deterministic in the vertex label order.
    """
    labels, adj = one_skeleton(K)
    if not labels:
        raise NoVertices("chromatic number needs at least one geometric vertex")
    chi, colors = kernels.dsatur_chromatic(adj)
    witness = Coloring(tuple(zip(labels, colors)), chi)
    return chi, witness


def _chi_or_zero(K: SimplicialComplex) -> int:
    if not K.vertex_mask:
        return 0
    return chromatic_number(K)[0]


def chi_bier_bounds(K: SimplicialComplex) -> tuple[int, int]:
    """max(m-1, chi(K), chi(dual)) <= chi(Bier(K)) <= m; the upper bound is
    witnessed by coloring i and i' alike."""
    dual = alexander_dual(K)
    lower = max(K.m - 1, _chi_or_zero(K), _chi_or_zero(dual))
    return lower, K.m


def weak_cone_apexes(K: SimplicialComplex) -> tuple[int, ...]:
    """Geometric vertices adjacent (in the 1-skeleton) to every other
    geometric vertex."""
    labels, adj = one_skeleton(K)
    n = len(labels)
    full = (1 << n) - 1
    return tuple(
        labels[i] for i in range(n) if adj[i] == full ^ (1 << i)
    )


def cone_apexes(K: SimplicialComplex) -> tuple[int, ...]:
    """Geometric vertices contained in every facet; apexes of actual cone
    structure (always a subset of the weak-cone apexes)."""
    mask = K.facets[0]
    for f in K.facets[1:]:
        mask &= f
    return _labels_of(mask)


class SuspensionKind(enum.Enum):
    NOT_WEAK_SUSPENSION = "not_weak_suspension"
    WEAK_SUSPENSION_ONLY = "weak_suspension_only"
    SUSPENSION = "suspension"


@dataclass(frozen=True)
class SuspensionStructure:
    kind: SuspensionKind
    pairs: tuple[tuple[int, int], ...]  # all weak-suspension vertex pairs
    split_pairs: tuple[tuple[int, int], ...]  # pairs realizing an exact join split


def _weak_suspension_pairs(C: SimplicialComplex) -> list[tuple[int, int]]:
    labels, adj = one_skeleton(C)
    n = len(labels)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i] >> j & 1:
                continue
            want_i = ((1 << n) - 1) ^ (1 << i) ^ (1 << j)
            if adj[i] == want_i and adj[j] == ((1 << n) - 1) ^ (1 << j) ^ (1 << i):
                pairs.append((labels[i], labels[j]))
    return pairs


def _split_residue(
    C: SimplicialComplex, a: int, b: int
) -> Optional[SimplicialComplex]:
    """If C is exactly (boundary of the edge {a,b}) * R, return R on the
    same ground set (a and b become ghosts); None otherwise."""
    ba, bb = 1 << (a - 1), 1 << (b - 1)
    with_a, with_b = set(), set()
    for f in C.facets:
        has_a, has_b = f & ba, f & bb
        if bool(has_a) == bool(has_b):
            return None
        if has_a:
            with_a.add(f ^ ba)
        else:
            with_b.add(f ^ bb)
    if with_a != with_b:
        return None
    from .core import _sorted_facets

    return SimplicialComplex(C.m, _sorted_facets(with_a))


def suspension_structure(B: BierSphere) -> SuspensionStructure:
    """Classify the Bier sphere as not a weak suspension, a weak suspension
    only, or an honest suspension; lists the witnessing vertex pairs.

    For m >= 3 every witness pair has the form {i, i'}, and a pair splits
    the sphere as a join exactly when the base complex is a cone with
    apex i (checked exhaustively by the verification suite).
    """
    pairs = tuple(sorted(_weak_suspension_pairs(B.complex)))
    split = tuple(
        p for p in pairs if _split_residue(B.complex, p[0], p[1]) is not None
    )
    if split:
        kind = SuspensionKind.SUSPENSION
    elif pairs:
        kind = SuspensionKind.WEAK_SUSPENSION_ONLY
    else:
        kind = SuspensionKind.NOT_WEAK_SUSPENSION
    return SuspensionStructure(kind=kind, pairs=pairs, split_pairs=split)


# -- minimal-chromatic classification ------------------------------------

_SEEDS = {
    # path on three vertices
    "gamma4": SimplicialComplex.from_facets(3, [[1, 3], [2, 3]]),
    # one edge plus a ghost vertex
    "g4": SimplicialComplex.from_facets(3, [[1, 2]]),
    # three isolated points
    "gamma6": SimplicialComplex.from_facets(3, [[1], [2], [3]]),
}


@dataclass(frozen=True)
class MinColorableReport:
    minimal: bool
    trace: Optional[tuple[str, ...]]  # seed name followed by cone/dual steps


def _invariant_key(K: SimplicialComplex) -> tuple:
    return (
        K.m,
        tuple(sorted(f.bit_count() for f in K.facets)),
        K.f_vector().counts,
    )


@lru_cache(maxsize=None)
def _closure_level(m: int) -> tuple[tuple[SimplicialComplex, tuple[str, ...]], ...]:
    """Members of the cone/dual closure of the three seeds living on [m],
    deduplicated up to label permutation, each with a build trace."""
    if m < 3:
        raise BadM("the closure starts on three labels")
    if m == 3:
        entries = [(K, (name,)) for name, K in _SEEDS.items()]
    else:
        entries = [
            (cone(K), trace + ("cone",)) for K, trace in _closure_level(m - 1)
        ]
    # close under dualization at fixed m (an involution: one sweep suffices)
    seen: dict[tuple, tuple[SimplicialComplex, tuple[str, ...]]] = {}
    for K, trace in entries:
        seen.setdefault(canonical_form(K), (K, trace))
    for K, trace in list(seen.values()):
        D = alexander_dual(K)
        seen.setdefault(canonical_form(D), (D, trace + ("dual",)))
    return tuple(sorted(seen.values(), key=lambda e: canonical_form(e[0])))


def min_colorable_classifier(K: SimplicialComplex) -> MinColorableReport:
    """Decide whether K lies (up to label permutation) in the cone/dual
    closure of the three seed complexes on [3]; that closure is exactly
    the family whose Bier spheres need only m-1 colors.

    For m = 2 every admissible complex qualifies (the 0-sphere needs one
    color), so the answer is affirmative with a degenerate trace.
    """
    if K.is_full_simplex:
        raise InvalidComplex("the full simplex has no Bier sphere to classify")
    if K.m == 2:
        return MinColorableReport(True, ("point-pair-sphere",))
    if K.m < 2:
        raise BadM("classification needs m >= 2")
    key = _invariant_key(K)
    for member, trace in _closure_level(K.m):
        if _invariant_key(member) != key:
            continue
        if are_isomorphic(K, member) is not None:
            return MinColorableReport(True, trace)
    return MinColorableReport(False, None)


@dataclass(frozen=True)
class MinChromaticType:
    """Outcome of suspension peeling: the polytope family behind a
    minimally colorable Bier sphere, or None."""

    kind: Optional[str]  # "cube", "cube_times_hexagon", or None
    strips: int


def _is_cycle_complex(C: SimplicialComplex, length: int) -> bool:
    labels, adj = one_skeleton(C)
    if len(labels) != length:
        return False
    if any(f.bit_count() != 2 for f in C.facets):
        return False
    if len(C.facets) != length:
        return False
    if any(a.bit_count() != 2 for a in adj):
        return False
    # 2-regular and connected == a single cycle
    seen = 1
    prev, cur = 0, (adj[0] & -adj[0]).bit_length() - 1
    visited = {0, cur}
    while True:
        nxt_mask = adj[cur] & ~(1 << prev)
        nxt = (nxt_mask & -nxt_mask).bit_length() - 1
        if nxt == 0:
            break
        visited.add(nxt)
        prev, cur = cur, nxt
    return len(visited) == length


def _is_point_pair(C: SimplicialComplex) -> bool:
    return len(C.vertices) == 2 and all(f.bit_count() <= 1 for f in C.facets)


def recognize_min_chromatic_type(B: BierSphere) -> MinChromaticType:
    """Iteratively strip suspension vertex pairs and classify the residue.

    A residue equal to a 4-cycle (or, for m = 2, a point pair) puts the
    sphere in the cube family I^(m-1); a 6-cycle residue puts it in the
    cube-times-hexagon family I^(m-3) x P6; anything else means the sphere
    needs the full m colors.
    """
    C = B.complex
    strips = 0
    while True:
        if _is_point_pair(C) or _is_cycle_complex(C, 4):
            return MinChromaticType("cube", strips)
        if _is_cycle_complex(C, 6):
            return MinChromaticType("cube_times_hexagon", strips)
        residue = None
        for a, b in sorted(_weak_suspension_pairs(C)):
            residue = _split_residue(C, a, b)
            if residue is not None:
                break
        if residue is None:
            return MinChromaticType(None, strips)
        C = residue
        strips += 1


def km_fixture(m: int) -> SimplicialComplex:
    """The weak-suspension-but-not-suspension family member on [m], m >= 5,
    defined by its minimal non-faces and validated by recomputing them."""
    if m < 5:
        raise BadM("the fixture family starts at m = 5")
    from .core import complex_from_minimal_non_faces

    non_faces = [
        VertexSet(range(1, m - 1)),
        VertexSet(range(2, m)),
    ] + [VertexSet([i, m]) for i in range(2, m)]
    return complex_from_minimal_non_faces(m, non_faces)


def _fvector_of(K: SimplicialComplex) -> FVector:
    return K.f_vector()
