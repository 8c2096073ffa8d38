"""Ground-set subset arithmetic and the simplicial-complex algebra.

Complexes live on a fixed labeled ground set [m] = {1, ..., m} and are
stored by their facets (inclusion-maximal faces) as bitmasks, one bit per
label.  Labels that occur in no facet are ghost vertices; they matter for
Alexander duality, so operations such as full subcomplexes and deletions
keep the ambient ground set instead of relabeling (use ``compact_labels``
or ``shrink_ground`` for explicit relabeling).  The family {<empty set>}
with every label ghost is a valid complex; the empty family is not.

All values are immutable and all operations are pure functions, so
everything here can be shared freely between worker processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import (
    InvalidComplex,
    LinkOfNonFace,
    MTooLarge,
    OverlappingGroundSets,
)
from . import kernels

#: Hard cap on ground-set size: subsets of a doubled ground set must fit in
#: one machine word (inputs up to m = 16, Bier spheres up to 32 labels).
MAX_GROUND = 32

#: Direct enumeration of 2^m subsets (minimal non-faces, complexes defined
#: by non-faces) is only attempted up to this many labels.
MAX_ENUMERABLE_GROUND = 20


def _mask_of(labels: Iterable[int]) -> int:
    bits = 0
    for i in labels:
        if not 1 <= int(i) <= MAX_GROUND:
            raise MTooLarge(f"vertex label {i} outside 1..{MAX_GROUND}")
        bits |= 1 << (int(i) - 1)
    return bits


def _labels_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length())
        mask ^= bit
    return tuple(out)


class VertexSet:
    """An immutable subset of a ground set; label i is bit i-1."""

    __slots__ = ("bits",)

    def __init__(self, labels: Iterable[int] = ()):
        if isinstance(labels, VertexSet):
            bits = labels.bits
        else:
            bits = _mask_of(labels)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_mask(cls, bits: int) -> "VertexSet":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "bits", bits)
        return obj

    @property
    def labels(self) -> tuple[int, ...]:
        return _labels_of(self.bits)

    def complement(self, m: int) -> "VertexSet":
        return VertexSet.from_mask(((1 << m) - 1) & ~self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, label: int) -> bool:
        return 1 <= label <= MAX_GROUND and self.bits >> (label - 1) & 1 == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __le__(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self.bits != other.bits and self <= other

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.bits & other.bits)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.bits | other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.bits & ~other.bits)

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self.labels))}}})"


SetLike = VertexSet | Iterable[int]


def _as_mask(x: SetLike) -> int:
    if isinstance(x, VertexSet):
        return x.bits
    return _mask_of(x)


@dataclass(frozen=True)
class FVector:
    """Face counts of a complex: counts[c] faces with c vertices.

    Indexing is by dimension, so ``fv[-1] == 1`` counts the empty face and
    ``fv[0]`` the geometric vertices.
    """

    counts: tuple[int, ...]

    def __getitem__(self, dim: int) -> int:
        idx = dim + 1
        if idx < 0:
            raise IndexError(dim)
        return self.counts[idx] if idx < len(self.counts) else 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.counts[1:]))

    def trimmed(self) -> tuple[int, ...]:
        counts = list(self.counts)
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def total_faces(self) -> int:
        return sum(self.counts)


def _sorted_facets(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda f: (f.bit_count(), f)))


def maximal_antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop every mask contained in another; canonical facet order."""
    ms = sorted(set(masks), key=lambda f: -f.bit_count())
    kept: list[int] = []
    for f in ms:
        if not any(f & ~g == 0 for g in kept):
            kept.append(f)
    return _sorted_facets(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family on [m], stored by its facet antichain.

    ``facets`` must already be canonical: deduplicated, pairwise
    inclusion-incomparable, and sorted by (cardinality, mask value).  Build
    through :meth:`from_facets` unless the data is canonical by
    construction.
    """

    m: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.m <= MAX_GROUND:
            raise MTooLarge(f"ground-set size {self.m} outside 1..{MAX_GROUND}")
        if not self.facets:
            raise InvalidComplex("the empty family is not a complex; use facets=(0,)")
        full = (1 << self.m) - 1
        prev = -1
        for f in self.facets:
            if f & ~full:
                raise InvalidComplex(f"facet {_labels_of(f)} outside ground set [{self.m}]")
            key = (f.bit_count(), f)
            if prev >= 0 and key <= prev_key:
                raise InvalidComplex("facets not in canonical order")
            prev, prev_key = f, key

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[SetLike]) -> "SimplicialComplex":
        masks = {_as_mask(f) for f in facets}
        if not masks:
            raise InvalidComplex("a complex needs at least the empty face")
        canonical = _sorted_facets(masks)
        for a, b in itertools.combinations(canonical, 2):
            if a & ~b == 0 or b & ~a == 0:
                raise InvalidComplex(
                    f"facets {_labels_of(a)} and {_labels_of(b)} are nested"
                )
        return cls(m, canonical)

    @classmethod
    def void(cls, m: int) -> "SimplicialComplex":
        """The complex {<empty set>} with all m labels ghost."""
        return cls(m, (0,))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, ((1 << m) - 1,))

    @classmethod
    def simplex_boundary(cls, m: int) -> "SimplicialComplex":
        full = (1 << m) - 1
        return cls(m, _sorted_facets(full ^ (1 << i) for i in range(m)))

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    @property
    def vertices(self) -> tuple[int, ...]:
        return _labels_of(self.vertex_mask)

    @property
    def ghost_mask(self) -> int:
        return ((1 << self.m) - 1) & ~self.vertex_mask

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_void(self) -> bool:
        return self.facets == (0,)

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == ((1 << self.m) - 1,)

    def __contains__(self, face: SetLike) -> bool:
        mask = _as_mask(face)
        return any(mask & ~f == 0 for f in self.facets)

    def face_masks(self) -> list[int]:
        seen = {0}
        for f in self.facets:
            s = f
            while s:
                seen.add(s)
                s = (s - 1) & f
        return sorted(seen)

    def faces(self) -> frozenset[VertexSet]:
        return frozenset(VertexSet.from_mask(s) for s in self.face_masks())

    def minimal_non_face_masks(self) -> tuple[int, ...]:
        if self.m > MAX_ENUMERABLE_GROUND:
            raise MTooLarge(
                f"minimal non-faces need a 2^{self.m} scan; ground set too large"
            )
        return _min_non_faces_of_faceset(self.m, set(self.face_masks()))

    def minimal_non_faces(self) -> frozenset[VertexSet]:
        return frozenset(VertexSet.from_mask(s) for s in self.minimal_non_face_masks())

    def f_vector(self) -> FVector:
        return FVector(kernels.face_counts(self.facets, self.m))

    def facet_sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet.from_mask(f) for f in self.facets)

    def to_json_dict(self) -> dict:
        return {"m": self.m, "facets": [list(_labels_of(f)) for f in self.facets]}

    def __repr__(self) -> str:
        body = ", ".join("{%s}" % ",".join(map(str, _labels_of(f))) for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{body}])"


def _min_non_faces_of_faceset(m: int, faceset: set[int]) -> tuple[int, ...]:
    out = []
    for mask in range(1, 1 << m):
        if mask in faceset:
            continue
        s = mask
        minimal = True
        while s:
            bit = s & -s
            if (mask ^ bit) not in faceset:
                minimal = False
                break
            s ^= bit
        if minimal:
            out.append(mask)
    return _sorted_facets(out)


def complex_from_minimal_non_faces(m: int, non_faces: Iterable[SetLike]) -> SimplicialComplex:
    """Build the complex whose minimal non-faces are exactly ``non_faces``.

    Faces are all subsets of [m] containing none of the given sets; the
    reconstruction is validated by recomputing the minimal non-faces.
    """
    if m > MAX_ENUMERABLE_GROUND:
        raise MTooLarge(f"2^{m} subset scan refused")
    nf = [_as_mask(s) for s in non_faces]
    if any(s == 0 for s in nf):
        raise InvalidComplex("the empty set cannot be a non-face")
    faceset = set()
    for mask in range(1 << m):
        if not any(s & ~mask == 0 for s in nf):
            faceset.add(mask)
    facets = [f for f in faceset if all((f | b) not in faceset or (f | b) == f
                                        for b in (1 << i for i in range(m)))]
    K = SimplicialComplex(m, _sorted_facets(facets))
    if set(K.minimal_non_face_masks()) != set(nf):
        raise InvalidComplex("given family is not the minimal non-face set of a complex")
    return K


# -- constructions ------------------------------------------------------


def full_subcomplex(K: SimplicialComplex, where: SetLike) -> SimplicialComplex:
    """Faces of K contained in the given label set; ambient [m] is kept,
    so labels outside the set become ghosts."""
    mask = _as_mask(where)
    return SimplicialComplex(K.m, maximal_antichain(f & mask for f in K.facets))


def deletion(K: SimplicialComplex, label: int) -> SimplicialComplex:
    return full_subcomplex(K, VertexSet.from_mask(((1 << K.m) - 1) & ~(1 << (label - 1))))


def link(K: SimplicialComplex, face: SetLike) -> SimplicialComplex:
    mask = _as_mask(face)
    if not any(mask & ~f == 0 for f in K.facets):
        raise LinkOfNonFace(f"{_labels_of(mask)} is not a face")
    return SimplicialComplex(
        K.m, maximal_antichain(f & ~mask for f in K.facets if mask & ~f == 0)
    )


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join on the disjoint union of ground sets; K2's labels are shifted
    up by K1.m, which is what makes the two ground sets disjoint."""
    m = K1.m + K2.m
    if m > MAX_GROUND:
        raise MTooLarge(f"join ground set {m} exceeds {MAX_GROUND}")
    facets = [f1 | (f2 << K1.m) for f1 in K1.facets for f2 in K2.facets]
    return SimplicialComplex(m, _sorted_facets(facets))


def cone(K: SimplicialComplex, apex: Optional[int] = None) -> SimplicialComplex:
    """Cone over K.  The apex defaults to the fresh label m+1; an existing
    ghost label is also accepted."""
    if apex is None or apex == K.m + 1:
        if K.m + 1 > MAX_GROUND:
            raise MTooLarge("cone apex exceeds the ground-set cap")
        bit = 1 << K.m
        return SimplicialComplex(K.m + 1, _sorted_facets(f | bit for f in K.facets))
    if not 1 <= apex <= K.m:
        raise OverlappingGroundSets(f"apex {apex} is not m+1 and not a label of [{K.m}]")
    bit = 1 << (apex - 1)
    if K.vertex_mask & bit:
        raise OverlappingGroundSets(f"apex {apex} is already a geometric vertex")
    return SimplicialComplex(K.m, _sorted_facets(f | bit for f in K.facets))


def suspension(
    K: SimplicialComplex, v: Optional[int] = None, w: Optional[int] = None
) -> SimplicialComplex:
    """Join of K with a two-point complex; the pair defaults to the fresh
    labels m+1, m+2.  Existing ghost labels are also accepted."""
    if v is None and w is None:
        if K.m + 2 > MAX_GROUND:
            raise MTooLarge("suspension labels exceed the ground-set cap")
        b1, b2 = 1 << K.m, 1 << (K.m + 1)
        facets = [f | b1 for f in K.facets] + [f | b2 for f in K.facets]
        return SimplicialComplex(K.m + 2, _sorted_facets(facets))
    if v is None or w is None or v == w:
        raise OverlappingGroundSets("suspension needs two distinct labels")
    for x in (v, w):
        if not 1 <= x <= K.m:
            raise OverlappingGroundSets(f"label {x} outside [{K.m}]")
        if K.vertex_mask >> (x - 1) & 1:
            raise OverlappingGroundSets(f"label {x} is already a geometric vertex")
    b1, b2 = 1 << (v - 1), 1 << (w - 1)
    facets = [f | b1 for f in K.facets] + [f | b2 for f in K.facets]
    return SimplicialComplex(K.m, _sorted_facets(facets))


def skeleton(K: SimplicialComplex, n: int) -> SimplicialComplex:
    """All faces of dimension <= n.  The ambient ground set is kept; the
    graph view (see :func:`one_skeleton`) is what discards ghosts."""
    if n < 0:
        raise ValueError("skeleton dimension must be >= 0")
    size = n + 1
    small = [f for f in K.facets if f.bit_count() <= size]
    cut = set()
    for f in K.facets:
        if f.bit_count() > size:
            for combo in itertools.combinations(_labels_of(f), size):
                cut.add(_mask_of(combo))
    return SimplicialComplex(K.m, _sorted_facets(set(small) | cut))


def relabel(K: SimplicialComplex, mapping: dict[int, int], new_m: int) -> SimplicialComplex:
    """Apply an injective label mapping (must cover all geometric vertices)."""
    table = {}
    for old, new in mapping.items():
        if not 1 <= new <= new_m:
            raise InvalidComplex(f"target label {new} outside [{new_m}]")
        table[old] = new
    if len(set(table.values())) != len(table):
        raise InvalidComplex("label mapping is not injective")

    def remap(f: int) -> int:
        out = 0
        for lab in _labels_of(f):
            if lab not in table:
                raise InvalidComplex(f"geometric vertex {lab} has no image")
            out |= 1 << (table[lab] - 1)
        return out

    return SimplicialComplex(new_m, _sorted_facets(remap(f) for f in K.facets))


def shrink_ground(K: SimplicialComplex, new_m: int) -> SimplicialComplex:
    """Reinterpret K on the smaller ground set [new_m]; every facet must
    already fit."""
    if K.vertex_mask & ~((1 << new_m) - 1):
        raise InvalidComplex(f"a geometric vertex exceeds [{new_m}]")
    return SimplicialComplex(new_m, K.facets)


def compact_labels(K: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, int]]:
    """Relabel geometric vertices to 1..f0 and drop ghosts (void complexes
    compact to the one-label ground set)."""
    verts = K.vertices
    mapping = {old: i + 1 for i, old in enumerate(verts)}
    new_m = max(1, len(verts))
    return relabel(K, mapping, new_m), mapping


def one_skeleton(K: SimplicialComplex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Graph view of K: (labels, adjacency) over geometric vertices only.

    ``adjacency[i]`` is a bitmask over vertex *indices* (positions in the
    sorted label tuple), which is what the coloring and chordality kernels
    consume.
    """
    labels = K.vertices
    index = {lab: i for i, lab in enumerate(labels)}
    adj = [0] * len(labels)
    for f in K.facets:
        labs = _labels_of(f)
        for a, b in itertools.combinations(labs, 2):
            ia, ib = index[a], index[b]
            adj[ia] |= 1 << ib
            adj[ib] |= 1 << ia
    return labels, tuple(adj)


# -- isomorphism ---------------------------------------------------------


@dataclass(frozen=True)
class IsoCertificate:
    """A bijection of geometric vertex labels carrying facets onto facets."""

    mapping: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def verify(self, a: SimplicialComplex, b: SimplicialComplex) -> bool:
        table = self.as_dict()
        if sorted(table) != list(a.vertices) or sorted(table.values()) != list(b.vertices):
            return False
        try:
            mapped = {
                _mask_of(table[lab] for lab in _labels_of(f)) for f in a.facets
            }
        except KeyError:
            return False
        return mapped == set(b.facets)


def _vertex_invariants(K: SimplicialComplex) -> dict[int, tuple]:
    labels, adj = one_skeleton(K)
    inv = {}
    for i, lab in enumerate(labels):
        in_facets = tuple(sorted(f.bit_count() for f in K.facets if f >> (lab - 1) & 1))
        lk = link(K, VertexSet([lab]))
        inv[lab] = (adj[i].bit_count(), in_facets, lk.f_vector().trimmed())
    return inv


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> Optional[IsoCertificate]:
    """Backtracking isomorphism test on geometric vertices.

    Prefilters on f-vector and facet-size multiset, partitions vertices by
    (degree, incident-facet sizes, link f-vector), then extends partial
    bijections with 1-skeleton adjacency pruning.  Ghost labels and the
    ambient m are ignored: only the generated face structure is compared.
    """
    if sorted(f.bit_count() for f in a.facets) != sorted(f.bit_count() for f in b.facets):
        return None
    if a.f_vector().trimmed() != b.f_vector().trimmed():
        return None
    va, vb = a.vertices, b.vertices
    if len(va) != len(vb):
        return None
    if not va:
        return IsoCertificate(())

    inv_a, inv_b = _vertex_invariants(a), _vertex_invariants(b)
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return None

    labels_a, adj_a = one_skeleton(a)
    labels_b, adj_b = one_skeleton(b)
    idx_a = {lab: i for i, lab in enumerate(labels_a)}
    idx_b = {lab: i for i, lab in enumerate(labels_b)}

    cands = {
        lab: [lb for lb in vb if inv_b[lb] == inv_a[lab]] for lab in va
    }
    order = sorted(va, key=lambda lab: (len(cands[lab]), lab))
    n = len(order)
    image = {}
    used = set()
    b_facets = set(b.facets)

    def extend(pos: int) -> bool:
        if pos == n:
            mapped = {_mask_of(image[l] for l in _labels_of(f)) for f in a.facets}
            return mapped == b_facets
        lab = order[pos]
        ia = idx_a[lab]
        for target in cands[lab]:
            if target in used:
                continue
            it = idx_b[target]
            ok = True
            for done_lab, done_target in image.items():
                a_edge = adj_a[ia] >> idx_a[done_lab] & 1
                b_edge = adj_b[it] >> idx_b[done_target] & 1
                if a_edge != b_edge:
                    ok = False
                    break
            if not ok:
                continue
            image[lab] = target
            used.add(target)
            if extend(pos + 1):
                return True
            del image[lab]
            used.discard(target)
        return False

    if extend(0):
        return IsoCertificate(tuple(sorted(image.items())))
    return None


def canonical_form(K: SimplicialComplex) -> tuple[int, ...]:
    """Lexicographically least facet tuple over all permutations of [m].

    Two complexes on the same ground set are related by a label permutation
    iff their canonical forms agree.  Factorial in m; guarded to m <= 7.
    """
    if K.m > 7:
        raise MTooLarge("canonical forms are only computed for m <= 7")
    best = None
    labels = range(1, K.m + 1)
    for perm in itertools.permutations(labels):
        table = {i + 1: perm[i] for i in range(K.m)}
        mapped = tuple(sorted(
            _mask_of(table[lab] for lab in _labels_of(f)) for f in K.facets
        ))
        if best is None or mapped < best:
            best = mapped
    return best
