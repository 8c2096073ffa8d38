"""Alexander duality and the deleted-join Bier-sphere construction.

The dual of a complex on [m] is represented on [m] again: primed labels
only become explicit inside a Bier sphere, where the ground set doubles to
[2m] and label i' is stored as m+i.  Dualizing twice gives back the very
same complex under that identification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .core import (
    IsoCertificate,
    SimplicialComplex,
    _min_non_faces_of_faceset,
    _sorted_facets,
    maximal_antichain,
)
from .errors import BadM, DualOfFullSimplex


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """Complex whose facets are the complements of K's minimal non-faces.

    Defined for K != full simplex on [m], m >= 2.  The result lives on the
    primed copy of [m]; see the module docstring for the representation.
    """
    if K.m < 2:
        raise BadM("Alexander duality needs m >= 2")
    mfs = K.minimal_non_face_masks()
    if not mfs:
        raise DualOfFullSimplex(f"the full simplex on [{K.m}] has no dual")
    full = (1 << K.m) - 1
    return SimplicialComplex(K.m, _sorted_facets(full ^ s for s in mfs))


@dataclass(frozen=True)
class BierSphere:
    """Deleted join of a complex and its Alexander dual.

    ``complex`` lives on the doubled ground set [2m]; labels 1..m are the
    base complex's, labels m+1..2m the dual's (i' = m+i).
    """

    base: SimplicialComplex
    dual: SimplicialComplex
    complex: SimplicialComplex

    @property
    def m(self) -> int:
        return self.base.m

    def expected_vertex_count(self) -> int:
        fv = self.base.f_vector()
        return self.m + fv[0] - fv[self.m - 2]


def bier(K: SimplicialComplex) -> BierSphere:
    """Build the Bier sphere of K (faces I + J' with I in K, J' in the
    dual, I and J disjoint).

    Facets are generated directly: the maximal faces are exactly the pairs
    (I, J) with I in K, J = I + {e} not in K, encoded as I + ([m] \\ J)'.
    Every such face has m-1 vertices, so the complex is pure of dimension
    m-2 with no dominance filtering needed.
    """
    if K.m < 2:
        raise BadM("Bier spheres need m >= 2")
    faceset = set(K.face_masks())
    mfs = _min_non_faces_of_faceset(K.m, faceset)
    if not mfs:
        raise DualOfFullSimplex(f"the full simplex on [{K.m}] has no Bier sphere")
    m = K.m
    full = (1 << m) - 1
    dual = SimplicialComplex(m, _sorted_facets(full ^ s for s in mfs))

    facets = []
    for face in faceset:
        rest = full & ~face
        while rest:
            bit = rest & -rest
            rest ^= bit
            grown = face | bit
            if grown not in faceset:
                facets.append(face | ((full ^ grown) << m))
    sphere = SimplicialComplex(2 * m, _sorted_facets(facets))
    return BierSphere(base=K, dual=dual, complex=sphere)


@dataclass(frozen=True)
class SphereCheckReport:
    """Computable sphere consequences checked on a Bier complex.

    Full PL-sphere recognition is out of scope; purity, dimension, the
    pseudomanifold property, Euler characteristic, facet-graph
    connectivity, and the vertex-count identity stand in for it.
    """

    m: int
    pure: bool
    dimension_ok: bool
    pseudomanifold: bool
    euler_ok: bool
    connected: Optional[bool]  # None when m < 3 (two points are not connected)
    vertex_count_ok: bool
    euler_expected: int
    euler_actual: int
    vertex_count_expected: int
    vertex_count_actual: int

    @property
    def passed(self) -> bool:
        return (
            self.pure
            and self.dimension_ok
            and self.pseudomanifold
            and self.euler_ok
            and self.connected is not False
            and self.vertex_count_ok
        )

    def failures(self) -> list[str]:
        out = []
        for name in ("pure", "dimension_ok", "pseudomanifold", "euler_ok", "vertex_count_ok"):
            if not getattr(self, name):
                out.append(name)
        if self.connected is False:
            out.append("connected")
        return out


def _facet_graph_connected(facets: tuple[int, ...], k: int) -> bool:
    n = len(facets)
    if n == 0:
        return False
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        i = stack.pop()
        for j in range(n):
            if not seen[j] and (facets[i] & facets[j]).bit_count() == k - 1:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == n


def check_sphere(B: BierSphere) -> SphereCheckReport:
    m = B.m
    facets = B.complex.facets
    k = m - 1
    pure = all(f.bit_count() == k for f in facets)
    fv = B.complex.f_vector()
    dimension_ok = B.complex.dim == m - 2
    pseudo = kernels.is_pure_pseudomanifold(facets, k)
    euler_expected = 1 + (-1) ** (m - 2)
    euler_actual = fv.euler_characteristic()
    connected = _facet_graph_connected(facets, k) if m >= 3 else None
    expected_v = B.expected_vertex_count()
    return SphereCheckReport(
        m=m,
        pure=pure,
        dimension_ok=dimension_ok,
        pseudomanifold=pseudo,
        euler_ok=euler_actual == euler_expected,
        connected=connected,
        vertex_count_ok=fv[0] == expected_v,
        euler_expected=euler_expected,
        euler_actual=euler_actual,
        vertex_count_expected=expected_v,
        vertex_count_actual=fv[0],
    )


def bier_symmetry_witness(K: SimplicialComplex) -> IsoCertificate:
    """The label swap i <-> i' carrying Bier(K) onto Bier(dual of K).

    The swap is verified facet-for-facet before the certificate is
    returned.
    """
    b1 = bier(K)
    b2 = bier(alexander_dual(K))
    m = K.m

    def swap(f: int) -> int:
        low = f & ((1 << m) - 1)
        high = f >> m
        return high | (low << m)

    swapped = set(map(swap, b1.complex.facets))
    if swapped != set(b2.complex.facets):
        raise AssertionError("label swap does not carry Bier(K) onto Bier(K dual)")
    mapping = []
    for lab in b1.complex.vertices:
        mapping.append((lab, lab + m if lab <= m else lab - m))
    cert = IsoCertificate(tuple(sorted(mapping)))
    if not cert.verify(b1.complex, b2.complex):
        raise AssertionError("symmetry certificate failed verification")
    return cert


def full_subcomplex_on_first(B: BierSphere, keep_m: int) -> SimplicialComplex:
    """Bier(K) restricted to [keep_m] + [keep_m'] and relabeled onto the
    doubled ground set of size 2*keep_m (used by the suspension-basis
    correspondence)."""
    m = B.m
    keep = ((1 << keep_m) - 1) | (((1 << keep_m) - 1) << m)
    kept = []
    for f in B.complex.facets:
        kept.append(f & keep)

    def shift(f: int) -> int:
        low = f & ((1 << m) - 1)
        high = f >> m
        return low | (high << keep_m)

    return SimplicialComplex(2 * keep_m, maximal_antichain(shift(f) for f in kept))
