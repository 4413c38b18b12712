"""Classification of quadrilateral coordinates and the canonical minimal lift.

A quadrilateral vector assigns a non-negative integer to each of the 3t quad
types (flat index 3i+k-1 for quad Qk of tetrahedron i) and is admissible when
no tetrahedron carries two different quad types.  The vector belongs to a
normal surface exactly when the triangle coordinates can be completed so that
all matching equations hold, i.e. when the boundary of the quad 2-chain,
projected to each vertex link, bounds there.  Three outcomes:

* ``NotNormal``: the projected boundary fails to be a 1-cycle in some link.
* ``SpunNormal``: a cycle in every link, but not a boundary in some link
  (possible only for links of positive genus; the data then belongs to a
  spun-normal surface of the ideal triangulation).
* ``Normal``: bounds in every link.  The completion is normalized per vertex
  so that at least one triangle coefficient of every link is zero, which
  makes it the unique minimal representative: every other completion adds
  non-negative multiples of whole vertex links.
"""

from dataclasses import dataclass, field

from . import chains, links as links_mod
from .intlinalg import smith_normal_form, solve_with_smith
from .triangulation import quad_disc

__all__ = [
    "NORMAL",
    "SPUN_NORMAL",
    "NOT_NORMAL",
    "AdmissibilityReport",
    "check_admissible",
    "quad_chain",
    "quad_part",
    "triangle_part",
    "partial_boundary",
    "cycle_imbalance",
    "cycle_test",
    "boundary_test",
    "LiftResult",
    "lift",
    "NormalityReport",
    "verify_normal",
    "load_quads",
    "quads_doc",
    "load_normal_coords",
    "normal_coords_doc",
]

NORMAL = "Normal"
SPUN_NORMAL = "SpunNormal"
NOT_NORMAL = "NotNormal"


@dataclass(frozen=True)
class AdmissibilityReport:
    """Violations of non-negativity and of the one-quad-type-per-tet rule."""

    negatives: tuple    # (tet, quad type, value)
    conflicts: tuple    # (tet, (types with nonzero coefficient...))

    @property
    def ok(self):
        return not self.negatives and not self.conflicts


def check_admissible(q, tet_count=None):
    if tet_count is not None and len(q) != 3 * tet_count:
        raise ValueError("expected %d quad coordinates, got %d"
                         % (3 * tet_count, len(q)))
    if len(q) % 3:
        raise ValueError("quad vector length %d is not a multiple of 3" % len(q))
    negatives = []
    conflicts = []
    for tet in range(len(q) // 3):
        present = []
        for k in (1, 2, 3):
            value = q[3 * tet + k - 1]
            if value < 0:
                negatives.append((tet, k, value))
            if value != 0:
                present.append(k)
        if len(present) > 1:
            conflicts.append((tet, tuple(present)))
    return AdmissibilityReport(tuple(negatives), tuple(conflicts))


def quad_chain(tri, q):
    """Embed a quad vector as a 2-chain supported on the quad summand."""
    if len(q) != tri.quad_count:
        raise ValueError("expected %d quad coordinates, got %d"
                         % (tri.quad_count, len(q)))
    chain = [0] * tri.disc_count
    for tet in range(tri.tet_count):
        for k in (1, 2, 3):
            chain[quad_disc(tet, k)] = q[3 * tet + k - 1]
    return chain


def quad_part(tri, chain2):
    """Extract the quad vector of a 2-chain."""
    return [chain2[quad_disc(tet, k)]
            for tet in range(tri.tet_count) for k in (1, 2, 3)]


def triangle_part(tri, chain2):
    """Extract the triangle coordinates of a 2-chain (4 per tetrahedron)."""
    return [chain2[7 * tet + c]
            for tet in range(tri.tet_count) for c in range(4)]


def _quad_boundary(tri, q):
    boundary = chains.boundary_matrix(tri)
    out = [0] * tri.arc_count
    for tet in range(tri.tet_count):
        for k in (1, 2, 3):
            coeff = q[3 * tet + k - 1]
            if coeff:
                for r, v in boundary.columns[quad_disc(tet, k)]:
                    out[r] += coeff * v
    return out

def partial_boundary(tri, q, vertex):
    """Boundary of the quad 2-chain projected to the arcs linking ``vertex``.

    Summing over all vertex classes recovers the full boundary, since every
    arc links exactly one vertex class.
    """
    return links_mod.projection(tri.links[vertex], _quad_boundary(tri, q))


def cycle_imbalance(tri, q, vertex):
    """Signed endpoint sums of the projected boundary at each 0-cell of the
    link; all zero exactly when the chain is a 1-cycle there."""
    link = tri.links[vertex]
    chain = partial_boundary(tri, q, vertex)
    sums = {}
    for arc in link.arcs:
        coeff = chain[arc]
        if coeff:
            tail, head = link.arc_cells[arc]
            sums[head] = sums.get(head, 0) + coeff
            sums[tail] = sums.get(tail, 0) - coeff
    return {cell: s for cell, s in sorted(sums.items()) if s != 0}


def cycle_test(tri, q, vertex):
    return not cycle_imbalance(tri, q, vertex)


def _link_solver(tri, vertex):
    key = ("link-smith", vertex)
    dec = tri._cache.get(key)
    if dec is None:
        dec = smith_normal_form(
            links_mod.link_boundary_matrix(tri, tri.links[vertex]))
        tri._cache[key] = dec
    return dec


def boundary_test(tri, q, vertex, solve_fn=None):
    """Decide whether the projected boundary bounds in the link complex.

    Returns (ok, witness, reason): on success ``witness`` is an integer
    vector over the link's triangles (ordered as ``link.triangles``) whose
    boundary cancels the projected quad boundary.  ``solve_fn``, if given,
    replaces the cached solver (it receives the dense link boundary matrix
    and the right-hand side) so witness independence can be exercised.
    """
    link = tri.links[vertex]
    chain = partial_boundary(tri, q, vertex)
    rhs = [-chain[arc] for arc in link.arcs]
    if solve_fn is None:
        res = solve_with_smith(_link_solver(tri, vertex), rhs)
    else:
        res = solve_fn(links_mod.link_boundary_matrix(tri, link), rhs)
    return res.ok, res.solution, res.reason


@dataclass(frozen=True)
class LiftResult:
    """Outcome of classifying a quad vector.

    ``canonical_lift`` (present only for Normal) is the full disc vector with
    the given quad part and the minimal non-negative triangle completion;
    ``per_vertex_shift`` records the multiple of each vertex link subtracted
    from the solver's witness during normalization.
    """

    classification: str
    canonical_lift: list = None
    per_vertex_shift: dict = field(default_factory=dict)
    cycle_failures: tuple = ()
    boundary_failures: tuple = ()


def lift(tri, q, solve_fn=None):
    """Classify an admissible non-negative quad vector; compute the canonical
    lift when it is Normal.

    Raises ValueError on inadmissible input.  The canonical lift does not
    depend on the witness produced by the integer solver: any two witnesses
    for a vertex differ by a multiple of the link's fundamental class, which
    the per-vertex normalization removes.
    """
    report = check_admissible(q, tri.tet_count)
    if not report.ok:
        raise ValueError("inadmissible quadrilateral coordinates: %r" % (report,))

    cycle_failures = []
    for vertex in range(len(tri.links)):
        imbalance = cycle_imbalance(tri, q, vertex)
        if imbalance:
            cycle_failures.append((vertex, tuple(imbalance.items())))
    if cycle_failures:
        return LiftResult(NOT_NORMAL, cycle_failures=tuple(cycle_failures))

    witnesses = {}
    boundary_failures = []
    for vertex in range(len(tri.links)):
        ok, witness, reason = boundary_test(tri, q, vertex, solve_fn=solve_fn)
        if ok:
            witnesses[vertex] = witness
        else:
            boundary_failures.append((vertex, reason))
    if boundary_failures:
        return LiftResult(SPUN_NORMAL, boundary_failures=tuple(boundary_failures))

    coords = quad_chain(tri, q)
    shifts = {}
    for vertex, witness in witnesses.items():
        link = tri.links[vertex]
        m = min(witness) if witness else 0
        shifts[vertex] = m
        for disc, value in zip(link.triangles, witness):
            coords[disc] = value - m

    residue = chains.apply_boundary(tri, coords)
    if any(residue) or any(x < 0 for x in coords):
        raise AssertionError("canonical lift failed its own postconditions")
    return LiftResult(NORMAL, coords, shifts)


@dataclass(frozen=True)
class NormalityReport:
    """Checks of a full disc vector: non-negative, admissible, and in the
    kernel of the boundary map (equivalently, all matching equations hold)."""

    negatives: tuple        # (disc, value)
    admissibility: AdmissibilityReport
    violated_arcs: tuple    # (arc, boundary coefficient)

    @property
    def ok(self):
        return (not self.negatives and self.admissibility.ok
                and not self.violated_arcs)


def verify_normal(tri, coords):
    if len(coords) != tri.disc_count:
        raise ValueError("expected %d coordinates, got %d"
                         % (tri.disc_count, len(coords)))
    negatives = tuple((disc, value) for disc, value in enumerate(coords)
                      if value < 0)
    admissibility = check_admissible(quad_part(tri, coords), tri.tet_count)
    residue = chains.apply_boundary(tri, coords)
    violated = tuple((arc, value) for arc, value in enumerate(residue) if value)
    return NormalityReport(negatives, admissibility, violated)


# ----------------------------------------------------------------------
# coordinate documents

def load_quads(doc, tet_count):
    """Read {"quads": [[q1,q2,q3] x t]} into a flat quad vector."""
    if not isinstance(doc, dict) or "quads" not in doc:
        raise ValueError("malformed quads document: missing 'quads'")
    rows = doc["quads"]
    if not isinstance(rows, list) or len(rows) != tet_count:
        raise ValueError("quads document must list %d tetrahedra" % tet_count)
    flat = []
    for tet, row in enumerate(rows):
        if (not isinstance(row, list) or len(row) != 3
                or any(not isinstance(x, int) for x in row)):
            raise ValueError("malformed quad row for tetrahedron %d" % tet)
        flat.extend(row)
    return flat


def quads_doc(q):
    return {"quads": [list(q[i:i + 3]) for i in range(0, len(q), 3)]}


def load_normal_coords(doc, tet_count):
    """Read {"coords": [[t0,t1,t2,t3,q1,q2,q3] x t]} into a flat disc vector."""
    if not isinstance(doc, dict) or "coords" not in doc:
        raise ValueError("malformed coordinates document: missing 'coords'")
    rows = doc["coords"]
    if not isinstance(rows, list) or len(rows) != tet_count:
        raise ValueError("coordinates document must list %d tetrahedra" % tet_count)
    flat = []
    for tet, row in enumerate(rows):
        if (not isinstance(row, list) or len(row) != 7
                or any(not isinstance(x, int) for x in row)):
            raise ValueError("malformed coordinate row for tetrahedron %d" % tet)
        flat.extend(row)
    return flat


def normal_coords_doc(coords):
    return {"coords": [list(coords[i:i + 7]) for i in range(0, len(coords), 7)]}
