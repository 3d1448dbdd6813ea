"""Brute-force exact enumeration of the face lattice of a pointed polyhedron.

This module is the independent oracle the closed-form counts are checked
against, so it favors exhaustiveness over cleverness. Vertices come from
solving every d-row subsystem. Faces are identified by their closed tight
sets: every nonempty face of a pointed polyhedron contains a vertex, hence
its tight set is a subset of some vertex's tight set, so scanning subsets
of vertex tight sets (up to size d) and closing each one via
relative_interior_point finds every face exactly once, including the
unbounded ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (CapExceededError, InfeasibleError, NonPointedError,
                     RedundantInputError, UnboundedInputError)
from .geometry import is_bounded, redundant_constraints, relative_interior_point
from .model import HPolytope
from .ratlin import Vec, dot, rank, solve_affine, solve_linear_system
from .simplex import ZERO

DEFAULT_N_CAP = 24
DEFAULT_D_CAP = 7

FVector = tuple[int, ...]


@dataclass(frozen=True)
class Face:
    """A nonempty face, keyed by its maximal (closed) tight constraint set.

    `witness` lies in the relative interior. `vertex_ids` indexes into the
    vertex list returned alongside the lattice and is None for unbounded
    faces.
    """
    tight_set: frozenset[int]
    dim: int
    witness: Vec
    vertex_ids: frozenset[int] | None


def enumerate_vertices(p: HPolytope) -> list[tuple[Vec, frozenset[int]]]:
    """All vertices with their full tight sets, sorted by coordinates.

    Every d-subset of rows with a nonsingular coefficient matrix is solved;
    solutions satisfying the whole system are kept and deduplicated by
    point. Raises NonPointedError when the lineality space is nonzero.
    """
    d = p.dim
    if rank(tuple(p.rows())) < d:
        raise NonPointedError(
            "row rank below the ambient dimension: nonzero lineality space")
    seen: dict[Vec, frozenset[int]] = {}
    for subset in combinations(range(p.n), d):
        m = tuple(p.constraints[i].coeffs for i in subset)
        rhs = tuple(p.constraints[i].rhs for i in subset)
        x = solve_linear_system(m, rhs)
        if x is None or x in seen:
            continue
        if p.contains(x):
            seen[x] = p.tight_at(x)
    return sorted(seen.items())


def recession_ray_candidates(p: HPolytope) -> list[Vec]:
    """Nonzero directions y with Ay <= 0 found from (d-1)-row subsystems.

    The list covers every extreme ray of the recession cone (each is tight
    on d-1 independent rows), which is all the boundedness tests below
    need; non-extreme members are harmless extras. Directions are
    normalized so the first nonzero coordinate is +/-1.
    """
    d = p.dim
    rows = p.rows()
    found: set[Vec] = set()
    for subset in combinations(range(p.n), d - 1):
        solved = solve_affine([rows[i] for i in subset], [ZERO] * (d - 1), d)
        if solved is None or len(solved[1]) != 1:
            continue
        y = solved[1][0]
        lead = next(a for a in y if a != 0)
        y = tuple(a / abs(lead) for a in y)
        for cand in (y, tuple(-a for a in y)):
            if cand not in found and all(dot(r, cand) <= 0 for r in rows):
                found.add(cand)
    return sorted(found)


def face_lattice(p: HPolytope, max_subsets: int | None = None) -> list[Face]:
    """Every nonempty face of a feasible pointed polyhedron, P itself included.

    Candidate tight sets are the subsets (of size at most d) of vertex
    tight sets; each is closed and witnessed through
    relative_interior_point and deduplicated by closed tight set. Faces are
    returned sorted by (dim, tight_set). Default size caps n <= 24, d <= 7
    apply unless max_subsets overrides them with an explicit candidate
    budget.
    """
    d = p.dim
    if max_subsets is None and (p.n > DEFAULT_N_CAP or d > DEFAULT_D_CAP):
        raise CapExceededError(
            f"n={p.n}, d={d} exceeds the default caps n<={DEFAULT_N_CAP}, "
            f"d<={DEFAULT_D_CAP}; pass max_subsets to override")
    vertices = enumerate_vertices(p)
    if not vertices:
        raise InfeasibleError("no vertices: polyhedron is empty")

    candidates: set[frozenset[int]] = set()
    for _, tight in vertices:
        base = sorted(tight)
        for size in range(min(d, len(base)) + 1):
            for sub in combinations(base, size):
                candidates.add(frozenset(sub))
                if max_subsets is not None and len(candidates) > max_subsets:
                    raise CapExceededError(
                        f"candidate tight sets exceed max_subsets={max_subsets}")

    rays = [] if is_bounded(p) else recession_ray_candidates(p)

    faces: dict[frozenset[int], Face] = {}
    for cand in sorted(candidates, key=lambda s: (len(s), sorted(s))):
        witness = relative_interior_point(p, cand)
        if witness is None:
            continue
        closed = p.tight_at(witness)
        if closed in faces:
            continue
        tight_rows = [p.constraints[i].coeffs for i in sorted(closed)]
        fdim = d - (rank(tuple(tight_rows)) if tight_rows else 0)
        unbounded = any(
            all(dot(p.constraints[i].coeffs, y) == 0 for i in closed) for y in rays)
        vertex_ids = None if unbounded else frozenset(
            vid for vid, (_, vt) in enumerate(vertices) if closed <= vt)
        faces[closed] = Face(closed, fdim, witness, vertex_ids)
    return sorted(faces.values(), key=lambda f: (f.dim, sorted(f.tight_set)))


def f_vector(p: HPolytope, max_subsets: int | None = None) -> FVector:
    """Counts (f_0, ..., f_d) of k-dimensional faces, by brute force."""
    counts = [0] * (p.dim + 1)
    for face in face_lattice(p, max_subsets):
        counts[face.dim] += 1
    return tuple(counts)


def f_vector_from_lattice(p: HPolytope, lattice: list[Face]) -> FVector:
    counts = [0] * (p.dim + 1)
    for face in lattice:
        counts[face.dim] += 1
    return tuple(counts)


def is_simple(p: HPolytope) -> bool:
    """True iff every vertex lies on exactly d constraints; bounded input."""
    if not is_bounded(p):
        raise UnboundedInputError("simplicity test requires a bounded polytope")
    return all(len(tight) == p.dim for _, tight in enumerate_vertices(p))


def facet_adjacency_count(p: HPolytope, max_subsets: int | None = None) -> int:
    """Number of unordered facet pairs meeting in a (d-2)-face.

    Requires a bounded nonredundant input, where rows and facets are in
    bijection: the count is the number of pairs {i, j} whose joint face
    closes to dimension d-2. Equals f_{d-2} for simple polytopes.
    """
    if not is_bounded(p):
        raise UnboundedInputError("facet adjacency requires a bounded polytope")
    redundant = redundant_constraints(p)
    if redundant:
        raise RedundantInputError(
            f"rows {sorted(redundant)} are redundant; adjacency counts need "
            "a nonredundant system")
    count = 0
    for face in face_lattice(p, max_subsets):
        if face.dim == p.dim - 2:
            t = len(face.tight_set)
            count += t * (t - 1) // 2
    return count


def edge_graph(p: HPolytope, max_subsets: int | None = None
               ) -> tuple[list[Vec], list[tuple[int, int]]]:
    """Vertices and undirected edges (as index pairs) of a bounded polytope."""
    if not is_bounded(p):
        raise UnboundedInputError("edge graph requires a bounded polytope")
    lattice = face_lattice(p, max_subsets)
    zero_faces = sorted((f for f in lattice if f.dim == 0), key=lambda f: f.witness)
    points = [f.witness for f in zero_faces]
    vertex_of_tight = {f.tight_set: i for i, f in enumerate(zero_faces)}
    edges = []
    for f in lattice:
        if f.dim == 1:
            ends = [i for t, i in vertex_of_tight.items() if f.tight_set <= t]
            if len(ends) != 2:
                raise AssertionError("bounded 1-face without exactly two vertices")
            edges.append((min(ends), max(ends)))
    return points, sorted(edges)
