"""Independent brute-force oracles used by the tests.

Everything here is deliberately written against the raw gluing documents (or
against first principles) rather than against the library's internals, so a
bug in the package cannot hide in its own oracle.
"""

import itertools
from fractions import Fraction
from math import gcd

FACE_CORNERS = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))


# ----------------------------------------------------------------------
# geometric sign oracle on the standard simplex

_SIMPLEX = (
    (Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - b[0] * (a[1] * c[2] - a[2] * c[1])
            + c[0] * (a[1] * b[2] - a[2] * b[1]))


def simplex_arc_sign(corner, tail, head, opposite):
    """Sign of the frame (a, b, e) at the edge midpoint, computed inside the
    positively oriented standard simplex with exact rational arithmetic.

    e is the directed edge tail->head of the face opposite ``opposite``; a is
    the in-face outward normal of that edge (away from ``corner``); b is the
    face normal pointing out of the tetrahedron (away from ``opposite``).
    """
    xv, xp, xq, xw = (_SIMPLEX[corner], _SIMPLEX[tail], _SIMPLEX[head],
                      _SIMPLEX[opposite])
    e = _sub(xq, xp)
    mid = tuple((p + q) / 2 for p, q in zip(xp, xq))
    mv = _sub(mid, xv)
    a = tuple(_dot(e, e) * c - _dot(mv, e) * d for c, d in zip(mv, e))
    n = _cross(_sub(xp, xv), _sub(xq, xv))
    b = n if _dot(n, _sub(xw, xv)) < 0 else tuple(-c for c in n)
    det = _det3(a, b, e)
    assert det != 0
    return 1 if det > 0 else -1


# ----------------------------------------------------------------------
# quad combinatorics from first principles

def quad_cut_corner(quad_type, face_slot):
    """Corner linked by quad Qk's arc in a face, derived from which edges the
    quad cuts (the four edges with one endpoint in {0,k})."""
    separated = {0, quad_type}
    cut = [frozenset(p) for p in itertools.combinations(range(4), 2)
           if len(separated & set(p)) == 1]
    face = set(FACE_CORNERS[face_slot])
    in_face = [edge for edge in cut if edge <= face]
    assert len(in_face) == 2
    (shared,) = set.intersection(*map(set, in_face))
    return shared


def quad_type_cutting(face_slot, corner):
    for k in (1, 2, 3):
        if quad_cut_corner(k, face_slot) == corner:
            return k
    raise AssertionError


# ----------------------------------------------------------------------
# raw class counting

def brute_force_class_counts(doc):
    """(vertex, edge, face) class counts by plain orbit closure on the raw
    document."""
    t = doc["tets"]

    def sigma(i, f):
        entry = doc["gluings"][i][f]
        m = {}
        for s, v in enumerate(FACE_CORNERS[f]):
            m[v] = entry["corners"][s]
        return entry["tet"], entry["face"], m

    def close(items, images):
        parent = {x: x for x in items}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x, y in images:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx
        return len({find(x) for x in items})

    verts = [(i, v) for i in range(t) for v in range(4)]
    vid = []
    edges = [(i, frozenset(p)) for i in range(t)
             for p in itertools.combinations(range(4), 2)]
    eid = []
    faces = [(i, f) for i in range(t) for f in range(4)]
    fid = []
    for i in range(t):
        for f in range(4):
            j, g, m = sigma(i, f)
            fid.append(((i, f), (j, g)))
            for v in FACE_CORNERS[f]:
                vid.append(((i, v), (j, m[v])))
            for a, b in itertools.combinations(FACE_CORNERS[f], 2):
                eid.append(((i, frozenset((a, b))), (j, frozenset((m[a], m[b])))))
    return close(verts, vid), close(edges, eid), close(faces, fid)


# ----------------------------------------------------------------------
# matching-equation solution enumeration

def _inverse_corners(f, g, corners):
    src, dst = FACE_CORNERS[f], FACE_CORNERS[g]
    inv = [None] * 3
    for s in range(3):
        inv[dst.index(corners[s])] = src[s]
    return inv


def _face_counts(assign, f):
    """Per ascending corner of face f: triangles at the corner plus the quad
    whose arc there links it.  ``assign`` is (t0,t1,t2,t3,q1,q2,q3)."""
    return tuple(assign[v] + assign[4 + quad_type_cutting(f, v) - 1]
                 for v in FACE_CORNERS[f])


def _tet_tuples(bound, admissible_only, quad_fix=None, triangle_bound=None):
    tb = bound if triangle_bound is None else triangle_bound
    tris = itertools.product(range(tb + 1), repeat=4)
    if quad_fix is not None:
        quad_opts = [tuple(quad_fix)]
    elif admissible_only:
        quad_opts = [(0, 0, 0)]
        for k in range(3):
            for val in range(1, bound + 1):
                q = [0, 0, 0]
                q[k] = val
                quad_opts.append(tuple(q))
    else:
        quad_opts = list(itertools.product(range(bound + 1), repeat=3))
    return [t + q for t in tris for q in quad_opts]


def enumerate_matching_solutions(doc, bound, admissible_only=True,
                                 quad_part=None, triangle_bound=None):
    """All non-negative disc vectors with entries <= bound satisfying the
    matching equations of the raw document.

    With ``quad_part`` the quad coordinates are pinned (completion oracle) and
    only the triangles range over 0..triangle_bound.  Enumeration is by
    tetrahedron with hash buckets on the already-constrained face counts.
    """
    t = doc["tets"]

    pairs = []
    seen = set()
    for i in range(t):
        for f in range(4):
            entry = doc["gluings"][i][f]
            j, g, corners = entry["tet"], entry["face"], entry["corners"]
            if (j, g, i, f) in seen:
                continue
            seen.add((i, f, j, g))
            pairs.append(((i, f), (j, g), list(corners)))

    per_tet = []
    for tet in range(t):
        qf = None if quad_part is None else quad_part[3 * tet:3 * tet + 3]
        per_tet.append(_tet_tuples(bound, admissible_only, qf, triangle_bound))

    # constraints binding each tet to earlier tets, with corner maps reversed
    # so the constrained side is always the later tetrahedron
    stage_cons = [[] for _ in range(t)]
    self_cons = [[] for _ in range(t)]
    for (i, f), (j, g), corners in pairs:
        if i == j:
            self_cons[i].append((f, g, corners))
        elif i > j:
            stage_cons[i].append((f, (j, g), corners))
        else:
            stage_cons[j].append((g, (i, f), _inverse_corners(f, g, corners)))

    def self_ok(tet, assign):
        for f, g, corners in self_cons[tet]:
            tf = _face_counts(assign, f)
            tg = _face_counts(assign, g)
            dst = FACE_CORNERS[g]
            for s, v in enumerate(FACE_CORNERS[f]):
                if tf[s] != tg[dst.index(corners[s])]:
                    return False
        return True

    def own_key(tet, assign):
        return tuple(_face_counts(assign, f) for f, _, _ in stage_cons[tet])

    buckets = []
    for tet in range(t):
        if not stage_cons[tet]:
            buckets.append([a for a in per_tet[tet] if self_ok(tet, a)])
        else:
            bucket = {}
            for a in per_tet[tet]:
                if self_ok(tet, a):
                    bucket.setdefault(own_key(tet, a), []).append(a)
            buckets.append(bucket)

    solutions = []
    assign = [None] * t

    def partner_key(tet):
        key = []
        for f, (j, g), corners in stage_cons[tet]:
            counts = _face_counts(assign[j], g)
            dst = FACE_CORNERS[g]
            key.append(tuple(counts[dst.index(corners[s])] for s in range(3)))
        return tuple(key)

    def rec(tet):
        if tet == t:
            solutions.append(tuple(itertools.chain.from_iterable(assign)))
            return
        if not stage_cons[tet]:
            candidates = buckets[tet]
        else:
            candidates = buckets[tet].get(partner_key(tet), ())
        for a in candidates:
            assign[tet] = a
            rec(tet + 1)
        assign[tet] = None

    rec(0)
    return solutions


# ----------------------------------------------------------------------
# integer linear algebra oracles

def laplace_determinant(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        if rows[0][c] == 0:
            continue
        minor = [[row[j] for j in range(n) if j != c] for row in rows[1:]]
        total += (-1) ** c * rows[0][c] * laplace_determinant(minor)
    return total


def minors_gcd(rows, k):
    """gcd of all k x k minors (0 if all vanish)."""
    m, n = len(rows), len(rows[0])
    g = 0
    for ri in itertools.combinations(range(m), k):
        for ci in itertools.combinations(range(n), k):
            sub = [[rows[i][j] for j in ci] for i in ri]
            g = gcd(g, abs(laplace_determinant(sub)))
    return g


def box_solve(rows, b, lo=-5, hi=5):
    """Exhaustive search for an integer solution of A x = b inside a box,
    with interval pruning on the not-yet-assigned tail."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    lo_tail = [[0] * (n + 1) for _ in range(m)]
    hi_tail = [[0] * (n + 1) for _ in range(m)]
    for r in range(m):
        for j in range(n - 1, -1, -1):
            c = rows[r][j]
            lo_c = min(c * lo, c * hi)
            hi_c = max(c * lo, c * hi)
            lo_tail[r][j] = lo_tail[r][j + 1] + lo_c
            hi_tail[r][j] = hi_tail[r][j + 1] + hi_c

    x = [0] * n

    def rec(j, partial):
        if j == n:
            return all(partial[r] == b[r] for r in range(m)) and list(x) or None
        for r in range(m):
            need = b[r] - partial[r]
            if not lo_tail[r][j] <= need <= hi_tail[r][j]:
                return None
        for val in range(lo, hi + 1):
            x[j] = val
            res = rec(j + 1, [partial[r] + rows[r][j] * val for r in range(m)])
            if res is not None:
                return res
        return None

    return rec(0, [0] * m)


# ----------------------------------------------------------------------
# relabeling isomorphisms

def relabel_doc(doc, tet_perm, vertex_perms):
    """Apply an isomorphism of the gluing data: tetrahedron i becomes
    tet_perm[i] and its vertices are relabeled by vertex_perms[i]."""
    t = doc["tets"]
    sigma_hat = [[None] * 4 for _ in range(t)]
    for i in range(t):
        for f in range(4):
            entry = doc["gluings"][i][f]
            m = [None] * 4
            for s, v in enumerate(FACE_CORNERS[f]):
                m[v] = entry["corners"][s]
            m[f] = entry["face"]
            sigma_hat[i][f] = (entry["tet"], m)

    new_gluings = [[None] * 4 for _ in range(t)]
    for i in range(t):
        rho = vertex_perms[i]
        rho_inv = [None] * 4
        for v in range(4):
            rho_inv[rho[v]] = v
        for f in range(4):
            j, m = sigma_hat[i][f]
            rho_j = vertex_perms[j]
            nf = rho[f]
            new_m = [rho_j[m[rho_inv[v]]] for v in range(4)]
            new_gluings[tet_perm[i]][nf] = {
                "tet": tet_perm[j],
                "face": new_m[nf],
                "corners": [new_m[v] for v in FACE_CORNERS[nf]],
            }
    return {"tets": t, "gluings": new_gluings}


def translate_disc(disc, tet_perm, vertex_perms):
    i, j = divmod(disc, 7)
    rho = vertex_perms[i]
    if j < 4:
        return 7 * tet_perm[i] + rho[j]
    a, b = rho[0], rho[j - 3]
    k = a + b if 0 in (a, b) else 6 - a - b
    return 7 * tet_perm[i] + 3 + k


def translate_disc_vector(vec, tet_perm, vertex_perms):
    out = [0] * len(vec)
    for disc, value in enumerate(vec):
        out[translate_disc(disc, tet_perm, vertex_perms)] = value
    return out


def translate_quad_vector(q, tet_perm, vertex_perms):
    t = len(q) // 3
    out = [0] * len(q)
    for i in range(t):
        rho = vertex_perms[i]
        for k in (1, 2, 3):
            a, b = rho[0], rho[k]
            k2 = a + b if 0 in (a, b) else 6 - a - b
            out[3 * tet_perm[i] + k2 - 1] = q[3 * i + k - 1]
    return out


def random_isomorphism(t, rng):
    tet_perm = list(range(t))
    rng.shuffle(tet_perm)
    vertex_perms = []
    for _ in range(t):
        rho = list(range(4))
        rng.shuffle(rho)
        vertex_perms.append(rho)
    return tet_perm, vertex_perms


def random_matrix(rng, max_rows, max_cols, lo=-4, hi=4):
    m = rng.randint(1, max_rows)
    n = rng.randint(1, max_cols)
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
