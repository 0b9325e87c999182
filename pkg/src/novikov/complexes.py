"""Finite ordered simplicial complexes and the standard constructions.

Vertices of a complex are 0..n-1 and every simplex is stored as a strictly
increasing vertex tuple; the global vertex order is the one orientation and
ordering convention used throughout (coboundary signs, staircase products,
cup products).
"""

from __future__ import annotations

from collections import namedtuple
from itertools import combinations


class Complex:
    """Face-closed set of increasing vertex tuples over vertices 0..n-1."""

    def __init__(self, vertex_count, maximal_simplices, name=None, _close=True):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        self.vertex_count = vertex_count
        self.name = name
        simplices = set()
        for raw in maximal_simplices:
            simplex = tuple(sorted(raw))
            if len(set(simplex)) != len(simplex):
                raise ValueError("repeated vertex in simplex %r" % (raw,))
            if simplex and (simplex[0] < 0 or simplex[-1] >= vertex_count):
                raise ValueError("vertex out of range in simplex %r" % (raw,))
            if not simplex:
                continue
            simplices.add(simplex)
            if _close:
                for k in range(1, len(simplex)):
                    simplices.update(combinations(simplex, k))
        by_dim = {}
        for s in simplices:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._by_dim = [sorted(by_dim.get(d, ())) for d in range(max(by_dim, default=-1) + 1)]
        self._index = [
            {s: i for i, s in enumerate(level)} for level in self._by_dim
        ]

    @classmethod
    def raw(cls, vertex_count, simplices, name=None):
        """Store exactly the given simplices without closing faces (for validate)."""
        return cls(vertex_count, simplices, name=name, _close=False)

    @property
    def dim(self):
        return len(self._by_dim) - 1

    def faces(self, p):
        if 0 <= p < len(self._by_dim):
            return self._by_dim[p]
        return []

    def face_index(self, p):
        if 0 <= p < len(self._index):
            return self._index[p]
        return {}

    def has_simplex(self, simplex):
        t = tuple(sorted(simplex))
        return t in self.face_index(len(t) - 1)

    def all_simplices(self):
        for level in self._by_dim:
            yield from level

    def f_vector(self):
        return tuple(len(level) for level in self._by_dim)

    def euler_characteristic(self):
        return sum((-1) ** d * len(level) for d, level in enumerate(self._by_dim))

    def edges(self):
        return self.faces(1)

    def vertices_used(self):
        return sorted(v for (v,) in self.faces(0))

    def components(self):
        """Partition of the used vertices into edge-connected components."""
        parent = {v: v for v in self.vertices_used()}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups = {}
        for v in parent:
            groups.setdefault(find(v), []).append(v)
        return [sorted(groups[r]) for r in sorted(groups)]

    def relabeled(self, vertex_map, vertex_count, name=None):
        """New complex with vertices renamed by vertex_map (must be injective)."""
        maximal = [tuple(vertex_map[v] for v in s) for s in self.all_simplices()]
        return Complex(vertex_count, maximal, name=name)

    def __eq__(self, other):
        return (isinstance(other, Complex)
                and self.vertex_count == other.vertex_count
                and self._by_dim == other._by_dim)

    def __repr__(self):
        label = self.name or "Complex"
        return "%s(vertices=%d, f=%s)" % (label, self.vertex_count, self.f_vector())


def validate(complex_):
    """Diagnostics for the complex invariants; empty list means valid."""
    problems = []
    for p in range(complex_.dim + 1):
        for s in complex_.faces(p):
            if list(s) != sorted(set(s)):
                problems.append("simplex %r is not strictly increasing" % (s,))
            if s and (s[0] < 0 or s[-1] >= complex_.vertex_count):
                problems.append("simplex %r has a vertex out of range" % (s,))
            if len(s) != p + 1:
                problems.append("simplex %r stored at dimension %d" % (s, p))
            if p > 0:
                for face in combinations(s, p):
                    if face not in complex_.face_index(p - 1):
                        problems.append("missing face %r of %r" % (face, s))
    return problems


class SimplicialMap:
    """Vertex map under which every source simplex lands on a target simplex."""

    def __init__(self, source, target, vertex_images):
        self.source = source
        self.target = target
        if isinstance(vertex_images, dict):
            images = dict(vertex_images)
        else:
            images = {v: w for v, w in enumerate(vertex_images)}
        for (v,) in source.faces(0):
            if v not in images:
                raise ValueError("no image for vertex %d" % v)
            if not (0 <= images[v] < target.vertex_count):
                raise ValueError("image of vertex %d out of range" % v)
        self.vertex_images = images
        for s in source.all_simplices():
            image = tuple(sorted(set(images[v] for v in s)))
            if image not in target.face_index(len(image) - 1):
                raise ValueError(
                    "image %r of simplex %r is not a simplex of the target"
                    % (image, s))

    def __call__(self, vertex):
        return self.vertex_images[vertex]

    def image_tuple(self, simplex):
        return tuple(self.vertex_images[v] for v in simplex)

    def is_bijective(self):
        values = set(self.vertex_images.values())
        return (len(values) == len(self.vertex_images)
                and len(values) == len(self.target.faces(0)))

    def compose(self, inner):
        """self after inner (inner: X -> Y, self: Y -> Z)."""
        if inner.target is not self.source and inner.target != self.source:
            raise ValueError("composition mismatch")
        images = {v: self.vertex_images[w] for v, w in inner.vertex_images.items()}
        return SimplicialMap(inner.source, self.target, images)


def identity_map(complex_):
    return SimplicialMap(complex_, complex_, {v: v for (v,) in complex_.faces(0)})


OrientedManifoldCertificate = namedtuple(
    "OrientedManifoldCertificate", ["complex", "top_dimension", "orientation"])

Product = namedtuple("Product", ["complex", "proj_left", "proj_right"])

ConnectedSum = namedtuple(
    "ConnectedSum", ["complex", "vertex_map_left", "vertex_map_right"])


# -- elementary constructors -------------------------------------------------


def simplex(n, name=None):
    """The full n-simplex on vertices 0..n."""
    return Complex(n + 1, [tuple(range(n + 1))], name=name or "simplex%d" % n)


def boundary_sphere(n):
    """Boundary of the (n+1)-simplex: an n-sphere with n+2 vertices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    verts = tuple(range(n + 2))
    maximal = list(combinations(verts, n + 1))
    return Complex(n + 2, maximal, name="s%d_%d" % (n, n + 2))


def circle(k):
    """Cyclic triangulation of the circle with k vertices."""
    if k < 3:
        raise ValueError("a triangulated circle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return Complex(k, edges, name="s1_%d" % k)


def path_complex(k):
    """A path with k edges on vertices 0..k."""
    return Complex(k + 1, [(i, i + 1) for i in range(k)], name="path%d" % k)


def disjoint_union(left, right):
    shift = left.vertex_count
    maximal = list(left.all_simplices())
    maximal += [tuple(v + shift for v in s) for s in right.all_simplices()]
    return Complex(left.vertex_count + right.vertex_count, maximal)


def cone(base):
    """Cone with a fresh apex appended after all base vertices."""
    apex = base.vertex_count
    maximal = [s + (apex,) for s in base.all_simplices()]
    maximal.append((apex,))
    return Complex(base.vertex_count + 1, maximal)


def suspension(base):
    north = base.vertex_count
    south = base.vertex_count + 1
    maximal = [s + (north,) for s in base.all_simplices()]
    maximal += [s + (south,) for s in base.all_simplices()]
    maximal += [(north,), (south,)]
    return Complex(base.vertex_count + 2, maximal)


# -- staircase product --------------------------------------------------------


def _staircase_chains(a, b):
    """Monotone lattice chains (0,0) -> (a,b) with steps (1,0), (0,1), (1,1).

    These are exactly the chains in the grid poset that project onto all of
    0..a and 0..b, i.e. the product simplices carried by a fixed simplex pair.
    """
    chains = []

    def extend(chain, i, j):
        if i == a and j == b:
            chains.append(tuple(chain))
            return
        for di, dj in ((0, 1), (1, 0), (1, 1)):
            ni, nj = i + di, j + dj
            if ni <= a and nj <= b:
                chain.append((ni, nj))
                extend(chain, ni, nj)
                chain.pop()

    extend([(0, 0)], 0, 0)
    return chains


def product(left, right):
    """Staircase (ordered) triangulation of |left| x |right| with projections.

    Vertices are the pairs (u, v) in lexicographic order; simplices are the
    monotone staircase chains inside sigma x tau for simplices sigma, tau.
    """
    pair_index = {}
    for u in range(left.vertex_count):
        for v in range(right.vertex_count):
            pair_index[(u, v)] = u * right.vertex_count + v
    maximal = []
    for p in range(left.dim + 1):
        for sigma in left.faces(p):
            for q in range(right.dim + 1):
                for tau in right.faces(q):
                    for chain in _staircase_chains(p, q):
                        maximal.append(tuple(
                            pair_index[(sigma[i], tau[j])] for i, j in chain))
    prod = Complex(left.vertex_count * right.vertex_count, maximal,
                   name="(%s)x(%s)" % (left.name or "A", right.name or "B"))
    n_right = right.vertex_count
    proj_left = SimplicialMap(
        prod, left, {idx: idx // n_right for (idx,) in prod.faces(0)})
    proj_right = SimplicialMap(
        prod, right, {idx: idx % n_right for (idx,) in prod.faces(0)})
    return Product(prod, proj_left, proj_right)


# -- connected sum ------------------------------------------------------------


def connected_sum(left, right, top_left=None, top_right=None, matching=None):
    """Glue two closed pseudomanifolds along deleted top simplices.

    matching maps vertices of top_left to vertices of top_right; the default
    pairs them in increasing order.  Surviving vertices of the left complex
    keep their numbers; remaining right vertices follow in increasing order.
    """
    n = left.dim
    if right.dim != n:
        raise ValueError("dimension mismatch: %d vs %d" % (n, right.dim))
    top_left = tuple(sorted(top_left)) if top_left else left.faces(n)[0]
    top_right = tuple(sorted(top_right)) if top_right else right.faces(n)[0]
    if top_left not in left.face_index(n):
        raise ValueError("%r is not a top simplex of the left complex" % (top_left,))
    if top_right not in right.face_index(n):
        raise ValueError("%r is not a top simplex of the right complex" % (top_right,))
    if matching is None:
        matching = dict(zip(top_left, top_right))
    if (sorted(matching) != list(top_left)
            or sorted(matching.values()) != list(top_right)):
        raise ValueError("matching is not a bijection of the glued simplices")

    left_map = {v: v for v in range(left.vertex_count)}
    inverse_match = {b: a for a, b in matching.items()}
    right_map = {}
    fresh = left.vertex_count
    for v in range(right.vertex_count):
        if v in inverse_match:
            right_map[v] = inverse_match[v]
        else:
            right_map[v] = fresh
            fresh += 1
    maximal = [s for s in left.faces(n) if s != top_left]
    maximal += [tuple(sorted(right_map[v] for v in s))
                for s in right.faces(n) if s != top_right]
    total = Complex(fresh, maximal,
                    name="(%s)#(%s)" % (left.name or "A", right.name or "B"))
    return ConnectedSum(total, left_map, right_map)


# -- barycentric subdivision --------------------------------------------------


def barycentric_subdivision(base):
    """Barycentric subdivision plus the carrier map to the base complex.

    Subdivision vertices are the simplices of the base ordered by
    (dimension, lexicographic); the carrier map sends each barycenter to the
    least vertex of its carrier simplex.
    """
    cells = [s for p in range(base.dim + 1) for s in base.faces(p)]
    cell_index = {s: i for i, s in enumerate(cells)}
    chains = []

    def extend(chain, top):
        chains.append(tuple(cell_index[s] for s in chain))
        for k in range(1, len(top)):
            for face in combinations(top, k):
                extend(chain + [face], face)

    for p in range(base.dim + 1):
        for s in base.faces(p):
            extend([s], s)
    subdivided = Complex(len(cells), chains,
                         name="sd(%s)" % (base.name or "X"))
    carrier = SimplicialMap(
        subdivided, base, {cell_index[s]: s[0] for s in cells})
    return subdivided, carrier


# -- mapping torus ------------------------------------------------------------


def mapping_torus(fiber, automorphism, layers=3):
    """Mapping torus of a simplicial automorphism via staircase prism layers.

    Uses at least three layers of fiber x [0,1] so the top-to-bottom gluing
    (x, layers) ~ (f(x), 0) is simplicial with no vertex collisions.
    """
    if automorphism.source is not fiber and automorphism.source != fiber:
        raise ValueError("automorphism must be a self-map of the fiber")
    if not automorphism.is_bijective():
        raise ValueError("mapping torus needs a bijective vertex map")
    for p in range(fiber.dim + 1):
        images = {tuple(sorted(automorphism.image_tuple(s)))
                  for s in fiber.faces(p)}
        if images != set(fiber.faces(p)):
            raise ValueError("vertex map is not a simplicial automorphism")
    if layers < 3:
        raise ValueError("need at least three prism layers")
    prism = product(fiber, path_complex(layers))
    n_layers = layers + 1

    def pair(v, t):
        return v * n_layers + t

    glue = {}
    for v in range(fiber.vertex_count):
        glue[pair(v, layers)] = pair(automorphism(v), 0)
    survivors = sorted(
        idx for (idx,) in prism.complex.faces(0) if idx not in glue)
    renumber = {old: new for new, old in enumerate(survivors)}

    def image(old):
        return renumber[glue.get(old, old)]

    maximal = {tuple(sorted(image(v) for v in s))
               for s in prism.complex.faces(prism.complex.dim)}
    return Complex(len(survivors), sorted(maximal),
                   name="torus(%s)" % (fiber.name or "F"))


# -- subcomplex helpers -------------------------------------------------------


def subcomplex(ambient, simplices, name=None):
    """The subcomplex of the ambient complex generated by the given simplices."""
    chosen = []
    for raw in simplices:
        t = tuple(sorted(raw))
        if not ambient.has_simplex(t):
            raise ValueError("%r is not a simplex of the ambient complex" % (raw,))
        chosen.append(t)
    return Complex(ambient.vertex_count, chosen, name=name)


def full_subcomplex(ambient, vertices, name=None):
    """All simplices of the ambient complex spanned by the given vertices."""
    chosen = set(vertices)
    simplices = [s for s in ambient.all_simplices() if set(s) <= chosen]
    return Complex(ambient.vertex_count, simplices, name=name)


def is_subcomplex(part, ambient):
    if part.vertex_count != ambient.vertex_count:
        return False
    return all(ambient.has_simplex(s) for s in part.all_simplices())


# -- orientation certificate --------------------------------------------------


def orientable_certificate(complex_):
    """Certificate for a closed connected orientable pseudomanifold, else None.

    Signs are found by greedy propagation across shared codimension-1 faces;
    a sign contradiction (as for the projective plane) returns None.
    """
    n = complex_.dim
    if n < 1:
        return None
    tops = complex_.faces(n)
    # purity: every simplex lies in some top simplex
    covered = set()
    for s in tops:
        for k in range(1, len(s) + 1):
            covered.update(combinations(s, k))
    for s in complex_.all_simplices():
        if s not in covered:
            return None
    incidence = {}
    for t_idx, s in enumerate(tops):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            incidence.setdefault(face, []).append((t_idx, (-1) ** i))
    for holders in incidence.values():
        if len(holders) != 2:
            return None
    signs = {}
    stack = [0]
    signs[0] = 1
    while stack:
        t_idx = stack.pop()
        s = tops[t_idx]
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            (a, sa), (b, sb) = incidence[face]
            other, s_other = (b, sb) if a == t_idx else (a, sa)
            s_self = sa if a == t_idx else sb
            needed = -signs[t_idx] * s_self * s_other
            if other in signs:
                if signs[other] != needed:
                    return None
            else:
                signs[other] = needed
                stack.append(other)
    if len(signs) != len(tops):
        return None  # not strongly connected
    orientation = [signs[i] for i in range(len(tops))]
    return OrientedManifoldCertificate(complex_, n, orientation)


# -- builtin manifold catalog -------------------------------------------------

_T2_7_FACETS = sorted(
    tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)
) + sorted(
    tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))) for i in range(7)
)

_RP2_6_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 4, 5), (0, 3, 4),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]

# 9-vertex triangulation of the complex projective plane (0-based labels).
_CP2_9_FACETS = [
    (0, 1, 3, 4, 5), (1, 2, 3, 4, 5), (0, 2, 3, 4, 5),
    (0, 1, 3, 4, 8), (1, 2, 4, 5, 6), (0, 2, 3, 5, 7),
    (1, 2, 3, 5, 8), (0, 2, 3, 4, 6), (0, 1, 4, 5, 7),
    (0, 2, 4, 5, 8), (0, 1, 3, 5, 6), (1, 2, 3, 4, 7),
    (3, 4, 6, 7, 8), (4, 5, 6, 7, 8), (3, 5, 6, 7, 8),
    (2, 3, 4, 6, 7), (0, 4, 5, 7, 8), (1, 3, 5, 6, 8),
    (2, 4, 5, 6, 8), (0, 3, 5, 6, 7), (1, 3, 4, 7, 8),
    (2, 3, 5, 7, 8), (0, 3, 4, 6, 8), (1, 4, 5, 6, 7),
    (0, 1, 2, 6, 7), (0, 1, 2, 7, 8), (0, 1, 2, 6, 8),
    (0, 1, 5, 6, 7), (1, 2, 3, 7, 8), (0, 2, 4, 6, 8),
    (0, 2, 5, 7, 8), (0, 1, 3, 6, 8), (1, 2, 4, 6, 7),
    (1, 2, 5, 6, 8), (0, 2, 3, 6, 7), (0, 1, 4, 7, 8),
]

_BUILTIN_NAMES = ("s1_3", "s2_4", "t2_7", "rp2_6", "cp2_9")


def builtin(name):
    """One of the shipped standard triangulations by name."""
    if name == "s1_3":
        return circle(3)
    if name == "s2_4":
        return boundary_sphere(2)
    if name == "t2_7":
        return Complex(7, _T2_7_FACETS, name="t2_7")
    if name == "rp2_6":
        return Complex(6, _RP2_6_FACETS, name="rp2_6")
    if name == "cp2_9":
        return Complex(9, _CP2_9_FACETS, name="cp2_9")
    raise ValueError("unknown builtin %r (have %s)" % (name, ", ".join(_BUILTIN_NAMES)))


def builtin_names():
    return _BUILTIN_NAMES
