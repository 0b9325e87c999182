"""Weight cocycles: rank-1 local systems with positive rational edge transports.

A weight cocycle is the discrete form of a closed 1-form: each increasing
edge (i, j) carries a positive rational w(i, j) transporting fiber values
from vertex j to vertex i, and w(a, b) * w(b, c) = w(a, c) holds on every
triangle.  Gauge transforms, tensor products, inverses and pullbacks mirror
the corresponding operations on closed 1-forms.
"""

from __future__ import annotations

from .linalg import QQ, rational


class WeightCocycle:
    """Positive rational weights on the edges of a fixed complex."""

    def __init__(self, complex_, weight):
        self.complex = complex_
        edges = complex_.edges()
        cleaned = {}
        for (i, j), value in weight.items():
            if i > j:
                i, j = j, i
                value = 1 / rational(value)
            cleaned[(i, j)] = rational(value)
        missing = [e for e in edges if e not in cleaned]
        if missing:
            raise ValueError("missing weight for edges %s" % (missing[:5],))
        extra = [e for e in cleaned if e not in complex_.face_index(1)]
        if extra:
            raise ValueError("weights on non-edges %s" % (extra[:5],))
        for e, value in cleaned.items():
            if value <= 0:
                raise ValueError("weight on edge %r must be positive" % (e,))
        self.weight = cleaned

    def transport(self, i, j):
        """Parallel transport factor moving a fiber value from j to i."""
        if i == j:
            return QQ(1)
        if i < j:
            return self.weight[(i, j)]
        return 1 / self.weight[(j, i)]

    def require_valid(self):
        problems = check_cocycle(self)
        if problems:
            raise ValueError("invalid weight cocycle: %s" % problems[0])
        return self

    def __eq__(self, other):
        return (isinstance(other, WeightCocycle)
                and self.complex == other.complex
                and self.weight == other.weight)

    def __repr__(self):
        return "WeightCocycle(%d edges on %r)" % (len(self.weight), self.complex)


class GaugeFunction:
    """Positive rational rescaling of the vertex fibers."""

    def __init__(self, complex_, value):
        self.complex = complex_
        if isinstance(value, dict):
            values = {v: rational(x) for v, x in value.items()}
        else:
            values = {v: rational(x) for v, x in enumerate(value)}
        for (v,) in complex_.faces(0):
            if v not in values:
                raise ValueError("no gauge value at vertex %d" % v)
            if values[v] <= 0:
                raise ValueError("gauge value at vertex %d must be positive" % v)
        self.value = values

    def __call__(self, vertex):
        return self.value[vertex]

    def __eq__(self, other):
        return (isinstance(other, GaugeFunction)
                and self.complex == other.complex
                and self.value == other.value)


def trivial_weights(complex_):
    return WeightCocycle(complex_, {e: QQ(1) for e in complex_.edges()})


def trivial_gauge(complex_):
    return GaugeFunction(complex_, {v: QQ(1) for (v,) in complex_.faces(0)})


def check_cocycle(w):
    """Triangle-condition diagnostics; empty list means the cocycle is valid."""
    problems = []
    for (a, b, c) in w.complex.faces(2):
        lhs = w.weight[(a, b)] * w.weight[(b, c)]
        rhs = w.weight[(a, c)]
        if lhs != rhs:
            problems.append(
                "triangle (%d,%d,%d): w(%d,%d)*w(%d,%d) = %s != %s = w(%d,%d)"
                % (a, b, c, a, b, b, c, lhs, rhs, a, c))
    return problems


def component_exactness(w):
    """Per edge-connected component: the trivializing gauge or None.

    Solves on a spanning tree and checks that every off-tree edge closes up;
    returns a list of (component vertices, gauge dict or None).
    """
    by_vertex = {}
    for i, j in w.complex.edges():
        by_vertex.setdefault(i, []).append(j)
        by_vertex.setdefault(j, []).append(i)
    results = []
    for comp in w.complex.components():
        root = comp[0]
        values = {root: QQ(1)}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in by_vertex.get(v, ()):
                if u not in values:
                    # w(i, j) = u(i)^-1 u(j) along tree edges
                    if v < u:
                        values[u] = values[v] * w.weight[(v, u)]
                    else:
                        values[u] = values[v] / w.weight[(u, v)]
                    stack.append(u)
        gauge = dict(values)
        for i, j in w.complex.edges():
            if i in values and w.weight[(i, j)] != values[j] / values[i]:
                gauge = None
                break
        results.append((comp, gauge))
    return results


def is_exact(w):
    """The gauge u with w(i,j) = u(i)^-1 u(j) on every edge, or None."""
    values = {}
    for _, gauge in component_exactness(w):
        if gauge is None:
            return None
        values.update(gauge)
    return GaugeFunction(w.complex, values)


def gauge_transform(w, u):
    if u.complex != w.complex:
        raise ValueError("gauge lives on a different complex")
    weight = {(i, j): v / u(i) * u(j) for (i, j), v in w.weight.items()}
    return WeightCocycle(w.complex, weight)


def gauge_normalize_on(w, vertices):
    """Cohomologous cocycle equal to 1 on every edge inside the vertex set.

    The set must induce a connected, gauge-trivializable full subcomplex;
    a non-closing loop raises with the offending edge named.
    """
    chosen = sorted(set(vertices))
    inside = [e for e in w.complex.edges() if e[0] in set(chosen) and e[1] in set(chosen)]
    if not chosen:
        raise ValueError("empty vertex set")
    adjacency = {}
    for i, j in inside:
        adjacency.setdefault(i, []).append(j)
        adjacency.setdefault(j, []).append(i)
    root = chosen[0]
    values = {root: QQ(1)}
    stack = [root]
    while stack:
        v = stack.pop()
        for n in adjacency.get(v, ()):
            if n not in values:
                if v < n:
                    values[n] = values[v] * w.weight[(v, n)]
                else:
                    values[n] = values[v] / w.weight[(n, v)]
                stack.append(n)
    unreached = [v for v in chosen if v not in values]
    if unreached:
        raise ValueError("vertex set is not connected: %s unreachable" % unreached[:5])
    for i, j in inside:
        if w.weight[(i, j)] != values[j] / values[i]:
            raise ValueError(
                "cannot trivialize: loop through edge (%d, %d) has holonomy %s"
                % (i, j, w.weight[(i, j)] * values[i] / values[j]))
    gauge_values = {v: QQ(1) for (v,) in w.complex.faces(0)}
    for v in chosen:
        gauge_values[v] = 1 / values[v]
    gauge = GaugeFunction(w.complex, gauge_values)
    return gauge_transform(w, gauge), gauge


def from_integral_class(complex_, exponents, base):
    """Weights t^m(i,j) from an additive integer cocycle m and base t > 0."""
    t = rational(base)
    if t <= 0:
        raise ValueError("base must be positive")
    m = {}
    for (i, j), value in exponents.items():
        if i > j:
            i, j, value = j, i, -value
        m[(i, j)] = int(value)
    for e in complex_.edges():
        if e not in m:
            raise ValueError("missing exponent for edge %r" % (e,))
    for (a, b, c) in complex_.faces(2):
        if m[(a, b)] + m[(b, c)] != m[(a, c)]:
            raise ValueError(
                "additive cocycle condition fails on triangle (%d,%d,%d)" % (a, b, c))
    weight = {e: t ** m[e] for e in complex_.edges()}
    return WeightCocycle(complex_, weight)


def tensor(w1, w2):
    if w1.complex != w2.complex:
        raise ValueError("tensor needs cocycles on the same complex")
    return WeightCocycle(
        w1.complex, {e: w1.weight[e] * w2.weight[e] for e in w1.weight})


def inverse(w):
    return WeightCocycle(w.complex, {e: 1 / v for e, v in w.weight.items()})


def pullback(f, w):
    """Pullback along a simplicial map; collapsed edges get weight 1."""
    if w.complex != f.target:
        raise ValueError("cocycle lives on a different complex than the map target")
    weight = {}
    for (i, j) in f.source.edges():
        a, b = f(i), f(j)
        weight[(i, j)] = QQ(1) if a == b else w.transport(a, b)
    return WeightCocycle(f.source, weight)


def product_system(prod, w_left, w_right):
    """Product local system on a staircase product (tensor of the pullbacks)."""
    return tensor(pullback(prod.proj_left, w_left),
                  pullback(prod.proj_right, w_right))


def holonomy(w, loop):
    """Ordered product of edge transports around a closed vertex loop."""
    if len(loop) < 2 or loop[0] != loop[-1]:
        raise ValueError("loop must start and end at the same vertex")
    total = QQ(1)
    for a, b in zip(loop, loop[1:]):
        if a == b:
            continue
        edge = (a, b) if a < b else (b, a)
        if edge not in w.complex.face_index(1):
            raise ValueError("loop step (%d, %d) is not an edge" % (a, b))
        total *= w.weight[edge] if a < b else 1 / w.weight[edge]
    return total


def find_relating_gauge(w_from, w_to):
    """Gauge u with gauge_transform(w_from, u) = w_to, or None."""
    ratio = tensor(w_to, inverse(w_from))
    u = is_exact(ratio)
    if u is None:
        return None
    assert gauge_transform(w_from, u) == w_to
    return u


def integral_cocycle_basis(complex_):
    """Integer vectors spanning the additive edge cocycles (triangle-closed).

    Kernel of the untwisted coboundary on 1-cochains, cleared to integers;
    indexed like complex_.edges().
    """
    from .linalg import RationalSparseMatrix
    edges = complex_.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    triangles = complex_.faces(2)
    entries = {}
    for r, (a, b, c) in enumerate(triangles):
        entries[(r, edge_index[(b, c)])] = QQ(1)
        entries[(r, edge_index[(a, c)])] = QQ(-1)
        entries[(r, edge_index[(a, b)])] = QQ(1)
    matrix = RationalSparseMatrix(len(triangles), len(edges), entries)
    basis = []
    for vec in matrix.nullspace_basis():
        scale = 1
        for x in vec:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        basis.append([int(x * scale) for x in vec])
    return basis


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def holonomy_class_weights(complex_, base):
    """Weights with nontrivial holonomy: the first non-exact integral class.

    Raises when every class is exact (simply connected complexes).
    """
    edges = complex_.edges()
    for vec in integral_cocycle_basis(complex_):
        exponents = {e: x for e, x in zip(edges, vec)}
        candidate = from_integral_class(complex_, exponents, base)
        if is_exact(candidate) is None:
            return candidate
    raise ValueError("every weight cocycle on this complex is exact")


def random_gauge(complex_, rng, bound=5):
    values = {v: QQ(rng.randint(1, bound), rng.randint(1, bound))
              for (v,) in complex_.faces(0)}
    return GaugeFunction(complex_, values)


def random_weight_cocycle(complex_, rng, bases=(2, "3/2", 3, "5/3", 5)):
    """Random cocycle: integral-class character followed by a random gauge."""
    edges = complex_.edges()
    exponents = {e: 0 for e in edges}
    for vec in integral_cocycle_basis(complex_):
        coeff = rng.randint(-2, 2)
        if coeff:
            for e, x in zip(edges, vec):
                exponents[e] += coeff * x
    base = rational(rng.choice(list(bases)))
    system = from_integral_class(complex_, exponents, base)
    return gauge_transform(system, random_gauge(complex_, rng))
