"""Twisted simplicial cohomology and the structural verification routines.

A p-cochain assigns to each p-simplex a rational value anchored at the
simplex's least vertex.  The twisted coboundary multiplies the 0th face term
by the edge transport, which squares to zero exactly because of the triangle
cocycle condition; this is asserted, not trusted, every time consecutive
coboundaries are built.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .linalg import QQ, RationalSparseMatrix
from .complexes import (Complex, is_subcomplex, orientable_certificate, product,
                        builtin, connected_sum)
from .weights import (WeightCocycle, gauge_normalize_on, inverse, product_system,
                      pullback, gauge_transform, tensor, component_exactness,
                      trivial_weights, find_relating_gauge)


def coboundary_matrix(complex_, w, p):
    """Matrix of the twisted coboundary C^p -> C^(p+1) in lexicographic bases."""
    rows = complex_.faces(p + 1)
    cols = complex_.faces(p) if p >= 0 else []
    col_index = complex_.face_index(p)
    entries = {}
    for r, s in enumerate(rows):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            c = col_index[face]
            if i == 0:
                entries[(r, c)] = w.weight[(s[0], s[1])]
            else:
                entries[(r, c)] = QQ(-1) ** i
    return RationalSparseMatrix(len(rows), len(cols), entries)


class TwistedComplex:
    """A complex paired with a weight cocycle and its coboundary matrices."""

    def __init__(self, complex_, weights):
        if weights.complex != complex_:
            raise ValueError("weights live on a different complex")
        weights.require_valid()
        self.complex = complex_
        self.weights = weights
        self._deltas = {}

    def coboundary(self, p):
        if p not in self._deltas:
            self._deltas[p] = coboundary_matrix(self.complex, self.weights, p)
            for q in (p - 1, p):
                if q in self._deltas and q + 1 in self._deltas:
                    product_ = self._deltas[q + 1].matmul(self._deltas[q])
                    assert product_.is_zero(), "coboundary does not square to zero"
        return self._deltas[p]


# -- cohomology of a finite cochain complex -----------------------------------


class _Reduction:
    """Representatives completing the coboundary image inside the cocycles."""

    def __init__(self, delta_out, delta_in):
        self.kernel = delta_out.nullspace_basis()
        image_rows = _column_space_rows(delta_in)
        self.image = [list(row) for row in image_rows]
        state = [list(row) for row in image_rows]
        reps = []
        for vec in self.kernel:
            if _reduce_against(state, vec) is not None:
                reps.append(vec)
        self.representatives = reps
        self.dim = len(reps)
        self._solver = None
        self._ncochains = delta_out.cols

    def coordinates(self, vec):
        """Coefficients of a cocycle in the representative basis, mod image."""
        if self._solver is None:
            cols = self.representatives + self.image
            entries = {}
            for j, v in enumerate(cols):
                for i, x in enumerate(v):
                    if x:
                        entries[(i, j)] = x
            self._solver = RationalSparseMatrix(self._ncochains, len(cols), entries)
        solution = self._solver.solve(list(vec))
        if solution is None:
            raise ValueError("vector is not a cocycle modulo coboundaries")
        return solution[:self.dim]


def _column_space_rows(matrix):
    """Deterministic basis of the column space (echelon rows of the transpose)."""
    if matrix.cols == 0 or matrix.is_zero():
        return []
    transpose = matrix.transpose()
    rows, pivots, _ = transpose._rref()
    return [[rows[r].get(c, QQ(0)) for c in range(transpose.cols)]
            for r, _ in pivots]


def _reduce_against(state, vec):
    """Reduce vec against echelon state rows; extend state if independent.

    Returns the new pivot column, or None when vec lies in the span.
    """
    work = list(vec)
    for row in state:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is not None and work[lead]:
            f = work[lead] / row[lead]
            work = [a - f * b for a, b in zip(work, row)]
    lead = next((j for j, x in enumerate(work) if x), None)
    if lead is None:
        return None
    state.append(work)
    return lead


class CohomologyResult:
    """Per-degree dimensions with representative cocycle bases."""

    def __init__(self, complex_, weights, simplex_lists, deltas, relative_to=None):
        self.complex = complex_
        self.weights = weights
        self.relative_to = relative_to
        self.simplex_lists = simplex_lists
        self.deltas = deltas
        top = len(simplex_lists) - 1
        self._reductions = []
        zero_in = RationalSparseMatrix(len(simplex_lists[0]) if simplex_lists else 0, 0)
        for p in range(top + 1):
            delta_in = self.deltas[p - 1] if p > 0 else zero_in
            self._reductions.append(_Reduction(self.deltas[p], delta_in))
        self.betti = [r.dim for r in self._reductions]
        self.bases = [r.representatives for r in self._reductions]
        self.euler_twisted = sum((-1) ** p * b for p, b in enumerate(self.betti))
        for p, reduction in enumerate(self._reductions):
            for rep in reduction.representatives:
                assert not any(self.deltas[p].matvec(rep)), "representative is not a cocycle"

    def coordinates(self, p, vec):
        return self._reductions[p].coordinates(vec)

    def dim_cochains(self, p):
        if 0 <= p < len(self.simplex_lists):
            return len(self.simplex_lists[p])
        return 0

    def __repr__(self):
        return "CohomologyResult(betti=%s)" % (self.betti,)


def cohomology(complex_, w):
    """Twisted cohomology with deterministic representative bases."""
    tw = TwistedComplex(complex_, w)
    n = complex_.dim
    if n < 0:
        return CohomologyResult(complex_, w, [], [])
    simplex_lists = [list(complex_.faces(p)) for p in range(n + 1)]
    deltas = [tw.coboundary(p) for p in range(n + 1)]
    return CohomologyResult(complex_, w, simplex_lists, deltas)


def betti_numbers(complex_, w, rank_function=None, progress=None):
    """Betti numbers by rank computations only (no representative bases)."""
    tw = TwistedComplex(complex_, w)
    n = complex_.dim
    if n < 0:
        return []
    rank_of = rank_function or (lambda m: m.rank())
    ranks = []
    for p in range(n + 1):
        delta = tw.coboundary(p)
        if progress:
            progress("rank of coboundary %d (%d x %d)" % (p, delta.rows, delta.cols))
        ranks.append(rank_of(delta))
    betti = []
    for p in range(n + 1):
        below = ranks[p - 1] if p > 0 else 0
        betti.append(len(complex_.faces(p)) - ranks[p] - below)
    return betti


def modular_rank_function(primes):
    """Rank over several primes (max of the lower bounds); probabilistic."""
    def ranker(matrix):
        best = 0
        for p in primes:
            try:
                best = max(best, matrix.rank_mod_p(p))
            except ValueError:
                continue
        return best
    return ranker


def h0_criterion(complex_, w):
    """Number of connected components on which the cocycle is exact."""
    return sum(1 for _, gauge in component_exactness(w) if gauge is not None)


# -- relative cohomology -------------------------------------------------------


def relative_cohomology(complex_, part, w):
    """Cohomology of the cochains vanishing on a subcomplex."""
    if not is_subcomplex(part, complex_):
        raise ValueError("second argument is not a subcomplex")
    tw = TwistedComplex(complex_, w)
    n = complex_.dim
    simplex_lists = []
    for p in range(n + 1):
        excluded = part.face_index(p)
        simplex_lists.append([s for s in complex_.faces(p) if s not in excluded])
    deltas = []
    for p in range(n + 1):
        full = tw.coboundary(p)
        rows = simplex_lists[p + 1] if p + 1 <= n else []
        row_pos = {s: i for i, s in enumerate(complex_.faces(p + 1))}
        col_pos = {s: i for i, s in enumerate(complex_.faces(p))}
        keep_rows = {row_pos[s]: i for i, s in enumerate(rows)}
        keep_cols = {col_pos[s]: i for i, s in enumerate(simplex_lists[p])}
        entries = {}
        for (i, j), v in full.entries.items():
            if i in keep_rows and j in keep_cols:
                entries[(keep_rows[i], keep_cols[j])] = v
        deltas.append(RationalSparseMatrix(len(rows), len(simplex_lists[p]), entries))
    return CohomologyResult(complex_, w, simplex_lists, deltas, relative_to=part)


# -- induced maps --------------------------------------------------------------


def _permutation_sign(values):
    sign = 1
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] > values[j]:
                sign = -sign
    return sign


def pullback_cochain_matrix(f, w_target, p, gauge=None):
    """Matrix of the cochain pullback C^p(target) -> C^p(source).

    Non-monotone vertex maps pick up the sorting sign and a transport factor
    re-anchoring the value at the least vertex of the source simplex's image.
    """
    src = f.source
    dst = f.target
    rows = src.faces(p)
    cols = dst.faces(p)
    col_index = dst.face_index(p)
    entries = {}
    for r, s in enumerate(rows):
        images = f.image_tuple(s)
        if len(set(images)) != len(images):
            continue
        tau = tuple(sorted(images))
        factor = QQ(_permutation_sign(images)) * w_target.transport(images[0], tau[0])
        if gauge is not None:
            factor *= gauge(s[0])
        entries[(r, col_index[tau])] = factor
    return RationalSparseMatrix(len(rows), len(cols), entries)


class InducedMap:
    """Map of twisted cohomologies induced by a simplicial map."""

    def __init__(self, source_result, target_result, matrices):
        self.source = source_result
        self.target = target_result
        self.matrices = matrices

    def matrix(self, p):
        return self.matrices[p]

    def trace(self, p):
        m = self.matrices[p]
        return sum((v for (i, j), v in m.entries.items() if i == j), QQ(0))

    def is_isomorphism(self):
        for p, m in enumerate(self.matrices):
            if m.rows != m.cols or m.rank() != m.rows:
                return False
        return True


def induced_map(f, w, source_weights=None, gauge=None):
    """Pullback f*: H(target, w) -> H(source, source_weights).

    Requires pullback(f, w) == gauge_transform(source_weights, gauge); the
    gauge defaults to the identity, in which case the pullback must match
    the declared source system edge for edge.
    """
    pulled = pullback(f, w)
    if source_weights is None:
        source_weights = pulled
    expected = source_weights if gauge is None else gauge_transform(source_weights, gauge)
    if expected != pulled:
        for e in sorted(pulled.weight):
            if pulled.weight[e] != expected.weight[e]:
                raise ValueError(
                    "gauge mismatch on edge %r: pullback %s vs declared %s"
                    % (e, pulled.weight[e], expected.weight[e]))
    source_result = cohomology(f.target, w)
    target_result = cohomology(f.source, source_weights)
    top = max(f.source.dim, f.target.dim)
    psi = [pullback_cochain_matrix(f, w, p, gauge=gauge) for p in range(top + 2)]
    tw_src = TwistedComplex(f.source, source_weights)
    tw_dst = TwistedComplex(f.target, w)
    for p in range(top + 1):
        left = tw_src.coboundary(p).matmul(psi[p])
        right = psi[p + 1].matmul(tw_dst.coboundary(p))
        assert left == right, "pullback is not a chain map in degree %d" % p
    matrices = []
    for p in range(f.source.dim + 1):
        cols = []
        if p <= f.target.dim:
            for rep in source_result.bases[p]:
                image = psi[p].matvec(rep)
                cols.append(target_result.coordinates(p, image))
        entries = {}
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if v:
                    entries[(i, j)] = v
        matrices.append(RationalSparseMatrix(
            target_result.betti[p],
            source_result.betti[p] if p <= f.target.dim else 0,
            entries))
    return InducedMap(source_result, target_result, matrices)


# -- cup product ---------------------------------------------------------------


def cup(complex_, c1, p, c2, q, w2):
    """Alexander-Whitney cup with transport: a (p+q)-cochain over the tensor.

    The front face's value is multiplied by the w2-transport pulling the back
    face's value from the joining vertex to the simplex's least vertex.
    """
    front_index = complex_.face_index(p)
    back_index = complex_.face_index(q)
    out = []
    for s in complex_.faces(p + q):
        front = s[:p + 1]
        back = s[p:]
        a = c1[front_index[front]]
        b = c2[back_index[back]]
        if a and b:
            out.append(a * w2.transport(s[0], s[p]) * b)
        else:
            out.append(QQ(0))
    return out


# -- Lefschetz numbers -----------------------------------------------------------


def lefschetz_number(f, w, gauge=None, source_weights=None):
    """Alternating trace of the induced map on twisted cohomology."""
    if f.source != f.target:
        raise ValueError("Lefschetz numbers need a self-map")
    fstar = induced_map(f, w, source_weights=source_weights or w, gauge=gauge)
    return sum((QQ(-1) ** p * fstar.trace(p) for p in range(len(fstar.matrices))), QQ(0))


def classical_lefschetz_number(f):
    """Untwisted Lefschetz number by the Hopf trace at the cochain level."""
    w = trivial_weights(f.source)
    total = QQ(0)
    for p in range(f.source.dim + 1):
        psi = pullback_cochain_matrix(f, w, p)
        total += QQ(-1) ** p * sum(
            (v for (i, j), v in psi.entries.items() if i == j), QQ(0))
    return total


# -- verification reports --------------------------------------------------------


@dataclass
class VerificationReport:
    claim: str
    passed: bool
    lhs: object = None
    rhs: object = None
    details: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self):
        return {
            "claim": self.claim,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "details": list(self.details),
            "notes": list(self.notes),
            "elapsed": self.elapsed,
        }

    def format(self):
        lines = ["%s: %s" % ("PASS" if self.passed else "FAIL", self.claim)]
        if self.lhs is not None or self.rhs is not None:
            lines.append("  left  = %s" % (self.lhs,))
            lines.append("  right = %s" % (self.rhs,))
        lines.extend("  " + d for d in self.details)
        lines.extend("  note: " + n for n in self.notes)
        lines.append("  elapsed: %.3fs" % self.elapsed)
        return "\n".join(lines)


def verify_euler(complex_, w, rank_function=None):
    start = time.perf_counter()
    betti = betti_numbers(complex_, w, rank_function)
    twisted = sum((-1) ** p * b for p, b in enumerate(betti))
    chi = complex_.euler_characteristic()
    return VerificationReport(
        claim="twisted Euler characteristic equals the simplicial one",
        passed=twisted == chi, lhs=twisted, rhs=chi,
        details=["betti: %s" % (betti,)],
        elapsed=time.perf_counter() - start)


def verify_kunneth(left, w_left, right, w_right, rank_function=None):
    start = time.perf_counter()
    prod = product(left, right)
    w_prod = product_system(prod, w_left, w_right)
    b_left = betti_numbers(left, w_left, rank_function)
    b_right = betti_numbers(right, w_right, rank_function)
    b_prod = betti_numbers(prod.complex, w_prod, rank_function)
    expected = [QQ(0)] * (len(b_left) + len(b_right) - 1 if b_left and b_right else 0)
    for p, a in enumerate(b_left):
        for q, b in enumerate(b_right):
            expected[p + q] += a * b
    expected = [int(x) for x in expected]
    padded = expected + [0] * (len(b_prod) - len(expected))
    return VerificationReport(
        claim="product Betti numbers are the convolution of the factors",
        passed=b_prod == padded, lhs=b_prod, rhs=padded,
        details=["factors: %s and %s" % (b_left, b_right)],
        elapsed=time.perf_counter() - start)


class NotOrientableError(ValueError):
    pass


def verify_poincare(complex_, w, rank_function=None):
    start = time.perf_counter()
    cert = orientable_certificate(complex_)
    if cert is None:
        raise NotOrientableError(
            "no orientation certificate: the complex is not a closed connected "
            "orientable pseudomanifold, so Poincare duality does not apply")
    n = cert.top_dimension
    forward = betti_numbers(complex_, w, rank_function)
    backward = betti_numbers(complex_, inverse(w), rank_function)
    mirrored = [backward[n - p] for p in range(n + 1)]
    return VerificationReport(
        claim="Poincare duality: betti(w)[p] = betti(1/w)[n-p]",
        passed=forward == mirrored, lhs=forward, rhs=mirrored,
        elapsed=time.perf_counter() - start)


# -- long exact sequences ---------------------------------------------------------


def _matrix_from_columns(columns, rows):
    entries = {}
    for j, col in enumerate(columns):
        for i, v in enumerate(col):
            if v:
                entries[(i, j)] = v
    return RationalSparseMatrix(rows, len(columns), entries)


def _check_exactness(dims, maps, labels):
    """image = kernel at every interior node of V_0 -> V_1 -> ... -> V_k."""
    failures = []
    for i in range(1, len(dims) - 1):
        incoming = maps[i - 1]
        outgoing = maps[i]
        composite = outgoing.matmul(incoming)
        if not composite.is_zero():
            failures.append("composite not zero at %s" % labels[i])
        if incoming.rank() + outgoing.rank() != dims[i]:
            failures.append(
                "image != kernel at %s (rank in %d + rank out %d != dim %d)"
                % (labels[i], incoming.rank(), outgoing.rank(), dims[i]))
    return failures


def _scatter(values, source_simplices, target_positions, size):
    out = [QQ(0)] * size
    for value, s in zip(values, source_simplices):
        out[target_positions[s]] = value
    return out


def _gather(values, source_positions, target_simplices):
    return [values[source_positions[s]] if s in source_positions else QQ(0)
            for s in target_simplices]


def restrict_weights(w, part):
    """The weight cocycle induced on a subcomplex."""
    return WeightCocycle(part, {e: w.weight[e] for e in part.edges()})


def les_of_pair(complex_, part, w):
    """Exactness report for the long exact sequence of the pair (X, A)."""
    start = time.perf_counter()
    rel = relative_cohomology(complex_, part, w)
    absolute = cohomology(complex_, w)
    on_part = cohomology(part, restrict_weights(w, part))
    tw = TwistedComplex(complex_, w)
    n = complex_.dim

    def abs_positions(p):
        return {s: i for i, s in enumerate(complex_.faces(p))}

    def part_betti(p):
        return on_part.betti[p] if 0 <= p <= part.dim else 0

    dims = [0]
    labels = ["0"]
    maps = [RationalSparseMatrix(rel.betti[0] if n >= 0 else 0, 0)]
    for p in range(n + 1):
        dims.extend([rel.betti[p], absolute.betti[p], part_betti(p)])
        labels.extend(["H^%d(X,A)" % p, "H^%d(X)" % p, "H^%d(A)" % p])

        cols = [absolute.coordinates(
                    p, _scatter(rep, rel.simplex_lists[p], abs_positions(p),
                                len(complex_.faces(p))))
                for rep in rel.bases[p]]
        maps.append(_matrix_from_columns(cols, absolute.betti[p]))

        cols = []
        for rep in absolute.bases[p]:
            restricted = _gather(rep, abs_positions(p), part.faces(p))
            cols.append(on_part.coordinates(p, restricted) if p <= part.dim else [])
        maps.append(_matrix_from_columns(cols, part_betti(p)))

        next_rel = rel.betti[p + 1] if p + 1 <= n else 0
        cols = []
        for rep in (on_part.bases[p] if p <= part.dim else []):
            extended = _scatter(rep, part.faces(p), abs_positions(p),
                                len(complex_.faces(p)))
            delta_vec = tw.coboundary(p).matvec(extended)
            rel_vec = _gather(delta_vec, abs_positions(p + 1),
                              rel.simplex_lists[p + 1] if p + 1 <= n else [])
            cols.append(rel.coordinates(p + 1, rel_vec) if p + 1 <= n else [])
        maps.append(_matrix_from_columns(cols, next_rel))
    dims.append(0)
    labels.append("0")

    failures = _check_exactness(dims, maps, labels)
    return VerificationReport(
        claim="long exact sequence of the pair (%s, %s) is exact"
              % (complex_.name or "X", part.name or "A"),
        passed=not failures,
        details=failures or ["exact at all %d nodes" % (len(dims) - 2)],
        elapsed=time.perf_counter() - start)


def verify_mayer_vietoris(complex_, left, right, w):
    """Exactness report for the Mayer-Vietoris sequence of a cover by two."""
    start = time.perf_counter()
    if not (is_subcomplex(left, complex_) and is_subcomplex(right, complex_)):
        raise ValueError("cover pieces must be subcomplexes")
    left_set = set(left.all_simplices())
    right_set = set(right.all_simplices())
    for s in complex_.all_simplices():
        if s not in left_set and s not in right_set:
            raise ValueError("cover misses simplex %r" % (s,))
    middle = Complex(complex_.vertex_count, sorted(left_set & right_set),
                     name="intersection")

    total = cohomology(complex_, w)
    on_left = cohomology(left, restrict_weights(w, left))
    on_right = cohomology(right, restrict_weights(w, right))
    on_middle = cohomology(middle, restrict_weights(w, middle))
    tw_left = TwistedComplex(left, restrict_weights(w, left))
    n = complex_.dim

    def positions(level, p):
        return {s: i for i, s in enumerate(level.faces(p))}

    def betti_of(result, owner, p):
        return result.betti[p] if 0 <= p <= owner.dim else 0

    dims = [0]
    labels = ["0"]
    maps = [RationalSparseMatrix(total.betti[0] if n >= 0 else 0, 0)]
    for p in range(n + 1):
        pair_dim = betti_of(on_left, left, p) + betti_of(on_right, right, p)
        dims.extend([total.betti[p], pair_dim, betti_of(on_middle, middle, p)])
        labels.extend(["H^%d(X)" % p, "H^%d(U)+H^%d(V)" % (p, p), "H^%d(UnV)" % p])

        cols = []
        for rep in total.bases[p]:
            to_left = (on_left.coordinates(
                p, _gather(rep, positions(complex_, p), left.faces(p)))
                if p <= left.dim else [])
            to_right = (on_right.coordinates(
                p, _gather(rep, positions(complex_, p), right.faces(p)))
                if p <= right.dim else [])
            cols.append(list(to_left) + list(to_right))
        maps.append(_matrix_from_columns(cols, pair_dim))

        cols = []
        for rep in (on_left.bases[p] if p <= left.dim else []):
            restricted = _gather(rep, positions(left, p), middle.faces(p))
            cols.append(on_middle.coordinates(p, restricted)
                        if p <= middle.dim else [])
        for rep in (on_right.bases[p] if p <= right.dim else []):
            restricted = _gather(rep, positions(right, p), middle.faces(p))
            value = (on_middle.coordinates(p, restricted)
                     if p <= middle.dim else [])
            cols.append([-x for x in value])
        maps.append(_matrix_from_columns(
            cols, betti_of(on_middle, middle, p)))

        next_total = total.betti[p + 1] if p + 1 <= n else 0
        cols = []
        for rep in (on_middle.bases[p] if p <= middle.dim else []):
            extended = _scatter(rep, middle.faces(p), positions(left, p),
                                len(left.faces(p)))
            delta_vec = tw_left.coboundary(p).matvec(extended)
            glued = []
            left_pos = positions(left, p + 1)
            for s in complex_.faces(p + 1):
                if s in left_pos:
                    glued.append(delta_vec[left_pos[s]])
                else:
                    glued.append(QQ(0))
            cols.append(total.coordinates(p + 1, glued) if p + 1 <= n else [])
        maps.append(_matrix_from_columns(cols, next_total))
    dims.append(0)
    labels.append("0")

    failures = _check_exactness(dims, maps, labels)
    return VerificationReport(
        claim="Mayer-Vietoris sequence of the cover is exact",
        passed=not failures,
        details=failures or ["exact at all %d nodes" % (len(dims) - 2)],
        elapsed=time.perf_counter() - start)


# -- blow-up model -------------------------------------------------------------


def blowup_model(x4, w):
    """Connected sum with the 9-vertex CP2, weights extended across the glue.

    The gluing simplices are the lexicographically first top simplices; the
    weights are gauge-normalized to 1 on the glued simplex and set to 1 on
    every edge coming from the CP2 side.
    """
    if x4.dim != 4:
        raise ValueError("blow-up model needs a 4-dimensional complex")
    cp2 = builtin("cp2_9")
    sigma_left = x4.faces(4)[0]
    sigma_right = cp2.faces(4)[0]
    normalized, _ = gauge_normalize_on(w, sigma_left)
    summed = connected_sum(x4, cp2, sigma_left, sigma_right)
    weight = {}
    for (i, j), v in normalized.weight.items():
        a, b = summed.vertex_map_left[i], summed.vertex_map_left[j]
        weight[(a, b) if a < b else (b, a)] = v
    for (i, j) in cp2.edges():
        a, b = summed.vertex_map_right[i], summed.vertex_map_right[j]
        key = (a, b) if a < b else (b, a)
        weight.setdefault(key, QQ(1))
    extended = WeightCocycle(summed.complex, weight).require_valid()
    return summed.complex, extended


def verify_blowup_dims(x4, w, rank_function=None):
    """Dimension check for blowing up a point: one extra class in degree 2."""
    start = time.perf_counter()
    cert = orientable_certificate(x4)
    if cert is None:
        raise NotOrientableError("blow-up verification needs a closed "
                                 "orientable 4-dimensional complex")
    blown, w_blown = blowup_model(x4, w)
    base = betti_numbers(x4, w, rank_function)
    total = betti_numbers(blown, w_blown, rank_function)
    expected = [b + (1 if k == 2 else 0) for k, b in enumerate(base)]
    return VerificationReport(
        claim="point blow-up adds one twisted class in degree 2",
        passed=total == expected, lhs=total, rhs=expected,
        details=["base betti: %s" % (base,)],
        notes=["topological model: connected sum with the reversed-orientation "
               "9-vertex CP2 stands in for the point blow-up"],
        elapsed=time.perf_counter() - start)


# -- canonical pair/cover scenarios for the verification suites -----------------


def standard_les_pair(name):
    """Named (complex, subcomplex) pairs used by the exactness suites."""
    from . import complexes as cx
    if name == "simplex2":
        disk = cx.simplex(2)
        boundary = cx.subcomplex(disk, [(0, 1), (0, 2), (1, 2)], name="boundary")
        return disk, boundary
    if name == "s2_4":
        sphere = cx.builtin("s2_4")
        equator = cx.subcomplex(sphere, [(1, 2), (1, 3), (2, 3)], name="equator")
        return sphere, equator
    if name == "t2_7":
        torus = cx.builtin("t2_7")
        meridian = cx.subcomplex(
            torus, [(i, (i + 1) % 7) if i < (i + 1) % 7 else ((i + 1) % 7, i)
                    for i in range(7)], name="meridian")
        return torus, meridian
    raise ValueError("unknown pair %r" % (name,))


def standard_mv_split(name):
    """Named covers (X, U, V) used by the Mayer-Vietoris suites."""
    from . import complexes as cx
    if name == "s2_4":
        sphere = cx.builtin("s2_4")
        north = cx.subcomplex(sphere, [(0, 1, 2), (0, 1, 3), (0, 2, 3)], name="north")
        south = cx.subcomplex(sphere, [(1, 2, 3)], name="south")
        return sphere, north, south
    if name == "t2_7":
        torus = cx.builtin("t2_7")
        strip = []
        i = 0
        for _ in range(7):
            strip.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
            strip.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
            i = (i + 2) % 7
        first = cx.subcomplex(torus, strip[:7], name="band1")
        second = cx.subcomplex(torus, strip[7:], name="band2")
        return torus, first, second
    if name == "trivial":
        torus = cx.builtin("t2_7")
        empty = cx.subcomplex(torus, [], name="empty")
        return torus, torus, empty
    raise ValueError("unknown split %r" % (name,))
