"""Categories enriched over a quantale, as explicit hom matrices.

A category here is a finite point set plus an n x n matrix of quantale
elements a(x, y) subject to

    VC1:  unit <= a(x, x)          (forces a(x, x) = unit when integral)
    VC2:  a(x, z) * a(z, y) <= a(x, y)

Bridges convert familiar structures -- preorders, extended
quasi-pseudometrics, fuzzy quasi-pseudometrics -- into categories over
the matching quantale, validating the source structure's own axioms
first and reporting violations in the source vocabulary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arith import EXT_ZERO, ExtNonNeg, ext
from .catalog import two
from .continuous import LAWVERE, DDFQuantale, ProductQuantale
from .ddf import UNIT_DDF, StepDDF
from .errors import BridgeError, SizeBudgetError, StructureError


@dataclass(frozen=True)
class VCatViolation:
    axiom: str
    points: tuple
    lhs: object = None
    rhs: object = None

    def describe(self, quantale) -> str:
        fmt = quantale.format_element
        sides = ""
        if self.lhs is not None:
            sides = f": {fmt(self.lhs)} is not below {fmt(self.rhs)}"
        return f"{self.axiom} at {self.points}{sides}"


@dataclass(frozen=True)
class VCategory:
    quantale: object
    points: tuple
    matrix: tuple

    @property
    def n(self) -> int:
        return len(self.points)

    def entry(self, i: int, j: int):
        return self.matrix[i][j]

    def point_index(self, label: str) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise StructureError(f"unknown point {label!r}") from None


def make_category(quantale, points, matrix) -> VCategory:
    points = tuple(str(p) for p in points)
    matrix = tuple(tuple(row) for row in matrix)
    if len(matrix) != len(points) or any(len(r) != len(points) for r in matrix):
        raise StructureError("hom matrix must be square over the point set")
    return VCategory(quantale, points, matrix)


def check_vcategory(c: VCategory) -> list:
    """All VC1/VC2 violations, in lexicographic point order."""
    q = c.quantale
    out = []
    for x in range(c.n):
        if not q.leq(q.unit, c.matrix[x][x]):
            out.append(VCatViolation("VC1", (c.points[x],), q.unit, c.matrix[x][x]))
    for x, z, y in itertools.product(range(c.n), repeat=3):
        lhs = q.tensor(c.matrix[x][z], c.matrix[z][y])
        if not q.leq(lhs, c.matrix[x][y]):
            out.append(
                VCatViolation(
                    "VC2", (c.points[x], c.points[z], c.points[y]), lhs, c.matrix[x][y]
                )
            )
    return out


def is_separated(c: VCategory) -> bool:
    q = c.quantale
    for x, y in itertools.combinations(range(c.n), 2):
        if q.leq(q.unit, c.matrix[x][y]) and q.leq(q.unit, c.matrix[y][x]):
            return False
    return True


def is_symmetric(c: VCategory) -> bool:
    q = c.quantale
    return all(
        q.equal(c.matrix[x][y], c.matrix[y][x])
        for x in range(c.n)
        for y in range(x + 1, c.n)
    )


def aggregate_category(F, c: VCategory):
    """Post-compose the hom matrix with F; returns (category, violations).

    The violation list is empty exactly when the image is a category over
    F's codomain.
    """
    image = make_category(
        F.codomain, c.points, [[F(e) for e in row] for row in c.matrix]
    )
    return image, check_vcategory(image)


def product_category(cats, *, max_points: int = 64) -> VCategory:
    """Pointwise product: points are tuples, homs are entrywise tuples."""
    cats = list(cats)
    if not cats:
        raise StructureError("product of an empty family is not supported")
    total = 1
    for c in cats:
        total *= c.n
    if total > max_points:
        raise SizeBudgetError(f"{total} product points exceed the cap {max_points}")
    quantale = ProductQuantale([c.quantale for c in cats])
    pts = list(itertools.product(*[range(c.n) for c in cats]))
    labels = ["(" + ",".join(c.points[i] for c, i in zip(cats, t)) + ")" for t in pts]
    matrix = [
        [tuple(c.matrix[s[k]][t[k]] for k, c in enumerate(cats)) for t in pts]
        for s in pts
    ]
    return make_category(quantale, labels, matrix)


def diagonal_category(cats) -> VCategory:
    """Same point set, entrywise tuple of each structure's hom."""
    cats = list(cats)
    if not cats:
        raise StructureError("diagonal of an empty family is not supported")
    points = cats[0].points
    for c in cats[1:]:
        if c.points != points:
            raise StructureError("diagonal needs matching point sets")
    quantale = ProductQuantale([c.quantale for c in cats])
    n = len(points)
    matrix = [
        [tuple(c.matrix[i][j] for c in cats) for j in range(n)] for i in range(n)
    ]
    return make_category(quantale, points, matrix)


def coordinate_category(c: VCategory, i: int) -> VCategory:
    """Project a product-quantale category onto its i-th coordinate."""
    q = c.quantale
    if not isinstance(q, ProductQuantale):
        raise StructureError("coordinate projection needs a product quantale")
    if not 0 <= i < q.arity:
        raise StructureError(f"coordinate {i} out of range 0..{q.arity - 1}")
    matrix = [[entry[i] for entry in row] for row in c.matrix]
    return make_category(q.factors[i], c.points, matrix)


# -- bridges -----------------------------------------------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    points: tuple
    entries: tuple  # ExtNonNeg values

    @property
    def n(self) -> int:
        return len(self.points)


def distance_matrix(points, rows) -> DistanceMatrix:
    points = tuple(str(p) for p in points)
    entries = tuple(tuple(ext(v) for v in row) for row in rows)
    if len(entries) != len(points) or any(len(r) != len(points) for r in entries):
        raise StructureError("distance matrix must be square over the point set")
    return DistanceMatrix(points, entries)


def check_quasi_pseudometric(d: DistanceMatrix) -> list:
    """Zero self-distance and the triangle inequality, metric vocabulary."""
    out = []
    for x in range(d.n):
        if d.entries[x][x] != EXT_ZERO:
            out.append(
                VCatViolation("zero-self-distance", (d.points[x],), d.entries[x][x], EXT_ZERO)
            )
    for x, z, y in itertools.product(range(d.n), repeat=3):
        rhs = d.entries[x][z] + d.entries[z][y]
        if not d.entries[x][y] <= rhs:
            out.append(
                VCatViolation(
                    "triangle-inequality",
                    (d.points[x], d.points[z], d.points[y]),
                    d.entries[x][y],
                    rhs,
                )
            )
    return out


def qpm_bridge(d: DistanceMatrix) -> VCategory:
    """Extended quasi-pseudometric -> category over the Lawvere quantale."""
    bad = check_quasi_pseudometric(d)
    if bad:
        raise BridgeError(
            "not an extended quasi-pseudometric: " + bad[0].describe(LAWVERE),
            witness=bad[0],
        )
    return make_category(LAWVERE, d.points, d.entries)


def category_to_distance(c: VCategory) -> DistanceMatrix:
    return DistanceMatrix(c.points, c.matrix)


def preorder_bridge(points, pairs) -> VCategory:
    """Reflexive transitive relation -> category over the two-element quantale.

    Reflexivity is VC1 and transitivity is exactly VC2 over {0, 1}, so
    violations are reported in relation vocabulary.
    """
    points = tuple(str(p) for p in points)
    idx = {p: i for i, p in enumerate(points)}
    rel = [[False] * len(points) for _ in points]
    for a, b in pairs:
        a, b = str(a), str(b)
        if a not in idx or b not in idx:
            raise StructureError(f"pair ({a},{b}) mentions an unknown point")
        rel[idx[a]][idx[b]] = True
    for i, p in enumerate(points):
        if not rel[i][i]:
            raise BridgeError(f"relation is not reflexive at {p}", witness=(p,))
    for x, z, y in itertools.product(range(len(points)), repeat=3):
        if rel[x][z] and rel[z][y] and not rel[x][y]:
            raise BridgeError(
                "relation is not transitive at "
                f"({points[x]},{points[z]},{points[y]})",
                witness=(points[x], points[z], points[y]),
            )
    q = two()
    matrix = [[1 if rel[i][j] else 0 for j in range(len(points))] for i in range(len(points))]
    return make_category(q, points, matrix)


@dataclass(frozen=True)
class FuzzyMetricFamily:
    points: tuple
    entries: tuple  # StepDDF values
    tnorm: str

    @property
    def n(self) -> int:
        return len(self.points)


def fuzzy_family(points, rows, tnorm: str) -> FuzzyMetricFamily:
    points = tuple(str(p) for p in points)
    entries = tuple(tuple(rows[i][j] for j in range(len(points))) for i in range(len(points)))
    for row in entries:
        for e in row:
            if not isinstance(e, StepDDF):
                raise StructureError("fuzzy family entries must be step functions")
    return FuzzyMetricFamily(points, entries, tnorm)


def check_fuzzy_qpm(fam: FuzzyMetricFamily) -> list:
    """Fuzzy quasi-pseudometric axioms for a step-function family.

    Value 0 at time 0 and left-continuity are structural in the step
    representation, so what remains is full membership on the diagonal
    for positive times and the shifted triangle law, which is exactly
    VC2 under convolution.
    """
    q = DDFQuantale(fam.tnorm)
    out = []
    for x in range(fam.n):
        if fam.entries[x][x] != UNIT_DDF:
            out.append(
                VCatViolation(
                    "self-distance-membership", (fam.points[x],), fam.entries[x][x], UNIT_DDF
                )
            )
    for x, z, y in itertools.product(range(fam.n), repeat=3):
        lhs = q.tensor(fam.entries[x][z], fam.entries[z][y])
        if not lhs.leq(fam.entries[x][y]):
            out.append(
                VCatViolation(
                    "shifted-triangle",
                    (fam.points[x], fam.points[z], fam.points[y]),
                    lhs,
                    fam.entries[x][y],
                )
            )
    return out


def fuzzy_bridge(fam: FuzzyMetricFamily) -> VCategory:
    """Fuzzy quasi-pseudometric -> category over the convolution quantale.

    The value at infinity of every entry is the supremum of its finite
    values by construction of the step representation, so the bridge
    never has to adjust it.
    """
    bad = check_fuzzy_qpm(fam)
    if bad:
        q = DDFQuantale(fam.tnorm)
        raise BridgeError(
            "not a fuzzy quasi-pseudometric: " + bad[0].describe(q), witness=bad[0]
        )
    return make_category(DDFQuantale(fam.tnorm), fam.points, fam.entries)


def category_to_fuzzy(c: VCategory, tnorm: str) -> FuzzyMetricFamily:
    return FuzzyMetricFamily(c.points, c.matrix, tnorm)
