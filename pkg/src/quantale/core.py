"""Finite commutative integral quantales as explicit tables.

Elements are integer indices into a label list.  The order relation, the
tensor table and the derived pairwise-join table are dense matrices, so
every axiom can be (and is) checked by direct enumeration at construction
time.  A `FiniteQuantale` instance therefore always satisfies all axioms;
downstream code treats that as a precondition, not something to re-check.

Completeness of a finite lattice is equivalent to "a bottom exists and
every pair has a least upper bound", which is what gets checked (O(n^3)
instead of inspecting all 2^n subsets).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod as _int_prod

from .errors import QuantaleAxiomError, SizeBudgetError, StructureError


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the first witnessing elements, as labels."""

    axiom: str
    witness: tuple
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    violations: tuple = ()

    def axioms_failed(self) -> tuple:
        return tuple(v.axiom for v in self.violations)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
                for v in self.violations
            ],
        }


def _as_bool_matrix(leq, n):
    rows = [tuple(bool(x) for x in row) for row in leq]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"leq table must be {n}x{n}")
    return tuple(rows)


def _as_index_matrix(tensor, n):
    rows = [tuple(int(x) for x in row) for row in tensor]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"tensor table must be {n}x{n}")
    for row in rows:
        for x in row:
            if not 0 <= x < n:
                raise StructureError(f"tensor entry {x} out of range 0..{n - 1}")
    return tuple(rows)


def _check_axioms(labels, leq, tensor, unit):
    """Check every axiom; returns (violations, join_table, bottom).

    Each axiom reports at most its lexicographically first witness.  The
    join table and bottom are None when the order or lattice checks fail.
    """
    n = len(labels)
    violations = []
    seen = set()

    def add(axiom, witness, detail=""):
        if axiom not in seen:
            seen.add(axiom)
            violations.append(
                Violation(axiom, tuple(labels[i] for i in witness), detail)
            )

    rng = range(n)

    # Order axioms.
    for i in rng:
        if not leq[i][i]:
            add("order-reflexive", (i,))
            break
    for i in rng:
        for j in rng:
            if i != j and leq[i][j] and leq[j][i]:
                add("order-antisymmetric", (i, j))
                break
        else:
            continue
        break
    for i in rng:
        for j in rng:
            if not leq[i][j]:
                continue
            for k in rng:
                if leq[j][k] and not leq[i][k]:
                    add("order-transitive", (i, j, k))
                    break
            else:
                continue
            break
        else:
            continue
        break

    order_ok = not {"order-reflexive", "order-antisymmetric", "order-transitive"} & seen

    # Lattice: bottom plus binary joins (enough for a finite complete lattice).
    join = None
    bottom = None
    if order_ok:
        bottoms = [i for i in rng if all(leq[i][j] for j in rng)]
        if not bottoms:
            add("lattice-bottom", ())
        else:
            bottom = bottoms[0]
        join_rows = [[None] * n for _ in rng]
        joins_ok = True
        for i in rng:
            for j in range(i, n):
                uppers = [k for k in rng if leq[i][k] and leq[j][k]]
                least = [k for k in uppers if all(leq[k][m] for m in uppers)]
                if len(least) != 1:
                    add("lattice-join", (i, j), "no unique least upper bound")
                    joins_ok = False
                    break
                join_rows[i][j] = join_rows[j][i] = least[0]
            if not joins_ok:
                break
        if joins_ok and bottom is not None:
            join = tuple(tuple(row) for row in join_rows)

    # Tensor is a commutative monoid with the given unit.
    for i in rng:
        for j in range(i + 1, n):
            if tensor[i][j] != tensor[j][i]:
                add("tensor-commutative", (i, j))
                break
        else:
            continue
        break
    for i, j, k in itertools.product(rng, repeat=3):
        if tensor[tensor[i][j]][k] != tensor[i][tensor[j][k]]:
            add("tensor-associative", (i, j, k))
            break
    for i in rng:
        if tensor[unit][i] != i or tensor[i][unit] != i:
            add("tensor-unit", (i,))
            break

    # Distributivity over binary joins, absorption of bottom (the empty
    # join), and integrality.  Binary plus empty joins determine all
    # finite joins, so this is distributivity over arbitrary sups here.
    if join is not None:
        for u, v, w in itertools.product(rng, repeat=3):
            if tensor[u][join[v][w]] != join[tensor[u][v]][tensor[u][w]]:
                add("tensor-distributes-over-join", (u, v, w))
                break
        for u in rng:
            if tensor[u][bottom] != bottom:
                add("tensor-bottom", (u,))
                break
    if order_ok:
        for u in rng:
            if not leq[u][unit]:
                add("integral-unit-top", (u,))
                break

    return violations, join, bottom


class FiniteQuantale:
    """A validated finite quantale; treat instances as immutable values.

    Raises QuantaleAxiomError if any axiom fails, StructureError if the
    tables are malformed.  Use `validate_finite_quantale` to get a report
    instead of an exception.
    """

    def __init__(self, labels, leq, tensor, unit, *, name=None):
        labels = tuple(str(label) for label in labels)
        if not labels:
            raise StructureError("a quantale needs at least one element")
        if len(set(labels)) != len(labels):
            raise StructureError("duplicate element labels")
        n = len(labels)
        unit = int(unit)
        if not 0 <= unit < n:
            raise StructureError(f"unit index {unit} out of range")
        leq = _as_bool_matrix(leq, n)
        tensor = _as_index_matrix(tensor, n)

        violations, join, bottom = _check_axioms(labels, leq, tensor, unit)
        if violations:
            raise QuantaleAxiomError(AxiomReport(False, tuple(violations)))

        self.labels = labels
        self.unit = unit
        self.bottom = bottom
        self.name = name or "quantale[" + ",".join(labels) + "]"
        self._leq = leq
        self._tensor = tensor
        self._join = join
        self._index = {label: i for i, label in enumerate(labels)}
        # Optional semantics attached by builders: per-element numeric
        # values, and a projection from values back to element indices.
        self.element_values = None
        self.value_projection = None

    # -- quantale protocol -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def elements(self):
        return range(self.n)

    @property
    def top(self) -> int:
        return self.unit  # integral: the unit is the top element

    def leq(self, u: int, v: int) -> bool:
        return self._leq[u][v]

    def tensor(self, u: int, v: int) -> int:
        return self._tensor[u][v]

    def join(self, u: int, v: int) -> int:
        return self._join[u][v]

    def sup(self, subset) -> int:
        """Least upper bound of any iterable of elements; sup([]) is bottom."""
        acc = self.bottom
        for s in subset:
            acc = self._join[acc][s]
        return acc

    def equal(self, u, v) -> bool:
        return u == v

    def sample(self, rng) -> int:
        return rng.randrange(self.n)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise StructureError(f"unknown element label {label!r}") from None

    def format_element(self, u: int) -> str:
        return self.labels[u]

    def __repr__(self):
        return f"<FiniteQuantale {self.name} n={self.n}>"


def validate_finite_quantale(labels, leq, tensor, unit) -> AxiomReport:
    """Exhaustively check the quantale axioms on raw tables.

    Axiom failures come back in the report; malformed tables still raise
    StructureError, which is a different kind of problem than an axiom
    violation.
    """
    labels = tuple(str(label) for label in labels)
    if not labels:
        raise StructureError("a quantale needs at least one element")
    if len(set(labels)) != len(labels):
        raise StructureError("duplicate element labels")
    n = len(labels)
    unit = int(unit)
    if not 0 <= unit < n:
        raise StructureError(f"unit index {unit} out of range")
    leq = _as_bool_matrix(leq, n)
    tensor = _as_index_matrix(tensor, n)
    violations, _, _ = _check_axioms(labels, leq, tensor, unit)
    return AxiomReport(not violations, tuple(violations))


def sup(q: FiniteQuantale, subset):
    return q.sup(subset)


def tensor(q: FiniteQuantale, u, v):
    return q.tensor(u, v)


def leq(q: FiniteQuantale, u, v):
    return q.leq(u, v)


def product_quantale(quantales, *, max_size: int = 64, name=None) -> FiniteQuantale:
    """Componentwise product of finitely many finite quantales.

    The element set is the cartesian product (lexicographic order of index
    tuples); order, tensor and unit are componentwise.  The result passes
    full validation like any other finite quantale.
    """
    quantales = list(quantales)
    if not quantales:
        raise StructureError("product of an empty family is not supported")
    size = _int_prod(q.n for q in quantales)
    if size > max_size:
        raise SizeBudgetError(
            f"product would have {size} elements, above the cap {max_size}"
        )
    tuples = list(itertools.product(*[range(q.n) for q in quantales]))
    pos = {t: i for i, t in enumerate(tuples)}
    labels = ["(" + ",".join(q.labels[i] for q, i in zip(quantales, t)) + ")" for t in tuples]

    leq_table = [
        [all(q.leq(a, b) for q, a, b in zip(quantales, s, t)) for t in tuples]
        for s in tuples
    ]
    tensor_table = [
        [pos[tuple(q.tensor(a, b) for q, a, b in zip(quantales, s, t))] for t in tuples]
        for s in tuples
    ]
    unit = pos[tuple(q.unit for q in quantales)]
    result = FiniteQuantale(
        labels,
        leq_table,
        tensor_table,
        unit,
        name=name or " x ".join(q.name for q in quantales),
    )
    if all(q.element_values is not None for q in quantales):
        result.element_values = tuple(
            tuple(q.element_values[i] for q, i in zip(quantales, t)) for t in tuples
        )
    result.factors = tuple(quantales)
    return result
