"""Classification of maps between quantales.

The central question: given F from one quantale to another, does
post-composing every enriched category's hom matrix with F again yield an
enriched category?  On finite carriers that property, plain laxity, and
preservation of asymmetric triangle triplets (with the unit fixed) are
provably the same thing, and `verify_equivalences` literally checks the
agreement for every single function between two small quantales, against
a brute-force enumeration of all hom matrices.

Verdicts are three-valued: `holds_exhaustive` when the whole (finite)
domain was enumerated, `holds_on_samples` when only seeded samples plus
fixed structured probes were tried, and `fails` with a concrete witness.
A sampled pass is never reported as a proof.  Witnesses on finite domains
are lexicographically minimal in element order; on sampled domains they
are the first failure in the fixed probe-then-random order, so reruns
with the same seed reproduce them byte for byte.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import EXT_ZERO, INF, ExtNonNeg, ext
from .continuous import (
    LAWVERE,
    DDFQuantale,
    LawvereQuantale,
    PointwiseDDFQuantale,
    ProductQuantale,
    UnitIntervalQuantale,
)
from .core import FiniteQuantale
from .ddf import UNIT_DDF, ZERO_DDF, StepDDF, unit_jump
from .errors import (
    DDFError,
    DomainError,
    SizeBudgetError,
    StructureError,
    UnsupportedOperationError,
)
from .tnorms import as_unit

HOLDS_EXHAUSTIVE = "holds_exhaustive"
HOLDS_ON_SAMPLES = "holds_on_samples"
FAILS = "fails"


@dataclass(frozen=True)
class Witness:
    check: str
    elements: tuple
    lhs: object = None
    rhs: object = None
    note: str = ""


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAILS

    @property
    def exhaustive(self) -> bool:
        return self.status == HOLDS_EXHAUSTIVE


def _holds(exhaustive: bool) -> Verdict:
    return Verdict(HOLDS_EXHAUSTIVE if exhaustive else HOLDS_ON_SAMPLES)


def _fails(check, elements, lhs=None, rhs=None, note="") -> Verdict:
    return Verdict(FAILS, Witness(check, tuple(elements), lhs, rhs, note))


def combine(*verdicts: Verdict) -> Verdict:
    """First failure wins; otherwise exhaustive only if every part was."""
    for v in verdicts:
        if not v.ok:
            return v
    if all(v.exhaustive for v in verdicts):
        return Verdict(HOLDS_EXHAUSTIVE)
    return Verdict(HOLDS_ON_SAMPLES)


# ---------------------------------------------------------------------------
# Morphism specifications
# ---------------------------------------------------------------------------


@dataclass
class MorphismSpec:
    """A candidate map between two quantales.

    `fn` maps domain elements to codomain elements.  `table` is set for
    finite lookup morphisms (images indexed like the domain); `rule` is
    the raw tuple evaluator behind a numeric rule, kept so the rule can
    be re-bound, extended or lifted.
    """

    name: str
    domain: object
    codomain: object
    fn: object
    table: tuple | None = None
    rule: object = None

    def __call__(self, u):
        return self.fn(u)


def table_morphism(V: FiniteQuantale, W, images, *, name=None) -> MorphismSpec:
    images = tuple(int(i) for i in images)
    if len(images) != V.n:
        raise DomainError(f"table has {len(images)} entries for {V.n} elements")
    wn = W.n if hasattr(W, "n") else None
    if wn is not None and any(not 0 <= i < wn for i in images):
        raise DomainError("table image out of codomain range")
    return MorphismSpec(
        name or "table", V, W, lambda u: images[u], table=images
    )


def identity_morphism(V) -> MorphismSpec:
    return MorphismSpec("identity", V, V, lambda u: u)


# -- numeric rules -----------------------------------------------------------
#
# Lawvere-valued rules work on tuples of ExtNonNeg; unit-interval rules on
# tuples of Fractions in [0, 1].  Every rule is exact -- no floats.


def _parse_params(token: str):
    if ":" not in token:
        return token, ()
    head, rest = token.split(":", 1)
    return head, tuple(rest.split(","))


def _lawvere_rule(token: str):
    head, params = _parse_params(token)
    if head == "ext":
        inner = _lawvere_rule(token.split(":", 1)[1])
        return extend_rule(inner)
    if head == "sum" and not params:
        def _sum(xs):
            total = EXT_ZERO
            for x in xs:
                total = total + x
            return total
        return _sum
    if head == "max" and not params:
        return lambda xs: max(xs)
    if head == "min" and not params:
        return lambda xs: min(xs)
    if head == "wsum":
        weights = tuple(Fraction(p) for p in params)
        if any(w < 0 for w in weights):
            raise UnsupportedOperationError("wsum weights must be nonnegative")
        def _wsum(xs):
            if len(xs) != len(weights):
                raise DomainError(f"wsum expects arity {len(weights)}")
            total = EXT_ZERO
            for w, x in zip(weights, xs):
                if w:
                    total = total + x * w
            return total
        return _wsum
    if head == "proj":
        i = int(params[0]) - 1  # 1-based in the token
        def _proj(xs):
            if not 0 <= i < len(xs):
                raise DomainError(f"projection index {i + 1} out of range")
            return xs[i]
        return _proj
    if head == "nonzero":
        i = int(params[0]) - 1
        def _nonzero(xs):
            if not 0 <= i < len(xs):
                raise DomainError(f"coordinate index {i + 1} out of range")
            return EXT_ZERO if xs[i] == EXT_ZERO else ext(1)
        return _nonzero
    if head == "gatestep" and not params:
        one = ext(1)
        two_ = ext(2)
        def _gatestep(xs):
            if len(xs) != 2:
                raise DomainError("gatestep expects arity 2")
            x1, x2 = xs
            if x1 != EXT_ZERO:
                return INF
            if x2 == EXT_ZERO:
                return EXT_ZERO
            if x2 < one:
                return two_
            return one
        return _gatestep
    raise UnsupportedOperationError(f"unknown numeric rule {token!r}")


def _unit_rule(token: str):
    head, params = _parse_params(token)
    if head == "min" and not params:
        return lambda xs: min(xs)
    if head == "max" and not params:
        return lambda xs: max(xs)
    if head == "prod" and not params:
        def _prod(xs):
            total = Fraction(1)
            for x in xs:
                total *= x
            return total
        return _prod
    if head == "proj":
        i = int(params[0]) - 1
        return lambda xs: xs[i]
    raise UnsupportedOperationError(f"unknown unit-interval rule {token!r}")


def extend_rule(fn):
    """Strict infinity extension: infinity as soon as any coordinate is."""

    def extended(xs):
        if any(isinstance(x, ExtNonNeg) and x.is_infinite for x in xs):
            return INF
        return fn(xs)

    return extended


def extend_aggregator(spec: MorphismSpec) -> MorphismSpec:
    """Extend a numeric rule to send every tuple with an infinite
    coordinate to infinity, leaving finite tuples alone.

    The fiber of infinity under the extension is exactly the set of
    tuples with some infinite coordinate.
    """
    if spec.rule is None:
        raise UnsupportedOperationError("only numeric rules can be extended")
    new_rule = extend_rule(spec.rule)
    return _bind_rule(f"ext:{spec.name}", new_rule, spec.domain, spec.codomain)


def _tabulate(name, rule, V: FiniteQuantale, W: FiniteQuantale) -> MorphismSpec:
    if V.element_values is None:
        raise UnsupportedOperationError(f"{V.name} carries no element values")
    if W.value_projection is None:
        raise UnsupportedOperationError(f"{W.name} cannot absorb rule values")
    images = []
    for value in V.element_values:
        xs = value if isinstance(value, tuple) else (value,)
        images.append(W.value_projection(rule(xs)))
    spec = table_morphism(V, W, images, name=name)
    spec.rule = rule
    return spec


def _bind_rule(name, rule, V, W) -> MorphismSpec:
    if isinstance(V, FiniteQuantale):
        if not isinstance(W, FiniteQuantale):
            raise UnsupportedOperationError("finite domain needs a finite codomain")
        return _tabulate(name, rule, V, W)
    if isinstance(V, ProductQuantale):
        fn = rule
    else:
        fn = lambda u: rule((u,))
    return MorphismSpec(name, V, W, fn, rule=rule)


def rule_morphism(token: str, V, W) -> MorphismSpec:
    """Bind a named numeric rule to concrete domain and codomain quantales.

    Finite domains with element values get tabulated into lookup tables
    (classified exhaustively); value domains evaluate the rule directly.
    Distance-distribution domains lift a unit-interval rule pointwise.
    """
    factors = V.factors if isinstance(V, ProductQuantale) else (V,)
    if all(isinstance(f, DDFQuantale) for f in factors):
        if not isinstance(W, DDFQuantale):
            raise UnsupportedOperationError("lifted rules need a ddf codomain")
        arity = len(factors)
        pointwise = isinstance(factors[0], PointwiseDDFQuantale)
        return lift_F_delta(
            token, arity, factors[0].tnorm_name, pointwise=pointwise
        )
    if all(isinstance(f, UnitIntervalQuantale) for f in factors):
        return _bind_rule(token, _unit_rule(token), V, W)
    return _bind_rule(token, _lawvere_rule(token), V, W)


# ---------------------------------------------------------------------------
# Primitive checks
# ---------------------------------------------------------------------------


def _finite_elements(V):
    els = V.elements
    return None if els is None else list(els)


def _probe_pairs(V):
    get = getattr(V, "probe_pairs", None)
    return list(get()) if get else []


def _fiber_probes(V):
    get = getattr(V, "fiber_elements", None)
    return list(get()) if get else []


def _check_isotone(F, V, W, rng, samples) -> Verdict:
    els = _finite_elements(V)
    if els is not None:
        img = {u: F(u) for u in els}
        for u in els:
            for v in els:
                if V.leq(u, v) and not W.leq(img[u], img[v]):
                    return _fails("isotone", (u, v), img[u], img[v])
        return _holds(True)
    budget = samples
    for u, v in _probe_pairs(V):
        if budget <= 0:
            break
        if V.leq(u, v):
            pass
        elif V.leq(v, u):
            u, v = v, u
        else:
            continue
        budget -= 1
        if not W.leq(F(u), F(v)):
            return _fails("isotone", (u, v), F(u), F(v))
    while budget > 0:
        budget -= 1
        a = V.sample(rng)
        b = V.sample(rng)
        u = V.tensor(a, b)  # below both factors, so (u, a) is comparable
        if not W.leq(F(u), F(a)):
            return _fails("isotone", (u, a), F(u), F(a))
    return _holds(False)


def _check_unit(F, V, W):
    """Returns (unit_leq, unit_equality); both are single exact checks."""
    image = F(V.unit)
    leq_v = (
        _holds(True)
        if W.leq(W.unit, image)
        else _fails("unit_leq", (V.unit,), W.unit, image)
    )
    eq_v = (
        _holds(True)
        if W.equal(image, W.unit)
        else _fails(
            "unit_equality",
            (V.unit,),
            image,
            W.unit,
            note="image of the domain unit is not the codomain unit",
        )
    )
    return leq_v, eq_v


def _check_tensor_lax(F, V, W, rng, samples) -> Verdict:
    els = _finite_elements(V)
    if els is not None:
        img = {u: F(u) for u in els}
        for u in els:
            for v in els:
                lhs = W.tensor(img[u], img[v])
                rhs = img[V.tensor(u, v)]
                if not W.leq(lhs, rhs):
                    return _fails("tensor_lax", (u, v), lhs, rhs)
        return _holds(True)
    budget = samples
    for u, v in _probe_pairs(V):
        if budget <= 0:
            break
        budget -= 1
        try:
            lhs = W.tensor(F(u), F(v))
            rhs = F(V.tensor(u, v))
        except DDFError as e:
            return _fails("tensor_lax", (u, v), note=str(e))
        if not W.leq(lhs, rhs):
            return _fails("tensor_lax", (u, v), lhs, rhs)
    while budget > 0:
        budget -= 1
        u = V.sample(rng)
        v = V.sample(rng)
        try:
            lhs = W.tensor(F(u), F(v))
            rhs = F(V.tensor(u, v))
        except DDFError as e:
            return _fails("tensor_lax", (u, v), note=str(e))
        if not W.leq(lhs, rhs):
            return _fails("tensor_lax", (u, v), lhs, rhs)
    return _holds(False)


def _check_asym_triplets(F, V, W, rng, samples) -> Verdict:
    els = _finite_elements(V)
    if els is not None:
        img = {u: F(u) for u in els}
        for u in els:
            for v in els:
                uv = V.tensor(u, v)
                for w in els:
                    if not V.leq(uv, w):
                        continue
                    lhs = W.tensor(img[u], img[v])
                    if not W.leq(lhs, img[w]):
                        return _fails("asym_triplets", (u, v, w), lhs, img[w])
        return _holds(True)
    budget = samples
    def offers():
        for u, v in _probe_pairs(V):
            uv = V.tensor(u, v)
            yield u, v, uv
            yield u, v, u   # u*v <= u by integrality
            yield u, v, V.unit
        while True:
            u = V.sample(rng)
            v = V.sample(rng)
            yield u, v, V.tensor(u, v)
            w = V.sample(rng)
            if V.leq(V.tensor(u, v), w):
                yield u, v, w
    for u, v, w in offers():
        if budget <= 0:
            break
        budget -= 1
        lhs = W.tensor(F(u), F(v))
        rhs = F(w)
        if not W.leq(lhs, rhs):
            return _fails("asym_triplets", (u, v, w), lhs, rhs)
    return _holds(False)


def _is_sym_triplet(V, u, v, w) -> bool:
    # commutativity makes these three inequalities cover all permutations
    return (
        V.leq(V.tensor(u, v), w)
        and V.leq(V.tensor(v, w), u)
        and V.leq(V.tensor(u, w), v)
    )


def _image_sym_triplet(F, W, u, v, w):
    iu, iv, iw = F(u), F(v), F(w)
    for (a, b, c), (ia, ib, ic) in (
        ((u, v, w), (iu, iv, iw)),
        ((v, w, u), (iv, iw, iu)),
        ((u, w, v), (iu, iw, iv)),
    ):
        lhs = W.tensor(ia, ib)
        if not W.leq(lhs, ic):
            return lhs, ic
    return None


def _check_triplets(F, V, W, rng, samples) -> Verdict:
    els = _finite_elements(V)
    if els is not None:
        for u in els:
            for v in els:
                for w in els:
                    if not _is_sym_triplet(V, u, v, w):
                        continue
                    bad = _image_sym_triplet(F, W, u, v, w)
                    if bad is not None:
                        return _fails("triplets", (u, v, w), bad[0], bad[1])
        return _holds(True)
    budget = samples
    def offers():
        for u, v in _probe_pairs(V):
            yield u, v, V.tensor(u, v)  # always a symmetric triplet
        while True:
            u = V.sample(rng)
            v = V.sample(rng)
            yield u, v, V.tensor(u, v)
            w = V.sample(rng)
            if _is_sym_triplet(V, u, v, w):
                yield u, v, w
    for u, v, w in offers():
        if budget <= 0:
            break
        budget -= 1
        bad = _image_sym_triplet(F, W, u, v, w)
        if bad is not None:
            return _fails("triplets", (u, v, w), bad[0], bad[1])
    return _holds(False)


def _check_unit_fiber(F, V, W, rng, samples) -> Verdict:
    image = F(V.unit)
    if not W.equal(image, W.unit):
        return _fails(
            "unit_fiber",
            (V.unit,),
            image,
            W.unit,
            note="domain unit does not map to the codomain unit",
        )
    els = _finite_elements(V)
    if els is not None:
        for e in els:
            if V.equal(e, V.unit):
                continue
            if W.equal(F(e), W.unit):
                return _fails(
                    "unit_fiber", (e,), F(e), W.unit,
                    note="second preimage of the codomain unit",
                )
        return _holds(True)
    budget = samples
    for e in _fiber_probes(V):
        if budget <= 0:
            break
        if V.equal(e, V.unit):
            continue
        budget -= 1
        if W.equal(F(e), W.unit):
            return _fails(
                "unit_fiber", (e,), F(e), W.unit,
                note="second preimage of the codomain unit",
            )
    while budget > 0:
        budget -= 1
        e = V.sample(rng)
        if V.equal(e, V.unit):
            continue
        if W.equal(F(e), W.unit):
            return _fails(
                "unit_fiber", (e,), F(e), W.unit,
                note="second preimage of the codomain unit",
            )
    return _holds(False)


# ---------------------------------------------------------------------------
# Public check entry points
# ---------------------------------------------------------------------------


def _resolve_fvw(F, V, W):
    if isinstance(F, MorphismSpec):
        return F, V or F.domain, W or F.codomain
    if V is None or W is None:
        raise StructureError("plain callables need explicit quantales")
    return MorphismSpec("fn", V, W, F), V, W


def is_lax_morphism(F, V=None, W=None, *, seed=0, samples=500) -> Verdict:
    """Isotone, unit below the unit image, and F(u) * F(v) <= F(u * v)."""
    F, V, W = _resolve_fvw(F, V, W)
    rng = random.Random(seed)
    unit_leq, _ = _check_unit(F, V, W)
    return combine(
        _check_isotone(F, V, W, rng, samples),
        unit_leq,
        _check_tensor_lax(F, V, W, random.Random(seed), samples),
    )


def preserves_asym_triplets(F, V=None, W=None, *, seed=0, samples=500) -> Verdict:
    F, V, W = _resolve_fvw(F, V, W)
    return _check_asym_triplets(F, V, W, random.Random(seed), samples)


def preserves_triplets(F, V=None, W=None, *, seed=0, samples=500) -> Verdict:
    F, V, W = _resolve_fvw(F, V, W)
    return _check_triplets(F, V, W, random.Random(seed), samples)


def unit_fiber_singleton(F, V=None, W=None, *, seed=0, samples=500) -> Verdict:
    F, V, W = _resolve_fvw(F, V, W)
    return _check_unit_fiber(F, V, W, random.Random(seed), samples)


REPORT_KEYS = (
    "isotone",
    "unit_leq",
    "unit_equality",
    "tensor_lax",
    "lax_morphism",
    "asym_triplet_preserving",
    "triplet_preserving",
    "unit_fiber_singleton",
    "preserving",
    "separately_preserving",
    "symmetrically_preserving",
    "cat_preserving",
)


@dataclass
class ClassificationReport:
    name: str
    domain: str
    codomain: str
    mode: str
    seed: int
    samples: int
    verdicts: dict
    _format: object = field(default=None, repr=False)

    def __getitem__(self, key: str) -> Verdict:
        return self.verdicts[key]

    @property
    def preserving(self) -> Verdict:
        return self.verdicts["preserving"]

    def to_dict(self) -> dict:
        fmt = self._format or (lambda side, x: str(x))
        out = {
            "rule": self.name,
            "domain": self.domain,
            "codomain": self.codomain,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "verdicts": {},
        }
        for key in REPORT_KEYS:
            v = self.verdicts[key]
            entry = {"status": v.status}
            if v.witness is not None:
                w = v.witness
                entry["witness"] = {
                    "check": w.check,
                    "elements": [fmt("domain", e) for e in w.elements],
                    "lhs": None if w.lhs is None else fmt("codomain", w.lhs),
                    "rhs": None if w.rhs is None else fmt("codomain", w.rhs),
                    "note": w.note,
                }
            out["verdicts"][key] = entry
        return out


def classify(F, V=None, W=None, *, seed=0, samples=500) -> ClassificationReport:
    """Full verdict set for one candidate map.

    Primitive checks run directly; the composite verdicts are assembled
    from the primitives along the equivalences that hold between them
    (preservation = asymmetric triplets + unit equality; the separated
    variant adds the singleton unit fiber; the symmetric variant swaps in
    full triplets).  On finite domains the laxity route and the triplet
    route must agree -- a mismatch would be an internal error, not data.
    """
    F, V, W = _resolve_fvw(F, V, W)
    els = _finite_elements(V)
    mode = "exhaustive" if els is not None else "sampled"

    isotone = _check_isotone(F, V, W, random.Random(seed), samples)
    unit_leq, unit_eq = _check_unit(F, V, W)
    tensor_lax = _check_tensor_lax(F, V, W, random.Random(seed), samples)
    asym = _check_asym_triplets(F, V, W, random.Random(seed), samples)
    trip = _check_triplets(F, V, W, random.Random(seed), samples)
    fiber = _check_unit_fiber(F, V, W, random.Random(seed), samples)

    lax = combine(isotone, unit_leq, tensor_lax)
    preserving = combine(asym, unit_eq)
    if mode == "exhaustive" and lax.ok != preserving.ok:
        raise RuntimeError(
            "internal error: laxity and triplet preservation disagree on a "
            "finite domain"
        )
    # The unit-below and unit-equality forms coincide over an integral
    # codomain, where the unit is the top element.
    if unit_leq.ok != unit_eq.ok:
        raise RuntimeError("internal error: codomain unit is not the top")

    verdicts = {
        "isotone": isotone,
        "unit_leq": unit_leq,
        "unit_equality": unit_eq,
        "tensor_lax": tensor_lax,
        "lax_morphism": lax,
        "asym_triplet_preserving": asym,
        "triplet_preserving": trip,
        "unit_fiber_singleton": fiber,
        "preserving": preserving,
        "separately_preserving": combine(asym, fiber),
        "symmetrically_preserving": combine(trip, unit_eq),
        "cat_preserving": preserving,
    }

    def _format(side, x):
        q = V if side == "domain" else W
        return q.format_element(x)

    return ClassificationReport(
        F.name, V.name, W.name, mode, seed, samples, verdicts, _format
    )


# ---------------------------------------------------------------------------
# Brute-force category oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _CatData:
    npoints: int
    matrix: tuple
    triples: tuple
    dirpairs: tuple
    separated: bool
    symmetric: bool


_MAX_CANDIDATES = 10_000_000


def _enumerate_matrices(V: FiniteQuantale, n: int):
    """All n-point hom matrices with unit diagonal satisfying VC2.

    The diagonal is forced to the unit by integrality (VC1 plus the unit
    being the top).  Off-diagonal cells fill in row-major order with
    incremental VC2 filtering, so output is lexicographic.
    """
    if n == 1:
        yield ((V.unit,),)
        return
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    pos_index = {p: k for k, p in enumerate(positions)}
    triples_at = [[] for _ in positions]
    for x, z, y in itertools.product(range(n), repeat=3):
        offdiag = [p for p in {(x, z), (z, y), (x, y)} if p[0] != p[1]]
        if not offdiag:
            continue
        triples_at[max(pos_index[p] for p in offdiag)].append((x, z, y))
    a = [[V.unit] * n for _ in range(n)]
    els = list(V.elements)

    def rec(k):
        if k == len(positions):
            yield tuple(tuple(row) for row in a)
            return
        i, j = positions[k]
        for e in els:
            a[i][j] = e
            ok = True
            for x, z, y in triples_at[k]:
                if not V.leq(V.tensor(a[x][z], a[z][y]), a[x][y]):
                    ok = False
                    break
            if ok:
                yield from rec(k + 1)
        a[i][j] = els[0]

    yield from rec(0)


_cat_cache: dict = {}


def _categories(V: FiniteQuantale, nmax: int):
    key = (id(V), nmax)
    cached = _cat_cache.get(key)
    if cached is not None and cached[0] is V:
        return cached[1]
    cats = []
    for n in range(1, nmax + 1):
        if V.n ** (n * n - n) > _MAX_CANDIDATES:
            raise SizeBudgetError(
                f"{V.n}^{n * n - n} candidate matrices exceed the cap"
            )
        for matrix in _enumerate_matrices(V, n):
            pts = range(n)
            triples = tuple(
                sorted(
                    {
                        (matrix[x][z], matrix[z][y], matrix[x][y])
                        for x, z, y in itertools.product(pts, repeat=3)
                    }
                )
            )
            dirpairs = tuple(
                sorted(
                    {
                        (matrix[x][y], matrix[y][x])
                        for x in pts
                        for y in pts
                        if x < y
                    }
                )
            )
            separated = all(
                not (V.leq(V.unit, p) and V.leq(V.unit, q)) for p, q in dirpairs
            )
            symmetric = all(p == q for p, q in dirpairs)
            cats.append(
                _CatData(n, matrix, triples, dirpairs, separated, symmetric)
            )
    _cat_cache[key] = (V, cats)
    return cats


def _variant_cats(cats, variant):
    if variant == "plain":
        return cats
    if variant == "separated":
        return [c for c in cats if c.separated]
    if variant == "symmetric":
        return [c for c in cats if c.symmetric]
    raise StructureError(f"unknown brute-force variant {variant!r}")


def brute_force_preserving(
    F, V: FiniteQuantale = None, W=None, nmax: int = 3, *, variant: str = "plain"
) -> Verdict:
    """Enumerate every hom matrix on up to nmax points and check that its
    image under F still satisfies the category axioms.

    This is the direct oracle against which the algebraic
    characterizations are verified; it shares no logic with them.  The
    verdict carries the first offending matrix (lexicographic order,
    smaller point counts first) and the failing entry triple.
    """
    F, V, W = _resolve_fvw(F, V, W)
    if not isinstance(V, FiniteQuantale):
        raise UnsupportedOperationError("brute force needs a finite domain")
    cats = _variant_cats(_categories(V, nmax), variant)
    img = {u: F(u) for u in V.elements}
    check = f"brute-force-{variant}"
    unit_img = img[V.unit]
    if not W.leq(W.unit, unit_img):
        first = cats[0]
        return _fails(
            check,
            (first.matrix, (V.unit, V.unit, V.unit)),
            W.unit,
            unit_img,
            note="image violates the unit-on-diagonal axiom",
        )
    memo = {}
    for cat in cats:
        for t in cat.triples:
            ok = memo.get(t)
            if ok is None:
                u, v, w = t
                ok = W.leq(W.tensor(img[u], img[v]), img[w])
                memo[t] = ok
            if not ok:
                u, v, w = t
                return _fails(
                    check,
                    (cat.matrix, t),
                    W.tensor(img[u], img[v]),
                    img[w],
                    note="image violates the composition axiom",
                )
        if variant == "separated":
            for p, q in cat.dirpairs:
                if W.equal(img[p], W.unit) and W.equal(img[q], W.unit):
                    return _fails(
                        check,
                        (cat.matrix, (p, q)),
                        img[p],
                        img[q],
                        note="image of a separated category is not separated",
                    )
    return _holds(True)


def functor_preservation_primitive(F, V=None, W=None) -> Verdict:
    """Check the two-point identity-functor construction: for u <= v the
    categories with off-diagonal u resp. v are joined by the identity
    functor, and the image functor condition is exactly F(u) <= F(v)."""
    F, V, W = _resolve_fvw(F, V, W)
    if not isinstance(V, FiniteQuantale):
        raise UnsupportedOperationError("the functor primitive needs a finite domain")
    for u in V.elements:
        for v in V.elements:
            if V.leq(u, v) and not W.leq(F(u), F(v)):
                return _fails("functor-preservation", (u, v), F(u), F(v))
    return _holds(True)


# ---------------------------------------------------------------------------
# Exhaustive verification of the characterizations
# ---------------------------------------------------------------------------


@dataclass
class EquivalenceSummary:
    domain: str
    codomain: str
    nmax: int
    n_functions: int
    counts: dict
    class_table: dict
    disagreements: tuple

    @property
    def agreement(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "codomain": self.codomain,
            "nmax": self.nmax,
            "functions": self.n_functions,
            "counts": dict(self.counts),
            "classes": {
                key: {"count": entry["count"], "example": list(entry["example"])}
                for key, entry in self.class_table.items()
            },
            "disagreements": [list(d) for d in self.disagreements],
        }


def verify_equivalences(
    V: FiniteQuantale, W: FiniteQuantale, nmax: int = 3, *, max_functions: int = 100_000
) -> EquivalenceSummary:
    """For EVERY function between two finite quantales, confirm that the
    brute-force matrix oracle agrees with the algebraic characterizations:

      * preserving  ==  lax  ==  asymmetric triplets + unit equality,
      * symmetric variant  ==  triplets + unit equality,
      * separated variant  ==  lax + singleton unit fiber,
      * preserving  ==  isotone + triplets + unit equality
        (the symmetric functor-level characterization),
      * asymmetric triplet preservation implies triplet preservation.

    Any disagreement is recorded and makes `agreement` false; there
    should never be one.
    """
    if not (isinstance(V, FiniteQuantale) and isinstance(W, FiniteQuantale)):
        raise UnsupportedOperationError("equivalence verification needs finite quantales")
    n_functions = W.n ** V.n
    if n_functions > max_functions:
        raise SizeBudgetError(
            f"{W.n}^{V.n} = {n_functions} functions exceed the budget {max_functions}"
        )

    EV = list(V.elements)
    EW = list(W.elements)
    leq_pairs = [(u, v) for u in EV for v in EV if V.leq(u, v)]
    pairs = [(u, v) for u in EV for v in EV]
    asym_triples = [
        (u, v, w) for u in EV for v in EV for w in EV if V.leq(V.tensor(u, v), w)
    ]
    sym_triples = [
        (u, v, w)
        for u in EV
        for v in EV
        for w in EV
        if _is_sym_triplet(V, u, v, w)
    ]
    cats = _categories(V, nmax)
    union_plain = sorted({t for c in cats for t in c.triples})
    union_sym = sorted({t for c in cats if c.symmetric for t in c.triples})
    sep_cats = [c for c in cats if c.separated]
    union_sep = sorted({t for c in sep_cats for t in c.triples})
    dirpairs_sep = sorted({p for c in sep_cats for p in c.dirpairs})

    wt = W.tensor
    wleq = W.leq
    vt = V.tensor
    unit_v = V.unit
    unit_w = W.unit

    counts = {
        "preserving": 0,
        "separately_preserving": 0,
        "symmetrically_preserving": 0,
    }
    class_table = {}
    disagreements = []

    for images in itertools.product(EW, repeat=V.n):
        uniteq = images[unit_v] == unit_w
        unit_leq = wleq(unit_w, images[unit_v])
        isotone = all(wleq(images[u], images[v]) for u, v in leq_pairs)
        tensorlax = all(
            wleq(wt(images[u], images[v]), images[vt(u, v)]) for u, v in pairs
        )
        lax = isotone and unit_leq and tensorlax
        asym = all(
            wleq(wt(images[u], images[v]), images[w]) for u, v, w in asym_triples
        )
        strip = all(
            wleq(wt(images[u], images[v]), images[w]) for u, v, w in sym_triples
        )
        fiber = uniteq and images.count(unit_w) == 1

        bf = unit_leq and all(
            wleq(wt(images[u], images[v]), images[w]) for u, v, w in union_plain
        )
        bf_sym = unit_leq and all(
            wleq(wt(images[u], images[v]), images[w]) for u, v, w in union_sym
        )
        bf_sep = (
            unit_leq
            and all(
                wleq(wt(images[u], images[v]), images[w]) for u, v, w in union_sep
            )
            and not any(
                images[p] == unit_w and images[q] == unit_w
                for p, q in dirpairs_sep
            )
        )

        checks = (
            ("preserving==lax", bf == lax),
            ("lax==asym+unit", lax == (asym and uniteq)),
            ("symmetric==triplets+unit", bf_sym == (strip and uniteq)),
            ("separated==lax+fiber", bf_sep == (lax and fiber)),
            ("preserving==isotone+triplets+unit", bf == (isotone and strip and uniteq)),
            ("asym-implies-triplets", (not asym) or strip),
        )
        for label, passed in checks:
            if not passed:
                disagreements.append((label, images))

        counts["preserving"] += bf
        counts["separately_preserving"] += bf_sep
        counts["symmetrically_preserving"] += bf_sym
        signature = (
            f"preserving={'yes' if bf else 'no'} "
            f"separately={'yes' if bf_sep else 'no'} "
            f"symmetrically={'yes' if bf_sym else 'no'}"
        )
        entry = class_table.setdefault(signature, {"count": 0, "example": None})
        entry["count"] += 1
        if entry["example"] is None:
            entry["example"] = tuple(W.labels[i] for i in images)

    return EquivalenceSummary(
        V.name,
        W.name,
        nmax,
        n_functions,
        counts,
        class_table,
        tuple(disagreements),
    )


# ---------------------------------------------------------------------------
# Numeric aggregator verdicts on the extended half-line
# ---------------------------------------------------------------------------


_PROBE_SCALARS = (ext(5), ext(1), ext(2), ext(Fraction(1, 2)))
_ISO_GRID = (ext(0), ext(Fraction(1, 2)), ext(1), ext(2))
_FIBER_GRID = (ext(0), ext(1), ext(2))


@dataclass
class AggregatorReport:
    name: str
    arity: int
    seed: int
    samples: int
    verdicts: dict

    def __getitem__(self, key):
        return self.verdicts[key]

    def to_dict(self) -> dict:
        out = {
            "rule": self.name,
            "arity": self.arity,
            "seed": self.seed,
            "samples": self.samples,
            "verdicts": {},
        }
        for key, v in self.verdicts.items():
            entry = {"status": v.status}
            if v.witness is not None:
                entry["witness"] = {
                    "check": v.witness.check,
                    "elements": [str(e) for e in v.witness.elements],
                    "lhs": str(v.witness.lhs),
                    "rhs": str(v.witness.rhs),
                }
            out["verdicts"][key] = entry
        return out


def _crossed_pairs(arity):
    for c in _PROBE_SCALARS:
        for i in range(arity):
            x = tuple(EXT_ZERO if k == i else c for k in range(arity))
            y = tuple(c if k == i else EXT_ZERO for k in range(arity))
            yield x, y


def _finite_sample(rng):
    den = rng.choice((1, 1, 2, 4))
    return ext(Fraction(rng.randint(0, 6 * den), den))


def qpm_aggregator_verdict(rule, arity: int, *, seed=0, samples=500) -> AggregatorReport:
    """Isotonicity, subadditivity, zero-at-zero and the singleton zero
    fiber for a numeric rule on finite nonnegative tuples; these are the
    distance-aggregation conditions, and the combined verdicts label the
    rule as a quasi-pseudometric (first three) or quasi-metric (all four)
    aggregator.

    Structured probes run before random samples: crossed axis pairs for
    subadditivity, grid pairs a <= b for isotonicity, small grid tuples
    for the zero fiber.
    """
    name = rule if isinstance(rule, str) else getattr(rule, "name", "rule")
    fn = _lawvere_rule(rule) if isinstance(rule, str) else rule
    rng = random.Random(seed)

    zero = tuple(EXT_ZERO for _ in range(arity))
    zero_v = (
        _holds(True)
        if fn(zero) == EXT_ZERO
        else _fails("zero_at_zero", (zero,), fn(zero), EXT_ZERO)
    )

    def plus(x, y):
        return tuple(a + b for a, b in zip(x, y))

    subadd = _holds(False)
    budget = samples
    for x, y in _crossed_pairs(arity):
        budget -= 1
        if not fn(plus(x, y)) <= fn(x) + fn(y):
            subadd = _fails("subadditive", (x, y), fn(plus(x, y)), fn(x) + fn(y))
            break
    else:
        while budget > 0:
            budget -= 1
            x = tuple(_finite_sample(rng) for _ in range(arity))
            y = tuple(_finite_sample(rng) for _ in range(arity))
            if not fn(plus(x, y)) <= fn(x) + fn(y):
                subadd = _fails("subadditive", (x, y), fn(plus(x, y)), fn(x) + fn(y))
                break

    isotone = _holds(False)
    budget = samples
    grid = list(itertools.product(_ISO_GRID, repeat=arity))
    done = False
    for a in grid:
        for b in grid:
            if budget <= 0 or done:
                break
            if all(p <= q for p, q in zip(a, b)):
                budget -= 1
                if not fn(a) <= fn(b):
                    isotone = _fails("isotone", (a, b), fn(a), fn(b))
                    done = True
        if done:
            break
    if not done:
        while budget > 0:
            budget -= 1
            a = tuple(_finite_sample(rng) for _ in range(arity))
            b = plus(a, tuple(_finite_sample(rng) for _ in range(arity)))
            if not fn(a) <= fn(b):
                isotone = _fails("isotone", (a, b), fn(a), fn(b))
                break

    fiber = _holds(False)
    budget = samples
    for e in itertools.product(_FIBER_GRID, repeat=arity):
        if budget <= 0:
            break
        if e == zero:
            continue
        budget -= 1
        if fn(e) == EXT_ZERO:
            fiber = _fails(
                "zero_fiber", (e,), fn(e), EXT_ZERO,
                note="second preimage of zero",
            )
            break
    else:
        while budget > 0 and fiber.ok:
            budget -= 1
            e = tuple(_finite_sample(rng) for _ in range(arity))
            if e != zero and fn(e) == EXT_ZERO:
                fiber = _fails(
                    "zero_fiber", (e,), fn(e), EXT_ZERO,
                    note="second preimage of zero",
                )

    verdicts = {
        "isotone": isotone,
        "subadditive": subadd,
        "zero_at_zero": zero_v,
        "zero_fiber_singleton": fiber,
    }
    verdicts["qpm_aggregator"] = combine(isotone, subadd, zero_v)
    verdicts["qm_aggregator"] = combine(isotone, subadd, zero_v, fiber)
    return AggregatorReport(name, arity, seed, samples, verdicts)


# ---------------------------------------------------------------------------
# Pointwise lifts to distance distribution functions
# ---------------------------------------------------------------------------


def lift_F_delta(
    G, arity: int, tnorm: str = "min", *, pointwise: bool = False, name=None
) -> MorphismSpec:
    """Lift a [0,1]-valued rule pointwise to step functions:

        lift(G)((f_i)_i)(t) = G((f_i(t))_i)

    The lift is computed exactly on the merged breakpoints.  If the image
    leaves the step-function family (value at 0 nonzero, or values not
    isotone along the merged breakpoints), evaluation raises and the
    sampled checks convert that into a failure witness.
    """
    token = G if isinstance(G, str) else None
    fn = _unit_rule(G) if isinstance(G, str) else G
    cls = PointwiseDDFQuantale if pointwise else DDFQuantale
    W = cls(tnorm)
    V = ProductQuantale([cls(tnorm)] * arity) if arity > 1 else cls(tnorm)

    def lifted(fs):
        tup = fs if isinstance(fs, tuple) else (fs,)
        v0 = fn(tuple(Fraction(0) for _ in tup))
        if v0 != 0:
            raise DDFError("pointwise lift leaves the step family: nonzero value at 0")
        merged = sorted(set().union(*[set(f.breakpoints) for f in tup]))
        return StepDDF.from_jumps(
            (m, fn(tuple(f.value_above(m) for f in tup))) for m in merged
        )

    spec = MorphismSpec(name or f"lift:{token or 'G'}", V, W, lifted, rule=fn)
    return spec


def check_left_continuity(G, arity: int = 1, *, seed=0, samples=200) -> Verdict:
    """Chain-based check: the value at the supremum of each sampled
    increasing chain must equal the supremum of the values.

    Finite rational chains contain their own supremum, so for an isotone
    rule the equality is automatic; what the check can actually refute
    is an order violation along a chain, or a nonzero value at the empty
    supremum (all-zero tuple).  Genuine one-sided discontinuities need
    non-step probes and are outside sampled reach.
    """
    fn = _unit_rule(G) if isinstance(G, str) else G
    zeros = tuple(Fraction(0) for _ in range(arity))
    v0 = fn(zeros)
    if v0 != 0:
        return _fails(
            "left_continuity", (zeros,), v0, Fraction(0),
            note="value at the empty supremum is nonzero",
        )
    rng = random.Random(seed)
    for _ in range(samples):
        target = tuple(
            Fraction(rng.randint(1, 8), 8) for _ in range(arity)
        )
        m = rng.randint(2, 5)
        chain = [tuple(t * Fraction(k, m) for t in target) for k in range(1, m + 1)]
        vals = [fn(c) for c in chain]
        for a, b, va, vb in zip(chain, chain[1:], vals, vals[1:]):
            if va > vb:
                return _fails(
                    "left_continuity", (a, b), va, vb,
                    note="values decrease along an increasing chain",
                )
        if fn(chain[-1]) != max(vals):
            return _fails(
                "left_continuity", (chain[-1],), fn(chain[-1]), max(vals),
                note="value at the chain supremum differs from the value supremum",
            )
    return _holds(False)


def threshold_half_morphism() -> MorphismSpec:
    """The built-in non-pointwise rule on distance distribution functions
    under the pointwise product tensor:

        F(f) = unit step at 0     if f(1/2) > 0,
               unit step at 1/2   if f(1/2) = 0.

    It is lax for the pointwise product, but its output at a time t is
    not a function of the input's value at t, which is what
    `gdelta_expressibility` detects.
    """
    Q = PointwiseDDFQuantale("product")
    half = Fraction(1, 2)

    def fn(f):
        return UNIT_DDF if f(half) > 0 else unit_jump(half)

    return MorphismSpec("threshold-half", Q, Q, fn)


def gdelta_expressibility(F: MorphismSpec, *, seed=0, samples=500) -> Verdict:
    """Can F be written as a pointwise value map G, with F(f)(t) = G(f(t))?

    The search looks for two evaluation contexts (f, t) and (f', t') where
    the inputs take the same values but the outputs differ; such a pair
    refutes every pointwise G at once.  A pass only means no conflict was
    found within the probe budget.
    """
    V = F.domain
    arity = V.arity if isinstance(V, ProductQuantale) else 1
    rng = random.Random(seed)

    probe_fs = [
        unit_jump(Fraction(1, 2)),
        unit_jump(Fraction(1, 3)),
        unit_jump(Fraction(1, 4)),
        unit_jump(0),
        unit_jump(1),
    ]
    probe_ts = [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2)]

    def contexts():
        if arity == 1:
            base = [(f,) for f in probe_fs]
        else:
            base = list(itertools.product(probe_fs, repeat=arity))
        for tup in base:
            for t in probe_ts:
                yield tup, t
        while True:
            tup = tuple(V.sample(rng) for _ in range(arity)) if arity > 1 else (V.sample(rng),)
            ts = sorted({b for f in tup for b in f.breakpoints})
            extra = [t + Fraction(1, 2) for t in ts] + [Fraction(rng.randint(1, 8), 4)]
            for t in ts + extra:
                yield tup, t

    seen = {}
    budget = samples
    for tup, t in contexts():
        if budget <= 0:
            break
        budget -= 1
        element = tup if arity > 1 else tup[0]
        key = tuple(f(t) for f in tup)
        out = F(element)(t)
        prior = seen.get(key)
        if prior is None:
            seen[key] = (out, element, t)
            continue
        prior_out, prior_el, prior_t = prior
        if prior_out != out:
            return _fails(
                "gdelta_expressibility",
                ((prior_el, prior_t), (element, t)),
                prior_out,
                out,
                note=(
                    "both contexts see input value(s) "
                    + ",".join(str(k) for k in key)
                    + " but produce different outputs"
                ),
            )
    return _holds(False)
