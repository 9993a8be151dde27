"""Semimodules over finite semirings: axioms, free modules, homs, strongness.

Hom enumeration never searches all functions. It picks images for a minimal
generating set, extends them along the closure derivation of each carrier
element, then validates the candidate in full, so the derivation is only a
funnel and correctness rests on the final check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .config import MAX_CARRIER, MAX_ENUM
from .errors import (EnumGuard, IllDefinedAction, MalformedTable, NotAnIdeal,
                     ScalarMismatch, SizeGuard)
from .mv import (MvAlgebra, check_mv_axioms, quotient, reduct_vee_odot)
from .semiring import (AxiomReport, FiniteSemiring, LawCheck, SemiringHom,
                       Table, _first_assoc_failure, _first_comm_failure,
                       _first_identity_failure, boolean_semiring, freeze_table,
                       is_additively_idempotent, same_scalars)


@dataclass(frozen=True)
class FiniteSemimodule:
    """A left semimodule on {0..size-1}: commutative addition with a zero,
    and a scalar action stored as one carrier row per scalar."""

    scalars: FiniteSemiring
    size: int
    add: Table
    zero: int
    action: Table
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "add", freeze_table(self.add, self.size, "add"))
        rows = tuple(tuple(int(v) for v in row) for row in self.action)
        if len(rows) != self.scalars.size:
            raise MalformedTable("action needs one row per scalar")
        for row in rows:
            if len(row) != self.size or any(not 0 <= v < self.size for v in row):
                raise MalformedTable("action entry out of range")
        object.__setattr__(self, "action", rows)
        if not 0 <= self.zero < self.size:
            raise MalformedTable("zero index out of range")
        if self.labels is not None:
            labels = tuple(str(l) for l in self.labels)
            if len(labels) != self.size:
                raise MalformedTable("label count mismatch")
            object.__setattr__(self, "labels", labels)

    def plus(self, x: int, y: int) -> int:
        return self.add[x][y]

    def act(self, a: int, x: int) -> int:
        return self.action[a][x]

    def sum(self, xs: Iterable[int]) -> int:
        out = self.zero
        for x in xs:
            out = self.add[out][x]
        return out

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    @cached_property
    def np_add(self) -> np.ndarray:
        return np.array(self.add, dtype=np.intp)

    @cached_property
    def np_action(self) -> np.ndarray:
        return np.array(self.action, dtype=np.intp)


def check_semimodule(s: FiniteSemiring, m: FiniteSemimodule) -> AxiomReport:
    """Monoid laws of the carrier plus the five action laws, all exhaustive.

    Over an additively idempotent semiring an extra add-idempotent law is
    reported; it follows from the others but is asserted on its own."""
    if not same_scalars(s, m.scalars):
        raise ScalarMismatch("module does not live over the given scalars")
    add, act = m.np_add, m.np_action
    sadd, smul = s.np_add, s.np_mul
    laws: List[LawCheck] = []
    for name, w in (("add-associative", _first_assoc_failure(add)),
                    ("add-commutative", _first_comm_failure(add)),
                    ("add-identity", _first_identity_failure(add, m.zero))):
        laws.append(LawCheck(name, w is None, w))

    w = None
    for a in range(s.size):
        comp = act[a][act]                 # a(bx), one row per b
        direct = act[smul[a]]              # (ab)x
        if not np.array_equal(comp, direct):
            b = int(np.nonzero((comp != direct).any(axis=1))[0][0])
            x = int(np.nonzero(comp[b] != direct[b])[0][0])
            w = (a, b, x)
            break
    laws.append(LawCheck("action-associative", w is None, w))

    w = None
    for a in range(s.size):
        row = act[a]
        lhs = row[add]                     # a(x+y)
        rhs = add[np.ix_(row, row)]        # ax + ay
        if not np.array_equal(lhs, rhs):
            x, y = np.argwhere(lhs != rhs)[0]
            w = (a, int(x), int(y))
            break
    laws.append(LawCheck("action-additive", w is None, w))

    lhs = act[sadd]                        # (a+b)x
    rhs = add[act[:, None, :], act[None, :, :]]     # ax + bx
    w = None
    if not np.array_equal(lhs, rhs):
        a, b, x = np.argwhere(lhs != rhs)[0]
        w = (int(a), int(b), int(x))
    laws.append(LawCheck("scalar-additive", w is None, w))

    bad = np.argwhere(act[s.one] != np.arange(m.size))
    laws.append(LawCheck("action-unital", len(bad) == 0,
                         (int(bad[0][0]),) if len(bad) else None))

    w = None
    bad = np.argwhere(act[s.zero] != m.zero)
    if len(bad):
        w = (s.zero, int(bad[0][0]))
    else:
        bad = np.argwhere(act[:, m.zero] != m.zero)
        if len(bad):
            w = (int(bad[0][0]), m.zero)
    laws.append(LawCheck("action-zero", w is None, w))

    if is_additively_idempotent(s):
        w = None
        bad = np.argwhere(add.diagonal() != np.arange(m.size))
        if len(bad):
            w = (int(bad[0][0]),)
        laws.append(LawCheck("add-idempotent", w is None, w))
    return AxiomReport("semimodule", tuple(laws))


# ----- free semimodules ----------------------------------------------------

@dataclass(frozen=True)
class FreeSemimodule(FiniteSemimodule):
    """Functions from a finite point set into the scalars, pointwise.

    Carrier index i encodes the coefficient tuple big-endian in base |S|,
    so indices sort the same way vectors do."""

    points: Tuple[str, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "points", tuple(str(p) for p in self.points))

    def vector(self, i: int) -> Tuple[int, ...]:
        out = []
        for _ in self.points:
            out.append(i % self.scalars.size)
            i //= self.scalars.size
        return tuple(reversed(out))

    def index(self, vec: Sequence[int]) -> int:
        i = 0
        for v in vec:
            i = i * self.scalars.size + int(v)
        return i

    @cached_property
    def basis(self) -> Tuple[int, ...]:
        """One indicator per point: the scalar one there, zero elsewhere."""
        out = []
        for j in range(len(self.points)):
            vec = [self.scalars.zero] * len(self.points)
            vec[j] = self.scalars.one
            out.append(self.index(vec))
        return tuple(out)


def free_semimodule(s: FiniteSemiring, points: Sequence[str],
                    max_carrier: int = MAX_CARRIER) -> FreeSemimodule:
    """The pointwise module of maps points -> s."""
    pts = tuple(str(p) for p in points)
    size = s.size ** len(pts)
    if size > max_carrier:
        raise SizeGuard(f"free module would have {size} elements")
    vecs = list(itertools.product(range(s.size), repeat=len(pts)))
    index = {v: i for i, v in enumerate(vecs)}
    add = tuple(tuple(index[tuple(s.add[a][b] for a, b in zip(u, v))]
                      for v in vecs) for u in vecs)
    action = tuple(tuple(index[tuple(s.mul[a][c] for c in v)] for v in vecs)
                   for a in range(s.size))
    if len(pts) == 1:
        labels = tuple(s.label(v[0]) for v in vecs)
    else:
        labels = tuple("(" + ",".join(s.label(c) for c in v) + ")" for v in vecs)
    zero = index[(s.zero,) * len(pts)]
    return FreeSemimodule(scalars=s, size=size, add=add, zero=zero,
                          action=action, labels=labels, points=pts)


def module_over_self(s: FiniteSemiring) -> FiniteSemimodule:
    """The semiring acting on its own additive monoid by multiplication."""
    return FiniteSemimodule(scalars=s, size=s.size, add=s.add, zero=s.zero,
                            action=s.mul, labels=s.labels)


def trivial_module(s: FiniteSemiring) -> FiniteSemimodule:
    return FiniteSemimodule(scalars=s, size=1, add=((0,),), zero=0,
                            action=tuple((0,) for _ in range(s.size)),
                            labels=("0",))


# ----- generation -----------------------------------------------------------

def _span(m: FiniteSemimodule, gens: Iterable[int]) -> Set[int]:
    seen = {m.zero} | {int(g) for g in gens}
    changed = True
    while changed:
        changed = False
        cur = list(seen)
        for x in cur:
            for y in cur:
                r = m.add[x][y]
                if r not in seen:
                    seen.add(r)
                    changed = True
        for a in range(m.scalars.size):
            row = m.action[a]
            for x in cur:
                r = row[x]
                if r not in seen:
                    seen.add(r)
                    changed = True
    return seen


@dataclass(frozen=True)
class Subsemimodule(FiniteSemimodule):
    """A subsemimodule on its own indices; members maps back to the parent."""

    members: Tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "members", tuple(int(x) for x in self.members))


def generate(m: FiniteSemimodule, gens: Iterable[int]) -> Subsemimodule:
    """Least subsemimodule of m containing gens (always contains zero)."""
    members = sorted(_span(m, gens))
    pos = {x: i for i, x in enumerate(members)}
    add = tuple(tuple(pos[m.add[x][y]] for y in members) for x in members)
    action = tuple(tuple(pos[m.action[a][x]] for x in members)
                   for a in range(m.scalars.size))
    labels = tuple(m.label(x) for x in members)
    return Subsemimodule(scalars=m.scalars, size=len(members), add=add,
                         zero=pos[m.zero], action=action, labels=labels,
                         members=tuple(members))


def minimal_generating_set(m: FiniteSemimodule) -> Tuple[int, ...]:
    """Greedy removal until no element is spanned by the others.

    Deterministic but not claimed minimum-cardinality; any output generates
    the whole module, which is all hom enumeration needs."""
    cur = [x for x in range(m.size) if x != m.zero]
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(cur):
            rest = cur[:i] + cur[i + 1:]
            if x in _span(m, rest):
                cur = rest
                changed = True
                break
    return tuple(cur)


def _derivation_order(m: FiniteSemimodule, gens: Sequence[int]):
    """A first-found derivation of every element from the generators."""
    deriv: Dict[int, tuple] = {m.zero: ("zero",)}
    order: List[int] = [m.zero]
    for i, g in enumerate(gens):
        if g not in deriv:
            deriv[g] = ("gen", i)
            order.append(g)
    changed = True
    while changed:
        changed = False
        known = list(order)
        for x in known:
            for y in known:
                r = m.add[x][y]
                if r not in deriv:
                    deriv[r] = ("add", x, y)
                    order.append(r)
                    changed = True
        for a in range(m.scalars.size):
            row = m.action[a]
            for x in known:
                r = row[x]
                if r not in deriv:
                    deriv[r] = ("act", a, x)
                    order.append(r)
                    changed = True
    if len(order) != m.size:
        raise ValueError("generators do not span the module")
    return order, deriv


# ----- homomorphisms --------------------------------------------------------

@dataclass(frozen=True)
class SemimoduleHom:
    """A map preserving addition, zero, and the scalar action."""

    source: FiniteSemimodule
    target: FiniteSemimodule
    mapping: Tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        if len(mapping) != self.source.size:
            raise MalformedTable("hom length mismatch")
        if any(not 0 <= v < self.target.size for v in mapping):
            raise MalformedTable("hom image out of range")
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def validate(self) -> "SemimoduleHom":
        from .errors import NotAHom
        m, n, h = self.source, self.target, self.mapping
        if h[m.zero] != n.zero:
            raise NotAHom("zero not preserved")
        for x in range(m.size):
            for y in range(m.size):
                if h[m.add[x][y]] != n.add[h[x]][h[y]]:
                    raise NotAHom(f"addition not preserved at ({x}, {y})")
        for a in range(m.scalars.size):
            srow, trow = m.action[a], n.action[a]
            for x in range(m.size):
                if h[srow[x]] != trow[h[x]]:
                    raise NotAHom(f"action not preserved at ({a}, {x})")
        return self

    def is_onto(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.size


def _is_hom(m: FiniteSemimodule, n: FiniteSemimodule,
            img: Sequence[int]) -> bool:
    if img[m.zero] != n.zero:
        return False
    for x in range(m.size):
        hx = img[x]
        arow = m.add[x]
        for y in range(m.size):
            if img[arow[y]] != n.add[hx][img[y]]:
                return False
    for a in range(m.scalars.size):
        srow, trow = m.action[a], n.action[a]
        for x in range(m.size):
            if img[srow[x]] != trow[img[x]]:
                return False
    return True


@dataclass(frozen=True)
class HomSemilattice:
    """Every hom between two modules, with the pointwise monoid structure."""

    source: FiniteSemimodule
    target: FiniteSemimodule
    homs: Tuple[SemimoduleHom, ...]

    def __len__(self) -> int:
        return len(self.homs)

    def __iter__(self):
        return iter(self.homs)

    def __getitem__(self, i: int) -> SemimoduleHom:
        return self.homs[i]

    @cached_property
    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {h.mapping: i for i, h in enumerate(self.homs)}

    def position(self, h: SemimoduleHom) -> int:
        return self._index[h.mapping]

    @cached_property
    def zero_index(self) -> int:
        return self._index[(self.target.zero,) * self.source.size]

    def plus(self, i: int, j: int) -> int:
        fi, fj = self.homs[i].mapping, self.homs[j].mapping
        s = tuple(self.target.add[a][b] for a, b in zip(fi, fj))
        return self._index[s]

    @cached_property
    def add_table(self) -> Table:
        n = len(self.homs)
        return tuple(tuple(self.plus(i, j) for j in range(n)) for i in range(n))

    def monoid_report(self) -> AxiomReport:
        t = np.array(self.add_table, dtype=np.intp)
        checks = (("add-associative", _first_assoc_failure(t)),
                  ("add-commutative", _first_comm_failure(t)),
                  ("add-identity", _first_identity_failure(t, self.zero_index)))
        return AxiomReport("hom-monoid",
                           tuple(LawCheck(n_, w is None, w) for n_, w in checks))

    def to_module(self) -> FiniteSemimodule:
        """Pointwise scalar action; only sound for commutative scalars."""
        s = self.source.scalars
        if any(s.mul[a][b] != s.mul[b][a]
               for a in range(s.size) for b in range(s.size)):
            raise ScalarMismatch("pointwise action needs commutative scalars")
        action = tuple(
            tuple(self._index[tuple(self.target.action[a][v] for v in h.mapping)]
                  for h in self.homs)
            for a in range(s.size))
        labels = tuple(",".join(map(str, h.mapping)) for h in self.homs)
        return FiniteSemimodule(scalars=s, size=len(self.homs),
                                add=self.add_table, zero=self.zero_index,
                                action=action, labels=labels)


def hom_set(m: FiniteSemimodule, n: FiniteSemimodule,
            max_enum: int = MAX_ENUM) -> HomSemilattice:
    """All homs m -> n, ordered lexicographically by generator images."""
    if not same_scalars(m.scalars, n.scalars):
        raise ScalarMismatch("hom set needs a common scalar semiring")
    gens = minimal_generating_set(m)
    total = n.size ** len(gens)
    if total > max_enum:
        raise EnumGuard(f"{total} candidate assignments exceed the bound")
    order, deriv = _derivation_order(m, gens)
    homs = []
    img = [0] * m.size
    for assign in itertools.product(range(n.size), repeat=len(gens)):
        for x in order:
            d = deriv[x]
            if d[0] == "zero":
                img[x] = n.zero
            elif d[0] == "gen":
                img[x] = assign[d[1]]
            elif d[0] == "add":
                img[x] = n.add[img[d[1]]][img[d[2]]]
            else:
                img[x] = n.action[d[1]][img[d[2]]]
        if _is_hom(m, n, img):
            homs.append(SemimoduleHom(m, n, tuple(img)))
    return HomSemilattice(m, n, tuple(homs))


def compose_module_homs(g: SemimoduleHom, f: SemimoduleHom) -> SemimoduleHom:
    """g after f."""
    if f.target is not g.source and f.target.add != g.source.add:
        raise ScalarMismatch("middle modules disagree")
    return SemimoduleHom(f.source, g.target,
                         tuple(g.mapping[v] for v in f.mapping))


# ----- endomorphism semirings -----------------------------------------------

@dataclass(frozen=True)
class EndSemiring:
    """Endomorphisms under pointwise sum and composition.

    order "diagrammatic" multiplies by applying the left factor first;
    "classical" composes the usual way round."""

    module: FiniteSemimodule
    semiring: FiniteSemiring
    homs: Tuple[SemimoduleHom, ...]
    order: str


def end_semiring(m: FiniteSemimodule, order: str = "diagrammatic",
                 max_enum: int = MAX_ENUM) -> EndSemiring:
    if order not in ("diagrammatic", "classical"):
        raise ValueError("order must be diagrammatic or classical")
    hs = hom_set(m, m, max_enum)
    k = len(hs.homs)
    pos = hs._index
    def compose(i: int, j: int) -> int:
        fi, fj = hs.homs[i].mapping, hs.homs[j].mapping
        if order == "diagrammatic":
            return pos[tuple(fj[v] for v in fi)]
        return pos[tuple(fi[v] for v in fj)]
    mul = tuple(tuple(compose(i, j) for j in range(k)) for i in range(k))
    one = pos[tuple(range(m.size))]
    labels = tuple(",".join(map(str, h.mapping)) for h in hs.homs)
    ring = FiniteSemiring(k, hs.add_table, mul, hs.zero_index, one, labels)
    return EndSemiring(m, ring, hs.homs, order)


def additive_monoid_module(s: FiniteSemiring) -> FiniteSemimodule:
    """The additive monoid of s over the two-element boolean semiring, so
    module endomorphisms are exactly monoid endomorphisms."""
    return FiniteSemimodule(scalars=boolean_semiring(), size=s.size,
                            add=s.add, zero=s.zero,
                            action=((s.zero,) * s.size, tuple(range(s.size))),
                            labels=s.labels)


@dataclass(frozen=True)
class XiEmbedding:
    """Right translations a -> (x -> x*a) inside End of the additive monoid.

    With the diagrammatic product on End this is a semiring homomorphism for
    any scalars, commutative or not, and x = one recovers a."""

    source: FiniteSemiring
    end: EndSemiring
    hom: SemiringHom
    injective: bool
    unit_witness: bool

    @property
    def mapping(self) -> Tuple[int, ...]:
        return self.hom.mapping


def xi_embedding(s: FiniteSemiring, max_enum: int = MAX_ENUM) -> XiEmbedding:
    monoid = additive_monoid_module(s)
    end = end_semiring(monoid, max_enum=max_enum)
    pos = {h.mapping: i for i, h in enumerate(end.homs)}
    mapping = tuple(pos[tuple(s.mul[x][a] for x in range(s.size))]
                    for a in range(s.size))
    hom = SemiringHom(s, end.semiring, mapping)
    hom.validate()
    injective = len(set(mapping)) == s.size
    unit = all(end.homs[mapping[a]].mapping[s.one] == a for a in range(s.size))
    return XiEmbedding(s, end, hom, injective, unit)


# ----- strong modules over MV scalars ----------------------------------------

@dataclass(frozen=True)
class StrongnessResult:
    strong: bool
    witness: Optional[Tuple[int, int, int]] = None   # (a, b, x)

    def __bool__(self) -> bool:
        return self.strong


def is_strong(alg: MvAlgebra, m: FiniteSemimodule) -> StrongnessResult:
    """Whenever two scalars act identically, their negations must as well."""
    if not same_scalars(reduct_vee_odot(alg), m.scalars):
        raise ScalarMismatch("module must live over the join-product reduct")
    for a in range(alg.size):
        for b in range(a + 1, alg.size):
            if m.action[a] != m.action[b]:
                continue
            ra, rb = m.action[alg.star[a]], m.action[alg.star[b]]
            if ra != rb:
                x = next(i for i in range(m.size) if ra[i] != rb[i])
                return StrongnessResult(False, (a, b, x))
    return StrongnessResult(True)


@dataclass(frozen=True)
class EndMvResult:
    """Whether the action image carries the involution of the scalars."""

    well_defined: bool
    conflict: Optional[Tuple[int, int]]
    image_algebra: Optional[MvAlgebra]
    image_valid: Optional[bool]


def endmv_check(alg: MvAlgebra, m: FiniteSemimodule) -> EndMvResult:
    """Group scalars by their action map and transport star to the classes.

    Independent of is_strong: this works on the image partition, not on
    scalar pairs, and additionally rebuilds the image as an algebra."""
    if not same_scalars(reduct_vee_odot(alg), m.scalars):
        raise ScalarMismatch("module must live over the join-product reduct")
    cls: Dict[Tuple[int, ...], int] = {}
    of: List[int] = []
    reps: List[int] = []
    for a in range(alg.size):
        row = m.action[a]
        if row not in cls:
            cls[row] = len(reps)
            reps.append(a)
        of.append(cls[row])
    star_of: Dict[int, int] = {}
    for a in range(alg.size):
        c, sc = of[a], of[alg.star[a]]
        if c in star_of and star_of[c] != sc:
            other = next(b for b in range(a) if of[b] == c
                         and of[alg.star[b]] != sc)
            return EndMvResult(False, (other, a), None, None)
        star_of[c] = sc
    k = len(reps)
    oplus = []
    for i in range(k):
        row = []
        for j in range(k):
            vals = {of[alg.oplus[a][b]]
                    for a in range(alg.size) if of[a] == i
                    for b in range(alg.size) if of[b] == j}
            if len(vals) != 1:
                return EndMvResult(False, (reps[i], reps[j]), None, None)
            row.append(vals.pop())
        oplus.append(tuple(row))
    image = MvAlgebra(k, tuple(oplus), tuple(star_of[i] for i in range(k)),
                      of[alg.zero], tuple(alg.label(r) for r in reps))
    return EndMvResult(True, None, image, check_mv_axioms(image).valid)


# ----- quotients and scalar restriction ---------------------------------------

@dataclass(frozen=True)
class QuotientModuleResult:
    module: FiniteSemimodule
    classes: Tuple[Tuple[int, ...], ...]
    strongness: StrongnessResult


def quotient_module_from_ideal(alg: MvAlgebra, ideal) -> QuotientModuleResult:
    """The quotient algebra's join semilattice with product action by alg."""
    q = quotient(alg, ideal)
    b = q.algebra
    cls = q.hom.mapping
    scal = reduct_vee_odot(alg)
    action = []
    for a in range(alg.size):
        row = []
        for block in q.classes:
            images = {cls[alg.times(a, x)] for x in block}
            if len(images) != 1:
                raise IllDefinedAction(f"scalar {a} tears a class apart")
            row.append(images.pop())
        action.append(tuple(row))
    module = FiniteSemimodule(scalars=scal, size=b.size, add=b.vee,
                              zero=b.zero, action=tuple(action),
                              labels=b.labels)
    return QuotientModuleResult(module, q.classes, is_strong(alg, module))


def restrict_scalars(h: SemiringHom, n: FiniteSemimodule) -> FiniteSemimodule:
    """Pull the action back along a validated semiring hom; carrier unchanged."""
    h.validate()
    if not same_scalars(h.target, n.scalars):
        raise ScalarMismatch("hom target must be the module's scalars")
    action = tuple(n.action[h.mapping[a]] for a in range(h.source.size))
    return FiniteSemimodule(scalars=h.source, size=n.size, add=n.add,
                            zero=n.zero, action=action, labels=n.labels)


# ----- free universal property -----------------------------------------------

def free_universal_property(f: FreeSemimodule, m: FiniteSemimodule,
                            max_enum: int = MAX_ENUM) -> dict:
    """Every map from the points into m extends to exactly one hom.

    Existence is checked by building the linear-combination extension and
    validating it; uniqueness by counting extensions among all homs."""
    if not same_scalars(f.scalars, m.scalars):
        raise ScalarMismatch("target must share the scalars")
    npts = len(f.points)
    total = m.size ** npts
    if total > max_enum:
        raise EnumGuard(f"{total} point maps exceed the bound")
    homs = hom_set(f, m, max_enum)
    existence = 0
    uniqueness = 0
    for imgs in itertools.product(range(m.size), repeat=npts):
        built = tuple(m.sum(m.act(c, imgs[j])
                            for j, c in enumerate(f.vector(i)))
                      for i in range(f.size))
        if not _is_hom(f, m, built):
            existence += 1
            continue
        matches = [h for h in homs
                   if all(h(f.basis[j]) == imgs[j] for j in range(npts))]
        if len(matches) != 1 or matches[0].mapping != built:
            uniqueness += 1
    return {"maps": total, "existence_failures": existence,
            "uniqueness_failures": uniqueness,
            "ok": existence == 0 and uniqueness == 0}
