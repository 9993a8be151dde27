"""Finite MV-algebras: chains, products, reducts, ideals, and truncation.

An algebra is a table for the truncated sum together with an involution table;
everything else (product, lattice, order) is derived. Two semiring reducts are
available, exchanged by the involution, and the truncation map from the
min-plus rationals produces the chains.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Optional, Tuple, Union

import numpy as np

from .config import MAX_CARRIER, MAX_ENUM
from .errors import (ChainTooShort, EnumGuard, MalformedTable, NotAHom,
                     NotAnIdeal, SizeGuard, TooManyVariables)
from .semiring import (AxiomReport, FiniteSemiring, LawCheck, SemiringHom,
                       Table, _first_assoc_failure, _first_comm_failure,
                       _first_identity_failure, freeze_table, freeze_unary,
                       is_additively_idempotent, natural_order)
from .tropical import TOP, Trop, TropicalUSemifield, trop, trop_meet, trop_prod


@dataclass(frozen=True)
class MvAlgebra:
    """An MV-algebra on {0..size-1}: truncated sum, involution, bottom."""

    size: int
    oplus: Table
    star: Tuple[int, ...]
    zero: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "oplus", freeze_table(self.oplus, self.size, "oplus"))
        object.__setattr__(self, "star", freeze_unary(self.star, self.size, "star"))
        if not 0 <= self.zero < self.size:
            raise MalformedTable("zero index out of range")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.size:
                raise MalformedTable("labels must match carrier size")
            object.__setattr__(self, "labels", labels)

    @property
    def one(self) -> int:
        return self.star[self.zero]

    def plus(self, a: int, b: int) -> int:
        return self.oplus[a][b]

    def neg(self, a: int) -> int:
        return self.star[a]

    def times(self, a: int, b: int) -> int:
        return self.star[self.oplus[self.star[a]][self.star[b]]]

    def join(self, a: int, b: int) -> int:
        return self.oplus[self.times(a, self.star[b])][b]

    def meet(self, a: int, b: int) -> int:
        return self.star[self.join(self.star[a], self.star[b])]

    def leq(self, a: int, b: int) -> bool:
        return self.join(a, b) == b

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    @cached_property
    def odot(self) -> Table:
        return tuple(tuple(self.times(a, b) for b in range(self.size))
                     for a in range(self.size))

    @cached_property
    def vee(self) -> Table:
        return tuple(tuple(self.join(a, b) for b in range(self.size))
                     for a in range(self.size))

    @cached_property
    def wedge(self) -> Table:
        return tuple(tuple(self.meet(a, b) for b in range(self.size))
                     for a in range(self.size))

    def core(self):
        return (self.size, self.oplus, self.star, self.zero)


def check_mv_axioms(a: MvAlgebra) -> AxiomReport:
    """Commutative-monoid laws plus involution, top absorption, and the
    characteristic exchange law, checked exhaustively."""
    t = np.array(a.oplus, dtype=np.int64)
    checks = [
        ("oplus-associative", _first_assoc_failure(t)),
        ("oplus-commutative", _first_comm_failure(t)),
        ("oplus-identity", _first_identity_failure(t, a.zero)),
    ]
    inv = next(((x,) for x in range(a.size) if a.star[a.star[x]] != x), None)
    checks.append(("involution", inv))
    one = a.one
    top = next(((x,) for x in range(a.size) if a.oplus[x][one] != one), None)
    checks.append(("top-absorbing", top))
    exch = None
    for x in range(a.size):
        for y in range(a.size):
            lhs = a.oplus[a.star[a.oplus[a.star[x]][y]]][y]
            rhs = a.oplus[a.star[a.oplus[a.star[y]][x]]][x]
            if lhs != rhs:
                exch = (x, y)
                break
        if exch:
            break
    checks.append(("exchange", exch))
    laws = tuple(LawCheck(name, w is None, w) for name, w in checks)
    return AxiomReport("mv-algebra", laws)


def lattice_report(a: MvAlgebra) -> AxiomReport:
    """The derived order is a bounded lattice with join/meet as lub/glb."""
    n = a.size
    leq = [[a.leq(x, y) for y in range(n)] for x in range(n)]
    checks = []
    w = next(((x,) for x in range(n) if not leq[x][x]), None)
    checks.append(("order-reflexive", w))
    w = next(((x, y) for x in range(n) for y in range(n)
              if x != y and leq[x][y] and leq[y][x]), None)
    checks.append(("order-antisymmetric", w))
    w = next(((x, y, z) for x in range(n) for y in range(n) for z in range(n)
              if leq[x][y] and leq[y][z] and not leq[x][z]), None)
    checks.append(("order-transitive", w))
    w = next(((x,) for x in range(n)
              if not (leq[a.zero][x] and leq[x][a.one])), None)
    checks.append(("bounded", w))

    def is_lub(x, y, j):
        if not (leq[x][j] and leq[y][j]):
            return False
        return all(leq[j][u] for u in range(n) if leq[x][u] and leq[y][u])

    def is_glb(x, y, m):
        if not (leq[m][x] and leq[m][y]):
            return False
        return all(leq[u][m] for u in range(n) if leq[u][x] and leq[u][y])

    w = next(((x, y) for x in range(n) for y in range(n)
              if not is_lub(x, y, a.join(x, y))), None)
    checks.append(("join-is-lub", w))
    w = next(((x, y) for x in range(n) for y in range(n)
              if not is_glb(x, y, a.meet(x, y))), None)
    checks.append(("meet-is-glb", w))
    laws = tuple(LawCheck(name, wit is None, wit) for name, wit in checks)
    return AxiomReport("mv-lattice", laws)


def lukasiewicz_chain(k: int) -> MvAlgebra:
    """The k-element chain 0, 1/(k-1), ..., 1 with truncated addition."""
    if k < 2:
        raise ChainTooShort("a chain needs at least 2 elements")
    top = k - 1
    oplus = tuple(tuple(min(i + j, top) for j in range(k)) for i in range(k))
    star = tuple(top - i for i in range(k))
    labels = tuple(str(Fraction(i, top)) for i in range(k))
    return MvAlgebra(k, oplus, star, 0, labels)


def mv_product(a: MvAlgebra, b: MvAlgebra,
               max_carrier: int = MAX_CARRIER) -> MvAlgebra:
    """Componentwise product; element (x, y) sits at index x*|B| + y."""
    size = a.size * b.size
    if size > max_carrier:
        raise SizeGuard(f"product carrier {size} exceeds max_carrier={max_carrier}")
    idx = lambda x, y: x * b.size + y
    oplus = tuple(tuple(idx(a.oplus[x1][x2], b.oplus[y1][y2])
                        for x2 in range(a.size) for y2 in range(b.size))
                  for x1 in range(a.size) for y1 in range(b.size))
    star = tuple(idx(a.star[x], b.star[y])
                 for x in range(a.size) for y in range(b.size))
    labels = tuple(f"({a.label(x)},{b.label(y)})"
                   for x in range(a.size) for y in range(b.size))
    return MvAlgebra(size, oplus, star, idx(a.zero, b.zero), labels)


@dataclass(frozen=True)
class LeqEquivalence:
    """Outcome of the four equivalent descriptions of the natural order."""

    holds: bool
    via_star_sum: bool
    via_product_zero: bool
    via_absorption: bool
    via_difference: bool
    witness_z: Optional[int]
    internally_consistent: bool


def leq_equivalence_check(a: MvAlgebra, x: int, y: int) -> LeqEquivalence:
    """Evaluate all four characterizations of x <= y and cross-check them."""
    c1 = a.oplus[a.star[x]][y] == a.one
    c2 = a.times(x, a.star[y]) == a.zero
    c3 = a.oplus[x][a.times(y, a.star[x])] == y
    witness = next((z for z in range(a.size) if a.oplus[x][z] == y), None)
    c4 = witness is not None
    consistent = c1 == c2 == c3 == c4
    return LeqEquivalence(c1 and consistent, c1, c2, c3, c4, witness, consistent)


def reduct_vee_odot(a: MvAlgebra) -> FiniteSemiring:
    """The join/product semiring reduct; the default scalar structure."""
    return FiniteSemiring(a.size, a.vee, a.odot, a.zero, a.one, a.labels)


def reduct_wedge_oplus(a: MvAlgebra) -> FiniteSemiring:
    """The meet/sum semiring reduct; top is its additive neutral."""
    return FiniteSemiring(a.size, a.wedge, a.oplus, a.one, a.zero, a.labels)


def star_reduct_isomorphism(a: MvAlgebra) -> SemiringHom:
    """The involution as a semiring isomorphism between the two reducts."""
    hom = SemiringHom(reduct_vee_odot(a), reduct_wedge_oplus(a), a.star)
    hom.validate()
    if not hom.is_bijective():
        raise NotAHom("involution is not bijective")
    return hom


@dataclass(frozen=True)
class NegationCheck:
    """Whether a star map turns an idempotent semiring into an MV-semiring."""

    condition_i: LawCheck
    condition_ii: LawCheck
    is_mv_semiring: bool
    recovered: Optional[MvAlgebra]
    recovered_report: Optional[AxiomReport]


def mv_semiring_negation_check(s: FiniteSemiring,
                               star: Tuple[int, ...]) -> NegationCheck:
    """Check the two negation conditions on an additively idempotent
    commutative semiring, then rebuild the truncated sum and validate it."""
    star = freeze_unary(star, s.size, "star")
    if not is_additively_idempotent(s):
        raise MalformedTable("negation check needs an additively idempotent semiring")
    order = natural_order(s)
    w1 = None
    for a in range(s.size):
        for b in range(s.size):
            if (s.mul[a][b] == s.zero) != order[b][star[a]]:
                w1 = (a, b)
                break
        if w1:
            break
    w2 = None
    for a in range(s.size):
        sa = star[a]
        for b in range(s.size):
            rhs = star[s.mul[sa][star[s.mul[sa][b]]]]
            if s.add[a][b] != rhs:
                w2 = (a, b)
                break
        if w2:
            break
    cond_i = LawCheck("product-vanishes-iff-below-negation", w1 is None, w1)
    cond_ii = LawCheck("join-recovered-from-negation", w2 is None, w2)
    recovered = None
    report = None
    ok = cond_i.ok and cond_ii.ok
    if ok:
        oplus = tuple(tuple(star[s.mul[star[a]][star[b]]] for b in range(s.size))
                      for a in range(s.size))
        recovered = MvAlgebra(s.size, oplus, star, s.zero, s.labels)
        report = check_mv_axioms(recovered)
        ok = report.valid
    return NegationCheck(cond_i, cond_ii, ok, recovered, report)


def distance(a: MvAlgebra, x: int, y: int) -> int:
    """Symmetric difference d(x, y) = (x * y~) + (y * x~)."""
    return a.oplus[a.times(x, a.star[y])][a.times(y, a.star[x])]


def is_ideal(a: MvAlgebra, subset) -> bool:
    members = set(subset)
    if a.zero not in members:
        return False
    for x in members:
        for y in members:
            if a.oplus[x][y] not in members:
                return False
        for y in range(a.size):
            if a.leq(y, x) and y not in members:
                return False
    return True


def ideals(a: MvAlgebra, max_enum: int = MAX_ENUM) -> Tuple[Tuple[int, ...], ...]:
    """All ideals, by exhaustive subset scan (downward closed, sum closed)."""
    if 2 ** a.size > max_enum:
        raise EnumGuard(f"2^{a.size} subsets exceed max_enum={max_enum}")
    found = []
    for mask in range(2 ** a.size):
        subset = [x for x in range(a.size) if mask >> x & 1]
        if subset and is_ideal(a, subset):
            found.append(tuple(subset))
    found.sort(key=lambda t: (len(t), t))
    return tuple(found)


Partition = Tuple[Tuple[int, ...], ...]


def congruence_from_ideal(a: MvAlgebra, ideal) -> Partition:
    """Classes of the relation d(x, y) in I, as sorted blocks."""
    members = frozenset(ideal)
    if not is_ideal(a, members):
        raise NotAnIdeal(f"{sorted(members)} is not an ideal")
    related = [[distance(a, x, y) in members for y in range(a.size)]
               for x in range(a.size)]
    for x in range(a.size):
        if not related[x][x]:
            raise NotAnIdeal("relation not reflexive")  # cannot happen for an ideal
        for y in range(a.size):
            if related[x][y] != related[y][x]:
                raise NotAnIdeal("relation not symmetric")
            for z in range(a.size):
                if related[x][y] and related[y][z] and not related[x][z]:
                    raise NotAnIdeal("relation not transitive")
    seen = set()
    blocks = []
    for x in range(a.size):
        if x in seen:
            continue
        block = tuple(y for y in range(a.size) if related[x][y])
        seen.update(block)
        blocks.append(block)
    return tuple(blocks)


def ideal_from_congruence(a: MvAlgebra, partition: Partition) -> Tuple[int, ...]:
    """The class of zero; the partition must be an MV-congruence."""
    blocks = tuple(tuple(sorted(b)) for b in partition)
    flat = sorted(x for b in blocks for x in b)
    if flat != list(range(a.size)):
        raise NotAnIdeal("partition does not cover the carrier exactly once")
    cls = {}
    for i, b in enumerate(blocks):
        for x in b:
            cls[x] = i
    for b in blocks:
        r = b[0]
        for x in b:
            if cls[a.star[x]] != cls[a.star[r]]:
                raise NotAnIdeal("partition not compatible with the involution")
            for y in range(a.size):
                if cls[a.oplus[x][y]] != cls[a.oplus[r][y]]:
                    raise NotAnIdeal("partition not compatible with the sum")
    zero_class = blocks[cls[a.zero]]
    if not is_ideal(a, zero_class):
        raise NotAnIdeal("class of zero is not an ideal")
    return zero_class


@dataclass(frozen=True)
class MvHom:
    """A map between MV-algebras preserving sum, involution, and bottom."""

    source: MvAlgebra
    target: MvAlgebra
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping",
                           freeze_unary(self.mapping, self.source.size, "hom",
                                        bound=self.target.size))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def validate(self) -> None:
        s, t, h = self.source, self.target, self.mapping
        if h[s.zero] != t.zero:
            raise NotAHom("zero not preserved")
        for x in range(s.size):
            if h[s.star[x]] != t.star[h[x]]:
                raise NotAHom(f"involution not preserved at {x}")
            for y in range(s.size):
                if h[s.oplus[x][y]] != t.oplus[h[x]][h[y]]:
                    raise NotAHom(f"sum not preserved at ({x}, {y})")

    def is_onto(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def as_vee_odot_hom(self) -> SemiringHom:
        return SemiringHom(reduct_vee_odot(self.source),
                           reduct_vee_odot(self.target), self.mapping)

    def as_wedge_oplus_hom(self) -> SemiringHom:
        return SemiringHom(reduct_wedge_oplus(self.source),
                           reduct_wedge_oplus(self.target), self.mapping)


@dataclass(frozen=True)
class QuotientResult:
    algebra: MvAlgebra
    hom: MvHom
    classes: Partition


def quotient(a: MvAlgebra, ideal) -> QuotientResult:
    """The quotient algebra modulo an ideal, with its canonical projection."""
    blocks = congruence_from_ideal(a, ideal)
    cls = {}
    for i, b in enumerate(blocks):
        for x in b:
            cls[x] = i
    for b in blocks:
        r = b[0]
        for x in b:
            if cls[a.star[x]] != cls[a.star[r]]:
                raise NotAnIdeal("involution not constant on a class")
            for y in range(a.size):
                if cls[a.oplus[x][y]] != cls[a.oplus[r][y]]:
                    raise NotAnIdeal("sum not constant on a class")
    n = len(blocks)
    oplus = tuple(tuple(cls[a.oplus[blocks[i][0]][blocks[j][0]]] for j in range(n))
                  for i in range(n))
    star = tuple(cls[a.star[blocks[i][0]]] for i in range(n))
    labels = tuple("[" + a.label(b[0]) + "]" for b in blocks)
    alg = MvAlgebra(n, oplus, star, cls[a.zero], labels)
    report = check_mv_axioms(alg)
    if not report.valid:
        raise NotAnIdeal(f"quotient fails {report.failures()[0].name}")
    hom = MvHom(a, alg, tuple(cls[x] for x in range(a.size)))
    hom.validate()
    return QuotientResult(alg, hom, blocks)


@dataclass(frozen=True)
class BooleanCenter:
    elements: Tuple[int, ...]
    algebra: MvAlgebra


def boolean_center(a: MvAlgebra) -> BooleanCenter:
    """The sum-idempotent elements, as a Boolean subalgebra."""
    elems = tuple(x for x in range(a.size) if a.oplus[x][x] == x)
    for x in range(a.size):
        if (a.oplus[x][x] == x) != (a.times(x, x) == x):
            raise MalformedTable("idempotents for sum and product disagree; not an MV-algebra")
    index = {x: i for i, x in enumerate(elems)}
    for x in elems:
        if a.star[x] not in index:
            raise MalformedTable("center not closed under involution")
        for y in elems:
            if a.oplus[x][y] not in index:
                raise MalformedTable("center not closed under the sum")
    oplus = tuple(tuple(index[a.oplus[x][y]] for y in elems) for x in elems)
    star = tuple(index[a.star[x]] for x in elems)
    labels = tuple(a.label(x) for x in elems)
    sub = MvAlgebra(len(elems), oplus, star, index[a.zero], labels)
    return BooleanCenter(elems, sub)


# ----- term language ------------------------------------------------------

_SUGAR = {"oplus": 2, "star": 1, "odot": 2, "vee": 2, "wedge": 2}


def _tokens(text: str):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            out.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            out.append((text[i:j], i))
            i = j
    return out


def parse_term(text: str):
    """Parse a prefix s-expression over variables, 0, 1, and the MV ops,
    elaborating derived operations into sum and involution."""
    toks = _tokens(text)
    pos = 0

    def fail(msg, at):
        raise ValueError(f"parse error at position {at}: {msg}")

    def term():
        nonlocal pos
        if pos >= len(toks):
            fail("unexpected end of input", len(text))
        tok, at = toks[pos]
        pos += 1
        if tok == "(":
            if pos >= len(toks):
                fail("unexpected end of input", len(text))
            op, op_at = toks[pos]
            pos += 1
            if op not in _SUGAR:
                fail(f"unknown operation {op!r}", op_at)
            args = [term() for _ in range(_SUGAR[op])]
            if pos >= len(toks) or toks[pos][0] != ")":
                fail("expected ')'", toks[pos][1] if pos < len(toks) else len(text))
            pos += 1
            return _build(op, args)
        if tok == ")":
            fail("unexpected ')'", at)
        if tok == "0":
            return ("zero",)
        if tok == "1":
            return ("star", ("zero",))
        if tok in _SUGAR:
            fail(f"operation {tok!r} needs parentheses", at)
        if not tok[0].isalpha():
            fail(f"bad token {tok!r}", at)
        return ("var", tok)

    def _build(op, args):
        if op == "oplus":
            return ("oplus", args[0], args[1])
        if op == "star":
            return ("star", args[0])
        if op == "odot":
            return ("star", ("oplus", ("star", args[0]), ("star", args[1])))
        if op == "vee":
            inner = _build("odot", [args[0], ("star", args[1])])
            return ("oplus", inner, args[1])
        # wedge
        flipped = _build("vee", [("star", args[0]), ("star", args[1])])
        return ("star", flipped)

    ast = term()
    if pos != len(toks):
        fail("trailing input", toks[pos][1])
    return ast


def term_variables(ast) -> Tuple[str, ...]:
    seen = []

    def walk(t):
        if t[0] == "var" and t[1] not in seen:
            seen.append(t[1])
        for sub in t[1:]:
            if isinstance(sub, tuple):
                walk(sub)

    walk(ast)
    return tuple(sorted(seen))


def eval_term(a: MvAlgebra, ast, env: Dict[str, int]) -> int:
    if ast[0] == "zero":
        return a.zero
    if ast[0] == "var":
        return env[ast[1]]
    if ast[0] == "star":
        return a.star[eval_term(a, ast[1], env)]
    return a.oplus[eval_term(a, ast[1], env)][eval_term(a, ast[2], env)]


@dataclass(frozen=True)
class EquationResult:
    holds: bool
    counterexample: Optional[Dict[str, int]]


def equation_holds(a: MvAlgebra, lhs: Union[str, tuple], rhs: Union[str, tuple],
                   max_vars: int = 4) -> EquationResult:
    """Decide an equation by scanning all assignments to its variables."""
    left = parse_term(lhs) if isinstance(lhs, str) else lhs
    right = parse_term(rhs) if isinstance(rhs, str) else rhs
    names = tuple(sorted(set(term_variables(left)) | set(term_variables(right))))
    if len(names) > max_vars:
        raise TooManyVariables(f"{len(names)} variables exceed the bound {max_vars}")
    import itertools
    for values in itertools.product(range(a.size), repeat=len(names)):
        env = dict(zip(names, values))
        if eval_term(a, left, env) != eval_term(a, right, env):
            return EquationResult(False, env)
    return EquationResult(True, None)


# ----- truncation ---------------------------------------------------------

def gamma(f: TropicalUSemifield, a) -> Fraction:
    """Clamp a min-plus value into [0, u]; Top goes to u."""
    a = trop(a)
    if a.is_top:
        return f.u
    return min(max(a.value, Fraction(0)), f.u)


def gamma_property_report(f: TropicalUSemifield, samples: int = 10000,
                          seed: int = 42) -> dict:
    """Sampled checks that the truncation preserves meet and truncated sum.

    Meet draws are unrestricted. Sum draws come from the nonnegative values
    plus Top, which form a subsemiring on which the truncation is a
    homomorphism onto [0, u]. With mixed signs the sum law genuinely fails
    (a = -5u, b = 3u clamps a + b to 0 while the truncated sum of the clamps
    is u), so that region is disclosed as a counterexample, not sampled.
    """
    from .tropical import sample_trop
    rng = random.Random(seed)
    meet_fails = 0
    sum_fails = 0
    for _ in range(samples):
        a = sample_trop(rng)
        b = sample_trop(rng)
        if gamma(f, trop_meet(a, b)) != min(gamma(f, a), gamma(f, b)):
            meet_fails += 1
        a = sample_trop(rng, nonnegative=True)
        b = sample_trop(rng, nonnegative=True)
        if gamma(f, trop_prod(a, b)) != min(gamma(f, a) + gamma(f, b), f.u):
            sum_fails += 1
    top_ok = gamma(f, TOP) == f.u
    neg, pos = trop(-5 * f.u), trop(3 * f.u)
    mixed_breaks = (gamma(f, trop_prod(neg, pos))
                    != min(gamma(f, neg) + gamma(f, pos), f.u))
    return {"u": str(f.u), "samples": samples, "seed": seed,
            "meet_failures": meet_fails, "truncated_sum_failures": sum_fails,
            "sum_domain": "nonnegative", "mixed_sign_sum_breaks": mixed_breaks,
            "top_to_unit": top_ok,
            "ok": meet_fails == 0 and sum_fails == 0 and top_ok}


def gamma_chain(k: int, samples: int = 1000, seed: int = 42):
    """Truncate the subgroup (1/k)Z of the min-plus rationals at u = 1.

    Returns the resulting (k+1)-element algebra, built entirely by rational
    arithmetic, together with a sampled homomorphism certificate. Top is sent
    to u, the additive neutral of the meet/sum reduct. As in
    gamma_property_report, sum checks draw from the nonnegative part of the
    subgroup while meet checks draw with mixed signs.
    """
    if k < 1:
        raise ChainTooShort("truncation needs k >= 1")
    f = TropicalUSemifield(Fraction(1))
    values = [Fraction(i, k) for i in range(k + 1)]
    index = {v: i for i, v in enumerate(values)}
    oplus = tuple(tuple(index[min(x + y, f.u)] for y in values) for x in values)
    star = tuple(index[f.u - x] for x in values)
    labels = tuple(str(v) for v in values)
    alg = MvAlgebra(k + 1, oplus, star, 0, labels)

    rng = random.Random(seed)
    meet_fails = 0
    sum_fails = 0

    def draw(lo: int) -> Trop:
        if rng.random() < 0.05:
            return TOP
        return Trop(Fraction(rng.randint(lo, 3 * k), k))

    for _ in range(samples):
        a, b = draw(-3 * k), draw(-3 * k)
        if gamma(f, trop_meet(a, b)) != min(gamma(f, a), gamma(f, b)):
            meet_fails += 1
        a, b = draw(0), draw(0)
        if gamma(f, trop_prod(a, b)) != min(gamma(f, a) + gamma(f, b), f.u):
            sum_fails += 1
    cert = {"k": k, "u": "1", "samples": samples, "seed": seed,
            "meet_failures": meet_fails, "truncated_sum_failures": sum_fails,
            "sum_domain": "nonnegative",
            "top_to_unit": gamma(f, TOP) == f.u,
            "ok": meet_fails == 0 and sum_fails == 0 and gamma(f, TOP) == f.u}
    return alg, cert
