"""Matrix semirings over finite scalars, and free-module homs as matrices.

Vectors are rows and matrices act on the right, v -> v * a, so composing
actions reads left to right and the endomorphism picture needs no transpose.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .config import DEFAULT_SEED, MAX_CARRIER, MAX_ENUM
from .errors import (NoDecomposition, NotFreeBasis, ScalarMismatch,
                     ShapeMismatch, SizeGuard)
from .semiring import (FiniteSemiring, SemiringHom, check_semiring_axioms,
                       same_scalars)
from .semimodule import (EndSemiring, FiniteSemimodule, FreeSemimodule,
                         SemimoduleHom, _span, end_semiring, free_semimodule)


@dataclass(frozen=True)
class SemiringMatrix:
    scalars: FiniteSemiring
    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        ent = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise ShapeMismatch("entry grid does not match rows x cols")
        if any(not 0 <= v < self.scalars.size for row in ent for v in row):
            raise ShapeMismatch("entry out of scalar range")
        object.__setattr__(self, "entries", ent)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols


def mat_add(a: SemiringMatrix, b: SemiringMatrix) -> SemiringMatrix:
    if not same_scalars(a.scalars, b.scalars):
        raise ScalarMismatch("matrix sum needs common scalars")
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch("matrix sum needs equal shapes")
    s = a.scalars
    ent = tuple(tuple(s.add[x][y] for x, y in zip(ra, rb))
                for ra, rb in zip(a.entries, b.entries))
    return SemiringMatrix(s, a.rows, a.cols, ent)


def mat_star_mul(a: SemiringMatrix, b: SemiringMatrix) -> SemiringMatrix:
    """Row-by-column product with the scalar sum folding the terms."""
    if not same_scalars(a.scalars, b.scalars):
        raise ScalarMismatch("matrix product needs common scalars")
    if a.cols != b.rows:
        raise ShapeMismatch("inner dimensions disagree")
    s = a.scalars
    ent = tuple(tuple(s.sum(s.mul[a.entries[i][k]][b.entries[k][j]]
                            for k in range(a.cols))
                      for j in range(b.cols))
                for i in range(a.rows))
    return SemiringMatrix(s, a.rows, b.cols, ent)


def mat_identity(s: FiniteSemiring, n: int) -> SemiringMatrix:
    ent = tuple(tuple(s.one if i == j else s.zero for j in range(n))
                for i in range(n))
    return SemiringMatrix(s, n, n, ent)


def mat_zero(s: FiniteSemiring, rows: int, cols: int) -> SemiringMatrix:
    return SemiringMatrix(s, rows, cols, tuple((s.zero,) * cols
                                               for _ in range(rows)))


def is_mult_idempotent(u: SemiringMatrix) -> bool:
    if not u.is_square():
        raise ShapeMismatch("idempotent test needs a square matrix")
    return mat_star_mul(u, u).entries == u.entries


def idempotent_matrices(s: FiniteSemiring, n: int,
                        max_enum: int = MAX_ENUM) -> Tuple[SemiringMatrix, ...]:
    """All u with u*u = u in M_n(s), in entry-lexicographic order."""
    total = s.size ** (n * n)
    if total > max_enum:
        raise SizeGuard(f"{total} candidate matrices exceed the bound")
    out = []
    for flat in itertools.product(range(s.size), repeat=n * n):
        m = SemiringMatrix(s, n, n,
                           tuple(flat[i * n:(i + 1) * n] for i in range(n)))
        if is_mult_idempotent(m):
            out.append(m)
    return tuple(out)


# ----- the full matrix semiring ----------------------------------------------

@dataclass(frozen=True)
class MatrixSemiring:
    """M_n(scalars) materialized as one finite semiring; index order is
    entry-lexicographic, row-major."""

    scalars: FiniteSemiring
    n: int
    semiring: FiniteSemiring
    matrices: Tuple[SemiringMatrix, ...]

    @cached_property
    def _index(self) -> Dict[Tuple[Tuple[int, ...], ...], int]:
        return {m.entries: i for i, m in enumerate(self.matrices)}

    def index_of(self, m: SemiringMatrix) -> int:
        return self._index[m.entries]


def matrix_semiring(s: FiniteSemiring, n: int,
                    max_carrier: int = MAX_CARRIER) -> MatrixSemiring:
    total = s.size ** (n * n)
    if total > max_carrier:
        raise SizeGuard(f"matrix semiring would have {total} elements")
    flats = list(itertools.product(range(s.size), repeat=n * n))
    mats = tuple(SemiringMatrix(s, n, n,
                                tuple(f[i * n:(i + 1) * n] for i in range(n)))
                 for f in flats)
    stack = np.array(flats, dtype=np.intp).reshape(total, n, n)
    weights = (s.size ** np.arange(n * n - 1, -1, -1)).astype(np.intp)
    sadd, smul = s.np_add, s.np_mul

    add_idx = np.zeros((total, total), dtype=np.intp)
    mul_idx = np.zeros((total, total), dtype=np.intp)
    w = 0
    for i in range(n):
        for j in range(n):
            cell = sadd[stack[:, None, i, j], stack[None, :, i, j]]
            add_idx += cell * weights[w]
            prod = smul[stack[:, None, i, 0], stack[None, :, 0, j]]
            for k in range(1, n):
                term = smul[stack[:, None, i, k], stack[None, :, k, j]]
                prod = sadd[prod, term]
            mul_idx += prod * weights[w]
            w += 1

    zero = int(np.dot([s.zero] * (n * n), weights))
    one_flat = [s.one if i == j else s.zero
                for i in range(n) for j in range(n)]
    one = int(np.dot(one_flat, weights))
    labels = tuple("|".join(",".join(map(str, row)) for row in m.entries)
                   for m in mats)
    ring = FiniteSemiring(total, tuple(map(tuple, add_idx)),
                          tuple(map(tuple, mul_idx)), zero, one, labels)
    return MatrixSemiring(s, n, ring, mats)


def matrix_law_report(s: FiniteSemiring, n: int,
                      max_carrier: int = MAX_CARRIER,
                      samples: int = 2000, seed: int = DEFAULT_SEED) -> dict:
    """Semiring laws of M_n(s): exhaustive within the carrier guard,
    sampled triples beyond it."""
    total = s.size ** (n * n)
    if total <= max_carrier:
        rep = check_semiring_axioms(matrix_semiring(s, n, max_carrier).semiring)
        return {"route": "exhaustive", "carrier": total, "ok": rep.valid,
                "laws": rep.to_dict()["laws"]}
    rng = random.Random(seed)

    def draw() -> SemiringMatrix:
        return SemiringMatrix(s, n, n,
                              tuple(tuple(rng.randrange(s.size)
                                          for _ in range(n))
                                    for _ in range(n)))

    ident, zero = mat_identity(s, n), mat_zero(s, n, n)
    fails = {"add-associative": 0, "add-commutative": 0, "add-identity": 0,
             "mul-associative": 0, "mul-identity": 0, "distributive-left": 0,
             "distributive-right": 0, "zero-absorbing": 0}
    for _ in range(samples):
        a, b, c = draw(), draw(), draw()
        if mat_add(mat_add(a, b), c).entries != mat_add(a, mat_add(b, c)).entries:
            fails["add-associative"] += 1
        if mat_add(a, b).entries != mat_add(b, a).entries:
            fails["add-commutative"] += 1
        if mat_add(a, zero).entries != a.entries:
            fails["add-identity"] += 1
        if (mat_star_mul(mat_star_mul(a, b), c).entries
                != mat_star_mul(a, mat_star_mul(b, c)).entries):
            fails["mul-associative"] += 1
        if (mat_star_mul(a, ident).entries != a.entries
                or mat_star_mul(ident, a).entries != a.entries):
            fails["mul-identity"] += 1
        if (mat_star_mul(a, mat_add(b, c)).entries
                != mat_add(mat_star_mul(a, b), mat_star_mul(a, c)).entries):
            fails["distributive-left"] += 1
        if (mat_star_mul(mat_add(a, b), c).entries
                != mat_add(mat_star_mul(a, c), mat_star_mul(b, c)).entries):
            fails["distributive-right"] += 1
        if (mat_star_mul(a, zero).entries != zero.entries
                or mat_star_mul(zero, a).entries != zero.entries):
            fails["zero-absorbing"] += 1
    return {"route": "sampled", "carrier": total, "samples": samples,
            "seed": seed, "failures": fails, "ok": not any(fails.values())}


# ----- matrices as endomorphisms ----------------------------------------------

def right_action_hom(m: FreeSemimodule, a: SemiringMatrix) -> SemimoduleHom:
    """The endomorphism v -> v * a of the free row-vector module."""
    n = len(m.points)
    if a.rows != n or a.cols != n:
        raise ShapeMismatch("matrix shape must match the point count")
    s = m.scalars
    mapping = []
    for i in range(m.size):
        v = m.vector(i)
        w = tuple(s.sum(s.mul[v[r]][a.entries[r][j]] for r in range(n))
                  for j in range(n))
        mapping.append(m.index(w))
    return SemimoduleHom(m, m, tuple(mapping))


@dataclass(frozen=True)
class EtaResult:
    """The matrix semiring, the row-vector module, its endomorphism
    semiring, and the connecting map a -> (v -> v * a)."""

    matrices: MatrixSemiring
    module: FreeSemimodule
    end: EndSemiring
    hom: SemiringHom
    bijective: bool

    @property
    def counts(self) -> Tuple[int, int]:
        return (self.matrices.semiring.size, self.end.semiring.size)


def eta(s: FiniteSemiring, n: int, max_carrier: int = MAX_CARRIER,
        max_enum: int = MAX_ENUM) -> EtaResult:
    """Certify M_n(s) = End(s^n): with the apply-left-first product on
    endomorphisms the right action is a semiring map, a * b landing on
    "a then b", and it is bijective."""
    ring = matrix_semiring(s, n, max_carrier)
    module = free_semimodule(s, [str(i) for i in range(n)], max_carrier)
    end = end_semiring(module, max_enum=max_enum)
    pos = {h.mapping: i for i, h in enumerate(end.homs)}
    mapping = tuple(pos[right_action_hom(module, a).mapping]
                    for a in ring.matrices)
    hom = SemiringHom(ring.semiring, end.semiring, mapping)
    hom.validate()
    return EtaResult(ring, module, end, hom, hom.is_bijective())


# ----- free homs as matrices ---------------------------------------------------

def _require_free(m: FiniteSemimodule, side: str) -> FreeSemimodule:
    if not isinstance(m, FreeSemimodule):
        raise NotFreeBasis(f"{side} module must be free with a recorded basis")
    return m


def hom_from_matrix(k: SemiringMatrix, source: FreeSemimodule,
                    target: FreeSemimodule) -> SemimoduleHom:
    """f -> sum over x of f(x) * row x of k, as a map of row coefficients."""
    source = _require_free(source, "source")
    target = _require_free(target, "target")
    if k.rows != len(source.points) or k.cols != len(target.points):
        raise ShapeMismatch("matrix shape must be points x points")
    s = source.scalars
    mapping = []
    for i in range(source.size):
        v = source.vector(i)
        w = tuple(s.sum(s.mul[v[x]][k.entries[x][y]] for x in range(k.rows))
                  for y in range(k.cols))
        mapping.append(target.index(w))
    return SemimoduleHom(source, target, tuple(mapping))


def matrix_from_hom(h: SemimoduleHom) -> SemiringMatrix:
    """Read the matrix off the images of the basis indicators."""
    source = _require_free(h.source, "source")
    target = _require_free(h.target, "target")
    ent = tuple(target.vector(h.mapping[source.basis[x]])
                for x in range(len(source.points)))
    return SemiringMatrix(source.scalars, len(source.points),
                          len(target.points), ent)


# ----- lifting homs along free covers ------------------------------------------

@dataclass(frozen=True)
class LiftResult:
    matrix: SemiringMatrix
    free_source: FreeSemimodule
    free_target: FreeSemimodule
    pi: SemimoduleHom
    pi_prime: SemimoduleHom
    square_commutes: bool


def _cover(m: FiniteSemimodule, gens: Sequence[int],
           max_carrier: int) -> Tuple[FreeSemimodule, SemimoduleHom]:
    free = free_semimodule(m.scalars, [m.label(g) for g in gens], max_carrier)
    mapping = []
    for i in range(free.size):
        v = free.vector(i)
        mapping.append(m.sum(m.act(c, g) for c, g in zip(v, gens)))
    return free, SemimoduleHom(free, m, tuple(mapping))


def lift_hom(h: SemimoduleHom, gens_source: Sequence[int],
             gens_target: Sequence[int],
             max_carrier: int = MAX_CARRIER) -> LiftResult:
    """Express h between generated modules as a coefficient matrix between
    their free covers.

    Coefficient tuples are searched in ascending lexicographic order and the
    first decomposition wins; the matrix is not unique and no canonical
    choice is promised, only the commuting square."""
    m, n = h.source, h.target
    gens_source = tuple(int(g) for g in gens_source)
    gens_target = tuple(int(g) for g in gens_target)
    if _span(m, gens_source) != set(range(m.size)):
        raise NoDecomposition("source generators do not span")
    if _span(n, gens_target) != set(range(n.size)):
        raise NoDecomposition("target generators do not span")
    free_m, pi = _cover(m, gens_source, max_carrier)
    free_n, pi_prime = _cover(n, gens_target, max_carrier)
    s = m.scalars
    rows = []
    for g in gens_source:
        want = h.mapping[g]
        found = None
        for coeffs in itertools.product(range(s.size),
                                        repeat=len(gens_target)):
            if n.sum(n.act(c, y) for c, y in zip(coeffs, gens_target)) == want:
                found = coeffs
                break
        if found is None:
            raise NoDecomposition(f"no combination reaches element {want}")
        rows.append(found)
    k = SemiringMatrix(s, len(gens_source), len(gens_target), tuple(rows))
    hk = hom_from_matrix(k, free_m, free_n)
    square = all(h.mapping[pi.mapping[i]] == pi_prime.mapping[hk.mapping[i]]
                 for i in range(free_m.size))
    return LiftResult(k, free_m, free_n, pi, pi_prime, square)
