"""Projectivity for finitely generated semimodules, decided two ways.

The retract route searches for a section of the canonical free cover; the
matrix route searches for a multiplicatively idempotent square matrix whose
row space matches the module. The two verdicts are independent computations
and every caller is entitled to their agreement.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from .config import MAX_CARRIER, MAX_ENUM
from .errors import (NotAHom, NotCyclic, NotIdempotent, ScalarMismatch)
from .matrix import (SemiringMatrix, _cover, idempotent_matrices,
                     is_mult_idempotent)
from .mv import MvAlgebra, reduct_vee_odot
from .semimodule import (FiniteSemimodule, FreeSemimodule, SemimoduleHom,
                         Subsemimodule, _span, free_semimodule, generate,
                         hom_set, minimal_generating_set, module_over_self)
from .semiring import FiniteSemiring, same_scalars


def row_space(u: SemiringMatrix,
              max_carrier: int = MAX_CARRIER) -> Subsemimodule:
    """The subsemimodule of row vectors spanned by the rows of u."""
    free = free_semimodule(u.scalars, [str(j) for j in range(u.cols)],
                           max_carrier)
    return generate(free, [free.index(row) for row in u.entries])


@dataclass(frozen=True)
class Retraction:
    """A free cover pi with a section mu, so pi after mu is the identity."""

    free: FreeSemimodule
    pi: SemimoduleHom
    mu: SemimoduleHom


def is_projective_retract_oracle(m: FiniteSemimodule, n: int = None,
                                 max_enum: int = MAX_ENUM,
                                 max_carrier: int = MAX_CARRIER
                                 ) -> Optional[Retraction]:
    """First section of the canonical cover from n generators, if any."""
    gens = list(minimal_generating_set(m))
    if n is None:
        n = len(gens)
    if len(gens) > n:
        raise ValueError(f"module needs {len(gens)} generators, bound is {n}")
    while len(gens) < n:
        gens.append(m.zero)
    free, pi = _cover(m, gens, max_carrier)
    for mu in hom_set(m, free, max_enum):
        if all(pi.mapping[mu.mapping[x]] == x for x in range(m.size)):
            return Retraction(free, pi, mu)
    return None


@dataclass(frozen=True)
class ProjectivePresentation:
    """An idempotent matrix whose row space realizes the module."""

    scalars: FiniteSemiring
    n: int
    u: SemiringMatrix
    module: Subsemimodule
    iso: SemimoduleHom          # row space onto the presented module

    def __post_init__(self):
        if not is_mult_idempotent(self.u):
            raise NotIdempotent("presentation matrix must square to itself")


def are_isomorphic(m: FiniteSemimodule, n: FiniteSemimodule,
                   max_enum: int = MAX_ENUM) -> Optional[SemimoduleHom]:
    """First bijective hom whose inverse is validated, else None."""
    if m.size != n.size:
        return None
    for h in hom_set(m, n, max_enum):
        if len(set(h.mapping)) != m.size:
            continue
        inverse = [0] * n.size
        for x, v in enumerate(h.mapping):
            inverse[v] = x
        try:
            SemimoduleHom(n, m, tuple(inverse)).validate()
        except NotAHom:
            continue
        return h
    return None


@lru_cache(maxsize=None)
def _idempotents(s: FiniteSemiring, n: int,
                 max_enum: int) -> Tuple[SemiringMatrix, ...]:
    return idempotent_matrices(s, n, max_enum)


def is_projective_matrix_criterion(m: FiniteSemimodule, n: int = None,
                                   max_enum: int = MAX_ENUM,
                                   max_carrier: int = MAX_CARRIER
                                   ) -> Optional[ProjectivePresentation]:
    """First idempotent u in entry order whose row space matches m."""
    if n is None:
        n = len(minimal_generating_set(m))
    for u in _idempotents(m.scalars, n, max_enum):
        rs = row_space(u, max_carrier)
        if rs.size != m.size:
            continue
        iso = are_isomorphic(rs, m, max_enum)
        if iso is not None:
            return ProjectivePresentation(m.scalars, n, u, rs, iso)
    return None


# ----- direct sums ------------------------------------------------------------

@dataclass(frozen=True)
class DirectSum:
    module: FiniteSemimodule
    inject_left: SemimoduleHom
    inject_right: SemimoduleHom
    project_left: SemimoduleHom
    project_right: SemimoduleHom


def direct_sum(m: FiniteSemimodule, n: FiniteSemimodule) -> DirectSum:
    """Componentwise biproduct on pairs, with its four structure maps."""
    if not same_scalars(m.scalars, n.scalars):
        raise ScalarMismatch("summands need common scalars")
    s = m.scalars

    def idx(x: int, y: int) -> int:
        return x * n.size + y

    size = m.size * n.size
    add = tuple(tuple(idx(m.add[x][p], n.add[y][q])
                      for p in range(m.size) for q in range(n.size))
                for x in range(m.size) for y in range(n.size))
    action = tuple(tuple(idx(m.action[a][x], n.action[a][y])
                         for x in range(m.size) for y in range(n.size))
                   for a in range(s.size))
    labels = tuple(f"({m.label(x)},{n.label(y)})"
                   for x in range(m.size) for y in range(n.size))
    mod = FiniteSemimodule(scalars=s, size=size, add=add,
                           zero=idx(m.zero, n.zero), action=action,
                           labels=labels)
    il = SemimoduleHom(m, mod, tuple(idx(x, n.zero) for x in range(m.size)))
    ir = SemimoduleHom(n, mod, tuple(idx(m.zero, y) for y in range(n.size)))
    pl = SemimoduleHom(mod, m, tuple(x for x in range(m.size)
                                     for _ in range(n.size)))
    pr = SemimoduleHom(mod, n, tuple(y for _ in range(m.size)
                                     for y in range(n.size)))
    for h in (il, ir, pl, pr):
        h.validate()
    return DirectSum(mod, il, ir, pl, pr)


def block_diag(u: SemiringMatrix, v: SemiringMatrix) -> SemiringMatrix:
    """u in the top-left corner, v shifted to the bottom-right."""
    if not same_scalars(u.scalars, v.scalars):
        raise ScalarMismatch("blocks need common scalars")
    s = u.scalars
    rows, cols = u.rows + v.rows, u.cols + v.cols
    ent = [[s.zero] * cols for _ in range(rows)]
    for i in range(u.rows):
        for j in range(u.cols):
            ent[i][j] = u.entries[i][j]
    for i in range(v.rows):
        for j in range(v.cols):
            ent[u.rows + i][u.cols + j] = v.entries[i][j]
    return SemiringMatrix(s, rows, cols, tuple(map(tuple, ent)))


# ----- the cyclic trichotomy ---------------------------------------------------

def all_subsemimodules(m: FiniteSemimodule) -> Tuple[Tuple[int, ...], ...]:
    """Member sets of every subsemimodule, ordered by size then content."""
    found = set()
    for r in range(m.size + 1):
        for subset in itertools.combinations(range(m.size), r):
            found.add(tuple(sorted(_span(m, subset))))
    return tuple(sorted(found, key=lambda t: (len(t), t)))


@dataclass(frozen=True)
class CyclicTrichotomy:
    """Verdicts of the three equivalent conditions on a cyclic module:
    projectivity, realization as the algebra times an idempotent, and
    splitting the algebra as module plus complement."""

    generator: int
    projective: bool
    retraction: Optional[Retraction]
    presentation: Optional[ProjectivePresentation]
    idempotent: Optional[int]
    b_iso: Optional[SemimoduleHom]
    complement: Optional[Tuple[int, ...]]
    c_iso: Optional[SemimoduleHom]
    idempotent_sets_agree: bool
    consistent: bool


def cyclic_mv_trichotomy(alg: MvAlgebra, m: FiniteSemimodule,
                         max_enum: int = MAX_ENUM) -> CyclicTrichotomy:
    scal = reduct_vee_odot(alg)
    if not same_scalars(scal, m.scalars):
        raise ScalarMismatch("module must live over the join-product reduct")
    generator = None
    for g in range(m.size):
        if len(_span(m, (g,))) == m.size:
            generator = g
            break
    if generator is None:
        raise NotCyclic("no single element spans the module")

    retr = is_projective_retract_oracle(m, max_enum=max_enum)
    pres = is_projective_matrix_criterion(m, max_enum=max_enum)
    projective = retr is not None and pres is not None

    sum_idem = {a for a in range(alg.size) if alg.oplus[a][a] == a}
    prod_idem = {a for a in range(alg.size) if alg.times(a, a) == a}
    sets_agree = sum_idem == prod_idem

    self_mod = module_over_self(scal)
    idem = None
    b_iso = None
    for u in sorted(prod_idem):
        cyc = generate(self_mod, (u,))
        iso = are_isomorphic(cyc, m, max_enum)
        if iso is not None:
            idem = u
            b_iso = iso
            break

    complement = None
    c_iso = None
    if idem is not None:
        ustar = alg.star[idem]
        left = generate(self_mod, (idem,))
        right = generate(self_mod, (ustar,))
        ds = direct_sum(left, right)
        pos_l = {x: i for i, x in enumerate(left.members)}
        pos_r = {x: i for i, x in enumerate(right.members)}
        mapping = tuple(pos_l[alg.times(a, idem)] * right.size
                        + pos_r[alg.times(a, ustar)]
                        for a in range(alg.size))
        phi = SemimoduleHom(self_mod, ds.module, mapping)
        try:
            phi.validate()
            if len(set(mapping)) == alg.size and ds.module.size == alg.size:
                complement = right.members
                c_iso = phi
        except NotAHom:
            pass
    if c_iso is None:
        # no idempotent route; look for any complement among submodules
        for members in all_subsemimodules(self_mod):
            if m.size * len(members) != alg.size:
                continue
            sub = generate(self_mod, members)
            ds = direct_sum(m, sub)
            iso = are_isomorphic(self_mod, ds.module, max_enum)
            if iso is not None:
                complement = members
                c_iso = iso
                break

    consistent = (projective == (idem is not None) == (c_iso is not None)
                  and (retr is None) == (pres is None))
    return CyclicTrichotomy(generator, projective, retr, pres, idem, b_iso,
                            complement, c_iso, sets_agree, consistent)
