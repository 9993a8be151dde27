"""Truncated projective-class monoid and its Grothendieck completion.

Classes are isomorphism types of row spaces of multiplicatively idempotent
square matrices of size 1..n_max, each named by the first matrix presenting
it in (size, entry-lex) enumeration order, which is the lexicographically
least one. Padding a matrix with zero rows and columns only appends zero
coordinates to its row space, so classification by module isomorphism
absorbs the padding convention; zero_pad is exposed to keep that testable.

The completion is the abelian group presented by one generator per class
modulo the recorded sum relations, reduced by exact integer Smith normal
form. Everything is relative to the size bound and reports say so: no
claim is made that the truncated monoid has converged.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .config import DEFAULT_N_MAX, MAX_CARRIER, MAX_ENUM
from .errors import EnumGuard, NotIdempotent
from .jsonio import semiring_to_dict
from .matrix import SemiringMatrix, idempotent_matrices, is_mult_idempotent
from .mv import MvAlgebra, MvHom, reduct_vee_odot
from .projective import (ProjectivePresentation, are_isomorphic, block_diag,
                         row_space)
from .semimodule import FiniteSemimodule, SemimoduleHom
from .semiring import FiniteSemiring, SemiringHom
from .snf import (IntMatrix, SmithNormalForm, int_matrix_mul,
                  smith_normal_form)

__all__ = [
    "ProjClassMonoid", "AbelianGroupSNF", "CompletionResult",
    "GroupHomMatrix", "zero_pad", "enumerate_projective_classes",
    "grothendieck_completion", "completion_from_triples", "k0_of_hom",
    "k0_report", "k0_stability", "smith_normal_form", "SmithNormalForm",
]


def zero_pad(u: SemiringMatrix, size: int) -> SemiringMatrix:
    """Extend a square matrix to the given size with zero entries."""
    if size < u.rows or u.rows != u.cols:
        raise ValueError("can only pad a square matrix upward")
    z = u.scalars.zero
    entries = tuple(
        tuple(u.entries[i][j] if i < u.rows and j < u.cols else z
              for j in range(size))
        for i in range(size))
    return SemiringMatrix(u.scalars, size, size, entries)


@dataclass(frozen=True)
class ProjClassMonoid:
    """Projective classes below the size bound with their sum relations.

    sum_relations holds triples (i, j, k) meaning class i plus class j is
    class k. Block sums are recorded whenever the sizes fit under n_max;
    relations through the trivial class are recorded unconditionally since
    padding shows the trivial class neutral at every size.
    """

    scalars: FiniteSemiring
    n_max: int
    classes: Tuple[ProjectivePresentation, ...]
    sum_relations: Tuple[Tuple[int, int, int], ...]

    @property
    def trivial_index(self) -> int:
        for i, cls in enumerate(self.classes):
            if cls.module.size == 1:
                return i
        raise ValueError("no trivial class found")

    def class_of(self, m: FiniteSemimodule,
                 max_enum: int = MAX_ENUM) -> Optional[int]:
        for i, cls in enumerate(self.classes):
            if are_isomorphic(cls.module, m, max_enum) is not None:
                return i
        return None


def _identity_hom(m: FiniteSemimodule) -> SemimoduleHom:
    return SemimoduleHom(m, m, tuple(range(m.size)))


def enumerate_projective_classes(s: FiniteSemiring,
                                 n_max: int = DEFAULT_N_MAX,
                                 max_enum: int = MAX_ENUM,
                                 max_carrier: int = MAX_CARRIER
                                 ) -> ProjClassMonoid:
    if s.size ** (n_max * n_max) > max_enum:
        raise EnumGuard(f"{s.size}^{n_max * n_max} matrices exceed "
                        f"max_enum={max_enum}")
    classes: List[ProjectivePresentation] = []
    for n in range(1, n_max + 1):
        for u in idempotent_matrices(s, n, max_enum):
            rs = row_space(u, max_carrier)
            if any(are_isomorphic(cls.module, rs, max_enum) is not None
                   for cls in classes):
                continue
            classes.append(
                ProjectivePresentation(s, n, u, rs, _identity_hom(rs)))

    trivial = next(i for i, cls in enumerate(classes) if cls.module.size == 1)
    relations = set()
    for j in range(len(classes)):
        relations.add((trivial, j, j))
        relations.add((j, trivial, j))
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            if ci.n + cj.n > n_max:
                continue
            rs = row_space(block_diag(ci.u, cj.u), max_carrier)
            k = next(k for k, ck in enumerate(classes)
                     if are_isomorphic(ck.module, rs, max_enum) is not None)
            relations.add((i, j, k))
    return ProjClassMonoid(s, n_max, tuple(classes),
                           tuple(sorted(relations)))


@dataclass(frozen=True)
class AbelianGroupSNF:
    """Z^rank plus one cyclic factor per torsion entry, d_1 | d_2 | ..."""

    rank: int
    torsion: Tuple[int, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion entries must exceed 1")
        if any(self.torsion[i + 1] % self.torsion[i]
               for i in range(len(self.torsion) - 1)):
            raise ValueError("torsion must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> Dict[str, object]:
        return {"rank": self.rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class CompletionResult:
    """Universal group of a finitely presented commutative monoid.

    images[i] is the coset of generator i: torsion coordinates first (one
    per entry of group.torsion, reduced mod that entry), free coordinates
    after (group.rank of them).
    """

    group: AbelianGroupSNF
    images: Tuple[Tuple[int, ...], ...]
    relation_rows: IntMatrix
    snf: SmithNormalForm

    def in_relation_span(self, x: Sequence[int]) -> bool:
        cols = len(self.snf.v)
        if len(x) != cols:
            raise ValueError("vector length must match generator count")
        y = [sum(x[k] * self.snf.v[k][j] for k in range(cols))
             for j in range(cols)]
        factors = self.snf.invariant_factors
        if any(y[j] % factors[j] for j in range(len(factors))):
            return False
        return all(y[j] == 0 for j in range(len(factors), cols))


def completion_from_triples(n_generators: int,
                            triples: Sequence[Tuple[int, int, int]]
                            ) -> CompletionResult:
    rows: List[List[int]] = []
    for (i, j, k) in triples:
        row = [0] * n_generators
        row[i] += 1
        row[j] += 1
        row[k] -= 1
        rows.append(row)
    if not rows:
        rows = [[0] * n_generators]
    snf = smith_normal_form(rows)
    factors = snf.invariant_factors
    rank = n_generators - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    group = AbelianGroupSNF(rank, torsion)
    images = []
    for i in range(n_generators):
        y = snf.v[i]
        coords = [y[j] % factors[j] for j in range(len(factors))
                  if factors[j] > 1]
        coords.extend(y[j] for j in range(len(factors), n_generators))
        images.append(tuple(coords))
    return CompletionResult(group, tuple(images),
                            tuple(tuple(r) for r in rows), snf)


def grothendieck_completion(p: ProjClassMonoid) -> CompletionResult:
    return completion_from_triples(len(p.classes), p.sum_relations)


@dataclass(frozen=True)
class GroupHomMatrix:
    """Induced map between class presentations as a 0/1 integer matrix.

    Columns index source classes, rows target classes, so composition of
    induced maps is plain matrix multiplication on the left.
    """

    source: ProjClassMonoid
    target: ProjClassMonoid
    class_map: Tuple[int, ...]
    matrix: IntMatrix
    relations_respected: bool


def _as_semiring_hom(f: Union[SemiringHom, MvHom]) -> SemiringHom:
    if isinstance(f, MvHom):
        return SemiringHom(reduct_vee_odot(f.source),
                           reduct_vee_odot(f.target), f.mapping)
    return f


def k0_of_hom(f: Union[SemiringHom, MvHom],
              n_max: int = DEFAULT_N_MAX,
              source_monoid: Optional[ProjClassMonoid] = None,
              target_monoid: Optional[ProjClassMonoid] = None,
              max_enum: int = MAX_ENUM,
              max_carrier: int = MAX_CARRIER) -> GroupHomMatrix:
    h = _as_semiring_hom(f)
    h.validate()
    p_a = source_monoid or enumerate_projective_classes(
        h.source, n_max, max_enum, max_carrier)
    p_b = target_monoid or enumerate_projective_classes(
        h.target, n_max, max_enum, max_carrier)

    class_map = []
    for cls in p_a.classes:
        entries = tuple(tuple(h.mapping[x] for x in row)
                        for row in cls.u.entries)
        w = SemiringMatrix(h.target, cls.n, cls.n, entries)
        if not is_mult_idempotent(w):
            raise NotIdempotent("entrywise image of an idempotent matrix "
                                "failed idempotency")
        j = p_b.class_of(row_space(w, max_carrier), max_enum)
        if j is None:
            raise ValueError("image class missing from target monoid")
        class_map.append(j)

    matrix = [[0] * len(p_a.classes) for _ in range(len(p_b.classes))]
    for i, j in enumerate(class_map):
        matrix[j][i] = 1

    respected = True
    for (i, j, k) in p_a.sum_relations:
        ci, cj, ck = class_map[i], class_map[j], class_map[k]
        rs = row_space(block_diag(p_b.classes[ci].u, p_b.classes[cj].u),
                       max_carrier)
        if are_isomorphic(p_b.classes[ck].module, rs, max_enum) is None:
            respected = False
            break

    return GroupHomMatrix(p_a, p_b, tuple(class_map),
                          tuple(tuple(r) for r in matrix), respected)


def compose_group_homs(g: GroupHomMatrix, f: GroupHomMatrix) -> IntMatrix:
    return int_matrix_mul(g.matrix, f.matrix)


def k0_report(obj: Union[FiniteSemiring, MvAlgebra],
              n_max: int = DEFAULT_N_MAX,
              max_enum: int = MAX_ENUM,
              max_carrier: int = MAX_CARRIER) -> Dict[str, object]:
    """Full pipeline as a JSON-ready dict; the truncation is disclosed."""
    s = reduct_vee_odot(obj) if isinstance(obj, MvAlgebra) else obj
    p = enumerate_projective_classes(s, n_max, max_enum, max_carrier)
    completion = grothendieck_completion(p)
    return {
        "scalars": semiring_to_dict(s),
        "n_max": n_max,
        "classes": [
            {"size": cls.n,
             "matrix": [list(row) for row in cls.u.entries],
             "module_size": cls.module.size}
            for cls in p.classes
        ],
        "relations": [list(t) for t in p.sum_relations],
        "group": completion.group.to_dict(),
        "truncated": True,
    }


def k0_stability(s: Union[FiniteSemiring, MvAlgebra],
                 bounds: Sequence[int] = (1, 2),
                 max_enum: int = MAX_ENUM,
                 max_carrier: int = MAX_CARRIER) -> Dict[str, object]:
    """Compare truncations across bounds; reports, never asserts, stability."""
    scalars = reduct_vee_odot(s) if isinstance(s, MvAlgebra) else s
    groups = []
    counts = []
    for k in bounds:
        p = enumerate_projective_classes(scalars, k, max_enum, max_carrier)
        groups.append(grothendieck_completion(p).group.to_dict())
        counts.append(len(p.classes))
    return {
        "bounds": list(bounds),
        "class_counts": counts,
        "groups": groups,
        "stable": all(g == groups[0] for g in groups)
                  and all(c == counts[0] for c in counts),
    }
