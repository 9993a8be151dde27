import pytest

from mvsr.errors import EnumGuard
from mvsr.grothendieck import (AbelianGroupSNF, compose_group_homs,
                               completion_from_triples,
                               enumerate_projective_classes,
                               grothendieck_completion, k0_of_hom, k0_report,
                               k0_stability, zero_pad)
from mvsr.matrix import mat_identity
from mvsr.mv import MvHom, lukasiewicz_chain, mv_product, reduct_vee_odot
from mvsr.projective import are_isomorphic, row_space
from mvsr.semiring import boolean_semiring


@pytest.fixture
def boolean():
    return boolean_semiring()


@pytest.fixture
def square():
    return mv_product(lukasiewicz_chain(2), lukasiewicz_chain(2))


def test_zero_pad_keeps_row_space(boolean):
    u = mat_identity(boolean, 1)
    padded = zero_pad(u, 3)
    assert padded.rows == padded.cols == 3
    assert are_isomorphic(row_space(u), row_space(padded)) is not None


def test_two_classes_at_bound_one(boolean):
    p = enumerate_projective_classes(boolean, 1)
    assert len(p.classes) == 2
    assert p.trivial_index == 0
    # the trivial class absorbs nothing and the free class adds past the bound
    assert p.sum_relations == ((0, 0, 0), (0, 1, 1), (1, 0, 1))


def test_class_counts_frozen(boolean):
    three = reduct_vee_odot(lukasiewicz_chain(3))
    assert len(enumerate_projective_classes(boolean, 2).classes) == 4
    assert len(enumerate_projective_classes(three, 2).classes) == 7


def test_class_of_finds_isomorphic_module(boolean):
    p = enumerate_projective_classes(boolean, 1)
    from mvsr.semimodule import module_over_self, trivial_module
    assert p.class_of(trivial_module(boolean)) == 0
    assert p.class_of(module_over_self(boolean)) == 1


def test_enumeration_guard(boolean):
    with pytest.raises(EnumGuard):
        enumerate_projective_classes(boolean, 3, max_enum=100)


def test_completion_idempotent_generator_is_trivial():
    res = completion_from_triples(1, [(0, 0, 0)])
    assert res.group.is_trivial
    assert res.images == ((),)


def test_completion_free_generator_is_the_integers():
    res = completion_from_triples(1, [])
    assert res.group == AbelianGroupSNF(1, ())
    assert not res.group.is_trivial


def test_completion_relation_span():
    # two generators glued by g0 + g0 = g1
    res = completion_from_triples(2, [(0, 0, 1)])
    assert res.group.rank == 1
    assert res.in_relation_span((2, -1))
    assert not res.in_relation_span((1, 0))


def test_completion_with_torsion():
    # g0+g0 = g1 and g1+g0 = g0 force 2*g0 = 0
    res = completion_from_triples(2, [(0, 0, 1), (1, 0, 0)])
    assert res.group.rank == 0
    assert res.group.torsion == (2,)


def test_groups_frozen(boolean):
    three = reduct_vee_odot(lukasiewicz_chain(3))
    g2 = grothendieck_completion(enumerate_projective_classes(boolean, 2))
    assert g2.group == AbelianGroupSNF(2, ())
    g3 = grothendieck_completion(enumerate_projective_classes(three, 2))
    assert g3.group == AbelianGroupSNF(5, ())


def test_k0_identity_is_identity_matrix(boolean):
    l2 = lukasiewicz_chain(2)
    ident = MvHom(l2, l2, (0, 1))
    res = k0_of_hom(ident, 1)
    assert res.matrix == ((1, 0), (0, 1))
    assert res.class_map == (0, 1)
    assert res.relations_respected


def test_k0_functor_law(square):
    l2 = lukasiewicz_chain(2)
    diag = MvHom(l2, square, (0, 3))
    proj = MvHom(square, l2, (0, 0, 1, 1))
    diag.validate(), proj.validate()
    k_diag = k0_of_hom(diag, 1)
    k_proj = k0_of_hom(proj, 1)
    assert k_diag.relations_respected and k_proj.relations_respected
    composite = compose_group_homs(k_proj, k_diag)
    ident = k0_of_hom(MvHom(l2, l2, (0, 1)), 1)
    assert composite == ident.matrix


def test_k0_diagonal_sends_free_to_free(square):
    l2 = lukasiewicz_chain(2)
    diag = MvHom(l2, square, (0, 3))
    res = k0_of_hom(diag, 1)
    sizes = [res.target.classes[j].module.size for j in res.class_map]
    assert sizes == [1, 4]


def test_k0_report_schema(boolean):
    report = k0_report(boolean, 1)
    assert set(report) == {"scalars", "n_max", "classes", "relations",
                           "group", "truncated"}
    assert report["truncated"] is True
    assert report["n_max"] == 1
    assert report["group"] == {"rank": 1, "torsion": []}
    assert [c["size"] for c in report["classes"]] == [1, 1]
    for c in report["classes"]:
        assert set(c) == {"size", "matrix", "module_size"}


def test_k0_report_accepts_mv_algebra(square):
    report = k0_report(square, 1)
    assert report["group"]["rank"] == len(report["classes"]) - 1


def test_stability_is_reported_not_claimed(boolean):
    res = k0_stability(boolean, bounds=(1, 2))
    assert res["bounds"] == [1, 2]
    assert res["class_counts"] == [2, 4]
    assert res["stable"] is False
    three = reduct_vee_odot(lukasiewicz_chain(3))
    res3 = k0_stability(three, bounds=(1, 2))
    assert [g["rank"] for g in res3["groups"]] == [1, 5]
    assert res3["stable"] is False


def test_k0_validates_the_hom_first():
    l2 = lukasiewicz_chain(2)
    from mvsr.errors import NotAHom
    with pytest.raises(NotAHom):
        k0_of_hom(MvHom(l2, l2, (0, 0)), 1)
