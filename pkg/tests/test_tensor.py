import pytest

from mvsr.errors import (EnumGuard, NotIdempotent, NotOnto, ScalarMismatch,
                         SizeGuard)
from mvsr.mv import lukasiewicz_chain, mv_product, reduct_vee_odot
from mvsr.projective import are_isomorphic
from mvsr.semimodule import (FiniteSemimodule, free_semimodule, hom_set,
                             module_over_self, trivial_module)
from mvsr.semiring import FiniteSemiring, SemiringHom, boolean_semiring
from mvsr.tensor import (FreeSemilattice, SemilatticeCongruence,
                         adjunction_witness, as_module, bimorphisms,
                         check_universal_property, commutative_monoids_upto,
                         congruence_closure, enumerate_modules,
                         full_embedding_check, hom_lattice_structure,
                         hom_point_iso, join_irreducibles, scalar_structures,
                         tensor_product, tensor_report, truncation_demo,
                         zeta_isomorphism)


@pytest.fixture
def boolean():
    return boolean_semiring()


@pytest.fixture
def self_mod(boolean):
    return module_over_self(boolean)


@pytest.fixture
def free2(boolean):
    return free_semimodule(boolean, ["x", "y"])


# ----- congruence machinery -------------------------------------------------

def test_closure_of_nothing_is_identity():
    lat = FreeSemilattice(("a", "b"))
    cong = congruence_closure(lat, [])
    assert len(cong) == lat.size
    assert cong.class_of == (0, 1, 2, 3)
    assert cong.union_compatibility_witness() is None


def test_closure_merges_the_join_too():
    # a ~ b forces a|b ~ b, so the two singletons and their union collapse
    lat = FreeSemilattice(("a", "b"))
    cong = congruence_closure(lat, [(1, 2)])
    assert len(cong) == 2
    assert cong.class_of[1] == cong.class_of[2] == cong.class_of[3]
    assert cong.class_of[0] != cong.class_of[1]
    assert cong.union_compatibility_witness() is None


def test_closure_bottom_equals_top_collapses_everything():
    lat = FreeSemilattice(("a", "b"))
    cong = congruence_closure(lat, [(0, 3)])
    assert len(cong) == 1


def test_closure_guard():
    lat = FreeSemilattice(tuple(range(8)))
    with pytest.raises(SizeGuard):
        congruence_closure(lat, [], max_carrier=100)


def test_incompatible_partition_yields_a_witness():
    # glue the empty set to {a} but leave the rest alone: not a congruence
    lat = FreeSemilattice(("a", "b"))
    cong = SemilatticeCongruence(lat, (0, 0, 1, 2), (0, 2, 3))
    w = cong.union_compatibility_witness()
    assert w is not None
    a, b, c = w
    assert cong.class_of[a] == cong.class_of[b]
    assert cong.class_of[lat.join(a, c)] != cong.class_of[lat.join(b, c)]


# ----- the tensor product ---------------------------------------------------

def test_scalars_tensor_scalars(boolean, self_mod):
    t = tensor_product(self_mod, self_mod)
    assert t.class_count == 2
    assert t.tensor(0, 0) == t.tensor(0, 1) == t.tensor(1, 0) == t.zero_class
    assert t.tensor(1, 1) != t.zero_class
    assert t.generated_by_tensors()
    assert t.congruence.union_compatibility_witness() is None
    assert are_isomorphic(as_module(t), self_mod) is not None


def test_tensor_with_trivial_is_trivial(boolean, free2):
    t = tensor_product(free2, trivial_module(boolean))
    assert t.class_count == 1


def test_scalars_are_a_tensor_unit(boolean, self_mod):
    for m in enumerate_modules(boolean, 3):
        t = tensor_product(self_mod, m)
        assert are_isomorphic(as_module(t), m) is not None


def test_tensor_needs_common_scalars(self_mod):
    three = reduct_vee_odot(lukasiewicz_chain(3))
    with pytest.raises(ScalarMismatch):
        tensor_product(self_mod, module_over_self(three))


def test_tensor_needs_idempotent_addition():
    mod2 = FiniteSemiring(2, ((0, 1), (1, 0)), ((0, 0), (0, 1)), 0, 1)
    m = module_over_self(mod2)
    with pytest.raises(NotIdempotent):
        tensor_product(m, m)


def test_tensor_carrier_guard(self_mod, free2):
    with pytest.raises(SizeGuard):
        tensor_product(free2, free2, max_carrier=8)


def test_induced_scalar_actions_satisfy_the_laws(free2, self_mod):
    t = tensor_product(free2, self_mod)
    st = scalar_structures(t)
    assert st.left_laws.valid and st.right_laws.valid
    assert st.left_module.size == t.class_count
    assert st.left_module.add == st.right_module.add


# ----- bimorphisms and the universal property --------------------------------

def test_join_irreducibles_of_the_free_square(free2):
    assert join_irreducibles(free2) == (1, 2)


def test_monoid_family_is_frozen():
    fam = commutative_monoids_upto(3)
    assert len(fam) == 8
    assert [size for (size, _, _) in fam] == [1, 2, 2, 3, 3, 3, 3, 3]


def test_bimorphism_count(free2, self_mod):
    chain2 = ((0, 1), (1, 1))
    found = bimorphisms(free2, self_mod, 2, chain2, 0)
    assert len(found) == 4


def test_bimorphism_guard(free2):
    big = free_semimodule(boolean_semiring(), list("pqrs"))
    with pytest.raises(EnumGuard):
        bimorphisms(big, big, 3, ((0, 1, 2), (1, 1, 2), (2, 2, 2)), 0,
                    max_enum=1000)


def test_universal_property_smallest(self_mod):
    t = tensor_product(self_mod, self_mod)
    verdict = check_universal_property(t)
    assert verdict["ok"]
    assert verdict["monoids"] == 10
    assert verdict["existence_failures"] == 0
    assert verdict["uniqueness_failures"] == 0


def test_universal_property_free_factor(free2, self_mod):
    verdict = check_universal_property(tensor_product(free2, self_mod))
    assert verdict["ok"]
    assert verdict["bimorphisms"] > 0


def test_tensor_report_schema(self_mod):
    report = tensor_report(self_mod, self_mod)
    assert set(report) == {"left", "right", "classes", "tensors",
                           "universal_property"}
    assert report["classes"] == 2
    assert report["tensors"] == [[0, 0, 0], [0, 1, 0], [1, 0, 0], [1, 1, 1]]
    assert report["universal_property"] == "verified"


# ----- hom-set structure and the currying bijections -------------------------

def test_hom_lattice_module(boolean, self_mod):
    homs = hom_set(self_mod, self_mod)
    lifted = hom_lattice_structure(homs, boolean, boolean.mul)
    assert lifted.laws.valid
    assert lifted.module.size == len(homs)


def test_zeta_both_variants(free2, self_mod):
    for variant in ("plain", "primed"):
        z = zeta_isomorphism(free2, self_mod, self_mod, variant)
        assert len(z.forward) == 4
        assert len(z.curried) == 4
        assert z.bijective
        assert z.join_preserving
        assert z.ok


def test_zeta_rejects_unknown_variant(self_mod):
    with pytest.raises(ValueError):
        zeta_isomorphism(self_mod, self_mod, self_mod, "twisted")


def test_hom_point_iso_counts(boolean):
    three = reduct_vee_odot(lukasiewicz_chain(3))
    square = reduct_vee_odot(mv_product(lukasiewicz_chain(2),
                                        lukasiewicz_chain(2)))
    assert len(hom_point_iso(module_over_self(three)).homs) == 3
    assert hom_point_iso(module_over_self(three)).ok
    assert len(hom_point_iso(module_over_self(square)).homs) == 4
    assert hom_point_iso(module_over_self(square)).ok
    assert len(hom_point_iso(trivial_module(boolean)).homs) == 1


# ----- change of scalars ------------------------------------------------------

def test_adjunction_identity(boolean):
    ident = SemiringHom(boolean, boolean, (0, 1))
    res = adjunction_witness(ident)
    assert res["ok"]
    assert len(res["pairs"]) == 4
    assert all(p["left_bijective"] and p["right_bijective"]
               for p in res["pairs"])
    assert res["unit_is_hom"] == [True, True]
    assert res["naturality_ok"]


def test_adjunction_projection(boolean):
    square = reduct_vee_odot(mv_product(lukasiewicz_chain(2),
                                        lukasiewicz_chain(2)))
    proj = SemiringHom(square, boolean, (0, 0, 1, 1))
    res = adjunction_witness(proj)
    assert res["ok"]
    for p in res["pairs"]:
        assert p["left_counts"][0] == p["left_counts"][1]
        assert p["right_counts"][0] == p["right_counts"][1]


def test_module_enumeration_counts(boolean):
    assert len(enumerate_modules(boolean, 3)) == 4
    assert len(enumerate_modules(boolean, 4)) == 13
    assert len(enumerate_modules(boolean, 5)) == 89


def test_module_enumeration_guard(boolean):
    with pytest.raises(EnumGuard):
        enumerate_modules(boolean, 6)


def test_full_embedding_for_a_quotient(boolean):
    square = reduct_vee_odot(mv_product(lukasiewicz_chain(2),
                                        lukasiewicz_chain(2)))
    proj = SemiringHom(square, boolean, (0, 0, 1, 1))
    res = full_embedding_check(proj)
    assert res["modules"] == 4
    assert res["fullness_pairs"] == 16
    assert res["homs_lost_by_restriction"] == 0
    assert res["unit_iso"] == [True] * 4
    assert res["ok"]


def test_full_embedding_requires_onto(boolean):
    square = reduct_vee_odot(mv_product(lukasiewicz_chain(2),
                                        lukasiewicz_chain(2)))
    diag = SemiringHom(boolean, square, (0, 3))
    with pytest.raises(NotOnto):
        full_embedding_check(diag)


# ----- the finite shadow ------------------------------------------------------

def test_truncation_demo_materialized():
    res = truncation_demo(2, 1, samples=200, seed=7)
    assert res["chain_size"] == 3
    assert res["points"] == 1
    assert res["tier"]["materialized"]
    assert res["tier"]["isomorphism"]
    assert res["gamma_certificate"]["ok"]
    assert "finite shadow" in res["label"]
    assert res["ok"]


def test_truncation_demo_formula_tier():
    res = truncation_demo(2, 2, samples=200, seed=7)
    assert not res["tier"]["materialized"]
    assert res["tier"]["phi_psi_identity"]
    assert "note" in res["tier"]
    assert res["ok"]
