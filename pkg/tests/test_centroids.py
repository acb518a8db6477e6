from bihomtrias.catalog import catalog_get, catalog_list
from bihomtrias.centroids import (
    cent_der_property_suite,
    central_derivations,
    centralizer,
    centroid_linear_space,
    centroid_space,
    is_central_derivation,
    is_centroid_element,
)
from bihomtrias.core import (
    LEFT,
    MIDDLE,
    RIGHT,
    ROLES,
    BiHomTrialgebra,
    LinearMap,
    MulTensor,
    evaluate,
    zero_algebra,
)
from bihomtrias.matrices import Matrix, in_span, unit_vec, vec_is_zero, zero_vec
from bihomtrias.scalars import ONE, Scalar
from bihomtrias.transforms import transport

from oracles import seeded


def unit(n, q, p):
    return LinearMap.unit(n, q - 1, p - 1)


# -- centralizers -------------------------------------------------------------

def test_centralizer_of_zero_generators():
    a = catalog_get("BTas_2^1").algebra
    space = centralizer(a, [zero_vec(2)])
    assert len(space.basis) == 2  # whole space
    restricted = centralizer(a, [zero_vec(2)], restrict_to_h=True)
    assert restricted.basis == ()  # span{0} = 0


def test_centralizer_zero_algebra_is_everything():
    a = zero_algebra(3)
    space = centralizer(a, [unit_vec(3, i) for i in range(3)])
    assert len(space.basis) == 3


def test_centralizer_first_entry_against_direct_evaluation():
    a = catalog_get("BTas_2^1").algebra
    h = [unit_vec(2, 0), unit_vec(2, 1)]
    space = centralizer(a, h)
    ab = a.alpha.compose(a.beta)
    for x in space.basis:
        tw = ab.apply(x)
        for hv in h:
            for role in ROLES:
                assert vec_is_zero(evaluate(a, role, tw, hv))
                assert vec_is_zero(evaluate(a, role, hv, tw))
    # spot enumeration over a small grid finds nothing outside the span
    basis_rows = [list(v) for v in space.basis]
    for c1 in (-1, 0, 1):
        for c2 in (-1, 0, 1):
            x = (Scalar(c1), Scalar(c2))
            tw = ab.apply(x)
            ok = all(
                vec_is_zero(evaluate(a, role, tw, hv))
                and vec_is_zero(evaluate(a, role, hv, tw))
                for role in ROLES
                for hv in h
            )
            assert ok == in_span(basis_rows, list(x))


def test_centralizer_restricted_reading():
    a = catalog_get("BTas_3^1").algebra
    h = [unit_vec(3, 2)]  # span{e3}
    space = centralizer(a, h, restrict_to_h=True)
    for v in space.basis:
        assert in_span([list(x) for x in h], list(v))


# -- centroid elements ---------------------------------------------------------

def test_zero_map_is_centroid_element_everywhere():
    for name in catalog_list():
        a = catalog_get(name).algebra
        assert is_centroid_element(a, LinearMap.zero(a.dim))[0]


def test_published_element_verifies_on_3_11():
    a = catalog_get("BTas_3^11").algebra
    assert is_centroid_element(a, unit(3, 2, 2))[0]


def test_published_element_fails_on_3_1_but_transpose_passes():
    a = catalog_get("BTas_3^1").algebra
    ok, witnesses = is_centroid_element(a, unit(3, 2, 1))
    assert not ok and witnesses
    assert is_centroid_element(a, unit(3, 1, 2))[0]
    assert is_centroid_element(a, unit(3, 3, 3))[0]


def test_literal_right_chain_variant_differs():
    # alpha = id, beta = 0, nonzero |- product: the ab(y) reading zeroes
    # the first chain member while the literal alpha psi(y) keeps it.
    a = BiHomTrialgebra(
        "variant", 2,
        MulTensor.zero(2, LEFT),
        MulTensor.from_entries(2, RIGHT, {(0, 0, 0): ONE}),
        MulTensor.zero(2, MIDDLE),
        LinearMap.identity(2),
        LinearMap.zero(2),
    )
    psi = LinearMap.identity(2)
    default_ok, default_wit = is_centroid_element(a, psi)
    literal_ok, literal_wit = is_centroid_element(a, psi, right_chain="literal")
    assert not default_ok and not literal_ok
    assert {w[0] for w in default_wit} != {w[0] for w in literal_wit}


# -- centroid spaces -------------------------------------------------------------

def test_zero_algebra_full_centroid():
    space = centroid_space(zero_algebra(3))
    assert space.identically_zero
    assert space.linear_dim == 9 and space.reported_dim == 9
    assert space.method == "full"


def test_3_11_two_stage_results():
    """Stage 1 is the full diagonal (dimension 3, not the published single
    unit); the obstruction c^2 = ab = bc = ca = 0 cuts it to two lines, so
    the reported dimension is 1, matching the published table."""
    space = centroid_space(catalog_get("BTas_3^11").algebra)
    assert space.linear_dim == 3
    assert not space.identically_zero
    assert space.obstruction_too_large
    assert space.reported_dim == 1
    assert space.method == "coordinate-search"
    diag = {unit(3, 1, 1), unit(3, 2, 2), unit(3, 3, 3)}
    assert set(space.linear_basis) == diag


def test_two_dim_reported_dims_recomputed():
    """The closing corollary says all two-dimensional centroids vanish;
    recomputation finds one-dimensional centroids for three entries."""
    expected = {
        "BTas_2^1": 1, "BTas_2^2": 1, "BTas_2^3": 0, "BTas_2^4": 0,
        "BTas_2^5": 0, "BTas_2^6": 1, "BTas_2^7": 0,
    }
    for name, dim in expected.items():
        assert centroid_space(catalog_get(name).algebra).reported_dim == dim, name


def test_3_1_centroid_exceeds_published_dim():
    space = centroid_space(catalog_get("BTas_3^1").algebra)
    assert space.reported_dim == 2
    assert set(space.subspace_basis) == {unit(3, 1, 2), unit(3, 3, 3)}


def test_subspace_soundness_everywhere():
    for name in catalog_list():
        a = catalog_get(name).algebra
        space = centroid_space(a)
        for psi in space.subspace_basis:
            assert is_centroid_element(a, psi)[0], name


def test_stage1_contains_every_verified_element():
    rng = seeded("cent-stage1")
    for name in catalog_list():
        a = catalog_get(name).algebra
        flats = centroid_space(a).linear_flats()
        for _ in range(8):
            cand = LinearMap(
                Matrix(a.dim, a.dim,
                       [Scalar(rng.randint(-1, 1)) for _ in range(a.dim * a.dim)])
            )
            if is_centroid_element(a, cand)[0]:
                assert in_span(flats, list(cand.flatten())), name


def test_scaling_closure_on_verified_elements():
    for name in ("BTas_2^1", "BTas_3^11", "BTas_3^19"):
        a = catalog_get(name).algebra
        for psi in centroid_space(a).subspace_basis:
            for t in (Scalar(0), Scalar(1), Scalar(-1), Scalar(2)):
                assert is_centroid_element(a, psi.scale(t))[0]


def test_obstruction_serialization_shape():
    space = centroid_space(catalog_get("BTas_3^11").algebra)
    assert space.obstruction
    ser = space.obstruction[0].serialize()
    assert set(ser) == {"quad", "lin"}


def test_stage1_linear_space_function_matches_space():
    a = catalog_get("BTas_3^3").algebra
    assert centroid_linear_space(a) == centroid_space(a).linear_basis


def test_transport_invariance_of_centroid_dims():
    rng = seeded("cent-invariance")
    for name in ("BTas_2^2", "BTas_3^11"):
        a = catalog_get(name).algebra
        space = centroid_space(a)
        for _ in range(4):
            while True:
                psi = LinearMap(
                    Matrix(a.dim, a.dim,
                           [Scalar(rng.randint(-2, 2)) for _ in range(a.dim * a.dim)])
                )
                if psi.is_invertible():
                    break
            moved = centroid_space(transport(a, psi))
            assert moved.linear_dim == space.linear_dim
            assert moved.identically_zero == space.identically_zero


# -- central derivations -----------------------------------------------------------

def test_zero_algebra_all_maps_central():
    cd = central_derivations(zero_algebra(2))
    assert len(cd.basis) == 4


def test_zero_map_always_central():
    for name in ("BTas_2^1", "BTas_3^14"):
        a = catalog_get(name).algebra
        assert is_central_derivation(a, LinearMap.zero(a.dim))


def test_first_entry_central_derivations():
    a = catalog_get("BTas_2^1").algebra
    cd = central_derivations(a)
    # A*A = span{e1} and Z(A) is the whole space, so C(A) = {psi(e1) = 0}
    assert len(cd.basis) == 2
    for psi in cd.basis:
        assert vec_is_zero(psi.apply(unit_vec(2, 0)))
    # Cent intersect Der is a strict subspace: the published equality
    # fails under the literal central-derivation definition.
    assert len(cd.cent_inter_der) == 1
    assert cd.contains_intersection and not cd.equals_intersection


def test_intersection_elements_verified():
    for name in ("BTas_2^1", "BTas_3^1", "BTas_3^14"):
        a = catalog_get(name).algebra
        cd = central_derivations(a)
        for psi in cd.cent_inter_der:
            assert is_centroid_element(a, psi)[0]
            from bihomtrias.derivations import is_derivation

            assert is_derivation(a, psi)[0]


def test_forward_inclusion_fails_on_3_14():
    """E11 is both a derivation and a centroid element of this entry but
    its image is not in the twisted centralizer: the published equality
    fails in both directions at desk scale."""
    a = catalog_get("BTas_3^14").algebra
    cd = central_derivations(a)
    assert not cd.contains_intersection
    e11 = unit(3, 1, 1)
    assert is_centroid_element(a, e11)[0]
    from bihomtrias.derivations import is_derivation

    assert is_derivation(a, e11)[0]
    assert not is_central_derivation(a, e11)


# -- interaction suite ----------------------------------------------------------

def test_suite_composition_clause_holds_everywhere():
    for name in catalog_list():
        a = catalog_get(name).algebra
        report = cent_der_property_suite(a, name)
        assert not any(f.check == "cent-der:phi-compose-d" for f in report.failures), name


def test_suite_on_3_1_compositions():
    a = catalog_get("BTas_3^1").algebra
    report = cent_der_property_suite(a, "BTas_3^1")
    assert report.records
    assert all(r["phi_d_is_derivation"] for r in report.records)


def test_suite_failures_are_recorded_not_raised():
    a = catalog_get("BTas_3^14").algebra
    report = cent_der_property_suite(a, "BTas_3^14")
    assert any(f.check == "cent-der:equivalence-i" for f in report.failures)
    assert not report.clean
