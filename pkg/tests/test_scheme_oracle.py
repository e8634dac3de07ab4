import random
from fractions import Fraction

import pytest

from qhilb.errors import ColengthMismatch, ParameterError
from qhilb.partitions import enumerate_partitions
from qhilb.scheme_oracle import (
    HORIZONTAL,
    VERTICAL,
    PunctualComponent,
    build_scheme,
    cohomology,
    extract_profile,
    graph_curve_h1,
    predict_h1,
    predict_h1_multiline,
    restriction_matrix,
)
from qhilb.scheme_oracle.campaign import verify_instance
from qhilb.scheme_oracle.instances import (
    CampaignConfig,
    InstanceSpec,
    generate_instances,
    graph_curve_instance,
    stratum_instances,
    thickened_instance,
    _profile_tuples,
)
from qhilb.exact_linalg import rank


def points(coords, orientation=HORIZONTAL):
    return build_scheme([(xz, orientation, (1,), None) for xz in coords])


def test_single_point():
    Z = points([(0, 0)])
    assert Z.length == 1
    M = restriction_matrix(Z, 0, 1)
    assert [list(r) for r in M.entries] == [[1, 0]]
    assert rank(M) == 1
    for m, n in [(0, 1), (1, 0), (3, 2)]:
        assert cohomology(Z, m, n).h1 == 0


def test_monomial_component():
    comp = PunctualComponent((0, 0), HORIZONTAL, (3, 1))
    assert comp.colength() == 4
    assert comp.generators() == [{(3, 0): 1}, {(1, 1): 1}, {(0, 2): 1}]
    M = comp.multiplication_matrix("v")
    assert rank(M) == 1
    assert rank([[sum(M[i][t] * M[t][j] for t in range(4)) for j in range(4)] for i in range(4)]) == 0
    assert extract_profile(comp) == (3, 1)


def test_line_decomposition():
    Z = points([(1, 1), (2, 1), (3, 1)])
    assert (Z.lam, Z.nu) == (1, 1)
    assert Z.tau_profiles == [(3,)]
    assert Z.kappa == 3
    assert Z.sigma_profiles == [(1,), (1,), (1,)]


def test_double_point_along_line():
    Z = build_scheme([((0, 0), HORIZONTAL, (2,), None)])
    assert rank(restriction_matrix(Z, 1, 0)) == 2


def test_three_points_on_vertical_line():
    Z = points([(0, 0), (0, 1), (0, 2)])
    rep = cohomology(Z, 1, 1)
    assert (rep.rank, rep.h1) == (2, 1)
    assert rep.predicted_k == 1 and rep.agrees


def test_four_points_on_horizontal_line():
    Z = points([(0, 0), (1, 0), (2, 0), (3, 0)])
    assert cohomology(Z, 2, 2).h1 == 1


def test_points_on_parabola():
    Z = points([(z * z, z) for z in range(5)])
    rep = cohomology(Z, 1, 1)
    assert rep.h1 == 1 == graph_curve_h1(5, 2, 1, 1)
    # m + n < l - 1: no prediction is attached
    assert rep.predicted_k is None and rep.agrees is None


def test_general_position_vanishes():
    Z = points([(0, 0), (1, 3), (2, -1), (5, 7), (-4, 2)])
    assert predict_h1(Z, 2, 2) == 0 == cohomology(Z, 2, 2).h1


def test_line_plus_point():
    Z = points([(0, 0), (1, 0), (2, 0), (3, 0), (5, 7)])
    assert predict_h1(Z, 2, 2) == 1 == cohomology(Z, 2, 2).h1


def test_whole_scheme_on_vertical_line():
    Z = points([(0, z) for z in range(5)])
    assert predict_h1(Z, 3, 1) == 3 == cohomology(Z, 3, 1).h1
    fat = build_scheme([((0, 0), VERTICAL, (5,), 7)])
    assert predict_h1(fat, 3, 1) == 3 == cohomology(fat, 3, 1).h1


def test_predict_requires_range():
    Z = points([(0, z) for z in range(5)])
    with pytest.raises(ParameterError):
        predict_h1(Z, 1, 1)


def test_disjointness_never_triggers_in_range():
    # lines of lengths >= n+2 and >= m+2 share at most one point, so they would need l >= m+n+3
    for inst in generate_instances(CampaignConfig(l_range=(2, 5), trials=40, seed=4)):
        Z = inst.build()
        for m in range(0, 6):
            for n in range(0, 6):
                if (m, n) != (0, 0) and m + n >= Z.length - 1:
                    predict_h1(Z, m, n)


def test_multiline_examples():
    assert predict_h1_multiline([(3,)], 1, 1, "vertical") == 1
    assert predict_h1_multiline([(2, 2)], 0, 1, "horizontal") == 2
    assert predict_h1_multiline([(3, 2, 1), (2,)], 3, 4, "horizontal") == 0
    with pytest.raises(ParameterError):
        predict_h1_multiline([(2, 2)], 0, 0, "horizontal")
    with pytest.raises(ParameterError):
        predict_h1_multiline([(1,)], 0, 0, "diagonal")


def test_doubled_horizontal_line_two_points():
    Z = build_scheme([((0, 0), HORIZONTAL, (1, 1), 3), ((1, 0), HORIZONTAL, (1, 1), 4)])
    assert Z.tau_profiles == [(2, 2)]
    assert cohomology(Z, 0, 1).h1 == 2 == predict_h1_multiline(Z.tau_profiles, 0, 1, "horizontal")


def test_invalid_tail_rejected():
    bad = PunctualComponent((0, 0), HORIZONTAL, (1, 1, 1), {(0, 1, 0): Fraction(1)})
    assert bad.colength() == 2
    with pytest.raises(ColengthMismatch):
        bad.validate()


@pytest.mark.parametrize("orientation", [HORIZONTAL, VERTICAL])
def test_profile_round_trip(orientation):
    for l in range(1, 7):
        for tau in enumerate_partitions(l):
            for seed in (1, 2):
                comp = PunctualComponent.from_seed((0, 0), orientation, tau, seed)
                comp.validate()
                assert extract_profile(comp) == tau


def test_curvilinear_profile():
    for l in range(1, 7):
        assert extract_profile(PunctualComponent((2, 3), VERTICAL, (l,))) == (l,)


def test_h1_depends_only_on_profiles():
    # a zero tail can put a point on a line of the other ruling, which changes its
    # profile there; schemes with equal line profiles must give equal h^1
    pairs = [(m, n) for m in range(0, 5) for n in range(0, 5) if (m, n) != (0, 0) and m + n >= 3]
    rng = random.Random(5)
    for profiles in _profile_tuples(4):
        for ruling in ("vertical", "horizontal"):
            inst = thickened_instance(profiles, ruling, True, rng, 11)
            seen = {}
            for seed in (None, 11, 12, 13):
                Z = inst.with_seed(seed).build()
                key = (tuple(Z.sigma_profiles), tuple(Z.tau_profiles))
                h1s = tuple(cohomology(Z, m, n).h1 for m, n in pairs)
                assert seen.setdefault(key, h1s) == h1s
            assert len(seen) <= 2


def test_euler_identity_on_stream():
    config = CampaignConfig(l_range=(1, 4), m_range=(0, 3), n_range=(0, 3), trials=20, seed=3)
    for inst in generate_instances(config):
        Z = inst.build()
        for m in range(0, 4):
            for n in range(0, 4):
                rep = cohomology(Z, m, n)
                assert rep.h0 - rep.h1 == (m + 1) * (n + 1) - Z.length


def test_checked_rank_agrees():
    inst = thickened_instance(((2, 1), (1,)), "vertical", True, random.Random(0), 9)
    Z = inst.build()
    assert cohomology(Z, 2, 1, checked=True) == cohomology(Z, 2, 1)


def test_serialization_round_trip():
    for inst in generate_instances(CampaignConfig(l_range=(1, 3), trials=10, seed=8)):
        again = InstanceSpec.from_json(inst.to_json())
        assert again == inst
        assert again.to_json() == inst.to_json()


def test_serialization_rejects_wrong_length():
    inst = next(iter(generate_instances(CampaignConfig(l_range=(2, 2), trials=0))))
    d = inst.to_dict()
    d["l"] = 7
    with pytest.raises(ValueError):
        InstanceSpec.from_dict(d)
    d["schema"] = 99
    with pytest.raises(ValueError):
        InstanceSpec.from_dict(d)


def test_stream_is_deterministic():
    config = CampaignConfig(l_range=(1, 4), trials=30, seed=17)
    a = [i.to_json() for i in generate_instances(config)]
    b = [i.to_json() for i in generate_instances(config)]
    assert a == b


def test_two_points_on_vertical_line_present():
    config = CampaignConfig(l_range=(2, 2), trials=0, seed=1)
    found = False
    for inst in generate_instances(config):
        Z = inst.build()
        if any(d.profile == (2,) and len(d.components) == 2 for d in Z.vertical_lines):
            found = True
    assert found


def test_graph_curves_have_distinct_points():
    rng = random.Random(0)
    for c in range(0, 4):
        for l in range(1, 7):
            inst = graph_curve_instance(l, c, rng, 1)
            zs = [z for _, z in inst.supports]
            assert len(set(zs)) == l
            if c >= 1:
                assert len({x for x, _ in inst.supports}) == l


def test_stratum_generator():
    insts = stratum_instances(3, 5, 1, 3)
    assert insts
    for inst in insts:
        Z = inst.build()
        assert predict_h1(Z, 1, 3) == 3
        assert cohomology(Z, 1, 3).h1 == 3
    assert stratum_instances(4, 5, 1, 3) == []


def test_verify_instance_reports():
    inst = stratum_instances(1, 3, 0, 2)[0]
    reps = verify_instance(inst, [(0, 2), (0, 0), (1, 1)])
    assert [(r["m"], r["n"]) for r in reps] == [(0, 2), (1, 1)]
    assert all(r["agrees"] for r in reps)
