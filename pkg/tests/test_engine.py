"""Verification-engine checks: subgroup shapes, symmetry descriptors,
member enumeration with replay, frozen small-rank reports, determinism."""

from __future__ import annotations

import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from weylsymbols import seqcomb as sc
from weylsymbols.engine import (
    RANK_FLOOR,
    OmegaDescriptor,
    ParahoricSpec,
    bar_S,
    enumerate_cz,
    fa,
    fc,
    verify,
)
from weylsymbols.errors import DomainError
from weylsymbols.irreps import (
    FAMILY_A,
    FAMILY_BC,
    FAMILY_D,
    IrrLabel,
    canonicalize,
    make_d_label,
    partition_to_z,
    special_reps,
    z_to_partition,
)
from weylsymbols.jinduction import (
    EMBED_A_SPLIT,
    EMBED_B_WR_SP_WQ,
    EMBED_B_WR_WQ,
    EMBED_C_WR_WDQ,
    EMBED_D_TRIPLE,
    Embedding,
    f_product,
    j_induce,
)
from weylsymbols.springer import enumerate_classes, tau_fiber


def _member_image(spec: ParahoricSpec, factors):
    """Recompute a member's induction image through the public embeddings."""
    if spec.family == "A":
        acc = factors[0]
        step = spec.n // spec.d
        for h in range(1, spec.d):
            acc = j_induce(Embedding(EMBED_A_SPLIT, r=h * step, q=step),
                           (acc, factors[h]))
        return canonicalize(acc)
    if spec.family == "B":
        if spec.p == 0:
            return j_induce(Embedding(EMBED_B_WR_WQ, r=spec.r, q=spec.q),
                            factors)
        return j_induce(
            Embedding(EMBED_B_WR_SP_WQ, r=spec.r, p=spec.p, q=spec.q), factors
        )
    if spec.family == "C":
        return j_induce(Embedding(EMBED_C_WR_WDQ, r=spec.r, q=spec.q), factors)
    if len(factors) == 2:
        factors = (factors[0], IrrLabel(FAMILY_A, 0, (0,)), factors[1])
    return j_induce(
        Embedding(EMBED_D_TRIPLE, r=spec.r, p=spec.p, q=spec.q, lam=spec.lam),
        factors,
    )


def _stratum(family: str, n: int) -> list[IrrLabel]:
    out = []
    for c in enumerate_classes(family, n):
        out.extend(canonicalize(lab) for lab in tau_fiber(family, c.y, n))
    return out


# ---------------------------------------------------------------------------
# shapes and symmetry descriptors

def test_parahoric_spec_family_a():
    spec = ParahoricSpec("A", 6, d=3, coset=1)
    assert spec.diagram_size() == 3
    assert not spec.is_maximal()
    assert ParahoricSpec("A", 6, d=1).is_maximal()
    assert spec.to_json() == {"family": "A", "n": 6, "d": 3, "coset": 1}
    with pytest.raises(DomainError):
        ParahoricSpec("A", 6, d=4)
    with pytest.raises(DomainError):
        ParahoricSpec("A", 6, d=3, coset=2)
    with pytest.raises(DomainError):
        ParahoricSpec("A", 6, d=2, r=1, q=3)


def test_parahoric_spec_blocks():
    assert ParahoricSpec("B", 5, r=2, q=3).is_maximal()
    assert ParahoricSpec("B", 5, r=0, q=5).is_maximal()
    assert not ParahoricSpec("B", 5, r=1, p=2, q=2).is_maximal()
    assert ParahoricSpec("C", 5, r=2, q=3).is_maximal()
    assert ParahoricSpec("C", 5, r=5, q=0).is_maximal()
    assert not ParahoricSpec("C", 5, r=4, q=1).is_maximal()
    assert ParahoricSpec("D", 6, r=2, q=4).is_maximal()
    assert not ParahoricSpec("D", 6, r=1, q=5).is_maximal()
    assert not ParahoricSpec("D", 6, r=0, p=6, q=0, lam=3).is_maximal()
    with pytest.raises(DomainError):
        ParahoricSpec("B", 5, r=2, q=2)
    with pytest.raises(DomainError):
        ParahoricSpec("C", 5, r=2, p=1, q=2)
    with pytest.raises(DomainError):
        ParahoricSpec("B", 5, r=2, p=1, q=2, lam=1)
    with pytest.raises(DomainError):
        ParahoricSpec("D", 6, r=2, p=2, q=2, lam=1)
    with pytest.raises(DomainError):
        ParahoricSpec("D", 6, r=0, p=2, q=4, lam=2)


def test_omega_descriptor_orders():
    assert OmegaDescriptor("A", 6).order == 6
    assert OmegaDescriptor("B", 4).order == 2
    assert OmegaDescriptor("C", 4).order == 2
    assert OmegaDescriptor("D", 4).order == 4
    assert OmegaDescriptor("A", 6).subgroups() == (
        ("C1", 1), ("C2", 2), ("C3", 3), ("C6", 6)
    )
    # even rank: three involutions; odd rank: cyclic with one involution
    assert [o for _, o in OmegaDescriptor("D", 4).subgroups()] == [1, 2, 2, 2, 4]
    assert [o for _, o in OmegaDescriptor("D", 5).subgroups()] == [1, 2, 4]
    with pytest.raises(DomainError):
        OmegaDescriptor("D", 3)


def test_rank_floors():
    for family, floor in RANK_FLOOR.items():
        with pytest.raises(DomainError):
            verify(family, floor - 1)
        with pytest.raises(DomainError):
            bar_S(family, floor - 1)


# ---------------------------------------------------------------------------
# member enumeration

def test_enumerate_cz_rejects_labels_outside_the_stratum():
    lab = make_d_label(4, (0, 3), (1, 2))
    with pytest.raises(DomainError):
        enumerate_cz(lab, "D", 4)


def test_enumerate_cz_members_replay_to_their_label():
    for family, n in (("B", 3), ("C", 3), ("D", 4)):
        for lab in _stratum(family, n):
            for spec, factors in enumerate_cz(lab, family, n):
                assert spec.is_maximal()
                got = _member_image(spec, factors)
                if got.family == FAMILY_D and got.z == got.zp:
                    assert (got.z, got.zp) == (lab.z, lab.zp)
                else:
                    assert got == lab


def test_enumerate_cz_nonmaximal_extends_the_maximal_members():
    for family, n in (("B", 3), ("D", 4)):
        for lab in _stratum(family, n):
            maximal = enumerate_cz(lab, family, n)
            everything = enumerate_cz(lab, family, n, maximal_only=False)
            assert set(maximal) <= set(everything)
    # the top class sequence admits a middle-block member
    lab = _stratum("B", 3)[0]
    shapes = {
        (spec.r, spec.p, spec.q)
        for spec, _ in enumerate_cz(lab, "B", 3, maximal_only=False)
    }
    assert any(p > 0 for _, p, _ in shapes)


def test_enumerate_cz_family_a_divisor_members():
    lab = IrrLabel(FAMILY_A, 4, partition_to_z((2, 2)))
    members = enumerate_cz(lab, "A", 4, maximal_only=False)
    assert [(spec.d, len(factors)) for spec, factors in members] == [
        (1, 1), (2, 2)
    ]
    half = members[1][1][0]
    assert z_to_partition(half.z) == (1, 1)
    for spec, factors in members:
        assert _member_image(spec, factors) == canonicalize(lab)


# ---------------------------------------------------------------------------
# invariants against hand-checked values

def test_family_a_symmetry_order_is_the_deviation_gcd():
    for n in range(2, 9):
        for rep in special_reps(FAMILY_A, n):
            part = z_to_partition(rep.label.z)
            assert fc(rep.label, "A", n) == math.gcd(n, *part)


def test_family_a_counts_and_f():
    for n in range(2, 9):
        for rep in special_reps(FAMILY_A, n):
            assert fa(rep.label, "A", n) == 1


def test_frozen_report_family_b_rank_two():
    rep = verify("B", 2)
    assert rep.ok()
    rows = [(r.y, r.label.z, r.label.zp, r.b_label, r.fa_value, r.fc_value)
            for r in rep.rows]
    assert rows == [
        ((0, 0, 2, 2, 4, 4, 8), (0, 3), (0,), 0, 1, 2),
        ((0, 0, 2, 2, 4, 5, 7), (0, 2), (1,), 1, 2, 1),
        ((0, 0, 2, 2, 4, 6, 6), (0, 1), (2,), 2, 1, 2),
        ((0, 0, 2, 3, 4, 5, 6), (0, 1, 2), (1, 2), 4, 1, 1),
    ]


def test_frozen_report_family_c_rank_three():
    rep = verify("C", 3)
    assert rep.ok()
    assert [(r.fa_value, r.fc_value) for r in rep.rows] == [
        (1, 2), (2, 2), (1, 1), (1, 2), (1, 2), (2, 1), (1, 2), (1, 1)
    ]


def test_frozen_report_family_d_rank_four():
    rep = verify("D", 4)
    assert rep.ok()
    assert [(r.fa_value, r.fc_value) for r in rep.rows] == [
        (1, 4), (1, 4), (1, 2), (1, 2), (1, 2), (2, 1),
        (1, 4), (1, 2), (1, 2), (1, 2), (1, 1), (1, 1),
    ]
    # split fibers appear once per kappa with identical invariants
    split = [r for r in rep.rows if r.label.z == r.label.zp]
    assert sorted(r.label.kappa for r in split) == [0, 1, 0, 1] or sorted(
        r.label.kappa for r in split
    ) == [0, 0, 1, 1]


def test_symmetry_witness_shapes_are_symmetric():
    for family, n in (("B", 4), ("D", 5)):
        rep = verify(family, n)
        assert rep.ok()
        for row in rep.rows:
            if row.fc_value == 1:
                continue
            spec, factors = row.witnesses[-1]
            if row.fc_value == 4 or family == "B":
                assert spec.r == spec.q
                assert factors[0] == factors[-1]


def test_bar_s_matches_the_stratum_size():
    for family, ns in (("B", (2, 3, 4)), ("C", (3, 4)), ("D", (4, 5))):
        for n in ns:
            assert len(bar_S(family, n)) == len(_stratum(family, n))


def test_fc_divides_the_symmetry_order():
    for family, n in (("B", 4), ("C", 4), ("D", 4), ("D", 5)):
        order = OmegaDescriptor(family, n).order
        for lab in _stratum(family, n):
            assert order % fc(lab, family, n) == 0


# ---------------------------------------------------------------------------
# full verification

def test_verify_holds_on_small_ranks():
    for family, ns in (
        ("A", (2, 3, 4, 5)),
        ("B", (2, 3, 4, 5)),
        ("C", (3, 4, 5)),
        ("D", (4, 5, 6)),
    ):
        for n in ns:
            rep = verify(family, n)
            assert rep.ok(), (family, n)
            assert rep.holds_a and rep.holds_b1
            assert rep.holds_b2 and rep.holds_b3


def test_verify_row_count_tracks_the_fibers():
    for family, n in (("B", 4), ("C", 4), ("D", 4), ("D", 5)):
        rep = verify(family, n)
        assert len(rep.rows) == len(_stratum(family, n))


def test_every_maximal_member_respects_the_component_bound():
    for family, n in (("B", 4), ("C", 4), ("D", 5)):
        rep = verify(family, n)
        for row in rep.rows:
            members = enumerate_cz(row.label, family, n)
            assert all(
                f_product(factors) <= row.z_value for _, factors in members
            )
            assert row.fa_value == row.z_value


def test_reports_are_deterministic_and_serializable():
    first = json.dumps(verify("D", 4).to_json(), sort_keys=True)
    second = json.dumps(verify("D", 4).to_json(), sort_keys=True)
    assert first == second
    table = verify("B", 2).to_table()
    assert "PASS" in table
    assert table == verify("B", 2).to_table()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("B", n) for n in (2, 3, 4, 5)]
                       + [("C", n) for n in (3, 4, 5)]
                       + [("D", n) for n in (4, 5, 6)]),
       st.data())
def test_member_images_land_in_the_stratum(pair, data):
    family, n = pair
    labels = _stratum(family, n)
    lab = data.draw(st.sampled_from(labels))
    members = enumerate_cz(lab, family, n)
    assert members
    spec, factors = data.draw(st.sampled_from(list(members)))
    got = _member_image(spec, factors)
    if got.family == FAMILY_D and got.z == got.zp:
        assert (got.z, got.zp) == (lab.z, lab.zp)
    else:
        assert got == lab
