"""Class-side combinatorics: strata of unipotent classes and their
centralizer-component invariants.

A ClassLabel names one unipotent-class stratum by a single sequence:

* family "A": a strictly increasing row (same codec as the representation
  side; the two sides coincide here).
* family "B": a YSeq of even length index m = 2k.
* family "C": a based YSeq (y[1] >= 1) of even length index.
* family "D": a YSeq of odd length index m = 2k-1.

The map tau pairs each theorem-side label with its stratum by splitting the
sequence into two rows; tau_fiber inverts it.  class_invariants evaluates
the component-group data: bbar (the weighted deviation statistic of y),
z (component count of the adjoint-group centralizer), ztilde_over_z (extra
components in the simply connected cover), and, for family D only,
uz_over_z (the intermediate special-orthogonal cover).  All of them read
off the interval set frakI(y) and its odd-size part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import seqcomb as sc
from .errors import DomainError, InvariantError, ValidationError
from .irreps import FAMILY_A, FAMILY_BC, FAMILY_D, IrrLabel, align_row, canonicalize
from .seqcomb import Seq

CLASS_A = "A"
CLASS_B = "B"
CLASS_C = "C"
CLASS_D = "D"

CLASS_FAMILIES = (CLASS_A, CLASS_B, CLASS_C, CLASS_D)

# class-side family -> label-side family of the tau-partners
LABEL_FAMILY = {
    CLASS_A: FAMILY_A,
    CLASS_B: FAMILY_BC,
    CLASS_C: FAMILY_BC,
    CLASS_D: FAMILY_D,
}


@dataclass(frozen=True)
class ClassLabel:
    """One unipotent-class stratum, named by its sequence."""

    family: str
    n: int
    y: Seq

    def __post_init__(self) -> None:
        if self.family not in CLASS_FAMILIES:
            raise ValidationError(f"unknown class family {self.family!r}")
        m = len(self.y) - 1
        if self.family == CLASS_A:
            sc.ensure_zseq(self.y)
            total = sc.rho0(self.y)
        elif self.family == CLASS_B:
            sc.ensure_yseq(self.y)
            if m % 2 != 0:
                raise ValidationError(f"family B needs even length index, got {m}")
            total = sc.rho_prime(self.y)
        elif self.family == CLASS_C:
            sc.ensure_ytseq(self.y)
            total = sc.tilde_rho_prime(self.y)
        else:
            sc.ensure_yseq(self.y)
            if m % 2 != 1:
                raise ValidationError(f"family D needs odd length index, got {m}")
            total = sc.rho_prime(self.y)
        if total != self.n:
            raise ValidationError(f"sequence statistic {total} != rank {self.n}")

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "y": list(self.y)}


@dataclass(frozen=True)
class ClassInvariants:
    """Centralizer-component data of one class."""

    bbar: int
    z: int
    ztilde_over_z: int
    uz_over_z: int | None = None

    def to_json(self) -> dict:
        out = {"bbar": self.bbar, "z": self.z, "ztilde_over_z": self.ztilde_over_z}
        if self.uz_over_z is not None:
            out["uz_over_z"] = self.uz_over_z
        return out


def class_policy_m(family: str, n: int) -> int:
    """Default sequence length index for each class family."""
    if family == CLASS_A:
        return n
    if family in (CLASS_B, CLASS_C):
        return 2 * n + 2
    if family == CLASS_D:
        return 2 * n + 1
    raise DomainError(f"unknown class family {family!r}")


# ---------------------------------------------------------------------------
# the stratum maps

def tau(family: str, label: IrrLabel) -> ClassLabel:
    """Stratum of a theorem-side label: rows merged with staircase offsets.

    Family B: even slots get the first row, odd slots the second, offset i.
    Family C: odd slots are offset by i+1 instead.  Family D: the rows swap
    (first row to odd slots).  Raises DomainError when the merge leaves the
    stratum space (the label is outside the theorem's domain).
    """
    if family not in CLASS_FAMILIES:
        raise DomainError(f"unknown class family {family!r}")
    if label.family != LABEL_FAMILY[family]:
        raise DomainError(
            f"class family {family} pairs with {LABEL_FAMILY[family]} labels, "
            f"got {label.family}"
        )
    if family == CLASS_A:
        return ClassLabel(CLASS_A, label.n, label.z)
    lab = canonicalize(label)
    assert lab.zp is not None
    k = label.n + 1
    zp = align_row(lab.zp, k)
    z = align_row(lab.z, k + 1 if family in (CLASS_B, CLASS_C) else k)
    merged: list[int] = []
    if family == CLASS_B:
        for i in range(k + 1):
            merged.append(z[i] + i)
            if i < k:
                merged.append(zp[i] + i)
    elif family == CLASS_C:
        for i in range(k + 1):
            merged.append(z[i] + i)
            if i < k:
                merged.append(zp[i] + i + 1)
    else:
        for i in range(k):
            merged.append(zp[i] + i)
            merged.append(z[i] + i)
    y = tuple(merged)
    try:
        return ClassLabel(family, label.n, y)
    except ValidationError as exc:
        raise DomainError(f"label outside the family-{family} domain: {exc}") from exc


def tau_fiber(family: str, y: Seq, n: int | None = None) -> tuple[IrrLabel, ...]:
    """All labels mapping to the stratum y (two in the degenerate family-D
    case, one otherwise)."""
    if family == CLASS_A:
        sc.ensure_zseq(y)
        rank = sc.rho0(y)
        if n is not None and n != rank:
            raise DomainError(f"rank {n} != sequence statistic {rank}")
        return (IrrLabel(FAMILY_A, rank, y),)
    if family == CLASS_B:
        sc.ensure_yseq(y)
        rank = sc.rho_prime(y)
        z = tuple(v - i for i, v in enumerate(y[0::2]))
        zp = tuple(v - i for i, v in enumerate(y[1::2]))
        return (IrrLabel(FAMILY_BC, rank, z, zp),)
    if family == CLASS_C:
        sc.ensure_ytseq(y)
        rank = sc.tilde_rho_prime(y)
        z = tuple(v - i for i, v in enumerate(y[0::2]))
        zp = tuple(v - i - 1 for i, v in enumerate(y[1::2]))
        return (IrrLabel(FAMILY_BC, rank, z, zp),)
    if family == CLASS_D:
        sc.ensure_yseq(y)
        rank = sc.rho_prime(y)
        z = tuple(v - i for i, v in enumerate(y[1::2]))
        zp = tuple(v - i for i, v in enumerate(y[0::2]))
        if not sc.frakI(y) and rank >= 2:
            return (
                IrrLabel(FAMILY_D, rank, z, zp, 0),
                IrrLabel(FAMILY_D, rank, z, zp, 1),
            )
        return (IrrLabel(FAMILY_D, rank, z, zp),)
    raise DomainError(f"unknown class family {family!r}")


# ---------------------------------------------------------------------------
# invariants

def _interval_sizes(intervals: tuple[tuple[int, int], ...]) -> list[int]:
    return [hi - lo + 1 for lo, hi in intervals]


def class_invariants(c: ClassLabel) -> ClassInvariants:
    """Component-group data of a class, from the interval set of y."""
    if c.family == CLASS_A:
        base = sc.base_z(len(c.y) - 1)
        ztilde = math.gcd(c.n, *(v - b for v, b in zip(c.y, base)))
        if c.n == 0:
            ztilde = 1
        return ClassInvariants(bbar=sc.beta0(c.y), z=1, ztilde_over_z=ztilde)
    intervals = sc.frakI(c.y)
    sizes = _interval_sizes(intervals)
    if c.family == CLASS_B:
        if not intervals:
            raise InvariantError(f"even-length stratum without intervals: {c.y!r}")
        return ClassInvariants(
            bbar=sc.beta_prime(c.y),
            z=2 ** (len(intervals) - 1),
            ztilde_over_z=2 if all(s == 1 for s in sizes) else 1,
        )
    if c.family == CLASS_C:
        delta = 1 if any(lo > 0 for lo, hi in sc.frakI_odd(c.y)) else 0
        exponent = len(intervals) - 1 - delta
        if exponent < 0:
            raise InvariantError(f"negative component exponent for {c.y!r}")
        return ClassInvariants(
            bbar=sc.tilde_beta_prime(c.y),
            z=2**exponent,
            ztilde_over_z=2**delta,
        )
    # family D
    delta = 1 if sc.frakI_odd(c.y) else 0
    z = 2 ** max(len(intervals) - 1 - delta, 0)
    uz = 2 ** max(len(intervals) - 1, 0)
    all_singletons = all(s == 1 for s in sizes)
    if delta == 1:
        ratio = 4 if all_singletons else 2
    elif not intervals:
        ratio = 2
    elif not all_singletons:
        ratio = 1
    else:
        # a size-one interval is odd-size, which forces delta = 1
        raise InvariantError(f"unreachable component case for {c.y!r}")
    if ratio != (2 if all_singletons else 1) * (uz // z):
        raise InvariantError(f"component recombination failed for {c.y!r}")
    return ClassInvariants(
        bbar=sc.beta_prime(c.y),
        z=z,
        ztilde_over_z=ratio,
        uz_over_z=uz // z,
    )


# ---------------------------------------------------------------------------
# enumeration

_SPACE_KIND = {CLASS_A: "Z", CLASS_B: "Y", CLASS_C: "YT", CLASS_D: "Y"}


def enumerate_classes(family: str, n: int, m: int | None = None) -> tuple[ClassLabel, ...]:
    """All strata of the family at rank n, lexicographically, at the policy
    length (or caller-provided m)."""
    if family not in CLASS_FAMILIES:
        raise DomainError(f"unknown class family {family!r}")
    if n < 0:
        raise DomainError(f"rank must be nonnegative, got {n}")
    mm = class_policy_m(family, n) if m is None else m
    out = []
    for y in sc.enumerate_space(_SPACE_KIND[family], mm, n):
        if family == CLASS_C and mm >= 2 * n + 2 and (y[0] != 0 or y[1] != 1):
            # at the policy length a based stratum always starts (0, 1, ...)
            raise InvariantError(f"based stratum starts {y[:2]}: {y!r}")
        out.append(ClassLabel(family, n, y))
    return tuple(out)


# ---------------------------------------------------------------------------
# shifts (stability of published outputs under enlarging the ambient space)

def shift_class(c: ClassLabel, t: int) -> ClassLabel:
    """Stratum of the same class at length index enlarged by 2t (or t for
    family A): the label-side shift conjugated through tau."""
    if t < 0:
        raise DomainError(f"shift amount must be nonnegative, got {t}")
    y = c.y
    for _ in range(t):
        if c.family == CLASS_A:
            y = (0,) + tuple(v + 1 for v in y)
        elif c.family == CLASS_B:
            y = (0, 0) + tuple(v + 2 for v in y)
        elif c.family == CLASS_C:
            y = (0, 1) + tuple(v + 2 for v in y)
        else:
            y = (0, 0) + tuple(v + 2 for v in y)
    return ClassLabel(c.family, c.n, y)
