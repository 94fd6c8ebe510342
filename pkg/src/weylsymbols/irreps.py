"""Row-pair labels for irreducibles of the classical Weyl groups.

An IrrLabel names one irreducible representation:

* family "A" (symmetric group S_n): a single strictly increasing row z; the
  partition is recovered from the nonzero deviations z[i] - i.
* family "BC" (hyperoctahedral group of rank n): an ordered row pair
  (z, zp) with len(z) = len(zp) + 1 and deviation sums adding to n.
* family "D" (even-signed permutation group of rank n): a row pair of equal
  lengths with the first row at least as heavy as the second; when the rows
  are equal ("degenerate") an extra bit kappa in {0,1} distinguishes the two
  irreducibles sharing the symbol.

Special representations correspond to interleavable labels: merging the two
rows produces an XSeq, and the b- and f-invariants read off that sequence.
The three interleaving maps (zeta for BC, zeta / zeta_tilde for D) and the
deviation codec xi for symmetric-group factors are implemented here, along
with degrees, shifts, and canonical forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from . import seqcomb as sc
from .errors import DomainError, ValidationError
from .seqcomb import Seq

FAMILY_A = "A"
FAMILY_BC = "BC"
FAMILY_D = "D"

FAMILIES = (FAMILY_A, FAMILY_BC, FAMILY_D)


# ---------------------------------------------------------------------------
# labels

@dataclass(frozen=True)
class IrrLabel:
    """Type-tagged symbol naming one irreducible representation."""

    family: str
    n: int
    z: Seq
    zp: Seq | None = None
    kappa: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        if self.kappa not in (0, 1):
            raise ValidationError(f"kappa must be 0 or 1, got {self.kappa!r}")
        if self.family == FAMILY_A:
            if self.zp is not None:
                raise ValidationError("family A labels carry a single row")
            if self.kappa != 0:
                raise ValidationError("family A labels carry no kappa")
            sc.ensure_zseq(self.z)
            if sc.rho0(self.z) != self.n:
                raise ValidationError(
                    f"row statistic {sc.rho0(self.z)} != rank {self.n}"
                )
            return
        if self.zp is None:
            raise ValidationError(f"family {self.family} labels need two rows")
        sc.ensure_zseq(self.z)
        sc.ensure_zseq(self.zp)
        total = sc.rho0(self.z) + sc.rho0(self.zp)
        if total != self.n:
            raise ValidationError(f"row statistics sum to {total} != rank {self.n}")
        if self.family == FAMILY_BC:
            if len(self.z) != len(self.zp) + 1:
                raise ValidationError(
                    f"BC rows must have lengths k+1 and k, got "
                    f"{len(self.z)} and {len(self.zp)}"
                )
            if self.kappa != 0:
                raise ValidationError("family BC labels carry no kappa")
            return
        # family D
        if len(self.z) != len(self.zp):
            raise ValidationError(
                f"D rows must have equal lengths, got {len(self.z)} and {len(self.zp)}"
            )
        w, wp = sc.rho0(self.z), sc.rho0(self.zp)
        if w < wp:
            raise ValidationError("D rows must be ordered heavier row first")
        if w == wp and self.z != self.zp and self.z > self.zp:
            raise ValidationError("equal-weight distinct D rows are stored sorted")
        if self.z != self.zp and self.kappa != 0:
            raise ValidationError("kappa is only meaningful for equal rows")

    @property
    def degenerate(self) -> bool:
        """True when the two rows coincide (family D only)."""
        return self.family == FAMILY_D and self.z == self.zp

    @property
    def is_dagger(self) -> bool:
        """True when the first row is strictly heavier or the rows are equal."""
        if self.family != FAMILY_D:
            return True
        return self.z == self.zp or sc.rho0(self.z) > sc.rho0(self.zp)

    def to_json(self) -> dict:
        out: dict = {"family": self.family, "n": self.n, "z": list(self.z)}
        if self.zp is not None:
            out["zp"] = list(self.zp)
        if self.family == FAMILY_D:
            out["kappa"] = self.kappa
        return out


def make_d_label(n: int, z: Seq, zp: Seq, kappa: int = 0) -> IrrLabel:
    """Build a family-D label, sorting the rows into canonical order."""
    w, wp = sc.rho0(z), sc.rho0(zp)
    if w < wp or (w == wp and z > zp):
        z, zp = zp, z
    return IrrLabel(FAMILY_D, n, z, zp, kappa)


@dataclass(frozen=True)
class SpecialRep:
    """A special representation with its merged sequence and invariants."""

    label: IrrLabel
    xseq: Seq
    b: int
    f: int


# ---------------------------------------------------------------------------
# invariants

def b_invariant(label: IrrLabel) -> int:
    """Least symmetric-power degree of the reflection representation
    containing the irreducible, computed from the rows."""
    if label.family == FAMILY_A:
        return sc.beta0(label.z)
    assert label.zp is not None
    return 2 * sc.beta0(label.z) + 2 * sc.beta0(label.zp) + sc.rho0(label.zp)


def _f_from_strict_count(family: str, count: int) -> int:
    if family == FAMILY_A:
        return 1
    if family == FAMILY_BC:
        return 2 ** ((count - 1) // 2)
    return 2 ** max((count - 2) // 2, 0)


# ---------------------------------------------------------------------------
# interleaving maps

def zeta(label: IrrLabel) -> Seq:
    """Merged sequence of a special label.

    Family BC: alternate first row / second row entries. Family D: alternate
    second row / first row entries. Raises DomainError when the label is not
    special (the merge is not an XSeq).
    """
    if label.family == FAMILY_A:
        raise DomainError("family A labels have no merged sequence")
    assert label.zp is not None
    if label.family == FAMILY_BC:
        merged: list[int] = []
        for a, b in zip(label.z, label.zp):
            merged.extend((a, b))
        merged.append(label.z[-1])
    else:
        merged = []
        for b, a in zip(label.zp, label.z):
            merged.extend((b, a))
    x = tuple(merged)
    try:
        sc.ensure_xseq(x)
    except ValidationError as exc:
        raise DomainError(f"label is not special: {exc}") from exc
    return x


def zeta_inverse(family: str, x: Seq) -> tuple[IrrLabel, ...]:
    """All labels whose merged sequence is x (one, or two in the degenerate
    family-D case with rank >= 2)."""
    sc.ensure_xseq(x)
    m = len(x) - 1
    n = sc.rho(x)
    if family == FAMILY_BC:
        if m % 2 != 0:
            raise DomainError(f"BC merge needs odd length, got m={m}")
        z = x[0::2]
        zp = x[1::2]
        return (IrrLabel(FAMILY_BC, n, z, zp),)
    if family == FAMILY_D:
        if m % 2 != 1:
            raise DomainError(f"D merge needs even length, got m={m}")
        zp = x[0::2]
        z = x[1::2]
        if not sc.frakS(x) and n >= 2:
            return (
                IrrLabel(FAMILY_D, n, z, zp, 0),
                IrrLabel(FAMILY_D, n, z, zp, 1),
            )
        return (IrrLabel(FAMILY_D, n, z, zp),)
    raise DomainError(f"no merged-sequence map for family {family!r}")


def zeta_tilde(label: IrrLabel) -> Seq:
    """Based merged sequence of a family-D special label: prepend 0 and use
    the plain merge shifted up by one."""
    if label.family != FAMILY_D:
        raise DomainError("based merge applies to family D only")
    x = zeta(label)
    xt = (0,) + tuple(v + 1 for v in x)
    try:
        sc.ensure_xtseq(xt)
    except ValidationError as exc:  # pragma: no cover - zeta already validates
        raise DomainError(f"label is not special: {exc}") from exc
    return xt


def zeta_tilde_inverse(xt: Seq) -> tuple[IrrLabel, ...]:
    """All family-D labels whose based merged sequence is xt."""
    sc.ensure_xtseq(xt)
    if any(v < 1 for v in xt[1:]):
        raise DomainError(f"based merge entries after 0 must be >= 1: {xt!r}")
    x = tuple(v - 1 for v in xt[1:])
    return zeta_inverse(FAMILY_D, x)


# ---------------------------------------------------------------------------
# special enumeration

def policy_m(family: str, n: int) -> int:
    """Default merged-sequence length index for each family."""
    if family == FAMILY_A:
        return n
    if family == FAMILY_BC:
        return 2 * n + 2
    if family == FAMILY_D:
        return 2 * n + 1
    raise DomainError(f"unknown family {family!r}")


def special_reps(family: str, n: int, m: int | None = None) -> tuple[SpecialRep, ...]:
    """All special representations of the given family and rank.

    Family A: every irreducible is special (f = 1 throughout). Families BC
    and D enumerate the merged-sequence stratum at the module's length
    policy (or caller-provided m) and expand fibers, so degenerate family-D
    symbols appear once per kappa value.
    """
    if n < 0:
        raise DomainError(f"rank must be nonnegative, got {n}")
    if family == FAMILY_A:
        k = n if m is None else m
        if k < 0:
            raise DomainError(f"row length index must be nonnegative, got {k}")
        return tuple(
            SpecialRep(IrrLabel(FAMILY_A, n, z), z, sc.beta0(z), 1)
            for z in sc.enumerate_space("Z", k, n)
        )
    if family not in (FAMILY_BC, FAMILY_D):
        raise DomainError(f"unknown family {family!r}")
    mm = policy_m(family, n) if m is None else m
    want_parity = 0 if family == FAMILY_BC else 1
    if mm % 2 != want_parity:
        raise DomainError(f"family {family} needs m parity {want_parity}, got {mm}")
    out: list[SpecialRep] = []
    for x in sc.enumerate_space("X", mm, n):
        b = sc.beta(x)
        f = _f_from_strict_count(family, len(sc.frakS(x)))
        for label in zeta_inverse(family, x):
            out.append(SpecialRep(label, x, b, f))
    return tuple(out)


def special_f(label: IrrLabel) -> int:
    """f-invariant of a special label (DomainError when not special)."""
    if label.family == FAMILY_A:
        return 1
    return _f_from_strict_count(label.family, len(sc.frakS(zeta(label))))


def is_special(label: IrrLabel) -> bool:
    """True when the label names a special representation."""
    if label.family == FAMILY_A:
        return True
    try:
        zeta(label)
    except DomainError:
        return False
    return True


# ---------------------------------------------------------------------------
# symmetric-group deviation codec

@dataclass(frozen=True)
class XiBijection:
    """Bijection between rank-p family-A labels and nondecreasing sequences
    of length m+1 with total p (deviation profiles)."""

    p: int
    m: int

    def forward(self, label: IrrLabel) -> Seq:
        if label.family != FAMILY_A or label.n != self.p:
            raise DomainError(f"expected a family A label of rank {self.p}")
        z = align_row(label.z, self.m + 1)
        e = sc.seq_sub(z, sc.base_z(self.m))
        sc.ensure_eseq(e)
        return e

    def backward(self, e: Seq) -> IrrLabel:
        sc.ensure_eseq(e)
        if len(e) != self.m + 1:
            raise DomainError(f"expected length {self.m + 1}, got {len(e)}")
        if sum(e) != self.p:
            raise DomainError(f"expected total {self.p}, got {sum(e)}")
        z = sc.seq_add(e, sc.base_z(self.m))
        return IrrLabel(FAMILY_A, self.p, z)


def xi(p: int, m: int) -> XiBijection:
    """Deviation-profile bijection for rank-p symmetric-group labels at
    length index m; total of the profile equals p."""
    if p < 0 or m < 0:
        raise DomainError(f"p and m must be nonnegative, got p={p} m={m}")
    return XiBijection(p, m)


# ---------------------------------------------------------------------------
# partitions and degrees

def z_to_partition(z: Seq) -> tuple[int, ...]:
    """Partition encoded by a row: nonzero deviations, largest first."""
    sc.ensure_zseq(z)
    devs = [v - i for i, v in enumerate(z)]
    return tuple(sorted((d for d in devs if d), reverse=True))


def partition_to_z(lam: tuple[int, ...], length: int | None = None) -> Seq:
    """Row encoding a partition at the given length (default: minimal)."""
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(v <= 0 for v in lam):
        raise DomainError(f"not a partition: {lam!r}")
    size = len(lam) if lam else 1
    if length is None:
        length = size
    if length < size:
        raise DomainError(f"length {length} below part count {size}")
    padded = [0] * (length - len(lam)) + sorted(lam)
    return tuple(v + i for i, v in enumerate(padded))


@cache
def _hook_dimension(lam: tuple[int, ...]) -> int:
    """Degree of the symmetric-group irreducible for a partition."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = [sum(1 for part in lam if part > i) for i in range(lam[0])]
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= (part - j) + (conj[j] - i) - 1
    return math.factorial(n) // hooks


def dimension(label: IrrLabel) -> int:
    """Degree of the irreducible representation named by the label."""
    if label.family == FAMILY_A:
        return _hook_dimension(z_to_partition(label.z))
    assert label.zp is not None
    lam = z_to_partition(label.z)
    mu = z_to_partition(label.zp)
    base = (
        math.comb(label.n, sum(mu))
        * _hook_dimension(lam)
        * _hook_dimension(mu)
    )
    if label.family == FAMILY_D and label.degenerate and label.n >= 2:
        if base % 2 != 0:
            raise DomainError(f"degenerate degree not even for {label!r}")
        return base // 2
    return base


# ---------------------------------------------------------------------------
# shifts and canonical forms

def align_row(z: Seq, length: int) -> Seq:
    """Shift a row up to the requested length by prepending fresh zeros."""
    sc.ensure_zseq(z)
    if length < len(z):
        raise DomainError(f"cannot shorten row of length {len(z)} to {length}")
    t = length - len(z)
    out = list(z)
    for _ in range(t):
        out = [0] + [v + 1 for v in out]
    return tuple(out)


def shift(label: IrrLabel, t: int) -> IrrLabel:
    """Prepend t fresh slots to every row, preserving all invariants."""
    if t < 0:
        raise DomainError(f"shift amount must be nonnegative, got {t}")
    z = align_row(label.z, len(label.z) + t)
    if label.zp is None:
        return IrrLabel(label.family, label.n, z)
    zp = align_row(label.zp, len(label.zp) + t)
    return IrrLabel(label.family, label.n, z, zp, label.kappa)


def canonicalize(label: IrrLabel) -> IrrLabel:
    """Minimal representative of a label under shifting."""
    if label.family == FAMILY_A:
        z = label.z
        while len(z) > 1 and z[0] == 0:
            z = tuple(v - 1 for v in z[1:])
        return IrrLabel(FAMILY_A, label.n, z)
    assert label.zp is not None
    z, zp = label.z, label.zp
    while len(zp) > 1 and z[0] == 0 and zp[0] == 0:
        z = tuple(v - 1 for v in z[1:])
        zp = tuple(v - 1 for v in zp[1:])
    return IrrLabel(label.family, label.n, z, zp, label.kappa)
