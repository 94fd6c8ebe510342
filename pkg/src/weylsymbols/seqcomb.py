"""Integer-sequence combinatorics underlying the symbol calculus.

Five families of finite integer sequences are used throughout the package,
all stored as plain tuples of nonnegative ints of length m+1:

* ZSeq: strictly increasing.
* XSeq: nondecreasing with x[i] < x[i+2] (at most two equal in a row).
* YSeq: nondecreasing with x[i] <= x[i+2] - 2.
* ESeq: nondecreasing.
* subtypes XTSeq (an XSeq with x[0] = 0, x[1] >= 1, m even) and
  YTSeq (a YSeq with y[1] >= 1, m even).

The statistics frakS (positions that are strictly larger than the left
neighbour and strictly smaller than the right one) and frakI (maximal
constant runs of y[i] - i with a strict jump at both ends) drive everything:
parities, the unique block decomposition of a YSeq, the matched-split sets
S(y) and tilde-S(y), and the skeleton/remainder decomposition of an XSeq.
Deviation statistics (rho/beta families) measure each sequence against the
minimal member of its space and are additive under entrywise addition.

All functions are pure; sequences in and out are tuples, sets of indices are
frozensets, and interval sets are tuples of (lo, hi) pairs sorted by lo.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import DomainError, InvariantError, ResourceError, ValidationError

Seq = tuple[int, ...]
Interval = tuple[int, int]

SIZE_CAP = 64

KIND_SINGLE_PAIR = "SINGLE_PAIR"
KIND_ARITHMETIC = "ARITHMETIC"


# ---------------------------------------------------------------------------
# validation

def _ensure_entries(seq: Seq) -> None:
    if not isinstance(seq, tuple) or len(seq) == 0:
        raise ValidationError(f"sequence must be a nonempty tuple, got {seq!r}")
    for v in seq:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValidationError(f"entries must be nonnegative ints, got {seq!r}")


def ensure_zseq(seq: Seq) -> None:
    """Raise ValidationError unless seq is strictly increasing."""
    _ensure_entries(seq)
    for i in range(len(seq) - 1):
        if not seq[i] < seq[i + 1]:
            raise ValidationError(f"not strictly increasing at {i}: {seq!r}")


def ensure_xseq(seq: Seq) -> None:
    """Raise ValidationError unless seq is nondecreasing with seq[i] < seq[i+2]."""
    _ensure_entries(seq)
    for i in range(len(seq) - 1):
        if not seq[i] <= seq[i + 1]:
            raise ValidationError(f"not nondecreasing at {i}: {seq!r}")
    for i in range(len(seq) - 2):
        if not seq[i] < seq[i + 2]:
            raise ValidationError(f"three equal entries at {i}: {seq!r}")


def ensure_yseq(seq: Seq) -> None:
    """Raise ValidationError unless seq is nondecreasing with seq[i] <= seq[i+2]-2."""
    _ensure_entries(seq)
    for i in range(len(seq) - 1):
        if not seq[i] <= seq[i + 1]:
            raise ValidationError(f"not nondecreasing at {i}: {seq!r}")
    for i in range(len(seq) - 2):
        if not seq[i] <= seq[i + 2] - 2:
            raise ValidationError(f"two-step gap violated at {i}: {seq!r}")


def ensure_eseq(seq: Seq) -> None:
    """Raise ValidationError unless seq is nondecreasing."""
    _ensure_entries(seq)
    for i in range(len(seq) - 1):
        if not seq[i] <= seq[i + 1]:
            raise ValidationError(f"not nondecreasing at {i}: {seq!r}")


def ensure_xtseq(seq: Seq) -> None:
    """Raise ValidationError unless seq is a based XSeq (x0 = 0, x1 >= 1, m even)."""
    ensure_xseq(seq)
    m = len(seq) - 1
    if m % 2 != 0 or m < 2:
        raise ValidationError(f"based XSeq needs even length index m >= 2, got m={m}")
    if seq[0] != 0 or seq[1] < 1:
        raise ValidationError(f"based XSeq needs x0 = 0 and x1 >= 1: {seq!r}")


def ensure_ytseq(seq: Seq) -> None:
    """Raise ValidationError unless seq is a based YSeq (y1 >= 1, m even)."""
    ensure_yseq(seq)
    m = len(seq) - 1
    if m % 2 != 0 or m < 2:
        raise ValidationError(f"based YSeq needs even length index m >= 2, got m={m}")
    if seq[1] < 1:
        raise ValidationError(f"based YSeq needs y1 >= 1: {seq!r}")


def seq_add(a: Seq, b: Seq) -> Seq:
    """Entrywise sum; mismatched lengths are a domain error."""
    if len(a) != len(b):
        raise DomainError(f"cannot add sequences of lengths {len(a)} and {len(b)}")
    return tuple(u + v for u, v in zip(a, b))


def seq_sub(a: Seq, b: Seq) -> Seq:
    """Entrywise difference; mismatched lengths are a domain error."""
    if len(a) != len(b):
        raise DomainError(f"cannot subtract sequences of lengths {len(a)} and {len(b)}")
    return tuple(u - v for u, v in zip(a, b))


# ---------------------------------------------------------------------------
# base sequences (the minimal member of each space)

def base_z(m: int) -> Seq:
    """(0, 1, ..., m)."""
    return tuple(range(m + 1))


def base_x(m: int) -> Seq:
    """(0,0,1,1,...): the unique XSeq with deviation statistic 0."""
    return tuple(i // 2 for i in range(m + 1))


def base_y(m: int) -> Seq:
    """(0,0,2,2,...): equals 2 * base_x entrywise."""
    return tuple(2 * (i // 2) for i in range(m + 1))


def base_xt(m: int) -> Seq:
    """(0,1,1,2,2,...): the minimal based XSeq (m even)."""
    if m % 2 != 0:
        raise DomainError(f"based XSeq base needs m even, got {m}")
    return tuple((i + 1) // 2 for i in range(m + 1))


def base_yt(m: int) -> Seq:
    """(0,1,2,...,m): the minimal based YSeq (m even); base_x + base_xt."""
    if m % 2 != 0:
        raise DomainError(f"based YSeq base needs m even, got {m}")
    return tuple(range(m + 1))


# ---------------------------------------------------------------------------
# deviation statistics

def rho0(z: Seq) -> int:
    """Sum of deviations of a ZSeq from (0,1,...,m)."""
    ensure_zseq(z)
    return sum(v - i for i, v in enumerate(z))


def beta0(z: Seq) -> int:
    """Deviations of a ZSeq weighted by the number of later positions."""
    ensure_zseq(z)
    m = len(z) - 1
    return sum((m - i) * (v - i) for i, v in enumerate(z))


def _dev_sum(seq: Seq, base: Seq) -> int:
    return sum(v - b for v, b in zip(seq, base))


def _dev_weighted(seq: Seq, base: Seq) -> int:
    m = len(seq) - 1
    return sum((m - i) * (v - b) for i, (v, b) in enumerate(zip(seq, base)))


def rho(x: Seq) -> int:
    ensure_xseq(x)
    return _dev_sum(x, base_x(len(x) - 1))


def beta(x: Seq) -> int:
    ensure_xseq(x)
    return _dev_weighted(x, base_x(len(x) - 1))


def rho_prime(y: Seq) -> int:
    ensure_yseq(y)
    return _dev_sum(y, base_y(len(y) - 1))


def beta_prime(y: Seq) -> int:
    ensure_yseq(y)
    return _dev_weighted(y, base_y(len(y) - 1))


def tilde_rho(x: Seq) -> int:
    ensure_xtseq(x)
    return _dev_sum(x, base_xt(len(x) - 1))


def tilde_beta(x: Seq) -> int:
    ensure_xtseq(x)
    return _dev_weighted(x, base_xt(len(x) - 1))


def tilde_rho_prime(y: Seq) -> int:
    ensure_ytseq(y)
    return _dev_sum(y, base_yt(len(y) - 1))


def tilde_beta_prime(y: Seq) -> int:
    ensure_ytseq(y)
    return _dev_weighted(y, base_yt(len(y) - 1))


def eseq_sum(e: Seq) -> int:
    """Total of an ESeq (its deviation statistic: the base is all zero)."""
    ensure_eseq(e)
    return sum(e)


# ---------------------------------------------------------------------------
# frakS / frakI statistics

def frakS(x: Seq) -> frozenset[int]:
    """Positions strictly above the left neighbour and below the right one.

    Endpoints compare against virtual neighbours at -infinity / +infinity,
    realized as edge-case branches.
    """
    ensure_xseq(x)
    m = len(x) - 1
    out = set()
    for i in range(m + 1):
        left_ok = i == 0 or x[i - 1] < x[i]
        right_ok = i == m or x[i] < x[i + 1]
        if left_ok and right_ok:
            out.add(i)
    return frozenset(out)


def frakI(y: Seq) -> tuple[Interval, ...]:
    """Maximal constant runs of y[i] - i with a strict increase at both ends."""
    ensure_yseq(y)
    m = len(y) - 1
    d = [v - i for i, v in enumerate(y)]
    out: list[Interval] = []
    i = 0
    while i <= m:
        j = i
        while j < m and d[j + 1] == d[j]:
            j += 1
        left_ok = i == 0 or d[i - 1] < d[i]
        right_ok = j == m or d[j] < d[j + 1]
        if left_ok and right_ok:
            out.append((i, j))
        i = j + 1
    return tuple(out)


def frakI_odd(y: Seq) -> tuple[Interval, ...]:
    """The odd-size members of frakI(y)."""
    return tuple(iv for iv in frakI(y) if (iv[1] - iv[0] + 1) % 2 == 1)


def frakI_even(y: Seq) -> tuple[Interval, ...]:
    """The even-size members of frakI(y)."""
    return tuple(iv for iv in frakI(y) if (iv[1] - iv[0] + 1) % 2 == 0)


def R(y: Seq) -> frozenset[int]:
    """Endpoints of the frakI(y) intervals."""
    out = set()
    for lo, hi in frakI(y):
        out.add(lo)
        out.add(hi)
    return frozenset(out)


def R0(y: Seq) -> frozenset[int]:
    """Positions of the size-one frakI(y) intervals."""
    return frozenset(lo for lo, hi in frakI(y) if lo == hi)


# ---------------------------------------------------------------------------
# block decomposition

@dataclass(frozen=True)
class Block:
    """One block of the unique decomposition of a YSeq.

    start/stop are inclusive indices; kind SINGLE_PAIR means the two entries
    are equal (value base), kind ARITHMETIC means entries step by one
    starting from base.
    """

    start: int
    stop: int
    kind: str
    base: int

    @property
    def size(self) -> int:
        return self.stop - self.start + 1


@dataclass(frozen=True)
class IntervalDecomp:
    """Ordered block decomposition of a YSeq.

    Consecutive blocks are separated by a jump of at least two in the
    sequence values; ARITHMETIC blocks reproduce frakI, and the equal-value
    SINGLE_PAIR blocks carry no interval.
    """

    blocks: tuple[Block, ...]

    def arithmetic_intervals(self) -> tuple[Interval, ...]:
        return tuple((b.start, b.stop) for b in self.blocks if b.kind == KIND_ARITHMETIC)

    def pair_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.kind == KIND_SINGLE_PAIR)


def interval_decomp(y: Seq) -> IntervalDecomp:
    """Decompose a YSeq into equal pairs and step-one runs.

    A repeat y[i] = y[i+1] is always flanked by jumps >= 2 on both sides, so
    the greedy scan below is the unique decomposition.
    """
    ensure_yseq(y)
    m = len(y) - 1
    blocks: list[Block] = []
    i = 0
    while i <= m:
        if i < m and y[i + 1] == y[i]:
            blocks.append(Block(i, i + 1, KIND_SINGLE_PAIR, y[i]))
            i += 2
        else:
            j = i
            while j < m and y[j + 1] == y[j] + 1:
                j += 1
            blocks.append(Block(i, j, KIND_ARITHMETIC, y[i]))
            i = j + 1
    for a, b in zip(blocks, blocks[1:]):
        if not y[a.stop] <= y[b.start] - 2:
            raise InvariantError(f"block gap violated between {a} and {b} in {y!r}")
    decomp = IntervalDecomp(tuple(blocks))
    if decomp.arithmetic_intervals() != frakI(y):
        raise InvariantError(f"block decomposition disagrees with frakI for {y!r}")
    return decomp


# ---------------------------------------------------------------------------
# matched splits S(y)

def member_S(y: Seq, x: Seq, xp: Seq) -> bool:
    """Check membership of (x, xp) in the matched-split set of y.

    Conditions: both parts are XSeqs summing to y; the union of their frakS
    sets is R(y) and the intersection is R0(y); and when frakI(y) has no
    odd-size interval the second part has empty frakS.
    """
    ensure_yseq(y)
    try:
        ensure_xseq(x)
        ensure_xseq(xp)
    except ValidationError:
        return False
    if len(x) != len(y) or len(xp) != len(y):
        return False
    if seq_add(x, xp) != y:
        return False
    sx, sxp = frakS(x), frakS(xp)
    if sx | sxp != R(y) or sx & sxp != R0(y):
        return False
    if not frakI_odd(y) and sxp:
        return False
    return True


def _split_pairs(y: Seq, first_lower: tuple[int, ...] | None = None,
                 first_upper: tuple[int, ...] | None = None) -> Iterator[tuple[Seq, Seq]]:
    """Yield all (x, xp) in XSeq x XSeq with x + xp = y, lexicographically in x.

    Optional entrywise bounds on x allow callers to freeze a prefix.
    Backtracking keeps both partial sequences valid, which prunes hard.
    """
    m = len(y) - 1
    x: list[int] = []

    def rec(i: int) -> Iterator[tuple[Seq, Seq]]:
        if i > m:
            yield tuple(x), tuple(y[t] - x[t] for t in range(m + 1))
            return
        lo = 0
        hi = y[i]
        if i >= 1:
            lo = max(lo, x[i - 1])
            hi = min(hi, x[i - 1] + y[i] - y[i - 1])
        if i >= 2:
            lo = max(lo, x[i - 2] + 1)
            hi = min(hi, x[i - 2] + y[i] - y[i - 2] - 1)
        if first_lower is not None:
            lo = max(lo, first_lower[i])
        if first_upper is not None:
            hi = min(hi, first_upper[i])
        for val in range(lo, hi + 1):
            x.append(val)
            yield from rec(i + 1)
            x.pop()

    yield from rec(0)


def enumerate_S(y: Seq) -> tuple[tuple[Seq, Seq], ...]:
    """All matched splits of y, lexicographically ordered by first part."""
    ensure_yseq(y)
    rset, r0set = R(y), R0(y)
    no_odd = not frakI_odd(y)
    out = []
    for x, xp in _split_pairs(y):
        sx, sxp = frakS(x), frakS(xp)
        if sx | sxp != rset or sx & sxp != r0set:
            continue
        if no_odd and sxp:
            continue
        out.append((x, xp))
    return tuple(out)


def construct_one_S(y: Seq) -> tuple[Seq, Seq]:
    """Build one matched split of y directly from its block decomposition.

    Blockwise: an equal pair (a, a) splits as (u, u) + (u', u') with
    u + u' = a; a step-one run starting at a splits as
    (u, u+1, u+1, u+2, ...) + (u', u', u'+1, u'+1, ...). Taking u = 0 on the
    first block and u = (previous x value) + 1 afterwards always satisfies
    the strictness constraints at block joins.
    """
    ensure_yseq(y)
    decomp = interval_decomp(y)
    x: list[int] = []
    xp: list[int] = []
    for s, blk in enumerate(decomp.blocks):
        u = 0 if s == 0 else x[-1] + 1
        up = blk.base - u
        if s > 0 and up <= xp[-1]:
            raise InvariantError(f"split construction stuck at block {blk} of {y!r}")
        if blk.kind == KIND_SINGLE_PAIR:
            x.extend((u, u))
            xp.extend((up, up))
        else:
            for t in range(blk.size):
                x.append(u + (t + 1) // 2)
                xp.append(up + t // 2)
    pair = (tuple(x), tuple(xp))
    if not member_S(y, *pair):
        raise InvariantError(f"constructed split fails membership for {y!r}: {pair}")
    return pair


# ---------------------------------------------------------------------------
# based matched splits tilde-S(y)

def member_tilde_S(y: Seq, x: Seq, xp: Seq) -> bool:
    """Check membership of (x, xp) in the based matched-split set of y.

    Same shape as member_S but the second part must be a based XSeq, and
    when the odd-size intervals of frakI(y) consist of a single interval
    starting at 0 the second part must have frakS exactly {0}.
    """
    _ensure_tilde_domain(y)
    try:
        ensure_xseq(x)
        ensure_xtseq(xp)
    except ValidationError:
        return False
    if len(x) != len(y) or len(xp) != len(y):
        return False
    if seq_add(x, xp) != y:
        return False
    sx, sxp = frakS(x), frakS(xp)
    if sx | sxp != R(y) or sx & sxp != R0(y):
        return False
    odd = frakI_odd(y)
    if len(odd) == 1 and odd[0][0] == 0 and sxp != frozenset({0}):
        return False
    return True


def _ensure_tilde_domain(y: Seq) -> None:
    ensure_yseq(y)
    m = len(y) - 1
    if m % 2 != 0 or m < 2:
        raise DomainError(f"based splits need m even >= 2, got m={m}")
    if y[1] < 1:
        raise DomainError(f"based splits need y1 >= 1, got {y!r}")
    if y[0] != 0 or y[1] != 1:
        raise DomainError(f"based splits need y0 = 0 and y1 = 1, got {y!r}")


def enumerate_tilde_S(y: Seq) -> tuple[tuple[Seq, Seq], ...]:
    """All based matched splits of y, lexicographically ordered by first part."""
    _ensure_tilde_domain(y)
    m = len(y) - 1
    # xp[0] = 0 and xp[1] >= 1 force x[0] = x[1] = 0.
    upper = tuple([0, 0] + [y[i] for i in range(2, m + 1)])
    rset, r0set = R(y), R0(y)
    odd = frakI_odd(y)
    pin_first = len(odd) == 1 and odd[0][0] == 0
    out = []
    for x, xp in _split_pairs(y, first_upper=upper):
        try:
            ensure_xtseq(xp)
        except ValidationError:
            continue
        sx, sxp = frakS(x), frakS(xp)
        if sx | sxp != rset or sx & sxp != r0set:
            continue
        if pin_first and sxp != frozenset({0}):
            continue
        out.append((x, xp))
    return tuple(out)


# ---------------------------------------------------------------------------
# skeleton decomposition

def hat_decompose(x: Seq) -> tuple[Seq, Seq]:
    """Split an XSeq as skeleton + nondecreasing remainder.

    The skeleton is the unique XSeq determined by frakS(x) alone: paired
    runs fill the even-size gaps between consecutive frakS positions with
    consecutive values, and the frakS positions themselves step once more.
    Returns (skeleton, remainder) with x = skeleton + remainder, the
    remainder nondecreasing and constant on every paired skeleton step.
    """
    ensure_xseq(x)
    m = len(x) - 1
    marks = sorted(frakS(x))
    if not marks:
        hat = base_x(m)
    else:
        out: list[int] = []
        val = 0
        prev = -1
        for idx in marks:
            gap = idx - prev - 1
            if gap % 2 != 0:
                raise InvariantError(f"odd gap before position {idx} in {x!r}")
            for _ in range(gap // 2):
                out.extend((val, val))
                val += 1
            out.append(val)
            val += 1
            prev = idx
        gap = m - prev
        if gap % 2 != 0:
            raise InvariantError(f"odd tail gap in {x!r}")
        for _ in range(gap // 2):
            out.extend((val, val))
            val += 1
        hat = tuple(out)
    ensure_xseq(hat)
    if frakS(hat) != frakS(x):
        raise InvariantError(f"skeleton changed frakS for {x!r}")
    e = seq_sub(x, hat)
    ensure_eseq(e)
    for i in range(m):
        if hat[i] == hat[i + 1] and e[i] != e[i + 1]:
            raise InvariantError(f"remainder not constant on paired step {i} of {x!r}")
    return hat, e


# ---------------------------------------------------------------------------
# strata enumeration

Kind = Literal["Z", "X", "Y", "XT", "YT", "E"]

_KIND_ALIASES = {
    "Z": "Z", "X": "X", "Y": "Y", "E": "E",
    "XT": "XT", "YT": "YT",
    "X̃": "XT", "Ỹ": "YT", "X~": "XT", "Y~": "YT",
    "ℰ": "E",
}


def _space_base(kind: str, m: int) -> Seq:
    if kind == "Z":
        return base_z(m)
    if kind == "X":
        return base_x(m)
    if kind == "Y":
        return base_y(m)
    if kind == "XT":
        return base_xt(m)
    if kind == "YT":
        return base_yt(m)
    return tuple(0 for _ in range(m + 1))


def _space_lower(kind: str, i: int, prev1: int | None, prev2: int | None) -> int:
    """Smallest value allowed at position i given the previous two entries."""
    if kind == "Z":
        return 0 if prev1 is None else prev1 + 1
    if kind == "E":
        return 0 if prev1 is None else prev1
    if kind in ("X", "XT"):
        lo = 0 if prev1 is None else prev1
        if prev2 is not None:
            lo = max(lo, prev2 + 1)
        if kind == "XT" and i == 1:
            lo = max(lo, 1)
        return lo
    if kind in ("Y", "YT"):
        lo = 0 if prev1 is None else prev1
        if prev2 is not None:
            lo = max(lo, prev2 + 2)
        if kind == "YT" and i == 1:
            lo = max(lo, 1)
        return lo
    raise DomainError(f"unknown sequence kind {kind!r}")


def _tail_min_dev(kind: str, base: Seq, i: int, prev1: int, prev2: int | None) -> int:
    """Minimal total deviation contributed by positions after i."""
    m = len(base) - 1
    total = 0
    a, b = prev2, prev1
    for j in range(i + 1, m + 1):
        v = _space_lower(kind, j, b, a)
        total += v - base[j]
        a, b = b, v
    return total


def enumerate_space(kind: str, m: int, n: int) -> tuple[Seq, ...]:
    """All sequences of the given kind and length index m with statistic n.

    The statistic is the deviation sum against the space's base sequence
    (plain entry sum for kind E). Output is lexicographically sorted and
    duplicate-free. m or n above the size cap raises ResourceError.
    """
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in ("Z", "X", "Y", "XT", "YT", "E"):
        raise DomainError(f"unknown sequence kind {kind!r}")
    if m < 0 or n < 0:
        raise DomainError(f"m and n must be nonnegative, got m={m} n={n}")
    if m > SIZE_CAP or n > SIZE_CAP:
        raise ResourceError(f"enumeration capped at {SIZE_CAP}, got m={m} n={n}")
    if kind in ("XT", "YT") and (m % 2 != 0 or m < 2):
        raise DomainError(f"kind {kind} needs m even >= 2, got {m}")
    base = _space_base(kind, m)
    out: list[Seq] = []
    seq: list[int] = []

    def rec(i: int, used: int) -> None:
        if i > m:
            if used == n:
                out.append(tuple(seq))
            return
        prev1 = seq[i - 1] if i >= 1 else None
        prev2 = seq[i - 2] if i >= 2 else None
        val = _space_lower(kind, i, prev1, prev2)
        while True:
            if kind == "XT" and i == 0 and val > 0:
                break
            dev = val - base[i]
            if used + dev > n:
                break
            if used + dev + _tail_min_dev(kind, base, i, val, prev1) <= n:
                seq.append(val)
                rec(i + 1, used + dev)
                seq.pop()
            val += 1

    rec(0, 0)
    return tuple(out)


# ---------------------------------------------------------------------------
# symmetric decompositions

def symmetric_decompositions(y: Seq) -> tuple[tuple[Seq, Seq], ...]:
    """All (x, e) with y = x + e + x, (x, e+x) a matched split of y, and
    frakS(e + x) = frakS(x). Nonempty exactly when every frakI(y) interval
    has size one.
    """
    ensure_yseq(y)
    m = len(y) - 1
    out = []
    x: list[int] = []

    def rec(i: int) -> None:
        if i > m:
            xt = tuple(x)
            e = tuple(y[t] - 2 * x[t] for t in range(m + 1))
            ex = seq_add(e, xt)
            if member_S(y, xt, ex) and frakS(ex) == frakS(xt):
                out.append((xt, e))
            return
        lo = 0
        hi = y[i] // 2
        if i >= 1:
            lo = max(lo, x[i - 1])
            # e nondecreasing: y[i] - 2x[i] >= y[i-1] - 2x[i-1]
            hi = min(hi, x[i - 1] + (y[i] - y[i - 1]) // 2)
        if i >= 2:
            lo = max(lo, x[i - 2] + 1)
        for val in range(lo, hi + 1):
            x.append(val)
            rec(i + 1)
            x.pop()

    rec(0)
    return tuple(out)
