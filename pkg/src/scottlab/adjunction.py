"""Dual halves, the adjunction conditions, and boundary elements.

The four composite orders each split into a lower and an upper half
exchanged by the dual map opp.  A pairing of halves (A, B) satisfies
the adjunction when

  (1) opp sends A into B,
  (2) opp sends B into A,
  (3) for x in A and y in B:  x <= opp(y)  iff  opp(x) >= y,

all checked on finite windows that include the infinite-count extreme
strings.  The checks run in the ambient composite order, so a failure
of (1) or (2) does not prevent (3) from being evaluated.

The two pair-built orders carry a boundary element where the halves
meet: m = (000..., ...111) is its own dual and has no immediate
neighbors, while m' = (...000, 111...) is its own dual with immediate
neighbors on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import strings as st
from .catalog import CpoName, NamedCpo, named_cpo
from .errors import UnknownCpo
from .words import Elem, extremes, neighbors

BOUNDARY_M = st.PairString(st.ALL_ZEROS_L, st.ALL_ONES_R)
BOUNDARY_M_PRIME = st.PairString(st.ALL_ZEROS_R, st.ALL_ONES_L)


def opp_element(x):
    """Dual of a string or pair element."""
    if isinstance(x, st.PairString):
        return st.opp_pair(x)
    return st.opp(x)


def global_string_rank(x: st.MonotypicString):
    """Position in the widest composite order of all four families."""
    c = st.classify(x)
    if c.family is st.SpecKind.III:
        return (0, c.index)
    if c.family is st.SpecKind.IV:
        return (1, 0)
    if c.family is st.SpecKind.I:
        return (2, 0)
    return (3, -c.index)


@dataclass(frozen=True)
class Half:
    """One half of a composite order, enumerable on windows."""

    name: str
    contains: Callable[[object], bool]
    window: Callable[[int], list]   # ascending, including extreme strings
    rank: Callable[[object], tuple]


def _omega_half() -> Half:
    def contains(x) -> bool:
        return isinstance(x, st.MonotypicString) and st.classify(x).family is st.SpecKind.III

    return Half(
        "omega",
        contains,
        lambda n: [st.MonotypicString(st.Orientation.R, st.OMEGA_MANY, v) for v in range(n + 1)],
        global_string_rank,
    )


def _omega_opp_half() -> Half:
    def contains(x) -> bool:
        return isinstance(x, st.MonotypicString) and st.classify(x).family is st.SpecKind.II

    return Half(
        "omega_opp",
        contains,
        lambda n: [st.MonotypicString(st.Orientation.L, u, st.OMEGA_MANY) for u in range(n, -1, -1)],
        global_string_rank,
    )


def _omega_prime_half() -> Half:
    def contains(x) -> bool:
        if not isinstance(x, st.MonotypicString):
            return False
        return st.classify(x).family in (st.SpecKind.III, st.SpecKind.IV)

    def window(n: int) -> list:
        return _omega_half().window(n) + [st.ALL_ONES_R]

    return Half("omega_prime", contains, window, global_string_rank)


def _omega_prime_opp_half() -> Half:
    def contains(x) -> bool:
        if not isinstance(x, st.MonotypicString):
            return False
        return st.classify(x).family in (st.SpecKind.I, st.SpecKind.II)

    def window(n: int) -> list:
        return [st.ALL_ZEROS_L] + _omega_opp_half().window(n)

    return Half("omega_prime_opp", contains, window, global_string_rank)


def _paired(name: str, fixed_left: st.MonotypicString | None,
            fixed_right: st.MonotypicString | None, varying: Half) -> Half:
    """Half of a pair order: one component pinned, the other ranging."""

    def contains(x) -> bool:
        if not isinstance(x, st.PairString):
            return False
        if fixed_left is not None:
            return x.left == fixed_left and varying.contains(x.right)
        return x.right == fixed_right and varying.contains(x.left)

    def window(n: int) -> list:
        if fixed_left is not None:
            return [st.PairString(fixed_left, y) for y in varying.window(n)]
        return [st.PairString(x, fixed_right) for x in varying.window(n)]

    def rank(x) -> tuple:
        return varying.rank(x.right if fixed_left is not None else x.left)

    return Half(name, contains, window, rank)


OMEGA_HALF = _omega_half()
OMEGA_OPP_HALF = _omega_opp_half()
OMEGA_PRIME_HALF = _omega_prime_half()
OMEGA_PRIME_OPP_HALF = _omega_prime_opp_half()
OMEGA_HAT_PRIME_HALF = _paired("omega_hat_prime", st.ALL_ZEROS_L, None, OMEGA_PRIME_HALF)
OMEGA_HAT_PRIME_OPP_HALF = _paired("omega_hat_prime_opp", None, st.ALL_ONES_R, OMEGA_PRIME_OPP_HALF)
XI_HALF = _paired("xi", st.ALL_ZEROS_R, None, OMEGA_PRIME_OPP_HALF)
XI_OPP_HALF = _paired("xi_opp", None, st.ALL_ONES_L, OMEGA_PRIME_HALF)

# Canonical pairing of halves for each composite order.
PAIRINGS: dict[CpoName, tuple[Half, Half]] = {
    CpoName.LAMBDA: (OMEGA_PRIME_HALF, OMEGA_OPP_HALF),
    CpoName.LAMBDA_PRIME: (OMEGA_PRIME_HALF, OMEGA_PRIME_OPP_HALF),
    CpoName.LAMBDA_HAT_PRIME: (OMEGA_HAT_PRIME_HALF, OMEGA_HAT_PRIME_OPP_HALF),
    CpoName.V: (XI_HALF, XI_OPP_HALF),
}


@dataclass(frozen=True)
class PairCpo:
    name: CpoName
    lower: Half
    upper: Half
    boundary: st.PairString
    cpo: NamedCpo
    glue: str


def build_pair_cpo(name: str | CpoName) -> PairCpo:
    cpo = named_cpo(name)
    if cpo.name is CpoName.LAMBDA_HAT_PRIME:
        return PairCpo(cpo.name, OMEGA_HAT_PRIME_HALF, OMEGA_HAT_PRIME_OPP_HALF,
                       BOUNDARY_M, cpo, "top of the lower half equals bottom of the upper half")
    if cpo.name is CpoName.V:
        return PairCpo(cpo.name, XI_HALF, XI_OPP_HALF,
                       BOUNDARY_M_PRIME, cpo, "top of the lower half equals bottom of the upper half")
    raise UnknownCpo(f"{cpo.name.value} is not built from two glued halves")


def _ambient_le(which: CpoName, a, b) -> bool:
    lower, upper = PAIRINGS[which]
    if isinstance(a, st.PairString):
        def pos(p):
            if lower.contains(p):
                return (0, lower.rank(p))
            if upper.contains(p):
                return (1, upper.rank(p))
            raise ValueError(f"{p} outside the ambient order")
        return pos(a) <= pos(b)
    return global_string_rank(a) <= global_string_rank(b)


@dataclass(frozen=True)
class ConditionReport:
    index: int
    passed: bool
    witness: str | None


@dataclass(frozen=True)
class AdjunctionReport:
    which: CpoName
    lower: str
    upper: str
    window: int
    conditions: tuple[ConditionReport, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)


def check_adjunction(which: str | CpoName, window: int = 20) -> AdjunctionReport:
    """Run the three adjunction conditions for the order's half pairing."""
    cpo = named_cpo(which)
    if cpo.name not in PAIRINGS:
        raise UnknownCpo(f"no half pairing attached to {cpo.name.value}")
    a_half, b_half = PAIRINGS[cpo.name]
    xs = a_half.window(window)
    ys = b_half.window(window)

    c1 = next((x for x in xs if not b_half.contains(opp_element(x))), None)
    c2 = next((y for y in ys if not a_half.contains(opp_element(y))), None)
    c3 = None
    for x in xs:
        for y in ys:
            lhs = _ambient_le(cpo.name, x, opp_element(y))
            rhs = _ambient_le(cpo.name, y, opp_element(x))
            if lhs != rhs:
                c3 = f"{x}, {y}"
                break
        if c3:
            break
    conds = (
        ConditionReport(1, c1 is None, str(c1) if c1 is not None else None),
        ConditionReport(2, c2 is None, str(c2) if c2 is not None else None),
        ConditionReport(3, c3 is None, c3),
    )
    return AdjunctionReport(cpo.name, a_half.name, b_half.name, window, conds)


@dataclass(frozen=True)
class BoundaryReport:
    which: CpoName
    boundary: st.PairString
    boundary_label: str
    self_dual: bool
    predecessor: str | None
    successor: str | None
    in_lower: bool
    in_upper: bool
    join_of_lower: bool   # boundary is the top of the lower half
    meet_of_upper: bool   # and the bottom of the upper half
    window: int


def boundary_report(which: str | CpoName, window: int = 20) -> BoundaryReport:
    pc = build_pair_cpo(which)
    cpo = pc.cpo
    b = pc.boundary
    belem = cpo.to_elem(str(b))
    pred, succ = neighbors(cpo.word, belem)
    lower_win = pc.lower.window(window)
    upper_win = pc.upper.window(window)
    join = (lower_win[-1] == b
            and all(pc.lower.rank(x) <= pc.lower.rank(b) for x in lower_win))
    meet = (upper_win[0] == b
            and all(pc.upper.rank(b) <= pc.upper.rank(y) for y in upper_win))
    return BoundaryReport(
        pc.name,
        b,
        cpo.to_label(belem),
        opp_element(b) == b,
        cpo.to_label(pred) if pred is not None else None,
        cpo.to_label(succ) if succ is not None else None,
        pc.lower.contains(b),
        pc.upper.contains(b),
        join,
        meet,
        window,
    )
