"""Catalogue of the named countable orders and their element labels.

Each entry carries the normalized word used for computation, the word
in its conventional display shape, and a labeler translating between
element coordinates and the labels used in output: numerals, primed
numerals, "inf", "m", signed forms, string literals such as "...0011",
and pair literals such as "(000..., ...111)".  Labelers accept every
alias that unambiguously names an element; they render one canonical
label per element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from . import strings as st
from .errors import BadElement, UnknownCpo
from .words import OMEGA, OMEGA_STAR, AtomKind, Elem, OrderWord, fin, normalize, word_of


class CpoName(Enum):
    TWO = "two"
    PHI = "phi"
    THETA = "theta"
    OMEGA_SET = "omega"
    OMEGA_OPP = "omega_opp"
    OMEGA_PRIME = "omega_prime"
    OMEGA_PRIME_OPP = "omega_prime_opp"
    LAMBDA = "lambda"
    LAMBDA_PRIME = "lambda_prime"
    LAMBDA_HAT_PRIME = "lambda_hat_prime"
    XI = "xi"
    XI_OPP = "xi_opp"
    V = "v"


_NAT = re.compile(r"^\d+$")
_PRIMED = re.compile(r"^(\d+)'$")
_POS = re.compile(r"^\+(\d+)$")
_NEG = re.compile(r"^-(\d+)$")


def canonical_label_text(label: str) -> str:
    """Fold unicode variants into the ASCII forms labelers understand."""
    t = label.strip()
    for a, b in (("⋯", "..."), ("…", "..."), ("′", "'"),
                 ("∞", "inf"), ("ω", "w")):
        t = t.replace(a, b)
    return t


@dataclass(frozen=True)
class Labeler:
    """Coordinate/label translation for one named order.

    consts: exact label -> element, tried first when parsing.
    nat/pos/neg/primed: (block, start offset) for the numeral layers.
    strings: parsed monotypic literal -> element, None if foreign.
    pairs: parsed pair literal -> element, None if foreign.
    render: element -> canonical label.
    """

    consts: dict[str, Elem] = field(default_factory=dict)
    nat: tuple[int, int] | None = None
    primed: tuple[int, int] | None = None
    pos: tuple[int, int] | None = None
    neg: tuple[int, int] | None = None
    strings: Callable[[st.MonotypicString], Elem | None] | None = None
    pairs: Callable[[st.PairString], Elem | None] | None = None
    render: Callable[[Elem], str] = str

    def to_elem(self, label: str) -> Elem:
        t = canonical_label_text(label)
        if t in self.consts:
            return self.consts[t]
        m = _NAT.match(t)
        if m and self.nat is not None:
            block, start = self.nat
            if int(t) >= start:
                return Elem(block, int(t))
        if m and self.pos is not None:
            block, start = self.pos
            if int(t) >= start:
                return Elem(block, int(t))
        m = _PRIMED.match(t)
        if m and self.primed is not None:
            block, start = self.primed
            if int(m.group(1)) >= start:
                return Elem(block, int(m.group(1)))
        m = _POS.match(t)
        if m and self.pos is not None:
            block, start = self.pos
            if int(m.group(1)) >= start:
                return Elem(block, int(m.group(1)))
        m = _NEG.match(t)
        if m and self.neg is not None:
            block, start = self.neg
            n = int(m.group(1))
            if n >= 1:
                return Elem(block, n - 1 + start)
        if t.startswith("(") and self.pairs is not None:
            got = self.pairs(st.parse_pair_literal(t))
            if got is not None:
                return got
        if "..." in t and self.strings is not None:
            got = self.strings(st.parse_literal(t))
            if got is not None:
                return got
        raise BadElement(f"no element labelled {label!r} here")

    def to_label(self, x: Elem) -> str:
        return self.render(x)


@dataclass(frozen=True)
class NamedCpo:
    name: CpoName
    word: OrderWord          # normalized
    display_word: OrderWord  # conventional shape, same order up to iso
    labeler: Labeler

    def to_elem(self, label: str) -> Elem:
        return self.labeler.to_elem(label)

    def to_label(self, x: Elem) -> str:
        return self.labeler.to_label(x)


def _string_label(s: st.MonotypicString) -> str:
    return st.render_literal(s)


# -- string layer helpers -------------------------------------------------
#
# The string-populated orders are assembled from four layers:
#   R-strings ...0 1^v   ascending with v        (an omega layer)
#   ...111               a single top of that layer
#   000...               a single bottom of the dual layer
#   L-strings 0^u 11...  descending with u       (an omega* layer)


def _phi_like(name: CpoName, primed: bool) -> NamedCpo:
    atoms = [OMEGA, fin(1)] + ([OMEGA_STAR] if primed else [])
    w = word_of(*atoms)
    consts = {"inf": Elem(1, 0)}
    lab = Labeler(
        consts=consts,
        nat=(0, 0),
        primed=(2, 0) if primed else None,
        render=(lambda x: "inf" if x.block == 1 else (f"{x.offset}'" if x.block == 2 else str(x.offset))),
    )
    return NamedCpo(name, normalize(w), w, lab)


def _omega_set() -> NamedCpo:
    w = word_of(OMEGA)

    def from_string(s: st.MonotypicString) -> Elem | None:
        c = st.classify(s)
        if c.family is st.SpecKind.III:
            return Elem(0, c.index - 1)
        return None

    lab = Labeler(
        nat=(0, 0),
        strings=from_string,
        render=(lambda x: _string_label(st.MonotypicString(st.Orientation.R, st.OMEGA_MANY, x.offset))),
    )
    return NamedCpo(CpoName.OMEGA_SET, w, w, lab)


def _omega_opp() -> NamedCpo:
    w = word_of(OMEGA_STAR)

    def from_string(s: st.MonotypicString) -> Elem | None:
        c = st.classify(s)
        if c.family is st.SpecKind.II:
            return Elem(0, c.index - 1)
        return None

    lab = Labeler(
        primed=(0, 0),
        strings=from_string,
        render=(lambda x: _string_label(st.MonotypicString(st.Orientation.L, x.offset, st.OMEGA_MANY))),
    )
    return NamedCpo(CpoName.OMEGA_OPP, w, w, lab)


def _omega_prime() -> NamedCpo:
    w = word_of(OMEGA, fin(1))

    def from_string(s: st.MonotypicString) -> Elem | None:
        c = st.classify(s)
        if c.family is st.SpecKind.III:
            return Elem(0, c.index - 1)
        if c.family is st.SpecKind.IV:
            return Elem(1, 0)
        return None

    lab = Labeler(
        consts={"inf": Elem(1, 0)},
        nat=(0, 0),
        strings=from_string,
        render=(lambda x: "...111" if x.block == 1
                    else _string_label(st.MonotypicString(st.Orientation.R, st.OMEGA_MANY, x.offset))),
    )
    return NamedCpo(CpoName.OMEGA_PRIME, w, w, lab)


def _omega_prime_opp() -> NamedCpo:
    w = word_of(fin(1), OMEGA_STAR)

    def from_string(s: st.MonotypicString) -> Elem | None:
        c = st.classify(s)
        if c.family is st.SpecKind.I:
            return Elem(0, 0)
        if c.family is st.SpecKind.II:
            return Elem(1, c.index - 1)
        return None

    lab = Labeler(
        consts={"inf'": Elem(0, 0)},
        primed=(1, 0),
        strings=from_string,
        render=(lambda x: "000..." if x.block == 0
                    else _string_label(st.MonotypicString(st.Orientation.L, x.offset, st.OMEGA_MANY))),
    )
    return NamedCpo(CpoName.OMEGA_PRIME_OPP, w, w, lab)


def _lambda() -> NamedCpo:
    w = word_of(OMEGA, fin(1), OMEGA_STAR)

    def from_string(s: st.MonotypicString) -> Elem | None:
        c = st.classify(s)
        if c.family is st.SpecKind.III:
            return Elem(0, c.index - 1)
        if c.family is st.SpecKind.IV:
            return Elem(1, 0)
        if c.family is st.SpecKind.II:
            return Elem(2, c.index - 1)
        return None  # 000... does not occur here

    lab = Labeler(
        consts={"inf": Elem(1, 0)},
        nat=(0, 0),
        primed=(2, 0),
        strings=from_string,
        render=(lambda x: "inf" if x.block == 1 else (f"{x.offset}'" if x.block == 2 else str(x.offset))),
    )
    return NamedCpo(CpoName.LAMBDA, w, w, lab)


def _lambda_prime() -> NamedCpo:
    display = word_of(OMEGA, fin(1), fin(1), OMEGA_STAR)
    w = normalize(display)  # omega + 2 + omega*

    def from_string(s: st.MonotypicString) -> Elem | None:
        c = st.classify(s)
        if c.family is st.SpecKind.III:
            return Elem(0, c.index - 1)
        if c.family is st.SpecKind.IV:
            return Elem(1, 0)
        if c.family is st.SpecKind.I:
            return Elem(1, 1)
        return Elem(2, c.index - 1)

    def render(x: Elem) -> str:
        if x.block == 1:
            return "inf" if x.offset == 0 else "inf'"
        return f"{x.offset}'" if x.block == 2 else str(x.offset)

    lab = Labeler(
        consts={"inf": Elem(1, 0), "inf'": Elem(1, 1)},
        nat=(0, 0),
        primed=(2, 0),
        strings=from_string,
        render=render,
    )
    return NamedCpo(CpoName.LAMBDA_PRIME, w, display, lab)


def _lambda_hat_prime() -> NamedCpo:
    w = word_of(OMEGA, fin(1), OMEGA_STAR)

    def from_pair(p: st.PairString) -> Elem | None:
        if p.left == st.ALL_ZEROS_L:
            c = st.classify(p.right)
            if c.family is st.SpecKind.III:
                return Elem(0, c.index - 1)
            if c.family is st.SpecKind.IV:
                return Elem(1, 0)
        if p.right == st.ALL_ONES_R:
            c = st.classify(p.left)
            if c.family is st.SpecKind.II:
                return Elem(2, c.index - 1)
            if c.family is st.SpecKind.I:
                return Elem(1, 0)
        return None

    def render(x: Elem) -> str:
        if x.block == 1:
            return "m"
        if x.block == 0:
            inner = st.MonotypicString(st.Orientation.R, st.OMEGA_MANY, x.offset)
            return f"(000..., {_string_label(inner)})"
        inner = st.MonotypicString(st.Orientation.L, x.offset, st.OMEGA_MANY)
        return f"({_string_label(inner)}, ...111)"

    lab = Labeler(
        consts={"m": Elem(1, 0)},
        nat=(0, 0),
        primed=(2, 0),
        pairs=from_pair,
        render=render,
    )
    return NamedCpo(CpoName.LAMBDA_HAT_PRIME, w, w, lab)


def _xi() -> NamedCpo:
    w = word_of(fin(1), OMEGA_STAR)

    def from_pair(p: st.PairString) -> Elem | None:
        if p.left == st.ALL_ZEROS_R:
            c = st.classify(p.right)
            if c.family is st.SpecKind.I:
                return Elem(0, 0)
            if c.family is st.SpecKind.II:
                return Elem(1, c.index - 1)
        return None

    def render(x: Elem) -> str:
        if x.block == 0:
            return "-inf"
        return "m'" if x.offset == 0 else f"-{x.offset}"

    lab = Labeler(
        consts={"-inf": Elem(0, 0), "m'": Elem(1, 0), "0": Elem(1, 0)},
        neg=(1, 1),
        pairs=from_pair,
        render=render,
    )
    return NamedCpo(CpoName.XI, w, w, lab)


def _xi_opp() -> NamedCpo:
    w = word_of(OMEGA, fin(1))

    def from_pair(p: st.PairString) -> Elem | None:
        if p.right == st.ALL_ONES_L:
            c = st.classify(p.left)
            if c.family is st.SpecKind.III:
                return Elem(0, c.index - 1)
            if c.family is st.SpecKind.IV:
                return Elem(1, 0)
        return None

    def render(x: Elem) -> str:
        if x.block == 1:
            return "+inf"
        return "m'" if x.offset == 0 else f"+{x.offset}"

    lab = Labeler(
        consts={"m'": Elem(0, 0), "0": Elem(0, 0), "+inf": Elem(1, 0)},
        pos=(0, 1),
        pairs=from_pair,
        render=render,
    )
    return NamedCpo(CpoName.XI_OPP, w, w, lab)


def _v() -> NamedCpo:
    w = word_of(fin(1), OMEGA_STAR, OMEGA, fin(1))

    def from_pair(p: st.PairString) -> Elem | None:
        if p.left == st.ALL_ZEROS_R:
            c = st.classify(p.right)
            if c.family is st.SpecKind.I:
                return Elem(0, 0)
            if c.family is st.SpecKind.II:
                return Elem(2, 0) if c.index == 1 else Elem(1, c.index - 2)
        if p.right == st.ALL_ONES_L:
            c = st.classify(p.left)
            if c.family is st.SpecKind.III:
                return Elem(2, c.index - 1)
            if c.family is st.SpecKind.IV:
                return Elem(3, 0)
        return None

    def render(x: Elem) -> str:
        if x.block == 0:
            return "-inf"
        if x.block == 1:
            return f"-{x.offset + 1}"
        if x.block == 3:
            return "+inf"
        return "m'" if x.offset == 0 else f"+{x.offset}"

    lab = Labeler(
        consts={"-inf": Elem(0, 0), "m'": Elem(2, 0), "0": Elem(2, 0), "+inf": Elem(3, 0)},
        pos=(2, 1),
        neg=(1, 0),
        pairs=from_pair,
        render=render,
    )
    return NamedCpo(CpoName.V, w, w, lab)


def _two() -> NamedCpo:
    w = word_of(fin(2))
    lab = Labeler(nat=(0, 0), render=(lambda x: str(x.offset)))
    return NamedCpo(CpoName.TWO, w, w, lab)


_CATALOG: dict[CpoName, NamedCpo] = {}
for _c in (
    _two(),
    _phi_like(CpoName.PHI, primed=True),
    _phi_like(CpoName.THETA, primed=False),
    _omega_set(),
    _omega_opp(),
    _omega_prime(),
    _omega_prime_opp(),
    _lambda(),
    _lambda_prime(),
    _lambda_hat_prime(),
    _xi(),
    _xi_opp(),
    _v(),
):
    _CATALOG[_c.name] = _c

_ALIASES = {"omega_set": CpoName.OMEGA_SET, "lam": CpoName.LAMBDA}


def named_cpo(name: str | CpoName) -> NamedCpo:
    if isinstance(name, CpoName):
        return _CATALOG[name]
    key = name.strip().lower()
    if key in _ALIASES:
        return _CATALOG[_ALIASES[key]]
    for cn in CpoName:
        if cn.value == key:
            return _CATALOG[cn]
    raise UnknownCpo(f"no catalogued order named {name!r}")


def all_names() -> list[str]:
    return [cn.value for cn in CpoName]


def chain_display(cpo: NamedCpo, depth: int) -> str:
    """Ascending window rendered as a chain with ellipses inside infinite blocks."""
    parts: list[str] = []
    for j, atom in enumerate(cpo.word.atoms):
        if atom.kind is AtomKind.FIN:
            parts.extend(cpo.to_label(Elem(j, o)) for o in range(atom.size))
        elif atom.kind is AtomKind.OMEGA:
            parts.extend(cpo.to_label(Elem(j, o)) for o in range(depth + 1))
            parts.append("...")
        else:
            parts.append("...")
            parts.extend(cpo.to_label(Elem(j, o)) for o in range(depth, -1, -1))
    return " \u2286 ".join(parts)
