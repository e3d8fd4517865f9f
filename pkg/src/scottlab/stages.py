"""Finite stages, embedding/projection pairs, and limit paths.

Stage n is the chain of n monotone words: the strings with n-1 letters,
k ones preceded by zeros, ordered by pointwise 0 <= 1.  Two ways of
linking consecutive stages are provided:

  STANDARD     embeds around a middle threshold t = (n-1)//2: labels up
               to t keep their index, the rest shift up by one, and the
               projection collapses the two labels adjacent to the
               threshold.
  ALTERNATIVE  embeds by keeping the index (prepend a zero) and projects
               by truncating the top.

A limit path is a label per stage consistent under projection.  Paths
are classified by where they sit against the scheme's growth diagonal
at the final stage: strictly below means the labels went constant,
strictly above means the path tracks "top minus n", and riding the
diagonal is the alternating growth pattern.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import BadDepth
from .words import OMEGA, OMEGA_STAR, OrderWord, fin, word_of


@dataclass(frozen=True)
class Stage:
    n: int
    elements: tuple[str, ...]


def stage(n: int) -> Stage:
    if n < 1:
        raise BadDepth(f"stage must be >= 1, got {n}")
    return Stage(n, tuple("0" * (n - 1 - k) + "1" * k for k in range(n)))


def enumerate_monotone(m: int) -> tuple[str, ...]:
    """All monotone maps from an m-chain into the two-point chain.

    Brute force over all 2^m assignments; serves as the oracle that the
    direct stage construction must match.
    """
    if m < 1:
        raise BadDepth(f"chain length must be >= 1, got {m}")
    out = []
    for bits in itertools.product("01", repeat=m):
        if all(a <= b for a, b in zip(bits, bits[1:])):
            out.append("".join(bits))
    return tuple(sorted(out))


class Scheme(Enum):
    STANDARD = "standard"
    ALTERNATIVE = "alternative"


@dataclass(frozen=True)
class LabelMap:
    from_stage: int
    to_stage: int
    mapping: tuple[int, ...]

    def __call__(self, k: int) -> int:
        return self.mapping[k]


@dataclass(frozen=True)
class EpPair:
    scheme: Scheme
    n: int
    e: LabelMap  # stage n -> stage n+1
    p: LabelMap  # stage n+1 -> stage n


def ep_pair(scheme: Scheme, n: int) -> EpPair:
    if n < 1:
        raise BadDepth(f"stage must be >= 1, got {n}")
    if scheme is Scheme.STANDARD:
        t = (n - 1) // 2
        e = tuple(k if k <= t else k + 1 for k in range(n))
        p = tuple(k if k <= t else k - 1 for k in range(n + 1))
    else:
        e = tuple(range(n))
        p = tuple(min(k, n - 1) for k in range(n + 1))
    return EpPair(scheme, n, LabelMap(n, n + 1, e), LabelMap(n + 1, n, p))


@dataclass(frozen=True)
class EpLawReport:
    pair: EpPair
    p_after_e_is_id: bool
    e_after_p_below_id: bool
    e_monotone: bool
    p_monotone: bool
    witness: str | None  # first failing label, described

    @property
    def ok(self) -> bool:
        return (self.p_after_e_is_id and self.e_after_p_below_id
                and self.e_monotone and self.p_monotone)


def check_ep_laws(pair: EpPair) -> EpLawReport:
    """Check the section/retraction laws on an explicit pair of maps."""
    n = pair.n
    witness = None
    p_after_e = all(pair.p(pair.e(k)) == k for k in range(n))
    if not p_after_e:
        k = next(k for k in range(n) if pair.p(pair.e(k)) != k)
        witness = f"p(e({k})) = {pair.p(pair.e(k))}"
    e_after_p = all(pair.e(pair.p(k)) <= k for k in range(n + 1))
    if e_after_p is False and witness is None:
        k = next(k for k in range(n + 1) if pair.e(pair.p(k)) > k)
        witness = f"e(p({k})) = {pair.e(pair.p(k))}"
    e_mono = all(pair.e(k) <= pair.e(k + 1) for k in range(n - 1))
    p_mono = all(pair.p(k) <= pair.p(k + 1) for k in range(n))
    return EpLawReport(pair, p_after_e, e_after_p, e_mono, p_mono, witness)


def verify_ep(scheme: Scheme, n: int) -> EpLawReport:
    return check_ep_laws(ep_pair(scheme, n))


class PathClass(Enum):
    FINITE = "finite"
    INFINITY = "infinity"
    PRIMED = "primed"


@dataclass(frozen=True)
class LimitPath:
    entries: tuple[int, ...]  # label at stage 1, 2, ..., depth
    kind: PathClass
    index: int | None  # the n of a finite or primed path

    @property
    def label(self) -> str:
        if self.kind is PathClass.INFINITY:
            return "inf"
        return f"{self.index}'" if self.kind is PathClass.PRIMED else str(self.index)


def _classify(scheme: Scheme, entries: tuple[int, ...]) -> tuple[PathClass, int | None]:
    depth = len(entries)
    last = entries[-1]
    diagonal = (depth - 1) // 2 if scheme is Scheme.STANDARD else depth - 1
    if last == diagonal:
        return PathClass.INFINITY, None
    if last < diagonal:
        return PathClass.FINITE, last
    return PathClass.PRIMED, depth - 1 - last


def limit_paths(scheme: Scheme, depth: int) -> tuple[LimitPath, ...]:
    """Every projection-consistent label path through stages 1..depth."""
    if depth < 2:
        raise BadDepth(f"depth must be >= 2, got {depth}")
    pairs = [ep_pair(scheme, n) for n in range(1, depth)]
    paths: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...]) -> None:
        n = len(prefix)
        if n == depth:
            paths.append(prefix)
            return
        p = pairs[n - 1].p
        for j in range(n + 1):
            if p(j) == prefix[-1]:
                grow(prefix + (j,))

    grow((0,))
    paths.sort()
    return tuple(LimitPath(e, *_classify(scheme, e)) for e in paths)


def limit_cpo(scheme: Scheme, depth: int = 12) -> OrderWord:
    """Order type of the limit, read off the path families present."""
    kinds = {p.kind for p in limit_paths(scheme, depth)}
    atoms = [OMEGA]
    if PathClass.INFINITY in kinds:
        atoms.append(fin(1))
    if PathClass.PRIMED in kinds:
        atoms.append(OMEGA_STAR)
    return word_of(*atoms)


def _gvquote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def diagram_dot(scheme: Scheme, depth: int) -> str:
    """Stage diagram in dot form: columns of stages, e/p arrows between.

    A label fixed by both maps gets a single two-headed edge; a shifted
    embedding or collapsing projection gets its own labelled arrow.
    """
    if depth < 2:
        raise BadDepth(f"depth must be >= 2, got {depth}")
    lines = [f"digraph stages_{scheme.value} {{", "  rankdir=LR;", "  node [shape=plaintext];"]

    def node(n: int, k: int) -> str:
        text = stage(n).elements[k] or "λ"
        return _gvquote(f"s{n}_{text}")

    for n in range(1, depth + 1):
        members = " ".join(node(n, k) for k in range(n))
        lines.append(f"  {{ rank=same; {members} }}")
    for n in range(1, depth):
        pair = ep_pair(scheme, n)
        for j in range(n + 1):
            k = pair.p(j)
            if pair.e(k) == j:
                if k == j:
                    lines.append(f"  {node(n, k)} -> {node(n + 1, j)} [dir=both];")
                else:
                    lines.append(f"  {node(n, k)} -> {node(n + 1, j)} [label=\"e\"];")
                    lines.append(f"  {node(n + 1, j)} -> {node(n, k)} [label=\"p\"];")
            else:
                lines.append(f"  {node(n + 1, j)} -> {node(n, k)} [label=\"p\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
