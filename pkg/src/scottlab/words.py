"""Order-type words: countable linear orders written as finite sums.

A word is a nonempty sequence of atoms, each atom one of

  * a finite chain of size k >= 1,
  * an ascending copy of the naturals (omega),
  * a descending copy of the naturals (omega*, every element has
    infinitely many elements below it within the block).

Concatenation is ordered sum: every element of an earlier block sits
below every element of a later block.  Elements are addressed by
(block, offset); offsets in a finite or omega block count up from the
block's least element, offsets in an omega* block count down from the
block's greatest element.

Words admit a confluent rewrite system

    k + j  -> (k + j)      (adjacent finite chains merge)
    k + omega -> omega     (a finite prefix of omega is absorbed)
    omega* + k -> omega*   (a finite suffix of omega* is absorbed)

whose normal forms classify these orders up to isomorphism.  iso()
additionally compares an invariant signature read off the order itself
(extremes and seam adjacency), so a rewrite bug cannot silently
misreport a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BadElement, BadLiteral


class AtomKind(Enum):
    FIN = "fin"
    OMEGA = "omega"
    OMEGA_STAR = "omega_star"


@dataclass(frozen=True)
class OrderAtom:
    kind: AtomKind
    size: int = 0  # meaningful only for FIN, where it must be >= 1

    def __post_init__(self) -> None:
        if self.kind is AtomKind.FIN:
            if self.size < 1:
                raise ValueError("finite atom needs size >= 1")
        elif self.size != 0:
            raise ValueError("only finite atoms carry a size")

    def __str__(self) -> str:
        if self.kind is AtomKind.FIN:
            return str(self.size)
        return "ω" if self.kind is AtomKind.OMEGA else "ω*"


def fin(size: int) -> OrderAtom:
    return OrderAtom(AtomKind.FIN, size)


OMEGA = OrderAtom(AtomKind.OMEGA)
OMEGA_STAR = OrderAtom(AtomKind.OMEGA_STAR)


@dataclass(frozen=True)
class OrderWord:
    atoms: tuple[OrderAtom, ...]

    def __post_init__(self) -> None:
        if not self.atoms:
            raise ValueError("a word needs at least one atom")

    def __str__(self) -> str:
        return "+".join(str(a) for a in self.atoms)


def word_of(*atoms: OrderAtom) -> OrderWord:
    return OrderWord(tuple(atoms))


def parse_word(text: str) -> OrderWord:
    """Parse "w+1+w*" (ASCII) or the same with the Greek letter."""
    atoms: list[OrderAtom] = []
    for raw in text.split("+"):
        tok = raw.strip().replace("ω", "w")
        if tok == "w":
            atoms.append(OMEGA)
        elif tok == "w*":
            atoms.append(OMEGA_STAR)
        elif tok.isdigit() and tok != "0" and int(tok) > 0:
            atoms.append(fin(int(tok)))
        else:
            raise BadLiteral(f"bad order-word atom: {raw!r}")
    return OrderWord(tuple(atoms))


@dataclass(frozen=True)
class Elem:
    block: int
    offset: int

    def __str__(self) -> str:
        return f"({self.block},{self.offset})"


class Ordering(Enum):
    LT = "<"
    EQ = "="
    GT = ">"


def validate_elem(w: OrderWord, x: Elem) -> None:
    if not 0 <= x.block < len(w.atoms):
        raise BadElement(f"block {x.block} out of range for {w}")
    if x.offset < 0:
        raise BadElement(f"negative offset in {x}")
    atom = w.atoms[x.block]
    if atom.kind is AtomKind.FIN and x.offset >= atom.size:
        raise BadElement(f"offset {x.offset} exceeds finite block of size {atom.size}")


def _block_least(w: OrderWord, j: int) -> Elem | None:
    atom = w.atoms[j]
    if atom.kind is AtomKind.OMEGA_STAR:
        return None
    return Elem(j, 0)


def _block_greatest(w: OrderWord, j: int) -> Elem | None:
    atom = w.atoms[j]
    if atom.kind is AtomKind.FIN:
        return Elem(j, atom.size - 1)
    if atom.kind is AtomKind.OMEGA_STAR:
        return Elem(j, 0)
    return None


def compare(w: OrderWord, a: Elem, b: Elem) -> Ordering:
    """Total order: blocks left to right, offsets by block convention."""
    validate_elem(w, a)
    validate_elem(w, b)
    if a.block != b.block:
        return Ordering.LT if a.block < b.block else Ordering.GT
    if a.offset == b.offset:
        return Ordering.EQ
    ascending = w.atoms[a.block].kind is not AtomKind.OMEGA_STAR
    lower = a.offset < b.offset
    return Ordering.LT if lower == ascending else Ordering.GT


def neighbors(w: OrderWord, x: Elem) -> tuple[Elem | None, Elem | None]:
    """Immediate predecessor and successor, either possibly absent."""
    validate_elem(w, x)
    atom = w.atoms[x.block]

    if atom.kind is AtomKind.OMEGA_STAR:
        pred: Elem | None = Elem(x.block, x.offset + 1)
    elif x.offset > 0:
        pred = Elem(x.block, x.offset - 1)
    elif x.block > 0:
        pred = _block_greatest(w, x.block - 1)
    else:
        pred = None

    at_block_top = (
        atom.kind is AtomKind.FIN and x.offset == atom.size - 1
    ) or (atom.kind is AtomKind.OMEGA_STAR and x.offset == 0)
    if atom.kind is AtomKind.OMEGA or not at_block_top:
        succ: Elem | None = Elem(
            x.block, x.offset + 1 if atom.kind is not AtomKind.OMEGA_STAR else x.offset - 1
        )
    elif x.block + 1 < len(w.atoms):
        succ = _block_least(w, x.block + 1)
    else:
        succ = None
    return pred, succ


def extremes(w: OrderWord) -> tuple[Elem | None, Elem | None]:
    """(least, greatest), either possibly absent."""
    return _block_least(w, 0), _block_greatest(w, len(w.atoms) - 1)


def normalize(w: OrderWord) -> OrderWord:
    out: list[OrderAtom] = []
    for atom in w.atoms:
        if out:
            top = out[-1]
            if atom.kind is AtomKind.FIN and top.kind is AtomKind.OMEGA_STAR:
                continue
            if atom.kind is AtomKind.FIN and top.kind is AtomKind.FIN:
                out[-1] = fin(top.size + atom.size)
                continue
            if atom.kind is AtomKind.OMEGA and top.kind is AtomKind.FIN:
                # finite runs were already merged, so one pop suffices
                out.pop()
        out.append(atom)
    return OrderWord(tuple(out))


def signature(w: OrderWord) -> tuple:
    """Isomorphism invariants read off the order, not the word.

    Records existence of global extremes, each block's kind and size,
    and at every seam whether the adjacent block ends are attained and
    immediately linked.  Used as a cross-check on normalize().
    """
    bot, top = extremes(w)
    feats: list = [bot is not None, top is not None]
    for j, atom in enumerate(w.atoms):
        entry: list = [atom.kind.value, atom.size]
        if j > 0:
            left_top = _block_greatest(w, j - 1)
            right_bot = _block_least(w, j)
            entry.append(left_top is not None and neighbors(w, left_top)[1] is not None)
            entry.append(right_bot is not None and neighbors(w, right_bot)[0] is not None)
        feats.append(tuple(entry))
    return tuple(feats)


def iso(a: OrderWord, b: OrderWord) -> bool:
    """Isomorphism of the denoted orders, with an independent cross-check."""
    na, nb = normalize(a), normalize(b)
    verdict = na == nb
    if (signature(na) == signature(nb)) != verdict:
        raise RuntimeError(f"normal forms and signatures disagree on {a} vs {b}")
    return verdict


def window_elems(w: OrderWord, depth: int) -> list[Elem]:
    """Ascending finite window: offsets up to depth within infinite blocks."""
    out: list[Elem] = []
    for j, atom in enumerate(w.atoms):
        if atom.kind is AtomKind.FIN:
            out.extend(Elem(j, o) for o in range(atom.size))
        elif atom.kind is AtomKind.OMEGA:
            out.extend(Elem(j, o) for o in range(depth + 1))
        else:
            out.extend(Elem(j, o) for o in range(depth, -1, -1))
    return out
