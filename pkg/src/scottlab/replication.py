"""Decompositions, the two-to-one folding map, and the summary pipeline.

decompositions() splits each composite order into string families.  The
hat order admits two natural splittings, differing only in which family
absorbs the boundary m.  The valley order has the right order type for
a four-family sum, but the family pairings both claim the boundary m',
so no natural splitting exists; the collision witness records the two
claimants.

lcr_forward folds the four string families into the valley order: the
lower families keep their string on the right against a pinned left
end, the upper families keep it on the left against a pinned right
end.  The fold is injective except exactly at m', hit by both ...000
and 111....  lcr_backward inverts it, taking an endpoint choice (which
end of the pair to read) to break the tie at the boundary.

replicate() splits the self-dual boundary m into an adjacent intent /
extent pair, turning the hat order's single middle element into the
two-element middle of the primed order.

pipeline() chains these constructions and tabulates, per composite
order, the adjunction verdict, fixed point applicability, boundary
element, and order type.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import strings as st
from .adjunction import BOUNDARY_M, BOUNDARY_M_PRIME, build_pair_cpo, check_adjunction
from .catalog import CpoName, named_cpo
from .errors import BadElement, NotBoundary, UnknownCpo
from .funcspace import self_iso
from .words import iso, neighbors


@dataclass(frozen=True)
class CollisionWitness:
    element: st.PairString
    lower_claim: st.MonotypicString  # folds in via (. , 111...)
    upper_claim: st.MonotypicString  # folds in via (...000, .)


@dataclass(frozen=True)
class Decomposition:
    which: CpoName
    parts: tuple[st.SpecKind, ...]
    natural: bool
    name: str | None                          # which natural pairing, if any
    boundary_image: st.MonotypicString | None
    witness: CollisionWitness | None

    def project(self, p: st.PairString) -> st.MonotypicString:
        """The string a pair element corresponds to under this splitting."""
        if self.which is CpoName.LAMBDA_HAT_PRIME:
            if p == BOUNDARY_M:
                assert self.boundary_image is not None
                return self.boundary_image
            if p.left == st.ALL_ZEROS_L:
                return p.right
            if p.right == st.ALL_ONES_R:
                return p.left
            raise BadElement(f"{p} is not in the hat order")
        raise NotBoundary("the valley order has no natural splitting to project along")


def decompositions(which: str | CpoName) -> tuple[Decomposition, ...]:
    cpo = named_cpo(which)
    K = st.SpecKind
    if cpo.name is CpoName.LAMBDA_HAT_PRIME:
        return (
            Decomposition(cpo.name, (K.III, K.I, K.II), True, "phi1", st.ALL_ZEROS_L, None),
            Decomposition(cpo.name, (K.III, K.IV, K.II), True, "phi2", st.ALL_ONES_R, None),
        )
    if cpo.name is CpoName.V:
        witness = CollisionWitness(BOUNDARY_M_PRIME, st.ALL_ZEROS_R, st.ALL_ONES_L)
        return (Decomposition(cpo.name, (K.I, K.II, K.III, K.IV), False, None, None, witness),)
    raise UnknownCpo(f"{cpo.name.value} has no catalogued decomposition")


@dataclass(frozen=True)
class LcrImage:
    source: st.MonotypicString
    source_label: str           # label in the primed composite order
    image: st.PairString
    half: str                   # "xi" or "xi_opp"
    label: str                  # label in the valley order
    collision: bool


def lcr_forward(x: st.MonotypicString) -> LcrImage:
    """Fold a string into the valley order."""
    lam_prime = named_cpo(CpoName.LAMBDA_PRIME)
    v = named_cpo(CpoName.V)
    family = st.classify(x).family
    if family in (st.SpecKind.III, st.SpecKind.IV):
        image = st.PairString(x, st.ALL_ONES_L)
        half = "xi_opp"
    else:
        image = st.PairString(st.ALL_ZEROS_R, x)
        half = "xi"
    return LcrImage(
        x,
        lam_prime.to_label(lam_prime.to_elem(str(x))),
        image,
        half,
        v.to_label(v.to_elem(str(image))),
        image == BOUNDARY_M_PRIME,
    )


def lcr_backward(p: st.PairString, endpoint: st.Orientation | None = None) -> st.MonotypicString:
    """Unfold a valley pair back to its string.

    At the boundary both preimages exist; endpoint R reads the
    right-indexed preimage ...000, endpoint L the left-indexed 111....
    Away from the boundary the preimage is unique and endpoint is
    ignored.
    """
    if p == BOUNDARY_M_PRIME:
        if endpoint is None:
            raise BadElement("the boundary has two preimages; pick endpoint L or R")
        return st.ALL_ZEROS_R if endpoint is st.Orientation.R else st.ALL_ONES_L
    if p.right == st.ALL_ONES_L:
        return p.left
    if p.left == st.ALL_ZEROS_R:
        return p.right
    raise BadElement(f"{p} is not in the valley order")


@dataclass(frozen=True)
class ReplicationResult:
    source: st.PairString
    intent: st.MonotypicString
    extent: st.MonotypicString
    intent_label: str
    extent_label: str
    mutual_neighbors: bool


def replicate(p: st.PairString) -> ReplicationResult:
    """Split the self-dual boundary m into the adjacent middle pair."""
    if p != BOUNDARY_M:
        raise NotBoundary(f"replication applies only to {BOUNDARY_M}, got {p}")
    lam_prime = named_cpo(CpoName.LAMBDA_PRIME)
    intent, extent = p.left, p.right
    ie = lam_prime.to_elem(str(intent))
    ee = lam_prime.to_elem(str(extent))
    mutual = (neighbors(lam_prime.word, ee)[1] == ie
              and neighbors(lam_prime.word, ie)[0] == ee)
    return ReplicationResult(
        p, intent, extent,
        lam_prime.to_label(ie), lam_prime.to_label(ee),
        mutual,
    )


@dataclass(frozen=True)
class Table8Row:
    cpo: str
    adjunction: str    # "yes" / "no"
    fixed_point: str   # "applicable" / "not applicable"
    boundary: str      # boundary label or "n/a"
    order_type: str


def table8(window: int = 20) -> tuple[Table8Row, ...]:
    """Summary matrix, every cell computed from the operations."""
    rows = []
    for name in (CpoName.LAMBDA, CpoName.LAMBDA_PRIME, CpoName.LAMBDA_HAT_PRIME, CpoName.V):
        cpo = named_cpo(name)
        adj = "yes" if check_adjunction(name, window).passed else "no"
        fp = "applicable" if self_iso(cpo.word).is_iso else "not applicable"
        try:
            boundary = build_pair_cpo(name).cpo.to_label(
                build_pair_cpo(name).cpo.to_elem(str(build_pair_cpo(name).boundary)))
        except UnknownCpo:
            boundary = "n/a"
        rows.append(Table8Row(name.value, adj, fp, boundary, str(cpo.display_word)))
    return tuple(rows)


@dataclass(frozen=True)
class DualizationEdge:
    source: str
    target: str
    isomorphic: bool
    order_type: str


@dataclass(frozen=True)
class ReplicationEdge:
    source: str
    target: str
    intent_label: str
    extent_label: str
    source_type: str
    target_type: str
    mutual_neighbors: bool


@dataclass(frozen=True)
class LcrEdge:
    source: str
    target: str
    round_trip_ok: bool
    collision_label: str
    collision_preimages: tuple[str, str]
    isomorphic: bool


@dataclass(frozen=True)
class PipelineReport:
    dualization: DualizationEdge
    replication: ReplicationEdge
    lcr: LcrEdge
    matrix: tuple[Table8Row, ...]


def pipeline(window: int = 20) -> PipelineReport:
    lam = named_cpo(CpoName.LAMBDA)
    hat = named_cpo(CpoName.LAMBDA_HAT_PRIME)
    lam_prime = named_cpo(CpoName.LAMBDA_PRIME)
    v = named_cpo(CpoName.V)

    dual = DualizationEdge(
        lam.name.value, hat.name.value,
        iso(lam.word, hat.word), str(hat.display_word),
    )

    rep = replicate(BOUNDARY_M)
    rep_edge = ReplicationEdge(
        hat.name.value, lam_prime.name.value,
        rep.intent_label, rep.extent_label,
        str(hat.display_word), str(lam_prime.display_word),
        rep.mutual_neighbors,
    )

    probe = [st.MonotypicString(st.Orientation.R, st.OMEGA_MANY, k) for k in range(window + 1)]
    probe += [st.ALL_ONES_R, st.ALL_ZEROS_L]
    probe += [st.MonotypicString(st.Orientation.L, k, st.OMEGA_MANY) for k in range(window, -1, -1)]
    ok = True
    collisions = []
    for x in probe:
        img = lcr_forward(x)
        endpoint = st.Orientation.R if x.orientation is st.Orientation.R else st.Orientation.L
        if lcr_backward(img.image, endpoint) != x:
            ok = False
        if img.collision:
            collisions.append(x)
    vm = named_cpo(CpoName.V)
    lcr_edge = LcrEdge(
        lam_prime.name.value, v.name.value,
        ok and len(collisions) == 2,
        vm.to_label(vm.to_elem(str(BOUNDARY_M_PRIME))),
        tuple(str(c) for c in collisions),
        iso(lam_prime.word, v.word),
    )

    return PipelineReport(dual, rep_edge, lcr_edge, table8(window))
