import pytest

from scottlab.errors import BadDepth
from scottlab.stages import (
    EpPair,
    LabelMap,
    PathClass,
    Scheme,
    check_ep_laws,
    diagram_dot,
    enumerate_monotone,
    ep_pair,
    limit_cpo,
    limit_paths,
    stage,
)
from scottlab.words import parse_word


def test_stage_words_are_the_monotone_maps():
    for n in range(1, 13):
        s = stage(n)
        assert len(s.elements) == n
        assert list(s.elements) == sorted(s.elements)
        if n > 1:
            assert list(s.elements) == list(enumerate_monotone(n - 1))


def test_stage_one_is_the_empty_word():
    assert stage(1).elements == ("",)


def test_stage_rejects_nonpositive():
    with pytest.raises(BadDepth):
        stage(0)


def test_enumerate_monotone_counts():
    for m in range(1, 9):
        assert len(enumerate_monotone(m)) == m + 1


def test_standard_pair_splits_at_the_midpoint():
    pair = ep_pair(Scheme.STANDARD, 5)
    assert pair.e.mapping == (0, 1, 2, 4, 5)
    assert pair.p.mapping == (0, 1, 2, 2, 3, 4)


def test_alternative_pair_keeps_the_prefix():
    pair = ep_pair(Scheme.ALTERNATIVE, 5)
    assert pair.e.mapping == (0, 1, 2, 3, 4)
    assert pair.p.mapping == (0, 1, 2, 3, 4, 4)


@pytest.mark.parametrize("scheme", list(Scheme))
def test_ep_laws_hold(scheme):
    for n in range(1, 11):
        assert check_ep_laws(ep_pair(scheme, n)).ok


def test_ep_law_checker_catches_a_broken_deflation():
    good = ep_pair(Scheme.STANDARD, 4)
    # send the collapsed label upward; the retraction survives because 2
    # is outside the embedding's image, but e∘p ⊆ id breaks there
    bad_p = list(good.p.mapping)
    assert bad_p[2] == 1
    bad_p[2] = 3
    broken = EpPair(good.scheme, good.n,
                    good.e, LabelMap(good.p.from_stage, good.p.to_stage, tuple(bad_p)))
    report = check_ep_laws(broken)
    assert report.p_after_e_is_id
    assert not report.e_after_p_below_id
    assert not report.ok
    assert report.witness == "e(p(2)) = 4"


def test_ep_law_checker_catches_a_broken_retraction():
    good = ep_pair(Scheme.STANDARD, 4)
    # pull the top label down two: still monotone and still deflating,
    # but p∘e is no longer the identity
    bad_p = list(good.p.mapping)
    bad_p[-1] = 2
    broken = EpPair(good.scheme, good.n,
                    good.e, LabelMap(good.p.from_stage, good.p.to_stage, tuple(bad_p)))
    report = check_ep_laws(broken)
    assert not report.p_after_e_is_id
    assert report.e_after_p_below_id
    assert report.p_monotone
    assert not report.ok
    assert report.witness == "p(e(3)) = 2"


def test_ep_law_checker_catches_a_broken_section():
    good = ep_pair(Scheme.STANDARD, 4)
    bad_e = list(good.e.mapping)
    bad_e[0] = 1
    broken = EpPair(good.scheme, good.n,
                    LabelMap(good.e.from_stage, good.e.to_stage, tuple(bad_e)), good.p)
    assert not check_ep_laws(broken).p_after_e_is_id


def test_standard_paths_at_depth_10():
    rows = {p.label: p.entries for p in limit_paths(Scheme.STANDARD, 10)}
    assert rows["0"] == (0,) * 10
    assert rows["1"] == (0, 0, 1, 1, 1, 1, 1, 1, 1, 1)
    assert rows["2"] == (0, 0, 1, 1, 2, 2, 2, 2, 2, 2)
    assert rows["0'"] == (0, 1, 2, 3, 4, 5, 6, 7, 8, 9)
    assert rows["1'"] == (0, 0, 1, 2, 3, 4, 5, 6, 7, 8)
    assert rows["2'"] == (0, 0, 1, 1, 2, 3, 4, 5, 6, 7)
    assert rows["inf"] == (0, 0, 1, 1, 2, 2, 3, 3, 4, 4)
    assert rows["4'"] == (0, 0, 1, 1, 2, 2, 3, 3, 4, 5)
    assert set(rows) == {"0", "1", "2", "3", "inf", "0'", "1'", "2'", "3'", "4'"}


def test_alternative_paths_at_depth_10():
    rows = {p.label: p.entries for p in limit_paths(Scheme.ALTERNATIVE, 10)}
    assert rows["inf"] == tuple(range(10))
    for k in range(9):
        assert rows[str(k)] == tuple(min(d, k) for d in range(10))
    assert set(rows) == {str(k) for k in range(9)} | {"inf"}


def test_path_kinds_partition():
    for scheme in Scheme:
        for p in limit_paths(scheme, 8):
            assert p.kind in PathClass
            assert (p.index is None) == (p.kind is PathClass.INFINITY)


def test_limit_order_types():
    assert limit_cpo(Scheme.STANDARD) == parse_word("w+1+w*")
    assert limit_cpo(Scheme.ALTERNATIVE) == parse_word("w+1")


def test_limit_is_stable_in_depth():
    for depth in (6, 9, 15):
        assert limit_cpo(Scheme.STANDARD, depth) == parse_word("w+1+w*")
        assert limit_cpo(Scheme.ALTERNATIVE, depth) == parse_word("w+1")


def test_diagram_shape():
    dot = diagram_dot(Scheme.STANDARD, 3)
    assert dot.startswith("digraph stages_standard {")
    assert dot.rstrip().endswith("}")
    assert '"s1_λ"' in dot
    assert '"s2_1" -> "s3_11" [label="e"]' in dot
    assert '"s3_11" -> "s2_1" [label="p"]' in dot
    assert '"s2_0" -> "s3_00" [dir=both]' in dot
    with pytest.raises(BadDepth):
        diagram_dot(Scheme.STANDARD, 1)
