import json

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from condrank import ArgumentationFramework, parse_tgf, random_af, self_attackers, theta
from condrank.af import unattacked
from condrank.ranking import ArgumentRanking, Comparison, Semantics, ccbs, ccbs_prime, ccs, compare, rank


def test_ccs_mutual(mutual_af, backend):
    s = ccs(mutual_af, backend=backend)
    assert s.scores == {"a": 4, "b": 4, "c": 3, "d": 6}
    assert s.zero_world_count == 6


def test_ccs_selfloop(selfloop_af):
    s = ccs(selfloop_af)
    assert s.scores == {"a": 1, "b": 1} and s.zero_world_count == 1


def test_ccs_chain(chain_af):
    # pinned from the brute-force oracle in tests/oracle.py
    s = ccs(chain_af)
    assert s.scores == {"a": 6, "b": 3, "c": 4, "d": 4}
    assert s.zero_world_count == 6
    kb = theta(chain_af)
    assert oracle.ccs(kb.conditionals, kb.atoms) == (s.scores, s.zero_world_count)


def test_ccbs(mutual_af, selfloop_af, chain_af):
    assert ccbs(mutual_af).classes == (("d",), ("a", "b"), ("c",))
    assert ccbs(selfloop_af).classes == (("a", "b"),)
    assert ccbs(ArgumentationFramework()).classes == ()
    assert str(ccbs(chain_af)) == "a > c = d > b"


def test_ccbs_prime(mutual_af, selfloop_af):
    assert ccbs_prime(selfloop_af).classes == (("b",), ("a",))
    assert ccbs_prime(mutual_af).classes == ccbs(mutual_af).classes
    r = ccbs_prime(parse_tgf("a\nb\nc\n#\na a\nb b"))
    assert compare(r, "c", "a") is Comparison.STRICTLY_MORE
    assert compare(r, "c", "b") is Comparison.STRICTLY_MORE


def test_compare(mutual_af):
    r = ccbs(mutual_af)
    assert compare(r, "d", "a") is Comparison.STRICTLY_MORE
    assert compare(r, "c", "a") is Comparison.STRICTLY_LESS
    assert compare(r, "a", "b") is Comparison.EQUALLY_ACCEPTABLE
    assert compare(r, "c", "c") is Comparison.EQUALLY_ACCEPTABLE
    with pytest.raises(KeyError):
        compare(r, "a", "z")


def test_ranking_json_shape(mutual_af):
    data = json.loads(ccbs(mutual_af).to_json())
    assert data == {"semantics": "ccbs", "zero_world_count": 6,
                    "scores": {"a": 4, "b": 4, "c": 3, "d": 6},
                    "ranking": [["d"], ["a", "b"], ["c"]]}


def test_ranking_rejects_bad_classes():
    with pytest.raises(ValueError):
        ArgumentRanking((("a",), ()), Semantics.CCBS)
    with pytest.raises(ValueError):
        ArgumentRanking((("a",), ("a",)), Semantics.CCBS)


def test_semantics_parse():
    assert Semantics.parse("ccbs-prime") is Semantics.CCBS_PRIME
    assert Semantics.parse("CCBS_PRIME") is Semantics.CCBS_PRIME
    assert rank(parse_tgf("a\nb\n#\na a"), "ccbs-prime").semantics is Semantics.CCBS_PRIME


frameworks = st.builds(random_af, n=st.integers(0, 8), p=st.floats(0, 1),
                       allow_self_attacks=st.booleans(), seed=st.integers(0, 2**64 - 1))


@settings(max_examples=100, deadline=None)
@given(frameworks)
def test_ranking_invariants(af):
    s = ccs(af)
    r, rp = ccbs(af, s), ccbs_prime(af, s)
    for ranking in (r, rp):
        assert sorted(ranking.arguments) == sorted(af.arguments)
    assert all(0 <= v <= s.zero_world_count for v in s.scores.values())
    if len(af):
        assert s.zero_world_count >= 1
    for a in unattacked(af):
        assert s[a] == s.zero_world_count
    selfish = set(self_attackers(af))
    if not selfish:
        assert r.classes == rp.classes
    for a in selfish:
        for b in set(af.arguments) - selfish:
            assert rp.position(a) > rp.position(b)
    scores = [s[c[0]] for c in r.classes]
    assert scores == sorted(set(scores), reverse=True)


@settings(max_examples=40, deadline=None)
@given(frameworks)
def test_ccs_matches_oracle(af):
    kb = theta(af)
    expected = oracle.ccs(kb.conditionals, kb.atoms)
    s = ccs(af)
    assert (s.scores, s.zero_world_count) == expected
