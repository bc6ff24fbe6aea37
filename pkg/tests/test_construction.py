import dataclasses
import json

import pytest

import oracles
from trideg.construction import (
    CertificationError,
    base_g7,
    construct,
    extend_pendant,
    extend_universal,
)
from trideg.graph6 import decode
from trideg.graphs import triangle_degrees


def test_seed_fixture(g7):
    g = g7.graph
    assert g.n == 7
    assert g.m == 15
    cert = g7.certificate
    assert cert.tri_by_rank == (9, 7, 6, 5, 4, 3, 2)
    assert cert.deg_by_rank == (6, 5, 5, 4, 4, 3, 3)
    assert cert.passed
    assert cert.strict_tri_descent and cert.weak_deg_descent
    assert cert.recomputed and cert.incremental_match
    assert sorted(g7.labels) == list(range(7))
    assert g7.vertex_of_rank(1) == g7.labels[0]
    # rank sequences really are the graph's own values, recounted slowly
    slow = oracles.triangle_list_slow(g)
    assert tuple(slow[v] for v in g7.labels) == cert.tri_by_rank
    degs = oracles.degree_list(g)
    assert tuple(degs[v] for v in g7.labels) == cert.deg_by_rank


def test_construct_7_is_seed(g7):
    assert construct(7).graph == g7.graph


def test_family_certified(family40):
    for n, gc in family40.items():
        cert = gc.certificate
        assert cert.n == n and cert.m == gc.graph.m
        assert cert.passed
        assert cert.recomputed and cert.incremental_match
        tri = cert.tri_by_rank
        deg = cert.deg_by_rank
        assert all(tri[i] > tri[i + 1] for i in range(n - 1))
        assert all(deg[i] >= deg[i + 1] for i in range(n - 1))
        assert sorted(gc.labels) == list(range(n))
        fast = triangle_degrees(gc.graph)
        assert tuple(fast[v] for v in gc.labels) == tri
    # slow recount on a sample
    for n in (8, 11, 14):
        gc = family40[n]
        slow = oracles.triangle_list_slow(gc.graph)
        assert tuple(slow[v] for v in gc.labels) == gc.certificate.tri_by_rank


def test_parity_specific_checks(family40):
    for n, gc in family40.items():
        cert = gc.certificate
        if n % 2:
            assert cert.tri_min_positive and cert.deg_min_positive
            assert cert.edge_identity and cert.non_regular
            assert cert.pendant_tail is None
            assert gc.graph.m == cert.tri_by_rank[0] + cert.deg_by_rank[0]
            assert cert.deg_by_rank[0] > cert.deg_by_rank[-1]
        else:
            assert cert.pendant_tail
            assert cert.tri_by_rank[-1] == 0 and cert.deg_by_rank[-1] == 1
            assert cert.tri_min_positive is None
            assert cert.non_regular is None


def test_step_edge_counts(family40):
    for n in range(8, 41):
        prev_m = family40[n - 1].graph.m
        if n % 2 == 0:
            assert family40[n].graph.m == prev_m + 1  # pendant adds one edge
        else:
            assert family40[n].graph.m == prev_m + (n - 1)  # universal vertex


def test_universal_step_head(family40):
    for n in (9, 11, 13):
        cert = family40[n].certificate
        assert cert.deg_by_rank[0] == n - 1
        assert cert.tri_by_rank[0] == family40[n - 1].graph.m


def test_pendant_can_attach_to_newest_vertex(family40):
    # extending 9 -> 10 the minimum degree sits at the last rank, so the
    # pendant hangs off the vertex added in the previous step
    prev = family40[9].certificate.deg_by_rank
    k = prev.index(min(prev)) + 1
    assert k == 9
    after = family40[10].certificate.deg_by_rank
    assert after[k - 1] == prev[k - 1] + 1


def test_extend_parity_preconditions(g7):
    with pytest.raises(ValueError):
        extend_universal(g7)  # universal step starts from even order
    even = extend_pendant(g7)
    assert even.graph.n == 8
    with pytest.raises(ValueError):
        extend_pendant(even)
    odd = extend_universal(even)
    assert odd.graph.n == 9


def test_construct_domain_errors():
    for n in (-1, 0, 2, 6):
        with pytest.raises(ValueError):
            construct(n)


def test_certificate_passed_logic(g7, family40):
    cert = g7.certificate
    assert not dataclasses.replace(cert, strict_tri_descent=False).passed
    assert not dataclasses.replace(cert, edge_identity=False).passed
    # parity checks that do not apply stay None without failing the whole
    even = family40[8].certificate
    assert even.non_regular is None and even.passed


def test_tampered_recount_raises(monkeypatch):
    import trideg.construction as cons

    monkeypatch.setattr(
        cons, "triangle_degrees", lambda g: tuple(0 for _ in range(g.n))
    )
    with pytest.raises(CertificationError):
        cons.construct(7)


def test_to_json_dict(g7):
    d = g7.to_json_dict()
    text = json.dumps(d, sort_keys=True)
    assert '"graph6"' in text
    assert decode(d["graph6"]) == g7.graph
    assert d["certificate"]["passed"] is True
    assert list(d["tri_by_rank"]) == [9, 7, 6, 5, 4, 3, 2]
