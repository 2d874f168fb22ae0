import pytest

import condorcet_domains as cd


def test_parse_and_predicates():
    d = cd.Domain.from_text("123\n213\n231\n321\n")
    assert len(d) == 4
    assert cd.is_condorcet(d)
    assert cd.is_maximal(d)
    assert cd.is_ample(d)
    assert d.to_text() == "123\n213\n231\n321\n"


def test_compose_and_decompose():
    left = cd.Domain([[1, 2], [2, 1]])
    right = cd.Domain([[2, 3], [3, 2]])
    composed = cd.compose(left, right)
    assert composed == cd.Domain.from_text("123\n213\n231\n321\n")
    parts = cd.decompose(composed)
    assert any(x == 3 and y == 1 for x, y, _, _ in parts)


def test_enumerate_n3():
    domains = cd.enumerate_maximal(3)
    assert len(domains) == 9
    assert all(cd.is_maximal(d) for d in domains)
    assert len({cd.canonical_form(d) for d in domains}) == 2


def test_single_peaked():
    sp = cd.single_peaked_domain([1, 2, 3, 4])
    assert len(sp) == 8
    assert cd.is_single_peaked(sp, [1, 2, 3, 4])
    assert not cd.is_single_peaked(sp, [2, 1, 3, 4])


def test_catalog_and_graph():
    assert "D4_2" in cd.catalog_ids()
    snake = cd.catalog_domain("snake")
    vertices, edges, connected, path = cd.graph_summary(snake)
    assert (vertices, edges, connected, path) == (7, 6, True, True)
    assert cd.to_dot(snake).startswith("graph D {")
    assert cd.catalog_verify_ok()


def test_errors():
    with pytest.raises(RuntimeError):
        cd.Domain.from_text("123\n12\n")
    with pytest.raises(ValueError):
        cd.compose(cd.Domain([[1, 2]]), cd.Domain([[2, 1]]))
