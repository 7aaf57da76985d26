import pytest

from qchromatic.interval import (DyckWord, Hessenberg, dyck_ascii,
                                 enumerate_hessenberg, from_dyck)

PAPER_WORD = "WSWWSWWSWSWSSS"
PAPER_E = (0, 1, 1, 2, 2, 3, 4)


def test_from_dyck():
    assert from_dyck(PAPER_WORD) == PAPER_E
    assert from_dyck("WS") == (0,)
    assert from_dyck("WWSS") == (0, 0)


def test_to_dyck():
    assert Hessenberg(PAPER_E).to_dyck() == PAPER_WORD
    assert Hessenberg((0,)).to_dyck() == "WS"
    assert Hessenberg((0, 0)).to_dyck() == "WWSS"


def test_dyck_validation():
    with pytest.raises(ValueError):
        DyckWord("SW")
    with pytest.raises(ValueError):
        DyckWord("WSW")
    with pytest.raises(ValueError):
        DyckWord("WX")


def test_hessenberg_validation():
    with pytest.raises(ValueError):
        Hessenberg((1,))
    with pytest.raises(ValueError):
        Hessenberg((0, 2))
    with pytest.raises(ValueError):
        Hessenberg((0, 1, 0))


def test_edges_paper_example():
    e = Hessenberg(PAPER_E)
    assert e.edges() == {(2, 3), (3, 4), (3, 5), (4, 5),
                         (4, 6), (5, 6), (5, 7), (6, 7)}
    assert len(e.edges()) == 8


def test_prec_and_interval_order():
    assert Hessenberg((0, 0)).prec(1, 2)
    e = Hessenberg((0, 1))
    assert not e.prec(1, 2)
    assert e.interval_less(1, 2)
    with pytest.raises(ValueError):
        e.prec(2, 1)


def test_edge_count_formula():
    for n in range(1, 7):
        for e in enumerate_hessenberg(n):
            assert len(e.edges()) == sum(j - 1 - e.at(j) for j in range(1, n + 1))


def test_enumerate_hessenberg():
    assert [tuple(e) for e in enumerate_hessenberg(3)] == [
        (0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 1), (0, 1, 2)]
    assert len(enumerate_hessenberg(5)) == 42
    assert sum(Hessenberg(PAPER_E)) == 13


def test_dyck_roundtrip_all_functions():
    for n in range(1, 8):
        for e in enumerate_hessenberg(n):
            assert from_dyck(e.to_dyck()) == e


def test_interval_order_is_strict_partial_order():
    for n in range(1, 7):
        for e in enumerate_hessenberg(n):
            for i in range(1, n + 1):
                assert not e.interval_less(i, i)
                for j in range(1, n + 1):
                    if not e.interval_less(i, j):
                        continue
                    for k in range(1, n + 1):
                        if e.interval_less(j, k):
                            assert e.interval_less(i, k)


def test_prec_is_not_transitive_at_n4():
    found = False
    for e in enumerate_hessenberg(4):
        for i in range(1, 5):
            for j in range(i + 1, 5):
                for k in range(j + 1, 5):
                    if e.prec(i, j) and e.prec(j, k) and not e.prec(i, k):
                        found = True
    assert found


def test_dyck_ascii_smoke():
    art = dyck_ascii(Hessenberg(PAPER_E))
    assert art.splitlines()[0] == "....##"
    assert art.splitlines()[-1] == "."
