import random

from gdmagic.graphs import (
    Graph,
    complete,
    cycle,
    is_isomorphic,
    path,
)
from gdmagic.products import cartesian_product, direct_product, lex_product


def _random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_lex_examples():
    assert lex_product(complete(2), complete(2)) == complete(4)
    g = lex_product(cycle(3), cycle(4))
    assert g.n == 12 and set(g.degrees) == {10}
    assert lex_product(complete(1), cycle(5)) == cycle(5)


def test_dir_examples():
    two_edges = direct_product(complete(2), complete(2))
    assert two_edges.edges() == [(0, 3), (1, 2)]
    g = direct_product(cycle(4), cycle(4))
    assert g.n == 16 and set(g.degrees) == {4}
    edgeless = direct_product(complete(1), cycle(5))
    assert edgeless.num_edges == 0 and edgeless.n == 5


def test_cart_examples():
    assert is_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4))
    prism = cartesian_product(cycle(3), complete(2))
    assert prism.n == 6 and set(prism.degrees) == {3}
    g = cartesian_product(cycle(4), cycle(4))
    assert g.n == 16 and set(g.degrees) == {4}


def test_degree_formulas_on_random_pairs():
    rng = random.Random(0xC0FFEE)
    for _ in range(12):
        g = _random_graph(rng, rng.randint(2, 6), rng.choice((0.3, 0.6)))
        h = _random_graph(rng, rng.randint(2, 5), rng.choice((0.3, 0.6)))
        lex = lex_product(g, h)
        direct = direct_product(g, h)
        cart = cartesian_product(g, h)
        for i in range(g.n):
            for j in range(h.n):
                vid = i * h.n + j
                assert lex.degree(vid) == g.degree(i) * h.n + h.degree(j)
                assert direct.degree(vid) == g.degree(i) * h.degree(j)
                assert cart.degree(vid) == g.degree(i) + h.degree(j)


def test_coordinate_swap_is_isomorphism():
    rng = random.Random(7)
    for _ in range(6):
        g = _random_graph(rng, rng.randint(2, 5), 0.5)
        h = _random_graph(rng, rng.randint(2, 5), 0.5)
        for fn in (direct_product, cartesian_product):
            ab = fn(g, h)
            ba = fn(h, g)
            # explicit swap map (i,j) -> (j,i)
            for i in range(g.n):
                for j in range(h.n):
                    for ip in range(g.n):
                        for jp in range(h.n):
                            assert ab.has_edge(i * h.n + j, ip * h.n + jp) == \
                                ba.has_edge(j * g.n + i, jp * g.n + ip)


def test_lex_not_commutative():
    a = lex_product(path(3), complete(2))
    b = lex_product(complete(2), path(3))
    assert sorted(a.degrees) != sorted(b.degrees)


def test_lex_block_structure():
    g, h = path(3), cycle(4)
    lex = lex_product(g, h)
    for i in range(g.n):
        block = range(i * h.n, (i + 1) * h.n)
        induced = Graph.from_edges(h.n, [
            (u - i * h.n, v - i * h.n) for u in block for v in block
            if u < v and lex.has_edge(u, v)])
        assert induced == h
