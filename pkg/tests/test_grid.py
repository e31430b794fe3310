import math
import random
from fractions import Fraction

import pytest

from gridindex.errors import GridError
from gridindex.grid import (
    Vertex,
    builtin_grid,
    embed_vertex,
    generator_basis_vector,
    generator_vector,
    is_edge,
    make_grid,
    neighbors,
    origin,
    project_grid,
    step,
)

H = math.sqrt(3) / 2
BUILTINS = ["orthogonal-2", "orthogonal-3", "square-centered", "triangular", "hexagonal", "square-octagon", "hexagonal-z2"]


def close(a, b, tol=1e-9):
    return len(a) == len(b) and all(abs(x - y) < tol for x, y in zip(a, b))


def real_vectors(grid):
    return [generator_vector(grid, k) for k in range(1, grid.generator_count + 1)]


def test_make_grid_orthogonal():
    g = make_grid(2, [(1, 0), (0, 1)], [(0, 0)], [(0, 0, (1, 0)), (0, 0, (0, 1))])
    assert g == builtin_grid("orthogonal-2")
    assert g.generator_count == 2


@pytest.mark.parametrize(
    "kwargs, msg",
    [
        (dict(basis=[(1, 0), (2, 0)]), "dependent"),
        (dict(generators=[(0, 0, (0, 0))]), "zero"),
        (dict(anchors=[(0, 0), (0, 0)]), "duplicate anchor"),
        (dict(anchors=[(0, 1)]), "outside"),
        (dict(anchors=[("-1/3", 0)]), "outside"),
        (dict(generators=[(0, 0, (1, 0)), (0, 0, (1, 0))]), "duplicates"),
        (dict(generators=[(0, 0, (1, 0)), (0, 0, (-1, 0))]), "negation"),
        (dict(generators=[(0, 1, (1, 0))]), "unknown anchor"),
        (dict(generators=[(0, 0, (1, 0, 0))]), "wrong length"),
    ],
)
def test_make_grid_rejects(kwargs, msg):
    args = dict(dimension=2, basis=[(1, 0), (0, 1)], anchors=[(0, 0)], generators=[(0, 0, (1, 0))])
    args.update(kwargs)
    with pytest.raises(GridError, match=msg):
        make_grid(**args)


def test_template_vectors_must_agree():
    with pytest.raises(GridError, match="different edge vectors"):
        make_grid(2, [(1, 0), (0, 1)], [(0, 0), ("1/2", "1/2")], [[(0, 1, (0, 0)), (1, 0, (0, 0))]])


def test_triangular_matches_printed_vectors():
    g = builtin_grid("triangular")
    assert close(g.basis[1], (0.5, H))
    vecs = real_vectors(g)
    assert close(vecs[0], (1, 0)) and close(vecs[1], (0.5, H)) and close(vecs[2], (-0.5, H))
    assert len(g.anchors) == 1


def test_square_centered_matches_printed_vectors():
    g = builtin_grid("square-centered")
    assert g.basis == ((0.0, 2.0), (2.0, 0.0))
    assert close(embed_vertex(g, Vertex(0, (0, 0))), (0, 0))
    assert close(embed_vertex(g, Vertex(1, (0, 0))), (1, 1))
    for got, want in zip(real_vectors(g), [(0, 2), (2, 0), (1, 1), (-1, 1)]):
        assert close(got, want)


def test_hexagonal_z2_matches_printed_vectors():
    g = builtin_grid("hexagonal-z2")
    assert g.anchors == ((Fraction(1, 3),) * 2, (Fraction(2, 3),) * 2)
    for got, want in zip(real_vectors(g), [(1 / 3, 1 / 3), (1 / 3, -2 / 3), (-2 / 3, 1 / 3)]):
        assert close(got, want)


def test_hexagonal_matches_printed_vectors():
    g = builtin_grid("hexagonal")
    assert close(embed_vertex(g, Vertex(0, (0, 0))), (0.5, math.sqrt(3) / 6))
    assert close(embed_vertex(g, Vertex(1, (0, 0))), (1, math.sqrt(3) / 3))
    want = [(0, math.sqrt(3) / 3), (-0.5, math.sqrt(3) / 6), (0.5, math.sqrt(3) / 6)]
    for got, w in zip(real_vectors(g), want):
        assert close(got, w)


def test_square_octagon_matches_printed_vectors():
    g = builtin_grid("square-octagon")
    anchors = [embed_vertex(g, Vertex(a, (0, 0))) for a in range(4)]
    for got, want in zip(anchors, [(1, 1 / 3), (5 / 3, 1), (1, 5 / 3), (1 / 3, 1)]):
        assert close(got, want)
    for got, want in zip(real_vectors(g), [(0, 2 / 3), (2 / 3, 0), (2 / 3, 2 / 3), (-2 / 3, 2 / 3)]):
        assert close(got, want)
    # 4.8.8 tiling: every vertex has degree 3
    assert all(len(neighbors(g, Vertex(a, (0, 0)))) == 3 for a in range(4))


def test_orthogonal_family():
    for d in range(0, 5):
        g = builtin_grid(f"orthogonal-{d}")
        assert g.dimension == d
        assert len(neighbors(g, origin(g))) == 2 * d


def test_unknown_builtin():
    with pytest.raises(GridError):
        builtin_grid("penrose")


def test_embed_vertex():
    assert embed_vertex(builtin_grid("orthogonal-2"), Vertex(0, (3, 5))) == (3.0, 5.0)
    assert close(embed_vertex(builtin_grid("triangular"), Vertex(0, (1, 1))), (1.5, H))
    assert close(embed_vertex(builtin_grid("square-centered"), Vertex(1, (0, 0))), (1, 1))
    with pytest.raises(GridError):
        embed_vertex(builtin_grid("triangular"), Vertex(1, (0, 0)))


def test_is_edge_examples():
    ortho = builtin_grid("orthogonal-2")
    assert is_edge(ortho, Vertex(0, (0, 0)), Vertex(0, (1, 0))) == 1
    assert is_edge(ortho, Vertex(0, (1, 0)), Vertex(0, (0, 0))) == -1
    assert is_edge(ortho, Vertex(0, (0, 0)), Vertex(0, (1, 1))) is None
    tri = builtin_grid("triangular")
    # real (1/2, h) is lattice (0, 1)
    assert is_edge(tri, origin(tri), Vertex(0, (0, 1))) == 2


def test_square_centered_exclusion():
    g = builtin_grid("square-centered")
    # centers (1,1) and (3,1): (3,1) = center + b2
    c1, c2 = Vertex(1, (0, 0)), Vertex(1, (0, 1))
    assert close(embed_vertex(g, c2), (3, 1))
    assert is_edge(g, c1, c2) is None
    assert is_edge(g, c2, c1) is None
    k1, k2 = Vertex(0, (0, 0)), Vertex(0, (0, 1))
    assert close(embed_vertex(g, k2), (2, 0))
    assert is_edge(g, k1, k2) == 2


def test_neighbors_order_and_degree():
    tri = builtin_grid("triangular")
    nb = neighbors(tri, origin(tri))
    assert [k for k, _ in nb] == [1, -1, 2, -2, 3, -3]
    g = builtin_grid("square-centered")
    center = neighbors(g, Vertex(1, (0, 0)))
    assert [k for k, _ in center] == [3, -3, 4, -4]
    pts = sorted(tuple(round(x, 9) for x in embed_vertex(g, w)) for _, w in center)
    assert pts == [(0, 0), (0, 2), (2, 0), (2, 2)]


@pytest.mark.parametrize("name", BUILTINS)
def test_generator_roundtrip_random_vertices(name):
    g = builtin_grid(name)
    rng = random.Random(name)
    for _ in range(100):
        lat = tuple(rng.randint(-50, 50) for _ in range(g.dimension))
        for k in range(1, g.generator_count + 1):
            for t in g.generators[k - 1].templates:
                v = Vertex(t.from_anchor, lat)
                w = step(g, v, k)
                assert is_edge(g, v, w) == k
                assert is_edge(g, w, v) == -k
                assert step(g, w, -k) == v
                # real edge vector agrees with the embedding
                diff = [b - a for a, b in zip(embed_vertex(g, v), embed_vertex(g, w))]
                assert close(diff, generator_vector(g, k), 1e-7)


@pytest.mark.parametrize("name", BUILTINS)
def test_embedding_is_affine(name):
    g = builtin_grid(name)
    rng = random.Random(1)
    for _ in range(50):
        a = rng.randrange(len(g.anchors))
        n = tuple(rng.randint(-20, 20) for _ in range(g.dimension))
        m = tuple(rng.randint(-20, 20) for _ in range(g.dimension))
        lhs = [x - y for x, y in zip(embed_vertex(g, Vertex(a, tuple(p + q for p, q in zip(n, m)))), embed_vertex(g, Vertex(a, n)))]
        rhs = [sum(m[i] * g.basis[i][j] for i in range(g.dimension)) for j in range(g.dimension)]
        assert close(lhs, rhs)


def test_exclusion_holds_everywhere():
    g = builtin_grid("square-centered")
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert is_edge(g, Vertex(1, (x, y)), Vertex(1, (x, y + 1))) is None
            assert is_edge(g, Vertex(0, (x, y)), Vertex(0, (x, y + 1))) == 2


def test_generator_basis_vector_exact():
    g = builtin_grid("hexagonal-z2")
    assert generator_basis_vector(g, 2) == (Fraction(1, 3), Fraction(-2, 3))
    assert generator_basis_vector(g, -2) == (Fraction(-1, 3), Fraction(2, 3))


def test_project_identity_and_rank():
    ortho = builtin_grid("orthogonal-2")
    assert project_grid(ortho, [[1, 0], [0, 1]]) == ortho
    with pytest.raises(GridError, match="dependent"):
        project_grid(builtin_grid("orthogonal-3"), [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(GridError, match="dependent"):
        project_grid(ortho, [[1, 1], [1, 1]])


def test_project_to_integer_lattice():
    # the map sending b1 -> (1,0), b2 -> (0,1) is the inverse basis matrix
    inv = [[1, -1 / math.sqrt(3)], [0, 2 / math.sqrt(3)]]
    tri = project_grid(builtin_grid("triangular"), inv)
    for got, want in zip(real_vectors(tri), [(1, 0), (0, 1), (-1, 1)]):
        assert close(got, want)

    hexa = project_grid(builtin_grid("hexagonal"), inv)
    z2 = builtin_grid("hexagonal-z2")
    assert hexa.anchors == z2.anchors

    def signed_set(g):
        vs = real_vectors(g)
        return sorted(tuple(round(s * x, 9) + 0.0 for x in v) for v in vs for s in (1, -1))

    assert signed_set(hexa) == signed_set(z2)


@pytest.mark.parametrize("name", BUILTINS)
def test_edge_symmetry_on_pairs(name):
    from hypothesis import given, settings, strategies as st

    g = builtin_grid(name)
    coord = st.integers(-2, 2)
    vertex = st.builds(
        Vertex,
        st.integers(0, len(g.anchors) - 1),
        st.tuples(*[coord] * g.dimension),
    )

    @settings(max_examples=300, deadline=None)
    @given(vertex, vertex)
    def check(v, w):
        k = is_edge(g, v, w)
        back = is_edge(g, w, v)
        if k is None:
            assert back is None
        else:
            assert back == -k

    check()
