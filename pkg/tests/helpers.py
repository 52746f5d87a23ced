"""Shared generators for randomized tests."""

from itertools import product

from detdiv import Matrix, RingElem, Z, ZSQRT5, det, ideal_from_generators


def ze(n):
    return RingElem(Z, n)


def qe(a, b=0):
    return RingElem(ZSQRT5, a, b)


def p_ideal():
    """The non-principal norm-2 ideal generated by 2 and 1 + sqrt(-5)."""
    return ideal_from_generators([qe(2), qe(1, 1)])


def random_matrix(rng, ring, n, bound, nonsingular=False):
    while True:
        if ring == Z:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[(rng.randint(-bound, bound), rng.randint(-bound, bound))
                     for _ in range(n)] for _ in range(n)]
        m = Matrix(ring, rows)
        if not nonsingular or not det(m).is_zero():
            return m


def random_unimodular(rng, ring, n, steps=6):
    """A unimodular matrix built from random elementary row operations."""
    m = [[RingElem(ring, 1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        if ring == Z:
            f = RingElem(Z, rng.randint(-2, 2))
        else:
            f = RingElem(ZSQRT5, rng.randint(-1, 1), rng.randint(-1, 1))
        m[i] = [x + f * y for x, y in zip(m[i], m[j])]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    if rng.random() < 0.5:
        i, j = rng.randrange(n), rng.randrange(n)
        m[i], m[j] = m[j], m[i]
    return Matrix(ring, m)


def random_small_ideal(rng, max_coord=4):
    """A random nonzero ideal of Z[sqrt(-5)] from one or two small generators."""
    while True:
        gens = [qe(rng.randint(-max_coord, max_coord), rng.randint(-max_coord, max_coord))
                for _ in range(rng.randint(1, 2))]
        ideal = ideal_from_generators(gens)
        if not ideal.is_zero():
            return ideal


def brute_force_hnf(gens, coeff_bound=5):
    """Independent Hermite-basis oracle: enumerate integer combinations of
    the generator vectors and read the minima straight off the definition.
    Only valid when the true basis vectors fall inside the enumerated window.
    """
    vecs = [(g.a, g.b) for g in gens]
    pts = set()
    for coeffs in product(range(-coeff_bound, coeff_bound + 1), repeat=len(vecs)):
        u = sum(c * v[0] for c, v in zip(coeffs, vecs))
        v = sum(c * v[1] for c, v in zip(coeffs, vecs))
        pts.add((u, v))
    a = min(u for u, v in pts if v == 0 and u > 0)
    c = min(v for u, v in pts if v > 0)
    b = min(u for u, v in pts if v == c and u >= 0)
    return (a, b, c)
