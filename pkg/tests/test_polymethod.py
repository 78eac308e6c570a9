import random
from itertools import combinations

import pytest

from hamsym.bounds import MonomialClassSpec, monomial_class_enumerate
from hamsym.errors import ResourceLimitError
from hamsym.family import (
    ScalarProductSet,
    SetFamily,
    SignedVector,
    complete_intersecting_family,
    word_from_set,
)
from hamsym.polymethod import (
    AnnihilatorSpec,
    MultilinearPoly,
    build_annihilator,
    build_certificate,
    evaluate,
    exact_rank,
    format_certificate,
    linear_form,
    multiply_reduce,
    parity_class,
    shifted_form_product,
)

from oracles import dense_product_eval, expand_reduce_dense, leibniz_det

X1, X2, X3, X4 = 1, 2, 4, 8


def poly(n, terms):
    return MultilinearPoly(n, terms)


def from_dense(n, dense):
    return poly(n, {sum(1 << k for k in range(n) if alpha[k]): c for alpha, c in dense.items()})


def test_zero_coefficients_dropped():
    p = poly(2, {0: 0, X1: 3})
    assert dict(p.coeffs) == {X1: 3}
    assert p + (-p) == poly(2, {})


def test_linear_form():
    assert linear_form(SignedVector(2, 0b11)) == poly(2, {X1: 1, X2: 1})
    assert linear_form(SignedVector(2, 0b10)) == poly(2, {X1: -1, X2: 1})
    assert linear_form(SignedVector(1, 1)) == poly(1, {X1: 1})


def test_multiply_reduce_examples():
    a = poly(2, {X1: 1, X2: 1, 0: -2})
    b = poly(2, {X1: 1, X2: 1, 0: 2})
    assert multiply_reduce(a, b) == poly(2, {X1 | X2: 2, 0: -2})
    assert multiply_reduce(a, MultilinearPoly.constant(2)) == a
    x1 = poly(2, {X1: 1})
    assert multiply_reduce(x1, x1) == MultilinearPoly.constant(2)


def test_multiply_reduce_cap():
    lin = linear_form(SignedVector(6, 0))
    with pytest.raises(ResourceLimitError):
        multiply_reduce(lin, lin * lin, cap=10)


def test_build_annihilator_examples():
    n = 4
    p = build_annihilator(AnnihilatorSpec(SignedVector(n, word_from_set([1])), ScalarProductSet(n, {0})))
    assert p == poly(n, {X1: 1, X2: -1, X3: -1, X4: -1})
    # roots {-2, 2} include n = 2, so this goes through the unrestricted product
    p = shifted_form_product(SignedVector(2, 0b11), [-2, 2])
    assert p == poly(2, {X1 | X2: 2, 0: -2})


def test_annihilator_spec_rejects_n_as_root():
    with pytest.raises(ValueError):
        AnnihilatorSpec(SignedVector(2, 0b11), ScalarProductSet(2, {-2, 2}))


def test_evaluate_examples():
    p = poly(2, {X1 | X2: 2, 0: -2})
    assert evaluate(p, SignedVector(2, 0b11)) == 0
    for w in range(4):
        assert evaluate(MultilinearPoly.constant(2), SignedVector(2, w)) == 1
    assert evaluate(poly(2, {X1: 1, X2: 1}), SignedVector(2, 0b01)) == 0


def test_parity_class_examples():
    assert parity_class(poly(2, {X1 | X2: 2, 0: -2})) == "even"
    assert parity_class(poly(4, {X1: 1, X2 | X3 | X4: 1})) == "odd"
    assert parity_class(poly(2, {X1: 1, X1 | X2: 1})) == "mixed"
    assert parity_class(poly(2, {})) == "zero"


def test_eager_reduction_matches_dense_expansion():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 5)
        factors = [([rng.choice((-1, 1)) for _ in range(n)], rng.randint(-n, n)) for _ in range(rng.randint(1, 4))]
        p = MultilinearPoly.constant(n)
        for coeffs, const in factors:
            p = p * poly(n, {**{1 << k: c for k, c in enumerate(coeffs)}, 0: const})
        assert p == from_dense(n, expand_reduce_dense(n, factors))


def test_factor_order_irrelevant():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(2, 7)
        center = SignedVector(n, rng.randrange(1 << n))
        roots = sorted(rng.sample(range(-n, n), rng.randint(1, 4)))
        lin = linear_form(center)
        shuffled = roots[:]
        rng.shuffle(shuffled)
        p = MultilinearPoly.constant(n)
        for d in shuffled:
            p = p * (lin - MultilinearPoly.constant(n, d))
        assert p == build_annihilator(AnnihilatorSpec(center, ScalarProductSet(n, frozenset(roots))))


def symmetric_root_sets(n):
    # D' values n - 2d for d in 1..n-1, closed under negation
    pos = sorted({abs(n - 2 * d) for d in range(1, n)})
    for k in range(len(pos) + 1):
        for chosen in combinations(pos, k):
            yield frozenset(v for c in chosen for v in {c, -c})


@pytest.mark.parametrize("n", range(1, 6))
def test_parity_confinement_and_budget(n):
    for roots in symmetric_root_sets(n):
        s = len(roots)
        cls = "odd" if 0 in roots else "even"
        allowed = None
        if s:
            allowed = set(monomial_class_enumerate(MonomialClassSpec(n, s, cls)))
        for w in range(1 << n):
            p = build_annihilator(AnnihilatorSpec(SignedVector(n, w), ScalarProductSet(n, roots)))
            assert parity_class(p) == cls
            assert p.degree <= s
            if allowed is not None:
                for support in p.coeffs:
                    alpha = tuple((support >> k) & 1 for k in range(n))
                    assert alpha in allowed


def test_rank_examples():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[0, 1], [1, 0]]) == 2
    assert exact_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2
    assert exact_rank([[2, 4, 1], [1, 2, 7]]) == 2
    assert exact_rank([]) == 0


def test_rank_agrees_with_leibniz_determinant():
    rng = random.Random(13)
    for _ in range(300):
        m = rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(m)]
        if rng.random() < 0.4 and m > 1:
            # force a dependency
            i, j = rng.sample(range(m), 2)
            c = rng.randint(-2, 2)
            rows[i] = [c * x for x in rows[j]]
        assert (exact_rank(rows) == m) == (leibniz_det(rows) != 0)


def test_certificate_singletons():
    fam = SetFamily.from_sets(4, [{1}, {2}, {3}, {4}])
    cert = build_certificate(fam)
    assert cert.matrix == tuple(tuple(4 if i == j else 0 for j in range(4)) for i in range(4))
    assert cert.diagonal_witness == 4
    assert cert.parity_class == "odd"
    assert cert.monomial_budget == 4
    assert cert.rank == 4
    assert cert.verdict == "valid"
    assert leibniz_det(cert.matrix) == 4**4


def test_certificate_complete_intersecting_n4():
    cert = build_certificate(complete_intersecting_family(4))
    assert cert.m == 8
    assert cert.offdiagonal_zero
    assert cert.diagonal_witness == (4 - 2) * (4 - 0) * (4 + 2) == 48
    assert cert.parity_class == "odd"
    assert cert.monomial_budget == 8
    assert cert.rank == 8
    assert cert.valid
    assert leibniz_det(cert.matrix) == 48**8


def test_certificate_singleton_family():
    cert = build_certificate(SetFamily(5, (0b10110,)))
    assert cert.matrix == ((1,),)
    assert cert.s == 0 and cert.monomial_budget == 1
    assert cert.valid


def test_certificate_non_symmetric():
    cert = build_certificate(SetFamily(4, (0b0000, 0b0001)))
    assert cert.scalar_products == {2}
    assert cert.parity_class == "mixed"
    assert cert.offdiagonal_zero and cert.diagonal_ok
    assert not cert.valid
    assert "parity" in cert.failures


def test_certificate_rank_matches_determinant_small():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(2, 5)
        members = rng.sample(range(1 << n), rng.randint(1, min(6, 1 << n)))
        cert = build_certificate(SetFamily(n, tuple(members)))
        assert (cert.rank == cert.m) == (leibniz_det(cert.matrix) != 0)
        # off-diagonal vanishing and diagonal witness do not need symmetry
        assert cert.offdiagonal_zero and cert.diagonal_ok


def test_certificate_guards():
    with pytest.raises(ValueError):
        build_certificate(SetFamily(3, ()))
    with pytest.raises(ResourceLimitError):
        build_certificate(complete_intersecting_family(4), max_members=4)
    with pytest.raises(ResourceLimitError):
        build_certificate(SetFamily(6, (0, 3)), cap=32)


def test_certificate_text_is_deterministic():
    text = format_certificate(build_certificate(SetFamily.from_sets(4, [{1}, {2}, {3}, {4}])))
    assert text == (
        "n: 4\n"
        "m: 4\n"
        "s: 1\n"
        "distance_set: {2}\n"
        "scalar_product_set: {0}\n"
        "parity_class: odd\n"
        "monomial_budget: 4\n"
        "diagonal_witness: 4\n"
        "rank: 4\n"
        "verdict: valid\n"
        "matrix:\n"
        "4 0 0 0\n"
        "0 4 0 0\n"
        "0 0 4 0\n"
        "0 0 0 4\n"
    )
