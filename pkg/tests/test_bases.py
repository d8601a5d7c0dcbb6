import pytest

from shapovalov.bases import (
    G_element,
    G_matrix,
    M_basis,
    N_matrix,
    binomial_divisibility_check,
    build_G_basis_r1,
    build_g_basis,
    c_coefficients,
    check_G_properties,
    check_g_basis_properties,
    formal_transition,
    g_element,
    g_generator,
    gm_coefficient_matrix,
    lead_coefficient_power,
    power_in_G,
    tower_coefficients,
    triangular_order,
    z_matrix,
)
from shapovalov.divisors import predicted_prime_power
from shapovalov.matrix import ExactMatrix
from shapovalov.partitions import Partition, d_p, enumerate_partitions
from shapovalov.snf import smith_normal_form
from shapovalov.symfunc import SymPoly, higher_homogeneous_product


def h(*terms):
    """h(((4,), 1), ((3, 1), 1)) -> SymPoly in the h basis."""
    deg = sum(terms[0][0])
    return SymPoly(deg, "h", {lam: c for lam, c in terms})


def test_c_coefficients():
    assert c_coefficients(3, 2) == {(3,): 1, (2, 1): 1, (1, 1, 1): 0}
    assert c_coefficients(2, 2) == {(2,): 1, (1, 1): 0}
    assert c_coefficients(6, 2)[Partition((4, 2))] == 1 == c_coefficients(3, 2)[Partition((2, 1))]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_c_coefficients_scale_by_p(p):
    for n in range(1, 8):
        small = c_coefficients(n, p)
        big = c_coefficients(p * n, p)
        for lam, c in small.items():
            assert big[lam.scaled(p)] == c


def test_binomial_divisibility():
    assert binomial_divisibility_check(4, 2).exceptions == [(2, 2)]
    assert binomial_divisibility_check(3, 2).exceptions == []
    assert binomial_divisibility_check(9, 3).exceptions == [(3, 3, 3)]
    for p in (2, 3, 5):
        for n in range(1, 11):
            assert binomial_divisibility_check(n, p).holds


def test_g_examples():
    assert g_generator(2, 1, 0, 1) == h(((1,), 1))
    assert g_generator(2, 1, 0, 2) == h(((2,), 1))
    assert g_generator(2, 1, 0, 4) == h(((4,), 1), ((3, 1), 1))


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_g_identities(p, r):
    checks = check_g_basis_properties(p, r, 9)
    assert all(checks.values()), checks
    fams = build_g_basis(p, r, 9)
    assert all(f.exact for f in fams.values())
    for l in range(1, 10):
        if l % p:
            assert g_generator(p, r, r, l) == g_generator(p, r, 0, l).scale(p ** r)
        assert tower_coefficients(p, r, l)[Partition((l,))] == 1


@pytest.mark.parametrize("p,r,i", [(2, 1, 0), (2, 2, 1), (3, 2, 0), (3, 3, 2)])
def test_transition_to_level_h_is_unitriangular(p, r, i):
    # solve M(g^(i,r), h^(i)) from plain-h expansions and compare with the formal product
    for d in range(1, 7):
        labels = enumerate_partitions(d)
        G = ExactMatrix([g_element(p, r, i, lam).vector(labels) for lam in labels], labels, labels)
        H = ExactMatrix([higher_homogeneous_product(lam, i, p).vector(labels) for lam in labels], labels, labels)
        M = G @ H.inverse()
        assert M == formal_transition(p, r - i, d)
        assert M.is_upper_triangular() and all(x == 1 for x in M.diagonal_entries())


def test_g_beyond_proven_regime_is_recorded():
    fams = build_g_basis(2, 3, 6)
    assert set(fams) == {0, 1, 2, 3}
    with pytest.raises(ValueError):
        build_g_basis(4, 1, 3)


def test_G_examples():
    assert G_element(2, (1,)) == h(((1,), 1))
    assert G_element(2, (1, 1)) == h(((2,), 1))
    assert G_element(2, (2,)) == h(((2,), 2), ((1, 1), 1))
    assert G_element(2, (1, 1, 1)) == h(((2, 1), 1))
    # multiplicities below p and parts prime to p: plain product of generators
    assert G_element(5, (3, 2, 2, 1)) == g_element(5, 1, 0, (3, 2, 2, 1))
    fam = build_G_basis_r1(3, 4)
    assert len(fam.expansions) == sum(len(enumerate_partitions(d)) for d in range(1, 5))


@pytest.mark.parametrize("p", [2, 3])
def test_G_is_a_basis(p):
    for d in range(1, 7):
        assert G_matrix(p, d).determinant() != 0


def test_M_basis():
    assert M_basis(2, 1, 1).expansions[Partition((1,))] == SymPoly(1, "m", {(1,): 1})
    for d in range(1, 6):
        assert z_matrix(3, 1, d) == z_matrix(3, 2, d)
    for p, r in [(2, 1), (2, 2), (3, 2)]:
        for d in range(1, 7):
            assert abs(M_basis(p, r, d).matrix(d).determinant()) == 1
    with pytest.raises(ValueError):
        M_basis(2, 3, 2)


def test_gm_matrix_example():
    W = gm_coefficient_matrix(2, 2)
    assert [abs(x) for x in W.diagonal_entries()] == [1, 8]


@pytest.mark.parametrize("p", [2, 3])
def test_gm_matrix_properties(p):
    checks = check_G_properties(p, 5)
    assert all(checks.values()), checks
    for d in range(1, 6):
        W = gm_coefficient_matrix(p, d)
        assert triangular_order(W) == list(range(len(W.rows)))
        assert smith_normal_form(W).invariant_factors == predicted_prime_power(p, 1, d).as_chain()
        assert abs(N_matrix(p, d).determinant()) == 1


def _is_p_power_times(k, n, p):
    if k % n:
        return False
    k //= n
    while k % p == 0:
        k //= p
    return k == 1


@pytest.mark.parametrize("p,ns", [(2, (1, 3)), (3, (1, 2))])
def test_lead_coefficients(p, ns):
    for n in ns:
        for i in (1, 2):
            for j in range(0, i + 1):
                coords = lead_coefficient_power(p, n, i, j)
                assert abs(coords[Partition((n,) * p ** i)]) == p ** ((p ** j - 1) // (p - 1))
                assert all(_is_p_power_times(k, n, p) for lam in coords for k in lam)


@pytest.mark.parametrize("p", [2, 3])
def test_power_of_generator_lead(p):
    for m in range(1, 10):
        coords = power_in_G(p, 1, m)
        assert abs(coords[Partition((1,) * m)]) == p ** d_p(m, p)
