import pytest

import ppav


def test_snf_and_pfaffian():
    u, d, v = ppav.snf([[4, 0], [0, 6]])
    assert d == [[2, 0], [0, 12]]
    assert ppav.pfaffian([[0, 0, 2, 1], [0, 0, 1, 2], [-2, -1, 0, 0], [-1, -2, 0, 0]]) in (3, -3)
    assert ppav.determinant([[2, 1], [1, 2]]) == 3


def test_big_integers_survive():
    big = 7**60
    assert ppav.determinant([[big]]) == big


def test_xi_type_and_kernel():
    for g in range(1, 5):
        p = ppav.xi(g)
        assert p.type() == [1] * (g - 1) + [g + 1]
        assert p.kernel_order() == (g + 1) ** 2
    assert ppav.theta(3).self_intersection() == 6
    assert ppav.xi(1).box(ppav.xi(2)).kernel_order() == 36


def test_examples():
    group, pol = ppav.example_b(3)
    assert group.order == 24
    assert group.preserves(pol)
    assert group.pseudoreflection_generated()[0]
    assert group.fixed_dim() == 0
    c, xc = ppav.example_c()
    assert c.order == 16
    assert c.ns_rank() == 1
    a, theta2 = ppav.example_a(2, 2)
    assert not a.fixes_kernel(theta2.scale(2))


def test_standard_construction():
    a = ppav.build_standard([2, 3], 1)
    report = a.verify()
    assert report["ok"]
    assert abs(int(report["pfaffian"])) == 1
    assert [int(x) for x in a.divisors] == [12]
    assert ppav.pfaffian(a.form) in (1, -1)


def test_jacobian():
    assert ppav.rh_residual(2, 1, 2) == 2
    assert ppav.genus_bound()["g_max"] == 3
    survivors = [(c["g"], c["g_prime"]) for c in ppav.jacobian_cases()["cases"] if c["status"] == "survives"]
    assert survivors == [(3, 2), (2, 1)]


def test_checks():
    assert "lemma-xi-type" in ppav.check_ids()
    result = ppav.run_check("lemma-xi-type", gmax=3)
    assert result["status"] == "pass"


def test_errors_carry_kind():
    with pytest.raises(ppav.PpavError) as info:
        ppav.PolarizedTorus("Z", 1, [[0, 1], [1, 0]])
    assert info.value.kind == "NotAlternating"
    with pytest.raises(ppav.PpavError) as info:
        ppav.run_check("no-such-check")
    assert info.value.kind == "UnknownCheck"
