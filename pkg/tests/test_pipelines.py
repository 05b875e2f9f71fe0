import random

import pytest

from dyncore.gadgets.dynxor import IndexOutOfRange, compile_dynxor
from dyncore.gadgets.ksat import (
    KsatInstance, TooLarge, brute_force_sat, format_dimacs, parse_dimacs, random_kcnf,
)
from dyncore.gadgets.oumv import (
    OuMvInstance, compile_oumv_kcore_instance, direct_uMv, format_matrix, parse_matrix,
)
from dyncore.graph import k_core, static_core_decomposition


def rand_matrix(rng, n, p=0.2):
    return [[int(rng.random() < p) for _ in range(n)] for _ in range(n)]


def rand_vec(rng, n, p=0.3):
    return [int(rng.random() < p) for _ in range(n)]


# -- OuMv -----------------------------------------------------------------

def lr_count(inst):
    return len(inst.lr_wires())


def test_oumv_structure():
    assert lr_count(OuMvInstance([[0] * 3 for _ in range(3)])) == 0
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert lr_count(OuMvInstance(eye)) == 3


def test_oumv_basic_queries():
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    inst = OuMvInstance(eye)
    assert inst.query([0] * 4, [1] * 4) == 0
    assert inst.query([1] * 4, [1] * 4) == 1


@pytest.mark.parametrize("mode", ["dynamic", "incremental", "decremental"])
def test_oumv_random(mode):
    rng = random.Random(11)
    M = rand_matrix(rng, 16)
    inst = OuMvInstance(M, mode)
    snap = inst.circuit.snapshot()
    for _ in range(50):
        u, v = rand_vec(rng, 16), rand_vec(rng, 16)
        assert inst.query(u, v) == direct_uMv(M, u, v)
        assert inst.circuit.snapshot() == snap


def test_oumv_gate_count_quadratic():
    rng = random.Random(2)
    for n in (4, 8, 16, 32):
        inst = OuMvInstance(rand_matrix(rng, n, 0.5))
        assert inst.circuit.size <= 4 * n * n + 8 * n


def test_matrix_text_roundtrip():
    M = rand_matrix(random.Random(1), 5)
    assert parse_matrix(format_matrix(M).splitlines()) == M
    with pytest.raises(ValueError):
        parse_matrix(["01", "1"])


def test_oumv_core_instance():
    rng = random.Random(4)
    seen = set()
    for _ in range(6):
        M = rand_matrix(rng, 6, 0.3)
        inst = compile_oumv_kcore_instance(M)
        assert inst.target.max_degree() <= 4
        for _ in range(10):
            u, v = rand_vec(rng, 6, 0.4), rand_vec(rng, 6, 0.4)
            want = direct_uMv(M, u, v)
            seen.add(want)
            inst.prepare(u, v)
            core = static_core_decomposition(inst.target)
            if want:
                assert core[inst.star] == 3
                assert k_core(inst.target, 3) == inst.live_gate_vertices()
            else:
                assert set(core.values()) == {2}
            inst.rollback()
            assert inst.query(u, v) == want
    assert seen == {0, 1}


# -- k-SAT ----------------------------------------------------------------

def test_ksat_empty_formula():
    inst = KsatInstance(4, [], 0.25)
    assert all(inst.stage(bits) == 0 for bits in [(0, 0, 0), (1, 1, 1)])
    assert inst.solve()


def test_ksat_single_clause_wiring():
    inst = KsatInstance(1, [(1,)], 0.25)
    assert inst.U == [1]
    wires = set(inst.template.wires())
    r0, r1 = inst.R  # assignments x1=0, x1=1
    assert (inst.L[0], r0) in wires
    assert (inst.L[0], r1) not in wires


def test_ksat_random_vs_brute_force():
    rng = random.Random(8)
    results = set()
    for _ in range(25):
        n = rng.randint(3, 10)
        clauses = random_kcnf(rng, n, rng.randint(1, 4 * n))
        inst = KsatInstance(n, clauses, 0.25)
        want = brute_force_sat(n, clauses)
        snap = inst.circuit.snapshot()
        assert inst.solve() == want
        assert inst.circuit.snapshot() == snap
        results.add(want)
    assert results == {True, False}


def test_ksat_cap_and_dimacs():
    with pytest.raises(TooLarge):
        KsatInstance(40, [], 0.45, cap=2 ** 10)
    text = format_dimacs(3, [(1, -2), (3,)])
    assert parse_dimacs(("c hi\n" + text).splitlines()) == (3, [(1, -2), (3,)])


# -- DynXor ---------------------------------------------------------------

def prefix_xor(x, i):
    r = 0
    for b in x[:i]:
        r ^= b
    return r


def test_dynxor_small():
    inst = compile_dynxor([0, 0, 0])
    vals = inst.circuit.evaluate().value
    assert [vals[g] for g in inst.g[1:]] == [0, 0, 0]
    assert [vals[g] for g in inst.gbar[1:]] == [1, 1, 1]
    assert compile_dynxor([1]).query(1) == 1


def test_dynxor_wiring_idempotent():
    inst = compile_dynxor([0, 1, 1])
    snap = inst.circuit.snapshot()
    inst.update(2, 1)
    assert inst.circuit.snapshot() == snap
    inst.update(2, 0)
    inst.update(2, 1)
    assert inst.circuit.snapshot() == snap
    with pytest.raises(IndexOutOfRange):
        inst.query(4)


def test_dynxor_random():
    rng = random.Random(9)
    x = [rng.randint(0, 1) for _ in range(64)]
    inst = compile_dynxor(x)
    vals = inst.circuit.evaluate().value
    for i in range(1, 65):
        assert vals[inst.g[i]] == prefix_xor(x, i)
        assert vals[inst.gbar[i]] == 1 - prefix_xor(x, i)
    for _ in range(2000):
        i = rng.randint(1, 64)
        if rng.random() < 0.5:
            b = rng.randint(0, 1)
            x[i - 1] = b
            inst.update(i, b)
        else:
            assert inst.query(i) == prefix_xor(x, i)
