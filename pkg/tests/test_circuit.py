import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dyncore.circuit import (
    DegreeCapViolation, Journal, Label, MonotoneCircuit, WouldCreateCycle,
    apply_wire_op, expand_degrees, format_circuit, oracle_evaluate,
    parse_circuit, random_circuit, random_wire_op,
)
from dyncore.graph import AlreadyPresent, NotPresent


def small(label_in, out_label=Label.OR):
    c = MonotoneCircuit()
    a = c.add_gate(label_in)
    o = c.add_gate(out_label)
    c.set_output(o)
    c.insert_wire(a, o)
    return c


def test_one_into_or():
    assert small(Label.ONE).query_value() == 1
    assert small(Label.ZERO).query_value() == 0


def test_and_with_single_input_is_zero():
    c = small(Label.ONE, Label.AND)
    assert c.evaluate().value[1] == 0


def test_empty_or_is_zero():
    c = MonotoneCircuit()
    c.set_output(c.add_gate(Label.OR))
    assert c.query_value() == 0


def test_caps_and_errors():
    c = MonotoneCircuit()
    z = c.add_gate(Label.ZERO)
    one = c.add_gate(Label.ONE)
    g1 = c.add_gate(Label.OR)
    g2 = c.add_gate(Label.OR)
    with pytest.raises(DegreeCapViolation):
        c.insert_wire(one, z)
    c.insert_wire(g1, g2)
    with pytest.raises(WouldCreateCycle):
        c.insert_wire(g2, g1)
    with pytest.raises(AlreadyPresent):
        c.insert_wire(g1, g2)
    before = c.snapshot()
    c.insert_wire(one, g1)
    c.delete_wire(one, g1)
    assert c.snapshot() == before
    with pytest.raises(NotPresent):
        c.delete_wire(one, g1)
    c.insert_wire(one, g1)
    with pytest.raises(DegreeCapViolation):
        c.insert_wire(one, g2)  # ONE has out-degree 1


def test_only_path_deleted_flips_answer():
    c = MonotoneCircuit()
    one = c.add_gate(Label.ONE)
    mid = c.add_gate(Label.OR)
    out = c.add_gate(Label.OR)
    c.set_output(out)
    c.insert_wire(one, mid)
    c.insert_wire(mid, out)
    assert c.query_value() == 1
    c.delete_wire(one, mid)
    assert c.query_value() == 0


def test_random_matches_oracle(rng):
    for _ in range(50):
        c = random_circuit(rng, 100)
        c.check_invariants()
        assert c.evaluate().value == oracle_evaluate(c)


@pytest.mark.parametrize("incremental", [False, True])
def test_dynamic_trace(rng, incremental):
    c = random_circuit(rng, 60)
    c.incremental = incremental
    for _ in range(1000):
        op = random_wire_op(rng, c)
        apply_wire_op(c, op)
        assert c.query_value() == oracle_evaluate(c)[c.output]
    assert c.evaluate().value == oracle_evaluate(c)


def test_monotonicity(rng):
    for _ in range(20):
        c = random_circuit(rng, 50)
        for _ in range(40):
            before = c.evaluate().value
            op = random_wire_op(rng, c)
            apply_wire_op(c, op)
            after = c.evaluate().value
            if op[0] == "+":
                assert all(after[g] >= before[g] for g in before)
            else:
                assert all(after[g] <= before[g] for g in before)


def test_journal_rollback(rng):
    c = random_circuit(rng, 40)
    snap = c.snapshot()
    j = Journal()
    for _ in range(30):
        op = random_wire_op(rng, c)
        (j.insert if op[0] == "+" else j.delete)(c, op[1], op[2])
    j.rollback(c)
    assert c.snapshot() == snap


def test_text_roundtrip(rng):
    c = random_circuit(rng, 30)
    d = parse_circuit(format_circuit(c).splitlines())
    assert d.snapshot() == c.snapshot()
    with pytest.raises(ValueError, match="line 2"):
        parse_circuit(["gate 0 ONE", "gate 1 XOR"])


# -- degree expansion ------------------------------------------------------

def test_expansion_identity_for_small_degrees():
    t = MonotoneCircuit(bounded=False)
    g = t.add_gate(Label.AND)
    ex, emap = expand_degrees(t, {g: 2}, {g: 1})
    assert ex.size == 1
    assert emap.in_slots[g] == [g, g] and emap.out_slots[g] == [g]


def exhaustive_check(label, din, dout):
    t = MonotoneCircuit(bounded=False)
    g = t.add_gate(label)
    ex, emap = expand_degrees(t, {g: din}, {g: dout})
    ex.check_invariants()
    assert len(emap.in_slots[g]) == din and len(emap.out_slots[g]) == dout
    # size blowup: d_in - 1 gates in the input tree, d_out - 2 in the output tree
    assert ex.size <= 1 + max(din - 1, 0) + max(dout - 2, 0)
    ones, sinks = [], []
    for s in emap.in_slots[g]:
        x = ex.add_gate(Label.OR)
        ex.insert_wire(x, s)
        ones.append(x)
    for s in emap.out_slots[g]:
        y = ex.add_gate(Label.OR)
        ex.insert_wire(s, y)
        sinks.append(y)
    fn = all if label is Label.AND else any
    for bits in itertools.product([0, 1], repeat=din):
        c = ex.copy()
        for x, b in zip(ones, bits):
            if b:
                src = c.add_gate(Label.ONE)
                c.insert_wire(src, x)
        vals = c.evaluate().value
        want = int(fn(bits))
        assert all(vals[y] == want for y in sinks), bits


def test_expand_or_fanin7():
    exhaustive_check(Label.OR, 7, 1)


def test_expand_and_fanin7_fanout5():
    exhaustive_check(Label.AND, 7, 5)


@given(st.sampled_from([Label.AND, Label.OR]), st.integers(2, 8), st.integers(0, 8))
@settings(max_examples=30)
def test_expansion_soundness(label, din, dout):
    exhaustive_check(label, din, dout)


def test_connect_disconnect():
    t = MonotoneCircuit(bounded=False)
    one = t.add_gate(Label.ONE)
    outs = [t.add_gate(Label.OR) for _ in range(3)]
    root = t.add_gate(Label.OR)
    t.set_output(root)
    fanin = {root: 3, **{o: 1 for o in outs}}
    fanout = {one: 3, **{o: 1 for o in outs}}
    ex, emap = expand_degrees(t, fanin, fanout)
    for o in outs:
        emap.connect(o, root)
    assert ex.query_value() == 0
    snap = ex.snapshot()
    emap.connect(one, outs[1])
    assert ex.query_value() == 1
    emap.disconnect(one, outs[1])
    assert ex.query_value() == 0
    assert ex.snapshot() == snap
    emap.connect(one, outs[2])
    assert ex.query_value() == 1
    with pytest.raises(AlreadyPresent):
        emap.connect(one, outs[2])
