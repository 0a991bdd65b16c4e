import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import instances
from socstable.altered import AlreadyPromoted, altered_order, init_altered, promote
from socstable.generators import fig1, tight
from socstable.model import make_instance


def test_init_fig1():
    state = init_altered(fig1())
    assert state.t_sets == {"w1": ("m1",), "w2": ("m2",)}
    assert state.tails == {"w1": (), "w2": ("m1",)}
    assert altered_order(state, "w2") == ("m2", "m1")
    assert not any(state.second_chance.values())


def test_init_tight():
    state = init_altered(tight())
    assert altered_order(state, "w1") == ("m1", "m2")
    assert altered_order(state, "w2") == ("m1",)
    assert altered_order(state, "w3") == ("m2", "m3")


def test_no_edges_keeps_true_order():
    inst = tight().with_edges([])
    state = init_altered(inst)
    assert all(t == () for t in state.t_sets.values())
    assert state.orders() == {w: inst.women_prefs[w] for w in inst.women}


def test_edges_to_unacceptable_men_are_ignored():
    inst = make_instance(["m1", "m2"], ["w"], {"m1": ["w"], "m2": ["w"]}, {"w": ["m1"]},
                         [("m2", "w")])
    assert altered_order(init_altered(inst), "w") == ("m1",)


def test_promote_tight_m3():
    inst = tight()
    state = promote(inst, init_altered(inst), "m3")
    assert state.t_sets["w3"] == ("m2", "m3")
    assert state.second_chance["m3"]
    with pytest.raises(AlreadyPromoted):
        promote(inst, state, "m3")


def test_promote_fig1_m2_is_a_no_op_on_orders():
    inst = fig1()
    before = init_altered(inst)
    after = promote(inst, before, "m2")
    assert after.orders() == before.orders()
    assert after.second_chance["m2"]


def test_promote_man_nobody_accepts():
    inst = make_instance(["m1", "m2"], ["w"], {"m2": ["w"]}, {"w": ["m1"]})
    before = init_altered(inst)
    after = promote(inst, before, "m2")
    assert after.t_sets == before.t_sets and after.tails == before.tails


def test_promote_inserts_at_true_rank():
    # w ranks m1 > m2 > m3 > m4; only m4 is a friend
    inst = make_instance(["m1", "m2", "m3", "m4"], ["w"], {},
                         {"w": ["m1", "m2", "m3", "m4"]}, [("m4", "w")])
    s = init_altered(inst)
    assert altered_order(s, "w") == ("m4", "m1", "m2", "m3")
    s = promote(inst, s, "m2")
    assert s.t_sets["w"] == ("m2", "m4")
    assert altered_order(s, "w") == ("m2", "m4", "m1", "m3")


@settings(max_examples=200, deadline=None)
@given(instances(max_men=4, max_women=3), st.data())
def test_prefix_invariants_under_promotion(inst, data):
    state = init_altered(inst)
    promoted: set[str] = set()
    order_of_promotion = data.draw(st.permutations(list(inst.men)))
    steps = data.draw(st.integers(0, len(order_of_promotion)))
    for m in order_of_promotion[:steps]:
        previous = {w: set(t) for w, t in state.t_sets.items()}
        state = promote(inst, state, m)
        promoted.add(m)
        for w in inst.women:
            assert previous[w] <= set(state.t_sets[w])
    for w in inst.women:
        true = list(inst.women_prefs[w])
        head, tail = state.t_sets[w], state.tails[w]
        assert sorted(head + tail) == sorted(true)
        assert not set(head) & set(tail)
        assert list(head) == sorted(head, key=true.index)
        assert list(tail) == sorted(tail, key=true.index)
        nbrs = inst.women_neighbors[w]
        assert set(head) == (nbrs | promoted) & set(true)
        order = altered_order(state, w)
        for i, a in enumerate(order):
            for b in order[i + 1:]:
                same_region = (a in head) == (b in head)
                if same_region:
                    assert true.index(a) < true.index(b)
                else:
                    assert a in head
