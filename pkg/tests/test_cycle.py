import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkmonoid.cycle import (
    Block,
    CycleError,
    _monotone,
    block_decompose,
    build_S,
    build_Sprime,
    enumerate_Sprime_rules,
    has_block_form,
    is_formp,
)
from hkmonoid.rewriting import all_words, check_local_confluence, find_matches, is_reduced, t_system


def kinds_at(sys, w, start, end):
    return {(m.kind, m.replacement) for m in find_matches(sys, w) if (m.start, m.end) == (start, end)}


# -- blocks ------------------------------------------------------------------------


def test_block_decompose_examples():
    assert block_decompose((1, 2, 3)) == [Block(1, 3)]
    assert block_decompose((1, 2, 3))[0].kind == "increasing"
    assert block_decompose((2, 3, 1)) == [Block(2, 3), Block(1, 1)]
    assert block_decompose(()) == []
    assert [b.kind for b in block_decompose((3, 2, 5))] == ["decreasing", "singleton"]


def test_is_formp_examples():
    assert is_formp((1, 2, 3, 4), 5)
    assert not is_formp((2, 3, 3), 4)
    assert is_formp((3, 2, 4, 3), 6)
    assert is_formp((), 3)


def test_is_formp_rejects_top_generator():
    with pytest.raises(CycleError):
        is_formp((1, 3), 3)


block_words = st.lists(st.integers(1, 6), max_size=9).map(tuple)


@given(block_words)
def test_blocks_reassemble_and_are_maximal(w):
    blocks = block_decompose(w)
    assert sum((b.letters() for b in blocks), ()) == w
    for a, b in zip(blocks, blocks[1:]):
        joined = a.letters() + b.letters()
        steps = {y - x for x, y in zip(joined, joined[1:])}
        assert not (len(steps) == 1 and steps <= {1, -1})


def test_greedy_blocks_decide_block_form_exhaustively():
    for w in all_words(6, 6):
        assert _monotone(block_decompose(w)) == has_block_form(w), w


@given(st.lists(st.integers(1, 9), max_size=12).map(tuple))
def test_greedy_blocks_decide_block_form(w):
    assert _monotone(block_decompose(w)) == has_block_form(w)


# -- matcher-backed systems ---------------------------------------------------------


def test_build_errors():
    for build in (build_S, build_Sprime, enumerate_Sprime_rules):
        with pytest.raises(CycleError):
            build(2)
    with pytest.raises(CycleError):
        enumerate_Sprime_rules(9)


def test_s_examples():
    assert ("S-3", (3, 5, 1)) in kinds_at(build_S(5), (5, 1, 3), 0, 3)
    assert ("S-4", (2, 3, 4)) in kinds_at(build_S(4), (2, 3, 4, 2), 0, 4)
    assert ("S-5", (1, 2, 3)) in kinds_at(build_S(4), (3, 1, 2, 3), 0, 4)


def test_s4_wraps_predecessor_of_first_generator():
    # for i = 1 the excluded neighbour is x_n, so 1 4 1 over n = 4 is not type 4 but 1 3 1 is
    s = build_S(4)
    assert not any(k == "S-4" for k, _ in kinds_at(s, (1, 4, 1), 0, 3))
    assert ("S-4", (1, 3)) in kinds_at(s, (1, 3, 1), 0, 3)


def test_s5_wraps_successor_of_last_generator():
    s = build_S(4)
    assert not any(k == "S-5" for k, _ in kinds_at(s, (4, 1, 4), 0, 3))
    assert ("S-5", (2, 4)) in kinds_at(s, (4, 2, 4), 0, 3)


def test_sprime_examples():
    found = kinds_at(build_Sprime(4), (1, 3, 4, 1), 0, 4)
    assert {"S'-5'", "S'-5''"} <= {k for k, _ in found}
    w7 = (2, 5, 4, 6, 5, 7, 1, 2)
    found = {k for k, _ in kinds_at(build_Sprime(7), w7, 0, len(w7))}
    assert "S'-5''" in found and "S'-5'" not in found
    assert kinds_at(build_Sprime(3), (1, 1), 0, 2) == {("S-1", (1,))}


# -- explicit rule list ------------------------------------------------------------


def test_rule_list_sizes():
    # counts obtained by enumeration and checked against the matcher below
    assert len(enumerate_Sprime_rules(3)) == 9
    assert len(enumerate_Sprime_rules(4)) == 40


def test_rule_sublists():
    r4 = enumerate_Sprime_rules(4)
    assert {(r.lead, r.replacement) for r in r4 if r.kind == "S-2"} == {((3, 1), (1, 3)), ((4, 2), (2, 4))}
    assert [r for r in enumerate_Sprime_rules(3) if r.kind == "S-3"] == []
    assert [r.lead for r in r4 if r.kind == "S-1"] == [(1, 1), (2, 2), (3, 3), (4, 4)]


@pytest.mark.parametrize("n, max_len", [(3, 8), (4, 7), (5, 6)])
def test_rule_list_equals_matcher(n, max_len):
    sp = build_Sprime(n)
    rules = enumerate_Sprime_rules(n)
    listed = {(r.kind, r.lead, r.replacement) for r in rules}
    leads = {r.lead for r in rules}
    # every listed rule is recognized by the matcher on its own leading term
    for r in rules:
        assert (r.kind, r.replacement) in kinds_at(sp, r.lead, 0, len(r.lead)), r
    for w in all_words(n, max_len):
        for m in find_matches(sp, w):
            assert (m.kind, w[m.start : m.end], m.replacement) in listed, (w, m)
        has_lead = any(w[i:j] in leads for i in range(len(w)) for j in range(i + 2, len(w) + 1))
        assert is_reduced(sp, w) == (not has_lead), w


def test_rule_list_is_sorted_and_decreasing():
    from hkmonoid.words import Cmp, GenOrder, deglex_compare

    order = GenOrder.identity(5)
    rules = enumerate_Sprime_rules(5)
    fam = ["S-1", "S-2", "S-3", "S'-4'", "S'-5'", "S'-5''"]
    keys = [(fam.index(r.kind), len(r.lead), r.lead) for r in rules]
    assert keys == sorted(keys)
    assert all(deglex_compare(r.replacement, r.lead, order) is Cmp.LESS for r in rules)


# -- relationships between systems ---------------------------------------------------


@pytest.mark.parametrize("n, max_len", [(3, 7), (4, 7), (5, 6)])
def test_rule_containment(n, max_len):
    s, sp, t = build_S(n), build_Sprime(n), t_system(build_S(n).graph)
    for w in all_words(n, max_len):
        s_matches = {(m.start, m.end, m.replacement) for m in find_matches(s, w)}
        for m in find_matches(sp, w):
            assert (m.start, m.end, m.replacement) in s_matches, (w, m)
        for start, end, _ in s_matches:
            assert not is_reduced(t, w[start:end]), (w, start, end)


@pytest.mark.parametrize("n, max_len", [(3, 8), (4, 7), (5, 7), (6, 6)])
def test_words_without_short_leads_have_block_form(n, max_len):
    # words avoiding x_n and all leading terms of types 1-3, 4' and 5' are monotone block products
    sp = build_Sprime(n).without("S'-5''")
    for w in itertools.chain.from_iterable(itertools.product(range(1, n), repeat=k) for k in range(max_len + 1)):
        if is_reduced(sp, w):
            assert is_formp(w, n), w


@pytest.mark.parametrize("n", [3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_sprime_locally_confluent(n):
    assert check_local_confluence(build_Sprime(n), 7).ok


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=14))))
def test_three_systems_agree_on_long_words(case):
    from hkmonoid.rewriting import normal_form

    n, w = case
    t = t_system(build_S(n).graph)
    nf = normal_form(t, w)
    assert normal_form(build_S(n), w) == nf
    assert normal_form(build_Sprime(n), w) == nf
