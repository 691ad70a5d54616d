"""Cycle detection: exactness against a visited-set oracle, budget contracts."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perminv import AuditedArray, limited_tortoise_and_hare, tortoise_and_hare
from support import random_functional_graph, rho_oracle


class TestTortoiseAndHare:
    def test_spec_examples(self):
        assert tortoise_and_hare(AuditedArray([2, 3, 4, 2]), 1) == (3, 1)
        assert tortoise_and_hare(AuditedArray([1, 2, 3]), 1) == (1, 0)
        assert tortoise_and_hare(AuditedArray([2, 3, 1]), 2) == (3, 0)

    def test_read_only(self):
        vals = [2, 3, 4, 2]
        a = AuditedArray(vals)
        tortoise_and_hare(a, 1)
        assert a.writes == 0 and a.tolist() == vals

    def test_exhaustive_tiny_graphs(self):
        # every out-degree-1 graph on up to 4 vertices, every start
        for n in range(1, 5):
            for vals in itertools.product(range(1, n + 1), repeat=n):
                a = AuditedArray(vals)
                for start in range(1, n + 1):
                    assert tuple(tortoise_and_hare(a, start)) == rho_oracle(vals, start)

    def test_random_graphs_every_start(self):
        for seed in range(300):
            vals = random_functional_graph(9, seed)
            a = AuditedArray(vals)
            for start in range(1, 10):
                assert tuple(tortoise_and_hare(a, start)) == rho_oracle(vals, start)

    @given(
        st.integers(2, 50).flatmap(
            lambda n: st.tuples(
                st.lists(st.integers(1, n), min_size=n, max_size=n),
                st.integers(1, n),
            )
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_agreement_property(self, graph_and_start):
        vals, start = graph_and_start
        assert tuple(tortoise_and_hare(AuditedArray(vals), start)) == rho_oracle(
            vals, start
        )


class TestLimitedTortoiseAndHare:
    def test_spec_examples(self):
        assert limited_tortoise_and_hare(AuditedArray([2, 3, 4, 2]), 1, 4) == (3, 1)
        cyc100 = list(range(2, 101)) + [1]
        assert limited_tortoise_and_hare(AuditedArray(cyc100), 1, 10) is None

    def test_max_zero_returns_none_for_free(self):
        a = AuditedArray([2, 1])
        assert limited_tortoise_and_hare(a, 1, 0) is None
        assert a.reads == 0

    def test_negative_max_rejected(self):
        with pytest.raises(ValueError):
            limited_tortoise_and_hare(AuditedArray([1]), 1, -1)

    def test_soundness_completeness_and_step_bound(self):
        # sound: non-None equals the unbounded walk; complete: within budget
        # it never answers None; cost: at most 6*max reads (the documented
        # bound; tight when tail and cycle both equal the meet step count).
        for seed in range(120):
            n = 40
            vals = random_functional_graph(n, seed)
            a = AuditedArray(vals)
            for start in (1, 7, n):
                want = rho_oracle(vals, start)
                d_plus_s = want[0] + want[1]
                for max_steps in range(0, 2 * n + 1):
                    r0 = a.reads
                    got = limited_tortoise_and_hare(a, start, max_steps)
                    used = a.reads - r0
                    assert used <= 6 * max_steps
                    if got is not None:
                        assert tuple(got) == want
                    if d_plus_s <= max_steps:
                        assert got is not None

    def test_six_max_is_tight(self):
        # tail length m into an m-cycle, queried at max=m: 3m meet reads,
        # 2m catch-up reads, m cycle reads.
        m = 9
        vals = list(range(2, 2 * m + 1)) + [m + 1]
        a = AuditedArray(vals)
        got = limited_tortoise_and_hare(a, 1, m)
        assert got == (m, m)
        assert a.reads == 6 * m

    @given(
        st.integers(2, 40).flatmap(
            lambda n: st.tuples(
                st.lists(st.integers(1, n), min_size=n, max_size=n),
                st.integers(1, n),
                st.integers(0, 80),
            )
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_bounded_contract_property(self, case):
        vals, start, max_steps = case
        a = AuditedArray(vals)
        want = rho_oracle(vals, start)
        got = limited_tortoise_and_hare(a, start, max_steps)
        if got is not None:
            assert tuple(got) == want
        if want[0] + want[1] <= max_steps:
            assert got is not None
