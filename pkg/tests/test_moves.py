from __future__ import annotations

import random
from collections import defaultdict

import pytest

from segwiener.enumeration import all_trees
from segwiener.generators import quasi_caterpillar, starlike
from segwiener.moves import (
    InvalidDescriptorError,
    Reattach,
    Slide,
    Switch,
    apply_reattach,
    apply_slide,
    apply_switch,
    hill_climb,
    neighbors,
    reattach_moves,
    slide_move,
    slide_moves,
    switch_moves,
)
from segwiener.steiner import sw_k, sw_k_bruteforce
from segwiener.trees import (
    Tree,
    canonical_code,
    is_isomorphic,
    is_quasi_caterpillar,
    segment_sequence,
)
from segwiener.verify import random_switch_instance

from .conftest import path_tree


class TestSwitch:
    def test_strict_instance_increases(self):
        rng = random.Random(5)
        for _ in range(20):
            tree, move = random_switch_instance(rng, relation="strict")
            for k in (2, 3, 4):
                assert apply_switch(tree, move, k).delta > 0

    def test_mirrored_instance_decreases(self):
        rng = random.Random(6)
        for _ in range(20):
            tree, move = random_switch_instance(rng, relation="mirrored")
            for k in (2, 3, 4):
                assert apply_switch(tree, move, k).delta < 0

    def test_isomorphic_components_give_zero(self):
        rng = random.Random(7)
        for _ in range(20):
            tree, move = random_switch_instance(rng, relation="equal")
            out = apply_switch(tree, move, 3)
            assert out.delta == 0
            assert is_isomorphic(out.tree, tree)

    def test_delta_matches_brute_force(self):
        rng = random.Random(8)
        found = 0
        while found < 10:
            tree, move = random_switch_instance(rng)
            if tree.n > 14:
                continue
            found += 1
            out = apply_switch(tree, move, 3)
            assert out.delta == sw_k_bruteforce(out.tree, 3) - sw_k_bruteforce(tree, 3)

    def test_rejects_non_branch_endpoint(self):
        t = path_tree(6)
        with pytest.raises(InvalidDescriptorError):
            apply_switch(t, Switch(w0=0, ws=5, a_root=1, b_root=4), 2)

    def test_rejects_segment_neighbour_as_root(self, fig1_bottom):
        move = next(switch_moves(fig1_bottom))
        path = fig1_bottom.path(move.w0, move.ws)
        bad = Switch(w0=move.w0, ws=move.ws, a_root=path[1], b_root=move.b_root)
        with pytest.raises(InvalidDescriptorError):
            apply_switch(fig1_bottom, bad, 2)


class TestSlide:
    def test_symmetric_slide_is_identity(self):
        # pendant hanging exactly in the middle: mirror equals source
        t = quasi_caterpillar((2, 2), [(1, 3)])
        path = t.path(0, 4)
        move = slide_move(t, path)
        out = apply_slide(t, move, 2)
        assert out.delta == 0 and out.tree is t

    def test_composite_theorem2_configuration(self):
        # anchored path with a branch anchor, X and Y hanging inside, p < p';
        # sliding then switching strictly increases the index
        edges = [(i, i + 1) for i in range(4)]
        edges += [(0, 5), (0, 6)]  # branch anchor
        edges += [(1, 7), (7, 8), (7, 9)]  # X at distance 1
        edges += [(2, 10), (10, 11)]  # Y at distance 2
        t = Tree.from_edges(edges, n=12)
        move = slide_move(t, tuple(range(5)))
        for k in (2, 3, 4):
            slid = apply_slide(t, move, k)
            assert slid.delta >= 0
            switched = apply_switch(slid.tree, Switch(w0=2, ws=3, a_root=7, b_root=10), k)
            assert switched.delta > 0
            assert slid.delta + switched.delta > 0
            assert segment_sequence(switched.tree) == segment_sequence(t)

    def test_pendant_slide_toward_light_side_increases(self):
        # backbone (1,3,1,1) with a heavy right side; sliding the middle
        # pendant toward the light side increases the index
        t = quasi_caterpillar((1, 3, 1, 1), [(1, 1), (2, 1), (3, 4)])
        move = slide_move(t, t.path(1, 5))
        for k in (2, 3, 4):
            assert apply_slide(t, move, k).delta > 0

    def test_slide_rejects_degree_two_anchor(self):
        t = quasi_caterpillar((2, 2), [(1, 1)])
        with pytest.raises(InvalidDescriptorError):
            apply_slide(t, slide_move(t, t.path(1, 4)), 2)

    def test_slide_rejects_bare_path(self):
        t = path_tree(5)
        with pytest.raises(InvalidDescriptorError):
            slide_move(t, t.path(0, 4))

    def test_slide_rejects_mismatched_endpoints(self):
        t = quasi_caterpillar((1, 3), [(1, 2)])
        move = slide_move(t, t.path(0, 4))
        bad = Slide(path=move.path, source=move.source, dest=move.source)
        with pytest.raises(InvalidDescriptorError):
            apply_slide(t, bad, 2)


class TestReattach:
    def test_always_negative_on_samples(self):
        rng = random.Random(9)
        for _ in range(20):
            tree, move = random_switch_instance(rng)
            for u1, u2 in ((move.w0, move.ws), (move.ws, move.w0)):
                seg_next = tree.path(u1, u2)[1]
                moved = tuple(sorted(w for w in tree.adj[u1] if w != seg_next))
                for k in (2, 3, 4):
                    out = apply_reattach(tree, Reattach(u1=u1, u2=u2, moved=moved), k)
                    assert out.delta < 0

    def test_fig1_bottom_collapse(self, fig1_bottom):
        move = next(reattach_moves(fig1_bottom))
        out = apply_reattach(fig1_bottom, move, 2)
        assert out.delta < 0
        assert segment_sequence(out.tree) == segment_sequence(fig1_bottom)

    def test_rejects_leaf_target(self, k13):
        with pytest.raises(InvalidDescriptorError):
            apply_reattach(k13, Reattach(u1=0, u2=1, moved=(2, 3)), 2)

    def test_rejects_partial_move_set(self, fig1_bottom):
        move = next(reattach_moves(fig1_bottom))
        bad = Reattach(u1=move.u1, u2=move.u2, moved=move.moved[:-1])
        with pytest.raises(InvalidDescriptorError):
            apply_reattach(fig1_bottom, bad, 2)


class TestNeighbors:
    def test_path_has_none(self):
        assert neighbors(path_tree(7), 2) == []

    def test_star_has_none(self, k13):
        assert neighbors(k13, 2) == []

    def test_fig1_bottom_counts_match_naive_enumerators(self, fig1_bottom):
        from .oracles import (
            reattach_descriptor_count,
            slide_descriptor_count,
            switch_descriptor_count,
        )

        outs = neighbors(fig1_bottom, 2)
        assert len(outs) > 0
        by_kind = defaultdict(int)
        for o in outs:
            by_kind[type(o.move).__name__] += 1
        assert by_kind["Switch"] == switch_descriptor_count(fig1_bottom)
        assert by_kind["Slide"] == slide_descriptor_count(fig1_bottom)
        assert by_kind["Reattach"] == reattach_descriptor_count(fig1_bottom)

    def test_descriptor_counts_match_naive_exhaustive(self):
        from .oracles import (
            reattach_descriptor_count,
            slide_descriptor_count,
            switch_descriptor_count,
        )

        for n in range(2, 9):
            for t in all_trees(n):
                assert sum(1 for _ in switch_moves(t)) == switch_descriptor_count(t)
                assert sum(1 for _ in slide_moves(t)) == slide_descriptor_count(t)
                assert sum(1 for _ in reattach_moves(t)) == reattach_descriptor_count(t)

    def test_closure_small(self):
        for n in range(2, 8):
            for t in all_trees(n):
                seq = segment_sequence(t)
                for o in neighbors(t, 2):
                    assert o.tree.n == n
                    assert segment_sequence(o.tree) == seq


class TestHillClimb:
    def test_starlike_is_a_minimize_fixed_point(self, fig1_top):
        res = hill_climb(fig1_top, 3, "minimize")
        assert res.steps == ()
        assert res.tree is fig1_top

    def test_minimize_reaches_the_starlike_tree_exhaustively(self):
        for n in range(2, 11):
            for t in all_trees(n):
                star_code = canonical_code(starlike(segment_sequence(t)))
                for k in (2, 3, 4):
                    if k > n:
                        continue
                    res = hill_climb(t, k, "minimize")
                    assert canonical_code(res.tree) == star_code

    def test_maximize_from_starlike_ends_at_quasi_caterpillar(self):
        for n in range(4, 11):
            for seq in [(n - 1,), (n - 3, 1, 1), (1,) * (n - 1)]:
                res = hill_climb(starlike(seq), 3, "maximize")
                assert is_quasi_caterpillar(res.tree)

    def test_deltas_strictly_monotone(self, fig1_bottom):
        res = hill_climb(fig1_bottom, 2, "maximize")
        assert all(o.delta > 0 for o in res.steps)
        res = hill_climb(fig1_bottom, 2, "minimize")
        assert all(o.delta < 0 for o in res.steps)

    def test_direction_validated(self, k13):
        with pytest.raises(ValueError):
            hill_climb(k13, 2, "sideways")

    def test_reach_fraction_reported(self):
        # how often steepest ascent lands on the global maximum is measured,
        # not asserted: the moves are not claimed to connect each class
        reached = total = 0
        for n in range(4, 9):
            per = defaultdict(list)
            for t in all_trees(n):
                per[segment_sequence(t)].append(t)
            for seq, ts in per.items():
                best = max(sw_k(t, 2) for t in ts)
                for t in ts:
                    res = hill_climb(t, 2, "maximize")
                    reached += sw_k(res.tree, 2) == best
                    total += 1
        fraction = reached / total
        print(f"\nmaximize reaches the global optimum from {reached}/{total} starts ({fraction:.3f})")
        assert 0.0 < fraction <= 1.0
