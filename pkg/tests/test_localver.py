"""Local verification: statement certificates, oracle equivalence, soundness."""

import pytest

from gridcodes.code import Window
from gridcodes.grid import GridKind, ball, origin_symmetries
from gridcodes.localver import (
    apply_symmetry,
    check_window_laws,
    complete_scenario,
    config_from_code,
    max_pairs,
    naive_enumerate,
    run_statement,
    verify_bound,
    window_config,
    witness_count,
)
from gridcodes.pairs import interior_codewords, pair_report


class TestStatements:
    def test_hex_p6(self, lemma_certs):
        cert = lemma_certs["hex-p6"]
        assert cert.status == "pass"
        assert cert.max_found <= 6

    def test_square_p8_attained(self, lemma_certs):
        cert = lemma_certs["square-p8"]
        assert cert.status == "pass"
        assert cert.max_found == 8
        assert cert.extremal_count >= 1

    @pytest.mark.parametrize(
        "name,bound",
        [("adjacent-p6", 6), ("type1-p4", 4), ("type2-p6", 6), ("type3-p6", 6)],
    )
    def test_structural_bounds(self, lemma_certs, name, bound):
        cert = lemma_certs[name]
        assert cert.status == "pass"
        assert cert.claimed_bound == bound
        assert cert.max_found <= bound

    def test_claim_pair_all_scenarios_carry_p1(self, lemma_certs):
        cert = lemma_certs["claim-pair"]
        assert cert.status == "pass"
        assert cert.extremal_count >= 1
        for sc in cert.scenarios:
            assert sc.certified
            assert (0, 0) in sc.witnesses
            for leaf in sc.leaves:
                assert leaf.prop == "P1"
                type1 = [b for b in leaf.bounds if b.bound <= 4]
                assert type1 and type1[0].reason == "type1"

    def test_claim_pair_center_partner_is_forced_type1(self, lemma_certs):
        # In each scenario the center's own pair partner (the unique forced
        # codeword inside the radius-2 ball) is a type-1 codeword: both its
        # flanking cells are forced codewords too.
        cert = lemma_certs["claim-pair"]
        core = set(ball(GridKind.SQUARE, (0, 0), 2).members)
        for sc in cert.scenarios:
            forced = set(sc.forced_codewords)
            inner = sorted(forced & core - {(0, 0)})
            assert len(inner) == 1
            (px, py) = inner[0]
            flanks = (
                {(px + 1, py), (px - 1, py)}
                if py != 0
                else {(px, py + 1), (px, py - 1)}
            )
            assert flanks <= forced

    def test_claim_nopair_certificates(self, lemma_certs):
        cert = lemma_certs["claim-nopair"]
        assert cert.status == "pass"
        assert cert.case1_unsatisfiable is True
        assert cert.extremal_count >= 1
        for sc in cert.scenarios:
            assert sc.certified
            assert (0, 0) not in sc.witnesses
            assert {(3, 0), (-3, 0), (0, 3), (0, -3)} <= set(sc.forced_codewords)
            for leaf in sc.leaves:
                assert leaf.prop in ("P1", "P2")

    def test_certificates_are_deterministic(self, lemma_certs):
        for name in ("hex-p6", "type1-p4", "claim-pair"):
            assert run_statement(name) == lemma_certs[name]

    def test_budget_exhaustion_is_inconclusive(self):
        cert = verify_bound("square-p8", budget_limit=3)
        assert cert.status == "inconclusive"
        assert cert.max_found is None

    def test_square_extremal_classes_match_claim_scenarios(self, lemma_certs):
        # The eight-witness classes found by the plain maximum search must be
        # exactly the scenarios the two claim statements analyze.
        res = max_pairs(window_config(GridKind.SQUARE, 2))
        assert res.max_p == 8
        claim_sets = {
            sc.witnesses
            for name in ("claim-pair", "claim-nopair")
            for sc in lemma_certs[name].scenarios
        }
        assert set(res.extremal) == claim_sets


class TestWindowConfig:
    def test_cells_outside_window_rejected(self):
        with pytest.raises(ValueError):
            window_config(GridKind.SQUARE, 2, codewords=[(5, 0)])

    def test_inconsistent_fixations_rejected(self):
        with pytest.raises(ValueError):
            window_config(GridKind.SQUARE, 2, codewords=[(1, 0)], noncodewords=[(1, 0)])
        with pytest.raises(ValueError):
            window_config(GridKind.SQUARE, 2, noncodewords=[(0, 0)])

    def test_unsatisfiable_fixations_raise(self):
        # Everything except the center a non-codeword: neighbors of the
        # center get identical singleton identifying sets.
        cells = ball(GridKind.SQUARE, (0, 0), 4).members
        cfg = window_config(
            GridKind.SQUARE, 2, noncodewords=[v for v in cells if v != (0, 0)]
        )
        with pytest.raises(ValueError):
            max_pairs(cfg)


class TestSoundness:
    def test_corpus_windows_satisfy_laws(self, corpus):
        for name, (code, r) in corpus.items():
            window = Window(code.kind, 10)
            report = pair_report(code, r, window)
            interior = interior_codewords(code, r, window)
            checked = 0
            for c in interior:
                if code.kind is GridKind.HEX and (c[0] + c[1]) % 2:
                    continue
                cfg = config_from_code(code, r, c)
                assert check_window_laws(cfg), (name, c)
                assert witness_count(cfg) == report.p.get(c, 0), (name, c)
                checked += 1
            assert checked > 0, name

    def test_symmetries_preserve_laws_and_witness_count(self, corpus):
        for name, (code, r) in corpus.items():
            window = Window(code.kind, 10)
            interior = interior_codewords(code, r, window)
            centers = [
                c
                for c in interior
                if not (code.kind is GridKind.HEX and (c[0] + c[1]) % 2)
            ][:3]
            for c in centers:
                cfg = config_from_code(code, r, c)
                base_count = witness_count(cfg)
                for g in origin_symmetries(code.kind):
                    image = apply_symmetry(cfg, g)
                    assert check_window_laws(image), (name, c)
                    assert witness_count(image) == base_count, (name, c)


from conftest import _random_instance


def _consistent_instances(kind, n_fix, want, seed_base):
    out = []
    seed = seed_base
    while len(out) < want:
        cfg = _random_instance(kind, seed, n_fix)
        seed += 1
        try:
            res = max_pairs(cfg, symmetry=False)
        except ValueError:
            continue
        out.append((cfg, res))
    return out


class TestOracleEquivalence:
    def test_pruned_search_matches_naive_on_reduced_instances(self, oracle_instances):
        # At the full window radius the two engines solve identical
        # problems: maxima and extremal witness sets must agree exactly.
        assert len(oracle_instances) >= 20
        for _cfg, res, (naive_max, naive_sets) in oracle_instances:
            assert naive_max == res.max_p
            assert naive_sets == res.extremal

    def test_reduced_window_is_optimistic(self):
        for kind, seed_base in ((GridKind.HEX, 900), (GridKind.SQUARE, 950)):
            n_fix = 6 if kind is GridKind.HEX else 16
            for cfg, res in _consistent_instances(kind, n_fix, 3, seed_base):
                naive_max, _sets = naive_enumerate(cfg, 3)
                assert naive_max >= res.max_p

    def test_fully_decided_window_counts_directly(self, corpus):
        code, r = corpus["square_t10"]
        window = Window(code.kind, 10)
        centers = interior_codewords(code, r, window)[:3]
        for c in centers:
            cfg = config_from_code(code, r, c)
            res = max_pairs(cfg, symmetry=False)
            direct = witness_count(cfg)
            assert res.max_p == direct
            naive_max, naive_sets = naive_enumerate(cfg, 4)
            assert naive_max == direct
            assert len(naive_sets) == 1


class TestMonotonicity:
    def test_extra_noncodeword_never_raises_max(self):
        base_cfg = window_config(GridKind.HEX, 2)
        base = max_pairs(base_cfg)
        for v in ((1, 0), (2, 0), (1, 1)):
            restricted = window_config(GridKind.HEX, 2, noncodewords=[v])
            res = max_pairs(restricted)
            assert res.max_p <= base.max_p


class TestCompleteScenario:
    def test_exact_completions_realize_the_witness_set(self):
        import random

        rng = random.Random(42)
        for kind in (GridKind.SQUARE, GridKind.HEX):
            core = ball(kind, (0, 0), 2).members
            done = 0
            attempts = 0
            while done < 15 and attempts < 200:
                attempts += 1
                S = rng.sample(core, rng.randrange(1, 6))
                cfg = complete_scenario(window_config(kind, 2), S, exact=True)
                if cfg is None:
                    continue
                assert check_window_laws(cfg)
                assert witness_count(cfg) == len(S)
                done += 1
            assert done == 15

    def test_superset_completions_cover_the_witness_set(self):
        cfg = complete_scenario(window_config(GridKind.SQUARE, 2), [(1, 0), (0, 1)])
        assert cfg is not None
        assert check_window_laws(cfg)
        assert witness_count(cfg) >= 2

    def test_unsatisfiable_scenario_returns_none(self):
        # All thirteen core vertices can never witness simultaneously.
        core = ball(GridKind.SQUARE, (0, 0), 2).members
        assert complete_scenario(window_config(GridKind.SQUARE, 2), core) is None


class TestNaiveGuard:
    def test_too_many_free_cells_rejected(self):
        cfg = window_config(GridKind.SQUARE, 2)
        with pytest.raises(ValueError):
            naive_enumerate(cfg, 4)

    def test_radius_bounds_checked(self):
        cfg = window_config(GridKind.SQUARE, 2)
        with pytest.raises(ValueError):
            naive_enumerate(cfg, 1)
        with pytest.raises(ValueError):
            naive_enumerate(cfg, 5)
