import random
from pathlib import Path

import pytest

from gridcodes.code import parse_pattern
from gridcodes.grid import GridKind, ball
from gridcodes.localver import (
    STATEMENT_NAMES,
    max_pairs,
    naive_enumerate,
    run_statement,
    window_config,
)

DATA = Path(__file__).parent / "data"

VALID_PATTERNS = (
    "square_all",
    "square_even",
    "square_t10",
    "square_t12",
    "hex_all",
    "hex_rows",
    "hex_t10",
    "hex_t12",
)


def load_pattern(name):
    return parse_pattern((DATA / f"{name}.pattern").read_text())


@pytest.fixture(scope="session")
def corpus():
    """All frozen valid codes as {name: (code, r)}."""
    return {name: load_pattern(name) for name in VALID_PATTERNS}


@pytest.fixture(scope="session")
def square_corpus(corpus):
    return {k: v for k, v in corpus.items() if v[0].kind is GridKind.SQUARE}


@pytest.fixture(scope="session")
def hex_corpus(corpus):
    return {k: v for k, v in corpus.items() if v[0].kind is GridKind.HEX}


@pytest.fixture(scope="session")
def lemma_certs():
    """Every verification statement, run once per session."""
    return {name: run_statement(name) for name in STATEMENT_NAMES}


@pytest.fixture(scope="session")
def fact_results():
    """The 10^4-configuration fact suite, run once per session."""
    from fact_suite import run_fact_suite

    return run_fact_suite(total=10_000)


def _random_instance(kind, seed, n_fix):
    rng = random.Random(seed)
    cells = ball(kind, (0, 0), 4).members
    candidates = [v for v in cells if v != (0, 0)]
    rng.shuffle(candidates)
    fixed1, fixed0 = [], []
    for v in candidates[:n_fix]:
        (fixed1 if rng.random() < 0.3 else fixed0).append(v)
    return window_config(kind, 2, fixed1, fixed0)


@pytest.fixture(scope="session")
def oracle_instances():
    """Randomly fixed full-radius windows solved by both engines.

    Each entry is (config, pruned result, naive result).  Seeds whose
    fixations admit no lawful completion are skipped, after checking that
    both engines agree on the inconsistency.
    """
    cases = []
    for kind, n_fix, want, seed_base in (
        (GridKind.HEX, 12, 12, 100),
        (GridKind.SQUARE, 23, 10, 500),
    ):
        seed = seed_base
        found = 0
        while found < want:
            cfg = _random_instance(kind, seed, n_fix)
            seed += 1
            try:
                res = max_pairs(cfg, symmetry=False)
            except ValueError:
                inconsistent = False
                try:
                    naive_enumerate(cfg, 4)
                except ValueError:
                    inconsistent = True
                assert inconsistent, "engines disagree on an unsatisfiable fixation"
                continue
            cases.append((cfg, res, naive_enumerate(cfg, 4)))
            found += 1
    return cases
