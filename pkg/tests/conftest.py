"""Shared fixtures; the expensive computations run once per session."""

import time

import pytest

import m23rep as m
from m23rep import reports


@pytest.fixture(scope="session")
def sub():
    return m.DEFAULT_SUBGROUP


@pytest.fixture(scope="session")
def perms():
    """(f, g, h): the full 23-cycle, the four 5-cycles, the 24-point involution."""
    return reports.standard_permutations()


@pytest.fixture(scope="session")
def matrices(sub):
    return reports.generator_matrices(sub)


@pytest.fixture(scope="session")
def closure(matrices):
    """Full matrix closure of <f, g> plus the wall-clock seconds it took."""
    started = time.perf_counter()
    result = m.bfs_closure([matrices["matrix-fA"], matrices["matrix-gA"]])
    return result, time.perf_counter() - started


@pytest.fixture(scope="session")
def permutation_order(perms):
    """Schreier-Sims order of <f, g> plus the wall-clock seconds it took."""
    f, g, _ = perms
    started = time.perf_counter()
    count = m.group_order([f, g])
    return count, time.perf_counter() - started
