"""Shared fixtures: corpus surfaces and their (expensive) arrangements are
built once per session."""
import pytest

from extend3 import samples
from extend3.arrangement import build_arrangement, strata


@pytest.fixture(scope="session")
def octahedron_arr():
    return build_arrangement(samples.octahedron())


@pytest.fixture(scope="session")
def torus_arr():
    return build_arrangement(samples.box_torus())


@pytest.fixture(scope="session")
def two_sheet_arr():
    return build_arrangement(samples.two_sheet_sphere())


@pytest.fixture(scope="session")
def slabs_arr():
    return build_arrangement(samples.three_slabs())


@pytest.fixture(scope="session")
def two_sheet_strata(two_sheet_arr):
    return strata(two_sheet_arr)


@pytest.fixture(scope="session")
def slabs_strata(slabs_arr):
    return strata(slabs_arr)
