import pathlib
import typing as t

import pytest

import grassmann_calculus as calculus

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture()
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture()
def surface_setup() -> calculus.GrassSetup:
    # The projective bundle of a rank 2 bundle over a surface.
    return calculus.GrassSetup(2, 2, 1)


@pytest.fixture()
def surface_table(surface_setup: calculus.GrassSetup) -> calculus.GeneratorTable:
    return surface_setup.base_table()


@pytest.fixture()
def generic_table() -> calculus.GeneratorTable:
    return calculus.chern_table(3, 3)


@pytest.fixture()
def sample_callback() -> t.Callable[..., t.Any]:
    def sample_callback(*, r: int, partition: calculus.Partition) -> t.List[calculus.Identity]:
        return [
            calculus.Identity(
                "weight",
                calculus.utils.rational(partition.weight),
                calculus.utils.rational(r),
            )
        ]

    return sample_callback
