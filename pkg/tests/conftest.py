import pytest

from alphapoly import FamilySpec, family_generate


def fam(kind, *params):
    return family_generate(FamilySpec(kind, tuple(params)))


@pytest.fixture(scope="session")
def petersen():
    return fam("petersen")
