import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def groups():
    from wreath_hecke.groups import build_group
    return {name: build_group(name) for name in
            ("trivial", "cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3", "cyclic:6")}
