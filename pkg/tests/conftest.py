import pytest

from gradedalg.presets import preset_run


@pytest.fixture(scope="session")
def preset_report():
    """Session-wide cache so each (possibly expensive) preset runs once."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = preset_run(name)
        return cache[name]

    return get


def check_named(report, check_name):
    for c in report["checks"]:
        if c["check"] == check_name:
            return c
    raise AssertionError(f"{report['name']} has no check {check_name!r}; "
                         f"has {[c['check'] for c in report['checks']]}")
