import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def report(request, capsys):
    """Print one PASS/FAIL line for an acceptance criterion, even under capture."""

    def _report(label, ok, detail=""):
        with capsys.disabled():
            tail = f" ({detail})" if detail else ""
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}{tail}")
        assert ok, f"{label}{': ' + detail if detail else ''}"

    return _report
