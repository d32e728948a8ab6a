import pytest
from hypothesis import strategies as st

from simplelift.ribbon import pants_base
from simplelift.words import TrivialWord, is_primitive, parse

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def P0():
    return pants_base()


def _primitive_or_none(text):
    try:
        w = parse(text)
    except TrivialWord:
        return None
    return w if is_primitive(w) else None


words = st.text(alphabet="aAbB", min_size=1, max_size=12).map(_primitive_or_none).filter(
    lambda w: w is not None)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
