import pytest

from enriques.enumeration import enumerate_diagrams


@pytest.fixture(scope="session")
def diagrams_upto():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_diagrams(n)
        return cache[n]

    return get


def euclid_multiplicities(a, b):
    """Multiplicity sequence of the branch x^a = y^b (a, b coprime) by the Euclidean algorithm.

    Each division step a = q*b + r contributes q copies of b; the tail ends
    with b = 1 repeated until the last quotient is used up.
    """
    if a < b:
        a, b = b, a
    out = []
    while b:
        q, r = divmod(a, b)
        out.extend([b] * q)
        a, b = b, r
    return tuple(out)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
