import pytest

import corpus


@pytest.fixture(scope="session")
def good_corpus():
    return corpus.good_corpus(220)


@pytest.fixture(scope="session")
def mixed_corpus():
    return corpus.mprimary_corpus(150)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
