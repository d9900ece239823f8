import io

import pytest

from setu.lexicon import load_lexicon
from setu.proverbs import ProverbStore
from setu.tagger import load_pos_lexicon

# Worked example sentence and its word pairs, copied from the paper's
# translation tables (Telugu -> Marathi and back).
FIG5_TE = "సచిన్ టెండూల్కర్ కి భారత్ రత్న పురస్కారం తో సన్మానం చేశారు"
FIG5_MR = "सचिन तेंडुलकर ला भारत रत्न पुरस्कार नी सन्मानित केल्यागेले"
FIG5_PAIRS = list(zip(FIG5_TE.split(" "), FIG5_MR.split(" ")))

FIG3_TE = "నేను అన్నము తింటున్నాను"
FIG4_MR = "मी जेवन खातआहे"
FIG34_TAGS = ["PR", "NN", "ADV"]


def tsv(*rows):
    return io.StringIO("".join("\t".join(r) + "\n" for r in rows))


@pytest.fixture
def fig5_lexicon():
    return load_lexicon(tsv(*[(s, t, "X") for s, t in FIG5_PAIRS]), "te", "mr")


@pytest.fixture
def te_pos():
    return load_pos_lexicon(tsv(*zip(FIG3_TE.split(), FIG34_TAGS)), "te")


@pytest.fixture
def mr_pos():
    return load_pos_lexicon(tsv(*zip(FIG4_MR.split(), FIG34_TAGS)), "mr")


@pytest.fixture
def empty_store():
    return ProverbStore("te", "mr")


# -- acceptance reporting -------------------------------------------------

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is not None and (report.when == "call" or report.failed):
        number, title = mark.args
        _acceptance.append((number, title, "PASS" if report.passed else "FAIL", call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_acceptance):
        terminalreporter.write_line(f"[{status}] {number}. {title} ({duration:.2f}s)")
