import os
import sys

# compute both routes for every invariant during tests
os.environ.setdefault("COMALG_CHECK_ROUTES", "1")

from hypothesis import settings  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
