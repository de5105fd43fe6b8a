"""Echo acceptance PASS lines into the terminal summary.

Plain prints from test bodies are swallowed by capture; the acceptance
suite registers its lines in PASS_LINES and this hook replays them where
tee'd pytest output keeps them.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "PASS_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
