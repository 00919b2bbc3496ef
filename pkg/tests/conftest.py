"""Shared pytest wiring.

The acceptance tests register one verdict each through record(); the
terminal summary then prints a single pass/fail line per criterion so
the gate can be read off the bottom of any run.
"""

ACCEPTANCE = {}


def record(num, label, ok):
    ACCEPTANCE[num] = (label, bool(ok))
    return bool(ok)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        label, ok = ACCEPTANCE[num]
        terminalreporter.write_line(
            "criterion %02d %s: %s" % (num, "PASS" if ok else "FAIL", label))
