import sys


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance scoreboard after the run, one line per criterion."""
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "_RESULTS", None):
        return
    write = terminalreporter.write_line
    write("")
    write("acceptance criteria")
    for number, name, claim in mod.CRITERIA:
        result = mod._RESULTS.get(name)
        if result is None:
            write(f"  {number:2d} [{name}] {claim}: NOT RUN")
            continue
        verdict = "PASS" if result.passed else "FAIL"
        write(f"  {number:2d} [{name}] {claim}: {verdict} ({result.checked} checks)")
