def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid:
                tail = nodeid.split("test_criterion_")[1]
                num = int(tail.split("_")[0])
                verdict = "PASS" if status == "passed" else "FAIL"
                lines.append((num, f"criterion {num}: {verdict}  ({tail[len(str(num)) + 1:]})"))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
