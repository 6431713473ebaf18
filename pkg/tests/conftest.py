import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "why": "", "seconds": 0.0})
    if call.when == "call":
        entry["seconds"] += call.stop - call.start
    if call.excinfo is not None and not call.excinfo.errisinstance(KeyboardInterrupt):
        entry["ok"] = False
        entry["why"] = str(call.excinfo.value).splitlines()[0][:160] if str(call.excinfo.value) else call.excinfo.typename


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["ok"] else "FAIL"
        line = f"criterion {number:2d} {status}  {e['title']}  ({e['seconds']:.1f}s)"
        if not e["ok"]:
            line += f"  -- {e['why']}"
        tr.write_line(line)
